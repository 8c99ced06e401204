#pragma once

#include "modp/affine_weyl.hpp"
#include "modp/hecke.hpp"
#include "modp/polynomial.hpp"

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace modp {
class SatakeContext;
}

namespace modp::oracle {

/// Element of the generic Iwahori-Hecke algebra over Z[q] in the T basis.
struct GenericHeckeElement {
  std::map<AffineWeylElement, Polynomial> terms;
  friend bool operator==(const GenericHeckeElement&, const GenericHeckeElement&) = default;
};

/// Slow reference implementations. Nothing here calls the length, descent,
/// Bruhat or Demazure code of AffineWeylGroup; only the group law, the
/// simple reflections and the root data are shared.
class Oracle {
 public:
  explicit Oracle(const AffineWeylGroup& group);

  const AffineWeylGroup& group() const { return *group_; }

  /// Walls H_{alpha,k} separating the base alcove from its image, counted
  /// with exact rational arithmetic at a generic interior point.
  int brute_length(const AffineWeylElement& w) const;
  /// Word built from brute_length descents, plus the length-zero remainder.
  std::pair<std::vector<int>, AffineWeylElement> brute_reduced_word(const AffineWeylElement& w) const;
  /// Products of all subwords of a fixed reduced word of w (times its Omega part).
  std::set<AffineWeylElement> subword_products(const AffineWeylElement& w, int max_length = 14) const;
  bool brute_bruhat(const AffineWeylElement& u, const AffineWeylElement& w, int max_length = 14) const;

  /// All reduced words of w (by brute descent search).
  std::vector<std::vector<int>> all_reduced_words(const AffineWeylElement& w) const;

  GenericHeckeElement T(const AffineWeylElement& w) const;
  GenericHeckeElement multiply_by_simple(const GenericHeckeElement& a, int s) const;
  GenericHeckeElement generic_multiply(const GenericHeckeElement& a, const GenericHeckeElement& b) const;
  /// Evaluates every coefficient at the given value of q.
  GenericHeckeElement specialize(const GenericHeckeElement& a, Int q) const;
  /// Sum of T_v over v <= w.
  GenericHeckeElement phi_as_T(const AffineWeylElement& w) const;

  /// q = 0 and reduction mod p: an Iwahori-level element in the indicator basis.
  HeckeElement specialize_q0_mod_p(const GenericHeckeElement& a, Int p) const;
  /// Rewrites an Iwahori indicator-basis element in the phi basis using subword intervals.
  HeckeElement indicator_to_phi(const HeckeElement& a) const;
  /// phi_{w1} * phi_{w2} at Iwahori level through the generic algebra.
  HeckeElement convolve_phi(const AffineWeylElement& w1, const AffineWeylElement& w2, Int p) const;

  /// The full double coset W_f w W_f.
  std::set<AffineWeylElement> double_coset(const AffineWeylElement& w, const Facet& f) const;

 private:
  const AffineWeylGroup* group_;
  std::vector<Rational> generic_point_;
  mutable std::unordered_map<AffineWeylElement, int, AffineWeylElementHash> length_memo_;
};

/// Complete invariant of the left W_{M,af}-coset of w: the class of the
/// translation part modulo the coroot lattice of M, and the minimal element
/// of the W_0(M)-coset of the finite part (as a reduced word).
std::pair<IntVec, std::vector<int>> levi_coset_invariant(const SatakeContext& ctx, const AffineWeylElement& w);
/// Sorted set of levi_coset_invariant over w W_f; equal sets iff equal
/// W_{M,af} \ W / W_f classes.
std::set<std::pair<IntVec, std::vector<int>>> levi_double_coset_invariant(const SatakeContext& ctx,
                                                                           const AffineWeylElement& w);

/// Labels of all fixed-point chains through a reduced word of w that make a
/// closed choice at every step. The d-values are computed by evaluating the
/// affine functions at rational points instead of through the root action.
std::set<AffineWeylElement> enumerate_closed_chains(const SatakeContext& ctx, const AffineWeylElement& w,
                                                    const std::vector<int>& word, const AffineWeylElement& tau,
                                                    int max_length = 16);

struct CheckResult {
  std::string name;
  std::string datum;
  long long cases = 0;
  long long failures = 0;
  bool passed() const { return failures == 0; }
};

/// The cross-validation matrix behind `oracle check`.
std::vector<CheckResult> run_suite(const std::vector<std::string>& datums, int max_length);

}  // namespace modp::oracle
