#pragma once

#include "modp/root_datum.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace modp {

/// t_lambda * u, with lambda in coordinates of the coweight lattice X.
struct AffineWeylElement {
  IntVec translation;
  FiniteWeylElement finite;

  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;
  friend auto operator<=>(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (auto c = a.translation <=> b.translation; c != 0) return c;
    return a.finite <=> b.finite;
  }
};

struct AffineWeylElementHash {
  std::size_t operator()(const AffineWeylElement& w) const noexcept {
    IntVecHash h;
    return h(w.translation) * 31u + h(w.finite.matrix.data());
  }
};

/// An affine root x -> <vector, x> + constant, with `vector` a root index.
struct AffineRoot {
  int root = -1;
  Int constant = 0;
  bool positive(const RootDatum& rd) const {
    return constant > 0 || (constant == 0 && rd.roots()[static_cast<std::size_t>(root)].positive);
  }
};

/// Reduced decomposition w = s_{word[0]} ... s_{word[k-1]} * tau (Omega part on the right).
struct RightOmegaWord {
  std::vector<int> word;
  AffineWeylElement tau;
};

/// Reduced decomposition w = tau * s_{word[0]} ... s_{word[k-1]} (Omega part on the left).
struct LeftOmegaWord {
  AffineWeylElement tau;
  std::vector<int> word;
};

/// Subset J of affine simple indices together with the finite group W_J.
struct Facet {
  std::vector<int> indices;  // sorted, distinct
  std::vector<AffineWeylElement> elements;  // W_J, identity first
  AffineWeylElement longest;

  bool contains(int i) const;
  std::size_t size() const { return elements.size(); }
};

constexpr std::size_t kDefaultIntervalCap = 20000;

/// The extended affine Weyl group W = X x| W_0 of a root datum, with its
/// Coxeter structure relative to the base alcove 0 < <alpha, x> < 1.
///
/// Affine simple indices: 0 is the affine reflection of the first component,
/// 1..r are the finite simple reflections, and r+1, r+2, ... are the affine
/// reflections of the remaining components in order.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(RootDatum datum);

  AffineWeylGroup(const AffineWeylGroup&) = delete;
  AffineWeylGroup& operator=(const AffineWeylGroup&) = delete;

  const RootDatum& datum() const { return datum_; }
  int num_simple() const { return static_cast<int>(simple_.size()); }
  /// Component index owning affine simple index i.
  int component_of_index(int i) const;
  /// All affine simple indices belonging to component c.
  std::vector<int> component_indices(int c) const;

  AffineWeylElement identity() const;
  AffineWeylElement translation(const IntVec& lambda) const;
  AffineWeylElement from_finite(const FiniteWeylElement& u) const;
  const AffineWeylElement& simple_reflection(int i) const;
  const AffineRoot& simple_affine_root(int i) const { return simple_roots_[check_index(i)]; }

  AffineWeylElement multiply(const AffineWeylElement& a, const AffineWeylElement& b) const;
  AffineWeylElement inverse(const AffineWeylElement& w) const;
  /// Product s_{word[0]} * ... * s_{word[k-1]}.
  AffineWeylElement from_word(const std::vector<int>& word) const;
  /// w acting on an affine root: (w.a)(x) = a(w^{-1} x).
  AffineRoot apply(const AffineWeylElement& w, const AffineRoot& a) const;

  int length(const AffineWeylElement& w) const;
  bool is_left_descent(const AffineWeylElement& w, int i) const;
  bool is_right_descent(const AffineWeylElement& w, int i) const;

  /// Smallest-index left descent first; tau collects the length-zero part.
  RightOmegaWord reduced_word(const AffineWeylElement& w) const;
  /// Smallest-index right descent stripped first.
  LeftOmegaWord reduced_word_left(const AffineWeylElement& w) const;
  /// Length-zero part tau of w = w_af * tau.
  AffineWeylElement omega_part(const AffineWeylElement& w) const { return reduced_word(w).tau; }
  bool is_omega(const AffineWeylElement& w) const { return length(w) == 0; }
  /// j with tau s_i tau^{-1} = s_j.
  int omega_conjugate(const AffineWeylElement& tau, int i) const;
  /// All length-zero elements (requires a finite fundamental group).
  std::vector<AffineWeylElement> omega_elements() const;

  bool bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& w) const;
  /// Right-to-left greedy fold of the word in the 0-Hecke monoid.
  AffineWeylElement demazure_product(const std::vector<int>& word) const;
  /// Monoid product of two elements: the fold of the concatenated words, with
  /// the Omega parts carried along.
  AffineWeylElement demazure_product(const AffineWeylElement& a, const AffineWeylElement& b) const;

  Facet make_facet(std::vector<int> indices, std::size_t cap = 1000000) const;
  Facet iwahori() const { return make_facet({}); }
  Facet hyperspecial() const;
  bool is_special(const Facet& f) const;

  /// Minimal-length element of w W_f.
  AffineWeylElement min_coset_rep(const AffineWeylElement& w, const Facet& f) const;
  /// Minimal-length element of W_f w.
  AffineWeylElement min_left_coset_rep(const AffineWeylElement& w, const Facet& f) const;
  /// Canonical double-coset representative: the longest element among the
  /// minimal right-coset representatives (v w)^f, v in W_f.
  AffineWeylElement double_coset_rep(const AffineWeylElement& w, const Facet& f) const;
  /// Longest element of W_f w W_f.
  AffineWeylElement double_coset_max(const AffineWeylElement& w, const Facet& f) const;

  /// The Bruhat interval [e, w] intersected with the Omega-coset of w.
  std::vector<AffineWeylElement> lower_interval(const AffineWeylElement& w, std::size_t cap = kDefaultIntervalCap) const;
  /// Canonical double-coset representatives v <= w (w any element of its class).
  std::vector<AffineWeylElement> enumerate_lower_interval(const AffineWeylElement& w, const Facet& f,
                                                          std::size_t cap = kDefaultIntervalCap) const;
  /// Minimal right-coset representatives u in W^f below the class of w.
  std::vector<AffineWeylElement> cells_below(const AffineWeylElement& w, const Facet& f,
                                             std::size_t cap = kDefaultIntervalCap) const;
  /// All elements of length <= max_length (requires finite Omega).
  std::vector<AffineWeylElement> elements_up_to_length(int max_length, std::size_t cap = 1000000) const;
  /// All canonical double-coset representatives of length <= max_length.
  std::vector<AffineWeylElement> double_coset_reps_up_to_length(const Facet& f, int max_length,
                                                                std::size_t cap = 1000000) const;

 private:
  std::size_t check_index(int i) const;
  bool bruhat_leq_uncached(const AffineWeylElement& u, const AffineWeylElement& w) const;

  RootDatum datum_;
  std::vector<AffineWeylElement> simple_;
  std::vector<AffineRoot> simple_roots_;
  std::vector<int> index_component_;

  mutable std::mutex bruhat_mutex_;
  mutable std::map<std::pair<AffineWeylElement, AffineWeylElement>, bool> bruhat_cache_;
};

}  // namespace modp
