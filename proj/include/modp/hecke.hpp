#pragma once

#include "modp/affine_weyl.hpp"
#include "modp/polynomial.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modp {

enum class HeckeBasis { Indicator, Phi };

std::string to_string(HeckeBasis b);
HeckeBasis parse_basis(const std::string& text);

/// Sparse F_p-combination of double-coset representatives.
struct HeckeElement {
  std::vector<int> facet;
  Int prime = 2;
  HeckeBasis basis = HeckeBasis::Phi;
  std::map<AffineWeylElement, Int> terms;  // residues in [1, prime)

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;
};

struct ConvolutionWitness {
  AffineWeylElement w1;
  AffineWeylElement w2;
  AffineWeylElement tau1;   // w1 = tau1 * s_{word1...}
  std::vector<int> word1;
  std::vector<int> word2;   // w2 = s_{word2...} * tau2
  AffineWeylElement tau2;
  AffineWeylElement demazure;  // tau1 * dem(word1 ++ word2) * tau2
  AffineWeylElement result;    // its double-coset representative
};

/// Pluggable storage for lower intervals, keyed by an opaque string.
class IntervalStore {
 public:
  virtual ~IntervalStore() = default;
  virtual std::optional<std::vector<AffineWeylElement>> load(const std::string& key) = 0;
  virtual void store(const std::string& key, const std::vector<AffineWeylElement>& value) = 0;
};

bool is_prime(Int p);

/// The mod p Hecke algebra of the parahoric attached to a facet.
class HeckeAlgebra {
 public:
  HeckeAlgebra(const AffineWeylGroup& group, Facet facet, Int prime, std::size_t interval_cap = kDefaultIntervalCap);

  const AffineWeylGroup& group() const { return *group_; }
  const Facet& facet() const { return facet_; }
  Int prime() const { return prime_; }
  void set_store(IntervalStore* store) { store_ = store; }

  AffineWeylElement canonical(const AffineWeylElement& w) const { return group_->double_coset_rep(w, facet_); }
  /// Key under which the lower interval of a canonical class is cached.
  std::string interval_key(const AffineWeylElement& rep) const;

  HeckeElement zero(HeckeBasis basis = HeckeBasis::Phi) const;
  HeckeElement unit() const { return phi(group_->identity()); }
  HeckeElement phi(const AffineWeylElement& w) const;
  HeckeElement indicator(const AffineWeylElement& w) const;

  HeckeElement add(const HeckeElement& a, const HeckeElement& b) const;
  HeckeElement scale(const HeckeElement& a, Int c) const;
  HeckeElement to_basis(const HeckeElement& a, HeckeBasis basis) const;

  /// Canonical classes v <= w, sorted by length.
  std::vector<AffineWeylElement> interval(const AffineWeylElement& w) const;

  std::pair<AffineWeylElement, ConvolutionWitness> convolve_phi_classes(const AffineWeylElement& w1,
                                                                        const AffineWeylElement& w2) const;
  /// Bilinear extension in the phi basis. The result is expressed in the
  /// basis of the first operand.
  HeckeElement convolve(const HeckeElement& a, const HeckeElement& b) const;

  /// Sum of q^{l(u)} over Iwahori cells u in W^f of the Schubert variety of w.
  Polynomial point_count(const AffineWeylElement& w) const;

  /// Recomputes the class recorded in a witness from its words alone.
  AffineWeylElement replay(const ConvolutionWitness& witness) const;

  Int reduce(Int c) const;

 private:
  void check_compatible(const HeckeElement& a) const;

  const AffineWeylGroup* group_;
  Facet facet_;
  Int prime_;
  std::size_t cap_;
  IntervalStore* store_ = nullptr;
  mutable std::mutex mutex_;
  mutable std::map<AffineWeylElement, std::vector<AffineWeylElement>> intervals_;
};

}  // namespace modp
