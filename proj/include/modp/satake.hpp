#pragma once

#include "modp/affine_weyl.hpp"
#include "modp/hecke.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modp {

/// Standard Levi M given by finite simple indices J_M (1-based), with a
/// cocharacter lambda such that <alpha_i, lambda> = 0 on J_M and > 0 off it.
class LeviDatum {
 public:
  /// Without lambda, the sum of the fundamental coweights off J_M is used,
  /// scaled to the smallest integral multiple in X.
  LeviDatum(const RootDatum& datum, std::vector<int> indices, std::optional<IntVec> lambda = std::nullopt);

  const std::vector<int>& indices() const { return indices_; }
  const IntVec& lambda() const { return lambda_; }
  bool is_minimal() const { return indices_.empty(); }
  bool contains(int finite_index) const;
  /// u in W_0(M), i.e. u fixes lambda.
  bool in_weyl_group(const FiniteWeylElement& u) const { return u.matrix.apply(lambda_) == lambda_; }
  /// Roots of M (indices into RootDatum::roots()).
  const std::vector<int>& roots() const { return roots_; }
  /// Coroot lattice of M as rows, in X coordinates.
  const std::vector<IntVec>& coroot_basis() const { return coroot_basis_; }
  /// Class of a coweight in X / Q^vee_M (all zeros iff it lies in Q^vee_M).
  IntVec translation_class(const IntVec& mu) const;

 private:
  std::vector<int> indices_;
  IntVec lambda_;
  std::vector<int> roots_;
  std::vector<IntVec> coroot_basis_;
  std::optional<SmithForm> coroot_snf_;
};

/// Element of F_p[Lambda], Lambda = X.
struct MonoidAlgebraElement {
  Int prime = 2;
  std::map<IntVec, Int> terms;
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const MonoidAlgebraElement&, const MonoidAlgebraElement&) = default;
};

MonoidAlgebraElement monoid_multiply(const MonoidAlgebraElement& a, const MonoidAlgebraElement& b);
MonoidAlgebraElement monoid_add(const MonoidAlgebraElement& a, const MonoidAlgebraElement& b);

/// Indicator-basis element of the Hecke algebra of M at the induced level;
/// keys are canonical representatives of W_{M,f} \ W_M / W_{M,f}.
struct LeviHeckeElement {
  Int prime = 2;
  std::map<AffineWeylElement, Int> terms;
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const LeviHeckeElement&, const LeviHeckeElement&) = default;
};

/// Which endpoint of each P^1-step the closed attractor follows. `Pinned`
/// is the convention under which anti-dominant translations at a special
/// facet are their own closed attractors; `Opposite` is kept for testing.
enum class AttractorConvention { Pinned, Opposite };

class SatakeContext {
 public:
  SatakeContext(const HeckeAlgebra& hecke, LeviDatum levi, AttractorConvention convention = AttractorConvention::Pinned);

  const AffineWeylGroup& group() const { return hecke_->group(); }
  const HeckeAlgebra& hecke() const { return *hecke_; }
  const Facet& facet() const { return hecke_->facet(); }
  const LeviDatum& levi() const { return levi_; }
  AttractorConvention convention() const { return convention_; }

  /// Canonical simple affine roots of W_{M,af}.
  const std::vector<AffineRoot>& levi_affine_simple_roots() const { return levi_simple_; }
  /// Reflection in an affine root.
  AffineWeylElement reflection(const AffineRoot& a) const;
  bool in_levi_weyl_group(const AffineWeylElement& w) const { return levi_.in_weyl_group(w.finite); }
  bool in_levi_affine_weyl_group(const AffineWeylElement& w) const;

  /// Minimal element of W_{M,af} w.
  AffineWeylElement levi_coset_min(const AffineWeylElement& w) const;
  /// Canonical label of W_{M,af} w W_f: smallest (length, element) among
  /// the minima of the left cosets W_{M,af} w v, v in W_f.
  AffineWeylElement component_of(const AffineWeylElement& w) const;

  /// Sign d of the flow on the step through simple reflection s at x.
  Int flow_sign(const AffineWeylElement& x, int s) const;
  /// Whether a step with sign d may (or must) apply the reflection.
  bool closed_step_applies(Int d) const;

  AffineWeylElement closed_attractor_component(const AffineWeylElement& w) const;
  /// Same, following a caller-chosen reduced word of the canonical class
  /// (w = s_word * tau).
  AffineWeylElement closed_attractor_along(const std::vector<int>& word, const AffineWeylElement& tau) const;

  bool has_levi_point(const AffineWeylElement& label) const;
  /// W_M intersected with W_f.
  const std::vector<AffineWeylElement>& levi_facet() const { return levi_facet_; }
  /// Canonical representative of W_{M,f} y W_{M,f}.
  AffineWeylElement levi_double_coset_rep(const AffineWeylElement& y) const;

  LeviHeckeElement phi_c_w(const AffineWeylElement& label, const AffineWeylElement& w) const;
  LeviHeckeElement satake_phi(const AffineWeylElement& w) const;
  LeviHeckeElement satake(const HeckeElement& a) const;

  /// For a minimal Levi: t_mu -> e^mu.
  MonoidAlgebraElement to_monoid(const LeviHeckeElement& a) const;

  /// Special facet: the anti-dominant z with W_f w W_f = W_f t_z W_f.
  IntVec antidominant_translation(const AffineWeylElement& w) const;
  /// Special facet, minimal Levi: e^z directly.
  MonoidAlgebraElement special_satake_phi(const AffineWeylElement& w) const;

 private:
  const HeckeAlgebra* hecke_;
  LeviDatum levi_;
  AttractorConvention convention_;
  std::vector<AffineRoot> levi_simple_;
  std::vector<AffineWeylElement> levi_facet_;
};

struct AntidominantEntry {
  IntVec z;
  int length = 0;
};

/// Anti-dominant z in X with l(t_z) <= max_length, sorted by (length, z).
std::vector<AntidominantEntry> enumerate_antidominant(const AffineWeylGroup& g, int max_length);

}  // namespace modp
