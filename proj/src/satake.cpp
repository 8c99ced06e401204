#include "modp/satake.hpp"

#include "modp/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace modp {

LeviDatum::LeviDatum(const RootDatum& datum, std::vector<int> indices, std::optional<IntVec> lambda)
    : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  const int r = datum.semisimple_rank();
  for (int i : indices_)
    if (i < 1 || i > r) throw InvalidInput("Levi index out of range (finite simple indices are 1-based)");

  if (lambda) {
    lambda_ = *lambda;
    if (static_cast<int>(lambda_.size()) != datum.lattice_rank()) throw InvalidInput("Levi cocharacter has wrong dimension");
  } else {
    std::vector<Rational> sum(static_cast<std::size_t>(datum.lattice_rank()), Rational(0));
    for (int i = 1; i <= r; ++i) {
      if (contains(i)) continue;
      const auto w = datum.fundamental_coweight(i - 1);
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += w[k];
    }
    Int denom = 1;
    for (const auto& x : sum) denom = std::lcm(denom, x.denominator());
    for (const auto& x : sum) lambda_.push_back((x * denom).numerator());
  }
  for (int i = 1; i <= r; ++i) {
    const Int d = datum.pair(datum.simple_root(i - 1), lambda_);
    if (contains(i) ? d != 0 : d <= 0) {
      std::ostringstream os;
      os << "Levi cocharacter has the wrong sign against simple root " << i;
      throw InvalidInput(os.str());
    }
  }
  for (std::size_t k = 0; k < datum.roots().size(); ++k) {
    const auto& c = datum.roots()[k].simple_coefficients;
    bool inside = true;
    for (int i = 1; i <= r; ++i)
      if (c[static_cast<std::size_t>(i - 1)] != 0 && !contains(i)) inside = false;
    if (inside) roots_.push_back(static_cast<int>(k));
  }
  for (int i : indices_) coroot_basis_.push_back(datum.simple_coroot(i - 1));
  if (!coroot_basis_.empty()) {
    IntMatrix m(static_cast<int>(coroot_basis_.size()), datum.lattice_rank());
    for (int a = 0; a < m.rows(); ++a)
      for (int b = 0; b < m.cols(); ++b) m(a, b) = coroot_basis_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    coroot_snf_ = smith_normal_form(m);
  }
}

bool LeviDatum::contains(int finite_index) const {
  return std::binary_search(indices_.begin(), indices_.end(), finite_index);
}

IntVec LeviDatum::translation_class(const IntVec& mu) const {
  if (!coroot_snf_) return mu;
  return quotient_class(*coroot_snf_, mu);
}

MonoidAlgebraElement monoid_multiply(const MonoidAlgebraElement& a, const MonoidAlgebraElement& b) {
  if (a.prime != b.prime) throw InvalidInput("monoid algebra elements over different primes");
  std::map<IntVec, Int> acc;
  for (const auto& [x, c] : a.terms)
    for (const auto& [y, d] : b.terms) acc[add(x, y)] += c * d;
  MonoidAlgebraElement out;
  out.prime = a.prime;
  for (const auto& [z, c] : acc)
    if (Int r = ((c % a.prime) + a.prime) % a.prime; r != 0) out.terms.emplace(z, r);
  return out;
}

MonoidAlgebraElement monoid_add(const MonoidAlgebraElement& a, const MonoidAlgebraElement& b) {
  if (a.prime != b.prime) throw InvalidInput("monoid algebra elements over different primes");
  MonoidAlgebraElement out = a;
  for (const auto& [z, c] : b.terms) {
    const Int r = (out.terms[z] + c) % a.prime;
    if (r == 0) out.terms.erase(z);
    else out.terms[z] = r;
  }
  return out;
}

SatakeContext::SatakeContext(const HeckeAlgebra& hecke, LeviDatum levi, AttractorConvention convention)
    : hecke_(&hecke), levi_(std::move(levi)), convention_(convention) {
  const RootDatum& rd = group().datum();
  const auto& J = levi_.indices();
  for (int i : J) levi_simple_.push_back(AffineRoot{rd.simple_root(i - 1), 0});

  // Connected components of J in the Dynkin diagram, each contributing the
  // affine root of its highest root.
  std::vector<int> comp(J.size(), -1);
  int ncomp = 0;
  for (std::size_t a = 0; a < J.size(); ++a) {
    if (comp[a] >= 0) continue;
    std::vector<std::size_t> stack{a};
    comp[a] = ncomp;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < J.size(); ++b)
        if (comp[b] < 0 && rd.cartan_matrix()(J[x] - 1, J[b] - 1) != 0) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }
  for (int c = 0; c < ncomp; ++c) {
    int best = -1;
    for (int k : levi_.roots()) {
      const Root& root = rd.roots()[static_cast<std::size_t>(k)];
      if (!root.positive) continue;
      bool inside = true;
      for (std::size_t a = 0; a < J.size(); ++a)
        if (comp[a] != c && root.simple_coefficients[static_cast<std::size_t>(J[a] - 1)] != 0) inside = false;
      if (inside && (best < 0 || root.height > rd.roots()[static_cast<std::size_t>(best)].height)) best = k;
    }
    levi_simple_.push_back(AffineRoot{rd.negative_of(best), 1});
  }

  for (const auto& v : facet().elements)
    if (in_levi_weyl_group(v)) levi_facet_.push_back(v);
}

AffineWeylElement SatakeContext::reflection(const AffineRoot& a) const {
  const RootDatum& rd = group().datum();
  const Root& beta = rd.roots()[static_cast<std::size_t>(a.root)];
  return AffineWeylElement{scale(beta.coroot, -a.constant), rd.reflection(a.root)};
}

bool SatakeContext::in_levi_affine_weyl_group(const AffineWeylElement& w) const {
  if (!in_levi_weyl_group(w)) return false;
  for (Int c : levi_.translation_class(w.translation))
    if (c != 0) return false;
  return true;
}

AffineWeylElement SatakeContext::levi_coset_min(const AffineWeylElement& w) const {
  const RootDatum& rd = group().datum();
  AffineWeylElement x = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& a : levi_simple_) {
      // x^{-1} applied to a is negative exactly when r_a x < x.
      const Int m = a.constant + rd.pair(a.root, x.translation);
      bool negative = m < 0;
      if (m == 0) negative = !rd.roots()[static_cast<std::size_t>(rd.apply_inverse_to_root(x.finite, a.root))].positive;
      if (negative) {
        x = group().multiply(reflection(a), x);
        moved = true;
        break;
      }
    }
  }
  return x;
}

AffineWeylElement SatakeContext::component_of(const AffineWeylElement& w) const {
  std::optional<std::pair<int, AffineWeylElement>> best;
  for (const auto& v : facet().elements) {
    AffineWeylElement m = levi_coset_min(group().multiply(w, v));
    std::pair<int, AffineWeylElement> key{group().length(m), std::move(m)};
    if (!best || key < *best) best = std::move(key);
  }
  return best->second;
}

Int SatakeContext::flow_sign(const AffineWeylElement& x, int s) const {
  const AffineRoot beta = group().apply(x, group().simple_affine_root(s));
  return group().datum().pair(beta.root, levi_.lambda());
}

bool SatakeContext::closed_step_applies(Int d) const {
  if (convention_ == AttractorConvention::Pinned) return d >= 0;
  return d <= 0;
}

AffineWeylElement SatakeContext::closed_attractor_along(const std::vector<int>& word, const AffineWeylElement& tau) const {
  AffineWeylElement x = group().identity();
  for (int s : word)
    if (closed_step_applies(flow_sign(x, s))) x = group().multiply(x, group().simple_reflection(s));
  return component_of(group().multiply(x, tau));
}

AffineWeylElement SatakeContext::closed_attractor_component(const AffineWeylElement& w) const {
  const RightOmegaWord rw = group().reduced_word(hecke().canonical(w));
  return closed_attractor_along(rw.word, rw.tau);
}

bool SatakeContext::has_levi_point(const AffineWeylElement& label) const {
  for (const auto& v : facet().elements)
    if (in_levi_weyl_group(group().multiply(label, v))) return true;
  return false;
}

AffineWeylElement SatakeContext::levi_double_coset_rep(const AffineWeylElement& y) const {
  std::optional<std::pair<int, AffineWeylElement>> best;
  for (const auto& a : levi_facet_)
    for (const auto& b : levi_facet_) {
      AffineWeylElement x = group().multiply(group().multiply(a, y), b);
      std::pair<int, AffineWeylElement> key{group().length(x), std::move(x)};
      if (!best || key < *best) best = std::move(key);
    }
  return best->second;
}

LeviHeckeElement SatakeContext::phi_c_w(const AffineWeylElement& label, const AffineWeylElement& w) const {
  if (!has_levi_point(label)) throw PreconditionError("component has no point on the Levi");
  LeviHeckeElement out;
  out.prime = hecke().prime();
  const AffineWeylElement top = group().double_coset_max(hecke().canonical(w), facet());
  for (const auto& y : group().lower_interval(top)) {
    if (!in_levi_weyl_group(y)) continue;
    if (component_of(y) != label) continue;
    out.terms[levi_double_coset_rep(y)] = 1;
  }
  return out;
}

LeviHeckeElement SatakeContext::satake_phi(const AffineWeylElement& w) const {
  const AffineWeylElement c = closed_attractor_component(w);
  if (!has_levi_point(c)) {
    LeviHeckeElement zero;
    zero.prime = hecke().prime();
    return zero;
  }
  return phi_c_w(c, w);
}

LeviHeckeElement SatakeContext::satake(const HeckeElement& a) const {
  const HeckeElement pa = hecke().to_basis(a, HeckeBasis::Phi);
  std::map<AffineWeylElement, Int> acc;
  for (const auto& [w, c] : pa.terms)
    for (const auto& [y, d] : satake_phi(w).terms) acc[y] += c * d;
  LeviHeckeElement out;
  out.prime = hecke().prime();
  for (const auto& [y, c] : acc)
    if (Int r = hecke().reduce(c); r != 0) out.terms.emplace(y, r);
  return out;
}

MonoidAlgebraElement SatakeContext::to_monoid(const LeviHeckeElement& a) const {
  if (!levi_.is_minimal()) throw PreconditionError("monoid algebra form needs the minimal Levi");
  MonoidAlgebraElement out;
  out.prime = a.prime;
  const FiniteWeylElement e = group().datum().finite_identity();
  for (const auto& [y, c] : a.terms) {
    if (y.finite != e) throw std::logic_error("minimal-Levi term is not a translation");
    out.terms.emplace(y.translation, c);
  }
  return out;
}

IntVec SatakeContext::antidominant_translation(const AffineWeylElement& w) const {
  if (!group().is_special(facet())) throw PreconditionError("facet is not special");
  const RootDatum& rd = group().datum();
  const FiniteWeylElement e = rd.finite_identity();
  for (const auto& a : facet().elements)
    for (const auto& b : facet().elements) {
      const AffineWeylElement x = group().multiply(group().multiply(a, w), b);
      if (x.finite == e && rd.is_antidominant(x.translation)) return x.translation;
    }
  throw std::logic_error("special double coset without an anti-dominant translation");
}

MonoidAlgebraElement SatakeContext::special_satake_phi(const AffineWeylElement& w) const {
  if (!levi_.is_minimal()) throw PreconditionError("special Satake fast path needs the minimal Levi");
  MonoidAlgebraElement out;
  out.prime = hecke().prime();
  out.terms.emplace(antidominant_translation(w), 1);
  return out;
}

std::vector<AntidominantEntry> enumerate_antidominant(const AffineWeylGroup& g, int max_length) {
  const RootDatum& rd = g.datum();
  if (rd.central_rank() != 0) throw PreconditionError("anti-dominant enumeration needs a semisimple datum");
  const int r = rd.semisimple_rank();
  std::vector<std::vector<Rational>> omega;
  for (int i = 0; i < r; ++i) omega.push_back(rd.fundamental_coweight(i));
  std::vector<AntidominantEntry> out;
  std::vector<Int> c(static_cast<std::size_t>(r), 0);
  for (;;) {
    std::vector<Rational> z(static_cast<std::size_t>(rd.lattice_rank()), Rational(0));
    for (int i = 0; i < r; ++i)
      for (std::size_t k = 0; k < z.size(); ++k) z[k] += omega[static_cast<std::size_t>(i)][k] * c[static_cast<std::size_t>(i)];
    bool integral = true;
    IntVec zi;
    for (const auto& x : z) {
      if (x.denominator() != 1) integral = false;
      zi.push_back(x.numerator());
    }
    if (integral) {
      const int l = g.length(g.translation(zi));
      if (l <= max_length) out.push_back({zi, l});
    }
    int k = 0;
    for (; k < r; ++k) {
      if (--c[static_cast<std::size_t>(k)] >= -max_length) break;
      c[static_cast<std::size_t>(k)] = 0;
    }
    if (k == r) break;
  }
  std::sort(out.begin(), out.end(), [](const AntidominantEntry& a, const AntidominantEntry& b) {
    return std::tie(a.length, a.z) < std::tie(b.length, b.z);
  });
  return out;
}

}  // namespace modp
