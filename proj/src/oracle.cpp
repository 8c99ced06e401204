#include "modp/oracle.hpp"

#include "modp/errors.hpp"
#include "modp/satake.hpp"

#include <algorithm>
#include <functional>

namespace modp::oracle {

namespace {

Int floor_of(const Rational& x) {
  Int n = x.numerator();
  const Int d = x.denominator();
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Rational pair_rational(const IntVec& dual, const std::vector<Rational>& v) {
  Rational s(0);
  for (std::size_t k = 0; k < dual.size(); ++k) s += v[k] * dual[k];
  return s;
}

void add_term(std::map<AffineWeylElement, Polynomial>& m, const AffineWeylElement& w, const Polynomial& p) {
  Polynomial sum = m[w] + p;
  if (sum.is_zero()) m.erase(w);
  else m[w] = std::move(sum);
}

}  // namespace

Oracle::Oracle(const AffineWeylGroup& group) : group_(&group) {
  const RootDatum& rd = group.datum();
  generic_point_.assign(static_cast<std::size_t>(rd.lattice_rank()), Rational(0));
  for (int i = 0; i < rd.semisimple_rank(); ++i) {
    const int c = rd.component_of_simple(i);
    const Rational eps(1, rd.roots()[static_cast<std::size_t>(rd.highest_root(c))].height + 1);
    const auto w = rd.fundamental_coweight(i);
    for (std::size_t k = 0; k < w.size(); ++k) generic_point_[k] += w[k] * eps;
  }
}

int Oracle::brute_length(const AffineWeylElement& w) const {
  if (auto it = length_memo_.find(w); it != length_memo_.end()) return it->second;
  const RootDatum& rd = group_->datum();
  const int n = rd.lattice_rank();
  std::vector<Rational> image(static_cast<std::size_t>(n), Rational(0));
  for (int a = 0; a < n; ++a) {
    image[static_cast<std::size_t>(a)] = w.translation[static_cast<std::size_t>(a)];
    for (int b = 0; b < n; ++b) image[static_cast<std::size_t>(a)] += generic_point_[static_cast<std::size_t>(b)] * w.finite.matrix(a, b);
  }
  Int walls = 0;
  for (int k : rd.positive_roots()) {
    const IntVec& dual = rd.roots()[static_cast<std::size_t>(k)].dual;
    const Int d = floor_of(pair_rational(dual, image)) - floor_of(pair_rational(dual, generic_point_));
    walls += d < 0 ? -d : d;
  }
  const int result = static_cast<int>(walls);
  length_memo_.emplace(w, result);
  return result;
}

std::pair<std::vector<int>, AffineWeylElement> Oracle::brute_reduced_word(const AffineWeylElement& w) const {
  std::vector<int> word;
  AffineWeylElement x = w;
  int l = brute_length(x);
  while (l > 0) {
    bool found = false;
    for (int i = 0; i < group_->num_simple() && !found; ++i) {
      AffineWeylElement y = group_->multiply(group_->simple_reflection(i), x);
      const int ly = brute_length(y);
      if (ly < l) {
        word.push_back(i);
        x = std::move(y);
        l = ly;
        found = true;
      }
    }
    if (!found) throw std::logic_error("brute_reduced_word: no descent");
  }
  return {word, x};
}

std::set<AffineWeylElement> Oracle::subword_products(const AffineWeylElement& w, int max_length) const {
  const auto [word, tau] = brute_reduced_word(w);
  if (static_cast<int>(word.size()) > max_length) throw CapExceeded("subword enumeration above oracle cap");
  std::set<AffineWeylElement> products{group_->identity()};
  for (int s : word) {
    std::set<AffineWeylElement> next = products;
    for (const auto& x : products) next.insert(group_->multiply(x, group_->simple_reflection(s)));
    products = std::move(next);
  }
  std::set<AffineWeylElement> out;
  for (const auto& x : products) out.insert(group_->multiply(x, tau));
  return out;
}

bool Oracle::brute_bruhat(const AffineWeylElement& u, const AffineWeylElement& w, int max_length) const {
  return subword_products(w, max_length).count(u) > 0;
}

std::vector<std::vector<int>> Oracle::all_reduced_words(const AffineWeylElement& w) const {
  const int l = brute_length(w);
  if (l == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 0; i < group_->num_simple(); ++i) {
    const AffineWeylElement y = group_->multiply(group_->simple_reflection(i), w);
    if (brute_length(y) >= l) continue;
    for (auto& tail : all_reduced_words(y)) {
      tail.insert(tail.begin(), i);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

GenericHeckeElement Oracle::T(const AffineWeylElement& w) const {
  GenericHeckeElement e;
  e.terms.emplace(w, Polynomial::constant(1));
  return e;
}

GenericHeckeElement Oracle::multiply_by_simple(const GenericHeckeElement& a, int s) const {
  static const Polynomial q = Polynomial::monomial(1);
  static const Polynomial q_minus_one({-1, 1});
  GenericHeckeElement out;
  for (const auto& [w, p] : a.terms) {
    const AffineWeylElement ws = group_->multiply(w, group_->simple_reflection(s));
    if (brute_length(ws) > brute_length(w)) {
      add_term(out.terms, ws, p);
    } else {
      add_term(out.terms, w, q_minus_one * p);
      add_term(out.terms, ws, q * p);
    }
  }
  return out;
}

GenericHeckeElement Oracle::generic_multiply(const GenericHeckeElement& a, const GenericHeckeElement& b) const {
  GenericHeckeElement out;
  for (const auto& [y, coeff] : b.terms) {
    const auto [word, tau] = brute_reduced_word(y);
    GenericHeckeElement tmp = a;
    for (int s : word) tmp = multiply_by_simple(tmp, s);
    for (const auto& [w, p] : tmp.terms) add_term(out.terms, group_->multiply(w, tau), p * coeff);
  }
  return out;
}

GenericHeckeElement Oracle::specialize(const GenericHeckeElement& a, Int q) const {
  GenericHeckeElement out;
  for (const auto& [w, p] : a.terms) add_term(out.terms, w, Polynomial::constant(p.evaluate(q)));
  return out;
}

GenericHeckeElement Oracle::phi_as_T(const AffineWeylElement& w) const {
  GenericHeckeElement out;
  for (const auto& v : subword_products(w)) out.terms.emplace(v, Polynomial::constant(1));
  return out;
}

HeckeElement Oracle::specialize_q0_mod_p(const GenericHeckeElement& a, Int p) const {
  HeckeElement out;
  out.prime = p;
  out.basis = HeckeBasis::Indicator;
  for (const auto& [w, poly] : a.terms) {
    const Int r = ((poly.evaluate(0) % p) + p) % p;
    if (r != 0) out.terms.emplace(w, r);
  }
  return out;
}

HeckeElement Oracle::indicator_to_phi(const HeckeElement& a) const {
  const Int p = a.prime;
  HeckeElement out;
  out.prime = p;
  out.basis = HeckeBasis::Phi;
  std::map<std::pair<int, AffineWeylElement>, Int> rest;
  for (const auto& [w, c] : a.terms) rest[{brute_length(w), w}] = c;
  while (!rest.empty()) {
    auto top = std::prev(rest.end());
    const AffineWeylElement w = top->first.second;
    const Int c = top->second;
    out.terms.emplace(w, c);
    for (const auto& v : subword_products(w)) {
      auto key = std::make_pair(brute_length(v), v);
      const Int r = (((rest[key] - c) % p) + p) % p;
      if (r == 0) rest.erase(key);
      else rest[key] = r;
    }
  }
  return out;
}

HeckeElement Oracle::convolve_phi(const AffineWeylElement& w1, const AffineWeylElement& w2, Int p) const {
  return indicator_to_phi(specialize_q0_mod_p(generic_multiply(phi_as_T(w1), phi_as_T(w2)), p));
}

std::set<AffineWeylElement> Oracle::double_coset(const AffineWeylElement& w, const Facet& f) const {
  std::set<AffineWeylElement> out;
  for (const auto& a : f.elements)
    for (const auto& b : f.elements) out.insert(group_->multiply(group_->multiply(a, w), b));
  return out;
}

std::pair<IntVec, std::vector<int>> levi_coset_invariant(const SatakeContext& ctx, const AffineWeylElement& w) {
  const RootDatum& rd = ctx.group().datum();
  std::vector<FiniteWeylElement> levi_group{rd.finite_identity()};
  std::set<FiniteWeylElement> seen{rd.finite_identity()};
  for (std::size_t k = 0; k < levi_group.size(); ++k)
    for (int i : ctx.levi().indices()) {
      FiniteWeylElement y = rd.multiply(rd.finite_simple_reflection(i - 1), levi_group[k]);
      if (seen.insert(y).second) levi_group.push_back(std::move(y));
    }
  std::optional<std::pair<int, std::vector<int>>> best;
  for (const auto& m : levi_group) {
    const FiniteWeylElement x = rd.multiply(m, w.finite);
    std::pair<int, std::vector<int>> key{rd.length(x), rd.reduced_word(x)};
    if (!best || key < *best) best = std::move(key);
  }
  return {ctx.levi().translation_class(w.translation), best->second};
}

std::set<std::pair<IntVec, std::vector<int>>> levi_double_coset_invariant(const SatakeContext& ctx,
                                                                           const AffineWeylElement& w) {
  std::set<std::pair<IntVec, std::vector<int>>> out;
  for (const auto& v : ctx.facet().elements) out.insert(levi_coset_invariant(ctx, ctx.group().multiply(w, v)));
  return out;
}

std::set<AffineWeylElement> enumerate_closed_chains(const SatakeContext& ctx, const AffineWeylElement& w,
                                                    const std::vector<int>& word, const AffineWeylElement& tau,
                                                    int max_length) {
  (void)w;
  if (static_cast<int>(word.size()) > max_length) throw CapExceeded("closed-chain enumeration above cap");
  const AffineWeylGroup& g = ctx.group();
  const RootDatum& rd = g.datum();
  const IntVec& lambda = ctx.levi().lambda();
  const bool pinned = ctx.convention() == AttractorConvention::Pinned;
  std::set<AffineWeylElement> labels;
  std::function<void(std::size_t, const AffineWeylElement&)> walk = [&](std::size_t k, const AffineWeylElement& x) {
    if (k == word.size()) {
      labels.insert(ctx.component_of(g.multiply(x, tau)));
      return;
    }
    // Linear part of the affine function a_s(x^{-1} .) evaluated on lambda.
    const AffineRoot& a = g.simple_affine_root(word[k]);
    const AffineWeylElement xi = g.inverse(x);
    const IntVec moved = sub(g.multiply(xi, g.translation(lambda)).translation, xi.translation);
    const Int d = dot(rd.roots()[static_cast<std::size_t>(a.root)].dual, moved);
    const bool may_apply = pinned ? d >= 0 : d <= 0;
    const bool may_keep = pinned ? d <= 0 : d >= 0;
    if (may_keep) walk(k + 1, x);
    if (may_apply) walk(k + 1, g.multiply(x, g.simple_reflection(word[k])));
  };
  walk(0, g.identity());
  return labels;
}

std::vector<CheckResult> run_suite(const std::vector<std::string>& datums, int max_length) {
  std::vector<CheckResult> out;
  for (const auto& name : datums) {
    AffineWeylGroup g(RootDatum(parse_cartan_datum(name)));
    Oracle o(g);
    const auto elements = g.elements_up_to_length(max_length);

    CheckResult len{"length vs alcove walls", name};
    for (const auto& w : elements) {
      ++len.cases;
      if (g.length(w) != o.brute_length(w)) ++len.failures;
    }
    out.push_back(len);

    CheckResult bru{"bruhat vs subwords", name};
    for (const auto& w : elements) {
      const auto below = o.subword_products(w);
      for (const auto& u : elements) {
        if (g.length(u) > g.length(w)) continue;
        ++bru.cases;
        if (g.bruhat_leq(u, w) != (below.count(u) > 0)) ++bru.failures;
      }
    }
    out.push_back(bru);

    const int conv_len = std::min(max_length, 3);
    for (Int p : {Int{2}, Int{3}}) {
      HeckeAlgebra h(g, g.iwahori(), p);
      CheckResult conv{"convolution vs generic q=0, p=" + std::to_string(p), name};
      for (const auto& w1 : elements) {
        if (g.length(w1) > conv_len) continue;
        for (const auto& w2 : elements) {
          if (g.length(w2) > conv_len) continue;
          ++conv.cases;
          const HeckeElement expect = o.convolve_phi(w1, w2, p);
          if (h.convolve(h.phi(w1), h.phi(w2)).terms != expect.terms) ++conv.failures;
        }
      }
      out.push_back(conv);
    }

    HeckeAlgebra h(g, g.iwahori(), 2);
    SatakeContext ctx(h, LeviDatum(g.datum(), {}));
    CheckResult chains{"closed chains unique (minimal Levi)", name};
    for (const auto& w : elements) {
      ++chains.cases;
      const RightOmegaWord rw = g.reduced_word(w);
      const auto labels = enumerate_closed_chains(ctx, w, rw.word, rw.tau);
      if (labels.size() != 1 || *labels.begin() != ctx.closed_attractor_component(w)) ++chains.failures;
    }
    out.push_back(chains);
  }
  return out;
}

}  // namespace modp::oracle
