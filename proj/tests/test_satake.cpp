#include "doctest.h"

#include "modp/errors.hpp"
#include "modp/format.hpp"
#include "modp/oracle.hpp"
#include "modp/satake.hpp"

#include <random>

using namespace modp;

namespace {

struct Setup {
  Setup(const std::string& datum, std::vector<int> facet, std::vector<int> levi, Int p = 2,
        AttractorConvention conv = AttractorConvention::Pinned)
      : g(RootDatum(parse_cartan_datum(datum))),
        h(g, g.make_facet(std::move(facet)), p),
        ctx(h, LeviDatum(g.datum(), std::move(levi)), conv) {}
  AffineWeylElement el(const std::string& text) const { return parse_element(g, text); }
  AffineWeylGroup g;
  HeckeAlgebra h;
  SatakeContext ctx;
};

MonoidAlgebraElement single(Int p, const IntVec& z) {
  MonoidAlgebraElement m;
  m.prime = p;
  m.terms.emplace(z, 1);
  return m;
}

std::vector<std::vector<int>> proper_levis(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << rank) - 1; ++mask) {
    std::vector<int> J;
    for (int i = 0; i < rank; ++i)
      if (mask & (1 << i)) J.push_back(i + 1);
    out.push_back(J);
  }
  return out;
}

}  // namespace

TEST_CASE("Levi data") {
  AffineWeylGroup a2(RootDatum(parse_cartan_datum("A2")));
  const LeviDatum t(a2.datum(), {});
  CHECK(t.is_minimal());
  CHECK(t.roots().empty());
  const LeviDatum m(a2.datum(), {1});
  CHECK(m.roots().size() == 2);
  CHECK(a2.datum().pair(a2.datum().simple_root(0), m.lambda()) == 0);
  CHECK(a2.datum().pair(a2.datum().simple_root(1), m.lambda()) > 0);
  CHECK(m.in_weyl_group(a2.datum().finite_simple_reflection(0)));
  CHECK_FALSE(m.in_weyl_group(a2.datum().finite_simple_reflection(1)));
  CHECK_THROWS_AS(LeviDatum(a2.datum(), {0}), InvalidInput);
  CHECK_THROWS_AS(LeviDatum(a2.datum(), {3}), InvalidInput);
  CHECK_THROWS_AS(LeviDatum(a2.datum(), {1}, IntVec{1, 1}), InvalidInput);
  CHECK_THROWS_AS(LeviDatum(a2.datum(), {}, IntVec{1}), InvalidInput);
  const LeviDatum g(a2.datum(), {1, 2});
  CHECK(g.roots().size() == 6);
}

TEST_CASE("monoid algebra") {
  const auto a = monoid_add(single(3, {1}), single(3, {2}));
  const auto sq = monoid_multiply(a, a);
  CHECK(sq.terms == std::map<IntVec, Int>{{{2}, 1}, {{3}, 2}, {{4}, 1}});
  CHECK(monoid_add(a, monoid_add(a, a)).is_zero());
  CHECK_THROWS_AS(monoid_multiply(single(2, {0}), single(3, {0})), InvalidInput);
}

TEST_CASE("component labels in A1") {
  Setup a1("A1", {1}, {});
  CHECK(a1.ctx.component_of(a1.g.identity()) == a1.g.identity());
  const auto s0 = a1.el("s0");
  const auto t = a1.el("t[-1]");
  // s0 = t[1] s1, and t[1] W_f differs from t[-1] W_f.
  CHECK(a1.ctx.component_of(s0) == a1.ctx.component_of(a1.el("t[1]")));
  CHECK(a1.ctx.component_of(s0) != a1.ctx.component_of(t));
  CHECK(a1.ctx.component_of(a1.el("t[-1]*s1")) == a1.ctx.component_of(t));

  Setup iw("A1", {}, {});
  CHECK(iw.ctx.component_of(iw.el("t[2]")) == iw.el("t[2]"));
  CHECK(iw.ctx.component_of(iw.el("t[2]")) != iw.ctx.component_of(iw.el("t[1]")));
  CHECK_FALSE(iw.ctx.has_levi_point(iw.ctx.component_of(iw.el("s1"))));
  CHECK(iw.ctx.has_levi_point(iw.g.identity()));

  Setup whole("A1", {}, {1});
  CHECK(whole.ctx.component_of(whole.el("s0*s1*s0")) == whole.g.identity());
}

TEST_CASE("induced facet on the Levi") {
  Setup t("A2", {1, 2}, {});
  CHECK(t.ctx.levi_facet().size() == 1);
  Setup m("A2", {1, 2}, {1});
  CHECK(m.ctx.levi_facet() == std::vector<AffineWeylElement>{m.g.identity(), m.el("s1")});
  Setup c2("C2", {1, 2}, {1, 2});
  CHECK(c2.ctx.levi_facet().size() == c2.h.facet().size());
}

TEST_CASE("Satake transform examples") {
  Setup a1("A1", {1}, {});
  CHECK(a1.ctx.to_monoid(a1.ctx.satake_phi(a1.g.identity())) == single(2, {0}));
  CHECK(a1.ctx.to_monoid(a1.ctx.satake_phi(a1.el("t[-1]"))) == single(2, {-1}));
  CHECK(a1.ctx.to_monoid(a1.ctx.satake_phi(a1.el("t[1]"))) == single(2, {-1}));
  CHECK(a1.ctx.closed_attractor_component(a1.el("t[-1]")) == a1.ctx.component_of(a1.el("t[-1]")));
  const auto sum = a1.h.add(a1.h.phi(a1.el("t[-1]")), a1.h.phi(a1.el("t[-2]")));
  CHECK(a1.ctx.to_monoid(a1.ctx.satake(sum)) == monoid_add(single(2, {-1}), single(2, {-2})));
  CHECK(a1.ctx.satake(a1.h.zero()).is_zero());

  Setup iw("A1", {}, {});
  // s0*s1 = t[1]: the closed attractor of its Schubert variety is the point s1.
  CHECK(iw.ctx.closed_attractor_component(iw.el("s0*s1")) == iw.el("s1"));
  CHECK(iw.ctx.satake_phi(iw.el("s0*s1")).is_zero());
  const auto top = iw.el("s1*s0");
  const auto c = iw.ctx.closed_attractor_component(top);
  CHECK(c == iw.el("t[-1]"));
  CHECK(iw.ctx.has_levi_point(c));
  const auto image = iw.ctx.phi_c_w(c, top);
  CHECK(image.terms.size() == 1);
  for (const auto& [y, k] : image.terms) {
    CHECK(y.finite == iw.g.datum().finite_identity());
    CHECK(iw.g.bruhat_leq(y, top));
    CHECK(iw.ctx.component_of(y) == c);
  }
  CHECK_THROWS_AS(iw.ctx.phi_c_w(iw.ctx.component_of(iw.el("s1")), top), PreconditionError);

  // Some Iwahori class of small length has a closed attractor off the Levi.
  bool found_zero = false;
  for (const auto& w : iw.g.elements_up_to_length(4))
    if (iw.ctx.satake_phi(w).is_zero()) {
      found_zero = true;
      CHECK_FALSE(iw.ctx.has_levi_point(iw.ctx.closed_attractor_component(w)));
    }
  CHECK(found_zero);
  CHECK_THROWS_AS(iw.ctx.special_satake_phi(top), PreconditionError);
}

TEST_CASE("property: labels agree with the coset invariant") {
  for (const char* datum : {"A1", "A2", "C2", "A2:ad"}) {
    AffineWeylGroup g(RootDatum(parse_cartan_datum(datum)));
    const int r = g.datum().semisimple_rank();
    for (const Facet& f : {g.iwahori(), g.hyperspecial(), g.make_facet({0})}) {
      HeckeAlgebra h(g, f, 2);
      for (const auto& J : proper_levis(r)) {
        CAPTURE(datum);
        CAPTURE(format_index_list(f.indices));
        CAPTURE(format_index_list(J));
        SatakeContext ctx(h, LeviDatum(g.datum(), J));
        const auto elements = g.elements_up_to_length(3);
        std::map<AffineWeylElement, std::set<std::pair<IntVec, std::vector<int>>>> seen;
        for (const auto& w : elements) {
          const auto label = ctx.component_of(w);
          CHECK(ctx.component_of(label) == label);
          const auto inv = oracle::levi_double_coset_invariant(ctx, w);
          CHECK(oracle::levi_double_coset_invariant(ctx, label) == inv);
          auto [it, fresh] = seen.emplace(label, inv);
          if (!fresh) CHECK(it->second == inv);
          for (const auto& a : ctx.levi_affine_simple_roots()) {
            CHECK(ctx.in_levi_affine_weyl_group(ctx.reflection(a)));
            CHECK(ctx.component_of(g.multiply(ctx.reflection(a), w)) == label);
          }
          for (int j : f.indices) CHECK(ctx.component_of(g.multiply(w, g.simple_reflection(j))) == label);
        }
        for (auto it = seen.begin(); it != seen.end(); ++it)
          for (auto jt = std::next(it); jt != seen.end(); ++jt) CHECK(it->second != jt->second);
      }
    }
  }
}

TEST_CASE("property: closed attractors are unique and word independent") {
  for (const char* datum : {"A1", "A2", "C2"}) {
    AffineWeylGroup g(RootDatum(parse_cartan_datum(datum)));
    oracle::Oracle o(g);
    const int r = g.datum().semisimple_rank();
    for (const Facet& f : {g.iwahori(), g.hyperspecial()}) {
      HeckeAlgebra h(g, f, 2);
      for (const auto& J : proper_levis(r)) {
        SatakeContext ctx(h, LeviDatum(g.datum(), J));
        for (const auto& w : g.double_coset_reps_up_to_length(f, 4)) {
          CAPTURE(datum);
          CAPTURE(format_element(g, w));
          const auto c = ctx.closed_attractor_component(w);
          const auto tau = g.omega_part(w);
          for (const auto& word : o.all_reduced_words(w)) {
            CHECK(ctx.closed_attractor_along(word, tau) == c);
            const auto labels = oracle::enumerate_closed_chains(ctx, w, word, tau);
            CHECK(labels == std::set<AffineWeylElement>{c});
          }
        }
      }
    }
  }
}

TEST_CASE("property: anti-dominant translations are their own closed attractors") {
  for (const char* datum : {"A1", "A1:ad", "A2", "C2", "G2"}) {
    CAPTURE(datum);
    AffineWeylGroup g(RootDatum(parse_cartan_datum(datum)));
    HeckeAlgebra h(g, g.hyperspecial(), 3);
    const int r = g.datum().semisimple_rank();
    for (const auto& J : proper_levis(r)) {
      SatakeContext ctx(h, LeviDatum(g.datum(), J));
      for (const auto& z : enumerate_antidominant(g, 6)) {
        const auto tz = g.translation(z.z);
        CHECK(ctx.closed_attractor_component(tz) == ctx.component_of(tz));
        CHECK(ctx.has_levi_point(ctx.closed_attractor_component(tz)));
      }
    }
    SatakeContext minimal(h, LeviDatum(g.datum(), {}));
    for (const auto& z : enumerate_antidominant(g, 6)) {
      CHECK(minimal.to_monoid(minimal.satake_phi(g.translation(z.z))) == single(3, z.z));
      CHECK(minimal.special_satake_phi(g.translation(z.z)) == single(3, z.z));
      CHECK(minimal.antidominant_translation(h.canonical(g.translation(z.z))) == z.z);
    }
  }
}

TEST_CASE("the opposite sign convention breaks the special collapse") {
  Setup a1("A1", {1}, {}, 2, AttractorConvention::Opposite);
  const auto t = a1.el("t[-1]");
  CHECK(a1.ctx.closed_attractor_component(t) != a1.ctx.component_of(t));
}

TEST_CASE("property: Satake is an injective homomorphism at special level") {
  std::mt19937 rng(29);
  for (const char* datum : {"A1", "A2", "C2"}) {
    CAPTURE(datum);
    AffineWeylGroup g(RootDatum(parse_cartan_datum(datum)));
    for (Int p : {2, 3}) {
      HeckeAlgebra h(g, g.hyperspecial(), p);
      SatakeContext ctx(h, LeviDatum(g.datum(), {}));
      const auto zs = enumerate_antidominant(g, 4);
      std::set<std::map<IntVec, Int>> images;
      for (const auto& z : zs) images.insert(ctx.to_monoid(ctx.satake_phi(g.translation(z.z))).terms);
      CHECK(images.size() == zs.size());
      std::uniform_int_distribution<std::size_t> pick(0, zs.size() - 1);
      std::uniform_int_distribution<Int> coeff(1, p - 1);
      for (int trial = 0; trial < 10; ++trial) {
        HeckeElement a = h.zero(), b = h.zero();
        for (int k = 0; k < 2; ++k) {
          a = h.add(a, h.scale(h.phi(g.translation(zs[pick(rng)].z)), coeff(rng)));
          b = h.add(b, h.scale(h.phi(g.translation(zs[pick(rng)].z)), coeff(rng)));
        }
        const auto lhs = ctx.to_monoid(ctx.satake(h.convolve(a, b)));
        const auto rhs = monoid_multiply(ctx.to_monoid(ctx.satake(a)), ctx.to_monoid(ctx.satake(b)));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("anti-dominant enumeration") {
  AffineWeylGroup a1(RootDatum(parse_cartan_datum("A1")));
  const auto zs = enumerate_antidominant(a1, 8);
  REQUIRE(zs.size() == 5);
  for (std::size_t k = 0; k < zs.size(); ++k) {
    CHECK(zs[k].z == IntVec{-static_cast<Int>(k)});
    CHECK(zs[k].length == 2 * static_cast<int>(k));
  }
  AffineWeylGroup a1ad(RootDatum(parse_cartan_datum("A1:ad")));
  CHECK(enumerate_antidominant(a1ad, 8).size() == 9);
  AffineWeylGroup a2(RootDatum(parse_cartan_datum("A2")));
  for (const auto& z : enumerate_antidominant(a2, 8)) {
    CHECK(a2.datum().is_antidominant(z.z));
    CHECK(z.length <= 8);
  }
  AffineWeylGroup c2(RootDatum(parse_cartan_datum("C2")));
  HeckeAlgebra iw(c2, c2.iwahori(), 2);
  SatakeContext ctx(iw, LeviDatum(c2.datum(), {}));
  CHECK_THROWS_AS(ctx.antidominant_translation(c2.identity()), PreconditionError);
}
