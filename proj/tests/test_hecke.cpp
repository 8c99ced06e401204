#include "doctest.h"

#include "modp/errors.hpp"
#include "modp/format.hpp"
#include "modp/hecke.hpp"
#include "modp/oracle.hpp"
#include "modp/satake.hpp"

#include <random>

using namespace modp;

namespace {

struct Setup {
  Setup(const std::string& datum, std::vector<int> facet, Int p)
      : g(RootDatum(parse_cartan_datum(datum))), h(g, g.make_facet(std::move(facet)), p) {}
  AffineWeylElement el(const std::string& text) const { return parse_element(g, text); }
  AffineWeylGroup g;
  HeckeAlgebra h;
};

HeckeElement sum(const HeckeAlgebra& h, const std::vector<AffineWeylElement>& ws, HeckeBasis basis) {
  HeckeElement out = h.zero(basis);
  for (const auto& w : ws) out = h.add(out, basis == HeckeBasis::Phi ? h.phi(w) : h.indicator(w));
  return out;
}

}  // namespace

TEST_CASE("phi basis elements in the indicator basis") {
  Setup a1("A1", {}, 3);
  CHECK(a1.h.to_basis(a1.h.unit(), HeckeBasis::Indicator) == a1.h.indicator(a1.g.identity()));
  const auto got = a1.h.to_basis(a1.h.phi(a1.el("s0*s1")), HeckeBasis::Indicator);
  const auto expect = sum(a1.h, {a1.g.identity(), a1.el("s0"), a1.el("s1"), a1.el("s0*s1")}, HeckeBasis::Indicator);
  CHECK(got == expect);
  CHECK(a1.h.to_basis(got, HeckeBasis::Phi) == a1.h.phi(a1.el("s0*s1")));
}

TEST_CASE("class products at Iwahori level in A1") {
  Setup a1("A1", {}, 3);
  const auto e = a1.g.identity();
  const auto s0 = a1.el("s0");
  const auto s1 = a1.el("s1");
  const auto s01 = a1.el("s0*s1");
  CHECK(a1.h.convolve_phi_classes(e, s01).first == s01);
  CHECK(a1.h.convolve_phi_classes(s01, e).first == s01);
  CHECK(a1.h.convolve_phi_classes(s0, s1).first == s01);
  CHECK(a1.h.convolve_phi_classes(s01, s1).first == s01);
  CHECK(a1.h.convolve_phi_classes(s1, s1).first == s1);
  const auto lhs = a1.h.convolve(a1.h.add(a1.h.phi(s0), a1.h.phi(s1)), a1.h.phi(s1));
  CHECK(lhs == a1.h.add(a1.h.phi(s01), a1.h.phi(s1)));
  const auto twice = a1.h.scale(a1.h.phi(s0), 2);
  CHECK(a1.h.add(twice, a1.h.phi(s0)).is_zero());
}

TEST_CASE("convolution in A1 at the hyperspecial vertex") {
  Setup a1("A1", {1}, 3);
  const auto z = a1.h.canonical(a1.el("t[-1]"));
  CHECK(a1.h.convolve_phi_classes(z, z).first == a1.h.canonical(a1.el("t[-2]")));
  CHECK(a1.h.canonical(a1.el("s0")) == z);
  CHECK(a1.h.canonical(a1.el("s1")) == a1.g.identity());
}

TEST_CASE("point counts") {
  Setup a1("A1", {}, 2);
  CHECK(a1.h.point_count(a1.g.identity()).to_string() == "1");
  CHECK(a1.h.point_count(a1.el("s0")).to_string() == "1 + q");
  CHECK(a1.h.point_count(a1.el("s0*s1")) == Polynomial({1, 2, 1}));
  Setup hs("A1", {1}, 2);
  CHECK(hs.h.point_count(hs.el("t[-1]")).to_string() == "1 + q + q^2");
  CHECK(hs.h.point_count(hs.g.identity()).to_string() == "1");
}

TEST_CASE("errors") {
  AffineWeylGroup a1(RootDatum(parse_cartan_datum("A1")));
  CHECK_THROWS_AS(HeckeAlgebra(a1, a1.iwahori(), 0), InvalidInput);
  CHECK_THROWS_AS(HeckeAlgebra(a1, a1.iwahori(), 4), InvalidInput);
  CHECK_THROWS_AS(HeckeAlgebra(a1, a1.iwahori(), 1), InvalidInput);
  HeckeAlgebra h2(a1, a1.iwahori(), 2);
  HeckeAlgebra h3(a1, a1.iwahori(), 3);
  HeckeAlgebra k3(a1, a1.hyperspecial(), 3);
  CHECK_THROWS_AS(h3.convolve(h2.unit(), h3.unit()), InvalidInput);
  CHECK_THROWS_AS(h3.add(k3.unit(), h3.unit()), InvalidInput);
  CHECK(parse_basis("phi") == HeckeBasis::Phi);
  CHECK(parse_basis("indicator") == HeckeBasis::Indicator);
  CHECK_THROWS_AS(parse_basis("psi"), ParseError);
  HeckeAlgebra tiny(a1, a1.iwahori(), 2, 3);
  CHECK_THROWS_AS(tiny.to_basis(tiny.phi(a1.from_word({0, 1, 0})), HeckeBasis::Indicator), CapExceeded);
}

TEST_CASE("property: associativity, unit and witness replay") {
  struct Case {
    const char* datum;
    std::vector<int> facet;
    int max_length;
  };
  for (const Case& c : {Case{"A1", {}, 3}, Case{"A2", {}, 2}, Case{"C2", {}, 2}, Case{"A2", {1, 2}, 4}, Case{"C2", {0, 2}, 3},
                        Case{"A2:ad", {}, 2}, Case{"C2", {1, 2}, 4}, Case{"G2", {2}, 3}}) {
    CAPTURE(c.datum);
    CAPTURE(format_index_list(c.facet));
    Setup s(c.datum, c.facet, 5);
    const auto reps = s.g.double_coset_reps_up_to_length(s.h.facet(), c.max_length);
    for (const auto& a : reps) {
      CHECK(s.h.convolve_phi_classes(s.g.identity(), a).first == a);
      CHECK(s.h.convolve_phi_classes(a, s.g.identity()).first == a);
      for (const auto& b : reps) {
        const auto [ab, wit] = s.h.convolve_phi_classes(a, b);
        CHECK(s.h.replay(wit) == ab);
        CHECK(s.h.canonical(wit.demazure) == ab);
        CHECK(s.g.multiply(wit.tau1, s.g.from_word(wit.word1)) == a);
        CHECK(s.g.multiply(s.g.from_word(wit.word2), wit.tau2) == b);
        CHECK(s.g.bruhat_leq(s.g.multiply(a, wit.tau2), s.g.double_coset_max(ab, s.h.facet())));
        for (const auto& d : reps)
          CHECK(s.h.convolve_phi_classes(ab, d).first == s.h.convolve_phi_classes(a, s.h.convolve_phi_classes(b, d).first).first);
      }
    }
  }
}

TEST_CASE("property: basis conversions round-trip") {
  std::mt19937 rng(5);
  for (const char* datum : {"A1", "A2", "C2"}) {
    for (const std::vector<int>& facet : {std::vector<int>{}, std::vector<int>{1}, std::vector<int>{0}}) {
      Setup s(datum, facet, 3);
      const auto reps = s.g.double_coset_reps_up_to_length(s.h.facet(), 4);
      std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
      std::uniform_int_distribution<Int> coeff(0, 2);
      for (int trial = 0; trial < 20; ++trial) {
        HeckeElement a = s.h.zero(HeckeBasis::Phi);
        for (int k = 0; k < 4; ++k) a = s.h.add(a, s.h.scale(s.h.phi(reps[pick(rng)]), coeff(rng)));
        const auto ind = s.h.to_basis(a, HeckeBasis::Indicator);
        CHECK(s.h.to_basis(ind, HeckeBasis::Phi) == a);
        for (const auto& [w, c] : ind.terms) CHECK((c > 0 && c < 3));
      }
    }
  }
}

TEST_CASE("property: special level is commutative with the monoid law") {
  for (const char* datum : {"A1", "A1:ad", "A2", "C2", "G2"}) {
    CAPTURE(datum);
    Setup s(datum, {}, 2);
    HeckeAlgebra k(s.g, s.g.hyperspecial(), 2);
    const auto zs = enumerate_antidominant(s.g, 4);
    for (const auto& z1 : zs)
      for (const auto& z2 : zs) {
        const auto a = k.canonical(s.g.translation(z1.z));
        const auto b = k.canonical(s.g.translation(z2.z));
        IntVec sum_z = z1.z;
        for (std::size_t i = 0; i < sum_z.size(); ++i) sum_z[i] += z2.z[i];
        const auto ab = k.convolve_phi_classes(a, b).first;
        CHECK(ab == k.convolve_phi_classes(b, a).first);
        CHECK(ab == k.canonical(s.g.translation(sum_z)));
        CHECK(s.g.length(s.g.translation(sum_z)) == z1.length + z2.length);
      }
    const auto reps = s.g.double_coset_reps_up_to_length(k.facet(), 5);
    for (const auto& a : reps)
      for (const auto& b : reps) CHECK(k.convolve_phi_classes(a, b).first == k.convolve_phi_classes(b, a).first);
  }
}

TEST_CASE("property: Iwahori convolution matches the q = 0 generic algebra") {
  for (const char* datum : {"A1", "A2", "A1:ad"}) {
    CAPTURE(datum);
    Setup s(datum, {}, 2);
    oracle::Oracle o(s.g);
    const auto elements = s.g.elements_up_to_length(2);
    for (Int p : {2, 3}) {
      HeckeAlgebra h(s.g, s.g.iwahori(), p);
      for (const auto& a : elements)
        for (const auto& b : elements) CHECK(h.convolve(h.phi(a), h.phi(b)) == o.convolve_phi(a, b, p));
    }
  }
}

TEST_CASE("property: point counts have constant term one") {
  for (const char* datum : {"A1", "A2", "C2", "A2:ad"}) {
    Setup s(datum, {}, 2);
    for (const Facet& f : {s.g.iwahori(), s.g.hyperspecial(), s.g.make_facet({0})}) {
      HeckeAlgebra h(s.g, f, 2);
      for (const auto& w : s.g.double_coset_reps_up_to_length(f, 4)) {
        const Polynomial p = h.point_count(w);
        CHECK(p.coefficient(0) == 1);
        CHECK(p.degree() == s.g.length(s.g.double_coset_max(w, f)) - s.g.length(f.longest));
        for (Int q : {2, 3, 4, 5, 7, 9}) CHECK(p.evaluate(q) % q == 1 % q);
      }
    }
  }
}
