#include "doctest.h"

#include "modp/errors.hpp"
#include "modp/format.hpp"

#include <random>

using namespace modp;

TEST_CASE("element grammar") {
  AffineWeylGroup a1(RootDatum(parse_cartan_datum("A1")));
  CHECK(parse_element(a1, "e") == a1.identity());
  CHECK(parse_element(a1, "s0,1,0") == a1.from_word({0, 1, 0}));
  CHECK(parse_element(a1, "s0*s1*s0") == a1.from_word({0, 1, 0}));
  CHECK(parse_element(a1, " t[1] * w[1] ") == a1.multiply(a1.translation({1}), a1.simple_reflection(1)));
  CHECK(parse_element(a1, "w[]") == a1.identity());
  CHECK(format_element(a1, a1.identity()) == "e");
  CHECK(format_element(a1, a1.simple_reflection(0)) == "t[1]*w[1]");
  CHECK(format_element(a1, a1.translation({-2})) == "t[-2]");
  CHECK(format_word(a1, a1.identity()) == "e");
  CHECK(format_word(a1, a1.from_word({0, 1})) == "s0*s1");
  for (const char* bad : {"", "s", "s2", "t[1,2]", "t[1", "x1", "w[0]", "s0**s1", "t[a]"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_element(a1, bad), ParseError);
  }
}

TEST_CASE("Omega parts print as translations") {
  AffineWeylGroup a1(RootDatum(parse_cartan_datum("A1:ad")));
  const auto omegas = a1.omega_elements();
  REQUIRE(omegas.size() == 2);
  const auto tau = omegas[0] == a1.identity() ? omegas[1] : omegas[0];
  const std::string text = format_word(a1, tau);
  CHECK(text.find("t[") != std::string::npos);
  CHECK(parse_element(a1, text) == tau);
}

TEST_CASE("property: printers round-trip through the parser") {
  for (const char* s : {"A2", "A2:ad", "C2:ad", "G2", "B3", "A1xA1:ad"}) {
    CAPTURE(s);
    AffineWeylGroup g(RootDatum(parse_cartan_datum(s)));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> letter(0, g.num_simple() - 1);
    const auto omegas = g.omega_elements();
    std::uniform_int_distribution<std::size_t> om(0, omegas.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> word(static_cast<std::size_t>(trial % 9));
      for (int& x : word) x = letter(rng);
      const auto w = g.multiply(g.from_word(word), omegas[om(rng)]);
      CHECK(parse_element(g, format_element(g, w)) == w);
      CHECK(parse_element(g, format_word(g, w)) == w);
    }
  }
}

TEST_CASE("index lists") {
  CHECK(parse_index_list("").empty());
  CHECK(parse_index_list(" 1, 2 ,0") == std::vector<int>{1, 2, 0});
  CHECK(format_index_list({0, 2}) == "0,2");
  CHECK(parse_int_list("-1,3") == std::vector<Int>{-1, 3});
  CHECK(format_int_list(IntVec{-1, 3}) == "-1,3");
  CHECK_THROWS_AS(parse_index_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_index_list("a"), ParseError);
  CHECK_THROWS_AS(parse_int_list("1.5"), ParseError);
}
