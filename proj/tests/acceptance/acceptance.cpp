// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "modp/affine_weyl.hpp"
#include "modp/format.hpp"
#include "modp/hecke.hpp"
#include "modp/oracle.hpp"
#include "modp/root_datum.hpp"
#include "modp/satake.hpp"

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace modp;

namespace {

struct Tally {
  long long cases = 0;
  long long failures = 0;
  std::vector<std::string> samples;  // first few failures

  void expect(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok) return;
    ++failures;
    if (samples.size() < 5) samples.push_back(what());
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Tally&)> body;
};

AffineWeylGroup group(const std::string& datum) { return AffineWeylGroup(RootDatum(parse_cartan_datum(datum))); }

MonoidAlgebraElement monomial(Int p, const IntVec& z) {
  MonoidAlgebraElement m;
  m.prime = p;
  m.terms.emplace(z, 1);
  return m;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec s = a;
  for (std::size_t k = 0; k < s.size(); ++k) s[k] += b[k];
  return s;
}

std::string vec(const IntVec& z) {
  std::string s = "[";
  for (std::size_t k = 0; k < z.size(); ++k) s += (k ? "," : "") + std::to_string(z[k]);
  return s + "]";
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

const std::vector<std::string> kSpecialGroups = {"A1", "A1:ad", "A2", "C2"};
const std::vector<Int> kPrimes = {2, 3, 5};

void special_satake(Tally& t) {
  for (const auto& datum : kSpecialGroups) {
    const auto g = group(datum);
    for (Int p : kPrimes) {
      HeckeAlgebra h(g, g.hyperspecial(), p);
      SatakeContext ctx(h, LeviDatum(g.datum(), {}));
      for (const auto& z : enumerate_antidominant(g, 8)) {
        const auto image = ctx.to_monoid(ctx.satake_phi(h.canonical(g.translation(z.z))));
        t.expect(image == monomial(p, z.z), [&] { return datum + " z=" + vec(z.z) + " p=" + std::to_string(p); });
      }
    }
  }
}

void monoid_law(Tally& t) {
  for (const auto& datum : kSpecialGroups) {
    const auto g = group(datum);
    for (Int p : kPrimes) {
      HeckeAlgebra h(g, g.hyperspecial(), p);
      const auto zs = enumerate_antidominant(g, 5);
      for (const auto& a : zs)
        for (const auto& b : zs) {
          const auto wa = h.canonical(g.translation(a.z));
          const auto wb = h.canonical(g.translation(b.z));
          const auto target = h.canonical(g.translation(add(a.z, b.z)));
          const auto ab = h.convolve(h.phi(wa), h.phi(wb));
          const auto ba = h.convolve(h.phi(wb), h.phi(wa));
          const auto where = [&] { return datum + " " + vec(a.z) + "*" + vec(b.z) + " p=" + std::to_string(p); };
          t.expect(h.convolve_phi_classes(wa, wb).first == target, where);
          t.expect(ab == h.phi(target), where);
          t.expect(ab == ba, where);
        }
    }
  }
}

void oracle_convolution(Tally& t) {
  for (const std::string datum : {"A1", "A2"}) {
    const auto g = group(datum);
    oracle::Oracle o(g);
    const auto elements = g.elements_up_to_length(4);
    std::deque<HeckeAlgebra> algebras;
    for (Int p : kPrimes) algebras.emplace_back(g, g.iwahori(), p);
    std::vector<oracle::GenericHeckeElement> phis;
    for (const auto& w : elements) phis.push_back(o.phi_as_T(w));
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (std::size_t j = 0; j < elements.size(); ++j) {
        const auto generic = o.generic_multiply(phis[i], phis[j]);
        for (const auto& h : algebras) {
          const auto expect = o.indicator_to_phi(o.specialize_q0_mod_p(generic, h.prime()));
          const auto got = h.convolve(h.phi(elements[i]), h.phi(elements[j]));
          t.expect(got.terms == expect.terms, [&] {
            return datum + " " + format_element(g, elements[i]) + " * " + format_element(g, elements[j]) +
                   " p=" + std::to_string(h.prime());
          });
        }
      }
  }
}

void demazure_words(Tally& t) {
  for (const std::string datum : {"A1", "A2", "C2"}) {
    const auto g = group(datum);
    oracle::Oracle o(g);
    const auto elements = g.elements_up_to_length(5);
    std::vector<std::vector<std::vector<int>>> words;
    for (const auto& w : elements) {
      words.push_back(o.all_reduced_words(w));
      t.expect(o.brute_reduced_word(w).second == g.identity(), [&] { return datum + " nontrivial Omega part"; });
    }
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (std::size_t j = 0; j < elements.size(); ++j) {
        const auto expect = g.demazure_product(elements[i], elements[j]);
        bool same = true;
        for (const auto& a : words[i])
          for (const auto& b : words[j]) {
            std::vector<int> ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            same = same && g.demazure_product(ab) == expect;
          }
        t.expect(same, [&] {
          return datum + " " + format_element(g, elements[i]) + " . " + format_element(g, elements[j]);
        });
      }
  }
}

void bruhat_and_length(Tally& t) {
  for (const std::string datum : {"A1", "A1:ad", "A1xA1", "A2", "A2:ad", "C2", "C2:ad", "G2"}) {
    const auto g = group(datum);
    oracle::Oracle o(g);
    const auto small = g.elements_up_to_length(6);
    for (const auto& w : small) {
      const auto below = o.subword_products(w);
      for (const auto& u : small)
        t.expect(g.bruhat_leq(u, w) == (below.count(u) > 0), [&] {
          return datum + " " + format_element(g, u) + " <= " + format_element(g, w);
        });
    }
    for (const auto& w : g.elements_up_to_length(8))
      t.expect(g.length(w) == o.brute_length(w), [&] { return datum + " length " + format_element(g, w); });
    const int n = g.datum().lattice_rank();
    IntVec lambda(static_cast<std::size_t>(n), -3);
    while (true) {
      const auto tl = g.translation(lambda);
      t.expect(g.length(tl) == o.brute_length(tl), [&] { return datum + " length t" + vec(lambda); });
      int k = 0;
      while (k < n && lambda[static_cast<std::size_t>(k)] == 3) lambda[static_cast<std::size_t>(k++)] = -3;
      if (k == n) break;
      ++lambda[static_cast<std::size_t>(k)];
    }
  }
}

void closed_attractors(Tally& t) {
  for (const std::string datum : {"A1", "A2", "C2"}) {
    const auto g = group(datum);
    oracle::Oracle o(g);
    for (const Facet& f : {g.iwahori(), g.hyperspecial()}) {
      HeckeAlgebra h(g, f, 2);
      // Classes whose minimal element has length <= 6.
      std::vector<AffineWeylElement> reps;
      for (const auto& w : g.double_coset_reps_up_to_length(f, 6 + g.length(f.longest)))
        if (g.length(g.min_left_coset_rep(g.min_coset_rep(w, f), f)) <= 6) reps.push_back(w);
      for (const auto& J : proper_levis(g.datum().semisimple_rank())) {
        SatakeContext ctx(h, LeviDatum(g.datum(), J));
        for (const auto& w : reps) {
          const auto c = ctx.closed_attractor_component(w);
          const auto tau = g.omega_part(w);
          for (const auto& word : o.all_reduced_words(w)) {
            const auto labels = oracle::enumerate_closed_chains(ctx, w, word, tau);
            t.expect(labels == std::set<AffineWeylElement>{c}, [&] {
              return datum + " facet " + vec(IntVec(f.indices.begin(), f.indices.end())) + " levi " +
                     vec(IntVec(J.begin(), J.end())) + " w=" + format_element(g, w) + " chains=" +
                     std::to_string(labels.size());
            });
          }
        }
      }
    }
  }
}

void general_vs_special(Tally& t) {
  for (const auto& datum : kSpecialGroups) {
    const auto g = group(datum);
    for (Int p : kPrimes) {
      HeckeAlgebra h(g, g.hyperspecial(), p);
      SatakeContext ctx(h, LeviDatum(g.datum(), {}));
      for (const auto& z : enumerate_antidominant(g, 8)) {
        const auto w = h.canonical(g.translation(z.z));
        t.expect(ctx.to_monoid(ctx.satake_phi(w)) == ctx.special_satake_phi(w),
                 [&] { return datum + " z=" + vec(z.z) + " p=" + std::to_string(p); });
      }
    }
  }
}

void homomorphism(Tally& t) {
  std::mt19937 rng(20261016);
  const int pairs = 200;
  for (int trial = 0; trial < pairs; ++trial) {
    const auto& datum = kSpecialGroups[static_cast<std::size_t>(trial) % kSpecialGroups.size()];
    const Int p = kPrimes[static_cast<std::size_t>(trial / 4) % kPrimes.size()];
    const auto g = group(datum);
    HeckeAlgebra h(g, g.hyperspecial(), p);
    SatakeContext ctx(h, LeviDatum(g.datum(), {}));
    const auto zs = enumerate_antidominant(g, 4);
    std::uniform_int_distribution<std::size_t> pick(0, zs.size() - 1);
    std::uniform_int_distribution<Int> coeff(1, p - 1);
    std::uniform_int_distribution<int> terms(1, 3);
    const auto random_element = [&] {
      HeckeElement a = h.zero();
      for (int k = terms(rng); k > 0; --k) a = h.add(a, h.scale(h.phi(g.translation(zs[pick(rng)].z)), coeff(rng)));
      return a;
    };
    const auto a = random_element();
    const auto b = random_element();
    const auto lhs = ctx.to_monoid(ctx.satake(h.convolve(a, b)));
    const auto rhs = monoid_multiply(ctx.to_monoid(ctx.satake(a)), ctx.to_monoid(ctx.satake(b)));
    t.expect(lhs == rhs, [&] { return datum + " trial " + std::to_string(trial); });
  }
  for (const auto& datum : kSpecialGroups) {
    const auto g = group(datum);
    HeckeAlgebra h(g, g.hyperspecial(), 2);
    SatakeContext ctx(h, LeviDatum(g.datum(), {}));
    const auto zs = enumerate_antidominant(g, 8);
    std::set<std::map<IntVec, Int>> images;
    for (const auto& z : zs) images.insert(ctx.special_satake_phi(h.canonical(g.translation(z.z))).terms);
    t.expect(images.size() == zs.size(), [&] { return datum + " images collide"; });
    std::set<IntVec> distinct;
    for (const auto& z : zs) distinct.insert(z.z);
    t.expect(distinct.size() == zs.size(), [&] { return datum + " repeated z"; });
  }
}

void point_counts(Tally& t) {
  for (const std::string datum : {"A1", "A1:ad", "A2", "C2"}) {
    const auto g = group(datum);
    oracle::Oracle o(g);
    for (const Facet& f : {g.iwahori(), g.hyperspecial()}) {
      HeckeAlgebra h(g, f, 2);
      for (const auto& w : g.double_coset_reps_up_to_length(f, 6)) {
        const auto poly = h.point_count(w);
        const auto where = [&] { return datum + " " + format_element(g, w) + " -> " + poly.to_string(); };
        t.expect(poly.coefficient(0) == 1, where);
        if (f.indices.empty()) {
          Polynomial cells;
          for (const auto& v : o.subword_products(w)) cells += Polynomial::monomial(o.brute_length(v));
          t.expect(poly == cells, where);
        }
      }
    }
  }
  const auto a1 = group("A1");
  HeckeAlgebra h(a1, a1.iwahori(), 2);
  const auto poly = h.point_count(a1.simple_reflection(0));
  t.expect(poly == Polynomial({1, 1}), [&] { return "A1 s0 -> " + poly.to_string(); });
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "special Satake sends phi_z to e^z", 60, special_satake},
      {2, "special convolution is the monoid law and commutes", 60, monoid_law},
      {3, "Iwahori convolution agrees with the q = 0 generic Hecke oracle", 300, oracle_convolution},
      {4, "Demazure products do not depend on reduced words", 120, demazure_words},
      {5, "Bruhat order and length agree with subwords and alcove walls", 120, bruhat_and_length},
      {6, "closed chains are unique and word independent", 300, closed_attractors},
      {7, "general Satake path matches the anti-dominant fast path", 60, general_vs_special},
      {8, "Satake is a homomorphism and injective at special level", 120, homomorphism},
      {9, "point counts are 1 mod q and s0 gives 1 + q", 120, point_counts},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Tally t;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && t.failures == 0 && t.cases > 0 && secs <= c.limit_seconds;
    all = all && ok;
    std::printf("%s  %d  %s  (%lld cases, %lld failures, %.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), t.cases, t.failures, secs, c.limit_seconds);
    if (!error.empty()) std::printf("      exception: %s\n", error.c_str());
    for (const auto& s : t.samples) std::printf("      %s\n", s.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
