#include "modp/hecke.hpp"

#include "modp/errors.hpp"
#include "modp/format.hpp"

#include <algorithm>
#include <sstream>

namespace modp {

std::string to_string(HeckeBasis b) { return b == HeckeBasis::Phi ? "phi" : "indicator"; }

HeckeBasis parse_basis(const std::string& text) {
  if (text == "phi") return HeckeBasis::Phi;
  if (text == "indicator" || text == "1") return HeckeBasis::Indicator;
  throw ParseError("unknown basis '" + text + "' (expected phi or indicator)");
}

bool is_prime(Int p) {
  if (p < 2) return false;
  for (Int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

HeckeAlgebra::HeckeAlgebra(const AffineWeylGroup& group, Facet facet, Int prime, std::size_t interval_cap)
    : group_(&group), facet_(std::move(facet)), prime_(prime), cap_(interval_cap) {
  if (!is_prime(prime_)) {
    std::ostringstream os;
    os << "coefficient characteristic must be a prime, got " << prime_;
    throw InvalidInput(os.str());
  }
}

Int HeckeAlgebra::reduce(Int c) const {
  c %= prime_;
  return c < 0 ? c + prime_ : c;
}

std::string HeckeAlgebra::interval_key(const AffineWeylElement& rep) const {
  std::ostringstream os;
  os << group_->datum().canonical_string() << "|" << format_index_list(facet_.indices) << "|"
     << format_element(*group_, rep) << "|" << cap_;
  return os.str();
}

HeckeElement HeckeAlgebra::zero(HeckeBasis basis) const {
  HeckeElement e;
  e.facet = facet_.indices;
  e.prime = prime_;
  e.basis = basis;
  return e;
}

HeckeElement HeckeAlgebra::phi(const AffineWeylElement& w) const {
  HeckeElement e = zero(HeckeBasis::Phi);
  e.terms.emplace(canonical(w), 1);
  return e;
}

HeckeElement HeckeAlgebra::indicator(const AffineWeylElement& w) const {
  HeckeElement e = zero(HeckeBasis::Indicator);
  e.terms.emplace(canonical(w), 1);
  return e;
}

void HeckeAlgebra::check_compatible(const HeckeElement& a) const {
  if (a.facet != facet_.indices) throw InvalidInput("Hecke element belongs to a different facet");
  if (a.prime != prime_) throw InvalidInput("Hecke element has a different prime");
}

HeckeElement HeckeAlgebra::add(const HeckeElement& a, const HeckeElement& b) const {
  check_compatible(a);
  check_compatible(b);
  HeckeElement out = a;
  const HeckeElement bb = to_basis(b, a.basis);
  for (const auto& [w, c] : bb.terms) {
    Int v = reduce(out.terms[w] + c);
    if (v == 0) out.terms.erase(w);
    else out.terms[w] = v;
  }
  return out;
}

HeckeElement HeckeAlgebra::scale(const HeckeElement& a, Int c) const {
  check_compatible(a);
  HeckeElement out = zero(a.basis);
  for (const auto& [w, x] : a.terms)
    if (Int v = reduce(x * reduce(c)); v != 0) out.terms.emplace(w, v);
  return out;
}

std::vector<AffineWeylElement> HeckeAlgebra::interval(const AffineWeylElement& w) const {
  const AffineWeylElement rep = canonical(w);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = intervals_.find(rep); it != intervals_.end()) return it->second;
  }
  std::optional<std::vector<AffineWeylElement>> got;
  const std::string key = store_ ? interval_key(rep) : std::string();
  if (store_) got = store_->load(key);
  if (!got) {
    got = group_->enumerate_lower_interval(rep, facet_, cap_);
    if (store_) store_->store(key, *got);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  intervals_.emplace(rep, *got);
  return *got;
}

HeckeElement HeckeAlgebra::to_basis(const HeckeElement& a, HeckeBasis basis) const {
  check_compatible(a);
  if (a.basis == basis) return a;
  HeckeElement out = zero(basis);
  if (basis == HeckeBasis::Indicator) {
    std::map<AffineWeylElement, Int> acc;
    for (const auto& [w, c] : a.terms)
      for (const auto& v : interval(w)) acc[v] += c;
    for (const auto& [v, c] : acc)
      if (Int r = reduce(c); r != 0) out.terms.emplace(v, r);
    return out;
  }
  // Peel off the longest term: phi_w is 1_w plus strictly shorter classes.
  std::map<std::pair<int, AffineWeylElement>, Int> rest;
  for (const auto& [w, c] : a.terms) rest[{group_->length(w), w}] = c;
  while (!rest.empty()) {
    auto top = std::prev(rest.end());
    const AffineWeylElement w = top->first.second;
    const Int c = top->second;
    out.terms.emplace(w, c);
    for (const auto& v : interval(w)) {
      auto key = std::make_pair(group_->length(v), v);
      Int r = reduce(rest[key] - c);
      if (r == 0) rest.erase(key);
      else rest[key] = r;
    }
  }
  return out;
}

std::pair<AffineWeylElement, ConvolutionWitness> HeckeAlgebra::convolve_phi_classes(const AffineWeylElement& w1,
                                                                                    const AffineWeylElement& w2) const {
  ConvolutionWitness wit;
  wit.w1 = canonical(w1);
  wit.w2 = canonical(w2);
  LeftOmegaWord left = group_->reduced_word_left(wit.w1);
  RightOmegaWord right = group_->reduced_word(wit.w2);
  wit.tau1 = left.tau;
  wit.word1 = left.word;
  wit.word2 = right.word;
  wit.tau2 = right.tau;
  wit.result = replay(wit);
  std::vector<int> word = wit.word1;
  word.insert(word.end(), wit.word2.begin(), wit.word2.end());
  wit.demazure = group_->multiply(group_->multiply(wit.tau1, group_->demazure_product(word)), wit.tau2);
  return {wit.result, wit};
}

AffineWeylElement HeckeAlgebra::replay(const ConvolutionWitness& witness) const {
  std::vector<int> word = witness.word1;
  word.insert(word.end(), witness.word2.begin(), witness.word2.end());
  const AffineWeylElement dem = group_->demazure_product(word);
  return canonical(group_->multiply(group_->multiply(witness.tau1, dem), witness.tau2));
}

HeckeElement HeckeAlgebra::convolve(const HeckeElement& a, const HeckeElement& b) const {
  const HeckeElement pa = to_basis(a, HeckeBasis::Phi);
  const HeckeElement pb = to_basis(b, HeckeBasis::Phi);
  std::map<AffineWeylElement, Int> acc;
  for (const auto& [w1, c1] : pa.terms)
    for (const auto& [w2, c2] : pb.terms) acc[convolve_phi_classes(w1, w2).first] += c1 * c2;
  HeckeElement out = zero(HeckeBasis::Phi);
  for (const auto& [w, c] : acc)
    if (Int r = reduce(c); r != 0) out.terms.emplace(w, r);
  return to_basis(out, a.basis);
}

Polynomial HeckeAlgebra::point_count(const AffineWeylElement& w) const {
  Polynomial p;
  for (const auto& u : group_->cells_below(canonical(w), facet_, cap_)) p += Polynomial::monomial(group_->length(u));
  return p;
}

}  // namespace modp
