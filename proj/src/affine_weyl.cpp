#include "modp/affine_weyl.hpp"

#include "modp/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace modp {

namespace {

using ElementSet = std::unordered_set<AffineWeylElement, AffineWeylElementHash>;

}  // namespace

bool Facet::contains(int i) const { return std::binary_search(indices.begin(), indices.end(), i); }

AffineWeylGroup::AffineWeylGroup(RootDatum datum) : datum_(std::move(datum)) {
  const int r = datum_.semisimple_rank();
  const int nc = datum_.num_components();
  auto affine_of = [&](int c) {
    const int theta = datum_.highest_root(c);
    const Root& t = datum_.roots()[static_cast<std::size_t>(theta)];
    simple_.push_back(AffineWeylElement{t.coroot, datum_.reflection(theta)});
    simple_roots_.push_back(AffineRoot{datum_.negative_of(theta), 1});
    index_component_.push_back(c);
  };
  affine_of(0);
  for (int i = 0; i < r; ++i) {
    simple_.push_back(from_finite(datum_.finite_simple_reflection(i)));
    simple_roots_.push_back(AffineRoot{datum_.simple_root(i), 0});
    index_component_.push_back(datum_.component_of_simple(i));
  }
  for (int c = 1; c < nc; ++c) affine_of(c);
}

std::size_t AffineWeylGroup::check_index(int i) const {
  if (i < 0 || i >= num_simple()) {
    std::ostringstream os;
    os << "affine simple index " << i << " out of range 0.." << num_simple() - 1;
    throw InvalidInput(os.str());
  }
  return static_cast<std::size_t>(i);
}

int AffineWeylGroup::component_of_index(int i) const { return index_component_[check_index(i)]; }

std::vector<int> AffineWeylGroup::component_indices(int c) const {
  std::vector<int> out;
  for (int i = 0; i < num_simple(); ++i)
    if (index_component_[static_cast<std::size_t>(i)] == c) out.push_back(i);
  return out;
}

AffineWeylElement AffineWeylGroup::identity() const {
  return AffineWeylElement{IntVec(static_cast<std::size_t>(datum_.lattice_rank()), 0), datum_.finite_identity()};
}

AffineWeylElement AffineWeylGroup::translation(const IntVec& lambda) const {
  if (static_cast<int>(lambda.size()) != datum_.lattice_rank()) throw InvalidInput("translation has wrong dimension");
  return AffineWeylElement{lambda, datum_.finite_identity()};
}

AffineWeylElement AffineWeylGroup::from_finite(const FiniteWeylElement& u) const {
  return AffineWeylElement{IntVec(static_cast<std::size_t>(datum_.lattice_rank()), 0), u};
}

const AffineWeylElement& AffineWeylGroup::simple_reflection(int i) const { return simple_[check_index(i)]; }

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& a, const AffineWeylElement& b) const {
  return AffineWeylElement{add(a.translation, datum_.apply(a.finite, b.translation)), datum_.multiply(a.finite, b.finite)};
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& w) const {
  FiniteWeylElement ui = datum_.inverse(w.finite);
  return AffineWeylElement{scale(datum_.apply(ui, w.translation), -1), ui};
}

AffineWeylElement AffineWeylGroup::from_word(const std::vector<int>& word) const {
  AffineWeylElement x = identity();
  for (int i : word) x = multiply(x, simple_reflection(i));
  return x;
}

AffineRoot AffineWeylGroup::apply(const AffineWeylElement& w, const AffineRoot& a) const {
  const int ub = datum_.apply_to_root(w.finite, a.root);
  return AffineRoot{ub, a.constant - datum_.pair(ub, w.translation)};
}

int AffineWeylGroup::length(const AffineWeylElement& w) const {
  const auto& roots = datum_.roots();
  Int total = 0;
  for (std::size_t b = 0; b < roots.size(); ++b) {
    const int ub = datum_.apply_to_root(w.finite, static_cast<int>(b));
    if (!roots[static_cast<std::size_t>(ub)].positive) continue;
    const Int m = datum_.pair(ub, w.translation);
    total += roots[b].positive ? (m < 0 ? -m : m) : (m - 1 < 0 ? 1 - m : m - 1);
  }
  return static_cast<int>(total);
}

bool AffineWeylGroup::is_left_descent(const AffineWeylElement& w, int i) const {
  const AffineRoot& a = simple_roots_[check_index(i)];
  const Int m = datum_.pair(a.root, w.translation) + a.constant;
  if (m != 0) return m < 0;
  const int back = datum_.apply_inverse_to_root(w.finite, a.root);
  return !datum_.roots()[static_cast<std::size_t>(back)].positive;
}

bool AffineWeylGroup::is_right_descent(const AffineWeylElement& w, int i) const {
  return !apply(w, simple_roots_[check_index(i)]).positive(datum_);
}

RightOmegaWord AffineWeylGroup::reduced_word(const AffineWeylElement& w) const {
  RightOmegaWord out;
  AffineWeylElement x = w;
  for (bool found = true; found;) {
    found = false;
    for (int i = 0; i < num_simple(); ++i) {
      if (is_left_descent(x, i)) {
        out.word.push_back(i);
        x = multiply(simple_[static_cast<std::size_t>(i)], x);
        found = true;
        break;
      }
    }
  }
  out.tau = std::move(x);
  return out;
}

LeftOmegaWord AffineWeylGroup::reduced_word_left(const AffineWeylElement& w) const {
  LeftOmegaWord out;
  AffineWeylElement x = w;
  for (bool found = true; found;) {
    found = false;
    for (int i = 0; i < num_simple(); ++i) {
      if (is_right_descent(x, i)) {
        out.word.push_back(i);
        x = multiply(x, simple_[static_cast<std::size_t>(i)]);
        found = true;
        break;
      }
    }
  }
  std::reverse(out.word.begin(), out.word.end());
  out.tau = std::move(x);
  return out;
}

int AffineWeylGroup::omega_conjugate(const AffineWeylElement& tau, int i) const {
  const AffineWeylElement c = multiply(multiply(tau, simple_reflection(i)), inverse(tau));
  for (int j = 0; j < num_simple(); ++j)
    if (simple_[static_cast<std::size_t>(j)] == c) return j;
  throw PreconditionError("omega_conjugate: element does not normalize the simple reflections");
}

std::vector<AffineWeylElement> AffineWeylGroup::omega_elements() const {
  std::set<AffineWeylElement> out;
  for (const IntVec& nu : datum_.fundamental_group_representatives()) out.insert(omega_part(translation(nu)));
  return {out.begin(), out.end()};
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& w) const {
  const int lu = length(u);
  const int lw = length(w);
  if (lu > lw) return false;
  if (lw == 0) return u == w;
  if (lu == lw) return u == w;
  auto key = std::make_pair(u, w);
  {
    std::lock_guard<std::mutex> lock(bruhat_mutex_);
    auto it = bruhat_cache_.find(key);
    if (it != bruhat_cache_.end()) return it->second;
  }
  const bool result = bruhat_leq_uncached(u, w);
  std::lock_guard<std::mutex> lock(bruhat_mutex_);
  bruhat_cache_.emplace(std::move(key), result);
  return result;
}

bool AffineWeylGroup::bruhat_leq_uncached(const AffineWeylElement& u, const AffineWeylElement& w) const {
  int s = 0;
  while (!is_left_descent(w, s)) ++s;
  const AffineWeylElement sw = multiply(simple_[static_cast<std::size_t>(s)], w);
  if (is_left_descent(u, s)) return bruhat_leq(multiply(simple_[static_cast<std::size_t>(s)], u), sw);
  return bruhat_leq(u, sw);
}

AffineWeylElement AffineWeylGroup::demazure_product(const std::vector<int>& word) const {
  AffineWeylElement x = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (!is_left_descent(x, *it)) x = multiply(simple_reflection(*it), x);
  return x;
}

AffineWeylElement AffineWeylGroup::demazure_product(const AffineWeylElement& a, const AffineWeylElement& b) const {
  // a * b = x_a tau_a x_b tau_b = x_a (tau_a x_b tau_a^{-1}) tau_a tau_b.
  RightOmegaWord ra = reduced_word(a);
  RightOmegaWord rb = reduced_word(b);
  std::vector<int> word = ra.word;
  for (int i : rb.word) word.push_back(omega_conjugate(ra.tau, i));
  return multiply(demazure_product(word), multiply(ra.tau, rb.tau));
}

Facet AffineWeylGroup::make_facet(std::vector<int> indices, std::size_t cap) const {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  for (int i : indices) check_index(i);
  for (int c = 0; c < datum_.num_components(); ++c) {
    const auto all = component_indices(c);
    if (std::includes(indices.begin(), indices.end(), all.begin(), all.end()))
      throw InvalidInput("facet contains a full affine component and generates an infinite group");
  }
  Facet f;
  f.indices = indices;
  ElementSet seen{identity()};
  f.elements.push_back(identity());
  for (std::size_t k = 0; k < f.elements.size(); ++k) {
    for (int j : indices) {
      AffineWeylElement y = multiply(f.elements[k], simple_[static_cast<std::size_t>(j)]);
      if (seen.insert(y).second) {
        f.elements.push_back(std::move(y));
        if (f.elements.size() > cap) throw CapExceeded("parabolic subgroup exceeds cap");
      }
    }
  }
  f.longest = identity();
  int best = 0;
  for (const auto& x : f.elements) {
    const int l = length(x);
    if (l > best) {
      best = l;
      f.longest = x;
    }
  }
  return f;
}

Facet AffineWeylGroup::hyperspecial() const {
  std::vector<int> j;
  for (int i = 1; i <= datum_.semisimple_rank(); ++i) j.push_back(i);
  return make_facet(j);
}

bool AffineWeylGroup::is_special(const Facet& f) const {
  if (static_cast<Int>(f.size()) != datum_.weyl_group_order()) return false;
  std::set<FiniteWeylElement> finite;
  for (const auto& x : f.elements) finite.insert(x.finite);
  return finite.size() == f.size();
}

AffineWeylElement AffineWeylGroup::min_coset_rep(const AffineWeylElement& w, const Facet& f) const {
  AffineWeylElement x = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (int j : f.indices) {
      if (is_right_descent(x, j)) {
        x = multiply(x, simple_[static_cast<std::size_t>(j)]);
        moved = true;
      }
    }
  }
  return x;
}

AffineWeylElement AffineWeylGroup::min_left_coset_rep(const AffineWeylElement& w, const Facet& f) const {
  AffineWeylElement x = w;
  for (bool moved = true; moved;) {
    moved = false;
    for (int j : f.indices) {
      if (is_left_descent(x, j)) {
        x = multiply(simple_[static_cast<std::size_t>(j)], x);
        moved = true;
      }
    }
  }
  return x;
}

AffineWeylElement AffineWeylGroup::double_coset_rep(const AffineWeylElement& w, const Facet& f) const {
  if (f.indices.empty()) return w;
  AffineWeylElement best = min_coset_rep(w, f);
  int best_len = length(best);
  bool tied = false;
  for (const auto& v : f.elements) {
    AffineWeylElement x = min_coset_rep(multiply(v, w), f);
    const int l = length(x);
    if (l > best_len) {
      best = std::move(x);
      best_len = l;
      tied = false;
    } else if (l == best_len && x != best) {
      tied = true;
    }
  }
  if (tied) throw std::logic_error("double_coset_rep: maximal representative is not unique");
  return best;
}

AffineWeylElement AffineWeylGroup::double_coset_max(const AffineWeylElement& w, const Facet& f) const {
  return multiply(double_coset_rep(w, f), f.longest);
}

std::vector<AffineWeylElement> AffineWeylGroup::lower_interval(const AffineWeylElement& w, std::size_t cap) const {
  const RightOmegaWord rw = reduced_word(w);
  std::vector<AffineWeylElement> current{identity()};
  ElementSet seen{identity()};
  for (auto it = rw.word.rbegin(); it != rw.word.rend(); ++it) {
    const std::size_t n = current.size();
    for (std::size_t k = 0; k < n; ++k) {
      AffineWeylElement y = multiply(simple_[static_cast<std::size_t>(*it)], current[k]);
      if (seen.insert(y).second) {
        current.push_back(std::move(y));
        if (current.size() > cap) {
          std::ostringstream os;
          os << "Bruhat interval exceeds cap " << cap;
          throw CapExceeded(os.str());
        }
      }
    }
  }
  std::vector<std::pair<int, AffineWeylElement>> keyed;
  keyed.reserve(current.size());
  for (auto& x : current) {
    AffineWeylElement y = multiply(x, rw.tau);
    keyed.emplace_back(length(y), std::move(y));
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<AffineWeylElement> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

std::vector<AffineWeylElement> AffineWeylGroup::enumerate_lower_interval(const AffineWeylElement& w, const Facet& f,
                                                                         std::size_t cap) const {
  const AffineWeylElement top = double_coset_rep(w, f);
  const auto interval = lower_interval(multiply(top, f.longest), cap);
  std::set<std::pair<int, AffineWeylElement>> reps;
  for (const auto& x : interval) {
    bool minimal = true;
    for (int j : f.indices)
      if (is_right_descent(x, j) || is_left_descent(x, j)) minimal = false;
    if (!minimal) continue;
    AffineWeylElement r = double_coset_rep(x, f);
    if (!bruhat_leq(r, top)) throw std::logic_error("enumerate_lower_interval: representative escaped the interval");
    reps.emplace(length(r), std::move(r));
  }
  std::vector<AffineWeylElement> out;
  for (const auto& kv : reps) out.push_back(kv.second);
  return out;
}

std::vector<AffineWeylElement> AffineWeylGroup::cells_below(const AffineWeylElement& w, const Facet& f, std::size_t cap) const {
  const auto interval = lower_interval(double_coset_max(w, f), cap);
  std::vector<AffineWeylElement> out;
  for (const auto& x : interval) {
    bool minimal = true;
    for (int j : f.indices)
      if (is_right_descent(x, j)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<AffineWeylElement> AffineWeylGroup::elements_up_to_length(int max_length, std::size_t cap) const {
  std::vector<AffineWeylElement> out = omega_elements();
  std::vector<AffineWeylElement> level = out;
  for (int l = 0; l < max_length; ++l) {
    std::set<AffineWeylElement> next;
    for (const auto& x : level)
      for (int i = 0; i < num_simple(); ++i)
        if (!is_left_descent(x, i)) next.insert(multiply(simple_[static_cast<std::size_t>(i)], x));
    level.assign(next.begin(), next.end());
    out.insert(out.end(), level.begin(), level.end());
    if (out.size() > cap) throw CapExceeded("element enumeration exceeds cap");
  }
  return out;
}

std::vector<AffineWeylElement> AffineWeylGroup::double_coset_reps_up_to_length(const Facet& f, int max_length,
                                                                               std::size_t cap) const {
  std::vector<AffineWeylElement> out;
  for (const auto& x : elements_up_to_length(max_length, cap)) {
    bool minimal = true;
    for (int j : f.indices)
      if (is_right_descent(x, j)) minimal = false;
    if (minimal && double_coset_rep(x, f) == x) out.push_back(x);
  }
  return out;
}

}  // namespace modp
