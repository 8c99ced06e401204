#include "modp/root_datum.hpp"

#include "modp/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace modp {

namespace {

void check_type(const DynkinComponent& c) {
  const int n = c.rank;
  bool ok = false;
  switch (c.letter) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok) {
    std::ostringstream os;
    os << "invalid Dynkin type " << c.letter << n;
    throw InvalidInput(os.str());
  }
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<DynkinComponent> parse_type_list(const std::string& text) {
  std::vector<DynkinComponent> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (letter < 'A' || letter > 'G') throw ParseError("bad Dynkin letter in '" + text + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("missing rank in '" + text + "'");
    DynkinComponent c{letter, std::stoi(text.substr(start, pos - start))};
    check_type(c);
    out.push_back(c);
    if (pos < text.size()) {
      if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '+')
        throw ParseError("unexpected character in type '" + text + "'");
      ++pos;
      if (pos == text.size()) throw ParseError("dangling separator in '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError("empty Dynkin type");
  return out;
}

}  // namespace

IntMatrix cartan_matrix_of(const DynkinComponent& c) {
  check_type(c);
  const int n = c.rank;
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto bond = [&](int i, int j, Int aij, Int aji) {
    a(i, j) = aij;
    a(j, i) = aji;
  };
  switch (c.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'B':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -1, -2);
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 3, n - 1, -1, -1);
      break;
    case 'E':
      // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
      bond(0, 2, -1, -1);
      bond(1, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case 'F':
      bond(0, 1, -1, -1);
      bond(1, 2, -1, -2);
      bond(2, 3, -1, -1);
      break;
    case 'G':
      bond(0, 1, -3, -1);
      break;
    default:
      break;
  }
  return a;
}

std::string CartanDatum::canonical_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) os << 'x';
    os << components[i].letter << components[i].rank;
  }
  switch (lattice) {
    case LatticeChoice::SimplyConnected: os << ":sc"; break;
    case LatticeChoice::Adjoint: os << ":ad"; break;
    case LatticeChoice::Explicit: {
      os << ":explicit[";
      for (int i = 0; i < lattice_basis.rows(); ++i) {
        if (i) os << ';';
        for (int j = 0; j < lattice_basis.cols(); ++j) {
          if (j) os << ',';
          os << lattice_basis(i, j);
        }
      }
      os << ']';
      break;
    }
  }
  return os.str();
}

namespace {

// "1,0;0,2" -> rows of an explicit lattice basis.
CartanDatum with_explicit_rows(CartanDatum d, const std::string& body) {
  std::vector<IntVec> rows;
  std::stringstream rs(body);
  std::string row;
  while (std::getline(rs, row, ';')) {
    IntVec r;
    std::stringstream es(row);
    std::string entry;
    while (std::getline(es, entry, ',')) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoll(entry, &used));
        if (used != entry.size()) throw ParseError("bad lattice entry '" + entry + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad lattice entry '" + entry + "'");
      }
    }
    rows.push_back(std::move(r));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw ParseError("explicit lattice needs at least one row");
  IntMatrix b(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) throw ParseError("explicit lattice must be square");
    for (int k = 0; k < n; ++k) b(i, k) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  }
  d.lattice = LatticeChoice::Explicit;
  d.lattice_basis = b;
  return d;
}

}  // namespace

CartanDatum parse_cartan_datum(const std::string& text) {
  CartanDatum d;
  std::string type = text;
  std::string suffix = "sc";
  if (auto colon = text.find(':'); colon != std::string::npos) {
    type = text.substr(0, colon);
    suffix = text.substr(colon + 1);
  }
  d.components = parse_type_list(type);
  if (suffix == "sc")
    d.lattice = LatticeChoice::SimplyConnected;
  else if (suffix == "ad")
    d.lattice = LatticeChoice::Adjoint;
  else if (suffix.rfind("explicit[", 0) == 0 && suffix.back() == ']')
    d = with_explicit_rows(std::move(d), suffix.substr(9, suffix.size() - 10));
  else
    throw ParseError("unknown lattice suffix '" + suffix + "' (expected sc, ad or explicit[...])");
  return d;
}

CartanDatum parse_cartan_datum_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("datum JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type")) throw ParseError("datum JSON needs a 'type' field");
  CartanDatum d;
  try {
    std::string type = j.at("type").get<std::string>();
    if (j.contains("rank")) type += std::to_string(j.at("rank").get<int>());
    d.components = parse_type_list(type);
    if (!j.contains("lattice_basis")) {
      const std::string lattice = j.value("lattice", std::string("sc"));
      d.lattice = lattice == "ad" ? LatticeChoice::Adjoint : LatticeChoice::SimplyConnected;
      return d;
    }
    const auto& rows = j.at("lattice_basis");
    if (!rows.is_array() || rows.empty()) throw ParseError("lattice_basis must be a non-empty matrix");
    const int n = static_cast<int>(rows.size());
    IntMatrix b(n, n);
    for (int i = 0; i < n; ++i) {
      if (!rows[static_cast<std::size_t>(i)].is_array() || static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
        throw ParseError("lattice_basis must be square");
      for (int k = 0; k < n; ++k) {
        const auto& entry = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        if (!entry.is_number_integer()) throw ParseError("lattice_basis entries must be integers");
        b(i, k) = entry.get<Int>();
      }
    }
    d.lattice = LatticeChoice::Explicit;
    d.lattice_basis = b;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("datum JSON: ") + e.what());
  }
  return d;
}

RootDatum::RootDatum(const CartanDatum& cartan) : cartan_(cartan) {
  if (cartan_.components.empty()) throw InvalidInput("root datum needs at least one component");
  for (const auto& c : cartan_.components) {
    check_type(c);
    component_offset_.push_back(rank_);
    for (int i = 0; i < c.rank; ++i) simple_component_.push_back(static_cast<int>(component_offset_.size()) - 1);
    rank_ += c.rank;
  }
  cartan_matrix_ = IntMatrix(rank_, rank_);
  for (std::size_t c = 0; c < cartan_.components.size(); ++c) {
    const IntMatrix block = cartan_matrix_of(cartan_.components[c]);
    const int off = component_offset_[c];
    for (int i = 0; i < block.rows(); ++i)
      for (int j = 0; j < block.cols(); ++j) cartan_matrix_(off + i, off + j) = block(i, j);
  }

  switch (cartan_.lattice) {
    case LatticeChoice::SimplyConnected: basis_ = cartan_matrix_; break;
    case LatticeChoice::Adjoint: basis_ = IntMatrix::identity(rank_); break;
    case LatticeChoice::Explicit:
      basis_ = cartan_.lattice_basis;
      if (basis_.rows() != basis_.cols() || basis_.rows() < rank_)
        throw InvalidInput("lattice basis must be square of size >= semisimple rank");
      break;
  }
  dim_ = basis_.rows();

  // Simple coroots in X coordinates: solve x * B = (cartan row i, 0...).
  std::vector<IntVec> simple_coroots;
  for (int i = 0; i < rank_; ++i) {
    std::vector<Rational> target(static_cast<std::size_t>(dim_), Rational(0));
    for (int j = 0; j < rank_; ++j) target[static_cast<std::size_t>(j)] = cartan_matrix_(i, j);
    auto x = solve_left(basis_, target);
    if (!x) throw InvalidInput("lattice basis is singular");
    IntVec v;
    for (const auto& r : *x) {
      if (r.denominator() != 1) throw InvalidInput("coweight lattice does not contain the coroot lattice");
      v.push_back(r.numerator());
    }
    simple_coroots.push_back(v);
  }

  // Close the simple roots under simple reflections.
  std::map<IntVec, int> by_coeffs;
  std::deque<int> queue;
  auto add_root = [&](Root r) {
    auto [it, inserted] = by_coeffs.emplace(r.simple_coefficients, static_cast<int>(roots_.size()));
    if (!inserted) return;
    roots_.push_back(std::move(r));
    queue.push_back(it->second);
  };
  for (int i = 0; i < rank_; ++i) {
    Root r;
    r.simple_coefficients.assign(static_cast<std::size_t>(rank_), 0);
    r.simple_coefficients[static_cast<std::size_t>(i)] = 1;
    r.dual = basis_.col(i);
    r.coroot = simple_coroots[static_cast<std::size_t>(i)];
    add_root(std::move(r));
  }
  while (!queue.empty()) {
    const Root beta = roots_[static_cast<std::size_t>(queue.front())];
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      const Root& ai = roots_[static_cast<std::size_t>(i)];
      const Int c = dot(beta.dual, ai.coroot);       // <beta, alpha_i^vee>
      const Int cv = dot(ai.dual, beta.coroot);      // <alpha_i, beta^vee>
      Root r;
      r.simple_coefficients = beta.simple_coefficients;
      r.simple_coefficients[static_cast<std::size_t>(i)] -= c;
      r.dual = sub(beta.dual, scale(ai.dual, c));
      r.coroot = sub(beta.coroot, scale(ai.coroot, cv));
      add_root(std::move(r));
    }
  }
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    Root& r = roots_[k];
    const bool nonneg = std::all_of(r.simple_coefficients.begin(), r.simple_coefficients.end(), [](Int x) { return x >= 0; });
    const bool nonpos = std::all_of(r.simple_coefficients.begin(), r.simple_coefficients.end(), [](Int x) { return x <= 0; });
    if (!nonneg && !nonpos) throw InvalidInput("root closure produced a root of mixed sign");
    r.positive = nonneg;
    r.height = 0;
    for (Int x : r.simple_coefficients) r.height += static_cast<int>(x);
    if (r.positive) positive_.push_back(static_cast<int>(k));
    by_coroot_.emplace(r.coroot, static_cast<int>(k));
    by_dual_.emplace(r.dual, static_cast<int>(k));
  }
  if (roots_.size() != 2 * positive_.size()) throw InvalidInput("root system is not symmetric");
  for (int i = 0; i < rank_; ++i) simple_index_.push_back(i);
  for (std::size_t k = 0; k < roots_.size(); ++k) {
    auto it = by_coroot_.find(scale(roots_[k].coroot, -1));
    if (it == by_coroot_.end()) throw InvalidInput("root system is not closed under negation");
    negative_.push_back(it->second);
  }
  for (std::size_t c = 0; c < cartan_.components.size(); ++c) {
    int best = -1;
    for (int k : positive_) {
      const Root& r = roots_[static_cast<std::size_t>(k)];
      bool inside = true;
      for (int i = 0; i < rank_; ++i)
        if (r.simple_coefficients[static_cast<std::size_t>(i)] != 0 && simple_component_[static_cast<std::size_t>(i)] != static_cast<int>(c))
          inside = false;
      if (inside && (best < 0 || r.height > roots_[static_cast<std::size_t>(best)].height)) best = k;
    }
    highest_.push_back(best);
  }
  for (int i = 0; i < rank_; ++i) simple_reflections_.push_back(reflection(i));

  IntMatrix coroot_rows(rank_, dim_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < dim_; ++j) coroot_rows(i, j) = simple_coroots[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  pi1_ = smith_normal_form(coroot_rows);
}

int RootDatum::root_by_coroot(const IntVec& coroot) const {
  auto it = by_coroot_.find(coroot);
  return it == by_coroot_.end() ? -1 : it->second;
}

int RootDatum::root_by_dual(const IntVec& dual) const {
  auto it = by_dual_.find(dual);
  return it == by_dual_.end() ? -1 : it->second;
}

int RootDatum::apply_inverse_to_root(const FiniteWeylElement& u, int root) const {
  // <u^{-1} beta, x> = <beta, u x>, so the functional of u^{-1} beta is dual * u.
  const IntVec& d = roots_[static_cast<std::size_t>(root)].dual;
  IntVec out(static_cast<std::size_t>(dim_), 0);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i) out[static_cast<std::size_t>(j)] += d[static_cast<std::size_t>(i)] * u.matrix(i, j);
  return root_by_dual(out);
}

FiniteWeylElement RootDatum::inverse(const FiniteWeylElement& u) const {
  auto inv = integer_inverse(u.matrix);
  if (!inv) throw std::logic_error("Weyl group element with non-integral inverse");
  return FiniteWeylElement{*inv};
}

int RootDatum::negative_of(int root) const { return negative_[static_cast<std::size_t>(root)]; }

Int RootDatum::pair(int root, const IntVec& coweight) const { return dot(roots_[static_cast<std::size_t>(root)].dual, coweight); }

std::vector<Rational> RootDatum::fundamental_coweight(int i) const {
  std::vector<Rational> target(static_cast<std::size_t>(dim_), Rational(0));
  target[static_cast<std::size_t>(i)] = 1;
  return *solve_left(basis_, target);
}

bool RootDatum::is_antidominant(const IntVec& coweight) const {
  for (int i = 0; i < rank_; ++i)
    if (pair(simple_root(i), coweight) > 0) return false;
  return true;
}

std::pair<IntVec, FiniteWeylElement> RootDatum::antidominant_representative(const IntVec& coweight) const {
  IntVec z = coweight;
  FiniteWeylElement u = finite_identity();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rank_; ++i) {
      if (pair(simple_root(i), z) > 0) {
        z = apply(simple_reflections_[static_cast<std::size_t>(i)], z);
        u = multiply(simple_reflections_[static_cast<std::size_t>(i)], u);
        moved = true;
        break;
      }
    }
  }
  return {z, u};
}

IntVec RootDatum::fundamental_group_class(const IntVec& coweight) const { return quotient_class(pi1_, coweight); }

std::optional<Int> RootDatum::fundamental_group_order() const {
  if (dim_ != rank_) return std::nullopt;
  Int order = 1;
  for (Int d : pi1_.diagonal) order *= d;
  return order;
}

std::vector<IntVec> RootDatum::fundamental_group_representatives() const {
  if (dim_ != rank_) throw PreconditionError("fundamental group is infinite (central torus present)");
  std::vector<IntVec> out;
  IntVec y(static_cast<std::size_t>(dim_), 0);
  std::vector<std::size_t> free_slots;
  for (std::size_t j = 0; j < pi1_.diagonal.size(); ++j)
    if (pi1_.diagonal[j] > 1) free_slots.push_back(j);
  for (;;) {
    IntVec v(static_cast<std::size_t>(dim_), 0);
    for (int j = 0; j < dim_; ++j)
      for (int i = 0; i < dim_; ++i) v[static_cast<std::size_t>(j)] += y[static_cast<std::size_t>(i)] * pi1_.v_inverse(i, j);
    out.push_back(v);
    std::size_t k = 0;
    for (; k < free_slots.size(); ++k) {
      auto& slot = y[free_slots[k]];
      if (++slot < pi1_.diagonal[free_slots[k]]) break;
      slot = 0;
    }
    if (k == free_slots.size()) break;
  }
  return out;
}

FiniteWeylElement RootDatum::finite_identity() const { return FiniteWeylElement{IntMatrix::identity(dim_)}; }

FiniteWeylElement RootDatum::reflection(int root) const {
  const Root& r = roots_[static_cast<std::size_t>(root)];
  // s(v) = v - <beta, v> beta^vee
  IntMatrix m = IntMatrix::identity(dim_);
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) m(a, b) -= r.coroot[static_cast<std::size_t>(a)] * r.dual[static_cast<std::size_t>(b)];
  return FiniteWeylElement{m};
}

FiniteWeylElement RootDatum::multiply(const FiniteWeylElement& a, const FiniteWeylElement& b) const {
  return FiniteWeylElement{a.matrix * b.matrix};
}

int RootDatum::apply_to_root(const FiniteWeylElement& u, int root) const {
  return root_by_coroot(u.matrix.apply(roots_[static_cast<std::size_t>(root)].coroot));
}

int RootDatum::length(const FiniteWeylElement& u) const {
  int n = 0;
  for (int k : positive_)
    if (!roots_[static_cast<std::size_t>(apply_to_root(u, k))].positive) ++n;
  return n;
}

std::vector<int> RootDatum::reduced_word(const FiniteWeylElement& u) const {
  std::vector<int> word;
  FiniteWeylElement x = u;
  int len = length(x);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i < rank_; ++i) {
      FiniteWeylElement y = multiply(simple_reflections_[static_cast<std::size_t>(i)], x);
      const int ly = length(y);
      if (ly < len) {
        word.push_back(i + 1);
        x = std::move(y);
        len = ly;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word: no descent found");
  }
  return word;
}

FiniteWeylElement RootDatum::from_word(const std::vector<int>& word) const {
  FiniteWeylElement x = finite_identity();
  for (int i : word) {
    if (i < 1 || i > rank_) throw InvalidInput("finite simple index out of range");
    x = multiply(x, simple_reflections_[static_cast<std::size_t>(i - 1)]);
  }
  return x;
}

Int RootDatum::weyl_group_order() const {
  Int order = 1;
  for (const auto& c : cartan_.components) {
    const int n = c.rank;
    switch (c.letter) {
      case 'A': order *= factorial(n + 1); break;
      case 'B':
      case 'C': order *= (Int{1} << n) * factorial(n); break;
      case 'D': order *= (Int{1} << (n - 1)) * factorial(n); break;
      case 'E': order *= n == 6 ? 51840 : n == 7 ? 2903040 : 696729600; break;
      case 'F': order *= 1152; break;
      case 'G': order *= 12; break;
      default: break;
    }
  }
  return order;
}

std::vector<FiniteWeylElement> RootDatum::weyl_group_elements(std::size_t cap) const {
  std::set<FiniteWeylElement> seen{finite_identity()};
  std::vector<FiniteWeylElement> out{finite_identity()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      FiniteWeylElement y = multiply(simple_reflections_[static_cast<std::size_t>(i)], out[k]);
      if (seen.insert(y).second) {
        out.push_back(y);
        if (out.size() > cap) throw CapExceeded("finite Weyl group larger than cap");
      }
    }
  }
  return out;
}

}  // namespace modp
