#include "modp/format.hpp"

#include "modp/errors.hpp"

#include <cctype>
#include <sstream>

namespace modp {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Int parse_integer(const std::string& raw) {
  const std::string s = strip(raw);
  if (s.empty()) throw ParseError("expected an integer");
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw ParseError("not an integer: '" + s + "'");
  return static_cast<Int>(v);
}

std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string bracket_body(const std::string& factor) {
  if (factor.size() < 3 || factor[1] != '[' || factor.back() != ']') throw ParseError("malformed factor '" + factor + "'");
  return factor.substr(2, factor.size() - 3);
}

}  // namespace

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  const std::string s = strip(text);
  if (s.empty()) return out;
  for (const auto& piece : split_top(s, ',')) out.push_back(parse_integer(piece));
  return out;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  for (Int v : parse_int_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

std::string format_int_list(const IntVec& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  return os.str();
}

std::string format_index_list(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  return os.str();
}

AffineWeylElement parse_element(const AffineWeylGroup& g, const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty element string");
  AffineWeylElement x = g.identity();
  for (const auto& raw : split_top(s, '*')) {
    const std::string f = strip(raw);
    if (f.empty()) throw ParseError("empty factor in '" + s + "'");
    if (f == "e" || f == "1") continue;
    switch (f[0]) {
      case 's': {
        for (int i : parse_index_list(f.substr(1))) {
          if (i < 0 || i >= g.num_simple()) throw ParseError("simple index out of range in '" + f + "'");
          x = g.multiply(x, g.simple_reflection(i));
        }
        if (f.size() == 1) throw ParseError("missing index after 's'");
        break;
      }
      case 't': {
        IntVec lambda = parse_int_list(bracket_body(f));
        if (static_cast<int>(lambda.size()) != g.datum().lattice_rank()) {
          std::ostringstream os;
          os << "translation '" << f << "' needs " << g.datum().lattice_rank() << " coordinates";
          throw ParseError(os.str());
        }
        x = g.multiply(x, g.translation(lambda));
        break;
      }
      case 'w': {
        const auto word = parse_index_list(bracket_body(f));
        for (int i : word)
          if (i < 1 || i > g.datum().semisimple_rank()) throw ParseError("finite index out of range in '" + f + "'");
        x = g.multiply(x, g.from_finite(g.datum().from_word(word)));
        break;
      }
      default:
        throw ParseError("unrecognised factor '" + f + "'");
    }
  }
  return x;
}

std::string format_element(const AffineWeylGroup& g, const AffineWeylElement& w) {
  std::vector<std::string> parts;
  bool zero = true;
  for (Int c : w.translation) zero = zero && c == 0;
  if (!zero) parts.push_back("t[" + format_int_list(w.translation) + "]");
  const auto word = g.datum().reduced_word(w.finite);
  if (!word.empty()) parts.push_back("w[" + format_index_list(word) + "]");
  if (parts.empty()) return "e";
  return parts.size() == 1 ? parts[0] : parts[0] + "*" + parts[1];
}

std::string format_word(const AffineWeylGroup& g, const AffineWeylElement& w) {
  const RightOmegaWord rw = g.reduced_word(w);
  std::ostringstream os;
  bool first = true;
  for (int i : rw.word) {
    os << (first ? "" : "*") << 's' << i;
    first = false;
  }
  if (rw.tau != g.identity()) {
    os << (first ? "" : "*") << format_element(g, rw.tau);
    first = false;
  }
  return first ? "e" : os.str();
}

}  // namespace modp
