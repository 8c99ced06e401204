#pragma once

#include "modp/affine_weyl.hpp"
#include "modp/polynomial.hpp"

#include <string>
#include <vector>

namespace modp {

/// Element grammar, factors joined by '*':
///   e            identity
///   s3           simple reflection (affine index)
///   s0,1,0       word shorthand for s0*s1*s0
///   t[1,-2]      translation, coordinates in the basis of X
///   w[1,2]       finite Weyl element from a word in finite indices 1..r
AffineWeylElement parse_element(const AffineWeylGroup& g, const std::string& text);

/// "t[...]*w[...]" with the finite word reduced; "e" for the identity.
std::string format_element(const AffineWeylGroup& g, const AffineWeylElement& w);

/// Reduced word with the length-zero part appended: "s0*s1", "s1*t[1]*w[1]".
std::string format_word(const AffineWeylGroup& g, const AffineWeylElement& w);

/// Comma separated integers; empty string gives an empty list.
std::vector<int> parse_index_list(const std::string& text);
std::vector<Int> parse_int_list(const std::string& text);
std::string format_index_list(const std::vector<int>& v);
std::string format_int_list(const IntVec& v);

}  // namespace modp
