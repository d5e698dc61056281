#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weylpbc/symmetric_space.hpp"
#include "weylpbc/weyl.hpp"

namespace wpbc {

// Input format, bit-exact:
//   rank: <n>
//   tab:
//   <one bitstring of length n per line>
// Blank lines and '#' comments are ignored; character i of a bitstring is
// coordinate i. Throws ParseError with 1-based line/col, or the validation
// errors of the datum.
RootDatum parse_input(std::string_view text);

// Inverse of parse_input up to comments and blank lines.
std::string format_datum(const RootDatum& d);

// Word syntax: letters separated by ';', coordinates by ',', integers in
// decimal with optional sign, e.g. "1,0;3,-2". The empty string is the
// empty word.
std::vector<GVector> parse_word(std::string_view text, std::size_t rank);
std::string format_word(const std::vector<GVector>& word);

std::string format_gvector(const GVector& g);  // "(1,0)"
std::string format_weyl(const WeylElement& a);  // "l=(0) g=(0,0) v=+1"

}  // namespace wpbc
