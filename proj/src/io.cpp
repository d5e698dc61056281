#include "weylpbc/io.hpp"

#include <charconv>
#include <sstream>

#include "weylpbc/errors.hpp"

namespace wpbc {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::string_view drop_comment(std::string_view s) {
  const std::size_t hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

Int parse_int(std::string_view token, std::size_t line, std::size_t col) {
  token = strip(token);
  std::string_view digits = token;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw ParseError(line, col, "expected a decimal integer, got '" +
                                    std::string(token) + "'");
  const Int value{std::string(digits)};
  return negative ? -value : value;
}

}  // namespace

RootDatum parse_input(std::string_view text) {
  std::size_t rank = 0;
  bool seen_rank = false, seen_tab = false;
  std::vector<F2Vector> tab;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineno;

    std::string_view line = strip(drop_comment(raw));
    if (line.empty()) continue;

    if (!seen_rank) {
      if (!line.starts_with("rank:"))
        throw ParseError(lineno, 1, "expected 'rank: <n>'");
      std::string_view value = strip(line.substr(5));
      unsigned long long n = 0;
      const auto [ptr, ec] =
          std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc{} || ptr != value.data() + value.size() || n < 1)
        throw ParseError(lineno, 6, "rank must be a positive integer");
      rank = static_cast<std::size_t>(n);
      seen_rank = true;
      continue;
    }
    if (!seen_tab) {
      if (line != "tab:") throw ParseError(lineno, 1, "expected 'tab:'");
      seen_tab = true;
      continue;
    }
    if (line.size() != rank)
      throw ParseError(lineno, std::min(line.size(), rank) + 1,
                       "expected a bitstring of length " + std::to_string(rank));
    const std::size_t bad = line.find_first_not_of("01");
    if (bad != std::string_view::npos)
      throw ParseError(lineno, bad + 1, "bitstrings may contain only '0' and '1'");
    tab.push_back(F2Vector::from_string(line));
  }

  if (!seen_rank) throw ParseError(lineno, 1, "missing 'rank:' line");
  if (!seen_tab) throw ParseError(lineno, 1, "missing 'tab:' line");
  return validate(rank, std::move(tab));
}

std::string format_datum(const RootDatum& d) {
  std::string out = "rank: " + std::to_string(d.rank) + "\ntab:\n";
  for (const F2Vector& cls : d.tab) {
    out += cls.to_string();
    out += '\n';
  }
  return out;
}

std::vector<GVector> parse_word(std::string_view text, std::size_t rank) {
  std::vector<GVector> word;
  if (strip(text).empty()) return word;

  std::size_t start = 0;
  for (std::size_t index = 0;; ++index) {
    const std::size_t semi = text.find(';', start);
    std::string_view letter =
        text.substr(start, semi == std::string_view::npos ? text.size() - start
                                                          : semi - start);
    GVector g;
    std::size_t cstart = 0;
    while (true) {
      const std::size_t comma = letter.find(',', cstart);
      std::string_view token = letter.substr(
          cstart, comma == std::string_view::npos ? letter.size() - cstart
                                                  : comma - cstart);
      g.push_back(parse_int(token, 0, start + cstart + 1));
      if (comma == std::string_view::npos) break;
      cstart = comma + 1;
    }
    if (g.size() != rank)
      throw ParseError(0, start + 1,
                       "letter " + std::to_string(index) + " has " +
                           std::to_string(g.size()) + " coordinates, expected " +
                           std::to_string(rank));
    word.push_back(std::move(g));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return word;
}

namespace {

std::string join_ints(const std::vector<Int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

}  // namespace

std::string format_word(const std::vector<GVector>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ';';
    out += join_ints(word[i]);
  }
  return out;
}

std::string format_gvector(const GVector& g) { return "(" + join_ints(g) + ")"; }

std::string format_weyl(const WeylElement& a) {
  return "l=" + format_gvector(a.twist) + " g=" + format_gvector(a.trans) +
         " v=" + (a.sign > 0 ? "+1" : "-1");
}

}  // namespace wpbc
