#include <charconv>
#include <fstream>
#include <sstream>

#include "apn/error.hpp"
#include "apn/function.hpp"

namespace apn {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view s, int base, const std::string& what) {
  s = trim(s);
  if (base == 16 && s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("cannot parse " + what + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::vector<Term> parse_polynomial(const std::string& text) {
  std::vector<Term> terms;
  std::string_view rest(text);
  for (bool more = !trim(rest).empty(); more;) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    more = comma != std::string_view::npos;
    if (more) rest = rest.substr(comma + 1);
    if (item.empty()) throw ParseError("empty term in polynomial '" + text + "'");
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("term '" + std::string(item) + "' is not of the form exponent:coefficient");
    }
    terms.push_back({parse_number<std::uint64_t>(item.substr(0, colon), 10, "exponent"),
                     parse_number<Element>(item.substr(colon + 1), 16, "coefficient")});
  }
  if (terms.empty()) throw ParseError("polynomial has no terms");
  return terms;
}

std::string format_polynomial(std::span<const Term> terms) {
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << ',';
    out << terms[i].exponent << ":0x" << std::hex << terms[i].coefficient << std::dec;
  }
  return out.str();
}

VectorialFunction read_lut_file(FieldPtr field, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open LUT file " + path);
  std::vector<Element> lut;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = trim(s.substr(0, hash));
    if (s.empty()) continue;
    try {
      lut.push_back(parse_number<Element>(s, 16, "LUT value"));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (lut.size() != field->size()) {
    throw ParseError(path + ": expected " + std::to_string(field->size()) + " values, found " +
                     std::to_string(lut.size()));
  }
  return VectorialFunction(std::move(field), std::move(lut));
}

void write_lut_file(const VectorialFunction& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write LUT file " + path);
  out << std::hex;
  for (Element v : f.lut()) out << v << '\n';
}

}  // namespace apn
