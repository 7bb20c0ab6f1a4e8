#pragma once
// Known APN power functions (Gold, Kasami, Welch, Niho, inverse, Dobbertin)
// and the two binomial families x^3 + u x^36 on GF(2^10) and x^3 + u x^528 on
// GF(2^12).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apn/function.hpp"

namespace apn {

enum class Family { Gold, Kasami, Welch, Niho, Inverse, Dobbertin, BinomialT1, BinomialT2 };

std::string family_name(Family f);

struct CatalogEntry {
  Family family;
  unsigned m = 0;
  /// i for Gold / Kasami / Dobbertin, t for Welch / Niho / inverse.
  unsigned parameter = 0;
  /// Power functions: {d}. Binomials: {d1, d2} with the coefficient on x^d2.
  std::vector<std::uint64_t> exponents;
  std::optional<Element> coefficient;
  std::string condition;

  VectorialFunction function(FieldPtr field) const;
};

/// Every power-function family entry applicable at this m. Gold and Kasami use
/// 1 <= i <= (m-1)/2 with gcd(i, m) = 1; an exponent already produced by an
/// earlier family (e.g. Kasami i = 1 is Gold x^3) is listed once.
std::vector<CatalogEntry> known_apn_functions(unsigned m);

// x^3 + u x^36 over GF(2^10) ------------------------------------------------

/// An element of multiplicative order 3: g^((2^m - 1) / 3).
Element order3_element(const Field& field);

/// Throws WrongField unless m = 10.
VectorialFunction theorem1_function(FieldPtr field, Element u);
/// u in w GF(32)* or w^2 GF(32)*, w of order 3.
bool theorem1_u_is_valid(const Field& field, Element u);
/// All 62 valid u, ascending.
std::vector<Element> theorem1_valid_us(const Field& field);
CatalogEntry theorem1_entry(const Field& field, Element u);

// x^3 + u x^528 over GF(2^12) -----------------------------------------------

/// Throws WrongField unless m = 12.
VectorialFunction theorem2_function(FieldPtr field, Element u);
/// ord(u) divisible by 45 and dividing 585, or divisible by 7 and dividing 273.
bool theorem2_u_is_valid(const Field& field, Element u);
std::vector<Element> theorem2_valid_us(const Field& field);
CatalogEntry theorem2_entry(const Field& field, Element u);

}  // namespace apn
