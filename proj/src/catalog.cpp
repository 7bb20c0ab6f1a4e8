#include "apn/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "apn/error.hpp"

namespace apn {

std::string family_name(Family f) {
  switch (f) {
    case Family::Gold: return "Gold";
    case Family::Kasami: return "Kasami";
    case Family::Welch: return "Welch";
    case Family::Niho: return "Niho";
    case Family::Inverse: return "Inverse";
    case Family::Dobbertin: return "Dobbertin";
    case Family::BinomialT1: return "Binomial-T1";
    case Family::BinomialT2: return "Binomial-T2";
  }
  return "?";
}

VectorialFunction CatalogEntry::function(FieldPtr field) const {
  if (field->degree() != m) throw WrongField("catalog entry belongs to GF(2^" + std::to_string(m) + ")");
  if (exponents.size() == 1) return VectorialFunction::power(std::move(field), exponents[0]);
  const std::vector<Term> terms = {{exponents[0], 1}, {exponents[1], coefficient.value_or(1)}};
  return VectorialFunction::from_polynomial(std::move(field), terms);
}

std::vector<CatalogEntry> known_apn_functions(unsigned m) {
  if (m < Field::kMinDegree || m > Field::kMaxDegree) {
    throw UnsupportedDegree("extension degree " + std::to_string(m) + " outside [2, 16]");
  }
  std::vector<CatalogEntry> out;
  auto add = [&](Family family, unsigned parameter, std::uint64_t d, std::string condition) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const CatalogEntry& e) { return e.exponents[0] == d; });
    if (!seen) out.push_back({family, m, parameter, {d}, std::nullopt, std::move(condition)});
  };
  const auto p2 = [](unsigned k) { return std::uint64_t{1} << k; };

  for (unsigned i = 1; 2 * i <= m - 1; ++i) {
    if (std::gcd(i, m) == 1) add(Family::Gold, i, p2(i) + 1, "gcd(i,m)=1, 1<=i<=(m-1)/2");
  }
  for (unsigned i = 1; 2 * i <= m - 1; ++i) {
    if (std::gcd(i, m) == 1) add(Family::Kasami, i, p2(2 * i) - p2(i) + 1, "gcd(i,m)=1, 1<=i<=(m-1)/2");
  }
  if (m % 2 == 1) {
    const unsigned t = (m - 1) / 2;
    add(Family::Welch, t, p2(t) + 3, "m=2t+1");
    if (t % 2 == 0) {
      add(Family::Niho, t, p2(t) + p2(t / 2) - 1, "m=2t+1, t even");
    } else {
      add(Family::Niho, t, p2(t) + p2((3 * t + 1) / 2) - 1, "m=2t+1, t odd");
    }
    add(Family::Inverse, t, p2(2 * t) - 1, "m=2t+1");
  }
  if (m % 5 == 0) {
    const unsigned i = m / 5;
    add(Family::Dobbertin, i, p2(4 * i) + p2(3 * i) + p2(2 * i) + p2(i) - 1, "m=5i");
  }
  return out;
}

Element order3_element(const Field& field) {
  if (field.group_order() % 3 != 0) throw WrongField("GF(2^m)* has no element of order 3 for odd m");
  return field.exp(field.group_order() / 3);
}

namespace {

void require_degree(const Field& field, unsigned m) {
  if (field.degree() != m) {
    throw WrongField("this family lives on GF(2^" + std::to_string(m) + "), not GF(2^" +
                     std::to_string(field.degree()) + ")");
  }
}

}  // namespace

VectorialFunction theorem1_function(FieldPtr field, Element u) {
  require_degree(*field, 10);
  const std::vector<Term> terms = {{3, 1}, {36, u}};
  return VectorialFunction::from_polynomial(std::move(field), terms);
}

bool theorem1_u_is_valid(const Field& field, Element u) {
  require_degree(field, 10);
  if (u == 0) return false;
  const Element w = order3_element(field);
  const Element w_inv = field.inv(w);
  return field.in_subfield(field.mul(u, w_inv), 5) || field.in_subfield(field.mul(u, field.mul(w_inv, w_inv)), 5);
}

std::vector<Element> theorem1_valid_us(const Field& field) {
  require_degree(field, 10);
  const Element w = order3_element(field);
  std::vector<Element> out;
  for (Element coset : {w, field.mul(w, w)}) {
    // GF(32)* = <g^33>.
    for (std::uint64_t k = 0; k < 31; ++k) out.push_back(field.mul(coset, field.exp(33 * k)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CatalogEntry theorem1_entry(const Field& field, Element u) {
  require_degree(field, 10);
  return {Family::BinomialT1, 10, 0, {3, 36}, u, "u in w*GF(32)* or w^2*GF(32)*, ord(w)=3"};
}

VectorialFunction theorem2_function(FieldPtr field, Element u) {
  require_degree(*field, 12);
  const std::vector<Term> terms = {{3, 1}, {528, u}};
  return VectorialFunction::from_polynomial(std::move(field), terms);
}

bool theorem2_u_is_valid(const Field& field, Element u) {
  require_degree(field, 12);
  if (u == 0) return false;
  const std::uint64_t ord = field.element_order(u);
  return (ord % 45 == 0 && 585 % ord == 0) || (ord % 7 == 0 && 273 % ord == 0);
}

std::vector<Element> theorem2_valid_us(const Field& field) {
  std::vector<Element> out;
  for (Element u = 1; u < field.size(); ++u) {
    if (theorem2_u_is_valid(field, u)) out.push_back(u);
  }
  return out;
}

CatalogEntry theorem2_entry(const Field& field, Element u) {
  require_degree(field, 12);
  return {Family::BinomialT2, 12, 0, {3, 528}, u,
          "45 | ord(u) | 585, or 7 | ord(u) | 273"};
}

}  // namespace apn
