#pragma once
// Arithmetic in GF(2^m), 2 <= m <= 16, in a polynomial basis.
//
// Elements are m-bit integers: bit i is the coefficient of x^i. Multiplication
// goes through discrete-log tables taken with respect to a fixed primitive
// element. A Field is immutable once built and can be shared freely between
// threads.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace apn {

using Element = std::uint32_t;

/// Built-in primitive polynomial for degree m (bit i = coefficient of x^i).
std::uint32_t default_polynomial(unsigned m);

/// True iff `poly` (degree taken from its top bit) is irreducible over F2.
bool is_irreducible(std::uint32_t poly);

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

class Field {
 public:
  static constexpr unsigned kMinDegree = 2;
  static constexpr unsigned kMaxDegree = 16;

  /// Throws UnsupportedDegree or RejectedPolynomial.
  explicit Field(unsigned m, std::optional<std::uint32_t> poly = std::nullopt);

  static std::shared_ptr<const Field> make(unsigned m, std::optional<std::uint32_t> poly = std::nullopt) {
    return std::make_shared<const Field>(m, poly);
  }

  unsigned degree() const { return m_; }
  std::uint32_t polynomial() const { return poly_; }
  /// 2^m.
  std::uint32_t size() const { return 1U << m_; }
  /// 2^m - 1, the order of the multiplicative group.
  std::uint32_t group_order() const { return size() - 1; }
  Element generator() const { return generator_; }
  const std::vector<std::uint64_t>& group_order_factors() const { return factors_; }

  bool contains(Element a) const { return a < size(); }

  static Element add(Element a, Element b) { return a ^ b; }

  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[log_[a] + log_[b]];
  }

  Element square(Element a) const { return mul(a, a); }

  /// Throws ZeroHasNoOrder for a == 0.
  Element inv(Element a) const;

  /// 0^0 = 1, 0^e = 0 for e > 0; the exponent is reduced mod 2^m - 1 only for a != 0.
  Element pow(Element a, std::uint64_t e) const;

  /// g^k for the fixed generator g.
  Element exp(std::uint64_t k) const { return antilog_[k % group_order()]; }

  /// Discrete log base g; a must be nonzero.
  std::uint32_t log(Element a) const { return log_[a]; }

  /// Multiplicative order. Throws ZeroHasNoOrder for a == 0.
  std::uint64_t element_order(Element a) const;

  /// a^(2^k) == a. Throws NotASubfield unless k divides m.
  bool in_subfield(Element a, unsigned k) const;

  /// Absolute trace to F2.
  unsigned trace(Element a) const { return static_cast<unsigned>(__builtin_parity(a & trace_mask_)); }
  /// Bit mask t with trace(a) = parity(a & t).
  std::uint32_t trace_mask() const { return trace_mask_; }

  bool operator==(const Field& other) const { return m_ == other.m_ && poly_ == other.poly_; }

 private:
  Element slow_mul(Element a, Element b) const;

  unsigned m_;
  std::uint32_t poly_;
  Element generator_ = 0;
  std::uint32_t trace_mask_ = 0;
  std::vector<std::uint64_t> factors_;
  std::vector<std::uint32_t> log_;
  std::vector<Element> antilog_;  // doubled so that log a + log b needs no reduction
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace apn
