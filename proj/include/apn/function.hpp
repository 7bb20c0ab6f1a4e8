#pragma once
// Functions F: GF(2^m) -> GF(2^m) held as lookup tables.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "apn/field.hpp"

namespace apn {

/// One term c * x^e of a univariate polynomial.
struct Term {
  std::uint64_t exponent = 0;
  Element coefficient = 0;

  bool operator==(const Term&) const = default;
};

class VectorialFunction {
 public:
  /// Takes ownership of the table; lut.size() must be 2^m and every entry a
  /// field element.
  VectorialFunction(FieldPtr field, std::vector<Element> lut,
                    std::optional<std::vector<Term>> source = std::nullopt);

  /// Evaluates sum c_i x^(e_i) at every point; duplicate exponents add up.
  static VectorialFunction from_polynomial(FieldPtr field, std::span<const Term> terms);
  /// x -> x^d.
  static VectorialFunction power(FieldPtr field, std::uint64_t d);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  unsigned m() const { return field_->degree(); }
  std::uint32_t size() const { return field_->size(); }

  Element operator()(Element x) const { return lut_[x]; }
  std::span<const Element> lut() const { return lut_; }
  /// Polynomial this table was evaluated from, if any.
  const std::optional<std::vector<Term>>& source() const { return source_; }

  bool is_bijective() const;

  bool operator==(const VectorialFunction& other) const {
    return *field_ == *other.field_ && lut_ == other.lut_;
  }

 private:
  FieldPtr field_;
  std::vector<Element> lut_;
  std::optional<std::vector<Term>> source_;
};

/// Algebraic normal form of all m coordinate functions at once: bit j of
/// coefficients[u] is the coefficient of the monomial prod_{i in u} x_i in
/// coordinate j.
struct Anf {
  unsigned m = 0;
  std::vector<std::uint32_t> coefficients;

  /// Monomials (as input-bit masks) present in output coordinate j.
  std::vector<std::uint32_t> monomials(unsigned coordinate) const;
};

/// Binary Moebius transform of a table of m-bit words (self-inverse).
std::vector<std::uint32_t> moebius_transform(std::span<const std::uint32_t> table);

Anf anf(const VectorialFunction& f);

/// Largest monomial weight in the ANF; 0 for constant functions.
unsigned algebraic_degree(const VectorialFunction& f);

/// Number of ones in the binary expansion.
inline unsigned binary_weight(std::uint64_t e) { return static_cast<unsigned>(__builtin_popcountll(e)); }

/// An F2-linear bijection of GF(2^m), stored as a table and validated on construction.
class LinearMap {
 public:
  /// Throws NotLinear or NotBijective.
  LinearMap(unsigned m, std::vector<Element> lut);

  static LinearMap identity(unsigned m);
  /// columns[i] is the image of the unit vector e_i.
  static LinearMap from_columns(std::span<const Element> columns);
  /// y -> c * y; c must be nonzero.
  static LinearMap scaling(const Field& field, Element c);
  /// Uniform over GL(m, F2) by rejection sampling of bit matrices.
  static LinearMap random(unsigned m, std::mt19937_64& rng);

  unsigned m() const { return m_; }
  Element operator()(Element x) const { return lut_[x]; }
  std::span<const Element> lut() const { return lut_; }

 private:
  unsigned m_;
  std::vector<Element> lut_;
};

/// Pointwise F1 + F2. Throws FieldMismatch.
VectorialFunction add_functions(const VectorialFunction& f1, const VectorialFunction& f2);

/// x -> L2(F(L1(x + a))) + b.
VectorialFunction compose_with_linear(const VectorialFunction& f, const LinearMap& l1,
                                      const LinearMap& l2, Element a, Element b);

// Text formats ------------------------------------------------------------

/// Parses "3:1,36:0x2f4" (exponent:coefficient-hex pairs).
std::vector<Term> parse_polynomial(const std::string& text);
std::string format_polynomial(std::span<const Term> terms);

/// One hex value per line, line i = F(i). Blank lines and '#' comments are skipped.
VectorialFunction read_lut_file(FieldPtr field, const std::string& path);
void write_lut_file(const VectorialFunction& f, const std::string& path);

}  // namespace apn
