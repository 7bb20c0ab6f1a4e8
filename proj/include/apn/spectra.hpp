#pragma once
// Differential and Walsh spectra and the APN / AB / crooked predicates.

#include <cstdint>
#include <map>
#include <vector>

#include "apn/function.hpp"

namespace apn {

struct DifferentialSpectrum {
  /// delta value -> number of pairs (a, b) != (0, 0) attaining it.
  std::map<std::uint32_t, std::uint64_t> histogram;
  /// Differential uniformity: max delta over (a, b) != (0, 0).
  std::uint32_t uniformity = 0;

  bool operator==(const DifferentialSpectrum&) const = default;
};

/// delta(a, b) = #{x : F(x + a) + F(x) = b}, aggregated over all (a, b) != (0, 0).
DifferentialSpectrum differential_spectrum(const VectorialFunction& f, unsigned jobs = 1);

/// Uniformity == 2, stopping at the first derivative value hit four times.
bool is_apn(const VectorialFunction& f, unsigned jobs = 1);

struct WalshSpectrum {
  /// chi_{(alpha, beta)}(G_F) -> multiplicity, over all (alpha, beta) including (0, 0).
  std::map<std::int64_t, std::uint64_t> values;
  /// |chi| -> multiplicity.
  std::map<std::uint64_t, std::uint64_t> abs_values;
  /// max |chi| over (alpha, beta) != (0, 0).
  std::uint64_t linearity = 0;

  bool operator==(const WalshSpectrum&) const = default;
};

WalshSpectrum walsh_spectrum(const VectorialFunction& f, unsigned jobs = 1);

/// chi_{(alpha, beta)}(G_F) = sum_x (-1)^(tr(alpha x) + tr(beta F(x))) for
/// fixed beta, indexed by alpha.
std::vector<std::int32_t> walsh_coefficients(const VectorialFunction& f, Element beta);

/// m odd and linearity == 2^((m+1)/2).
bool is_ab(const VectorialFunction& f, unsigned jobs = 1);

/// Every derivative image {F(x + a) + F(x)}, a != 0, is an affine hyperplane.
bool is_crooked(const VectorialFunction& f);

/// Same differential histogram and same Walsh |chi| multiset. Requires the
/// same extension degree (throws FieldMismatch otherwise); the reduction
/// polynomials may differ since both spectra are basis independent.
bool spectra_equal(const VectorialFunction& f1, const VectorialFunction& f2, unsigned jobs = 1);

}  // namespace apn
