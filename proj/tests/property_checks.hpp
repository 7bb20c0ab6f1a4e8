#pragma once
// Property checks shared by the unit tests and the acceptance runner. Each
// returns an empty string on success and a description of the first failure
// otherwise.

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "apn/catalog.hpp"
#include "apn/group_algebra.hpp"
#include "apn/ideal.hpp"
#include "apn/spectra.hpp"
#include "oracles.hpp"

namespace props {

using namespace apn;

inline std::string fail(const std::string& what, const VectorialFunction& f) {
  std::ostringstream s;
  s << what << " (m=" << f.m() << ", poly=0x" << std::hex << f.field().polynomial() << ")";
  return s.str();
}

/// Smallest irreducible polynomial of degree m other than the default.
inline std::uint32_t alternative_polynomial(unsigned m) {
  for (std::uint32_t p = (1U << m) + 1; p < (2U << m); p += 2) {
    if (p != default_polynomial(m) && is_irreducible(p)) return p;
  }
  return 0;
}

/// Test functions at m: power maps of several kinds plus a seeded random LUT.
inline std::vector<VectorialFunction> sample_functions(const FieldPtr& f, std::uint64_t seed) {
  std::vector<VectorialFunction> out;
  for (std::uint64_t d : {3ULL, 7ULL, (1ULL << f->degree()) - 2}) out.push_back(VectorialFunction::power(f, d));
  std::mt19937_64 rng(seed);
  std::vector<Element> lut(f->size());
  for (auto& v : lut) v = rng() % f->size();
  out.emplace_back(f, lut);
  return out;
}

/// delta(a, b) even for a != 0, and sum over all (a, b) of delta = 2^(2m).
inline std::string delta_parity_and_mass(const VectorialFunction& f) {
  const std::uint32_t q = f.size();
  std::uint64_t mass = q;  // delta(0, 0)
  std::vector<std::uint32_t> row(q);
  for (Element a = 1; a < q; ++a) {
    std::fill(row.begin(), row.end(), 0);
    for (Element x = 0; x < q; ++x) ++row[f(x) ^ f(x ^ a)];
    for (Element b = 0; b < q; ++b) {
      if (row[b] % 2) return fail("odd delta", f);
      mass += row[b];
    }
  }
  const auto ds = differential_spectrum(f);
  std::uint64_t spectrum_mass = q;
  for (const auto& [v, n] : ds.histogram) spectrum_mass += std::uint64_t{v} * n;
  if (mass != std::uint64_t{q} * q || spectrum_mass != mass) return fail("delta mass", f);
  for (const auto& [v, n] : ds.histogram) {
    if (v % 2) return fail("odd delta in histogram", f);
  }
  return {};
}

/// sum_alpha chi(alpha, beta)^2 = 2^(2m) for every beta.
inline std::string parseval(const VectorialFunction& f) {
  const std::int64_t q = f.size();
  for (Element beta = 0; beta < f.size(); ++beta) {
    std::int64_t s = 0;
    for (std::int32_t c : walsh_coefficients(f, beta)) s += std::int64_t{c} * c;
    if (s != q * q) return fail("Parseval fails at beta=" + std::to_string(beta), f);
  }
  return {};
}

inline std::string fwht_matches_naive(const VectorialFunction& f) {
  const std::vector<std::uint32_t> lut(f.lut().begin(), f.lut().end());
  for (Element beta = 0; beta < f.size(); ++beta) {
    const auto row = walsh_coefficients(f, beta);
    for (Element alpha = 0; alpha < f.size(); ++alpha) {
      if (row[alpha] != oracle::character_sum(lut, alpha, beta, f.field().polynomial(), f.m())) {
        return fail("FWHT differs from the character sum", f);
      }
    }
  }
  return {};
}

inline std::string anf_round_trip(const VectorialFunction& f) {
  const Anf a = anf(f);
  const auto back = moebius_transform(a.coefficients);
  if (!std::equal(back.begin(), back.end(), f.lut().begin(), f.lut().end())) return fail("ANF round trip", f);
  for (unsigned j = 0; j < f.m(); ++j) {
    const auto want = oracle::anf_coordinate({f.lut().begin(), f.lut().end()}, j);
    for (std::uint32_t u = 0; u < f.size(); ++u) {
      if (((a.coefficients[u] >> j) & 1U) != want[u]) return fail("ANF differs from subset sums", f);
    }
  }
  return {};
}

struct Invariants {
  std::map<std::uint32_t, std::uint64_t> differential;
  std::map<std::uint64_t, std::uint64_t> walsh_abs;
  unsigned degree = 0;
  bool apn = false, ab = false, crooked = false;
  std::size_t graph_ideal = 0;
  std::size_t af_ideal = 0;  // 0 unless APN

  bool operator==(const Invariants&) const = default;
};

inline Invariants invariants(const VectorialFunction& f) {
  Invariants r;
  const auto ds = differential_spectrum(f);
  const auto ws = walsh_spectrum(f);
  r.differential = ds.histogram;
  r.walsh_abs = ws.abs_values;
  r.degree = algebraic_degree(f);
  r.apn = ds.uniformity == 2;
  r.ab = is_ab(f);
  r.crooked = is_crooked(f);
  r.graph_ideal = ideal_dimension(build_graph_element(f));
  if (r.apn) r.af_ideal = ideal_dimension(build_aF(f));
  return r;
}

/// `count` random affine equivalences L2(F(L1(x + a))) + b leave every invariant unchanged.
inline std::string affine_invariance(const VectorialFunction& f, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Invariants base = invariants(f);
  for (int i = 0; i < count; ++i) {
    const LinearMap l1 = LinearMap::random(f.m(), rng), l2 = LinearMap::random(f.m(), rng);
    const Element a = rng() % f.size(), b = rng() % f.size();
    if (!(invariants(compose_with_linear(f, l1, l2, a, b)) == base)) {
      return fail("invariant changed under affine equivalence #" + std::to_string(i), f);
    }
  }
  return {};
}

/// Ideal dimensions of A_F (or G_F if F is not APN) under random automorphisms of U x V.
inline std::string automorphism_invariance(const VectorialFunction& f, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const GroupAlgebraElement e = is_apn(f) ? build_aF(f) : build_graph_element(f);
  const std::size_t d = ideal_dimension(e);
  for (int i = 0; i < count; ++i) {
    const auto aut = GroupAutomorphism::random(f.m(), rng);
    if (ideal_dimension(apply_automorphism(e, aut)) != d) {
      return fail("ideal dimension changed under automorphism #" + std::to_string(i), f);
    }
  }
  return {};
}

/// Power maps x^d evaluated in two polynomial bases give identical invariants.
inline std::string basis_independence(unsigned m, std::uint64_t d) {
  const FieldPtr f1 = Field::make(m);
  const FieldPtr f2 = Field::make(m, alternative_polynomial(m));
  const auto a = VectorialFunction::power(f1, d);
  const auto b = VectorialFunction::power(f2, d);
  if (!(invariants(a) == invariants(b))) {
    return fail("invariants of x^" + std::to_string(d) + " depend on the reduction polynomial", a);
  }
  return {};
}

}  // namespace props
