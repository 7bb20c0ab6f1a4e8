#pragma once
// Exhaustive search for APN binomials x^d1 + u x^d2.
//
// Triples (d1, d2, u) are identified up to the affine equivalences
//   x -> a x followed by division by a^d1:   u -> u a^(d2 - d1)
//   Frobenius conjugation x -> F(x^(1/2))^2: u -> u^2
//   composing with squaring on the output:   (d1, d2, u) -> (2 d1, 2 d2, u^2)
//   dividing by the coefficient when d1 > d2: (d1, d2, u) -> (d2, d1, u^-1)
// Exponents live in [1, 2^m - 1] (x^d and x^(d mod 2^m - 1) agree on GF(2^m)*,
// and both vanish at 0 for d > 0).

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "apn/field.hpp"
#include "apn/function.hpp"

namespace apn {

struct BinomialTriple {
  std::uint64_t d1 = 0;
  std::uint64_t d2 = 0;
  Element u = 0;

  auto operator<=>(const BinomialTriple&) const = default;
};

using ExponentPair = std::pair<std::uint64_t, std::uint64_t>;

/// Representative of d > 0 in [1, 2^m - 1].
std::uint64_t normalize_exponent(std::uint64_t d, unsigned m);

/// Lexicographically least triple in the orbit of t. Requires d1 != d2 (mod 2^m - 1).
BinomialTriple canonical_orbit_representative(const Field& field, const BinomialTriple& t);

/// All u' with (d1, d2, u') in the orbit of t, ascending.
std::vector<Element> orbit_members(const Field& field, const BinomialTriple& t);

/// True iff (d1, d2) is the least exponent pair in its orbit.
bool is_canonical_pair(unsigned m, std::uint64_t d1, std::uint64_t d2);

/// The binomial is a linear map applied to one monomial (d2 = 2^k d1 mod
/// 2^m - 1), or a monomial plus a linear term (d1 or d2 a power of two).
bool is_monomial_equivalent(unsigned m, std::uint64_t d1, std::uint64_t d2);

VectorialFunction binomial_function(FieldPtr field, const BinomialTriple& t);

struct SearchSpace {
  unsigned m = 0;
  /// One exponent slice; all canonical pairs when empty.
  std::optional<ExponentPair> pair;
  /// Inclusive u range (defaults to all of GF(2^m)*).
  std::optional<Element> u_from;
  std::optional<Element> u_to;
  /// Test every u in range instead of one u per orbit. Defaults to true for a
  /// single slice or an explicit u range.
  std::optional<bool> every_u;
};

struct SearchHit {
  BinomialTriple triple;           // canonical representative
  bool verified = false;           // non-aborting differential spectrum has uniformity 2
  std::uint64_t orbit_size = 0;    // #u at (d1, d2) in this orbit
  std::uint64_t members_found = 0; // APN u values seen in the scanned range that map here
  bool monomial_equivalent = false;

  bool operator==(const SearchHit&) const = default;
};

struct SearchOptions {
  unsigned jobs = 1;
  /// Slices to skip (already completed in an earlier run).
  std::set<ExponentPair> skip;
  /// Called once per finished slice, possibly from several threads at once.
  std::function<void(const ExponentPair&, const std::vector<SearchHit>&)> on_slice;
};

/// Sorted by triple, independent of the worker count.
std::vector<SearchHit> search_binomials(const FieldPtr& field, const SearchSpace& space,
                                        const SearchOptions& options = {});

}  // namespace apn
