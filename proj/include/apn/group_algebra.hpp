#pragma once
// Elements of the group algebra F2[U x V], U = V = (GF(2^m), +), stored as
// bit vectors of length 2^(2m). The pair (a, b) sits at index (a << m) | b,
// so group addition is XOR of indices.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "apn/function.hpp"

namespace apn {

class GroupAlgebraElement {
 public:
  /// The zero element for |U| = |V| = 2^m; 1 <= m <= 13.
  explicit GroupAlgebraElement(unsigned m);

  static std::uint64_t index(Element a, Element b, unsigned m) {
    return (static_cast<std::uint64_t>(a) << m) | b;
  }

  unsigned m() const { return m_; }
  /// Rank of U x V as an elementary abelian 2-group.
  unsigned group_rank() const { return 2 * m_; }
  /// |U x V| = 2^(2m), the number of coefficients.
  std::uint64_t size() const { return std::uint64_t{1} << (2 * m_); }

  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(std::uint64_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::uint64_t weight() const;
  bool is_zero() const;
  /// Lowest index with coefficient 1; size() if zero.
  std::uint64_t lowest_set() const;
  std::vector<std::uint64_t> support() const;

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  bool operator==(const GroupAlgebraElement& other) const = default;

 private:
  unsigned m_;
  std::vector<std::uint64_t> words_;
};

/// Multiplication by the group element g: coefficient at h moves to h + g.
GroupAlgebraElement translate(const GroupAlgebraElement& e, std::uint64_t g);

/// G_F = sum over x of (x, F(x)).
GroupAlgebraElement build_graph_element(const VectorialFunction& f);

/// A_F = (G_F^2 - 2^m) / 2 for APN F: the pairs (a, b), a != 0, for which
/// F(x + a) + F(x) = b has two solutions. Throws NotApn otherwise.
GroupAlgebraElement build_aF(const VectorialFunction& f);

/// An automorphism of U x V as an invertible 2m x 2m matrix over F2.
class GroupAutomorphism {
 public:
  /// columns[i] = image of the i-th unit vector. Throws NotBijective if singular.
  explicit GroupAutomorphism(std::vector<std::uint64_t> columns);

  /// (a, b) -> (L1 a, L2 b).
  static GroupAutomorphism from_linear_maps(const LinearMap& l1, const LinearMap& l2);
  static GroupAutomorphism random(unsigned m, std::mt19937_64& rng);

  unsigned group_rank() const { return static_cast<unsigned>(columns_.size()); }
  std::uint64_t operator()(std::uint64_t g) const;

 private:
  std::vector<std::uint64_t> columns_;
};

/// Applies the automorphism to every group element of the support.
GroupAlgebraElement apply_automorphism(const GroupAlgebraElement& e, const GroupAutomorphism& aut);

}  // namespace apn
