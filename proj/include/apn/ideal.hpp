#pragma once
// Dimension of the ideal generated by an element of F2[U x V].
//
// The ideal generated by A is the span of all translates g * A. It is
// computed as a translation closure: start from span{A} and, for each group
// generator e_k in turn, add e_k * r for every basis row r present when the
// pass over e_k began. After the pass the span is closed under e_1 .. e_k, so
// after all 2m passes it is the ideal.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "apn/group_algebra.hpp"

namespace apn {

/// Incrementally built basis of a subspace of F2[U x V].
///
/// Rows are stored in insertion order and never modified: row i has its pivot
/// (lowest set bit) at pivot(i) and is zero at the pivots of rows 0 .. i-1.
/// Row storage is column-chunk major so that reducing many vectors against
/// the basis streams cache-sized slabs of every row.
class EchelonBasis {
 public:
  explicit EchelonBasis(unsigned m);

  unsigned m() const { return m_; }
  std::size_t dimension() const { return pivots_.size(); }
  std::size_t row_words() const { return words_; }

  /// Reduces v against the basis in place; v ends up zero iff it lies in the span.
  void reduce(GroupAlgebraElement& v) const;
  /// reduce() on every element, streaming the basis one chunk at a time.
  void reduce_batch(std::span<GroupAlgebraElement> batch, unsigned jobs = 1) const;

  /// Reduces and appends; true if the dimension grew.
  bool insert(GroupAlgebraElement v);
  /// Appends v, which must already be reduced against rows [0, since):
  /// it is reduced against rows [since, dimension()) and appended if nonzero.
  bool insert_reduced_after(GroupAlgebraElement v, std::size_t since);

  bool contains(const GroupAlgebraElement& v) const;

  GroupAlgebraElement row(std::size_t i) const;
  std::uint64_t pivot(std::size_t i) const { return pivots_[i]; }
  std::vector<std::uint64_t> sorted_pivots() const;

  /// Reduced row echelon form of the span: rows sorted by pivot, every pivot
  /// column zero in all other rows. Cost grows as dimension^2 full rows.
  std::vector<GroupAlgebraElement> reduced_rows() const;

  /// Checks the stored-row invariants (nonzero, distinct pivots, zero at
  /// earlier pivots, projection cache consistent).
  bool check_invariants() const;

  /// Bytes held by row storage, including spare capacity.
  std::size_t storage_bytes() const;

 private:
  void select_rows(const GroupAlgebraElement& v, std::vector<std::uint32_t>& sel) const;
  bool row_bit(std::size_t i, std::uint64_t bit) const;
  void xor_row_into(GroupAlgebraElement& v, std::size_t i) const;
  void append(const GroupAlgebraElement& v);

  unsigned m_;
  std::size_t words_;
  std::size_t chunk_words_;
  std::size_t chunks_;
  std::vector<std::vector<std::uint64_t>> data_;  // data_[chunk][row * chunk_words_ + j]
  std::vector<std::uint64_t> pivots_;
  // pivot_columns_[i] bit j (j < i): row j has a one at pivot(i).
  std::vector<std::vector<std::uint64_t>> pivot_columns_;
};

struct ClosureProgress {
  unsigned stage = 0;           // generator being applied
  unsigned stages = 0;          // 2m
  std::size_t cursor = 0;       // rows of this stage already translated
  std::size_t stage_rows = 0;   // rows present when the stage began
  std::size_t dimension = 0;
};

struct ClosureOptions {
  unsigned jobs = 1;
  /// Stop once the dimension exceeds this cap (0 = no cap).
  std::size_t max_dimension = 0;
  /// Candidates reduced per pass over the basis.
  std::size_t batch = 64;
  std::function<void(const ClosureProgress&)> on_batch;
  /// Called when a stage completes (used for checkpointing).
  std::function<void(const ClosureProgress&)> on_stage;
};

class TranslateClosure {
 public:
  /// Throws EmptyElement if seed is zero.
  explicit TranslateClosure(const GroupAlgebraElement& seed);

  /// Continues the closure; returns true once it is complete, false if the
  /// dimension cap was hit first.
  bool run(const ClosureOptions& options = {});

  bool complete() const { return stage_ >= 2 * basis_.m(); }
  std::size_t dimension() const { return basis_.dimension(); }
  const EchelonBasis& basis() const { return basis_; }
  ClosureProgress progress() const;

  /// Binary checkpoint: "APNBASIS", version, m, row count, stage, cursor,
  /// stage rows, then the rows as little-endian 64-bit words.
  void save(const std::string& path) const;
  static TranslateClosure load(const std::string& path);

 private:
  explicit TranslateClosure(unsigned m) : basis_(m) {}

  EchelonBasis basis_;
  unsigned stage_ = 0;
  std::size_t cursor_ = 0;
  std::size_t stage_rows_ = 0;
};

/// dim_F2 of span{g * a : g in U x V}. Throws EmptyElement for a == 0.
std::size_t ideal_dimension(const GroupAlgebraElement& a, const ClosureOptions& options = {});

/// Rank of the full 2^(2m) x 2^(2m) translate matrix by dense Gaussian
/// elimination. Throws TooLarge for 2m > 14.
std::size_t ideal_dimension_oracle(const GroupAlgebraElement& a);

}  // namespace apn
