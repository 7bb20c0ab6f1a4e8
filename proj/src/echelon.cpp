#include <algorithm>

#include "apn/error.hpp"
#include "apn/ideal.hpp"
#include "apn/kernels.hpp"
#include "apn/parallel.hpp"

namespace apn {
namespace {

constexpr std::size_t kChunkWords = 32;  // 256-byte slabs

}  // namespace

EchelonBasis::EchelonBasis(unsigned m) : m_(m) {
  words_ = GroupAlgebraElement(m).words().size();
  chunk_words_ = std::min(kChunkWords, words_);
  chunks_ = words_ / chunk_words_;
  data_.resize(chunks_);
}

bool EchelonBasis::row_bit(std::size_t i, std::uint64_t bit) const {
  const std::uint64_t word = bit >> 6;
  const std::uint64_t chunk = word / chunk_words_;
  const std::uint64_t off = word % chunk_words_;
  return (data_[chunk][i * chunk_words_ + off] >> (bit & 63)) & 1U;
}

void EchelonBasis::xor_row_into(GroupAlgebraElement& v, std::size_t i) const {
  auto words = v.words();
  const auto& k = kernels::active();
  for (std::size_t c = 0; c < chunks_; ++c) {
    k.xor_into(words.data() + c * chunk_words_, data_[c].data() + i * chunk_words_, chunk_words_);
  }
}

// Row i is used in the reduction of v iff v's bit at pivot(i), after adding
// the rows already selected before i, is one. Those earlier contributions at
// pivot(i) are read from the cached pivot columns.
void EchelonBasis::select_rows(const GroupAlgebraElement& v, std::vector<std::uint32_t>& sel) const {
  sel.clear();
  const std::size_t d = dimension();
  std::vector<std::uint64_t> chosen((d + 63) / 64, 0);
  for (std::size_t i = 0; i < d; ++i) {
    bool bit = v.test(pivots_[i]);
    if (!sel.empty()) {
      const auto& col = pivot_columns_[i];
      std::uint64_t acc = 0;
      const std::size_t n = std::min(col.size(), (static_cast<std::size_t>(sel.back()) >> 6) + 1);
      for (std::size_t w = 0; w < n; ++w) acc ^= col[w] & chosen[w];
      bit ^= static_cast<bool>(__builtin_parityll(acc));
    }
    if (bit) {
      chosen[i >> 6] |= std::uint64_t{1} << (i & 63);
      sel.push_back(static_cast<std::uint32_t>(i));
    }
  }
}

void EchelonBasis::reduce(GroupAlgebraElement& v) const {
  reduce_batch(std::span<GroupAlgebraElement>(&v, 1), 1);
}

void EchelonBasis::reduce_batch(std::span<GroupAlgebraElement> batch, unsigned jobs) const {
  if (dimension() == 0 || batch.empty()) return;
  for (const auto& v : batch) {
    if (v.m() != m_) throw FieldMismatch("vector and basis live in different group algebras");
  }
  std::vector<std::vector<std::uint32_t>> sel(batch.size());
  parallel_for(batch.size(), jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t b = begin; b < end; ++b) select_rows(batch[b], sel[b]);
    const auto& k = kernels::active();
    for (std::size_t c = 0; c < chunks_; ++c) {
      const std::uint64_t* base = data_[c].data();
      for (std::size_t b = begin; b < end; ++b) {
        if (sel[b].empty()) continue;
        k.xor_gather(batch[b].words().data() + c * chunk_words_, base, sel[b].data(), sel[b].size(),
                     chunk_words_);
      }
    }
  });
}

void EchelonBasis::append(const GroupAlgebraElement& v) {
  const std::uint64_t p = v.lowest_set();
  const std::size_t d = dimension();
  std::vector<std::uint64_t> col((d + 63) / 64, 0);
  for (std::size_t j = 0; j < d; ++j) {
    if (row_bit(j, p)) col[j >> 6] |= std::uint64_t{1} << (j & 63);
  }
  const auto words = v.words();
  for (std::size_t c = 0; c < chunks_; ++c) {
    auto& slab = data_[c];
    if (slab.size() + chunk_words_ > slab.capacity()) {
      slab.reserve(std::max(slab.capacity() + slab.capacity() / 4, slab.size() + 16 * chunk_words_));
    }
    slab.insert(slab.end(), words.begin() + static_cast<std::ptrdiff_t>(c * chunk_words_),
                words.begin() + static_cast<std::ptrdiff_t>((c + 1) * chunk_words_));
  }
  pivots_.push_back(p);
  pivot_columns_.push_back(std::move(col));
}

bool EchelonBasis::insert_reduced_after(GroupAlgebraElement v, std::size_t since) {
  if (v.m() != m_) throw FieldMismatch("vector and basis live in different group algebras");
  for (std::size_t r = since; r < dimension(); ++r) {
    if (v.test(pivots_[r])) xor_row_into(v, r);
  }
  if (v.is_zero()) return false;
  append(v);
  return true;
}

bool EchelonBasis::insert(GroupAlgebraElement v) {
  reduce(v);
  return insert_reduced_after(std::move(v), dimension());
}

bool EchelonBasis::contains(const GroupAlgebraElement& v) const {
  GroupAlgebraElement w = v;
  reduce(w);
  return w.is_zero();
}

GroupAlgebraElement EchelonBasis::row(std::size_t i) const {
  GroupAlgebraElement out(m_);
  auto words = out.words();
  for (std::size_t c = 0; c < chunks_; ++c) {
    std::copy_n(data_[c].begin() + static_cast<std::ptrdiff_t>(i * chunk_words_), chunk_words_,
                words.begin() + static_cast<std::ptrdiff_t>(c * chunk_words_));
  }
  return out;
}

std::vector<std::uint64_t> EchelonBasis::sorted_pivots() const {
  std::vector<std::uint64_t> out = pivots_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupAlgebraElement> EchelonBasis::reduced_rows() const {
  const std::size_t d = dimension();
  std::vector<GroupAlgebraElement> rows;
  rows.reserve(d);
  for (std::size_t i = 0; i < d; ++i) rows.push_back(row(i));
  // Row i is already zero at earlier pivots; clear later ones from the back.
  for (std::size_t i = d; i-- > 0;) {
    for (std::size_t l = i + 1; l < d; ++l) {
      if (rows[i].test(pivots_[l])) rows[i] += rows[l];
    }
  }
  std::vector<std::size_t> order(d);
  for (std::size_t i = 0; i < d; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<GroupAlgebraElement> out;
  out.reserve(d);
  for (std::size_t i : order) out.push_back(std::move(rows[i]));
  return out;
}

bool EchelonBasis::check_invariants() const {
  const std::size_t d = dimension();
  if (pivot_columns_.size() != d) return false;
  std::vector<std::uint64_t> sorted = sorted_pivots();
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < d; ++i) {
    const GroupAlgebraElement r = row(i);
    if (r.is_zero() || r.lowest_set() != pivots_[i]) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (r.test(pivots_[j])) return false;
      const bool cached = (pivot_columns_[i][j >> 6] >> (j & 63)) & 1U;
      if (cached != row_bit(j, pivots_[i])) return false;
    }
  }
  return true;
}

std::size_t EchelonBasis::storage_bytes() const {
  std::size_t total = 0;
  for (const auto& slab : data_) total += slab.capacity() * sizeof(std::uint64_t);
  return total;
}

}  // namespace apn
