#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>

#include "apn/error.hpp"
#include "apn/ideal.hpp"

namespace apn {
namespace {

constexpr std::array<char, 8> kMagic = {'A', 'P', 'N', 'B', 'A', 'S', 'I', 'S'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& out, T v) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get(std::istream& in, const std::string& path) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T))) throw FileError("truncated basis file " + path);
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
  return v;
}

}  // namespace

TranslateClosure::TranslateClosure(const GroupAlgebraElement& seed) : basis_(seed.m()) {
  if (seed.is_zero()) throw EmptyElement("the zero element generates the zero ideal");
  basis_.insert(seed);
  stage_rows_ = basis_.dimension();
}

ClosureProgress TranslateClosure::progress() const {
  return {stage_, 2 * basis_.m(), cursor_, stage_rows_, basis_.dimension()};
}

bool TranslateClosure::run(const ClosureOptions& options) {
  const unsigned stages = 2 * basis_.m();
  const std::size_t batch = std::max<std::size_t>(options.batch, 1);
  std::vector<GroupAlgebraElement> candidates;
  while (stage_ < stages) {
    const std::uint64_t generator = std::uint64_t{1} << stage_;
    while (cursor_ < stage_rows_) {
      const std::size_t n = std::min(batch, stage_rows_ - cursor_);
      candidates.clear();
      for (std::size_t i = 0; i < n; ++i) candidates.push_back(translate(basis_.row(cursor_ + i), generator));
      const std::size_t since = basis_.dimension();
      basis_.reduce_batch(candidates, options.jobs);
      for (auto& c : candidates) {
        if (!c.is_zero()) basis_.insert_reduced_after(std::move(c), since);
      }
      cursor_ += n;
      if (options.on_batch) options.on_batch(progress());
      if (options.max_dimension != 0 && basis_.dimension() > options.max_dimension) return false;
    }
    ++stage_;
    cursor_ = 0;
    stage_rows_ = basis_.dimension();
    if (options.on_stage) options.on_stage(progress());
  }
  return true;
}

void TranslateClosure::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError("cannot write basis file " + path);
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kVersion);
  put<std::uint32_t>(out, basis_.m());
  put<std::uint64_t>(out, basis_.dimension());
  put<std::uint32_t>(out, stage_);
  put<std::uint32_t>(out, 0);
  put<std::uint64_t>(out, cursor_);
  put<std::uint64_t>(out, stage_rows_);
  for (std::size_t i = 0; i < basis_.dimension(); ++i) {
    const GroupAlgebraElement r = basis_.row(i);
    for (std::uint64_t w : r.words()) put<std::uint64_t>(out, w);
  }
  if (!out) throw FileError("error while writing basis file " + path);
}

TranslateClosure TranslateClosure::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open basis file " + path);
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw FileError(path + " is not a basis file");
  if (get<std::uint32_t>(in, path) != kVersion) throw FileError(path + ": unsupported basis file version");
  const auto m = get<std::uint32_t>(in, path);
  const auto rows = get<std::uint64_t>(in, path);
  const auto stage = get<std::uint32_t>(in, path);
  get<std::uint32_t>(in, path);
  const auto cursor = get<std::uint64_t>(in, path);
  const auto stage_rows = get<std::uint64_t>(in, path);
  if (m < 1 || m > 13 || stage > 2 * m || stage_rows > rows || cursor > stage_rows) {
    throw FileError(path + ": inconsistent basis header");
  }
  TranslateClosure closure(m);
  for (std::uint64_t i = 0; i < rows; ++i) {
    GroupAlgebraElement r(m);
    for (auto& w : r.words()) w = get<std::uint64_t>(in, path);
    // Stored rows are already reduced against their predecessors; anything
    // else indicates a corrupt file.
    const std::size_t before = closure.basis_.dimension();
    for (std::size_t j = 0; j < before; ++j) {
      if (r.test(closure.basis_.pivot(j))) throw FileError(path + ": rows are not in echelon form");
    }
    if (!closure.basis_.insert_reduced_after(std::move(r), before)) throw FileError(path + ": zero row");
  }
  closure.stage_ = stage;
  closure.cursor_ = cursor;
  closure.stage_rows_ = stage_rows;
  return closure;
}

std::size_t ideal_dimension(const GroupAlgebraElement& a, const ClosureOptions& options) {
  TranslateClosure closure(a);
  closure.run(options);
  return closure.dimension();
}

std::size_t ideal_dimension_oracle(const GroupAlgebraElement& a) {
  if (a.group_rank() > 14) throw TooLarge("dense translate matrix needs 2m <= 14");
  if (a.is_zero()) throw EmptyElement("the zero element generates the zero ideal");
  const std::uint64_t n = a.size();
  const std::size_t words = a.words().size();
  // Row g of the matrix is a shifted by g: entry (g, h) = a[g + h].
  std::vector<std::uint64_t> mat(n * words, 0);
  const auto src = a.words();
  for (std::uint64_t g = 0; g < n; ++g) {
    std::uint64_t* row = &mat[g * words];
    for (std::uint64_t h = 0; h < n; ++h) {
      const std::uint64_t s = g ^ h;
      if ((src[s / 64] >> (s % 64)) & 1U) row[h / 64] |= std::uint64_t{1} << (h % 64);
    }
  }
  std::size_t rank = 0;
  for (std::uint64_t col = 0; col < n && rank < n; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < n && !(mat[pivot * words + w] & bit)) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank) std::swap_ranges(&mat[pivot * words], &mat[pivot * words] + words, &mat[rank * words]);
    const std::uint64_t* prow = &mat[rank * words];
    for (std::size_t r = rank + 1; r < n; ++r) {
      std::uint64_t* row = &mat[r * words];
      if (row[w] & bit) {
        for (std::size_t k = w; k < words; ++k) row[k] ^= prow[k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace apn
