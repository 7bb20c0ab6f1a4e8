#include "apn/kernels.hpp"

#include <bit>

#include "permute.hpp"

namespace apn::kernels {
namespace {

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

void xor_gather_scalar(std::uint64_t* acc, const std::uint64_t* base, const std::uint32_t* idx,
                       std::size_t count, std::size_t words) {
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t* row = base + static_cast<std::size_t>(idx[k]) * words;
    for (std::size_t i = 0; i < words; ++i) acc[i] ^= row[i];
  }
}

std::uint64_t popcount_scalar(const std::uint64_t* data, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(data[i]);
  return total;
}

void fwht_scalar(std::int32_t* data, std::size_t n) {
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t x = data[j];
        const std::int32_t y = data[j + h];
        data[j] = x + y;
        data[j + h] = x - y;
      }
    }
  }
}

void moebius_scalar(std::uint32_t* data, std::size_t n) {
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) data[j + h] ^= data[j];
    }
  }
}

void translate_bits_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words,
                           std::uint64_t g) {
  const std::uint64_t word_shift = g >> 6;
  const unsigned bit_shift = static_cast<unsigned>(g & 63);
  for (std::size_t w = 0; w < words; ++w) {
    dst[w] = detail::permute_word(src[w ^ word_shift], bit_shift);
  }
}

constexpr KernelTable kScalar{Isa::Scalar,     xor_into_scalar, xor_gather_scalar, popcount_scalar,
                              fwht_scalar,     moebius_scalar,  translate_bits_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace apn::kernels
