#include <immintrin.h>

#include <bit>

#include "apn/kernels.hpp"
#include "permute.hpp"

namespace apn::kernels {
namespace {

inline __m256i load(const std::uint64_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(std::uint64_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void xor_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 8 <= words; i += 8) {
    store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
    store(dst + i + 4, _mm256_xor_si256(load(dst + i + 4), load(src + i + 4)));
  }
  for (; i + 4 <= words; i += 4) store(dst + i, _mm256_xor_si256(load(dst + i), load(src + i)));
  for (; i < words; ++i) dst[i] ^= src[i];
}

// One 256-byte block held in eight registers while the selected rows stream by.
void gather_block32(std::uint64_t* acc, const std::uint64_t* base, const std::uint32_t* idx,
                    std::size_t count, std::size_t stride) {
  __m256i a0 = load(acc), a1 = load(acc + 4), a2 = load(acc + 8), a3 = load(acc + 12);
  __m256i a4 = load(acc + 16), a5 = load(acc + 20), a6 = load(acc + 24), a7 = load(acc + 28);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t* r = base + static_cast<std::size_t>(idx[k]) * stride;
    if (k + 2 < count) {
      _mm_prefetch(reinterpret_cast<const char*>(base + static_cast<std::size_t>(idx[k + 2]) * stride),
                   _MM_HINT_T0);
    }
    a0 = _mm256_xor_si256(a0, load(r));
    a1 = _mm256_xor_si256(a1, load(r + 4));
    a2 = _mm256_xor_si256(a2, load(r + 8));
    a3 = _mm256_xor_si256(a3, load(r + 12));
    a4 = _mm256_xor_si256(a4, load(r + 16));
    a5 = _mm256_xor_si256(a5, load(r + 20));
    a6 = _mm256_xor_si256(a6, load(r + 24));
    a7 = _mm256_xor_si256(a7, load(r + 28));
  }
  store(acc, a0), store(acc + 4, a1), store(acc + 8, a2), store(acc + 12, a3);
  store(acc + 16, a4), store(acc + 20, a5), store(acc + 24, a6), store(acc + 28, a7);
}

void xor_gather_avx2(std::uint64_t* acc, const std::uint64_t* base, const std::uint32_t* idx,
                     std::size_t count, std::size_t words) {
  std::size_t off = 0;
  for (; off + 32 <= words; off += 32) gather_block32(acc + off, base + off, idx, count, words);
  for (; off + 4 <= words; off += 4) {
    __m256i a = load(acc + off);
    for (std::size_t k = 0; k < count; ++k) {
      a = _mm256_xor_si256(a, load(base + static_cast<std::size_t>(idx[k]) * words + off));
    }
    store(acc + off, a);
  }
  for (; off < words; ++off) {
    std::uint64_t a = acc[off];
    for (std::size_t k = 0; k < count; ++k) a ^= base[static_cast<std::size_t>(idx[k]) * words + off];
    acc[off] = a;
  }
}

std::uint64_t popcount_avx2(const std::uint64_t* data, std::size_t words) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2,
                                       1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i total = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = load(data + i);
    const __m256i lo = _mm256_shuffle_epi8(lut, _mm256_and_si256(v, low));
    const __m256i hi = _mm256_shuffle_epi8(lut, _mm256_and_si256(_mm256_srli_epi16(v, 4), low));
    total = _mm256_add_epi64(total, _mm256_sad_epu8(_mm256_add_epi8(lo, hi), _mm256_setzero_si256()));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), total);
  std::uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < words; ++i) sum += static_cast<std::uint64_t>(std::popcount(data[i]));
  return sum;
}

// Butterflies with span 1, 2 and 4 inside one register of eight int32 lanes.
inline __m256i fwht8(__m256i v) {
  __m256i s = _mm256_shuffle_epi32(v, 0xB1);
  v = _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xAA);
  s = _mm256_shuffle_epi32(v, 0x4E);
  v = _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xCC);
  s = _mm256_permute2x128_si256(v, v, 0x01);
  return _mm256_blend_epi32(_mm256_add_epi32(v, s), _mm256_sub_epi32(s, v), 0xF0);
}

void fwht_avx2(std::int32_t* data, std::size_t n) {
  if (n < 8) {
    scalar_table().fwht(data, n);
    return;
  }
  auto* p = reinterpret_cast<__m256i*>(data);
  for (std::size_t i = 0; i < n; i += 8) {
    _mm256_storeu_si256(p + i / 8, fwht8(_mm256_loadu_si256(p + i / 8)));
  }
  for (std::size_t h = 8; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; j += 8) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + j));
        const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + j + h));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(data + j), _mm256_add_epi32(x, y));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(data + j + h), _mm256_sub_epi32(x, y));
      }
    }
  }
}

inline __m256i moebius8(__m256i v) {
  __m256i s = _mm256_shuffle_epi32(v, 0xB1);
  v = _mm256_blend_epi32(v, _mm256_xor_si256(v, s), 0xAA);
  s = _mm256_shuffle_epi32(v, 0x4E);
  v = _mm256_blend_epi32(v, _mm256_xor_si256(v, s), 0xCC);
  s = _mm256_permute2x128_si256(v, v, 0x01);
  return _mm256_blend_epi32(v, _mm256_xor_si256(v, s), 0xF0);
}

void moebius_avx2(std::uint32_t* data, std::size_t n) {
  if (n < 8) {
    scalar_table().moebius(data, n);
    return;
  }
  for (std::size_t i = 0; i < n; i += 8) {
    auto* p = reinterpret_cast<__m256i*>(data + i);
    _mm256_storeu_si256(p, moebius8(_mm256_loadu_si256(p)));
  }
  for (std::size_t h = 8; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; j += 8) {
        const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + j));
        auto* q = reinterpret_cast<__m256i*>(data + j + h);
        _mm256_storeu_si256(q, _mm256_xor_si256(x, _mm256_loadu_si256(q)));
      }
    }
  }
}

inline __m256i permute_lanes(__m256i v, unsigned s) {
  switch (s & 3U) {
    case 1: return _mm256_permute4x64_epi64(v, 0xB1);
    case 2: return _mm256_permute4x64_epi64(v, 0x4E);
    case 3: return _mm256_permute4x64_epi64(v, 0x1B);
    default: return v;
  }
}

inline __m256i permute_bits(__m256i x, unsigned s) {
  static const std::uint64_t kMasks[6] = {0x5555555555555555ULL, 0x3333333333333333ULL,
                                          0x0F0F0F0F0F0F0F0FULL, 0x00FF00FF00FF00FFULL,
                                          0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};
  for (unsigned j = 0; j < 6; ++j) {
    if ((s >> j) & 1U) {
      const __m256i m = _mm256_set1_epi64x(static_cast<long long>(kMasks[j]));
      const __m128i w = _mm_cvtsi32_si128(1 << j);
      x = _mm256_or_si256(_mm256_sll_epi64(_mm256_and_si256(x, m), w),
                          _mm256_and_si256(_mm256_srl_epi64(x, w), m));
    }
  }
  return x;
}

void translate_bits_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words,
                         std::uint64_t g) {
  const std::uint64_t word_shift = g >> 6;
  const unsigned bit_shift = static_cast<unsigned>(g & 63);
  if (words < 4) {
    for (std::size_t w = 0; w < words; ++w) {
      dst[w] = detail::permute_word(src[w ^ word_shift], bit_shift);
    }
    return;
  }
  const std::uint64_t block_shift = word_shift & ~std::uint64_t{3};
  const unsigned lane_shift = static_cast<unsigned>(word_shift & 3);
  for (std::size_t w = 0; w < words; w += 4) {
    const __m256i v = permute_lanes(load(src + (w ^ block_shift)), lane_shift);
    store(dst + w, permute_bits(v, bit_shift));
  }
}

constexpr KernelTable kAvx2{Isa::Avx2,  xor_into_avx2, xor_gather_avx2,    popcount_avx2,
                            fwht_avx2,  moebius_avx2,  translate_bits_avx2};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

}  // namespace apn::kernels
