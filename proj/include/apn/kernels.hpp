#pragma once
// Data-parallel inner loops. Every kernel has a portable scalar reference
// implementation and, on x86-64, an AVX2 variant chosen at runtime from
// CPUID. The two must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace apn::kernels {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  /// dst[i] ^= src[i] for i < words.
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  /// acc ^= base[idx[0]], base[idx[1]], ...; each base row is `words` long and
  /// rows are laid out contiguously (row r starts at base + r * words).
  void (*xor_gather)(std::uint64_t* acc, const std::uint64_t* base, const std::uint32_t* idx,
                     std::size_t count, std::size_t words);
  std::uint64_t (*popcount)(const std::uint64_t* data, std::size_t words);
  /// In-place unnormalized Walsh-Hadamard transform; n is a power of two.
  void (*fwht)(std::int32_t* data, std::size_t n);
  /// In-place binary Moebius (subset-XOR) transform; n is a power of two.
  void (*moebius)(std::uint32_t* data, std::size_t n);
  /// dst[h] = src[h ^ g] viewed as a bit array of 64 * words bits.
  void (*translate_bits)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words,
                         std::uint64_t g);
};

const KernelTable& scalar_table();
/// Null when the AVX2 variants were not compiled in.
const KernelTable* avx2_table();

bool cpu_has_avx2();

/// Table used by the library. Defaults to the best ISA supported by the CPU;
/// APNKIT_FORCE_SCALAR=1 in the environment pins the scalar kernels.
const KernelTable& active();

/// Overrides the active table. Returns false if `isa` is unavailable.
bool select(Isa isa);

std::string_view isa_name(Isa isa);

// Convenience wrappers over active().
inline void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  active().xor_into(dst.data(), src.data(), dst.size());
}
inline std::uint64_t popcount(std::span<const std::uint64_t> data) {
  return active().popcount(data.data(), data.size());
}
inline void fwht(std::span<std::int32_t> data) { active().fwht(data.data(), data.size()); }
inline void moebius(std::span<std::uint32_t> data) { active().moebius(data.data(), data.size()); }

}  // namespace apn::kernels
