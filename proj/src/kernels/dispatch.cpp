#include <atomic>
#include <cstdlib>
#include <string_view>

#include "apn/kernels.hpp"

namespace apn::kernels {

#ifndef APNKIT_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(APNKIT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

namespace {

const KernelTable* pick_default() {
  const char* force = std::getenv("APNKIT_FORCE_SCALAR");
  if (force != nullptr && std::string_view(force) != "0") return &scalar_table();
  if (cpu_has_avx2() && avx2_table() != nullptr) return avx2_table();
  return &scalar_table();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> table{pick_default()};
  return table;
}

}  // namespace

const KernelTable& active() { return *slot().load(std::memory_order_relaxed); }

bool select(Isa isa) {
  if (isa == Isa::Scalar) {
    slot().store(&scalar_table());
    return true;
  }
  if (!cpu_has_avx2() || avx2_table() == nullptr) return false;
  slot().store(avx2_table());
  return true;
}

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

}  // namespace apn::kernels
