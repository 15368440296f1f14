#include "ydhopf/kernels.hpp"

#include <atomic>

namespace ydhopf::kernels {

namespace scalar {

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t a,
              std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(a) * x[i]) % p);
}

void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t a, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * y[i] % p);
}

}  // namespace scalar

namespace {

std::atomic<int> g_forced{-1};

Isa detect() {
  return avx2_supported() ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() {
  int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  static const Isa detected = detect();
  return detected;
}

void force_isa(std::optional<Isa> isa) {
  if (isa && *isa == Isa::Avx2 && !avx2_supported()) isa = Isa::Scalar;
  g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t a,
              std::uint32_t p) {
  if (active_isa() == Isa::Avx2 && p < avx2::kMaxPrime)
    avx2::axpy_mod(y, x, n, a, p);
  else
    scalar::axpy_mod(y, x, n, a, p);
}

void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t a, std::uint32_t p) {
  if (active_isa() == Isa::Avx2 && p < avx2::kMaxPrime)
    avx2::scale_mod(y, n, a, p);
  else
    scalar::scale_mod(y, n, a, p);
}

}  // namespace ydhopf::kernels
