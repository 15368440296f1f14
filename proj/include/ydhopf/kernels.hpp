#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

// Dense row kernels over F_p used by exact elimination. Each kernel has a scalar
// reference and an AVX2/FMA variant; the variant is picked once at runtime.
namespace ydhopf::kernels {

enum class Isa { Scalar, Avx2 };

bool avx2_supported();
Isa active_isa();
// Pins dispatch to one ISA (tests); std::nullopt restores detection.
void force_isa(std::optional<Isa> isa);
const char* isa_name(Isa isa);

// y[i] = (y[i] + a * x[i]) mod p. All inputs are canonical residues.
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t a,
              std::uint32_t p);
// y[i] = a * y[i] mod p.
void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t a, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t a,
              std::uint32_t p);
void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t a, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
// Exact for p < 2^26 only; dispatch falls back to scalar above that.
constexpr std::uint32_t kMaxPrime = 1u << 26;
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t a,
              std::uint32_t p);
void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t a, std::uint32_t p);
}  // namespace avx2

}  // namespace ydhopf::kernels
