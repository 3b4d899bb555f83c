#pragma once

// Integer inner loops with a scalar reference path and AVX2 variants chosen
// once at startup. Set MONOALG_SIMD=scalar to force the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace monoalg::kernels {

enum class Isa { Scalar, Avx2 };

/// Index of the first row r of the row-major `rows` block (each `width` wide)
/// with rows[r] <= point componentwise, or rows.size() / width if none.
using FirstDominatedFn = std::size_t (*)(std::span<const std::int64_t> rows, std::size_t width,
                                         std::span<const std::int64_t> point);

/// dst[i] = (dst[i] + factor * src[i]) mod p for entries already in [0, p).
using AxpyModFn = void (*)(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                           std::uint32_t factor, std::uint32_t p);

namespace scalar {
std::size_t first_dominated(std::span<const std::int64_t> rows, std::size_t width,
                            std::span<const std::int64_t> point);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
bool available();
std::size_t first_dominated(std::span<const std::int64_t> rows, std::size_t width,
                            std::span<const std::int64_t> point);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);
}  // namespace avx2

Isa active_isa();
std::string_view isa_name(Isa isa);

std::size_t first_dominated(std::span<const std::int64_t> rows, std::size_t width,
                            std::span<const std::int64_t> point);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p);

}  // namespace monoalg::kernels
