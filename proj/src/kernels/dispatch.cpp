#include <cstdlib>
#include <string>

#include "monoalg/kernels/kernels.hpp"

namespace monoalg::kernels {

#ifndef MONOALG_HAVE_AVX2
namespace avx2 {
bool available() { return false; }
std::size_t first_dominated(std::span<const std::int64_t> rows, std::size_t width,
                            std::span<const std::int64_t> point) {
  return scalar::first_dominated(rows, width, point);
}
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  scalar::axpy_mod(dst, src, factor, p);
}
}  // namespace avx2
#endif

namespace {

struct Table {
  Isa isa;
  FirstDominatedFn first_dominated;
  AxpyModFn axpy_mod;
};

Table select() {
  const char* forced = std::getenv("MONOALG_SIMD");
  const bool scalar_only = forced != nullptr && std::string(forced) == "scalar";
  if (!scalar_only && avx2::available())
    return {Isa::Avx2, &avx2::first_dominated, &avx2::axpy_mod};
  return {Isa::Scalar, &scalar::first_dominated, &scalar::axpy_mod};
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

Isa active_isa() { return table().isa; }

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

std::size_t first_dominated(std::span<const std::int64_t> rows, std::size_t width,
                            std::span<const std::int64_t> point) {
  return table().first_dominated(rows, width, point);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  table().axpy_mod(dst, src, factor, p);
}

}  // namespace monoalg::kernels
