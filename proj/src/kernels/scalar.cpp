#include "monoalg/kernels/kernels.hpp"

namespace monoalg::kernels::scalar {

std::size_t first_dominated(std::span<const std::int64_t> rows, std::size_t width,
                            std::span<const std::int64_t> point) {
  if (width == 0) return 0;
  const std::size_t count = rows.size() / width;
  for (std::size_t r = 0; r < count; ++r) {
    const std::int64_t* row = rows.data() + r * width;
    std::size_t c = 0;
    while (c < width && row[c] <= point[c]) ++c;
    if (c == width) return r;
  }
  return count;
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    const std::uint64_t v = dst[i] + static_cast<std::uint64_t>(factor) * src[i];
    dst[i] = static_cast<std::uint32_t>(v % p);
  }
}

}  // namespace monoalg::kernels::scalar
