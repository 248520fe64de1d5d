#include "mgw/kernels.hpp"

namespace mgw::kernels::scalar {

std::size_t common_prefix(const std::int16_t* a, const std::int16_t* b, std::size_t n) {
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

bool all_within(const std::int32_t* row, const std::int32_t* idx, const std::int32_t* bound,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (row[idx[i]] > bound[i]) return false;
  }
  return true;
}

}  // namespace mgw::kernels::scalar
