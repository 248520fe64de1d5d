#pragma once

// Hot inner loops with a scalar reference implementation and vectorized
// variants chosen once at runtime. Every variant must return exactly what the
// scalar kernel returns; tests/test_kernels.cpp checks this on random inputs.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace mgw::kernels {

enum class Isa { Scalar, Avx2 };

struct Table {
  Isa isa;
  // Length of the longest common prefix of a[0..n) and b[0..n).
  std::size_t (*common_prefix)(const std::int16_t* a, const std::int16_t* b, std::size_t n);
  // True iff row[idx[i]] <= bound[i] for every i < n.
  bool (*all_within)(const std::int32_t* row, const std::int32_t* idx, const std::int32_t* bound,
                     std::size_t n);
};

namespace scalar {
std::size_t common_prefix(const std::int16_t* a, const std::int16_t* b, std::size_t n);
bool all_within(const std::int32_t* row, const std::int32_t* idx, const std::int32_t* bound,
                std::size_t n);
}  // namespace scalar

#ifdef MGW_HAVE_AVX2
namespace avx2 {
std::size_t common_prefix(const std::int16_t* a, const std::int16_t* b, std::size_t n);
bool all_within(const std::int32_t* row, const std::int32_t* idx, const std::int32_t* bound,
                std::size_t n);
}  // namespace avx2
#endif

// The table in use. Chosen on first call: the best ISA the CPU supports,
// unless MGW_KERNELS=scalar is set in the environment.
const Table& active();

// True when the CPU and the build both support `isa`.
bool supported(Isa isa);

// Forces a particular ISA (tests and benchmarks). Throws if unsupported.
void select(Isa isa);

const Table& table_for(Isa isa);
std::string_view name(Isa isa);

inline std::size_t common_prefix(const std::int16_t* a, const std::int16_t* b, std::size_t n) {
  return active().common_prefix(a, b, n);
}
inline bool all_within(const std::int32_t* row, const std::int32_t* idx, const std::int32_t* bound,
                       std::size_t n) {
  return active().all_within(row, idx, bound, n);
}

}  // namespace mgw::kernels
