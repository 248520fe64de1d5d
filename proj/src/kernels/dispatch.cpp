#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "mgw/kernels.hpp"

namespace mgw::kernels {

namespace {

constexpr Table kScalar{Isa::Scalar, &scalar::common_prefix, &scalar::all_within};
#ifdef MGW_HAVE_AVX2
constexpr Table kAvx2{Isa::Avx2, &avx2::common_prefix, &avx2::all_within};
#endif

const Table* detect() {
  const char* env = std::getenv("MGW_KERNELS");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return &kScalar;
#ifdef MGW_HAVE_AVX2
  if (supported(Isa::Avx2)) return &kAvx2;
#endif
  return &kScalar;
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{detect()};
  return table;
}

}  // namespace

bool supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(MGW_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const Table& table_for(Isa isa) {
  if (!supported(isa)) throw std::runtime_error("kernel ISA not supported: " + std::string(name(isa)));
#ifdef MGW_HAVE_AVX2
  if (isa == Isa::Avx2) return kAvx2;
#endif
  return kScalar;
}

const Table& active() { return *current().load(std::memory_order_relaxed); }

void select(Isa isa) { current().store(&table_for(isa), std::memory_order_relaxed); }

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace mgw::kernels
