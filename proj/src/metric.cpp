#include "mgw/metric.hpp"

namespace mgw {

std::optional<std::size_t> MetricOracle::locate(const Word& w, int r) {
  ensure_radius(r);
  const auto v = builder_.locate(w);
  if (!v || ball().length_of(*v) > r) return std::nullopt;
  return v;
}

std::optional<int> MetricOracle::length_upto(const Word& w, int cap) {
  if (cap < 0) return std::nullopt;
  const Word z = free_reduce(w);
  const int half = (cap + 1) / 2;
  ensure_radius(half);
  if (auto v = builder_.locate(z)) {
    const int len = ball().length_of(*v);
    return len <= cap ? std::optional<int>(len) : std::nullopt;
  }
  // |z| exceeds the ball radius, hence half: split a geodesic after exactly
  // `half` letters.
  const Ball& b = ball();
  const std::size_t lo = b.layer_start[static_cast<std::size_t>(half)];
  const std::size_t hi = b.layer_start[static_cast<std::size_t>(half) + 1];
  int best = cap + 1;
  for (std::size_t u = lo; u < hi; ++u) {
    if (auto v = builder_.locate(concat(invert(b.vertices[u]), z))) {
      best = std::min(best, half + b.length_of(*v));
    }
  }
  if (best <= cap) return best;
  return std::nullopt;
}

}  // namespace mgw
