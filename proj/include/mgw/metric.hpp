#pragma once

#include <optional>

#include "mgw/cayley.hpp"

namespace mgw {

// Exact word-metric queries backed by a ball that grows on demand.
class MetricOracle {
 public:
  explicit MetricOracle(const MarkedGroup& g, BuildOptions opts = {}) : builder_(g, opts) {}

  const Ball& ball() const { return builder_.ball(); }
  void ensure_radius(int r) { builder_.grow_to(r); }

  // Vertex of B(r) holding w's element, if |w|_G <= r. Grows the ball to r.
  std::optional<std::size_t> locate(const Word& w, int r);

  // |w|_G if it is at most cap, otherwise nullopt. Needs B(ceil(cap/2)).
  std::optional<int> length_upto(const Word& w, int cap);

  std::optional<int> distance_upto(const Word& u, const Word& v, int cap) { return length_upto(concat(invert(u), v), cap); }

 private:
  BallBuilder builder_;
};

}  // namespace mgw
