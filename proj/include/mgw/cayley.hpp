#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mgw/oracles.hpp"
#include "mgw/words.hpp"

namespace mgw {

// (G, X) in the space of n-generated marked groups, via its word problem.
class MarkedGroup {
 public:
  explicit MarkedGroup(GroupOracle oracle) : oracle_(std::move(oracle)) {}
  int rank() const { return oracle_.rank(); }
  const GroupOracle& oracle() const { return oracle_; }
  const std::string& label() const { return oracle_.label(); }

 private:
  GroupOracle oracle_;
};

struct BuildOptions {
  // 0 means one per hardware thread.
  unsigned threads = 1;
  // Cap on the number of candidate words generated while growing a ball.
  std::uint64_t word_budget = 10'000'000;
};

// Runs body(i) for i in [0, n) on up to `threads` threads with static
// contiguous chunks. Exceptions are rethrown on the caller's thread, lowest
// chunk first.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body);

struct BallEdge {
  std::int32_t from;
  int generator;  // 1-based
  int sign;       // +1 or -1
  std::int32_t to;
  friend auto operator<=>(const BallEdge&, const BallEdge&) = default;
};

// Induced labeled subgraph of the Cayley graph on B(r). Vertices are the
// shortlex-least words of their elements, listed in shortlex order; vertex 0
// is the identity. The edge table has 2n slots per vertex indexed by
// letter_rank, -1 where v*x leaves the ball.
struct Ball {
  int rank = 0;
  int radius = 0;
  std::vector<Word> vertices;
  std::vector<std::int32_t> edges;
  // layer_start[k] = first vertex of length k; layer_start[radius+1] = size.
  std::vector<std::size_t> layer_start;

  std::size_t size() const { return vertices.size(); }
  std::int32_t edge(std::size_t v, LetterCode c) const {
    return edges[v * static_cast<std::size_t>(2 * rank) + static_cast<std::size_t>(letter_rank(c))];
  }
  int length_of(std::size_t v) const;
  std::vector<BallEdge> edge_list() const;  // sorted
  // B(r') for r' <= radius: a prefix of the vertex list.
  Ball restrict(int r) const;
  // Follows w from the root; nullopt if the walk leaves the ball.
  std::optional<std::size_t> walk(const Word& w) const;
};

// Grows a ball one layer at a time, keeping every edge among B(radius).
class BallBuilder {
 public:
  BallBuilder(const MarkedGroup& g, BuildOptions opts = {});

  void grow_to(int r);
  const Ball& ball() const { return ball_; }
  const MarkedGroup& group() const { return group_; }
  // Vertex index of the element w represents, if it lies in the ball.
  std::optional<std::size_t> locate(const Word& w) const;

 private:
  void add_layer();
  void link_layer(std::size_t begin, std::size_t end);
  std::optional<std::size_t> find_in(const Word& w, std::size_t begin, std::size_t end,
                                     const std::string* key) const;

  MarkedGroup group_;
  BuildOptions opts_;
  Ball ball_;
  std::vector<std::string> keys_;  // only when the oracle has keys
  std::unordered_map<std::string, std::size_t> by_key_;
  std::uint64_t generated_ = 0;
};

Ball build_ball(const MarkedGroup& g, int r, BuildOptions opts = {});

using BallSignature = std::string;
BallSignature signature(const Ball& b);

bool r_locally_isomorphic(const MarkedGroup& a, const MarkedGroup& b, int r, BuildOptions opts = {});

// Largest r <= R at which the balls agree, -1 if none. Throws if agreement
// is not downward closed.
int local_agreement_radius(const MarkedGroup& a, const MarkedGroup& b, int R, BuildOptions opts = {});

struct KernelAgreement {
  bool agree = true;
  std::optional<Word> witness;  // first disagreeing word in shortlex order
};
KernelAgreement kernel_agreement(const MarkedGroup& a, const MarkedGroup& b, int L);

// Least i0 with kernel agreement at 2r between chain[i] and the limit for
// every i >= i0; nullopt if the last member disagrees.
std::optional<std::size_t> convergence_check(const std::vector<MarkedGroup>& chain, const MarkedGroup& limit, int r);

std::string to_dot(const Ball& b);

}  // namespace mgw
