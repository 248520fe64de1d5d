#pragma once

#include <string>
#include <vector>

#include "mgw/cayley.hpp"
#include "mgw/small_cancellation.hpp"

namespace mgw {

// Slow, independent recomputations used to cross-check the library.
namespace reference {

// |B(k)| for k = 0..r by breadth-first search where every new word is
// compared against every element already seen with a direct identity query.
std::vector<std::size_t> ball_sizes(const GroupOracle& g, int r);

struct PieceSummary {
  std::size_t max_piece = 0;
  bool satisfied = true;
};

// Longest common prefix over every pair of cyclic positions.
PieceSummary pieces_pairwise(const SymmetrizedRelatorSet& s, Rational lambda);

// Hash counting of fixed-length readings: the longest piece by binary search
// on the length, and for each relator r a check that no reading of length
// ceil(lambda |r|) starting in r occurs twice.
PieceSummary pieces_hashed(const SymmetrizedRelatorSet& s, Rational lambda);

}  // namespace reference

struct GoldenResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<GoldenResult> golden_suite(BuildOptions opts = {});

}  // namespace mgw
