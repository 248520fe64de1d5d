#pragma once

#include "mgw/hall.hpp"
#include "mgw/oracles.hpp"
#include "mgw/small_cancellation.hpp"
#include "mgw/subset.hpp"

namespace mgw {

// w_i = prod_{j=1..blocks} a b^(blocks*(i-1)+j+1): every b-exponent in the
// family is distinct and at least 2.
struct BowditchParams {
  int blocks = 50;
};

Word bowditch_word(long long i, const BowditchParams& params = {});

// Checks w_1..w_m against C'(1/6) once per (m, blocks) and remembers the
// answer. Throws if the family fails.
const MetricReport& verify_bowditch_family(long long m, const BowditchParams& params = {});

// <a, b | w_i, i in I and i <= m>.
Presentation bowditch_relators(const SubsetSpec& members, long long m, const BowditchParams& params = {});
GroupOracle bowditch_oracle(const SubsetSpec& members, long long m, const BowditchParams& params = {});

}  // namespace mgw
