#pragma once

#include <string>
#include <vector>

#include "mgw/oracles.hpp"
#include "mgw/subset.hpp"
#include "mgw/words.hpp"

namespace mgw {

// Normal form in the two-generated central extension of Z_2 wr Z by
// E = (Z_2)^(infinity). With a_j = t^-j a t^j, an element is
// t^shift * prod_{j in lamps, ascending} a_j * prod_{k in center} e_k,
// where e_k = [a_0, a_k] is central of order 2 and [a_j, a_k] = e_|j-k|.
struct HallElement {
  long long shift = 0;
  std::vector<long long> lamps;   // sorted, distinct
  std::vector<long long> center;  // sorted, distinct, all >= 1

  friend bool operator==(const HallElement&, const HallElement&) = default;
  std::string str() const;
};

HallElement hall_identity();
HallElement hall_a();
HallElement hall_t();
// e_k as a group element (k >= 1).
HallElement hall_e(long long k);

HallElement hall_mul(const HallElement& x, const HallElement& y);
HallElement hall_inv(const HallElement& x);
// Letter 1 is a, letter 2 is t.
HallElement hall_eval(const Word& w);

// The word a T^k a t^k a T^k a t^k of length 4k+4, equal to e_k.
Word hall_e_word(long long k);

// G_I: the extension with e_k killed for every k in I.
GroupOracle hall_oracle(const SubsetSpec& killed);
// Z_2 wr Z marked by (a, t).
GroupOracle lamplighter_oracle();
// Q_I: e_i = 1 for i in I and e_j = e_1 for j >= 2 outside I. I must not
// contain 1.
GroupOracle pqi_oracle(const SubsetSpec& killed);

}  // namespace mgw
