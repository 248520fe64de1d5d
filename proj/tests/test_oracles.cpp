#include <doctest.h>

#include <random>

#include "mgw/families.hpp"
#include "mgw/hall.hpp"
#include "mgw/oracles.hpp"
#include "support.hpp"

using namespace mgw;

namespace {

std::vector<GroupOracle> sample_oracles() {
  return {free_oracle(2),
          abelian_oracle(3),
          trivial_oracle(2),
          integer_oracle({2, 3}),
          cyclic_oracle(6, {1, 4}),
          involution_free_oracle(2),
          elementary_abelian2_oracle(3),
          hall_oracle(parse_subset("finite:{}")),
          hall_oracle(parse_subset("arith:2,0")),
          lamplighter_oracle(),
          pqi_oracle(parse_subset("finite:{3}")),
          bowditch_oracle(parse_subset("finite:{1}"), 2)};
}

}  // namespace

TEST_CASE("oracle examples") {
  auto w = [](const char* s) { return Word::parse(s, 2); };
  CHECK(abelian_oracle(2).decide(w("x1 x2 X1 X2")) == Verdict::Identity);
  CHECK(free_oracle(2).decide(w("x1 x2 X1 X2")) == Verdict::NonIdentity);
  CHECK(abelian_oracle(2).decide(w("x1 x1 X2")) == Verdict::NonIdentity);
  CHECK(integer_oracle({2, 3}).decide(w("x1 x1 x1 X2 X2")) == Verdict::Identity);
  CHECK(cyclic_oracle(5, {1, 2}).decide(w("x1 x2 x2 x2")) == Verdict::NonIdentity);
  CHECK(cyclic_oracle(5, {1, 2}).decide(w("x1 x2 x2")) == Verdict::Identity);
  CHECK(involution_free_oracle(2).decide(w("x1 x1")) == Verdict::Identity);
  CHECK(involution_free_oracle(2).decide(w("x1 x2 x1 x2")) == Verdict::NonIdentity);
  CHECK(elementary_abelian2_oracle(2).decide(w("x1 x2 x1 x2")) == Verdict::Identity);
  CHECK(trivial_oracle(2).decide(w("x1")) == Verdict::Identity);
  CHECK(exponent_sum(w("x1 x2 X1 X1"), 1) == -1);
  CHECK_THROWS_AS(free_oracle(2).decide(Word::parse("x1", 1)), Error);
}

TEST_CASE("oracle invariants on random words") {
  std::mt19937_64 rng(31);
  for (const GroupOracle& g : sample_oracles()) {
    CAPTURE(g.label());
    CHECK(g.decide(Word(g.rank())) == Verdict::Identity);
    for (int t = 0; t < 10000; ++t) {
      Word w = testing::random_word(rng, g.rank(), 16);
      Verdict v = g.decide(w);
      REQUIRE(v != Verdict::Unknown);
      REQUIRE(v == g.decide(free_reduce(w)));
      REQUIRE(v == g.decide(invert(w)));
      if (t % 10 == 0) {
        Word c = testing::random_reduced(rng, g.rank(), 4);
        REQUIRE(v == g.decide(concat(concat(c, w), invert(c))));
      }
    }
  }
}

TEST_CASE("keys identify elements") {
  std::mt19937_64 rng(32);
  for (const GroupOracle& g : sample_oracles()) {
    if (!g.has_key()) continue;
    CAPTURE(g.label());
    for (int t = 0; t < 3000; ++t) {
      Word u = testing::random_reduced(rng, g.rank(), 8);
      // Half the time v is u times a trivial word, so equal keys actually get exercised.
      Word v = testing::random_reduced(rng, g.rank(), 8);
      if (t % 2 == 0) {
        Word z = testing::random_reduced(rng, g.rank(), 6);
        if (g.is_identity(z)) v = concat(u, z);
        else v = concat(u, concat(z, invert(z)));
      }
      REQUIRE((g.key(u) == g.key(v)) == g.is_identity(concat(invert(u), v)));
    }
  }
}
