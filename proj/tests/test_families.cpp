#include <doctest.h>

#include <random>

#include "mgw/cayley.hpp"
#include "mgw/families.hpp"
#include "mgw/hall.hpp"
#include "mgw/subset.hpp"
#include "support.hpp"

using namespace mgw;

namespace {

HallElement H(long long s, std::vector<long long> l, std::vector<long long> c) { return HallElement{s, l, c}; }

HallElement project(HallElement x) {
  x.center.clear();
  return x;
}

Word hw(const char* s) { return Word::parse(s, 2); }

Word power(const Word& w, long long k) {
  Word out(w.rank());
  for (long long i = 0; i < std::abs(k); ++i) out = concat(out, k > 0 ? w : invert(w));
  return out;
}

}  // namespace

TEST_CASE("Hall multiplication examples") {
  CHECK(hall_mul(hall_a(), hall_a()) == hall_identity());
  HallElement t5 = hall_identity();
  for (int i = 0; i < 5; ++i) t5 = hall_mul(t5, hall_t());
  CHECK(t5 == H(5, {}, {}));
  CHECK(hall_mul(H(0, {1}, {}), H(0, {0}, {})) == H(0, {0, 1}, {1}));
  CHECK(hall_mul(H(0, {0}, {}), H(0, {1}, {})) == H(0, {0, 1}, {}));
  CHECK(hall_eval(Word(2)) == hall_identity());
  CHECK(hall_eval(hw("x1 X2 x1 x2 x1 X2 x1 x2")) == H(0, {}, {1}));
  CHECK(hall_e_word(1) == hw("x1 X2 x1 x2 x1 X2 x1 x2"));
  CHECK(hall_e(3) == H(0, {}, {3}));
  CHECK(H(0, {}, {1}).str() == "(0,{},{1})");
}

TEST_CASE("Hall group axioms") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 10000; ++t) {
    HallElement x = testing::random_hall(rng), y = testing::random_hall(rng), z = testing::random_hall(rng);
    REQUIRE(hall_mul(hall_mul(x, y), z) == hall_mul(x, hall_mul(y, z)));
    REQUIRE(hall_mul(x, hall_identity()) == x);
    REQUIRE(hall_mul(hall_identity(), x) == x);
    REQUIRE(hall_mul(hall_inv(x), x) == hall_identity());
    REQUIRE(hall_mul(x, hall_inv(x)) == hall_identity());
    REQUIRE(hall_inv(hall_inv(x)) == x);
  }
}

TEST_CASE("central elements commute and have order 2") {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 1000; ++t) {
    HallElement c = testing::random_hall(rng);
    c.shift = 0;
    c.lamps.clear();
    HallElement y = testing::random_hall(rng);
    REQUIRE(hall_mul(c, y) == hall_mul(y, c));
  }
  for (long long k = 1; k <= 12; ++k) {
    CHECK(hall_mul(hall_e(k), hall_e(k)) == hall_identity());
    CHECK(hall_mul(hall_e(k), hall_t()) == hall_mul(hall_t(), hall_e(k)));
    CHECK(hall_mul(hall_e(k), hall_a()) == hall_mul(hall_a(), hall_e(k)));
  }
}

TEST_CASE("forgetting the center is a homomorphism") {
  std::mt19937_64 rng(63);
  for (int t = 0; t < 1000; ++t) {
    HallElement x = testing::random_hall(rng), y = testing::random_hall(rng);
    REQUIRE(project(hall_mul(x, y)) == project(hall_mul(project(x), project(y))));
  }
}

TEST_CASE("commutators of lamps give the central generators") {
  Word a = hw("x1"), t = hw("x2");
  for (long long k = 1; k <= 6; ++k) {
    Word ak = concat(concat(power(t, -k), a), power(t, k));
    Word comm = concat(concat(a, ak), concat(invert(a), invert(ak)));
    CHECK(hall_eval(comm) == H(0, {}, {k}));
    CHECK(hall_eval(hall_e_word(k)) == hall_e(k));
    CHECK(hall_e_word(k).size() == static_cast<std::size_t>(4 * k + 4));
  }
}

TEST_CASE("hall_eval is a homomorphism") {
  std::mt19937_64 rng(64);
  for (int t = 0; t < 2000; ++t) {
    Word u = testing::random_word(rng, 2, 12), v = testing::random_word(rng, 2, 12);
    Word uv = u;
    for (auto c : v.codes()) uv.push_back_code(c);
    REQUIRE(hall_eval(uv) == hall_mul(hall_eval(u), hall_eval(v)));
    REQUIRE(hall_eval(invert(u)) == hall_inv(hall_eval(u)));
  }
}

TEST_CASE("Hall quotient oracle examples") {
  Word e1 = hall_e_word(1);
  Word t = hw("x2");
  Word comm = concat(concat(e1, t), concat(invert(e1), invert(t)));
  // 18 letters before free reduction.
  CHECK(comm.size() == 16);
  for (const char* I : {"finite:{}", "finite:{1}", "arith:2,0", "cofinite:{}", "finite:{2,3}"}) {
    auto g = hall_oracle(parse_subset(I));
    CAPTURE(I);
    CHECK(g.is_identity(e1) == parse_subset(I).contains(1));
    CHECK(g.is_identity(comm));
    CHECK(g.is_identity(hw("x1 x1")));
  }
  auto lamp = lamplighter_oracle();
  CHECK(lamp.is_identity(e1));
  CHECK_FALSE(lamp.is_identity(concat(hw("x2 x1 X2"), hw("x1"))));
  CHECK(build_ball(MarkedGroup(lamp), 1).size() == 4);
}

TEST_CASE("pqi oracle examples") {
  auto I = parse_subset("finite:{3,5}");
  auto q = pqi_oracle(I);
  CHECK(q.is_identity(hall_e_word(3)));
  CHECK(q.is_identity(hall_e_word(5)));
  CHECK(q.is_identity(concat(hall_e_word(2), hall_e_word(1))));
  CHECK(q.is_identity(concat(hall_e_word(4), hall_e_word(1))));
  CHECK_FALSE(q.is_identity(hall_e_word(2)));
  for (const char* J : {"finite:{}", "finite:{2}", "arith:2,0", "cofinite:{1}"}) {
    CAPTURE(J);
    CHECK_FALSE(pqi_oracle(parse_subset(J)).is_identity(hall_e_word(1)));
  }
  CHECK_THROWS_AS(pqi_oracle(parse_subset("finite:{1,2}")), Error);
}

TEST_CASE("subset grammar") {
  auto f = parse_subset("finite:{1,5}");
  CHECK(f.members_upto(10) == std::vector<long long>{1, 5});
  auto evens = parse_subset("arith:2,0");
  CHECK(evens.members_upto(7) == std::vector<long long>{2, 4, 6});
  CHECK(parse_subset("bits:101,default=0").members_upto(8) == std::vector<long long>{1, 3});
  CHECK(parse_subset("bits:101,default=1").members_upto(5) == std::vector<long long>{1, 3, 4, 5});
  CHECK(parse_subset("cofinite:{2}").members_upto(4) == std::vector<long long>{1, 3, 4});
  CHECK(parse_subset("finite:{}").members_upto(4).empty());
  auto mod = parse_subset("arith:3,1+{3}-{4}");
  CHECK(mod.members_upto(8) == std::vector<long long>{1, 3, 7});
  CHECK(evens.with(3).without(2).members_upto(6) == std::vector<long long>{3, 4, 6});

  for (const char* s : {"finite:{1,5}", "cofinite:{2,9}", "arith:4,1,3", "bits:0110,default=1",
                        "finite:{}+{7}-{2}", "arith:2,0"}) {
    auto a = parse_subset(s);
    auto b = parse_subset(a.str());
    CHECK(a.members_upto(40) == b.members_upto(40));
    CHECK(b.str() == a.str());
  }
  for (const char* bad : {"", "finite:{1", "finite:{a}", "arith:0,1", "bits:102", "mystery:{1}", "finite:{1}x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_subset(bad), Error);
  }
  try {
    parse_subset("finite:{1,x}");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("small-cancellation family") {
  BowditchParams p;
  std::set<long long> exps;
  for (long long i = 1; i <= 8; ++i) {
    Word w = bowditch_word(i);
    CHECK(w.size() == static_cast<std::size_t>(p.blocks + (p.blocks * (i - 1)) * p.blocks +
                                               p.blocks * (p.blocks + 3) / 2));
    long long run = 0;
    for (std::size_t k = 0; k <= w.size(); ++k) {
      if (k < w.size() && w[k].index == 2) {
        CHECK(w[k].sign == 1);
        ++run;
      } else if (run > 0) {
        CHECK(run >= 2);
        CHECK(exps.insert(run).second);
        run = 0;
      }
    }
  }
  CHECK(bowditch_relators(parse_subset("finite:{1,3}"), 2).relators() == std::vector<Word>{bowditch_word(1)});
  CHECK(bowditch_relators(parse_subset("finite:{}"), 5).relators().empty());

  auto rep = verify_bowditch_family(8);
  CHECK(rep.satisfied);
  // Each relator beats six times every piece it contains.
  Presentation all(2);
  for (long long i = 1; i <= 8; ++i) all.add(bowditch_word(i));
  for (const Word& r : all.relators()) {
    auto one = check_metric_condition(symmetrize(Presentation(2, {r})), Rational{1, 6});
    CHECK(one.max_piece_length * 6 < r.size());
  }

  // A family with pieces too long for its relators is refused.
  CHECK_THROWS_AS(verify_bowditch_family(2, BowditchParams{1}), Error);
}

TEST_CASE("family membership is the indicator of the subset") {
  for (int mask = 0; mask < 32; ++mask) {
    std::set<long long> I;
    for (int i = 1; i <= 5; ++i)
      if (mask & (1 << (i - 1))) I.insert(i);
    auto g = bowditch_oracle(SubsetSpec::finite(I), 5);
    for (long long i = 1; i <= 5; ++i) REQUIRE(g.is_identity(bowditch_word(i)) == (I.count(i) > 0));
    REQUIRE_FALSE(g.is_identity(hw("a b")));
  }
}
