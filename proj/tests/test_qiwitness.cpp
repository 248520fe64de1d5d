#include <doctest.h>

#include "mgw/hall.hpp"
#include "mgw/qiwitness.hpp"
#include "mgw/selector.hpp"
#include "mgw/serialize.hpp"

using namespace mgw;

namespace {

MarkedGroup G(const char* selector) { return parse_group(selector); }

WitnessPair identity_witness(const MarkedGroup& g, int C, int M) { return word_map_witness(g, g, C, M); }

// Groups with balls of at most 7 vertices at radius 2 for rank 1, and a few
// rank-2 ones at radius 1.
std::vector<MarkedGroup> tiny_rank1() {
  return {G("free:1"), G("trivial:1"), G("zmod:2:1"), G("zmod:3:1"), G("zmod:4:1"), G("zmod:5:1"), G("zlinear:2")};
}

}  // namespace

TEST_CASE("check_witness examples") {
  auto z = G("abelian:1");
  auto id = identity_witness(z, 1, 3);
  CHECK(check_witness(z, z, id).passed);

  auto moved = id;
  for (auto& [src, dst] : moved.phi)
    if (src.empty()) dst = Word::parse("x1", 1);
  auto rep = check_witness(z, z, moved);
  CHECK_FALSE(rep.passed);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(rep.violations.front().condition == 'a');

  // Doubling every image breaks the Lipschitz bound at C = 1.
  auto stretched = id;
  for (auto& [src, dst] : stretched.phi) dst = concat(src, src);
  auto rep2 = check_witness(z, z, stretched);
  CHECK_FALSE(rep2.passed);
  bool saw_b = false;
  for (const auto& v : rep2.violations) saw_b |= v.condition == 'b';
  CHECK(saw_b);

  auto partial = id;
  partial.phi.pop_back();
  CHECK_THROWS_AS(check_witness(z, z, partial), Error);
}

TEST_CASE("counting precheck") {
  auto z = G("abelian:1"), z2 = G("abelian:2");
  for (int C = 1; C <= 3; ++C)
    for (int M = 1; M <= 8; ++M) CHECK_FALSE(counting_precheck(z2, z2, C, M).impossible);
  auto cert = counting_precheck(z, z2, 1, 14);
  CHECK(cert.impossible);
  CHECK(cert.source_ball > cert.fibre_ball * cert.target_ball);
  auto j = to_json(cert);
  CHECK(j["impossible"] == true);
}

TEST_CASE("search examples") {
  auto z = G("abelian:1");
  auto self = search_witness(z, z, 1, 3, 1'000'000);
  CHECK(self.status == SearchOutcome::Status::Found);
  REQUIRE(self.witness.has_value());
  CHECK(check_witness(z, z, *self.witness).passed);

  auto counted = search_witness(z, G("abelian:2"), 1, 14, 1'000'000);
  CHECK(counted.status == SearchOutcome::Status::NonExistent);
  CHECK(counted.certificate_kind == "counting");

  auto twothree = search_witness(z, G("zlinear:2,3"), 3, 4, 10'000'000);
  CHECK(twothree.status == SearchOutcome::Status::Found);
  REQUIRE(twothree.witness.has_value());
  CHECK(check_witness(z, G("zlinear:2,3"), *twothree.witness).passed);

  auto starved = search_witness(G("abelian:2"), G("free:2"), 1, 3, 0);
  CHECK(starved.status == SearchOutcome::Status::BudgetExceeded);
}

TEST_CASE("pruned search agrees with unpruned enumeration on tiny instances") {
  auto groups = tiny_rank1();
  for (const auto& a : groups)
    for (const auto& b : groups)
      for (int M = 1; M <= 2; ++M) {
        CAPTURE(a.label());
        CAPTURE(b.label());
        CAPTURE(M);
        REQUIRE(build_ball(a, M).size() <= 7);
        auto pruned = search_witness(a, b, 1, M, 10'000'000);
        auto plain = enumerate_witness_unpruned(a, b, 1, M);
        REQUIRE(pruned.status != SearchOutcome::Status::BudgetExceeded);
        CHECK((pruned.status == SearchOutcome::Status::Found) == plain.has_value());
        if (plain) CHECK(check_witness(a, b, *plain).passed);
      }
}

TEST_CASE("precheck impossibility is confirmed by exhaustive search") {
  auto groups = tiny_rank1();
  groups.push_back(G("abelian:1"));
  int fired = 0;
  for (const auto& a : groups)
    for (const auto& b : groups)
      for (int M = 2; M <= 4; ++M) {
        if (!counting_precheck(a, b, 1, M).impossible) continue;
        ++fired;
        if (build_ball(a, M).size() > 7 || build_ball(b, M).size() > 7) continue;
        CHECK_FALSE(enumerate_witness_unpruned(a, b, 1, M).has_value());
      }
  CHECK(fired > 0);
}

TEST_CASE("monotone in C, restriction in M") {
  std::vector<std::pair<MarkedGroup, MarkedGroup>> pairs = {
      {G("abelian:1"), G("zlinear:2,3")}, {G("zmod:3:1"), G("trivial:1")}, {G("abelian:1"), G("abelian:1")},
      {G("zlinear:1,2"), G("abelian:2")}};
  for (auto& [a, b] : pairs) {
    for (int C = 1; C <= 3; ++C)
      for (int M = 1; M <= 3; ++M) {
        auto out = search_witness(a, b, C, M, 2'000'000);
        if (out.status != SearchOutcome::Status::Found) continue;
        CAPTURE(a.label());
        CAPTURE(b.label());
        auto wider = *out.witness;
        wider.C = C + 1;
        CHECK(check_witness(a, b, wider).passed);
        CHECK(search_witness(a, b, C + 1, M, 2'000'000).status == SearchOutcome::Status::Found);
        for (int m = 0; m < M; ++m) CHECK(check_witness(a, b, restrict_witness(*out.witness, m)).passed);
      }
  }
}

TEST_CASE("quotient witnesses") {
  auto z = G("abelian:1");
  auto trivial_kernel = quotient_witness(z, z, {}, 4);
  CHECK(trivial_kernel.C == 1);
  CHECK(check_witness(z, z, trivial_kernel).passed);

  auto g = G("hall:finite:{}"), q = G("hall:finite:{1}");
  auto p = quotient_witness(g, q, {hall_e_word(1)}, 4);
  CHECK(p.C == 9);
  CHECK(check_witness(g, q, p).passed);
  CHECK_THROWS_AS(quotient_witness(q, g, {hall_e_word(1)}, 3), Error);

  auto pq = G("pqi:finite:{}"), pq2 = G("pqi:finite:{2}");
  auto wm = word_map_witness(pq, pq2, 9, 4);
  CHECK(check_witness(pq, pq2, wm).passed);
}

TEST_CASE("witness JSON round trip") {
  auto g = G("hall:finite:{}"), q = G("lamplighter");
  auto p = word_map_witness(g, q, 3, 2);
  auto back = witness_from_json(to_json(p), 2, 2);
  CHECK(back.C == p.C);
  CHECK(back.M == p.M);
  CHECK(back.phi == p.phi);
  CHECK(back.psi == p.psi);
}

TEST_CASE("qi_scan summary") {
  auto z = G("abelian:1"), z2 = G("abelian:2");
  auto same = qi_scan(z, z, 2, {2, 3}, 100'000);
  for (const auto& s : same.summary) CHECK(s.verdict == "witness found");
  CHECK(same.note == kScanNote);

  auto diff = qi_scan(z, z2, 1, {14}, 100'000);
  REQUIRE(diff.summary.size() == 1);
  CHECK(diff.summary[0].verdict == "certified not C-related");
  CHECK(diff.summary[0].at_M == std::optional<int>(14));

  auto none = qi_scan(z, z2, 2, {2, 3}, 0);
  for (const auto& e : none.entries) CHECK(e.outcome.status == SearchOutcome::Status::BudgetExceeded);
  for (const auto& s : none.summary) CHECK(s.verdict == "inconclusive");
}
