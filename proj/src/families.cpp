#include "mgw/families.hpp"

#include <map>
#include <mutex>

namespace mgw {

Word bowditch_word(long long i, const BowditchParams& params) {
  if (i < 1) throw Error("family relators are indexed from 1");
  if (params.blocks < 1) throw Error("family relators need at least one block");
  std::vector<LetterCode> c;
  const long long b = params.blocks;
  for (long long j = 1; j <= b; ++j) {
    c.push_back(1);
    for (long long e = 0; e < b * (i - 1) + j + 1; ++e) c.push_back(2);
  }
  return Word(2, std::move(c));
}

const MetricReport& verify_bowditch_family(long long m, const BowditchParams& params) {
  static std::mutex mu;
  static std::map<std::pair<long long, int>, MetricReport> done;
  std::lock_guard lock(mu);
  const auto key = std::make_pair(m, params.blocks);
  auto it = done.find(key);
  if (it == done.end()) {
    Presentation all(2);
    for (long long i = 1; i <= m; ++i) all.add(bowditch_word(i, params));
    it = done.emplace(key, check_metric_condition(symmetrize(all), Rational{1, 6})).first;
  }
  if (!it->second.satisfied) {
    throw Error("family relators w_1..w_" + std::to_string(m) + " fail C'(1/6) with piece \"" +
                it->second.witness_piece->str() + "\"");
  }
  return it->second;
}

Presentation bowditch_relators(const SubsetSpec& members, long long m, const BowditchParams& params) {
  if (m < 0) throw Error("truncation must be non-negative");
  verify_bowditch_family(m, params);
  Presentation p(2);
  for (long long i : members.members_upto(m)) p.add(bowditch_word(i, params));
  return p;
}

GroupOracle bowditch_oracle(const SubsetSpec& members, long long m, const BowditchParams& params) {
  // Pieces of a subset are pieces of the whole verified family, so the
  // condition is inherited and not re-checked.
  return dehn_oracle(bowditch_relators(members, m, params), "bowditch:" + members.str() + ":" + std::to_string(m),
                     true);
}

}  // namespace mgw
