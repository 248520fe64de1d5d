#include "mgw/oracles.hpp"

#include <cstdlib>
#include <numeric>

namespace mgw {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Identity:
      return "Identity";
    case Verdict::NonIdentity:
      return "NonIdentity";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "?";
}

OracleUnknown::OracleUnknown(const std::string& label, const Word& query)
    : Error("oracle '" + label + "' returned Unknown for \"" + query.str() + "\""), query_(query) {}

GroupOracle::GroupOracle(int rank, std::string label, DecideFn decide, KeyFn key, bool exact)
    : rank_(rank), label_(std::move(label)), decide_(std::move(decide)), key_(std::move(key)), exact_(exact) {
  if (rank_ < 1) throw Error("oracle rank must be positive");
  if (!decide_) throw Error("oracle needs a decision procedure");
}

void GroupOracle::check_rank(const Word& w) const {
  if (w.rank() != rank_) {
    throw Error("word of rank " + std::to_string(w.rank()) + " given to rank-" + std::to_string(rank_) +
                " oracle '" + label_ + "'");
  }
}

Verdict GroupOracle::decide(const Word& w) const {
  check_rank(w);
  const Word r = free_reduce(w);
  if (r.empty()) return Verdict::Identity;
  return decide_(r);
}

bool GroupOracle::is_identity(const Word& w) const {
  const Verdict v = decide(w);
  if (v == Verdict::Unknown) throw OracleUnknown(label_, w);
  return v == Verdict::Identity;
}

std::string GroupOracle::key(const Word& w) const {
  check_rank(w);
  if (!key_) throw Error("oracle '" + label_ + "' has no canonical key");
  return key_(free_reduce(w));
}

long long exponent_sum(const Word& w, int index) {
  long long s = 0;
  for (auto c : w.codes()) {
    if (c == index) ++s;
    if (c == -index) --s;
  }
  return s;
}

namespace {

std::string encode_ints(const std::vector<long long>& v) {
  std::string out;
  out.reserve(v.size() * sizeof(long long));
  for (long long x : v) out.append(reinterpret_cast<const char*>(&x), sizeof x);
  return out;
}

}  // namespace

GroupOracle free_oracle(int rank) {
  return GroupOracle(
      rank, "free:" + std::to_string(rank),
      [](const Word& w) { return w.empty() ? Verdict::Identity : Verdict::NonIdentity; },
      [](const Word& w) {
        auto c = w.codes();
        return std::string(reinterpret_cast<const char*>(c.data()), c.size() * sizeof(LetterCode));
      });
}

GroupOracle abelian_oracle(int rank) {
  auto exponents = [rank](const Word& w) {
    std::vector<long long> e(static_cast<std::size_t>(rank), 0);
    for (auto c : w.codes()) e[static_cast<std::size_t>(std::abs(c) - 1)] += c > 0 ? 1 : -1;
    return e;
  };
  return GroupOracle(
      rank, "abelian:" + std::to_string(rank),
      [exponents](const Word& w) {
        for (long long e : exponents(w)) {
          if (e != 0) return Verdict::NonIdentity;
        }
        return Verdict::Identity;
      },
      [exponents](const Word& w) { return encode_ints(exponents(w)); });
}

GroupOracle trivial_oracle(int rank) {
  return GroupOracle(
      rank, "trivial:" + std::to_string(rank), [](const Word&) { return Verdict::Identity; },
      [](const Word&) { return std::string(); });
}

GroupOracle integer_oracle(std::vector<long long> weights) {
  if (weights.empty()) throw Error("integer oracle needs at least one weight");
  const int rank = static_cast<int>(weights.size());
  std::string label = "zlinear:";
  for (std::size_t i = 0; i < weights.size(); ++i) label += (i ? "," : "") + std::to_string(weights[i]);
  auto value = [weights](const Word& w) {
    long long v = 0;
    for (auto c : w.codes()) v += (c > 0 ? 1 : -1) * weights[static_cast<std::size_t>(std::abs(c) - 1)];
    return v;
  };
  return GroupOracle(
      rank, label, [value](const Word& w) { return value(w) == 0 ? Verdict::Identity : Verdict::NonIdentity; },
      [value](const Word& w) { return encode_ints({value(w)}); });
}

GroupOracle cyclic_oracle(long long modulus, std::vector<long long> weights) {
  if (modulus < 1) throw Error("cyclic oracle needs a positive modulus");
  if (weights.empty()) throw Error("cyclic oracle needs at least one weight");
  const int rank = static_cast<int>(weights.size());
  std::string label = "zmod:" + std::to_string(modulus) + ":";
  for (std::size_t i = 0; i < weights.size(); ++i) label += (i ? "," : "") + std::to_string(weights[i]);
  auto residue = [modulus, weights](const Word& w) {
    long long v = 0;
    for (auto c : w.codes()) {
      v += (c > 0 ? 1 : -1) * weights[static_cast<std::size_t>(std::abs(c) - 1)];
      v %= modulus;
    }
    return ((v % modulus) + modulus) % modulus;
  };
  return GroupOracle(
      rank, label, [residue](const Word& w) { return residue(w) == 0 ? Verdict::Identity : Verdict::NonIdentity; },
      [residue](const Word& w) { return encode_ints({residue(w)}); });
}

GroupOracle involution_free_oracle(int rank) {
  // Erase signs, then cancel equal neighbours.
  auto normal = [](const Word& w) {
    std::string out;
    for (auto c : w.codes()) {
      const auto g = static_cast<char>(std::abs(c));
      if (!out.empty() && out.back() == g) {
        out.pop_back();
      } else {
        out.push_back(g);
      }
    }
    return out;
  };
  return GroupOracle(
      rank, "z2free:" + std::to_string(rank),
      [normal](const Word& w) { return normal(w).empty() ? Verdict::Identity : Verdict::NonIdentity; }, normal);
}

GroupOracle elementary_abelian2_oracle(int rank) {
  auto parity = [rank](const Word& w) {
    std::string out(static_cast<std::size_t>(rank), '0');
    for (auto c : w.codes()) {
      auto& b = out[static_cast<std::size_t>(std::abs(c) - 1)];
      b = b == '0' ? '1' : '0';
    }
    return out;
  };
  return GroupOracle(
      rank, "z2abelian:" + std::to_string(rank),
      [parity](const Word& w) {
        return parity(w).find('1') == std::string::npos ? Verdict::Identity : Verdict::NonIdentity;
      },
      parity);
}

}  // namespace mgw
