#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mgw/words.hpp"

namespace mgw {

enum class Verdict { Identity, NonIdentity, Unknown };

std::string_view to_string(Verdict v);

// A word-problem oracle for a marked group: the computational form of the
// kernel of F_n -> G. Immutable once built; safe to query concurrently.
//
// `decide` only ever sees freely reduced words of the oracle's rank. An
// optional `key` returns a canonical encoding of the element a word
// represents (equal keys <=> equal elements); ball construction uses it to
// replace pairwise identity queries with hashing.
class GroupOracle {
 public:
  using DecideFn = std::function<Verdict(const Word&)>;
  using KeyFn = std::function<std::string(const Word&)>;

  GroupOracle(int rank, std::string label, DecideFn decide, KeyFn key = {}, bool exact = true);

  int rank() const { return rank_; }
  const std::string& label() const { return label_; }
  bool exact() const { return exact_; }
  bool has_key() const { return static_cast<bool>(key_); }

  Verdict decide(const Word& w) const;
  bool is_identity(const Word& w) const;  // throws OracleUnknown on Unknown
  std::string key(const Word& w) const;   // requires has_key()

 private:
  void check_rank(const Word& w) const;

  int rank_;
  std::string label_;
  DecideFn decide_;
  KeyFn key_;
  bool exact_;
};

// Raised when an operation that needs a definite answer gets Unknown.
class OracleUnknown : public Error {
 public:
  OracleUnknown(const std::string& label, const Word& query);
  const Word& query() const { return query_; }

 private:
  Word query_;
};

GroupOracle free_oracle(int rank);
// Z^n marked by the standard basis.
GroupOracle abelian_oracle(int rank);
// Every word is trivial.
GroupOracle trivial_oracle(int rank);
// Z marked by the integers `weights`: x_i -> weights[i-1].
GroupOracle integer_oracle(std::vector<long long> weights);
// Z/modulus marked by residues `weights`.
GroupOracle cyclic_oracle(long long modulus, std::vector<long long> weights);

// Free product of n copies of Z/2, each generator an involution.
GroupOracle involution_free_oracle(int rank);
// (Z/2)^n marked by the standard basis.
GroupOracle elementary_abelian2_oracle(int rank);

// Exponent sum of generator `index` in w.
long long exponent_sum(const Word& w, int index);

}  // namespace mgw
