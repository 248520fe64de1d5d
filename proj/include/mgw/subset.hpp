#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mgw {

// A finitely described subset of {1, 2, 3, ...}.
//
// Grammar:
//   finite:{i,j,...}  cofinite:{i,j,...}  arith:<mod>,<res>[,<res>...]
//   bits:<01-string>[,default=<0|1>]     (bit k is membership of k)
// Any of these may be followed by "+{i,...}" and/or "-{i,...}" to force
// members in or out.
class SubsetSpec {
 public:
  enum class Kind { Finite, Cofinite, Arithmetic, BitPrefix };

  static SubsetSpec finite(std::set<long long> members);
  static SubsetSpec cofinite(std::set<long long> complement);
  static SubsetSpec arithmetic(long long modulus, std::set<long long> residues);
  static SubsetSpec bit_prefix(std::string bits, bool default_bit);

  Kind kind() const { return kind_; }
  bool contains(long long i) const;
  // Members in [1..m], ascending.
  std::vector<long long> members_upto(long long m) const;

  SubsetSpec with(long long i) const;
  SubsetSpec without(long long i) const;

  // Round-trips through parse_subset.
  std::string str() const;

 private:
  Kind kind_ = Kind::Finite;
  std::set<long long> values_;  // members, complement or residues
  long long modulus_ = 1;
  std::string bits_;
  bool default_bit_ = false;
  std::set<long long> forced_in_;
  std::set<long long> forced_out_;
};

SubsetSpec parse_subset(std::string_view text);

}  // namespace mgw
