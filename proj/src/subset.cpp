#include "mgw/subset.hpp"

#include <cctype>
#include <charconv>

#include "mgw/words.hpp"

namespace mgw {

SubsetSpec SubsetSpec::finite(std::set<long long> members) {
  SubsetSpec s;
  s.kind_ = Kind::Finite;
  s.values_ = std::move(members);
  return s;
}

SubsetSpec SubsetSpec::cofinite(std::set<long long> complement) {
  SubsetSpec s;
  s.kind_ = Kind::Cofinite;
  s.values_ = std::move(complement);
  return s;
}

SubsetSpec SubsetSpec::arithmetic(long long modulus, std::set<long long> residues) {
  if (modulus < 1) throw Error("arithmetic subset needs a positive modulus");
  SubsetSpec s;
  s.kind_ = Kind::Arithmetic;
  s.modulus_ = modulus;
  for (long long r : residues) s.values_.insert(((r % modulus) + modulus) % modulus);
  return s;
}

SubsetSpec SubsetSpec::bit_prefix(std::string bits, bool default_bit) {
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error("bit string may only contain 0 and 1");
  }
  SubsetSpec s;
  s.kind_ = Kind::BitPrefix;
  s.bits_ = std::move(bits);
  s.default_bit_ = default_bit;
  return s;
}

bool SubsetSpec::contains(long long i) const {
  if (i < 1) return false;
  if (forced_in_.count(i)) return true;
  if (forced_out_.count(i)) return false;
  switch (kind_) {
    case Kind::Finite:
      return values_.count(i) != 0;
    case Kind::Cofinite:
      return values_.count(i) == 0;
    case Kind::Arithmetic:
      return values_.count(i % modulus_) != 0;
    case Kind::BitPrefix:
      if (static_cast<std::size_t>(i) <= bits_.size()) return bits_[static_cast<std::size_t>(i - 1)] == '1';
      return default_bit_;
  }
  return false;
}

std::vector<long long> SubsetSpec::members_upto(long long m) const {
  std::vector<long long> out;
  for (long long i = 1; i <= m; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

SubsetSpec SubsetSpec::with(long long i) const {
  SubsetSpec s = *this;
  s.forced_out_.erase(i);
  s.forced_in_.insert(i);
  return s;
}

SubsetSpec SubsetSpec::without(long long i) const {
  SubsetSpec s = *this;
  s.forced_in_.erase(i);
  s.forced_out_.insert(i);
  return s;
}

namespace {

std::string braces(const std::set<long long>& v) {
  std::string out = "{";
  bool first = true;
  for (long long x : v) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("subset \"" + std::string(text_) + "\": " + what + " at position " + std::to_string(pos_));
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool eat(std::string_view s) {
    if (text_.substr(pos_).starts_with(s)) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view s) {
    if (!eat(s)) fail("expected \"" + std::string(s) + "\"");
  }
  long long integer() {
    long long v = 0;
    const char* b = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(b, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - b);
    return v;
  }
  std::set<long long> set_literal() {
    std::set<long long> out;
    expect("{");
    if (eat("}")) return out;
    for (;;) {
      const long long v = integer();
      if (v < 1) fail("members must be positive");
      out.insert(v);
      if (eat("}")) return out;
      expect(",");
    }
  }
  std::string bits() {
    std::string out;
    while (peek() == '0' || peek() == '1') out += text_[pos_++];
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string SubsetSpec::str() const {
  std::string out;
  switch (kind_) {
    case Kind::Finite:
      out = "finite:" + braces(values_);
      break;
    case Kind::Cofinite:
      out = "cofinite:" + braces(values_);
      break;
    case Kind::Arithmetic:
      out = "arith:" + std::to_string(modulus_);
      for (long long r : values_) out += "," + std::to_string(r);
      break;
    case Kind::BitPrefix:
      out = "bits:" + bits_ + ",default=" + (default_bit_ ? "1" : "0");
      break;
  }
  if (!forced_in_.empty()) out += "+" + braces(forced_in_);
  if (!forced_out_.empty()) out += "-" + braces(forced_out_);
  return out;
}

SubsetSpec parse_subset(std::string_view text) {
  Cursor cur(text);
  SubsetSpec s;
  if (cur.eat("finite:")) {
    s = SubsetSpec::finite(cur.set_literal());
  } else if (cur.eat("cofinite:")) {
    s = SubsetSpec::cofinite(cur.set_literal());
  } else if (cur.eat("arith:")) {
    const long long mod = cur.integer();
    if (mod < 1) cur.fail("modulus must be positive");
    std::set<long long> res;
    while (cur.eat(",")) res.insert(cur.integer());
    if (res.empty()) cur.fail("expected at least one residue");
    s = SubsetSpec::arithmetic(mod, res);
  } else if (cur.eat("bits:")) {
    const std::string b = cur.bits();
    bool def = false;
    if (cur.eat(",default=")) {
      if (cur.eat("1")) {
        def = true;
      } else {
        cur.expect("0");
      }
    }
    s = SubsetSpec::bit_prefix(b, def);
  } else {
    cur.fail("expected finite:, cofinite:, arith: or bits:");
  }
  while (!cur.done()) {
    if (cur.eat("+")) {
      for (long long i : cur.set_literal()) s = s.with(i);
    } else if (cur.eat("-")) {
      for (long long i : cur.set_literal()) s = s.without(i);
    } else {
      cur.fail("unexpected character");
    }
  }
  return s;
}

}  // namespace mgw
