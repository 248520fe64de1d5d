#include "mgw/hall.hpp"

#include <algorithm>
#include <iterator>

namespace mgw {

namespace {

std::vector<long long> sym_diff(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Central contribution of moving the lamps `right` leftward past `left`:
// e_{j-k} for every j in left, k in right with j > k.
std::vector<long long> cocycle(const std::vector<long long>& left, const std::vector<long long>& right) {
  std::vector<long long> toggles;
  for (long long j : left) {
    for (long long k : right) {
      if (k >= j) break;
      toggles.push_back(j - k);
    }
  }
  std::sort(toggles.begin(), toggles.end());
  std::vector<long long> odd;
  for (std::size_t i = 0; i < toggles.size();) {
    std::size_t e = i;
    while (e < toggles.size() && toggles[e] == toggles[i]) ++e;
    if ((e - i) % 2 == 1) odd.push_back(toggles[i]);
    i = e;
  }
  return odd;
}

std::string list(const std::vector<long long>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

}  // namespace

std::string HallElement::str() const { return "(" + std::to_string(shift) + "," + list(lamps) + "," + list(center) + ")"; }

HallElement hall_identity() { return {}; }
HallElement hall_a() { return {0, {0}, {}}; }
HallElement hall_t() { return {1, {}, {}}; }
HallElement hall_e(long long k) {
  if (k < 1) throw Error("central coordinates start at 1");
  return {0, {}, {k}};
}

HallElement hall_mul(const HallElement& x, const HallElement& y) {
  std::vector<long long> moved(y.lamps);
  for (auto& k : moved) k += x.shift;
  HallElement out;
  out.shift = x.shift + y.shift;
  out.lamps = sym_diff(x.lamps, moved);
  out.center = sym_diff(sym_diff(x.center, y.center), cocycle(x.lamps, moved));
  return out;
}

HallElement hall_inv(const HallElement& x) {
  HallElement out;
  out.shift = -x.shift;
  out.lamps = x.lamps;
  for (auto& k : out.lamps) k -= x.shift;
  out.center = sym_diff(x.center, cocycle(x.lamps, x.lamps));
  return out;
}

HallElement hall_eval(const Word& w) {
  if (w.rank() != 2) throw Error("Hall words have rank 2");
  HallElement x;
  for (auto c : w.codes()) {
    if (c == 2) {
      ++x.shift;
    } else if (c == -2) {
      --x.shift;
    } else {
      // Right multiplication by a toggles the lamp at the cursor; lamps to
      // its right are moved past it.
      const long long at = x.shift;
      std::vector<long long> toggles;
      for (long long j : x.lamps) {
        if (j > at) toggles.push_back(j - at);
      }
      std::sort(toggles.begin(), toggles.end());
      x.center = sym_diff(x.center, toggles);
      x.lamps = sym_diff(x.lamps, {at});
    }
  }
  return x;
}

Word hall_e_word(long long k) {
  if (k < 1) throw Error("e_k needs k >= 1");
  std::vector<LetterCode> c;
  auto rep = [&](LetterCode l, long long n) {
    for (long long i = 0; i < n; ++i) c.push_back(l);
  };
  c.push_back(1);
  rep(-2, k);
  c.push_back(1);
  rep(2, k);
  c.push_back(1);
  rep(-2, k);
  c.push_back(1);
  rep(2, k);
  return Word(2, std::move(c));
}

namespace {

std::string encode(long long shift, const std::vector<long long>& lamps, const std::vector<long long>& center) {
  std::string out;
  auto put = [&](long long v) { out.append(reinterpret_cast<const char*>(&v), sizeof v); };
  put(shift);
  put(static_cast<long long>(lamps.size()));
  for (long long v : lamps) put(v);
  for (long long v : center) put(v);
  return out;
}

GroupOracle hall_quotient(std::string label, std::function<std::vector<long long>(const std::vector<long long>&)> project) {
  auto reduce = [project](const Word& w) {
    HallElement x = hall_eval(w);
    x.center = project(x.center);
    return x;
  };
  return GroupOracle(
      2, std::move(label),
      [reduce](const Word& w) {
        const HallElement x = reduce(w);
        return x == HallElement{} ? Verdict::Identity : Verdict::NonIdentity;
      },
      [reduce](const Word& w) {
        const HallElement x = reduce(w);
        return encode(x.shift, x.lamps, x.center);
      });
}

}  // namespace

GroupOracle hall_oracle(const SubsetSpec& killed) {
  return hall_quotient("hall:" + killed.str(), [killed](const std::vector<long long>& c) {
    std::vector<long long> out;
    for (long long k : c) {
      if (!killed.contains(k)) out.push_back(k);
    }
    return out;
  });
}

GroupOracle lamplighter_oracle() {
  return hall_quotient("lamplighter", [](const std::vector<long long>&) { return std::vector<long long>{}; });
}

GroupOracle pqi_oracle(const SubsetSpec& killed) {
  if (killed.contains(1)) throw Error("pqi subsets must not contain 1");
  return hall_quotient("pqi:" + killed.str(), [killed](const std::vector<long long>& c) {
    bool odd = false;
    for (long long k : c) {
      if (!killed.contains(k)) odd = !odd;
    }
    return odd ? std::vector<long long>{1} : std::vector<long long>{};
  });
}

}  // namespace mgw
