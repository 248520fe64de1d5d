#include "mgw/golden.hpp"

#include <algorithm>
#include <sstream>

#include "mgw/families.hpp"
#include "mgw/hall.hpp"
#include "mgw/qiwitness.hpp"

namespace mgw {

namespace reference {

std::vector<std::size_t> ball_sizes(const GroupOracle& g, int r) {
  std::vector<Word> seen{Word(g.rank())};
  std::vector<Word> layer = seen;
  std::vector<std::size_t> sizes{1};
  auto known = [&](const Word& w) {
    for (const auto& s : seen) {
      if (g.is_identity(concat(w, invert(s)))) return true;
    }
    return false;
  };
  for (int k = 1; k <= r; ++k) {
    std::vector<Word> next;
    for (const auto& v : layer) {
      for (int i = 1; i <= g.rank(); ++i) {
        for (int sign : {1, -1}) {
          Word w = v;
          w.push_back(Letter{i, sign});
          w = free_reduce(w);
          if (known(w)) continue;
          seen.push_back(w);
          next.push_back(w);
        }
      }
    }
    layer = std::move(next);
    sizes.push_back(seen.size());
  }
  return sizes;
}

namespace {

struct Reading {
  const LetterCode* data;
  std::size_t length;
  std::size_t cycle;
};

std::vector<std::vector<LetterCode>> doubled_cycles(const SymmetrizedRelatorSet& s) {
  std::vector<std::vector<LetterCode>> out;
  for (const auto& c : s.cycles) {
    std::vector<LetterCode> d(c.codes().begin(), c.codes().end());
    d.insert(d.end(), c.codes().begin(), c.codes().end());
    out.push_back(std::move(d));
  }
  return out;
}

bool violates(std::size_t piece, std::size_t n, Rational lambda) {
  return static_cast<long long>(piece) * lambda.den >= lambda.num * static_cast<long long>(n);
}

}  // namespace

PieceSummary pieces_pairwise(const SymmetrizedRelatorSet& s, Rational lambda) {
  const auto cyc = doubled_cycles(s);
  std::vector<Reading> pos;
  for (std::size_t c = 0; c < cyc.size(); ++c) {
    const std::size_t n = cyc[c].size() / 2;
    for (std::size_t o = 0; o < n; ++o) pos.push_back({cyc[c].data() + o, n, c});
  }
  PieceSummary out;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = 0; j < pos.size(); ++j) {
      if (i == j) continue;
      const std::size_t m = std::min(pos[i].length, pos[j].length);
      std::size_t l = 0;
      while (l < m && pos[i].data[l] == pos[j].data[l]) ++l;
      out.max_piece = std::max(out.max_piece, l);
      if (violates(l, pos[i].length, lambda)) out.satisfied = false;
    }
  }
  return out;
}

namespace {

class HashedReadings {
 public:
  explicit HashedReadings(const SymmetrizedRelatorSet& s) : cyc_(doubled_cycles(s)) {
    for (const auto& d : cyc_) {
      std::vector<std::uint64_t> pre(d.size() + 1, 0);
      for (std::size_t i = 0; i < d.size(); ++i) pre[i + 1] = pre[i] * kBase + static_cast<std::uint64_t>(d[i] + 40000);
      prefix_.push_back(std::move(pre));
    }
  }

  std::size_t max_length() const {
    std::size_t m = 0;
    for (const auto& d : cyc_) m = std::max(m, d.size() / 2);
    return m;
  }

  // For every cycle: does one of its length-k readings occur at some other
  // position (of a cycle at least k long)?
  std::vector<bool> repeated(std::size_t k) const {
    struct Entry {
      std::uint64_t h;
      std::size_t cycle;
      std::size_t offset;
    };
    std::vector<Entry> all;
    std::uint64_t pk = 1;
    for (std::size_t i = 0; i < k; ++i) pk *= kBase;
    for (std::size_t c = 0; c < cyc_.size(); ++c) {
      const std::size_t n = cyc_[c].size() / 2;
      if (n < k) continue;
      for (std::size_t o = 0; o < n; ++o) all.push_back({prefix_[c][o + k] - prefix_[c][o] * pk, c, o});
    }
    std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) {
      return std::tie(a.h, a.cycle, a.offset) < std::tie(b.h, b.cycle, b.offset);
    });
    std::vector<bool> hit(cyc_.size(), false);
    for (std::size_t i = 0; i < all.size();) {
      std::size_t e = i;
      while (e < all.size() && all[e].h == all[i].h) ++e;
      // Confirm equal hashes letter by letter, splitting off any collisions.
      std::vector<std::size_t> rest;
      for (std::size_t x = i; x < e; ++x) rest.push_back(x);
      while (rest.size() > 1) {
        const LetterCode* head = cyc_[all[rest[0]].cycle].data() + all[rest[0]].offset;
        std::vector<std::size_t> same, other;
        for (std::size_t x : rest) {
          const LetterCode* a = cyc_[all[x].cycle].data() + all[x].offset;
          (std::equal(a, a + k, head) ? same : other).push_back(x);
        }
        if (same.size() > 1) {
          for (std::size_t x : same) hit[all[x].cycle] = true;
        }
        rest = std::move(other);
      }
      i = e;
    }
    return hit;
  }

  std::size_t cycle_length(std::size_t c) const { return cyc_[c].size() / 2; }
  std::size_t cycles() const { return cyc_.size(); }

 private:
  static constexpr std::uint64_t kBase = 0x9E3779B97F4A7C15ull;
  std::vector<std::vector<LetterCode>> cyc_;
  std::vector<std::vector<std::uint64_t>> prefix_;
};

}  // namespace

PieceSummary pieces_hashed(const SymmetrizedRelatorSet& s, Rational lambda) {
  const HashedReadings h(s);
  auto any = [&](std::size_t k) {
    const auto v = h.repeated(k);
    return std::find(v.begin(), v.end(), true) != v.end();
  };
  PieceSummary out;
  std::size_t lo = 0;
  std::size_t hi = h.max_length();
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (any(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  out.max_piece = lo;
  for (std::size_t c = 0; c < h.cycles(); ++c) {
    const auto n = static_cast<long long>(h.cycle_length(c));
    const auto k = static_cast<std::size_t>((lambda.num * n + lambda.den - 1) / lambda.den);
    if (k == 0 || h.repeated(k)[c]) out.satisfied = false;
  }
  return out;
}

}  // namespace reference

namespace {

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string show_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::vector<GoldenResult> golden_suite(BuildOptions opts) {
  std::vector<GoldenResult> out;
  auto add = [&](std::string name, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    out.push_back({std::move(name), std::move(expected), std::move(actual), pass});
  };
  auto sizes = [&](const MarkedGroup& g, int r) {
    const Ball b = build_ball(g, r, opts);
    std::vector<std::size_t> v;
    for (int k = 0; k <= r; ++k) v.push_back(b.layer_start[static_cast<std::size_t>(k) + 1]);
    return v;
  };

  const MarkedGroup f2(free_oracle(2));
  const MarkedGroup z2(abelian_oracle(2));
  const MarkedGroup lamp(lamplighter_oracle());

  add("enumerate_words rank 2 length 2", "17", show(enumerate_words(2, 2).size()));
  add("free rank 2 balls r<=3", show_sizes(reference::ball_sizes(f2.oracle(), 3)), show_sizes(sizes(f2, 3)));
  add("abelian rank 2 balls r<=2", show_sizes(reference::ball_sizes(z2.oracle(), 2)), show_sizes(sizes(z2, 2)));
  add("lamplighter ball r=1", show_sizes(reference::ball_sizes(lamp.oracle(), 1)), show_sizes(sizes(lamp, 1)));

  add("free(2) ~ abelian(2) at r=1", "1", show(r_locally_isomorphic(f2, z2, 1, opts)));
  add("free(2) ~ abelian(2) at r=2", "0", show(r_locally_isomorphic(f2, z2, 2, opts)));
  add("free(1) ~ abelian(1) at r=4", "1",
      show(r_locally_isomorphic(MarkedGroup(free_oracle(1)), MarkedGroup(abelian_oracle(1)), 4, opts)));
  add("agreement radius free(2) vs abelian(2), R=5", "1", show(local_agreement_radius(f2, z2, 5, opts)));
  {
    Ball b = build_ball(f2, 2, opts);
    const auto before = signature(b);
    const auto it = std::find_if(b.edges.begin(), b.edges.end(), [](std::int32_t u) { return u >= 0; });
    *it = -1;
    add("dropping one edge changes the signature", "1", show(before != signature(b)));
  }
  add("kernel agreement free/abelian L=3", "1", show(kernel_agreement(f2, z2, 3).agree));
  {
    const auto k = kernel_agreement(f2, z2, 4);
    add("kernel agreement free/abelian L=4 witness", "x1 x2 X1 X2", k.witness ? k.witness->str() : "none");
  }

  {
    const auto s = symmetrize(Presentation(2, {Word::parse("x1 x2 x1 x2", 2)}));
    const auto lib = check_metric_condition(s, {1, 6});
    const auto ref = reference::pieces_pairwise(s, {1, 6});
    add("proper power fails C'(1/6)", show(ref.satisfied) + "/" + show(ref.max_piece),
        show(lib.satisfied) + "/" + show(lib.max_piece_length));
  }
  {
    Presentation all(2);
    for (int i = 1; i <= 8; ++i) all.add(bowditch_word(i));
    const auto s = symmetrize(all);
    const auto lib = check_metric_condition(s, {1, 6});
    const auto ref = reference::pieces_hashed(s, {1, 6});
    add("family w1..w8 satisfy C'(1/6)", "1/" + show(ref.satisfied) + "/" + show(ref.max_piece),
        show(lib.satisfied) + "/" + show(lib.satisfied) + "/" + show(lib.max_piece_length));
  }
  {
    const auto s = symmetrize(Presentation(2, {bowditch_word(1)}));
    add("symmetrized w1 size", show(2 * bowditch_word(1).size()), show(s.size()));
    const Word w2 = bowditch_word(2);
    add("w2 is Dehn-irreducible modulo w1", "1", show(dehn_reduce(w2, s) == w2));
  }

  add("Hall e1 word", "(0,{},{1})", hall_eval(Word::parse("a B a b a B a b", 2)).str());
  add("Hall a_1 a_0", "(0,{0,1},{1})", hall_mul({0, {1}, {}}, hall_a()).str());

  const MarkedGroup z1(abelian_oracle(1));
  {
    const auto c = counting_precheck(z1, z2, 1, 14, opts);
    add("counting bound Z vs Z^2 at C=1, M=14", "1 psi 365>5*29",
        show(c.impossible) + " " + c.map + " " + show(c.source_ball) + ">" + show(c.fibre_ball) + "*" + show(c.target_ball));
  }
  {
    const MarkedGroup z23(integer_oracle({2, 3}));
    const auto o = search_witness(z1, z23, 3, 4, 10'000'000, opts);
    const bool ok = o.status == SearchOutcome::Status::Found && check_witness(z1, z23, *o.witness, opts).passed;
    add("Z vs Z(2,3) witness at C=3, M=4", "1", show(ok));
  }
  {
    const std::vector<MarkedGroup> tiny{MarkedGroup(abelian_oracle(1)), MarkedGroup(trivial_oracle(1)),
                                        MarkedGroup(cyclic_oracle(3, {1})), MarkedGroup(involution_free_oracle(2)),
                                        MarkedGroup(elementary_abelian2_oracle(2))};
    std::size_t agree = 0;
    std::size_t total = 0;
    for (const auto& a : tiny) {
      for (const auto& b : tiny) {
        for (int M = 1; M <= 2; ++M) {
          const bool pruned = search_witness(a, b, 1, M, 100'000'000, opts).status == SearchOutcome::Status::Found;
          const bool plain = enumerate_witness_unpruned(a, b, 1, M).has_value();
          agree += pruned == plain;
          ++total;
        }
      }
    }
    add("pruned vs unpruned search on tiny groups", show(total), show(agree));
  }
  {
    const MarkedGroup g(hall_oracle(parse_subset("finite:{}")));
    const MarkedGroup q(hall_oracle(parse_subset("finite:{1}")));
    const auto w = quotient_witness(g, q, {hall_e_word(1)}, 3, opts);
    add("Hall quotient witness k=1, M=3", "9/1", show(w.C) + "/" + show(check_witness(g, q, w, opts).passed));
  }
  return out;
}

}  // namespace mgw
