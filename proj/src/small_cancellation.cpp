#include "mgw/small_cancellation.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include "mgw/kernels.hpp"

namespace mgw {

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw Error("bad rational \"" + std::string(text) + "\"");
    return v;
  };
  Rational r;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    r.num = parse_int(text);
    r.den = 1;
  } else {
    r.num = parse_int(text.substr(0, slash));
    r.den = parse_int(text.substr(slash + 1));
  }
  if (r.den <= 0) throw Error("rational needs a positive denominator");
  return r;
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Presentation::Presentation(int rank, const std::vector<Word>& relators) : rank_(rank) {
  for (const auto& r : relators) add(r);
}

void Presentation::add(const Word& relator) {
  if (relator.rank() != rank_) throw Error("relator rank does not match presentation rank");
  Word r = cyclic_reduce(relator);
  if (r.empty()) throw Error("empty relator");
  if (std::find(relators_.begin(), relators_.end(), r) == relators_.end()) relators_.push_back(std::move(r));
}

Presentation Presentation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Presentation> p;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!p) {
      std::istringstream head(line);
      std::string kw;
      int n = 0;
      if (!(head >> kw >> n) || kw != "rank" || n < 1) {
        throw Error("line " + std::to_string(line_no) + ": expected \"rank n\"");
      }
      p.emplace(n);
      continue;
    }
    try {
      p->add(Word::parse(line, p->rank()));
    } catch (const Error& e) {
      throw Error("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!p) throw Error("presentation has no \"rank n\" line");
  return *p;
}

namespace {

std::vector<Word> rotations(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(cyclic_shift(w, k));
  return out;
}

// Smallest p with w equal to its rotation by p.
std::size_t period(const Word& w) {
  const auto c = w.codes();
  const std::size_t n = c.size();
  std::vector<std::size_t> fail(n + 1, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && c[i] != c[k]) k = fail[k];
    if (c[i] == c[k]) ++k;
    fail[i + 1] = k;
  }
  const std::size_t p = n - fail[n];
  return n % p == 0 ? p : n;
}

}  // namespace

Word least_rotation(const Word& w) {
  // Booth's algorithm on letter ranks.
  const auto c = w.codes();
  const std::size_t n = c.size();
  if (n == 0) return w;
  auto at = [&](std::size_t i) { return letter_rank(c[i % n]); };
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const int a = at(i + k);
    const int b = at(j + k);
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return cyclic_shift(w, std::min(i, j));
}

SymmetrizedRelatorSet symmetrize(const Presentation& p) {
  SymmetrizedRelatorSet s;
  s.rank = p.rank();
  std::set<Word, ShortlexLess> classes;
  for (const auto& rel : p.relators()) {
    if (rel.empty()) throw Error("empty relator");
    const Word r = cyclic_reduce(rel);
    if (r.empty()) throw Error("relator is trivial in the free group");
    const Word ri = invert(r);
    const Word lr = least_rotation(r);
    const Word lri = least_rotation(ri);
    if (!classes.insert(std::min(lr, lri, ShortlexLess{})).second) continue;
    s.cycles.push_back(r);
    if (lr != lri) s.cycles.push_back(ri);
  }
  for (const auto& c : s.cycles) s.half_lengths.push_back((c.size() + 1) / 2);
  return s;
}

std::size_t SymmetrizedRelatorSet::size() const {
  std::size_t n = 0;
  for (const auto& c : cycles) n += period(c);
  return n;
}

std::vector<Word> SymmetrizedRelatorSet::elements() const {
  std::vector<Word> out;
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < period(c); ++k) out.push_back(cyclic_shift(c, k));
  }
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

bool SymmetrizedRelatorSet::contains(const Word& w) const {
  if (w.empty() || w.rank() != rank) return false;
  const Word lw = least_rotation(w);
  for (const auto& c : cycles) {
    if (c.size() == w.size() && least_rotation(c) == lw) return true;
  }
  return false;
}

namespace {

// Lexicographic comparison in letter order; a proper prefix sorts first.
int compare_readings(const LetterCode* a, std::size_t na, const LetterCode* b, std::size_t nb) {
  const std::size_t m = std::min(na, nb);
  const std::size_t l = kernels::common_prefix(a, b, m);
  if (l < m) return letter_rank(a[l]) < letter_rank(b[l]) ? -1 : 1;
  if (na == nb) return 0;
  return na < nb ? -1 : 1;
}

}  // namespace

RotationIndex::RotationIndex(const SymmetrizedRelatorSet& s) : rank_(s.rank) {
  for (const auto& c : s.cycles) {
    starts_.push_back(storage_.size());
    lengths_.push_back(c.size());
    for (int rep = 0; rep < 2; ++rep) {
      for (auto code : c.codes()) storage_.push_back(code);
    }
    max_len_ = std::max(max_len_, c.size());
    min_len_ = min_len_ == 0 ? c.size() : std::min(min_len_, c.size());
  }
  for (std::uint32_t ci = 0; ci < lengths_.size(); ++ci) {
    for (std::uint32_t off = 0; off < lengths_[ci]; ++off) positions_.push_back({ci, off});
  }
  std::sort(positions_.begin(), positions_.end(), [&](const Position& x, const Position& y) {
    const int c = compare_readings(reading(x), length(x), reading(y), length(y));
    if (c != 0) return c < 0;
    return std::tie(x.cycle, x.offset) < std::tie(y.cycle, y.offset);
  });
  adjacent_lcp_.resize(positions_.empty() ? 0 : positions_.size() - 1);
  for (std::size_t i = 0; i + 1 < positions_.size(); ++i) {
    const auto& x = positions_[i];
    const auto& y = positions_[i + 1];
    adjacent_lcp_[i] = kernels::common_prefix(reading(x), reading(y), std::min(length(x), length(y)));
  }
}

std::size_t RotationIndex::longest_piece_at(std::size_t i) const {
  std::size_t best = 0;
  if (i > 0) best = adjacent_lcp_[i - 1];
  if (i < adjacent_lcp_.size()) best = std::max(best, adjacent_lcp_[i]);
  return best;
}

MetricReport RotationIndex::metric_report(Rational lambda) const {
  if (lambda.num <= 0 || lambda.num >= lambda.den) throw Error("lambda must lie strictly between 0 and 1");
  MetricReport rep;
  rep.shortest_relator = min_len_;
  std::size_t witness_pos = 0;
  std::size_t witness_len = 0;
  bool violated = false;
  for (std::size_t i = 0; i < positions_.size(); ++i) {
    const std::size_t piece = longest_piece_at(i);
    rep.max_piece_length = std::max(rep.max_piece_length, piece);
    const auto n = static_cast<long long>(length(positions_[i]));
    if (static_cast<long long>(piece) * lambda.den < lambda.num * n) continue;
    // Positions are sorted, so among equal lengths the first seen is the
    // shortlex-least piece.
    if (!violated || piece > witness_len) {
      violated = true;
      witness_pos = i;
      witness_len = piece;
    }
  }
  rep.satisfied = !violated;
  if (violated) {
    const LetterCode* r = reading(positions_[witness_pos]);
    rep.witness_piece = Word(rank_, std::vector<LetterCode>(r, r + witness_len));
  }
  return rep;
}

std::optional<RotationIndex::Match> RotationIndex::best_match(std::span<const LetterCode> query) const {
  if (positions_.empty() || query.empty()) return std::nullopt;
  const std::size_t q = query.size();
  const std::size_t threshold = min_len_ / 2 + 1;
  if (q < threshold) return std::nullopt;
  const auto it = std::lower_bound(positions_.begin(), positions_.end(), query, [&](const Position& p, auto) {
    return compare_readings(reading(p), length(p), query.data(), q) < 0;
  });
  const std::size_t mid = static_cast<std::size_t>(it - positions_.begin());

  std::optional<Match> best;
  auto consider = [&](const Position& p, std::size_t lcp) {
    const std::size_t n = length(p);
    if (2 * lcp <= n) return;
    if (best && lcp < best->length) return;
    // Replacement is invert(reading[lcp..n)).
    Word repl(rank_);
    const LetterCode* r = reading(p);
    for (std::size_t k = n; k > lcp; --k) repl.push_back_code(static_cast<LetterCode>(-r[k - 1]));
    if (best && lcp == best->length && !shortlex_less(repl, best->replacement)) return;
    best = Match{lcp, std::move(repl)};
  };
  // Common prefixes with the query only shrink moving away from the insertion
  // point, so both scans stop at the first position below the threshold.
  for (std::size_t i = mid; i < positions_.size(); ++i) {
    const auto& p = positions_[i];
    const std::size_t lcp = kernels::common_prefix(reading(p), query.data(), std::min(length(p), q));
    if (lcp < threshold) break;
    consider(p, lcp);
  }
  for (std::size_t i = mid; i > 0; --i) {
    const auto& p = positions_[i - 1];
    const std::size_t lcp = kernels::common_prefix(reading(p), query.data(), std::min(length(p), q));
    if (lcp < threshold) break;
    consider(p, lcp);
  }
  return best;
}

MetricReport check_metric_condition(const SymmetrizedRelatorSet& s, Rational lambda) {
  return RotationIndex(s).metric_report(lambda);
}

DehnReducer::DehnReducer(const SymmetrizedRelatorSet& s, bool unchecked) : rank_(s.rank), index_(s) {
  if (!unchecked) {
    const auto rep = index_.metric_report(Rational{1, 6});
    if (!rep.satisfied) {
      throw Error("relators fail C'(1/6) (piece \"" + rep.witness_piece->str() +
                  "\"); Dehn reduction needs the unchecked flag");
    }
  }
}

Word DehnReducer::reduce(const Word& w, std::vector<std::size_t>* trace) const {
  if (w.rank() != rank_) throw Error("word rank does not match relator rank");
  Word cur = free_reduce(w);
  const std::size_t reach = index_.max_cycle_length();
  std::size_t start = 0;
  for (;;) {
    bool rewrote = false;
    for (std::size_t p = start; p < cur.size(); ++p) {
      auto m = index_.best_match(cur.codes().subspan(p));
      if (!m) continue;
      std::vector<LetterCode> next(cur.codes().begin(), cur.codes().begin() + static_cast<std::ptrdiff_t>(p));
      for (auto c : m->replacement.codes()) next.push_back(c);
      for (std::size_t k = p + m->length; k < cur.size(); ++k) next.push_back(cur.codes()[k]);
      Word reduced = free_reduce(Word(rank_, std::move(next)));
      // Nothing to the left of the unchanged prefix can match: such a match
      // would have been found earlier in this scan.
      const std::size_t same = kernels::common_prefix(cur.codes().data(), reduced.codes().data(),
                                                      std::min(cur.size(), reduced.size()));
      start = same + 1 > reach ? same + 1 - reach : 0;
      cur = std::move(reduced);
      if (trace) trace->push_back(cur.size());
      rewrote = true;
      break;
    }
    if (!rewrote) return cur;
  }
}

Word dehn_reduce(const Word& w, const SymmetrizedRelatorSet& s, bool unchecked) {
  return DehnReducer(s, unchecked).reduce(w);
}

bool dehn_is_identity(const Word& w, const SymmetrizedRelatorSet& s, bool unchecked) {
  return DehnReducer(s, unchecked).is_identity(w);
}

NormalClosureBall::NormalClosureBall(const Presentation& p, std::size_t budget) : rank_(p.rank()), budget_(budget) {
  std::set<Word, ShortlexLess> rots;
  for (const auto& r : p.relators()) {
    for (const auto& w : rotations(r)) rots.insert(w);
    for (const auto& w : rotations(invert(r))) rots.insert(w);
  }
  std::deque<Word> queue;
  elements_.insert(Word(rank_));
  queue.emplace_back(rank_);
  std::vector<LetterCode> stack;
  while (!queue.empty()) {
    const Word t = std::move(queue.front());
    queue.pop_front();
    const auto tc = t.codes();
    for (std::size_t i = 0; i <= t.size(); ++i) {
      for (const auto& rho : rots) {
        // At most |t| letters of rho can cancel.
        if (rho.size() > budget_ + t.size()) continue;
        stack.assign(tc.begin(), tc.begin() + static_cast<std::ptrdiff_t>(i));
        auto push = [&](LetterCode c) {
          if (!stack.empty() && stack.back() == -c) {
            stack.pop_back();
          } else {
            stack.push_back(c);
          }
        };
        for (auto c : rho.codes()) push(c);
        for (std::size_t k = i; k < t.size(); ++k) push(tc[k]);
        if (stack.size() > budget_) continue;
        Word u(rank_, stack);
        if (elements_.insert(u).second) queue.push_back(std::move(u));
      }
    }
  }
}

Verdict NormalClosureBall::decide(const Word& w) const {
  if (w.rank() != rank_) throw Error("word rank does not match presentation rank");
  return elements_.count(free_reduce(w)) ? Verdict::Identity : Verdict::Unknown;
}

namespace {

std::string presentation_key(const Presentation& p, std::size_t budget) {
  std::string key = std::to_string(p.rank()) + "|" + std::to_string(budget);
  for (const auto& r : p.relators()) key += "|" + r.str();
  return key;
}

}  // namespace

Verdict brute_force_is_identity(const Word& w, const Presentation& p, std::size_t length_budget) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const NormalClosureBall>> cache;
  const std::string key = presentation_key(p, length_budget);
  std::shared_ptr<const NormalClosureBall> ball;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) ball = it->second;
  }
  if (!ball) {
    auto built = std::make_shared<const NormalClosureBall>(p, length_budget);
    std::lock_guard lock(mu);
    ball = cache.emplace(key, std::move(built)).first->second;
  }
  return ball->decide(w);
}

GroupOracle dehn_oracle(const Presentation& p, std::string label, bool unchecked) {
  auto reducer = std::make_shared<const DehnReducer>(symmetrize(p), unchecked);
  return GroupOracle(p.rank(), std::move(label), [reducer](const Word& w) {
    return reducer->is_identity(w) ? Verdict::Identity : Verdict::NonIdentity;
  });
}

}  // namespace mgw
