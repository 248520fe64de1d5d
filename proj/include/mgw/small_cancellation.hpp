#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "mgw/oracles.hpp"
#include "mgw/words.hpp"

namespace mgw {

struct Rational {
  long long num = 1;
  long long den = 6;

  static Rational parse(std::string_view text);
  std::string str() const;
};

// Finite presentation <x_1..x_n | relators>. Relators are stored cyclically
// reduced, non-empty and without duplicates.
class Presentation {
 public:
  explicit Presentation(int rank) : rank_(rank) {}
  Presentation(int rank, const std::vector<Word>& relators);

  // File format: first line "rank n", then one relator per line.
  static Presentation parse(std::string_view text);

  void add(const Word& relator);
  int rank() const { return rank_; }
  const std::vector<Word>& relators() const { return relators_; }

 private:
  int rank_;
  std::vector<Word> relators_;
};

// Closure of the relators under cyclic permutation and inversion, stored
// by its distinct cyclic words: each relator and (unless it is a cyclic
// conjugate of the relator) its inverse. Pieces are measured over the
// occurrence positions of these cycles, so a proper power overlaps itself.
// The elements themselves are produced on demand; for long relators there
// are too many to keep.
struct SymmetrizedRelatorSet {
  int rank = 0;
  std::vector<Word> cycles;
  // ceil(|c|/2) for each cycle, same order.
  std::vector<std::size_t> half_lengths;

  // Number of distinct elements.
  std::size_t size() const;
  // All elements, shortlex sorted.
  std::vector<Word> elements() const;
  bool contains(const Word& w) const;
};

// Least cyclic rotation in letter order.
Word least_rotation(const Word& w);

SymmetrizedRelatorSet symmetrize(const Presentation& p);

struct MetricReport {
  std::size_t max_piece_length = 0;
  std::size_t shortest_relator = 0;
  bool satisfied = true;
  std::optional<Word> witness_piece;
};

// Sorted index over every cyclic reading of every cycle. The longest piece
// starting at a position is the larger common prefix with its two sorted
// neighbours, and Dehn matches are found by binary search.
class RotationIndex {
 public:
  explicit RotationIndex(const SymmetrizedRelatorSet& s);

  std::size_t position_count() const { return positions_.size(); }
  std::size_t max_cycle_length() const { return max_len_; }
  std::size_t min_cycle_length() const { return min_len_; }

  // Length of the longest piece that starts at sorted position i.
  std::size_t longest_piece_at(std::size_t i) const;

  MetricReport metric_report(Rational lambda) const;

  struct Match {
    std::size_t length = 0;  // letters of the word consumed
    Word replacement;        // inverse of the rest of the relator
  };
  // Longest prefix of `query` that is more than half of some element; ties go
  // to the shortlex-least replacement.
  std::optional<Match> best_match(std::span<const LetterCode> query) const;

 private:
  struct Position {
    std::uint32_t cycle;
    std::uint32_t offset;
  };
  const LetterCode* reading(const Position& p) const { return storage_.data() + starts_[p.cycle] + p.offset; }
  std::size_t length(const Position& p) const { return lengths_[p.cycle]; }

  int rank_;
  std::vector<LetterCode> storage_;  // each cycle stored twice back to back
  std::vector<std::size_t> starts_;
  std::vector<std::size_t> lengths_;
  std::vector<Position> positions_;  // sorted
  std::vector<std::size_t> adjacent_lcp_;
  std::size_t max_len_ = 0;
  std::size_t min_len_ = 0;
};

MetricReport check_metric_condition(const SymmetrizedRelatorSet& s, Rational lambda);

// Dehn's algorithm against a symmetrized set. Construction verifies the
// C'(1/6) condition unless `unchecked` is set.
class DehnReducer {
 public:
  explicit DehnReducer(const SymmetrizedRelatorSet& s, bool unchecked = false);

  // Each rewrite picks the leftmost start, then the longest match, then the
  // shortlex-least replacement. `trace` receives the word length after every
  // rewrite.
  Word reduce(const Word& w, std::vector<std::size_t>* trace = nullptr) const;
  bool is_identity(const Word& w) const { return reduce(w).empty(); }
  int rank() const { return rank_; }

 private:
  int rank_;
  RotationIndex index_;
};

Word dehn_reduce(const Word& w, const SymmetrizedRelatorSet& s, bool unchecked = false);
bool dehn_is_identity(const Word& w, const SymmetrizedRelatorSet& s, bool unchecked = false);

// Normal-closure elements of reduced length <= budget reachable from the
// empty word by inserting relator rotations, without ever leaving that length
// bound. A semidecision: membership means Identity, absence means Unknown.
class NormalClosureBall {
 public:
  NormalClosureBall(const Presentation& p, std::size_t budget);

  Verdict decide(const Word& w) const;
  std::size_t size() const { return elements_.size(); }
  const std::unordered_set<Word, WordHash>& elements() const { return elements_; }

 private:
  int rank_;
  std::size_t budget_;
  std::unordered_set<Word, WordHash> elements_;
};

Verdict brute_force_is_identity(const Word& w, const Presentation& p, std::size_t length_budget);

// Exact oracle for a C'(1/6) presentation; decisions by Dehn's algorithm.
GroupOracle dehn_oracle(const Presentation& p, std::string label, bool unchecked = false);

}  // namespace mgw
