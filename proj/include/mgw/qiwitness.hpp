#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgw/cayley.hpp"

namespace mgw {

// Finite maps phi: B_G(M) -> H and psi: B_H(M) -> G, keyed by the source
// ball's vertex words.
struct WitnessPair {
  int C = 1;
  int M = 1;
  std::vector<std::pair<Word, Word>> phi;
  std::vector<std::pair<Word, Word>> psi;
};

// Drops the entries whose source lies outside B(m).
WitnessPair restrict_witness(const WitnessPair& p, int m);

struct Violation {
  char condition = 'a';   // 'a' basepoint, 'b' coarse Lipschitz, 'c' coarse inverse
  std::string map;        // "phi" or "psi"
  Word first;             // sources (for 'a': the root and its image)
  Word second;
  std::optional<int> measured;  // nullopt: larger than the bound
  int bound = 0;
};

struct CheckReport {
  bool passed = true;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // first few only
};

CheckReport check_witness(const MarkedGroup& a, const MarkedGroup& b, const WitnessPair& p, BuildOptions opts = {});

struct CountingCertificate {
  bool impossible = false;
  // Which map's fibres overflow: "phi" (fibres in G) or "psi" (fibres in H).
  std::string map;
  int source_radius = -1;   // m = floor(M/C) - 1
  std::uint64_t source_ball = 0;  // |B(m)| in the source of the map
  std::uint64_t fibre_ball = 0;   // |B(C)| in the source of the map
  int target_radius = 0;          // C(m+1)
  std::uint64_t target_ball = 0;  // |B(C(m+1))| in the target
};

// Sound necessary condition for a witness at (C, M). With m = floor(M/C) - 1,
// psi sends B_H(m) into B_G(M) and each psi-fibre there lies in a C-ball
// around one phi-image, so |B_H(m)| <= |B_H(C)| * |B_G(C(m+1))|; likewise
// with the roles swapped.
CountingCertificate counting_precheck(const MarkedGroup& a, const MarkedGroup& b, int C, int M, BuildOptions opts = {});

struct SearchOutcome {
  enum class Status { Found, NonExistent, BudgetExceeded };
  Status status = Status::NonExistent;
  std::optional<WitnessPair> witness;
  std::string certificate_kind;  // "counting" or "exhaustive" when NonExistent
  std::optional<CountingCertificate> counting;
  std::uint64_t nodes = 0;  // placements made
};

std::string_view to_string(SearchOutcome::Status s);

// Backtracking over phi and psi slots, layer by layer, candidates in
// shortlex order. Root images are fixed; every other placement counts
// against node_budget.
SearchOutcome search_witness(const MarkedGroup& a, const MarkedGroup& b, int C, int M, std::uint64_t node_budget,
                             BuildOptions opts = {});

// Reference answer by plain enumeration of all phi, then all psi, with no
// pruning. Only for tiny balls; throws when the space is too large.
std::optional<WitnessPair> enumerate_witness_unpruned(const MarkedGroup& a, const MarkedGroup& b, int C, int M,
                                                      std::uint64_t max_maps = 50'000'000);

// Witness for a quotient q = g/N with N finite and central. phi reads each
// vertex word of B_g(M) in q; psi sends each vertex of B_q(M) to its
// shortlex-least preimage vertex. C = 1 + max length of kernel_words.
WitnessPair quotient_witness(const MarkedGroup& g, const MarkedGroup& q, const std::vector<Word>& kernel_words, int M,
                             BuildOptions opts = {});

// Both maps read vertex words unchanged in the other group (equal ranks).
WitnessPair word_map_witness(const MarkedGroup& g, const MarkedGroup& h, int C, int M, BuildOptions opts = {});

struct QiScanEntry {
  int C = 1;
  int M = 1;
  SearchOutcome outcome;
};

struct QiScanSummary {
  int C = 1;
  std::string verdict;  // "witness found", "certified not C-related", "inconclusive"
  std::optional<int> at_M;
};

struct QiScanReport {
  std::vector<QiScanEntry> entries;
  std::vector<QiScanSummary> summary;
  std::string note;
};

extern const char* const kScanNote;

QiScanReport qi_scan(const MarkedGroup& a, const MarkedGroup& b, int C_max, const std::vector<int>& M_schedule,
                     std::uint64_t node_budget, BuildOptions opts = {});

}  // namespace mgw
