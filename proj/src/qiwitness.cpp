#include "mgw/qiwitness.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "mgw/kernels.hpp"
#include "mgw/metric.hpp"

namespace mgw {

const char* const kScanNote =
    "certified not C-related for every C <= C_max does NOT certify non-quasi-isometry: quasi-isometry is the union of "
    "the C-relations over all C in N, an infinite union";

std::string_view to_string(SearchOutcome::Status s) {
  switch (s) {
    case SearchOutcome::Status::Found:
      return "Found";
    case SearchOutcome::Status::NonExistent:
      return "NonExistent";
    case SearchOutcome::Status::BudgetExceeded:
      return "BudgetExceeded";
  }
  return "?";
}

WitnessPair restrict_witness(const WitnessPair& p, int m) {
  WitnessPair out{p.C, m, {}, {}};
  for (const auto& e : p.phi) {
    if (static_cast<int>(e.first.size()) <= m) out.phi.push_back(e);
  }
  for (const auto& e : p.psi) {
    if (static_cast<int>(e.first.size()) <= m) out.psi.push_back(e);
  }
  return out;
}

namespace {

constexpr std::size_t kKeptViolations = 32;

void record(CheckReport& rep, Violation v) {
  rep.passed = false;
  ++rep.violation_count;
  if (rep.violations.size() < kKeptViolations) rep.violations.push_back(std::move(v));
}

// Images of the vertices of `ball` (up to radius M) in ball order.
std::vector<Word> images_in_order(const Ball& ball, int M, const std::vector<std::pair<Word, Word>>& map,
                                  const char* name, int target_rank) {
  const std::size_t n = ball.layer_start[static_cast<std::size_t>(M) + 1];
  std::unordered_map<Word, std::size_t, WordHash> where;
  for (std::size_t v = 0; v < n; ++v) where.emplace(ball.vertices[v], v);
  std::vector<std::optional<Word>> img(n);
  for (const auto& [src, dst] : map) {
    const auto it = where.find(src);
    if (it == where.end()) throw Error(std::string(name) + " is defined on \"" + src.str() + "\", which is not a vertex of the ball");
    if (img[it->second]) throw Error(std::string(name) + " lists \"" + src.str() + "\" twice");
    if (dst.rank() != target_rank) throw Error(std::string(name) + " image has the wrong rank");
    img[it->second] = dst;
  }
  std::vector<Word> out;
  out.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!img[v]) throw Error(std::string(name) + " is undefined on \"" + ball.vertices[v].str() + "\"");
    out.push_back(*img[v]);
  }
  return out;
}

// Conditions (b) and (c) for one direction: f from the source ball into the
// target, g from the target ball back.
void check_direction(MetricOracle& src, MetricOracle& dst, const std::vector<Word>& f, const std::vector<Word>& g, int C,
                     int M, const char* name, CheckReport& rep) {
  const Ball& sb = src.ball();
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto d = src.distance_upto(sb.vertices[i], sb.vertices[j], 2 * M);
      if (!d) throw std::logic_error("distance inside B(M) exceeds 2M");
      const int bound = C * *d + C;
      const Word z = concat(invert(f[i]), f[j]);
      if (static_cast<int>(z.size()) <= bound) continue;
      const auto m = dst.length_upto(z, bound);
      if (!m) record(rep, {'b', name, sb.vertices[i], sb.vertices[j], std::nullopt, bound});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto h = dst.locate(f[i], M);
    if (!h) continue;
    const Word back = g[*h];
    const Word z = concat(invert(back), sb.vertices[i]);
    if (static_cast<int>(z.size()) <= C) continue;
    const auto m = src.length_upto(z, C);
    if (!m) record(rep, {'c', name, sb.vertices[i], back, std::nullopt, C});
  }
}

}  // namespace

CheckReport check_witness(const MarkedGroup& a, const MarkedGroup& b, const WitnessPair& p, BuildOptions opts) {
  if (p.C < 1 || p.M < 0) throw Error("witness needs C >= 1 and M >= 0");
  MetricOracle ga(a, opts);
  MetricOracle hb(b, opts);
  ga.ensure_radius(p.M);
  hb.ensure_radius(p.M);
  const auto phi = images_in_order(ga.ball(), p.M, p.phi, "phi", b.rank());
  const auto psi = images_in_order(hb.ball(), p.M, p.psi, "psi", a.rank());
  CheckReport rep;
  if (!b.oracle().is_identity(phi[0])) record(rep, {'a', "phi", Word(a.rank()), phi[0], std::nullopt, 0});
  if (!a.oracle().is_identity(psi[0])) record(rep, {'a', "psi", Word(b.rank()), psi[0], std::nullopt, 0});
  check_direction(ga, hb, phi, psi, p.C, p.M, "phi", rep);
  check_direction(hb, ga, psi, phi, p.C, p.M, "psi", rep);
  return rep;
}

CountingCertificate counting_precheck(const MarkedGroup& a, const MarkedGroup& b, int C, int M, BuildOptions opts) {
  if (C < 1 || M < 0) throw Error("counting bound needs C >= 1 and M >= 0");
  CountingCertificate cert;
  const int m = M / C - 1;
  cert.source_radius = m;
  if (m < 0) return cert;
  const int reach = std::max(C, C * (m + 1));
  const Ball ba = build_ball(a, reach, opts);
  const Ball bb = build_ball(b, reach, opts);
  auto count = [](const Ball& ball, int r) { return static_cast<std::uint64_t>(ball.layer_start[static_cast<std::size_t>(r) + 1]); };
  auto test = [&](const Ball& src, const Ball& dst, const char* name) {
    CountingCertificate c;
    c.map = name;
    c.source_radius = m;
    c.source_ball = count(src, m);
    c.fibre_ball = count(src, C);
    c.target_radius = C * (m + 1);
    c.target_ball = count(dst, c.target_radius);
    c.impossible = c.source_ball > c.fibre_ball * c.target_ball;
    return c;
  };
  if (auto c = test(ba, bb, "phi"); c.impossible) return c;
  if (auto c = test(bb, ba, "psi"); c.impossible) return c;
  return test(bb, ba, "psi");
}

namespace {

constexpr std::int32_t kUnset = -1;

// Capped distance matrix over the first n vertices of the oracle's ball.
std::vector<std::int32_t> distance_matrix(MetricOracle& m, std::size_t n, int cap) {
  std::vector<std::int32_t> d(n * n, 0);
  const Ball& b = m.ball();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto v = m.distance_upto(b.vertices[i], b.vertices[j], cap);
      const std::int32_t x = v ? *v : cap + 1;
      d[i * n + j] = x;
      d[j * n + i] = x;
    }
  }
  return d;
}

class WitnessSearch {
 public:
  WitnessSearch(const MarkedGroup& a, const MarkedGroup& b, int C, int M, std::uint64_t budget, BuildOptions opts)
      : C_(C), M_(M), budget_(budget), ga_(a, opts), hb_(b, opts) {
    const int reach = C * M + C;
    const int cap = 2 * C * M + C;
    ga_.ensure_radius(std::max(reach, (cap + 1) / 2));
    hb_.ensure_radius(std::max(reach, (cap + 1) / 2));
    const Ball& G = ga_.ball();
    const Ball& H = hb_.ball();
    nG_ = G.layer_start[static_cast<std::size_t>(M) + 1];
    nH_ = H.layer_start[static_cast<std::size_t>(M) + 1];
    DG_ = G.layer_start[static_cast<std::size_t>(reach) + 1];
    DH_ = H.layer_start[static_cast<std::size_t>(reach) + 1];
    dG_ = distance_matrix(ga_, DG_, cap);
    dH_ = distance_matrix(hb_, DH_, cap);
    boundG_ = bounds(dG_, DG_, nG_);
    boundH_ = bounds(dH_, DH_, nH_);
    for (std::size_t i = 0; i < nG_; ++i) {
      candG_.push_back(H.layer_start[static_cast<std::size_t>(C * G.length_of(i) + C) + 1]);
    }
    for (std::size_t k = 0; k < nH_; ++k) {
      candH_.push_back(G.layer_start[static_cast<std::size_t>(C * H.length_of(k) + C) + 1]);
    }
    for (int layer = 0; layer <= M; ++layer) {
      for (std::size_t i = G.layer_start[static_cast<std::size_t>(layer)]; i < G.layer_start[static_cast<std::size_t>(layer) + 1]; ++i) {
        slots_.push_back({true, i});
      }
      for (std::size_t k = H.layer_start[static_cast<std::size_t>(layer)]; k < H.layer_start[static_cast<std::size_t>(layer) + 1]; ++k) {
        slots_.push_back({false, k});
      }
    }
  }

  SearchOutcome run() {
    phi_.assign(nG_, kUnset);
    psi_.assign(nH_, kUnset);
    phi_pre_.assign(nH_, {});
    psi_pre_.assign(nG_, {});
    SearchOutcome out;
    bool ok = false;
    try {
      ok = place(0);
    } catch (const BudgetHit&) {
      out.status = SearchOutcome::Status::BudgetExceeded;
      out.nodes = nodes_;
      return out;
    }
    out.nodes = nodes_;
    if (!ok) {
      out.status = SearchOutcome::Status::NonExistent;
      out.certificate_kind = "exhaustive";
      return out;
    }
    out.status = SearchOutcome::Status::Found;
    WitnessPair w{C_, M_, {}, {}};
    for (std::size_t i = 0; i < nG_; ++i) w.phi.emplace_back(ga_.ball().vertices[i], hb_.ball().vertices[static_cast<std::size_t>(phi_[i])]);
    for (std::size_t k = 0; k < nH_; ++k) w.psi.emplace_back(hb_.ball().vertices[k], ga_.ball().vertices[static_cast<std::size_t>(psi_[k])]);
    out.witness = std::move(w);
    return out;
  }

 private:
  struct BudgetHit {};
  struct Slot {
    bool phi;
    std::size_t vertex;
  };

  // bound[i][j] = C d(i,j) + C for j < i.
  std::vector<std::vector<std::int32_t>> bounds(const std::vector<std::int32_t>& d, std::size_t D, std::size_t n) const {
    std::vector<std::vector<std::int32_t>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) out[i].push_back(C_ * d[i * D + j] + C_);
    }
    return out;
  }

  std::int32_t dG(std::size_t x, std::size_t y) const { return dG_[x * DG_ + y]; }
  std::int32_t dH(std::size_t x, std::size_t y) const { return dH_[x * DH_ + y]; }

  bool phi_fits(std::size_t i, std::size_t c) const {
    if (!kernels::all_within(&dH_[c * DH_], phi_.data(), boundG_[i].data(), i)) return false;
    if (c < nH_ && psi_[c] != kUnset && dG(static_cast<std::size_t>(psi_[c]), i) > C_) return false;
    for (std::size_t h : psi_pre_[i]) {
      if (dH(c, h) > C_) return false;
    }
    return true;
  }

  bool psi_fits(std::size_t k, std::size_t d) const {
    if (!kernels::all_within(&dG_[d * DG_], psi_.data(), boundH_[k].data(), k)) return false;
    if (d < nG_ && phi_[d] != kUnset && dH(static_cast<std::size_t>(phi_[d]), k) > C_) return false;
    for (std::size_t g : phi_pre_[k]) {
      if (dG(d, g) > C_) return false;
    }
    return true;
  }

  bool place(std::size_t s) {
    if (s == slots_.size()) return true;
    const Slot slot = slots_[s];
    const std::size_t v = slot.vertex;
    const bool root = v == 0;
    const std::size_t limit = root ? 1 : (slot.phi ? candG_[v] : candH_[v]);
    for (std::size_t c = 0; c < limit; ++c) {
      if (!(slot.phi ? phi_fits(v, c) : psi_fits(v, c))) continue;
      if (!root) {
        if (nodes_ >= budget_) throw BudgetHit{};
        ++nodes_;
      }
      if (slot.phi) {
        phi_[v] = static_cast<std::int32_t>(c);
        if (c < nH_) phi_pre_[c].push_back(v);
      } else {
        psi_[v] = static_cast<std::int32_t>(c);
        if (c < nG_) psi_pre_[c].push_back(v);
      }
      if (place(s + 1)) return true;
      if (slot.phi) {
        phi_[v] = kUnset;
        if (c < nH_) phi_pre_[c].pop_back();
      } else {
        psi_[v] = kUnset;
        if (c < nG_) psi_pre_[c].pop_back();
      }
    }
    return false;
  }

  int C_;
  int M_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  MetricOracle ga_;
  MetricOracle hb_;
  std::size_t nG_ = 0, nH_ = 0, DG_ = 0, DH_ = 0;
  std::vector<std::int32_t> dG_, dH_;
  std::vector<std::vector<std::int32_t>> boundG_, boundH_;
  std::vector<std::size_t> candG_, candH_;
  std::vector<Slot> slots_;
  std::vector<std::int32_t> phi_, psi_;
  std::vector<std::vector<std::size_t>> phi_pre_, psi_pre_;
};

}  // namespace

SearchOutcome search_witness(const MarkedGroup& a, const MarkedGroup& b, int C, int M, std::uint64_t node_budget,
                             BuildOptions opts) {
  if (C < 1 || M < 1) throw Error("search needs C >= 1 and M >= 1");
  const auto cert = counting_precheck(a, b, C, M, opts);
  if (cert.impossible) {
    SearchOutcome out;
    out.status = SearchOutcome::Status::NonExistent;
    out.certificate_kind = "counting";
    out.counting = cert;
    return out;
  }
  SearchOutcome out = WitnessSearch(a, b, C, M, node_budget, opts).run();
  if (out.witness) {
    const auto rep = check_witness(a, b, *out.witness, opts);
    if (!rep.passed) throw std::logic_error("search produced a pair that fails the witness check");
  }
  return out;
}

std::optional<WitnessPair> enumerate_witness_unpruned(const MarkedGroup& a, const MarkedGroup& b, int C, int M,
                                                      std::uint64_t max_maps) {
  const int reach = C * M + C;
  MetricOracle ga(a);
  MetricOracle hb(b);
  ga.ensure_radius(reach);
  hb.ensure_radius(reach);
  const Ball& G = ga.ball();
  const Ball& H = hb.ball();
  const std::size_t nG = G.layer_start[static_cast<std::size_t>(M) + 1];
  const std::size_t nH = H.layer_start[static_cast<std::size_t>(M) + 1];

  // Every map from B_src(M) with f(1) = 1 and f(v) in B_dst(C|v| + C) that
  // satisfies the coarse-Lipschitz inequality on all pairs.
  auto lipschitz_maps = [&](MetricOracle& src, MetricOracle& dst, std::size_t n) {
    const Ball& S = src.ball();
    const Ball& T = dst.ball();
    std::vector<std::size_t> limit(n);
    std::uint64_t total = 1;
    for (std::size_t v = 0; v < n; ++v) {
      limit[v] = v == 0 ? 1 : T.layer_start[static_cast<std::size_t>(C * S.length_of(v) + C) + 1];
      total *= limit[v];
      if (total > max_maps) throw Error("unpruned enumeration is too large");
    }
    std::vector<std::vector<std::size_t>> maps;
    std::vector<std::size_t> f(n, 0);
    for (;;) {
      bool good = true;
      for (std::size_t i = 0; i < n && good; ++i) {
        for (std::size_t j = i + 1; j < n && good; ++j) {
          const int d = *src.distance_upto(S.vertices[i], S.vertices[j], 2 * M);
          const int bound = C * d + C;
          good = dst.distance_upto(T.vertices[f[i]], T.vertices[f[j]], bound).has_value();
        }
      }
      if (good) maps.push_back(f);
      std::size_t k = 0;
      while (k < n && ++f[k] == limit[k]) f[k++] = 0;
      if (k == n) break;
    }
    return maps;
  };
  const auto phis = lipschitz_maps(ga, hb, nG);
  const auto psis = lipschitz_maps(hb, ga, nH);
  for (const auto& phi : phis) {
    for (const auto& psi : psis) {
      bool good = true;
      for (std::size_t g = 0; g < nG && good; ++g) {
        if (phi[g] < nH) good = ga.distance_upto(G.vertices[psi[phi[g]]], G.vertices[g], C).has_value();
      }
      for (std::size_t h = 0; h < nH && good; ++h) {
        if (psi[h] < nG) good = hb.distance_upto(H.vertices[phi[psi[h]]], H.vertices[h], C).has_value();
      }
      if (!good) continue;
      WitnessPair w{C, M, {}, {}};
      for (std::size_t g = 0; g < nG; ++g) w.phi.emplace_back(G.vertices[g], H.vertices[phi[g]]);
      for (std::size_t h = 0; h < nH; ++h) w.psi.emplace_back(H.vertices[h], G.vertices[psi[h]]);
      return w;
    }
  }
  return std::nullopt;
}

namespace {

void require_same_rank(const MarkedGroup& g, const MarkedGroup& h) {
  if (g.rank() != h.rank()) throw Error("word maps need equal ranks");
}

}  // namespace

WitnessPair quotient_witness(const MarkedGroup& g, const MarkedGroup& q, const std::vector<Word>& kernel_words, int M,
                             BuildOptions opts) {
  require_same_rank(g, q);
  if (M < 0) throw Error("radius must be non-negative");
  std::size_t ell = 0;
  for (const auto& k : kernel_words) {
    if (!q.oracle().is_identity(k)) throw Error("inconsistent oracles: kernel word \"" + k.str() + "\" survives in the quotient");
    ell = std::max(ell, k.size());
  }
  const int sample = std::min(2 * M, 8);
  for_each_reduced_word(g.rank(), sample, [&](const Word& w) {
    if (g.oracle().is_identity(w) && !q.oracle().is_identity(w)) {
      throw Error("inconsistent oracles: \"" + w.str() + "\" is trivial in the group but not in the quotient");
    }
    return true;
  });
  const int C = static_cast<int>(ell) + 1;
  BallBuilder gb(g, opts);
  BallBuilder qb(q, opts);
  gb.grow_to(M);
  qb.grow_to(M);
  const Ball& G = gb.ball();
  const Ball& Q = qb.ball();
  WitnessPair w{C, M, {}, {}};
  std::vector<std::optional<Word>> psi(Q.size());
  for (std::size_t v = 0; v < G.size(); ++v) {
    w.phi.emplace_back(G.vertices[v], G.vertices[v]);
    // B_q(M) holds every element of length <= M, so the walk succeeds.
    const auto h = Q.walk(G.vertices[v]);
    if (!h) throw std::logic_error("quotient ball walk left the ball");
    if (!psi[*h]) psi[*h] = G.vertices[v];
  }
  for (std::size_t h = 0; h < Q.size(); ++h) {
    if (!psi[h]) throw Error("inconsistent oracles: quotient vertex \"" + Q.vertices[h].str() + "\" has no preimage");
    w.psi.emplace_back(Q.vertices[h], *psi[h]);
  }
  return w;
}

WitnessPair word_map_witness(const MarkedGroup& g, const MarkedGroup& h, int C, int M, BuildOptions opts) {
  require_same_rank(g, h);
  const Ball G = build_ball(g, M, opts);
  const Ball H = build_ball(h, M, opts);
  WitnessPair w{C, M, {}, {}};
  for (const auto& v : G.vertices) w.phi.emplace_back(v, v);
  for (const auto& v : H.vertices) w.psi.emplace_back(v, v);
  return w;
}

QiScanReport qi_scan(const MarkedGroup& a, const MarkedGroup& b, int C_max, const std::vector<int>& M_schedule,
                     std::uint64_t node_budget, BuildOptions opts) {
  QiScanReport rep;
  rep.note = kScanNote;
  for (int C = 1; C <= C_max; ++C) {
    QiScanSummary s{C, "witness found", std::nullopt};
    bool all_found = !M_schedule.empty();
    std::optional<int> refuted;
    for (int M : M_schedule) {
      auto out = search_witness(a, b, C, M, node_budget, opts);
      if (out.status != SearchOutcome::Status::Found) all_found = false;
      if (out.status == SearchOutcome::Status::NonExistent && !refuted) refuted = M;
      if (out.status == SearchOutcome::Status::Found) s.at_M = std::max(s.at_M.value_or(M), M);
      rep.entries.push_back({C, M, std::move(out)});
    }
    if (refuted) {
      s.verdict = "certified not C-related";
      s.at_M = refuted;
    } else if (!all_found) {
      s.verdict = "inconclusive";
      s.at_M.reset();
    }
    rep.summary.push_back(s);
  }
  return rep;
}

}  // namespace mgw
