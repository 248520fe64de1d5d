#include "mgw/cayley.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace mgw {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunks = std::min<std::size_t>(threads, n);
  if (chunks <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = n * c / chunks;
    const std::size_t hi = n * (c + 1) / chunks;
    pool.emplace_back([&, lo, hi, c] {
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

int Ball::length_of(std::size_t v) const {
  const auto it = std::upper_bound(layer_start.begin(), layer_start.end(), v);
  return static_cast<int>(it - layer_start.begin()) - 1;
}

std::vector<BallEdge> Ball::edge_list() const {
  std::vector<BallEdge> out;
  const std::size_t slots = static_cast<std::size_t>(2 * rank);
  for (std::size_t v = 0; v < size(); ++v) {
    for (std::size_t s = 0; s < slots; ++s) {
      const auto u = edges[v * slots + s];
      if (u < 0) continue;
      const Letter l = Letter::from_code(letter_from_rank(static_cast<int>(s)));
      out.push_back({static_cast<std::int32_t>(v), l.index, l.sign, u});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Ball Ball::restrict(int r) const {
  if (r < 0 || r > radius) throw Error("cannot restrict a radius-" + std::to_string(radius) + " ball to " + std::to_string(r));
  Ball out;
  out.rank = rank;
  out.radius = r;
  const std::size_t n = layer_start[static_cast<std::size_t>(r) + 1];
  out.vertices.assign(vertices.begin(), vertices.begin() + static_cast<std::ptrdiff_t>(n));
  const std::size_t slots = static_cast<std::size_t>(2 * rank);
  out.edges.assign(edges.begin(), edges.begin() + static_cast<std::ptrdiff_t>(n * slots));
  for (auto& u : out.edges) {
    if (u >= static_cast<std::int32_t>(n)) u = -1;
  }
  out.layer_start.assign(layer_start.begin(), layer_start.begin() + r + 2);
  return out;
}

std::optional<std::size_t> Ball::walk(const Word& w) const {
  std::size_t v = 0;
  for (auto c : w.codes()) {
    const auto u = edge(v, c);
    if (u < 0) return std::nullopt;
    v = static_cast<std::size_t>(u);
  }
  return v;
}

BallBuilder::BallBuilder(const MarkedGroup& g, BuildOptions opts) : group_(g), opts_(opts) {
  ball_.rank = g.rank();
  ball_.radius = 0;
  ball_.vertices.emplace_back(g.rank());
  ball_.edges.assign(static_cast<std::size_t>(2 * g.rank()), -1);
  ball_.layer_start = {0, 1};
  if (group_.oracle().has_key()) {
    keys_.push_back(group_.oracle().key(ball_.vertices[0]));
    by_key_.emplace(keys_[0], 0);
  }
  link_layer(0, 1);
}

void BallBuilder::grow_to(int r) {
  if (r < 0) throw Error("radius must be non-negative");
  while (ball_.radius < r) add_layer();
}

std::optional<std::size_t> BallBuilder::find_in(const Word& w, std::size_t begin, std::size_t end,
                                                const std::string* key) const {
  if (key != nullptr) {
    const auto it = by_key_.find(*key);
    if (it == by_key_.end() || it->second < begin || it->second >= end) return std::nullopt;
    return it->second;
  }
  for (std::size_t v = begin; v < end; ++v) {
    if (group_.oracle().is_identity(concat(w, invert(ball_.vertices[v])))) return v;
  }
  return std::nullopt;
}

std::optional<std::size_t> BallBuilder::locate(const Word& w) const {
  const Word r = free_reduce(w);
  if (static_cast<int>(r.size()) <= ball_.radius) return ball_.walk(r);
  if (group_.oracle().has_key()) {
    const std::string k = group_.oracle().key(r);
    return find_in(r, 0, ball_.size(), &k);
  }
  return find_in(r, 0, ball_.size(), nullptr);
}

void BallBuilder::link_layer(std::size_t begin, std::size_t end) {
  const std::size_t slots = static_cast<std::size_t>(2 * ball_.rank);
  const bool keyed = group_.oracle().has_key();
  parallel_for(end - begin, opts_.threads, [&](std::size_t i) {
    const std::size_t u = begin + i;
    for (std::size_t s = 0; s < slots; ++s) {
      if (ball_.edges[u * slots + s] >= 0) continue;
      Word w = ball_.vertices[u];
      w.push_back_code(letter_from_rank(static_cast<int>(s)));
      w = free_reduce(w);
      std::string k;
      if (keyed) k = group_.oracle().key(w);
      if (auto t = find_in(w, begin, end, keyed ? &k : nullptr)) {
        ball_.edges[u * slots + s] = static_cast<std::int32_t>(*t);
      }
    }
  });
}

void BallBuilder::add_layer() {
  const std::size_t slots = static_cast<std::size_t>(2 * ball_.rank);
  const std::size_t begin = ball_.layer_start[static_cast<std::size_t>(ball_.radius)];
  const std::size_t end = ball_.size();

  struct Candidate {
    std::size_t from;
    std::size_t slot;
    Word word;
  };
  std::vector<Candidate> cands;
  for (std::size_t v = begin; v < end; ++v) {
    for (std::size_t s = 0; s < slots; ++s) {
      if (ball_.edges[v * slots + s] >= 0) continue;
      Word w = ball_.vertices[v];
      w.push_back_code(letter_from_rank(static_cast<int>(s)));
      cands.push_back({v, s, std::move(w)});
    }
  }
  generated_ += cands.size();
  if (generated_ > opts_.word_budget) {
    throw Error("ball of radius " + std::to_string(ball_.radius + 1) + " for " + group_.label() + " needs more than " +
                std::to_string(opts_.word_budget) + " candidate words (raise the word budget)");
  }

  // Candidates come out in shortlex order, so the first member of each class
  // is its shortlex-least word.
  std::vector<std::size_t> rep(cands.size());
  std::vector<std::string> ckeys;
  const bool keyed = group_.oracle().has_key();
  if (keyed) {
    ckeys.resize(cands.size());
    parallel_for(cands.size(), opts_.threads, [&](std::size_t i) { ckeys[i] = group_.oracle().key(cands[i].word); });
    std::unordered_map<std::string, std::size_t> first;
    for (std::size_t i = 0; i < cands.size(); ++i) rep[i] = first.emplace(ckeys[i], i).first->second;
  } else {
    parallel_for(cands.size(), opts_.threads, [&](std::size_t i) {
      rep[i] = i;
      const Word inv = invert(cands[i].word);
      for (std::size_t j = 0; j < i; ++j) {
        if (group_.oracle().is_identity(concat(cands[j].word, inv))) {
          rep[i] = j;
          break;
        }
      }
    });
  }

  std::vector<std::int32_t> index(cands.size(), -1);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (rep[i] != i) {
      index[i] = index[rep[i]];
      continue;
    }
    if (keyed && by_key_.count(ckeys[i])) {
      throw Error("oracle '" + group_.label() + "' gave a new word the key of an existing vertex");
    }
    index[i] = static_cast<std::int32_t>(ball_.vertices.size());
    ball_.vertices.push_back(cands[i].word);
    ball_.edges.resize(ball_.edges.size() + slots, -1);
    if (keyed) {
      keys_.push_back(ckeys[i]);
      by_key_.emplace(ckeys[i], static_cast<std::size_t>(index[i]));
    }
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const auto u = static_cast<std::size_t>(index[i]);
    ball_.edges[cands[i].from * slots + cands[i].slot] = index[i];
    const LetterCode back = static_cast<LetterCode>(-letter_from_rank(static_cast<int>(cands[i].slot)));
    ball_.edges[u * slots + static_cast<std::size_t>(letter_rank(back))] = static_cast<std::int32_t>(cands[i].from);
  }
  ++ball_.radius;
  ball_.layer_start.push_back(ball_.vertices.size());
  link_layer(end, ball_.vertices.size());
}

Ball build_ball(const MarkedGroup& g, int r, BuildOptions opts) {
  BallBuilder b(g, opts);
  b.grow_to(r);
  return b.ball();
}

BallSignature signature(const Ball& b) {
  std::string out = "mgw-ball";
  auto put = [&](std::int32_t v) { out.append(reinterpret_cast<const char*>(&v), sizeof v); };
  put(b.rank);
  put(b.radius);
  put(static_cast<std::int32_t>(b.size()));
  for (const auto& w : b.vertices) {
    put(static_cast<std::int32_t>(w.size()));
    for (auto c : w.codes()) put(c);
  }
  const auto edges = b.edge_list();
  put(static_cast<std::int32_t>(edges.size()));
  for (const auto& e : edges) {
    put(e.from);
    put(e.generator);
    put(e.sign);
    put(e.to);
  }
  return out;
}

namespace {

void same_rank(const MarkedGroup& a, const MarkedGroup& b) {
  if (a.rank() != b.rank()) {
    throw Error("marked groups have different ranks (" + std::to_string(a.rank()) + " and " + std::to_string(b.rank()) + ")");
  }
}

}  // namespace

bool r_locally_isomorphic(const MarkedGroup& a, const MarkedGroup& b, int r, BuildOptions opts) {
  same_rank(a, b);
  return signature(build_ball(a, r, opts)) == signature(build_ball(b, r, opts));
}

int local_agreement_radius(const MarkedGroup& a, const MarkedGroup& b, int R, BuildOptions opts) {
  same_rank(a, b);
  if (R < 0) throw Error("radius must be non-negative");
  const Ball ba = build_ball(a, R, opts);
  const Ball bb = build_ball(b, R, opts);
  int best = -1;
  bool broken = false;
  for (int r = 0; r <= R; ++r) {
    const bool eq = signature(ba.restrict(r)) == signature(bb.restrict(r));
    if (eq && broken) throw Error("balls agree at radius " + std::to_string(r) + " but not below it");
    if (eq) {
      best = r;
    } else {
      broken = true;
    }
  }
  return best;
}

KernelAgreement kernel_agreement(const MarkedGroup& a, const MarkedGroup& b, int L) {
  same_rank(a, b);
  KernelAgreement out;
  for_each_reduced_word(a.rank(), L, [&](const Word& w) {
    if (a.oracle().is_identity(w) != b.oracle().is_identity(w)) {
      out.agree = false;
      out.witness = w;
      return false;
    }
    return true;
  });
  return out;
}

std::optional<std::size_t> convergence_check(const std::vector<MarkedGroup>& chain, const MarkedGroup& limit, int r) {
  std::optional<std::size_t> from;
  for (std::size_t i = chain.size(); i > 0; --i) {
    if (!kernel_agreement(chain[i - 1], limit, 2 * r).agree) break;
    from = i - 1;
  }
  return from;
}

std::string to_dot(const Ball& b) {
  std::string out = "graph ball {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < b.size(); ++v) {
    const std::string name = b.vertices[v].empty() ? "1" : b.vertices[v].str();
    out += "  v" + std::to_string(v) + " [label=\"" + name + "\"" + (v == 0 ? ", shape=doublecircle" : "") + "];\n";
  }
  for (const auto& e : b.edge_list()) {
    if (e.sign < 0) continue;
    // An involution gives two positive edges between the same pair.
    if (e.to < e.from && b.edge(static_cast<std::size_t>(e.to), static_cast<LetterCode>(e.generator)) == e.from) continue;
    out += "  v" + std::to_string(e.from) + " -- v" + std::to_string(e.to) + " [label=\"x" + std::to_string(e.generator) + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace mgw
