#pragma once

#include <array>
#include <cstdio>
#include <random>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

#include "mgw/hall.hpp"
#include "mgw/words.hpp"

namespace testing {

inline mgw::Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, rank);
  std::bernoulli_distribution neg(0.5);
  mgw::Word w(rank);
  for (int i = len(rng); i > 0; --i) w.push_back(mgw::Letter{gen(rng), neg(rng) ? -1 : 1});
  return w;
}

inline mgw::Word random_reduced(std::mt19937_64& rng, int rank, int max_len) {
  return mgw::free_reduce(random_word(rng, rank, max_len));
}

inline std::vector<long long> random_set(std::mt19937_64& rng, long long lo, long long hi) {
  std::bernoulli_distribution pick(0.4);
  std::vector<long long> out;
  for (long long i = lo; i <= hi; ++i)
    if (pick(rng)) out.push_back(i);
  return out;
}

// Shift in [-5, 5], lamps in [-6, 6], center in [1, 12].
inline mgw::HallElement random_hall(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> shift(-5, 5);
  return mgw::HallElement{shift(rng), random_set(rng, -6, 6), random_set(rng, 1, 12)};
}

struct CliRun {
  int exit_code = -1;
  std::string out;
};

// Runs the command-line tool with `args` appended; stderr is discarded.
inline CliRun run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + MGW_CLI_PATH + "\" " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Report text with the timing field removed.
inline std::string without_timing(const std::string& report) {
  auto j = nlohmann::json::parse(report);
  j.erase("timing");
  return j.dump(2);
}

}  // namespace testing
