// Command-line front end. Prints one JSON report on stdout.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mgw/families.hpp"
#include "mgw/golden.hpp"
#include "mgw/qiwitness.hpp"
#include "mgw/selector.hpp"
#include "mgw/serialize.hpp"

namespace {

using mgw::Json;

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kUsage = 2, kNonExistent = 3, kBudget = 4, kLibrary = 5 };

struct Options {
  std::string group, a, b, limit, witness, presentation, dot, json_out, construct = "word-map", lambda = "1/6";
  std::vector<std::string> chain;
  int radius = 2;
  int C = 1;
  int M = 1;
  int Cmax = 1;
  std::vector<int> Ms;
  std::uint64_t budget = 10'000'000;
  std::uint64_t word_budget = 10'000'000;
  unsigned threads = 0;
};

std::string hex_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw mgw::Error("cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw mgw::Error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json ball_summary(const mgw::Ball& b) {
  Json layers = Json::array();
  for (int k = 0; k <= b.radius; ++k) {
    layers.push_back(b.layer_start[static_cast<std::size_t>(k) + 1] - b.layer_start[static_cast<std::size_t>(k)]);
  }
  return {{"vertex_count", b.size()},
          {"edge_count", b.edge_list().size()},
          {"layer_sizes", layers},
          {"signature_digest", hex_digest(mgw::signature(b))}};
}

int run_command(const std::string& cmd, const Options& o, Json& inputs, Json& outputs) {
  const mgw::BuildOptions build{o.threads, o.word_budget};
  if (cmd == "ball") {
    inputs = {{"group", o.group}, {"radius", o.radius}};
    const auto b = mgw::build_ball(mgw::parse_group(o.group), o.radius, build);
    outputs = ball_summary(b);
    if (!o.dot.empty()) write_file(o.dot, mgw::to_dot(b));
    if (!o.json_out.empty()) write_file(o.json_out, mgw::to_json(b).dump() + "\n");
    return kOk;
  }
  if (cmd == "compare") {
    inputs = {{"a", o.a}, {"b", o.b}, {"radius", o.radius}};
    const auto ga = mgw::parse_group(o.a);
    const auto gb = mgw::parse_group(o.b);
    if (ga.rank() != gb.rank()) throw mgw::Error("marked groups have different ranks");
    const auto ba = mgw::build_ball(ga, o.radius, build);
    const auto bb = mgw::build_ball(gb, o.radius, build);
    outputs = {{"isomorphic", mgw::signature(ba) == mgw::signature(bb)}, {"a", ball_summary(ba)}, {"b", ball_summary(bb)}};
    return kOk;
  }
  if (cmd == "agree-radius") {
    inputs = {{"a", o.a}, {"b", o.b}, {"radius", o.radius}};
    outputs = {{"agreement_radius", mgw::local_agreement_radius(mgw::parse_group(o.a), mgw::parse_group(o.b), o.radius, build)}};
    return kOk;
  }
  if (cmd == "kernel-agree") {
    inputs = {{"a", o.a}, {"b", o.b}, {"length", o.radius}};
    const auto k = mgw::kernel_agreement(mgw::parse_group(o.a), mgw::parse_group(o.b), o.radius);
    outputs = {{"agree", k.agree}, {"witness", k.witness ? Json(k.witness->str()) : Json(nullptr)}};
    return kOk;
  }
  if (cmd == "converge") {
    inputs = {{"chain", o.chain}, {"limit", o.limit}, {"radius", o.radius}};
    std::vector<mgw::MarkedGroup> chain;
    for (const auto& s : o.chain) chain.push_back(mgw::parse_group(s));
    const auto i = mgw::convergence_check(chain, mgw::parse_group(o.limit), o.radius);
    outputs = {{"stabilized", i.has_value()}, {"index", i ? Json(*i) : Json("NotStabilized")}};
    return kOk;
  }
  if (cmd == "qi-check") {
    const auto ga = mgw::parse_group(o.a);
    const auto gb = mgw::parse_group(o.b);
    mgw::WitnessPair w;
    if (!o.witness.empty()) {
      inputs = {{"a", o.a}, {"b", o.b}, {"witness", o.witness}};
      w = mgw::witness_from_json(Json::parse(read_file(o.witness)), ga.rank(), gb.rank());
    } else {
      inputs = {{"a", o.a}, {"b", o.b}, {"construct", o.construct}, {"C", o.C}, {"M", o.M}};
      if (o.construct != "word-map") throw mgw::Error("unknown construction \"" + o.construct + "\"");
      w = mgw::word_map_witness(ga, gb, o.C, o.M, build);
    }
    outputs = mgw::to_json(mgw::check_witness(ga, gb, w, build));
    return kOk;
  }
  if (cmd == "qi-search") {
    inputs = {{"a", o.a}, {"b", o.b}, {"C", o.C}, {"M", o.M}, {"budget", o.budget}};
    const auto r = mgw::search_witness(mgw::parse_group(o.a), mgw::parse_group(o.b), o.C, o.M, o.budget, build);
    outputs = mgw::to_json(r);
    switch (r.status) {
      case mgw::SearchOutcome::Status::Found:
        return kOk;
      case mgw::SearchOutcome::Status::NonExistent:
        return kNonExistent;
      case mgw::SearchOutcome::Status::BudgetExceeded:
        return kBudget;
    }
    return kOk;
  }
  if (cmd == "qi-scan") {
    inputs = {{"a", o.a}, {"b", o.b}, {"Cmax", o.Cmax}, {"M_list", o.Ms}, {"budget", o.budget}};
    outputs = mgw::to_json(mgw::qi_scan(mgw::parse_group(o.a), mgw::parse_group(o.b), o.Cmax, o.Ms, o.budget, build));
    return kOk;
  }
  if (cmd == "check-sc") {
    const auto lambda = mgw::Rational::parse(o.lambda);
    std::optional<mgw::Presentation> p;
    if (!o.presentation.empty()) {
      inputs = {{"presentation", o.presentation}, {"lambda", lambda.str()}};
      p = mgw::Presentation::parse(read_file(o.presentation));
    } else {
      inputs = {{"group", o.group}, {"lambda", lambda.str()}};
      p = mgw::selector_presentation(o.group);
      if (!p) throw mgw::Error("check-sc needs a bowditch selector or --presentation");
    }
    const auto s = mgw::symmetrize(*p);
    outputs = mgw::to_json(mgw::check_metric_condition(s, lambda));
    outputs["relator_count"] = p->relators().size();
    outputs["symmetrized_size"] = s.size();
    return kOk;
  }
  if (cmd == "family-info") {
    inputs = {{"group", o.group}};
    const auto g = mgw::parse_group(o.group);
    outputs = {{"label", g.label()}, {"rank", g.rank()}, {"exact", g.oracle().exact()}, {"canonical_keys", g.oracle().has_key()}};
    if (auto p = mgw::selector_presentation(o.group)) {
      Json lens = Json::array();
      for (const auto& r : p->relators()) lens.push_back(r.size());
      outputs["relator_lengths"] = lens;
    }
    return kOk;
  }
  if (cmd == "golden") {
    const auto results = mgw::golden_suite(build);
    Json rows = Json::array();
    bool all = true;
    for (const auto& r : results) {
      rows.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
      all = all && r.pass;
    }
    outputs = {{"all_passed", all}, {"results", rows}};
    return all ? kOk : kLibrary;
  }
  throw mgw::Error("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for marked groups: Cayley balls, small cancellation, quasi-isometry witnesses"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads for ball construction (0 = all cores)");
  app.add_option("--word-budget", o.word_budget, "cap on candidate words generated per ball");

  auto pair_opts = [&](CLI::App* s) {
    s->add_option("-a,--a", o.a, "first group selector")->required();
    s->add_option("-b,--b", o.b, "second group selector")->required();
  };
  auto* ball = app.add_subcommand("ball", "build B(r) and summarize it");
  ball->add_option("--group", o.group)->required();
  ball->add_option("--radius", o.radius);
  ball->add_option("--dot", o.dot, "write Graphviz DOT here");
  ball->add_option("--json", o.json_out, "write the ball as JSON here");

  auto* compare = app.add_subcommand("compare", "r-local isomorphism test");
  pair_opts(compare);
  compare->add_option("--radius", o.radius);

  auto* agree = app.add_subcommand("agree-radius", "largest radius at which balls agree");
  pair_opts(agree);
  agree->add_option("--radius", o.radius);

  auto* kernel = app.add_subcommand("kernel-agree", "compare word problems on words of length <= radius");
  pair_opts(kernel);
  kernel->add_option("--radius", o.radius);

  auto* converge = app.add_subcommand("converge", "first index after which a chain agrees with its limit");
  converge->add_option("--chain", o.chain, "chain member (repeat in order)")->required();
  converge->add_option("--limit", o.limit)->required();
  converge->add_option("--radius", o.radius);

  auto* check = app.add_subcommand("qi-check", "verify a witness pair");
  pair_opts(check);
  check->add_option("--witness", o.witness, "witness JSON file");
  check->add_option("--construct", o.construct, "built-in construction when no file is given (word-map)");
  check->add_option("--C", o.C);
  check->add_option("--M", o.M);

  auto* search = app.add_subcommand("qi-search", "search for a witness pair at (C, M)");
  pair_opts(search);
  search->add_option("--C", o.C);
  search->add_option("--M", o.M);
  search->add_option("--budget", o.budget, "node budget");

  auto* scan = app.add_subcommand("qi-scan", "search over C <= Cmax and a schedule of M");
  pair_opts(scan);
  scan->add_option("--Cmax", o.Cmax);
  scan->add_option("--M-list", o.Ms)->delimiter(',')->required();
  scan->add_option("--budget", o.budget, "node budget per search");

  auto* sc = app.add_subcommand("check-sc", "metric small-cancellation check");
  sc->add_option("--group", o.group, "bowditch selector");
  sc->add_option("--presentation", o.presentation, "presentation file");
  sc->add_option("--lambda", o.lambda);

  auto* info = app.add_subcommand("family-info", "describe a group selector");
  info->add_option("--group", o.group)->required();

  app.add_subcommand("golden", "recompute the golden values with independent methods");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  Json report = {{"tool", "mgw"}, {"version", kVersion}, {"command", cmd}};
  Json inputs = Json::object();
  Json outputs = Json::object();
  int code = kOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    code = run_command(cmd, o, inputs, outputs);
  } catch (const std::exception& e) {
    report["error"] = e.what();
    code = kLibrary;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report["inputs"] = inputs;
  report["outputs"] = outputs;
  report["exit_code"] = code;
  report["timing"] = {{"seconds", secs}};
  std::cout << report.dump(2) << "\n";
  return code;
}
