#include "mgw/serialize.hpp"

namespace mgw {

Json to_json(const Ball& b) {
  Json verts = Json::array();
  for (const auto& v : b.vertices) verts.push_back(v.str());
  Json edges = Json::array();
  for (const auto& e : b.edge_list()) edges.push_back({e.from, e.generator, e.sign, e.to});
  return {{"rank", b.rank}, {"radius", b.radius}, {"vertices", verts}, {"edges", edges}};
}

Json to_json(const MetricReport& r) {
  Json j = {{"max_piece_length", r.max_piece_length},
            {"shortest_relator", r.shortest_relator},
            {"satisfied", r.satisfied}};
  j["witness_piece"] = r.witness_piece ? Json(r.witness_piece->str()) : Json(nullptr);
  return j;
}

namespace {

Json pairs(const std::vector<std::pair<Word, Word>>& m) {
  Json out = Json::array();
  for (const auto& [s, t] : m) out.push_back({s.str(), t.str()});
  return out;
}

std::vector<std::pair<Word, Word>> read_pairs(const Json& j, int src_rank, int dst_rank) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw Error("witness map entries must be [source, image] pairs");
    out.emplace_back(Word::parse(e[0].get<std::string>(), src_rank), Word::parse(e[1].get<std::string>(), dst_rank));
  }
  return out;
}

}  // namespace

Json to_json(const WitnessPair& p) { return {{"C", p.C}, {"M", p.M}, {"phi", pairs(p.phi)}, {"psi", pairs(p.psi)}}; }

WitnessPair witness_from_json(const Json& j, int source_rank, int target_rank) {
  try {
    WitnessPair p;
    p.C = j.at("C").get<int>();
    p.M = j.at("M").get<int>();
    p.phi = read_pairs(j.at("phi"), source_rank, target_rank);
    p.psi = read_pairs(j.at("psi"), target_rank, source_rank);
    return p;
  } catch (const Json::exception& e) {
    throw Error(std::string("bad witness JSON: ") + e.what());
  }
}

Json to_json(const CheckReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    vs.push_back({{"condition", std::string(1, v.condition)},
                  {"map", v.map},
                  {"pair", {v.first.str(), v.second.str()}},
                  {"measured", v.measured ? Json(*v.measured) : Json(">bound")},
                  {"bound", v.bound}});
  }
  return {{"passed", r.passed}, {"violation_count", r.violation_count}, {"violations", vs}};
}

Json to_json(const CountingCertificate& c) {
  return {{"impossible", c.impossible},     {"map", c.map},
          {"source_radius", c.source_radius}, {"source_ball", c.source_ball},
          {"fibre_ball", c.fibre_ball},     {"target_radius", c.target_radius},
          {"target_ball", c.target_ball}};
}

Json to_json(const SearchOutcome& o) {
  Json j = {{"status", std::string(to_string(o.status))}, {"nodes", o.nodes}};
  if (o.witness) j["witness"] = to_json(*o.witness);
  if (o.status == SearchOutcome::Status::NonExistent) {
    Json details = o.counting ? to_json(*o.counting) : Json{{"nodes_explored", o.nodes}};
    j["certificate"] = {{"kind", o.certificate_kind}, {"details", details}};
  }
  return j;
}

Json to_json(const QiScanReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json o = to_json(e.outcome);
    o.erase("witness");
    entries.push_back({{"C", e.C}, {"M", e.M}, {"outcome", o}});
  }
  Json summary = Json::array();
  for (const auto& s : r.summary) {
    summary.push_back({{"C", s.C}, {"verdict", s.verdict}, {"M", s.at_M ? Json(*s.at_M) : Json(nullptr)}});
  }
  return {{"entries", entries}, {"summary", summary}, {"note", r.note}};
}

Json to_json(const HallElement& x) { return {{"shift", x.shift}, {"lamps", x.lamps}, {"center", x.center}}; }

}  // namespace mgw
