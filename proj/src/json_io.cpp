#include <cstdint>
#include <stdexcept>

#include "icol/json_io.hpp"

namespace icol {

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  Graph g(j.at("n").get<int>());
  for (const Json& e : j.at("edges"))
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

Json colouring_to_json(const EdgeColouring& c) {
  Json j;
  j["colours"] = c.colour;
  return j;
}

EdgeColouring colouring_from_json(const Json& j) {
  EdgeColouring c;
  if (!j.is_object() || !j.contains("colours"))
    throw std::invalid_argument("colouring JSON needs \"colours\"");
  c.colour = j.at("colours").get<std::vector<int>>();
  return c;
}

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::colourable_with_witness:
      return "colourable-with-witness";
    case SolveStatus::not_colourable:
      return "not-colourable";
    case SolveStatus::timeout:
      return "timeout";
  }
  return "unknown";
}

Json solve_result_to_json(const SolveResult& r) {
  Json j;
  j["status"] = solve_status_name(r.status);
  j["witness"] = r.witness ? colouring_to_json(*r.witness) : Json(nullptr);
  j["nodes"] = r.nodes_explored;
  return j;
}

Json certificate_to_json(const NonColourabilityCertificate& cert) {
  Json j;
  j["U"] = cert.U;
  j["d"] = cert.d;
  j["u"] = cert.u;
  Json paths = Json::array();
  for (const std::vector<int>& p : cert.paths) paths.push_back(p);
  j["paths"] = std::move(paths);
  return j;
}

NonColourabilityCertificate certificate_from_json(const Json& j) {
  NonColourabilityCertificate cert;
  cert.U = j.at("U").get<std::vector<int>>();
  cert.d = j.at("d").get<int>();
  cert.u = j.at("u").get<int>();
  if (j.contains("paths") && !j.at("paths").is_null())
    cert.paths = j.at("paths").get<std::vector<std::vector<int>>>();
  return cert;
}

namespace {

const char* part_kind_name(PartKind k) {
  switch (k) {
    case PartKind::forest:
      return "forest";
    case PartKind::regular_bipartite:
      return "regular-bipartite";
    case PartKind::generic:
      return "generic";
  }
  return "unknown";
}

}  // namespace

Json decomposition_to_json(const Decomposition& d) {
  Json parts = Json::array();
  for (const Part& p : d.parts) {
    Json jp;
    jp["edges"] = p.edges.indices();
    jp["kind"] = part_kind_name(p.kind);
    jp["r"] = p.regularity ? Json(*p.regularity) : Json(nullptr);
    jp["colours"] = p.colours ? Json(p.colours->colour) : Json(nullptr);
    parts.push_back(std::move(jp));
  }
  Json j;
  j["parts"] = std::move(parts);
  return j;
}

Json thickness_to_json(const ThicknessResult& t) {
  Json j = decomposition_to_json(t.decomposition);
  j["theta"] = t.theta;
  j["exact"] = t.exact;
  return j;
}

Json bounds_report_to_json(const TBoundsReport& r) {
  Json entries = Json::array();
  for (const TBoundEntry& e : r.entries) {
    Json je;
    je["name"] = e.name;
    je["applicable"] = e.applicable;
    je["bound"] = e.bound;
    je["satisfied"] = e.satisfied;
    entries.push_back(std::move(je));
  }
  Json j;
  j["entries"] = std::move(entries);
  j["all_satisfied"] = r.all_satisfied;
  return j;
}

Json star_report_to_json(const StarPropertyReport& r) {
  Json samples = Json::array();
  for (const StarSample& s : r.samples) {
    Json js;
    js["subset_size"] = s.subset_size;
    js["over_count"] = s.over_count;
    js["threshold"] = s.threshold;
    js["pass"] = s.pass;
    samples.push_back(std::move(js));
  }
  Json j;
  j["samples"] = std::move(samples);
  j["violations"] = r.violations;
  j["violation_rate"] = r.violation_rate;
  return j;
}

std::string fingerprint_bytes(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out = "fnv1a:";
  for (int shift = 60; shift >= 0; shift -= 4)
    out.push_back(hex[(h >> shift) & 0xf]);
  return out;
}

}  // namespace icol
