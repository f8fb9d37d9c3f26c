#pragma once

// JSON serialization used by the CLI: run reports with deterministic key
// order, polynomials as exact decimal strings (lowest degree first),
// multivariate polynomials as exponent-vector/coefficient-code term lists
// under a field header.

#include <cstdint>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "qgraph/core.hpp"
#include "qgraph/derivations.hpp"
#include "qgraph/finite_field.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/graph_io.hpp"
#include "qgraph/int_poly.hpp"
#include "qgraph/mpoly.hpp"
#include "qgraph/q_combinatorics.hpp"

namespace qgraph {

using Json = nlohmann::ordered_json;

inline Json poly_to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (int d = 0; d <= p.degree(); ++d) arr.push_back(p.coeff(d).str());
  return arr;
}

inline IntPoly poly_from_json(const Json& arr) {
  std::vector<Int> c;
  for (const auto& v : arr) c.push_back(Int(v.get<std::string>()));
  return IntPoly(std::move(c));
}

inline Json ints_to_json(const std::vector<Int>& v) {
  Json arr = Json::array();
  for (const Int& x : v) arr.push_back(x.str());
  return arr;
}

inline Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["m"] = f.m();
  j["q"] = f.q();
  j["modulus"] = f.modulus();
  return j;
}

inline Json mpoly_to_json(const MPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["e"] = e;
    t["c"] = c;
    terms.push_back(std::move(t));
  }
  Json j;
  j["nvars"] = p.nvars();
  j["terms"] = std::move(terms);
  return j;
}

inline Json derivation_to_json(const Derivation& th) {
  Json arr = Json::array();
  for (const MPoly& c : th.coeffs) arr.push_back(mpoly_to_json(c));
  return arr;
}

inline Json certificate_to_json(const SaitoCertificate& cert) {
  Json j;
  j["theta_pdegs"] = ints_to_json(cert.theta_pdegs);
  j["arrangement_size"] = cert.arrangement_size;
  j["pdeg_sum_matches"] = cert.pdeg_sum_matches;
  j["det_degree"] = cert.det_degree.str();
  j["det_degree_matches"] = cert.det_degree_matches;
  j["det_nonzero"] = cert.det_nonzero;
  j["det"] = mpoly_to_json(cert.det);
  j["vanishing"] = cert.vanishing;
  j["verdict"] = cert.verdict ? "pass" : "fail";
  return j;
}

/// FNV-1a over the canonical text form; stable id for report inputs.
inline std::string graph_hash(const Graph& g) {
  std::string text = serialize_graph(g);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

inline Json make_report(const std::string& command) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["library_version"] = kVersion;
  j["command"] = command;
  j["inputs"] = Json::object();
  j["outputs"] = Json::object();
  j["verdicts"] = Json::array();
  return j;
}

inline void add_verdict(Json& report, const std::string& case_name, const std::string& status) {
  Json v;
  v["case"] = case_name;
  v["status"] = status;
  report["verdicts"].push_back(std::move(v));
}

}  // namespace qgraph
