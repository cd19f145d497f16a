#pragma once

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cyclo/classify.hpp"
#include "cyclo/digraph.hpp"
#include "cyclo/equivalence.hpp"
#include "cyclo/error.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/signed_graph.hpp"

namespace cyclo {

using Json = nlohmann::json;

namespace detail {

inline int json_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline int vertex_count(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  if (!j.contains("n")) throw ParseError("missing field \"n\"");
  const int n = json_int(j.at("n"), "n");
  if (n < 0) throw ParseError("n must be nonnegative");
  return n;
}

/// Reads an optional array of vertex pairs; entries must be in range and distinct.
inline std::vector<std::pair<int, int>> pair_list(const Json& j, const char* key, int n) {
  std::vector<std::pair<int, int>> out;
  if (!j.contains(key)) return out;
  const Json& a = j.at(key);
  if (!a.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  for (const Json& e : a) {
    if (!e.is_array() || e.size() != 2) throw ParseError(std::string("\"") + key + "\" entries must be [u,v] pairs");
    const int u = json_int(e[0], "vertex");
    const int v = json_int(e[1], "vertex");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex out of range in \"" + std::string(key) + "\"");
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
    out.emplace_back(u, v);
  }
  return out;
}

inline Json pairs_json(const std::vector<std::pair<int, int>>& ps) {
  Json a = Json::array();
  for (auto [u, v] : ps) a.push_back({u, v});
  return a;
}

}  // namespace detail

inline Json to_json(const Digraph& d) {
  return {{"n", d.size()}, {"digons", detail::pairs_json(d.digons())}, {"arcs", detail::pairs_json(d.arcs())}};
}

/// Each unordered pair may appear once across digons and arcs; digons list u < v.
inline Digraph digraph_from_json(const Json& j) {
  const int n = detail::vertex_count(j);
  Digraph d(n);
  std::set<std::pair<int, int>> used;
  auto claim = [&](int u, int v) {
    if (!used.emplace(std::min(u, v), std::max(u, v)).second)
      throw ParseError("pair {" + std::to_string(u) + "," + std::to_string(v) + "} listed more than once");
  };
  for (auto [u, v] : detail::pair_list(j, "digons", n)) {
    if (u > v) throw ParseError("digon [" + std::to_string(u) + "," + std::to_string(v) + "] must have u < v");
    claim(u, v);
    d.add_digon(u, v);
  }
  for (auto [u, v] : detail::pair_list(j, "arcs", n)) {
    claim(u, v);
    d.add_arc(u, v);
  }
  return d;
}

inline Json to_json(const SignedGraph& s) {
  return {{"n", s.size()}, {"pos", detail::pairs_json(s.positive_edges())}, {"neg", detail::pairs_json(s.negative_edges())}};
}

inline SignedGraph signed_graph_from_json(const Json& j) {
  const int n = detail::vertex_count(j);
  SignedGraph s(n);
  for (const auto& [key, sign] : {std::pair{"pos", 1}, std::pair{"neg", -1}})
    for (auto [u, v] : detail::pair_list(j, key, n)) {
      if (s.sign(u, v) != 0) throw ParseError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} listed more than once");
      s.set_sign(u, v, sign);
    }
  return s;
}

inline Json to_json(const SwitchingWitness& w) {
  Json phases = Json::array();
  for (Unit u : w.phases) phases.push_back(std::string(to_string(u)));
  return {{"perm", w.perm}, {"phases", phases}, {"conj", w.conjugated}, {"neg", w.negated}};
}

inline SwitchingWitness witness_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("witness must be a JSON object");
  SwitchingWitness w;
  try {
    w.perm = j.at("perm").get<std::vector<int>>();
    for (const Json& p : j.at("phases")) w.phases.push_back(parse_unit(p.get<std::string>()));
    w.conjugated = j.value("conj", false);
    w.negated = j.value("neg", false);
  } catch (const Json::exception& err) {
    throw ParseError(std::string("malformed witness: ") + err.what());
  }
  check_witness_shape(w, w.size());
  return w;
}

/// Coefficients as decimal strings, constant term first.
inline Json to_json(const IntPoly& p) {
  Json a = Json::array();
  for (const BigInt& c : p.coefficients()) a.push_back(c.str());
  return a;
}

inline IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient strings");
  std::vector<BigInt> c;
  for (const Json& e : j) {
    if (!e.is_string()) throw ParseError("polynomial coefficients must be strings");
    try {
      c.emplace_back(e.get<std::string>());
    } catch (const std::runtime_error&) {
      throw ParseError("not a decimal integer: " + e.get<std::string>());
    }
  }
  return IntPoly(std::move(c));
}

inline Json to_json(const ClassificationResult& r) {
  Json j{{"radius", std::string(to_string(r.radius))}, {"notes", r.notes}};
  if (r.container) {
    j["container"] = {{"ref", r.container->ref.to_string()},
                      {"item", theorem_item(r.container->ref)},
                      {"subset", r.container->subset},
                      {"witness", to_json(r.container->witness)}};
  } else {
    j["container"] = nullptr;
  }
  j["lattice"] = r.lattice ? Json(*r.lattice) : Json(nullptr);
  return j;
}

/// Digons as undirected edges, arcs as directed edges.
inline std::string to_dot(const Digraph& d, const std::string& name = "D") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int x = 0; x < d.size(); ++x) os << "  " << x << ";\n";
  for (auto [u, v] : d.digons()) os << "  " << u << " -> " << v << " [dir=none];\n";
  for (auto [u, v] : d.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

/// Positive edges solid, negative edges dashed.
inline std::string to_dot(const SignedGraph& s, const std::string& name = "S") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int x = 0; x < s.size(); ++x) os << "  " << x << ";\n";
  for (auto [u, v] : s.positive_edges()) os << "  " << u << " -- " << v << ";\n";
  for (auto [u, v] : s.negative_edges()) os << "  " << u << " -- " << v << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cyclo
