#include "klcells/io.hpp"

#include <sstream>

#include "klcells/errors.hpp"

namespace klcells {

Json to_json(const Tableau& t) {
  Json j{{"rows", t.rows()}};
  if (t.is_skew()) j["inner"] = t.inner_shape().rows();
  return j;
}

Tableau tableau_from_json(const Json& j) {
  try {
    if (j.is_array()) return Tableau::from_rows(j.get<std::vector<std::vector<int>>>());
    if (!j.is_object() || !j.contains("rows")) throw InputError("tableau must be an array of rows or an object with \"rows\"");
    std::vector<int> inner;
    if (j.contains("inner")) inner = j.at("inner").get<std::vector<int>>();
    return Tableau::from_rows(j.at("rows").get<std::vector<std::vector<int>>>(), std::move(inner));
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad tableau: ") + e.what());
  }
}

Tableau parse_tableau(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad tableau JSON: ") + e.what());
  }
  return tableau_from_json(j);
}

Json to_json(const Permutation& w) { return Json(std::vector<int>(w.word().begin(), w.word().end())); }

Json to_json(const IntPolynomial& p) { return Json{{"coefficients", p.coefficients()}, {"text", p.str()}}; }

Json to_json(const CrystalWord& b) { return Json(b.letters); }

Json to_json(const CellPartition& p, int n) {
  Json cells = Json::array();
  for (const auto& cell : p.cells) {
    Json c = Json::array();
    for (const auto& w : cell) c.push_back(w.str());
    cells.push_back(std::move(c));
  }
  Json order = Json::array();
  for (std::size_t a = 0; a < p.cells.size(); ++a)
    for (std::size_t b = 0; b < p.cells.size(); ++b)
      if (a != b && p.leq[a][b]) order.push_back({a, b});
  return Json{{"side", p.side == CellSide::Left ? "left" : "right"}, {"n", n}, {"cells", cells}, {"order", order}};
}

Json to_json(const CellGraph& g) {
  Json vertices = Json::array();
  for (const auto& w : g.vertices) vertices.push_back(w.str());
  Json edges = Json::array();
  for (std::size_t x = 0; x < g.out.size(); ++x)
    for (auto y : g.out[x]) edges.push_back({x, y});
  return Json{{"kind", "cells"}, {"n", g.n}, {"vertices", vertices}, {"edges", edges}};
}

Json to_json(const CrystalGraph& g) {
  Json vertices = Json::array();
  for (const auto& b : g.vertices) vertices.push_back(to_json(b));
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.from, e.to, e.i});
  return Json{{"kind", "crystal"},
              {"n", g.vertices.empty() ? 0 : g.vertices.front().size()},
              {"rank", g.vertices.empty() ? 0 : g.vertices.front().rank},
              {"vertices", vertices},
              {"edges", edges}};
}

Json to_json(const Report& r) {
  Json facts = Json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  return Json{{"suite", r.suite},     {"n", r.n},           {"ok", r.ok()},
              {"cases", r.cases},     {"violations", r.violations}, {"facts", facts}};
}

std::string to_dot(const CellGraph& g) {
  std::ostringstream out;
  out << "digraph cells" << g.n << " {\n";
  for (const auto& w : g.vertices) out << "  \"" << w.str() << "\";\n";
  for (std::size_t x = 0; x < g.out.size(); ++x)
    for (auto y : g.out[x]) out << "  \"" << g.vertices[x].str() << "\" -> \"" << g.vertices[y].str() << "\";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const CrystalGraph& g) {
  auto name = [](const CrystalWord& b) {
    std::string s;
    for (int x : b.letters) s += std::to_string(x) + (b.rank > 9 ? "," : "");
    return s;
  };
  std::ostringstream out;
  out << "digraph crystal {\n";
  for (const auto& b : g.vertices) out << "  \"" << name(b) << "\";\n";
  for (const auto& e : g.edges)
    out << "  \"" << name(g.vertices[e.from]) << "\" -> \"" << name(g.vertices[e.to]) << "\" [label=\"f" << e.i
        << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  out << r.suite << " n=" << r.n << ": " << (r.ok() ? "pass" : "FAIL") << ", " << r.cases << " cases";
  for (const auto& [k, v] : r.facts) out << ", " << v << ' ' << k;
  out << '\n';
  for (const auto& v : r.violations) out << "  violation: " << v << '\n';
  return out.str();
}

}  // namespace klcells
