#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tutte/error.hpp"
#include "tutte/graph.hpp"
#include "tutte/matrix.hpp"
#include "tutte/partition.hpp"
#include "tutte/polynomials.hpp"
#include "tutte/rational.hpp"
#include "tutte/split.hpp"

namespace tutte::io {

using json = nlohmann::json;

inline json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"dim", m.rows()}, {"entries", std::move(rows)}};
}

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorCode::Parse, "expected a rational string, got " + j.dump());
}

inline RatMatrix matrix_from_json(const json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != dim) throw Error(ErrorCode::Parse, "matrix needs dim rows");
    RatMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!rows[i].is_array() || rows[i].size() != dim) throw Error(ErrorCode::Parse, "matrix row has wrong length");
      for (std::size_t j2 = 0; j2 < dim; ++j2) m(i, j2) = rational_from_json(rows[i][j2]);
    }
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

inline json to_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(json::array({e.a, e.b}));
  return {{"vertices", g.vertices()}, {"edges", std::move(edges)}, {"terminals", g.terminals()}};
}

inline Multigraph graph_from_json(const json& j) {
  try {
    auto vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "edge must be a pair of labels");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    std::vector<std::string> terminals;
    if (j.contains("terminals")) terminals = j.at("terminals").get<std::vector<std::string>>();
    return Multigraph(std::move(vertices), std::move(edges), std::move(terminals));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

inline json to_json(const SplitInstance& s) {
  return {{"K", to_json(s.k)}, {"H", to_json(s.h)}, {"terminals", s.terminals}};
}

inline SplitInstance split_from_json(const json& j) {
  try {
    SplitInstance s{graph_from_json(j.at("K")), graph_from_json(j.at("H")),
                    j.at("terminals").get<std::vector<std::string>>()};
    (void)s.glued();
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

inline json to_json(const Partition& p) { return p.block_labels(); }

/// Tutte polynomial terms as [[dx, dy, "coeff"], ...].
inline json tutte_terms_json(const MultiPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(json::array({m[1], m[2], c.to_string()}));
  return out;
}

/// Negami polynomial terms as [[dt, dx, dy, "coeff"], ...].
inline json negami_terms_json(const MultiPoly& p) {
  json out = json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(json::array({m[0], m[1], m[2], c.to_string()}));
  return out;
}

inline json to_json(const CoeffMatrix& c) {
  json m = to_json(c.entries);
  return {{"n", c.n}, {"region", c.region.to_string()}, {"order", c.order}, {"entries", m["entries"]}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

}  // namespace tutte::io
