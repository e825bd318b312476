// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATSPLIT_CATALOG_HPP_
#define MATSPLIT_CATALOG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "matsplit/matroid.hpp"
#include "matsplit/multigraph.hpp"

namespace matsplit {

/// A named matroid or graph from the fixed catalog. Graph entries also act
/// as matroid entries through their cycle matroid.
struct CatalogEntry {
  std::string name;
  std::optional<BinaryMatroid> matroid;
  std::optional<Multigraph> graph;

  bool is_graph() const { return graph.has_value(); }

  BinaryMatroid as_matroid() const {
    if (matroid) return *matroid;
    return from_graph(*graph);
  }
};

namespace catalog_detail {

inline BitMatrix r10_matrix() {
  return BitMatrix::of({
      "1000011001",
      "0100011100",
      "0010001110",
      "0001000111",
      "0000110011",
  });
}

inline BitMatrix ma1_matrix() {
  return BitMatrix::of({
      "10000110010",
      "01000111000",
      "00100011100",
      "00010001110",
      "00001100110",
      "00000000001",
  });
}

inline BitMatrix b_matrix() {
  return BitMatrix::of({
      "10011001",
      "01011100",
      "00101110",
  });
}

/// Fano matroid: identity followed by (1,1,0), (1,0,1), (0,1,1), (1,1,1).
inline BitMatrix fano_matrix() {
  return BitMatrix::of({
      "1001101",
      "0101011",
      "0010111",
  });
}

inline std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// Complete graph on vertices 1..n (stored 0-based); edge uv labeled "uv".
inline Multigraph complete_graph(std::size_t n) {
  Multigraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      g.add_edge(std::to_string(u + 1) + std::to_string(v + 1), u, v);
  return g;
}

/// Complete bipartite graph with parts {1,2,3} and {4,5,6}.
inline Multigraph complete_bipartite_33() {
  Multigraph g(6);
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 3; v < 6; ++v)
      g.add_edge(std::to_string(u + 1) + std::to_string(v + 1), u, v);
  return g;
}

/// K4 plus parallel copies of the two non-adjacent edges 12 and 34.
inline Multigraph g1_graph() {
  Multigraph g = complete_graph(4);
  g.add_edge("12p", 0, 1);
  g.add_edge("34p", 2, 3);
  return g;
}

/// 4-cycle 1-2-3-4, apex vertex 5 adjacent to 1, 2, 4, and a parallel copy
/// of edge 34.
inline Multigraph g2_graph() {
  Multigraph g(5);
  g.add_edge("12", 0, 1);
  g.add_edge("23", 1, 2);
  g.add_edge("34", 2, 3);
  g.add_edge("14", 0, 3);
  g.add_edge("15", 0, 4);
  g.add_edge("25", 1, 4);
  g.add_edge("45", 3, 4);
  g.add_edge("34p", 2, 3);
  return g;
}

/// 7 vertices, 11 edges: square column 1-5-3-7-4-2 with closing edges, a
/// middle rung, and two diagonals.
inline Multigraph g4_graph() {
  Multigraph g(7);
  g.add_edge("15", 0, 4);
  g.add_edge("35", 2, 4);
  g.add_edge("37", 2, 6);
  g.add_edge("47", 3, 6);
  g.add_edge("24", 1, 3);
  g.add_edge("26", 1, 5);
  g.add_edge("16", 0, 5);
  g.add_edge("14", 0, 3);
  g.add_edge("25", 1, 4);
  g.add_edge("36", 2, 5);
  g.add_edge("67", 5, 6);
  return g;
}

/// K33 plus one extra edge inside the part {1,2,3}.
inline Multigraph g5_graph() {
  Multigraph g = complete_bipartite_33();
  g.add_edge("12", 0, 1);
  return g;
}

/// K33 minus the edge 14.
inline Multigraph g6_graph() {
  Multigraph g(6);
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 3; v < 6; ++v) {
      if (u == 0 && v == 3) continue;
      g.add_edge(std::to_string(u + 1) + std::to_string(v + 1), u, v);
    }
  return g;
}

/// K5 minus the two adjacent edges 12 and 13.
inline Multigraph g7_graph() {
  Multigraph g(5);
  for (std::size_t u = 0; u < 5; ++u)
    for (std::size_t v = u + 1; v < 5; ++v) {
      if (u == 0 && (v == 1 || v == 2)) continue;
      g.add_edge(std::to_string(u + 1) + std::to_string(v + 1), u, v);
    }
  return g;
}

}  // namespace catalog_detail

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "F7", "F7dual", "R10",     "MA1", "K4", "K5", "K33", "K5dual", "K33dual",
      "G1", "G2",     "G3",      "G4",  "G5", "G6", "G7",  "MG1matrixB"};
  return names;
}

/// Looks up a catalog entry by name; throws on unknown names.
inline CatalogEntry catalog_get(const std::string& name) {
  using namespace catalog_detail;
  CatalogEntry e;
  e.name = name;
  if (name == "F7") {
    e.matroid = from_matrix(fano_matrix(), numeric_labels(7));
  } else if (name == "F7dual") {
    e.matroid = dual(from_matrix(fano_matrix(), numeric_labels(7)));
  } else if (name == "R10") {
    e.matroid = from_matrix(r10_matrix(), numeric_labels(10));
  } else if (name == "MA1") {
    e.matroid = from_matrix(ma1_matrix(), numeric_labels(11));
  } else if (name == "MG1matrixB") {
    e.matroid = from_matrix(b_matrix(), {"1", "2", "3", "6", "7", "8", "9", "10"});
  } else if (name == "K4") {
    e.graph = complete_graph(4);
  } else if (name == "K5") {
    e.graph = complete_graph(5);
  } else if (name == "K33") {
    e.graph = complete_bipartite_33();
  } else if (name == "K5dual") {
    e.matroid = dual(from_graph(complete_graph(5)));
  } else if (name == "K33dual") {
    e.matroid = dual(from_graph(complete_bipartite_33()));
  } else if (name == "G1") {
    e.graph = g1_graph();
  } else if (name == "G2") {
    e.graph = g2_graph();
  } else if (name == "G3") {
    e.graph = complete_graph(5);
  } else if (name == "G4") {
    e.graph = g4_graph();
  } else if (name == "G5") {
    e.graph = g5_graph();
  } else if (name == "G6") {
    e.graph = g6_graph();
  } else if (name == "G7") {
    e.graph = g7_graph();
  } else {
    throw std::invalid_argument("catalog: unknown name '" + name + "'");
  }
  return e;
}

}  // namespace matsplit

#endif  // MATSPLIT_CATALOG_HPP_
