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

#ifndef MATSPLIT_MULTIGRAPH_HPP_
#define MATSPLIT_MULTIGRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matsplit/bit_matrix.hpp"

namespace matsplit {

/// One edge of a multigraph. u == v is a loop.
struct Edge {
  std::string label;
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.label == b.label && a.u == b.u && a.v == b.v;
  }
};

/// Labeled-edge multigraph: parallel edges and loops allowed, vertices are
/// 0-based indices. Edge labels must be pairwise distinct.
class Multigraph {
 public:
  explicit Multigraph(std::size_t vertex_count) : vertex_count_(vertex_count) {
    if (vertex_count == 0)
      throw std::invalid_argument("Multigraph: vertex_count must be positive");
  }

  /// Convenience builder: edges given as (label, u, v) triples.
  static Multigraph of(std::size_t vertex_count,
                       const std::vector<Edge>& edges) {
    Multigraph g(vertex_count);
    for (const Edge& e : edges) g.add_edge(e.label, e.u, e.v);
    return g;
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  void add_edge(std::string label, std::size_t u, std::size_t v) {
    if (label.empty()) throw std::invalid_argument("Multigraph: empty edge label");
    if (u >= vertex_count_ || v >= vertex_count_)
      throw std::invalid_argument("Multigraph: vertex index out of range");
    if (edge_index(label))
      throw std::invalid_argument("Multigraph: duplicate edge label '" + label + "'");
    edges_.push_back(Edge{std::move(label), u, v});
  }

  void add_vertex() { ++vertex_count_; }

  std::optional<std::size_t> edge_index(const std::string& label) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].label == label) return i;
    return std::nullopt;
  }

  void remove_edge(std::size_t index) {
    if (index >= edges_.size())
      throw std::out_of_range("Multigraph: edge index out of range");
    edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(index));
  }

  /// Degree of a vertex; a loop contributes 2.
  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (const Edge& e : edges_) {
      if (e.u == v) ++d;
      if (e.v == v) ++d;
    }
    return d;
  }

  /// True iff every vertex lies in one component (a single-vertex graph is
  /// connected; any isolated vertex in a larger graph is not).
  bool is_connected() const {
    std::vector<std::size_t> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge& e : edges_) parent[find(e.u)] = find(e.v);
    for (std::size_t v = 1; v < vertex_count_; ++v)
      if (find(v) != find(0)) return false;
    return true;
  }

  /// Vertex-edge incidence matrix over GF(2): one row per vertex, one column
  /// per edge; a loop gives a zero column.
  BitMatrix incidence_matrix() const {
    BitMatrix m(vertex_count_, edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].u == edges_[i].v) continue;
      m.set(edges_[i].u, i, true);
      m.set(edges_[i].v, i, true);
    }
    return m;
  }

  std::vector<std::string> edge_labels() const {
    std::vector<std::string> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.push_back(e.label);
    return out;
  }

  /// Canonical form for isomorphism checks: the lexicographically smallest
  /// sorted edge multiset over all relabelings of the vertices. Ignores edge
  /// labels. Exponential in the vertex count; guarded for small graphs.
  std::vector<std::pair<std::size_t, std::size_t>> canonical_form() const {
    if (vertex_count_ > 9)
      throw std::invalid_argument("canonical_form: too many vertices");
    std::vector<std::size_t> perm(vertex_count_);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::pair<std::size_t, std::size_t>> best;
    bool have_best = false;
    do {
      std::vector<std::pair<std::size_t, std::size_t>> cur;
      cur.reserve(edges_.size());
      for (const Edge& e : edges_) {
        std::size_t a = perm[e.u];
        std::size_t b = perm[e.v];
        cur.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(cur.begin(), cur.end());
      if (!have_best || cur < best) {
        best = std::move(cur);
        have_best = true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Vertex-labeled multigraph isomorphism (edge labels ignored).
inline bool graphs_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return a.canonical_form() == b.canonical_form();
}

/// Reads the plain-text graph format:
///
///   VERTICES E
///   <E lines of "label u v" with 0-based vertex indices>
inline Multigraph read_graph_text(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("graph: missing header line");
  auto header = detail::split_ws(detail::strip_cr(line));
  if (header.size() != 2) throw ParseError("graph: header must be 'VERTICES E'");
  std::size_t vertices = 0, edge_count = 0;
  try {
    vertices = std::stoul(header[0]);
    edge_count = std::stoul(header[1]);
  } catch (const std::exception&) {
    throw ParseError("graph: header must contain two nonnegative integers");
  }
  if (vertices == 0) throw ParseError("graph: vertex count must be positive");

  Multigraph g(vertices);
  for (std::size_t i = 0; i < edge_count; ++i) {
    if (!std::getline(in, line))
      throw ParseError("graph: expected " + std::to_string(edge_count) + " edges");
    auto toks = detail::split_ws(detail::strip_cr(line));
    if (toks.size() != 3)
      throw ParseError("graph: edge line must be 'label u v'");
    std::size_t u = 0, v = 0;
    try {
      u = std::stoul(toks[1]);
      v = std::stoul(toks[2]);
    } catch (const std::exception&) {
      throw ParseError("graph: edge endpoints must be integers");
    }
    try {
      g.add_edge(toks[0], u, v);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("graph: ") + e.what());
    }
  }
  while (std::getline(in, line)) {
    if (!detail::strip_cr(line).empty())
      throw ParseError("graph: unexpected trailing content");
  }
  return g;
}

inline Multigraph read_graph_text(const std::string& text) {
  std::istringstream in(text);
  return read_graph_text(in);
}

inline void write_graph_text(std::ostream& out, const Multigraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges())
    out << e.label << ' ' << e.u << ' ' << e.v << '\n';
}

inline std::string graph_to_text(const Multigraph& g) {
  std::ostringstream out;
  write_graph_text(out, g);
  return out.str();
}

}  // namespace matsplit

#endif  // MATSPLIT_MULTIGRAPH_HPP_
