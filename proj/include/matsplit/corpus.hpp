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

#ifndef MATSPLIT_CORPUS_HPP_
#define MATSPLIT_CORPUS_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matsplit/catalog.hpp"
#include "matsplit/matroid.hpp"
#include "matsplit/multigraph.hpp"
#include "matsplit/recognition.hpp"

namespace matsplit {

/// Every connected multigraph (loops and parallel edges allowed, no isolated
/// vertices) with at most max_vertices vertices and between 1 and max_edges
/// edges, one representative per isomorphism class. Deterministic: vertex
/// counts ascending, then edge counts, then lexicographic edge multisets; the
/// first representative encountered is kept. Edges are labeled e1, e2, ...
inline std::vector<Multigraph> connected_multigraphs(std::size_t max_vertices,
                                                     std::size_t max_edges) {
  if (max_vertices == 0 || max_vertices > 9)
    throw std::invalid_argument("connected_multigraphs: need 1..9 vertices");

  std::vector<Multigraph> out;
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;

  for (std::size_t v = 1; v <= max_vertices; ++v) {
    // Unordered vertex pairs (loops included), lexicographic.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a; b < v; ++b) slots.emplace_back(a, b);

    const std::size_t min_edges = v > 1 ? v - 1 : 1;
    std::vector<std::size_t> pick;  // nondecreasing slot indices

    auto emit = [&]() {
      Multigraph g(v);
      for (std::size_t i = 0; i < pick.size(); ++i)
        g.add_edge("e" + std::to_string(i + 1), slots[pick[i]].first,
                   slots[pick[i]].second);
      for (std::size_t a = 0; a < v; ++a)
        if (g.degree(a) == 0) return;
      if (!g.is_connected()) return;
      if (seen.insert(g.canonical_form()).second) out.push_back(std::move(g));
    };

    auto grow = [&](auto&& self, std::size_t from) -> void {
      if (pick.size() >= min_edges) emit();
      if (pick.size() == max_edges) return;
      for (std::size_t s = from; s < slots.size(); ++s) {
        pick.push_back(s);
        self(self, s);
        pick.pop_back();
      }
    };
    grow(grow, 0);
  }
  return out;
}

/// All minors of R10 reachable by at most max_removals single-element
/// deletions/contractions, one representative per isomorphism class, R10
/// itself included. Deterministic breadth-first order.
inline std::vector<BinaryMatroid> r10_derived_minors(std::size_t max_removals) {
  std::vector<BinaryMatroid> out;
  out.push_back(catalog_get("R10").as_matroid());
  std::size_t level_begin = 0;
  for (std::size_t depth = 0; depth < max_removals; ++depth) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const std::string& e : out[i].elements()) {
        for (bool contract : {false, true}) {
          MinorSpec spec = contract ? MinorSpec{{}, {e}} : MinorSpec{{e}, {}};
          BinaryMatroid next = minor(out[i], spec);
          bool fresh = true;
          for (const BinaryMatroid& have : out)
            if (have.size() == next.size() && have.rank() == next.rank() &&
                isomorphic(have, next)) {
              fresh = false;
              break;
            }
          if (fresh) out.push_back(std::move(next));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace matsplit

#endif  // MATSPLIT_CORPUS_HPP_
