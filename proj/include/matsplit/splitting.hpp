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

#ifndef MATSPLIT_SPLITTING_HPP_
#define MATSPLIT_SPLITTING_HPP_

#include <string>
#include <utility>

#include "matsplit/matroid.hpp"
#include "matsplit/multigraph.hpp"

namespace matsplit {

/// The unordered pair of elements a splitting operation acts on.
struct SplitPair {
  std::string x;
  std::string y;
};

/// Splitting of a binary matroid: take a standard representation A of M and
/// adjoin one extra row whose entries are 1 exactly in the columns of x and
/// y. Returns the vector matroid of that matrix on the same labels.
///
/// The result does not depend on which standard form is used: appending the
/// indicator row extends the row space by one generator, and the extended
/// space depends only on the original row space.
inline BinaryMatroid split(const BinaryMatroid& m, const SplitPair& p) {
  if (p.x == p.y) throw std::invalid_argument("split: x = y");
  const std::size_t ix = m.require_index(p.x);
  const std::size_t iy = m.require_index(p.y);

  const StandardForm sf = standard_form(m.representation());
  BitMatrix a = sf.matrix;
  a.append_row(0);
  for (std::size_t j = 0; j < a.col_count(); ++j)
    if (sf.column_order[j] == ix || sf.column_order[j] == iy)
      a.set(a.row_count() - 1, j, true);

  // Put the columns back into label order before building the matroid.
  BitMatrix aligned(a.row_count(), a.col_count());
  for (std::size_t j = 0; j < a.col_count(); ++j)
    for (std::size_t r = 0; r < a.row_count(); ++r)
      if (a.get(r, j)) aligned.set(r, sf.column_order[j], true);
  return BinaryMatroid(aligned, m.elements());
}

/// Splitting of a graph (Fleischner): delete the two edges x = v v1 and
/// y = v v2 from their shared endpoint v (which must have degree >= 3) and
/// attach a new vertex adjacent to v1 and v2 instead. The two new edges
/// reuse the labels x and y, so matroid-level comparisons stay label-aligned.
inline Multigraph split_graph(const Multigraph& g, const SplitPair& p) {
  if (p.x == p.y) throw std::invalid_argument("split_graph: x = y");
  auto ix = g.edge_index(p.x);
  auto iy = g.edge_index(p.y);
  if (!ix) throw std::invalid_argument("split_graph: unknown edge '" + p.x + "'");
  if (!iy) throw std::invalid_argument("split_graph: unknown edge '" + p.y + "'");
  const Edge& ex = g.edge(*ix);
  const Edge& ey = g.edge(*iy);
  if (ex.u == ex.v || ey.u == ey.v)
    throw std::invalid_argument("split_graph: loop edges cannot be split away");

  // Shared endpoint of degree >= 3; for a parallel pair both endpoints are
  // shared and the smaller qualifying index is chosen.
  std::size_t v = g.vertex_count();
  bool share = false;
  for (std::size_t cand : {std::min(ex.u, ex.v), std::max(ex.u, ex.v)}) {
    if (cand != ey.u && cand != ey.v) continue;
    share = true;
    if (g.degree(cand) >= 3) {
      v = cand;
      break;
    }
  }
  if (!share)
    throw std::invalid_argument("split_graph: edges do not share an endpoint");
  if (v == g.vertex_count())
    throw std::invalid_argument("split_graph: shared endpoint has degree < 3");

  const std::size_t v1 = (ex.u == v) ? ex.v : ex.u;
  const std::size_t v2 = (ey.u == v) ? ey.v : ey.u;
  const std::size_t fresh = g.vertex_count();

  Multigraph out(g.vertex_count() + 1);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (i == *ix)
      out.add_edge(e.label, fresh, v1);
    else if (i == *iy)
      out.add_edge(e.label, fresh, v2);
    else
      out.add_edge(e.label, e.u, e.v);
  }
  return out;
}

}  // namespace matsplit

#endif  // MATSPLIT_SPLITTING_HPP_
