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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "matsplit/splitting.hpp"
#include "oracles.hpp"

using matsplit::BinaryMatroid;
using matsplit::BitMatrix;
using matsplit::ElementMask;
using matsplit::MinorSpec;
using matsplit::Multigraph;
using matsplit::SplitPair;

TEST_CASE("split: rank grows by at most one") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    BinaryMatroid m = fixtures::random_matroid(rng, 10);
    if (m.size() < 2) continue;
    std::size_t i = rng() % m.size();
    std::size_t j = (i + 1 + rng() % (m.size() - 1)) % m.size();
    BinaryMatroid s = split(m, SplitPair{m.elements()[i], m.elements()[j]});
    REQUIRE(s.elements() == m.elements());
    std::size_t diff = s.rank() - m.rank();
    REQUIRE((diff == 0 || diff == 1));
  }
}

TEST_CASE("split: coloops propagate (observation i)") {
  // Explicit instance: x a coloop next to a triangle.
  BitMatrix m = BitMatrix::of({
      "1000",
      "0110",
      "0011",
  });  // x = column 0 is a coloop; {b,c,d} is a triangle
  BinaryMatroid M = matsplit::from_matrix(m, {"x", "b", "c", "d"});
  REQUIRE(matsplit::loops_coloops(M).coloops == std::vector<std::string>{"x"});
  BinaryMatroid S = split(M, SplitPair{"x", "c"});
  auto lc = matsplit::loops_coloops(S);
  REQUIRE(std::find(lc.coloops.begin(), lc.coloops.end(), "x") != lc.coloops.end());
  REQUIRE(std::find(lc.coloops.begin(), lc.coloops.end(), "c") != lc.coloops.end());

  // Randomized: whenever x or y is a coloop of M, both are coloops of the split.
  std::mt19937_64 rng(202);
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 40; ++trial) {
    BinaryMatroid M2 = fixtures::random_matroid(rng, 8);
    if (M2.size() < 2) continue;
    ElementMask coloops = matsplit::coloops_mask(M2);
    if (coloops == 0) continue;
    std::size_t x = 0;
    while (!((coloops >> x) & 1u)) ++x;
    std::size_t y = rng() % M2.size();
    if (y == x) y = (y + 1) % M2.size();
    ++seen;
    BinaryMatroid S2 = split(M2, SplitPair{M2.elements()[x], M2.elements()[y]});
    ElementMask out = matsplit::coloops_mask(S2);
    REQUIRE(((out >> x) & 1u) == 1u);
    REQUIRE(((out >> y) & 1u) == 1u);
  }
  REQUIRE(seen >= 40);
}

TEST_CASE("split: the pair becomes a 2-cocircuit unless a coloop intervenes "
          "(observation ii)") {
  std::mt19937_64 rng(303);
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 60; ++trial) {
    BinaryMatroid m = fixtures::random_matroid(rng, 8);
    if (m.size() < 2) continue;
    ElementMask coloops = matsplit::coloops_mask(m);
    std::size_t i = rng() % m.size();
    std::size_t j = (i + 1 + rng() % (m.size() - 1)) % m.size();
    if (((coloops >> i) & 1u) || ((coloops >> j) & 1u)) continue;
    ++seen;
    BinaryMatroid s = split(m, SplitPair{m.elements()[i], m.elements()[j]});
    REQUIRE(matsplit::is_2_cocircuit(s, m.elements()[i], m.elements()[j]));
  }
  REQUIRE(seen >= 60);
}

TEST_CASE("split: identity on 2-cocircuit pairs (observation iii)") {
  // The two series edges of a triangle-with-pendant form a 2-cocircuit.
  Multigraph g(4);
  g.add_edge("a", 0, 1);
  g.add_edge("b", 1, 2);
  g.add_edge("c", 2, 0);
  g.add_edge("d", 2, 3);
  BinaryMatroid m = matsplit::from_graph(g);
  REQUIRE(matsplit::is_2_cocircuit(m, "b", "c"));
  REQUIRE(matsplit::same_matroid(split(m, SplitPair{"b", "c"}), m));

  // Randomized over all 2-cocircuit pairs found.
  std::mt19937_64 rng(404);
  int seen = 0;
  for (int trial = 0; trial < 600 && seen < 40; ++trial) {
    BinaryMatroid M = fixtures::random_matroid(rng, 8);
    for (std::size_t i = 0; i < M.size() && seen < 40; ++i)
      for (std::size_t j = i + 1; j < M.size(); ++j) {
        if (!matsplit::is_2_cocircuit(M, M.elements()[i], M.elements()[j])) continue;
        ++seen;
        BinaryMatroid S = split(M, SplitPair{M.elements()[i], M.elements()[j]});
        REQUIRE(matsplit::same_matroid(S, M));
        break;
      }
  }
  REQUIRE(seen >= 40);
}

TEST_CASE("split: well-defined across representations of the same matroid") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 100; ++trial) {
    BinaryMatroid m = fixtures::random_matroid(rng, 10);
    if (m.size() < 2 || m.rank() == 0) continue;
    std::size_t i = rng() % m.size();
    std::size_t j = (i + 1 + rng() % (m.size() - 1)) % m.size();
    SplitPair p{m.elements()[i], m.elements()[j]};
    BinaryMatroid s = split(m, p);

    // Apply random row operations to the representation and append the
    // indicator row by hand: the vector matroid must come out the same.
    BitMatrix alt = m.representation();
    for (int k = 0; k < 12; ++k) {
      std::size_t a = rng() % alt.row_count();
      std::size_t b = rng() % alt.row_count();
      if (a != b) alt.xor_row_into(a, b);
      if (rng() & 1u) alt.swap_rows(rng() % alt.row_count(), rng() % alt.row_count());
    }
    alt.append_row((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
    BinaryMatroid s2 = matsplit::from_matrix(alt, m.elements());
    REQUIRE(matsplit::same_matroid(s, s2));
    REQUIRE(fixtures::independence_families_equal(s, s2));

    // Present the same matroid with its columns in rotated order (a different
    // standard form gets chosen) and split there.
    const std::size_t n = m.size();
    const std::size_t shift = 1 + rng() % (n > 1 ? n - 1 : 1);
    BitMatrix rot(m.representation().row_count(), n);
    std::vector<std::string> rot_labels(n);
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t dst = (c + shift) % n;
      rot_labels[dst] = m.elements()[c];
      for (std::size_t r = 0; r < rot.row_count(); ++r)
        if (m.representation().get(r, c)) rot.set(r, dst, true);
    }
    BinaryMatroid s3 = split(matsplit::from_matrix(rot, rot_labels), p);
    REQUIRE(matsplit::same_matroid(s, s3));
  }
}

TEST_CASE("split: commutes with minors avoiding the pair") {
  std::mt19937_64 rng(606);
  int done = 0;
  for (int trial = 0; trial < 300 && done < 80; ++trial) {
    BinaryMatroid m = fixtures::random_matroid(rng, 9);
    if (m.size() < 4) continue;
    std::size_t i = rng() % m.size();
    std::size_t j = (i + 1 + rng() % (m.size() - 1)) % m.size();
    SplitPair p{m.elements()[i], m.elements()[j]};
    ElementMask protect = (ElementMask{1} << i) | (ElementMask{1} << j);
    ElementMask s = rng() & m.full_mask() & ~protect;
    ElementMask t1 = rng() & s;
    ElementMask t2 = s & ~t1;
    MinorSpec spec{m.labels_of(t1), m.labels_of(t2)};
    ++done;
    BinaryMatroid lhs = minor(split(m, p), spec);
    BinaryMatroid rhs = split(minor(m, spec), p);
    REQUIRE(matsplit::same_matroid(lhs, rhs));
  }
  REQUIRE(done >= 80);
}

TEST_CASE("split: errors") {
  BinaryMatroid r10 = fixtures::r10();
  REQUIRE_THROWS_AS(split(r10, SplitPair{"1", "1"}), std::invalid_argument);
  REQUIRE_THROWS_AS(split(r10, SplitPair{"1", "zz"}), std::invalid_argument);
}

TEST_CASE("split: loops are allowed and simply gain the indicator entry") {
  BitMatrix m = BitMatrix::of({"110"});
  BinaryMatroid M = matsplit::from_matrix(m, {"a", "b", "l"});
  REQUIRE(matsplit::loops_coloops(M).loops == std::vector<std::string>{"l"});
  BinaryMatroid S = split(M, SplitPair{"a", "l"});
  REQUIRE(matsplit::loops_coloops(S).loops.empty());
  REQUIRE(S.rank() == 2);
}

TEST_CASE("split_graph on K4") {
  Multigraph k4(4);
  k4.add_edge("12", 0, 1);
  k4.add_edge("13", 0, 2);
  k4.add_edge("14", 0, 3);
  k4.add_edge("23", 1, 2);
  k4.add_edge("24", 1, 3);
  k4.add_edge("34", 2, 3);

  Multigraph s = split_graph(k4, SplitPair{"12", "13"});
  REQUIRE(s.vertex_count() == 5);
  REQUIRE(s.edge_count() == 6);
  REQUIRE(s.degree(4) == 2);   // the new vertex
  REQUIRE(s.degree(0) == 1);   // kept only edge "14"
  auto i12 = s.edge_index("12");
  REQUIRE(i12.has_value());
  REQUIRE(s.edge(*i12).u == 4);
  REQUIRE(s.edge(*i12).v == 1);
}

TEST_CASE("split_graph on the triangle with a pendant edge") {
  Multigraph g(4);
  g.add_edge("a", 0, 1);
  g.add_edge("b", 1, 2);
  g.add_edge("c", 2, 0);
  g.add_edge("d", 2, 3);

  // Splitting the two triangle edges away from the degree-3 vertex leaves
  // the triangle intact on the new vertex and detaches the pendant edge;
  // the cycle matroid is unchanged ({b,c} is a 2-cocircuit).
  Multigraph s = split_graph(g, SplitPair{"b", "c"});
  REQUIRE(s.vertex_count() == 5);
  REQUIRE(s.edge_count() == 4);
  REQUIRE(s.degree(4) == 2);
  REQUIRE(s.degree(2) == 1);
  REQUIRE_FALSE(s.is_connected());
  REQUIRE(matsplit::same_matroid(matsplit::from_graph(s), matsplit::from_graph(g)));
}

TEST_CASE("split_graph error cases") {
  Multigraph g(4);
  g.add_edge("a", 0, 1);
  g.add_edge("b", 1, 2);
  g.add_edge("c", 2, 0);
  g.add_edge("d", 2, 3);
  g.add_edge("l", 1, 1);

  REQUIRE_THROWS_AS(split_graph(g, SplitPair{"a", "a"}), std::invalid_argument);
  REQUIRE_THROWS_AS(split_graph(g, SplitPair{"a", "zz"}), std::invalid_argument);
  // "a" and "d" share no endpoint.
  REQUIRE_THROWS_AS(split_graph(g, SplitPair{"a", "d"}), std::invalid_argument);
  // Loops cannot be split away.
  REQUIRE_THROWS_AS(split_graph(g, SplitPair{"l", "a"}), std::invalid_argument);
  // "a" and "c" share vertex 0, which has degree 2.
  REQUIRE_THROWS_AS(split_graph(g, SplitPair{"a", "c"}), std::invalid_argument);
}

TEST_CASE("split_graph on a parallel pair picks a degree-3 endpoint") {
  Multigraph g(3);
  g.add_edge("p", 0, 1);
  g.add_edge("q", 0, 1);
  g.add_edge("r", 1, 2);

  // Both endpoints are shared; only vertex 1 has degree 3.
  Multigraph s = split_graph(g, SplitPair{"p", "q"});
  REQUIRE(s.vertex_count() == 4);
  REQUIRE(s.degree(3) == 2);
  // Both new edges run from the new vertex to vertex 0.
  REQUIRE(s.edge(*s.edge_index("p")).u == 3);
  REQUIRE(s.edge(*s.edge_index("p")).v == 0);
  REQUIRE(s.edge(*s.edge_index("q")).u == 3);
  REQUIRE(s.edge(*s.edge_index("q")).v == 0);
}

TEST_CASE("graph splitting agrees with matroid splitting") {
  std::mt19937_64 rng(707);
  int done = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Multigraph g = fixtures::random_connected_multigraph(rng, 5, 6);
    BinaryMatroid m = matsplit::from_graph(g);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
        SplitPair p{g.edge(i).label, g.edge(j).label};
        matsplit::Multigraph const* result = nullptr;
        matsplit::Multigraph holder(1);
        try {
          holder = split_graph(g, p);
          result = &holder;
        } catch (const std::invalid_argument&) {
          continue;  // pair not splittable in the graph sense
        }
        ++done;
        REQUIRE(matsplit::same_matroid(matsplit::from_graph(*result), split(m, p)));
      }
  }
  REQUIRE(done >= 100);
}
