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

// Shared fixtures and random generators for the test suite.

#ifndef MATSPLIT_TESTS_FIXTURES_HPP_
#define MATSPLIT_TESTS_FIXTURES_HPP_

#include <random>
#include <string>
#include <vector>

#include "matsplit/matroid.hpp"
#include "matsplit/multigraph.hpp"

namespace fixtures {

/// 5x10 standard representation of R10 used as the suite's main fixture.
inline matsplit::BitMatrix matrix_a() {
  return matsplit::BitMatrix::of({
      "1000011001",
      "0100011100",
      "0010001110",
      "0001000111",
      "0000110011",
  });
}

/// 3x8 matrix arising from matrix_a by contracting elements 4 and 5.
inline matsplit::BitMatrix matrix_b() {
  return matsplit::BitMatrix::of({
      "10011001",
      "01011100",
      "00101110",
  });
}

/// Fano representation [I3 | all nonzero weight-2+ columns].
inline matsplit::BitMatrix fano_matrix() {
  return matsplit::BitMatrix::of({
      "1001101",
      "0101011",
      "0010111",
  });
}

inline std::vector<std::string> numeric_labels(std::size_t n, std::size_t from = 1) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(from + i));
  return out;
}

inline std::vector<std::string> element_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

inline matsplit::BinaryMatroid r10() {
  return matsplit::from_matrix(matrix_a(), numeric_labels(10));
}

inline matsplit::BinaryMatroid fano() {
  return matsplit::from_matrix(fano_matrix(), element_labels(7));
}

inline matsplit::BitMatrix random_bit_matrix(std::mt19937_64& rng,
                                             std::size_t rows, std::size_t cols) {
  matsplit::BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1u) m.set(r, c, true);
  return m;
}

/// Random binary matroid on up to max_elements elements (at least 1).
inline matsplit::BinaryMatroid random_matroid(std::mt19937_64& rng,
                                              std::size_t max_elements) {
  std::size_t n = 1 + rng() % max_elements;
  std::size_t rows = 1 + rng() % 6;
  return matsplit::from_matrix(random_bit_matrix(rng, rows, n), element_labels(n));
}

/// Random connected multigraph (loops and parallel edges allowed).
inline matsplit::Multigraph random_connected_multigraph(std::mt19937_64& rng,
                                                        std::size_t max_vertices,
                                                        std::size_t max_edges) {
  for (;;) {
    std::size_t v = 2 + rng() % (max_vertices - 1);
    std::size_t e = 1 + rng() % max_edges;
    matsplit::Multigraph g(v);
    for (std::size_t i = 0; i < e; ++i)
      g.add_edge("e" + std::to_string(i + 1), rng() % v, rng() % v);
    if (g.is_connected()) return g;
  }
}

/// Exhaustive independence-family comparison: the two matroids must have the
/// same label set, and every subset must get the same rank. This is the
/// brute-force meaning of "same matroid", used to validate faster paths.
inline bool independence_families_equal(const matsplit::BinaryMatroid& a,
                                        const matsplit::BinaryMatroid& b) {
  if (a.size() != b.size() || a.size() > 14) return false;
  std::vector<std::size_t> to_b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.index_of(a.elements()[i]);
    if (!j) return false;
    to_b[i] = *j;
  }
  const std::uint64_t all = std::uint64_t{1} << a.size();
  for (std::uint64_t s = 0; s < all; ++s) {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if ((s >> i) & 1u) t |= std::uint64_t{1} << to_b[i];
    if (a.subset_rank(s) != b.subset_rank(t)) return false;
  }
  return true;
}

}  // namespace fixtures

#endif  // MATSPLIT_TESTS_FIXTURES_HPP_
