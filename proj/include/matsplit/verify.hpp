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

#ifndef MATSPLIT_VERIFY_HPP_
#define MATSPLIT_VERIFY_HPP_

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "matsplit/corpus.hpp"
#include "matsplit/theorems.hpp"

namespace matsplit {

/// Fixed default seed for the randomized suites, overridable via --seed.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Outcome of one acceptance criterion.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // counts on success, first divergence on failure
  double seconds = 0.0;
};

namespace verify_detail {

/// Wall-clock budgets per criterion, seconds. Exceeding one fails it.
inline constexpr std::array<double, 9> kBudgets = {1,   1,   60,  600, 300,
                                                   900, 600, 600, 120};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (ok) detail << why;
    ok = false;
  }
};

// ---- criterion 1: the contraction identity behind the catalog's B matrix.
inline Outcome criterion_contraction(std::uint64_t) {
  Outcome out;
  BinaryMatroid r10 = catalog_get("R10").as_matroid();
  BinaryMatroid contracted = minor(r10, MinorSpec{{}, {"4", "5"}});
  BinaryMatroid b = catalog_get("MG1matrixB").as_matroid();
  if (!same_matroid(contracted, b)) out.fail("contracted matroid differs from B");
  StandardForm sf = standard_form(contracted.representation());
  if (!row_space_equal(sf.unpermuted(), b.representation()))
    out.fail("standard-form row space differs from B's");
  if (circuit_masks(contracted) != circuit_masks(b))
    out.fail("circuit families differ");
  if (!isomorphic(contracted, catalog_get("G1").as_matroid()))
    out.fail("contraction is not isomorphic to M(G1)");
  if (out.ok) out.detail << "contraction equals B; circuits match; M(G1) confirmed";
  return out;
}

// ---- criterion 2: dual identities among the catalog graphs.
inline Outcome criterion_duals(std::uint64_t) {
  Outcome out;
  if (!isomorphic(dual(catalog_get("G6").as_matroid()),
                  catalog_get("G1").as_matroid()))
    out.fail("dual(M(G6)) is not isomorphic to M(G1)");
  if (!isomorphic(dual(catalog_get("G7").as_matroid()),
                  catalog_get("G2").as_matroid()))
    out.fail("dual(M(G7)) is not isomorphic to M(G2)");
  if (out.ok) out.detail << "dual(M(G6))=M(G1) and dual(M(G7))=M(G2)";
  return out;
}

// ---- criterion 3: fixed minor relations among catalog entries.
inline Outcome criterion_catalog_minors(std::uint64_t) {
  Outcome out;
  if (!isomorphic(catalog_get("G3").as_matroid(), catalog_get("K5").as_matroid()))
    out.fail("M(G3) is not isomorphic to M(K5)");
  if (!graphs_isomorphic(*catalog_get("G3").graph, *catalog_get("K5").graph))
    out.fail("G3 is not isomorphic to K5 as a graph");
  if (!has_minor(catalog_get("G4").as_matroid(), catalog_get("G1").as_matroid()))
    out.fail("M(G1) is not a minor of M(G4)");
  BinaryMatroid ma1 = catalog_get("MA1").as_matroid();
  if (!has_minor(ma1, catalog_get("R10").as_matroid()))
    out.fail("MA1 has no R10 minor");
  if (!has_minor(ma1, catalog_get("G1").as_matroid()))
    out.fail("MA1 has no M(G1) minor");
  if (out.ok) out.detail << "G3=K5; G1 inside G4; R10 and M(G1) inside MA1";
  return out;
}

// ---- criterion 4: classification flags and decider agreement.
inline Outcome criterion_classification(std::uint64_t) {
  Outcome out;
  auto r10 = classify(catalog_get("R10").as_matroid());
  if (!(r10.regular && !r10.graphic && !r10.cographic))
    out.fail("classify(R10) flags are wrong");
  auto f7 = classify(catalog_get("F7").as_matroid());
  if (f7.regular || f7.graphic || f7.cographic)
    out.fail("classify(F7) flags are wrong");

  std::size_t checked = 0;
  auto agree = [&](const BinaryMatroid& m) {
    if (m.size() > 9 || !out.ok) return;
    ++checked;
    auto g = graphic_by_realization(m);
    if (classify(m).graphic != g.has_value()) {
      std::ostringstream why;
      why << "deciders disagree on a matroid with " << m.size() << " elements";
      out.fail(why.str());
      return;
    }
    if (g && !same_matroid(from_graph(*g), m))
      out.fail("realization does not reproduce its matroid");
  };
  for (const Multigraph& g : connected_multigraphs(5, 8)) {
    BinaryMatroid m = from_graph(g);
    agree(m);
    agree(dual(m));
  }
  for (const BinaryMatroid& m : r10_derived_minors(3)) agree(m);
  if (out.ok)
    out.detail << "flags exact; deciders agree on " << checked << " matroids";
  return out;
}

/// Random host for the splitting suite: a GF(2) matrix with 1..6 rows and
/// 1..8 columns, entries fair coin flips.
inline BinaryMatroid random_host(std::mt19937_64& rng) {
  const std::size_t rows = 1 + rng() % 6;
  const std::size_t cols = 1 + rng() % 8;
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1u) m.set(r, c, true);
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < cols; ++c)
    labels.push_back("e" + std::to_string(c + 1));
  return from_matrix(m, labels);
}

// ---- criterion 5: the splitting observation suite.
inline Outcome criterion_splitting_suite(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);
  std::size_t matroids = 0, pairs = 0;
  while (matroids < 500 && out.ok) {
    BinaryMatroid m = random_host(rng);
    if (m.size() < 2) continue;
    ++matroids;
    const ElementMask coloops = coloops_mask(m);
    const auto& els = m.elements();

    for (std::size_t i = 0; i < els.size() && out.ok; ++i)
      for (std::size_t j = i + 1; j < els.size() && out.ok; ++j) {
        ++pairs;
        SplitPair p{els[i], els[j]};
        BinaryMatroid s = split(m, p);
        const bool i_coloop = (coloops >> i) & 1u;
        const bool j_coloop = (coloops >> j) & 1u;
        if (i_coloop || j_coloop) {
          ElementMask after = coloops_mask(s);
          if (!((after >> i) & 1u) || !((after >> j) & 1u))
            out.fail("coloop did not propagate through the split");
        } else if (!is_2_cocircuit(s, els[i], els[j])) {
          out.fail("pair is not a 2-cocircuit of the split");
        }
        if (is_2_cocircuit(m, els[i], els[j]) && !same_matroid(s, m))
          out.fail("split on a 2-cocircuit pair changed the matroid");
      }
    if (!out.ok || m.rank() == 0) continue;

    // Well-definedness: random row operations plus a hand-appended
    // indicator row must give the same matroid as split().
    std::size_t i = rng() % m.size();
    std::size_t j = (i + 1 + rng() % (m.size() - 1)) % m.size();
    SplitPair p{els[std::min(i, j)], els[std::max(i, j)]};
    BinaryMatroid s = split(m, p);
    BitMatrix alt = m.representation();
    for (int k = 0; k < 10; ++k) {
      std::size_t a = rng() % alt.row_count();
      std::size_t b = rng() % alt.row_count();
      if (a != b) alt.xor_row_into(a, b);
    }
    alt.append_row((std::uint64_t{1} << std::min(i, j)) |
                   (std::uint64_t{1} << std::max(i, j)));
    if (!same_matroid(s, from_matrix(alt, els)))
      out.fail("split disagrees across representations");

    // Minor commutation on removal sets disjoint from the pair.
    ElementMask protect =
        (ElementMask{1} << i) | (ElementMask{1} << j);
    ElementMask rm = rng() & m.full_mask() & ~protect;
    ElementMask t1 = rng() & rm;
    MinorSpec spec{m.labels_of(t1), m.labels_of(rm & ~t1)};
    if (!same_matroid(minor(s, spec), split(minor(m, spec), p)))
      out.fail("split does not commute with a disjoint minor");
  }
  if (out.ok)
    out.detail << matroids << " matroids, " << pairs << " pairs checked";
  return out;
}

// ---- criterion 6: decision procedures versus the all-splits oracle.
inline Outcome criterion_equivalence(std::uint64_t) {
  Outcome out;
  std::size_t comparisons = 0;

  auto check = [&](const BinaryMatroid& m, const char* case_id) {
    if (!out.ok) return;
    const TheoremCase& tc = theorem_case(case_id);
    if (!class_holds(classify(m), tc.input_class)) return;
    for (const std::string& f : tc.tilde_exclusions)
      if (has_tilde_minor(m, catalog_get(f).as_matroid())) return;
    DecisionReport dec = decide_by_forbidden_minors(m, tc);
    DecisionReport orc = oracle_all_splits(m, tc.target_class);
    ++comparisons;
    if (dec.verdict != orc.verdict) {
      std::ostringstream why;
      why << "case " << case_id << " disagrees on a matroid with " << m.size()
          << " elements (decide=" << dec.verdict << ", oracle=" << orc.verdict
          << ")";
      out.fail(why.str());
    }
  };

  for (const Multigraph& g : connected_multigraphs(5, 8)) {
    BinaryMatroid m = from_graph(g);
    BinaryMatroid md = dual(m);
    check(m, "1.3");
    check(m, "2.8");
    check(md, "1.4");
    check(md, "2.9");
    check(m, "3.2");
    check(m, "3.4");
    check(md, "3.2");
    check(md, "3.4");
    if (!out.ok) break;
  }
  for (const BinaryMatroid& m : r10_derived_minors(3)) {
    check(m, "3.2");
    check(m, "3.4");
  }
  if (out.ok) out.detail << comparisons << " case evaluations, zero disagreements";
  return out;
}

// ---- criterion 7: minimality and redundancy of the forbidden minors.
inline Outcome criterion_minimality(std::uint64_t) {
  Outcome out;
  auto expect_minimal = [&](const char* name, const char* case_id) {
    if (!out.ok) return;
    MinimalityReport rep = verify_minimality(name, theorem_case(case_id));
    if (!rep.minimal())
      out.fail(std::string(name) + " is not minimal for case " + case_id);
  };
  expect_minimal("G1", "1.3");
  expect_minimal("G2", "1.3");
  expect_minimal("G3", "1.3");
  expect_minimal("G1", "3.2");
  expect_minimal("G2", "3.2");
  expect_minimal("K5", "3.2");

  if (out.ok) {
    MinimalityReport g4 = verify_minimality("G4", theorem_case("1.3"));
    if (!g4.splits_fail_target || g4.proper_minors_pass)
      out.fail("G4 should fail minimality through a proper minor");
    MinimalityReport ma1 = verify_minimality("MA1", theorem_case("3.4"));
    if (ma1.proper_minors_pass)
      out.fail("MA1 should fail minimality through a proper minor");
  }
  if (out.ok) out.detail << "six minimal entries confirmed; G4 and MA1 redundant";
  return out;
}

// ---- criterion 8: the splitting lemma on planted tilde-minors.
inline Outcome criterion_splitting_lemma(std::uint64_t seed) {
  Outcome out;
  std::mt19937_64 rng(seed);

  // Coextends the matroid by one element forming a 2-cocircuit with e.
  auto series_coextend = [](const BinaryMatroid& m, std::size_t e,
                            const std::string& label) {
    const BitMatrix& rep = m.representation();
    BitMatrix ext(rep.row_count() + 1, rep.col_count() + 1);
    for (std::size_t r = 0; r < rep.row_count(); ++r)
      for (std::size_t c = 0; c < rep.col_count(); ++c)
        if (rep.get(r, c)) ext.set(r, c, true);
    ext.set(rep.row_count(), e, true);
    ext.set(rep.row_count(), rep.col_count(), true);
    std::vector<std::string> labels = m.elements();
    labels.push_back(label);
    return from_matrix(ext, labels);
  };
  auto add_coloop = [](const BinaryMatroid& m, const std::string& label) {
    const BitMatrix& rep = m.representation();
    BitMatrix ext(rep.row_count() + 1, rep.col_count() + 1);
    for (std::size_t r = 0; r < rep.row_count(); ++r)
      for (std::size_t c = 0; c < rep.col_count(); ++c)
        if (rep.get(r, c)) ext.set(r, c, true);
    ext.set(rep.row_count(), rep.col_count(), true);
    std::vector<std::string> labels = m.elements();
    labels.push_back(label);
    return from_matrix(ext, labels);
  };

  std::size_t hosts = 0;
  for (int trial = 0; hosts < 50 && out.ok; ++trial) {
    const bool use_k5 = (trial % 2) == 0;
    BinaryMatroid f = catalog_get(use_k5 ? "K5" : "K33").as_matroid();
    const int mode = trial % 3;  // which tilde condition gets planted
    BinaryMatroid host = f;
    if (mode == 0) {
      host = add_coloop(add_coloop(host, "z1"), "z2");
    } else if (mode == 1) {
      host = series_coextend(host, rng() % host.size(), "z1");
    } else {
      host = series_coextend(host, rng() % host.size(), "z1");
      host = series_coextend(host, host.size() - 1, "z2");
    }
    if (host.size() < 12) {  // pad with a random (possibly dependent) column
      BitMatrix rep = host.representation();
      rep.append_zero_column();
      std::uint64_t col = rng() & ((std::uint64_t{1} << rep.row_count()) - 1);
      for (std::size_t r = 0; r < rep.row_count(); ++r)
        if ((col >> r) & 1u) rep.set(r, rep.col_count() - 1, true);
      std::vector<std::string> labels = host.elements();
      labels.push_back("w1");
      host = from_matrix(rep, labels);
    }
    if (!has_tilde_minor(host, f)) {
      out.fail("planted host lost its tilde-minor");
      break;
    }
    ++hosts;

    bool some_pair = false;
    const auto& els = host.elements();
    for (std::size_t i = 0; i < els.size() && !some_pair; ++i)
      for (std::size_t j = i + 1; j < els.size() && !some_pair; ++j)
        if (has_minor(split(host, SplitPair{els[i], els[j]}), f))
          some_pair = true;
    if (!some_pair) out.fail("no pair's split contains the planted target");
  }
  if (out.ok) out.detail << hosts << " hosts, each with a witnessing pair";
  return out;
}

// ---- criterion 9: graph splitting versus matroid splitting.
inline Outcome criterion_graph_compatibility(std::uint64_t) {
  Outcome out;
  std::size_t checks = 0;
  for (const Multigraph& g : connected_multigraphs(7, 6)) {
    if (!out.ok) break;
    BinaryMatroid m = from_graph(g);
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size() && out.ok; ++i)
      for (std::size_t j = i + 1; j < edges.size() && out.ok; ++j) {
        const Edge& x = edges[i];
        const Edge& y = edges[j];
        if (x.u == x.v || y.u == y.v) continue;  // loops cannot be split
        bool valid = false;
        for (std::size_t v : {x.u, x.v})
          if ((v == y.u || v == y.v) && g.degree(v) >= 3) valid = true;
        if (!valid) continue;
        ++checks;
        SplitPair p{x.label, y.label};
        if (!same_matroid(from_graph(split_graph(g, p)), split(m, p)))
          out.fail("graph split disagrees with matroid split");
      }
  }
  if (out.ok) out.detail << checks << " (graph, pair) instances, equal matroids";
  return out;
}

}  // namespace verify_detail

/// Runs one acceptance criterion (1..9). Each returns pass/fail, a one-line
/// detail, and its runtime; exceeding the criterion's time budget fails it.
inline CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed) {
  static const std::array<const char*, 9> kNames = {
      "r10-contraction",        "dual-identities",
      "catalog-minors",         "classification-agreement",
      "splitting-observations", "theorem-oracle-equivalence",
      "minimality",             "splitting-lemma",
      "graph-compatibility"};
  if (id < 1 || id > 9)
    throw std::invalid_argument("run_criterion: id must be in 1..9");

  const auto start = std::chrono::steady_clock::now();
  verify_detail::Outcome out;
  switch (id) {
    case 1: out = verify_detail::criterion_contraction(seed); break;
    case 2: out = verify_detail::criterion_duals(seed); break;
    case 3: out = verify_detail::criterion_catalog_minors(seed); break;
    case 4: out = verify_detail::criterion_classification(seed); break;
    case 5: out = verify_detail::criterion_splitting_suite(seed); break;
    case 6: out = verify_detail::criterion_equivalence(seed); break;
    case 7: out = verify_detail::criterion_minimality(seed); break;
    case 8: out = verify_detail::criterion_splitting_lemma(seed); break;
    case 9: out = verify_detail::criterion_graph_compatibility(seed); break;
  }
  const auto stop = std::chrono::steady_clock::now();

  CriterionResult res;
  res.id = id;
  res.name = kNames[static_cast<std::size_t>(id - 1)];
  res.seconds = std::chrono::duration<double>(stop - start).count();
  res.passed = out.ok;
  res.detail = out.detail.str();
  const double budget = verify_detail::kBudgets[static_cast<std::size_t>(id - 1)];
  if (res.passed && res.seconds >= budget) {
    res.passed = false;
    res.detail = "time budget exceeded (" + std::to_string(budget) + " s)";
  }
  return res;
}

inline std::vector<CriterionResult> run_all_criteria(
    std::uint64_t seed = kDefaultSeed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace matsplit

#endif  // MATSPLIT_VERIFY_HPP_
