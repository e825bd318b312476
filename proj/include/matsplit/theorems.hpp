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

#ifndef MATSPLIT_THEOREMS_HPP_
#define MATSPLIT_THEOREMS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matsplit/catalog.hpp"
#include "matsplit/matroid.hpp"
#include "matsplit/recognition.hpp"
#include "matsplit/splitting.hpp"

namespace matsplit {

/// Ground-set cap for the all-pairs splitting oracle: each split is
/// classified by exhaustive minor search, which stays cheap up to here.
inline constexpr std::size_t kDefaultOracleBound = 12;

enum class MatroidClass { kGraphic, kCographic, kRegular };

inline const char* class_name(MatroidClass c) {
  switch (c) {
    case MatroidClass::kGraphic: return "graphic";
    case MatroidClass::kCographic: return "cographic";
    case MatroidClass::kRegular: return "regular";
  }
  return "";
}

inline bool class_holds(const ClassificationFlags& flags, MatroidClass c) {
  switch (c) {
    case MatroidClass::kGraphic: return flags.graphic;
    case MatroidClass::kCographic: return flags.cographic;
    case MatroidClass::kRegular: return flags.regular;
  }
  return false;
}

/// One row of the characterization table: inputs of input_class whose every
/// pairwise split lands in target_class are exactly those avoiding the
/// forbidden minors — provided the input avoids the tilde classes of the
/// listed exclusions.
struct TheoremCase {
  std::string id;                              // stable token, e.g. "1.3"
  MatroidClass input_class;
  MatroidClass target_class;
  std::vector<std::string> forbidden_set;      // catalog names
  std::vector<std::string> tilde_exclusions;   // catalog names, may be empty
};

inline const std::vector<TheoremCase>& theorem_cases() {
  static const std::vector<TheoremCase> kCases = {
      {"1.3", MatroidClass::kGraphic, MatroidClass::kGraphic,
       {"G1", "G2", "G3"}, {}},
      {"1.4", MatroidClass::kCographic, MatroidClass::kCographic,
       {"G1", "G2"}, {}},
      {"2.8", MatroidClass::kGraphic, MatroidClass::kCographic,
       {"G1", "G2", "G5"}, {"K5", "K33"}},
      {"2.9", MatroidClass::kCographic, MatroidClass::kGraphic,
       {"G1", "G2"}, {"K5dual", "K33dual"}},
      {"3.2", MatroidClass::kRegular, MatroidClass::kGraphic,
       {"G1", "G2", "K5"}, {"K5dual", "K33dual"}},
      {"3.4", MatroidClass::kRegular, MatroidClass::kCographic,
       {"G1", "G2", "G3"}, {"K5", "K33"}},
  };
  return kCases;
}

inline const TheoremCase& theorem_case(const std::string& id) {
  for (const TheoremCase& tc : theorem_cases())
    if (tc.id == id) return tc;
  throw std::invalid_argument("theorem_case: unknown case id '" + id + "'");
}

enum class PreconditionStatus { kPassed, kViolated };

/// Outcome of a decision procedure. When verdict is false, exactly one of
/// forbidden_witness (forbidden-minors route) or failing_pair (oracle route)
/// explains it.
struct DecisionReport {
  bool verdict = false;
  std::string route;  // "forbidden-minors" or "oracle"
  PreconditionStatus precondition_status = PreconditionStatus::kPassed;
  std::optional<std::string> tilde_witness;       // exclusion that was violated
  std::optional<ExclusionWitness> forbidden_witness;
  std::optional<SplitPair> failing_pair;
};

/// Ground truth by brute force: splits m on every unordered pair of elements
/// and classifies the result. Verdict true iff every split has the requested
/// property; otherwise reports the first failing pair in element order.
inline DecisionReport oracle_all_splits(const BinaryMatroid& m,
                                        MatroidClass property,
                                        std::size_t bound = kDefaultOracleBound) {
  if (property == MatroidClass::kRegular)
    throw std::invalid_argument("oracle_all_splits: property must be graphic or cographic");
  if (m.size() > bound)
    throw std::invalid_argument(
        "oracle_all_splits: ground set of size " + std::to_string(m.size()) +
        " exceeds bound " + std::to_string(bound));

  DecisionReport out;
  out.route = "oracle";
  out.verdict = true;
  const auto& els = m.elements();
  for (std::size_t i = 0; i < els.size(); ++i)
    for (std::size_t j = i + 1; j < els.size(); ++j) {
      BinaryMatroid s = split(m, SplitPair{els[i], els[j]});
      if (!class_holds(classify(s), property)) {
        out.verdict = false;
        out.failing_pair = SplitPair{els[i], els[j]};
        return out;
      }
    }
  return out;
}

/// Decides the same question through the case's forbidden-minor list: true
/// iff m has no minor isomorphic to any listed matroid. Throws if m is not
/// in the case's input class; a violated tilde-exclusion is reported in
/// precondition_status (the verdict is still the forbidden-minor answer, but
/// the characterization is silent there).
inline DecisionReport decide_by_forbidden_minors(
    const BinaryMatroid& m, const TheoremCase& tc,
    std::size_t bound = kDefaultEnumerationBound) {
  ClassificationFlags flags = classify(m, bound);
  if (!class_holds(flags, tc.input_class))
    throw std::invalid_argument("decide_by_forbidden_minors: input is not " +
                                std::string(class_name(tc.input_class)));

  DecisionReport out;
  out.route = "forbidden-minors";
  for (const std::string& name : tc.tilde_exclusions) {
    if (has_tilde_minor(m, catalog_get(name).as_matroid(), bound)) {
      out.precondition_status = PreconditionStatus::kViolated;
      out.tilde_witness = name;
      break;
    }
  }

  out.verdict = true;
  for (const std::string& name : tc.forbidden_set) {
    BinaryMatroid target = catalog_get(name).as_matroid();
    if (target.size() > m.size()) continue;
    if (auto w = has_minor(m, target, bound)) {
      out.verdict = false;
      out.forbidden_witness = ExclusionWitness{name, std::move(*w)};
      break;
    }
  }
  return out;
}

/// Minor-minimality evidence for one catalog entry under one case.
struct MinimalityReport {
  bool splits_fail_target = false;  // some pair's split leaves the target class
  bool proper_minors_pass = true;   // every qualifying single-element minor passes
  std::optional<MinorSpec> failing_minor;
  bool minimal() const { return splits_fail_target && proper_minors_pass; }
};

/// Checks that the named catalog matroid (a) itself has a pair whose split
/// leaves the case's target class, and (b) is minor-minimal with that
/// property: every single-element deletion or contraction that still
/// satisfies the case's precondition passes the all-pairs oracle.
inline MinimalityReport verify_minimality(const std::string& name,
                                          const TheoremCase& tc,
                                          std::size_t bound = kDefaultOracleBound) {
  BinaryMatroid m = catalog_get(name).as_matroid();
  if (m.size() > bound)
    throw std::invalid_argument(
        "verify_minimality: ground set of size " + std::to_string(m.size()) +
        " exceeds bound " + std::to_string(bound));

  MinimalityReport rep;
  rep.splits_fail_target = !oracle_all_splits(m, tc.target_class, bound).verdict;

  auto satisfies_precondition = [&](const BinaryMatroid& n) {
    if (!class_holds(classify(n), tc.input_class)) return false;
    for (const std::string& f : tc.tilde_exclusions)
      if (has_tilde_minor(n, catalog_get(f).as_matroid())) return false;
    return true;
  };

  for (const std::string& e : m.elements()) {
    for (bool contract : {false, true}) {
      MinorSpec spec = contract ? MinorSpec{{}, {e}} : MinorSpec{{e}, {}};
      BinaryMatroid n = minor(m, spec);
      if (!satisfies_precondition(n)) continue;
      if (!oracle_all_splits(n, tc.target_class, bound).verdict) {
        rep.proper_minors_pass = false;
        rep.failing_minor = std::move(spec);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace matsplit

#endif  // MATSPLIT_THEOREMS_HPP_
