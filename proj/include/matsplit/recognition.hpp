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

#ifndef MATSPLIT_RECOGNITION_HPP_
#define MATSPLIT_RECOGNITION_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matsplit/catalog.hpp"
#include "matsplit/matroid.hpp"
#include "matsplit/multigraph.hpp"

namespace matsplit {

/// Default ground-set cap for the exhaustive graph-realization search.
inline constexpr std::size_t kDefaultRealizationBound = 9;

/// Proof that a minor isomorphic to some target exists: the removal sets and
/// the label bijection from the resulting minor onto the target.
struct MinorWitness {
  MinorSpec spec;
  std::vector<std::pair<std::string, std::string>> bijection;
};

namespace detail {

/// Calls fn(T1, T2) for every way to remove `removals` elements from m —
/// subsets in lexicographic index order, and for each subset every
/// delete/contract partition in increasing submask order — until fn returns
/// true. Skips (T1, T2) pairs whose minor cannot have the required shape and
/// collapses duplicate minors via a seen-set of labeled circuit families.
template <typename Fn>
bool for_each_candidate_minor(const BinaryMatroid& m, std::size_t removals,
                              std::size_t min_rank, std::size_t max_rank,
                              std::size_t bound, Fn&& fn) {
  const std::size_t n = m.size();
  const ElementMask all = m.full_mask();
  std::set<std::vector<std::uint64_t>> seen;

  std::vector<std::size_t> idx(removals);
  for (std::size_t i = 0; i < removals; ++i) idx[i] = i;
  for (;;) {
    ElementMask s = 0;
    for (std::size_t i : idx) s |= ElementMask{1} << i;

    // Every delete/contract partition of s: t2 runs over submasks of s in
    // increasing order (including empty and full).
    ElementMask t2 = 0;
    for (;;) {
      const ElementMask t1 = s & ~t2;
      const ElementMask rest = all & ~s;
      const std::size_t minor_rank =
          m.subset_rank(rest | t2) - m.subset_rank(t2);
      if (minor_rank >= min_rank && minor_rank <= max_rank) {
        BinaryMatroid cand = minor(m, MinorSpec{m.labels_of(t1), m.labels_of(t2)});
        std::vector<std::uint64_t> key = circuit_masks(cand, CircuitKind::kCircuit, bound);
        key.push_back(s);
        key.push_back(cand.rank());
        if (seen.insert(std::move(key)).second) {
          if (fn(m.labels_of(t1), m.labels_of(t2), cand)) return true;
        }
      }
      if (t2 == s) break;
      t2 = (t2 - s) & s;  // next submask of s
    }

    // Next combination in lexicographic order.
    std::size_t i = removals;
    while (i > 0 && idx[i - 1] == n - removals + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < removals; ++j) idx[j] = idx[j - 1] + 1;
  }
  return false;
}

}  // namespace detail

/// Finds deletion/contraction sets turning m into a matroid isomorphic to
/// target, if any. Deterministic: smallest removal sets first, deletions
/// preferred over contractions within a set.
inline std::optional<MinorWitness> has_minor(
    const BinaryMatroid& m, const BinaryMatroid& target,
    std::size_t bound = kDefaultEnumerationBound) {
  detail::check_enumeration_bound(m, bound, "has_minor");
  if (target.size() > m.size())
    throw std::invalid_argument("has_minor: target has more elements than the host");
  const std::size_t removals = m.size() - target.size();
  if (target.rank() > m.rank()) return std::nullopt;

  std::optional<MinorWitness> found;
  detail::for_each_candidate_minor(
      m, removals, target.rank(), target.rank(), bound,
      [&](std::vector<std::string> t1, std::vector<std::string> t2,
          const BinaryMatroid& cand) {
        auto bij = isomorphic(cand, target, bound);
        if (!bij) return false;
        found = MinorWitness{MinorSpec{std::move(t1), std::move(t2)}, *bij};
        return true;
      });
  return found;
}

/// Which forbidden minor excluded a class, and where it sits in the host.
struct ExclusionWitness {
  std::string forbidden;  // catalog name of the excluded minor
  MinorWitness witness;
};

/// Result of forbidden-minor classification. A matroid is regular iff it has
/// no F7 or F7* minor; graphic additionally forbids M*(K33) and M*(K5);
/// cographic additionally forbids M(K33) and M(K5).
struct ClassificationFlags {
  bool regular = false;
  bool graphic = false;
  bool cographic = false;
  std::optional<ExclusionWitness> regular_witness;
  std::optional<ExclusionWitness> graphic_witness;
  std::optional<ExclusionWitness> cographic_witness;
};

inline ClassificationFlags classify(const BinaryMatroid& m,
                                    std::size_t bound = kDefaultEnumerationBound) {
  auto check = [&](const char* name) -> std::optional<ExclusionWitness> {
    BinaryMatroid target = catalog_get(name).as_matroid();
    if (target.size() > m.size()) return std::nullopt;
    auto w = has_minor(m, target, bound);
    if (!w) return std::nullopt;
    return ExclusionWitness{name, std::move(*w)};
  };

  ClassificationFlags out;
  out.regular_witness = check("F7");
  if (!out.regular_witness) out.regular_witness = check("F7dual");
  out.regular = !out.regular_witness.has_value();

  out.graphic_witness = out.regular_witness;
  if (!out.graphic_witness) out.graphic_witness = check("K33dual");
  if (!out.graphic_witness) out.graphic_witness = check("K5dual");
  out.graphic = !out.graphic_witness.has_value();

  out.cographic_witness = out.regular_witness;
  if (!out.cographic_witness) out.cographic_witness = check("K33");
  if (!out.cographic_witness) out.cographic_witness = check("K5");
  out.cographic = !out.cographic_witness.has_value();
  return out;
}

/// Exhaustive, classification-independent graphicness oracle: searches for a
/// multigraph on rank+1 vertices whose cycle matroid is exactly m (same
/// labels). Returns the realizing graph if one exists.
///
/// The search places the elements of a fixed basis as the edges of a
/// spanning tree, growing it in a canonical order (new vertices take the
/// smallest unused index). Each non-basis element's edge is then forced: its
/// incidence column must be the GF(2) sum of the tree columns in its
/// fundamental circuit, which is realizable iff that sum has weight 0 (loop)
/// or 2 (ordinary edge). A connected realization on rank+1 vertices always
/// exists when any realization does, because components of a disconnected
/// realization can be glued at a vertex without changing the cycle matroid.
inline std::optional<Multigraph> graphic_by_realization(
    const BinaryMatroid& m, std::size_t bound = kDefaultRealizationBound) {
  if (m.size() > bound)
    throw std::invalid_argument(
        "graphic_by_realization: ground set of size " + std::to_string(m.size()) +
        " exceeds bound " + std::to_string(bound));

  const std::size_t n = m.size();
  const std::size_t r = m.rank();

  // Greedy basis in element order.
  std::vector<std::size_t> basis;
  ElementMask bmask = 0;
  for (std::size_t i = 0; i < n && basis.size() < r; ++i) {
    const ElementMask next = bmask | (ElementMask{1} << i);
    if (m.subset_rank(next) > basis.size()) {
      basis.push_back(i);
      bmask = next;
    }
  }

  // Express every non-basis column in that basis (fundamental circuit).
  // elim holds (vector, coefficient-mask) pairs keyed by leading bit.
  std::array<std::pair<std::uint64_t, std::uint64_t>, 64> elim{};
  for (std::size_t bi = 0; bi < basis.size(); ++bi) {
    std::uint64_t v = m.column(basis[bi]);
    std::uint64_t coef = std::uint64_t{1} << bi;
    while (v != 0) {
      const std::size_t h = static_cast<std::size_t>(63 - std::countl_zero(v));
      if (elim[h].first == 0) {
        elim[h] = {v, coef};
        break;
      }
      v ^= elim[h].first;
      coef ^= elim[h].second;
    }
  }
  struct Forced {
    std::size_t element;        // index in m
    std::uint64_t basis_mask;   // fundamental circuit over basis positions
    std::size_t last_basis;     // highest basis position involved (or 0 if none)
  };
  std::vector<Forced> forced;                  // non-basis, non-loop elements
  std::vector<std::size_t> loops;              // zero columns
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(basis.begin(), basis.end(), i) != basis.end()) continue;
    std::uint64_t v = m.column(i);
    if (v == 0) {
      loops.push_back(i);
      continue;
    }
    std::uint64_t coef = 0;
    while (v != 0) {
      const std::size_t h = static_cast<std::size_t>(63 - std::countl_zero(v));
      v ^= elim[h].first;
      coef ^= elim[h].second;
    }
    std::size_t last = 0;
    for (std::size_t bi = 0; bi < basis.size(); ++bi)
      if ((coef >> bi) & 1u) last = bi;
    forced.push_back(Forced{i, coef, last});
  }

  // Grow the tree. endpoint[i] = {u, v} of basis edge i; vertex_mask[i] is
  // its incidence vector over the r+1 vertices.
  std::vector<std::pair<std::size_t, std::size_t>> endpoint(r);
  std::vector<std::uint32_t> vertex_mask(r, 0);
  std::vector<std::size_t> dsu(r + 1);

  auto find = [&](std::size_t x) {
    while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
    return x;
  };

  auto forced_ok = [&](std::size_t upto) {
    // Check each fundamental circuit whose basis edges are all placed.
    for (const Forced& f : forced) {
      if (f.last_basis != upto) continue;
      std::uint32_t acc = 0;
      for (std::size_t bi = 0; bi < r; ++bi)
        if ((f.basis_mask >> bi) & 1u) acc ^= vertex_mask[bi];
      const int w = std::popcount(acc);
      if (w != 0 && w != 2) return false;
    }
    return true;
  };

  std::optional<Multigraph> result;

  auto build_graph = [&]() {
    Multigraph g(r + 1);
    std::vector<std::pair<std::size_t, std::size_t>> ep(n, {0, 0});
    for (std::size_t bi = 0; bi < r; ++bi) ep[basis[bi]] = endpoint[bi];
    for (const Forced& f : forced) {
      std::uint32_t acc = 0;
      for (std::size_t bi = 0; bi < r; ++bi)
        if ((f.basis_mask >> bi) & 1u) acc ^= vertex_mask[bi];
      if (acc == 0) {
        ep[f.element] = {0, 0};
      } else {
        const std::size_t u = static_cast<std::size_t>(std::countr_zero(acc));
        const std::size_t v =
            static_cast<std::size_t>(63 - std::countl_zero(std::uint64_t{acc}));
        ep[f.element] = {u, v};
      }
    }
    for (std::size_t l : loops) ep[l] = {0, 0};
    for (std::size_t i = 0; i < n; ++i)
      g.add_edge(m.elements()[i], ep[i].first, ep[i].second);
    return g;
  };

  auto place = [&](auto&& self, std::size_t i, std::size_t used) -> bool {
    if (i == r) {
      if (used != r + 1 && r != 0) return false;
      Multigraph g = build_graph();
      if (!same_matroid(from_graph(g), m)) return false;  // defensive; holds by construction
      result = std::move(g);
      return true;
    }
    auto attempt = [&](std::size_t u, std::size_t v, std::size_t new_used) {
      if (find(u) == find(v)) return false;  // keep it a forest
      const std::vector<std::size_t> saved_dsu = dsu;
      dsu[find(u)] = find(v);
      endpoint[i] = {u, v};
      vertex_mask[i] = (std::uint32_t{1} << u) | (std::uint32_t{1} << v);
      bool done = forced_ok(i) && self(self, i + 1, new_used);
      if (!done) {
        dsu = saved_dsu;
        vertex_mask[i] = 0;
      }
      return done;
    };
    // (a) join two used vertices; (b) attach a new vertex; (c) start a new
    // component on two fresh vertices. New vertices always take the smallest
    // unused indices, making the enumeration canonical.
    for (std::size_t u = 0; u < used; ++u)
      for (std::size_t v = u + 1; v < used; ++v)
        if (attempt(u, v, used)) return true;
    if (used < r + 1)
      for (std::size_t u = 0; u < used; ++u)
        if (attempt(u, used, used + 1)) return true;
    if (used + 2 <= r + 1)
      if (attempt(used, used + 1, used + 2)) return true;
    return false;
  };

  for (std::size_t v = 0; v <= r; ++v) dsu[v] = v;
  if (r == 0) {
    // Only loops: realize them all on a single vertex.
    Multigraph g(1);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(m.elements()[i], 0, 0);
    return g;
  }
  place(place, 0, 0);
  return result;
}

/// Tests whether m has a minor N that places some pair {x,y} in one of the
/// three "trivially splittable" positions relative to f:
///   (1) N \ {x,y} is isomorphic to f;
///   (2) {x,y} is a 2-cocircuit of N and N/x is isomorphic to f;
///   (3) {x,y} is a 2-cocircuit of N and N/{x,y} is isomorphic to f.
/// Equality is read as isomorphism throughout.
inline bool has_tilde_minor(const BinaryMatroid& m, const BinaryMatroid& f,
                            std::size_t bound = kDefaultEnumerationBound) {
  detail::check_enumeration_bound(m, bound, "has_tilde_minor");

  // Condition (2) needs |E(N)| = |E(f)|+1; (1) and (3) need |E(f)|+2. A
  // 2-cocircuit pair has rank 1 or 2 in N, so rank(N) stays within 2 of
  // rank(f) in every condition.
  for (std::size_t extra : {std::size_t{1}, std::size_t{2}}) {
    const std::size_t target_size = f.size() + extra;
    if (target_size > m.size()) continue;
    const std::size_t removals = m.size() - target_size;
    const std::size_t min_rank = f.rank();
    const std::size_t max_rank = f.rank() + 2;

    bool found = detail::for_each_candidate_minor(
        m, removals, min_rank, max_rank, bound,
        [&](const std::vector<std::string>&, const std::vector<std::string>&,
            const BinaryMatroid& n) {
          const auto& labels = n.elements();
          for (std::size_t i = 0; i < labels.size(); ++i)
            for (std::size_t j = i + 1; j < labels.size(); ++j) {
              const std::string& x = labels[i];
              const std::string& y = labels[j];
              if (extra == 2) {
                if (isomorphic(minor(n, MinorSpec{{x, y}, {}}), f, bound))
                  return true;  // (1)
                if (is_2_cocircuit(n, x, y) &&
                    isomorphic(minor(n, MinorSpec{{}, {x, y}}), f, bound))
                  return true;  // (3)
              } else {
                // (2): for a 2-cocircuit pair the two single contractions
                // are isomorphic (the dual columns of x and y are equal, so
                // swapping them is an automorphism); checking x suffices.
                if (is_2_cocircuit(n, x, y) &&
                    isomorphic(minor(n, MinorSpec{{}, {x}}), f, bound))
                  return true;
              }
            }
          return false;
        });
    if (found) return true;
  }
  return false;
}

}  // namespace matsplit

#endif  // MATSPLIT_RECOGNITION_HPP_
