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

#ifndef MATSPLIT_MATROID_HPP_
#define MATSPLIT_MATROID_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matsplit/bit_matrix.hpp"
#include "matsplit/multigraph.hpp"

namespace matsplit {

/// Ground sets larger than this refuse the exponential operations
/// (circuit/cocircuit enumeration, isomorphism search).
inline constexpr std::size_t kDefaultEnumerationBound = 14;

/// A subset of a matroid's ground set, as a bit mask over element indices.
using ElementMask = std::uint64_t;

/// A binary matroid given by a GF(2) representation whose columns correspond,
/// in order, to the labeled elements. The stored representation is always the
/// reduced row-echelon form with zero rows dropped, which is a canonical
/// basis of the row space; everything observable about the matroid depends
/// only on that row space.
class BinaryMatroid {
 public:
  BinaryMatroid(const BitMatrix& representation, std::vector<std::string> labels)
      : elements_(std::move(labels)) {
    if (representation.col_count() != elements_.size())
      throw std::invalid_argument("BinaryMatroid: label/column count mismatch");
    if (elements_.size() > kMaxElements)
      throw std::invalid_argument("BinaryMatroid: too many elements");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].empty())
        throw std::invalid_argument("BinaryMatroid: empty element label");
      for (std::size_t j = i + 1; j < elements_.size(); ++j)
        if (elements_[i] == elements_[j])
          throw std::invalid_argument("BinaryMatroid: duplicate element label '" +
                                      elements_[i] + "'");
    }
    Rref red = rref(representation);
    rep_ = std::move(red.matrix);
    while (rep_.row_count() > red.pivot_cols.size())
      rep_.erase_row(rep_.row_count() - 1);
    cols_.resize(elements_.size());
    for (std::size_t c = 0; c < elements_.size(); ++c)
      cols_[c] = rep_.column_bits(c);
  }

  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t rank() const { return rep_.row_count(); }
  const BitMatrix& representation() const { return rep_; }

  /// Column of element i as a bit word over the rank() rows.
  std::uint64_t column(std::size_t i) const { return cols_.at(i); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if (elements_[i] == label) return i;
    return std::nullopt;
  }

  std::size_t require_index(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw std::invalid_argument("unknown element label '" + label + "'");
    return *i;
  }

  ElementMask full_mask() const {
    return elements_.empty() ? 0 : (~ElementMask{0} >> (64 - elements_.size()));
  }

  ElementMask mask_of(const std::vector<std::string>& labels) const {
    ElementMask m = 0;
    for (const auto& l : labels) m |= ElementMask{1} << require_index(l);
    return m;
  }

  /// Labels of the elements in `mask`, in ground-set order.
  std::vector<std::string> labels_of(ElementMask mask) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      if ((mask >> i) & 1u) out.push_back(elements_[i]);
    return out;
  }

  /// Rank of the column set selected by `subset`.
  std::size_t subset_rank(ElementMask subset) const {
    std::array<std::uint64_t, 64> basis{};
    std::size_t r = 0;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!((subset >> i) & 1u)) continue;
      std::uint64_t v = cols_[i];
      while (v != 0) {
        const int h = 63 - std::countl_zero(v);
        if (basis[static_cast<std::size_t>(h)] == 0) {
          basis[static_cast<std::size_t>(h)] = v;
          ++r;
          break;
        }
        v ^= basis[static_cast<std::size_t>(h)];
      }
    }
    return r;
  }

  bool independent(ElementMask subset) const {
    return subset_rank(subset) ==
           static_cast<std::size_t>(std::popcount(subset));
  }

 private:
  // 63 keeps every subset representable in a 64-bit mask with room to spare.
  static constexpr std::size_t kMaxElements = 63;

  std::vector<std::string> elements_;
  BitMatrix rep_;
  std::vector<std::uint64_t> cols_;
};

/// Which minimal dependent sets to enumerate.
enum class CircuitKind { kCircuit, kCocircuit };

/// Deletion/contraction request: remove T1, contract T2.
struct MinorSpec {
  std::vector<std::string> delete_set;
  std::vector<std::string> contract_set;
};

inline BinaryMatroid from_matrix(const BitMatrix& m,
                                 std::vector<std::string> labels) {
  return BinaryMatroid(m, std::move(labels));
}

/// Cycle matroid of a multigraph: the vertex-edge incidence matrix over
/// GF(2). Loops give zero columns and hence matroid loops.
inline BinaryMatroid from_graph(const Multigraph& g) {
  return BinaryMatroid(g.incidence_matrix(), g.edge_labels());
}

/// Dual matroid on the same labels: from a standard form [I_r | D] the dual
/// is [D^T | I_{n-r}], with columns put back in the original label order.
inline BinaryMatroid dual(const BinaryMatroid& m) {
  const StandardForm sf = standard_form(m.representation());
  const std::size_t r = sf.matrix.row_count();
  const std::size_t n = m.size();
  BitMatrix d(n - r, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t original = sf.column_order[j];
    if (j < r) {
      for (std::size_t k = 0; k < n - r; ++k)
        if (sf.matrix.get(j, r + k)) d.set(k, original, true);
    } else {
      d.set(j - r, original, true);
    }
  }
  return BinaryMatroid(d, m.elements());
}

/// M \ T1 / T2. Contracting a non-loop element pivots its column to a unit
/// vector and removes that row and column; contracting a loop deletes it.
inline BinaryMatroid minor(const BinaryMatroid& m, const MinorSpec& spec) {
  for (const auto& l : spec.delete_set)
    for (const auto& c : spec.contract_set)
      if (l == c)
        throw std::invalid_argument("minor: element '" + l +
                                    "' in both delete and contract sets");
  // Validate up front so failures cannot leave a half-built result.
  std::set<std::string> seen;
  for (const auto& l : spec.delete_set) {
    m.require_index(l);
    if (!seen.insert(l).second)
      throw std::invalid_argument("minor: element '" + l + "' listed twice");
  }
  for (const auto& l : spec.contract_set) {
    m.require_index(l);
    if (!seen.insert(l).second)
      throw std::invalid_argument("minor: element '" + l + "' listed twice");
  }

  BitMatrix work = m.representation();
  std::vector<std::string> labels = m.elements();
  auto find = [&labels](const std::string& l) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    throw std::invalid_argument("minor: unknown element label '" + l + "'");
  };

  for (const auto& l : spec.contract_set) {
    const std::size_t c = find(l);
    std::size_t pivot = work.row_count();
    for (std::size_t r = 0; r < work.row_count(); ++r)
      if (work.get(r, c)) {
        pivot = r;
        break;
      }
    if (pivot != work.row_count()) {
      for (std::size_t r = 0; r < work.row_count(); ++r)
        if (r != pivot && work.get(r, c)) work.xor_row_into(pivot, r);
      work.erase_row(pivot);
    }
    work.erase_column(c);
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(c));
  }
  for (const auto& l : spec.delete_set) {
    const std::size_t c = find(l);
    work.erase_column(c);
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(c));
  }
  return BinaryMatroid(work, std::move(labels));
}

namespace detail {

/// Minimal nonzero supports of the space spanned by `basis` (each vector a
/// bit mask). Enumerates all 2^|basis| combinations.
inline std::vector<ElementMask> minimal_supports(
    const std::vector<std::uint64_t>& basis) {
  if (basis.size() > 20)
    throw std::invalid_argument("minimal_supports: space too large");
  std::set<std::uint64_t> vectors;
  const std::uint64_t combos = std::uint64_t{1} << basis.size();
  for (std::uint64_t pick = 1; pick < combos; ++pick) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if ((pick >> i) & 1u) v ^= basis[i];
    if (v != 0) vectors.insert(v);
  }
  std::vector<std::uint64_t> sorted(vectors.begin(), vectors.end());
  std::sort(sorted.begin(), sorted.end(),
            [](std::uint64_t a, std::uint64_t b) {
              const int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  std::vector<ElementMask> minimal;
  for (std::uint64_t v : sorted) {
    bool contains_smaller = false;
    for (std::uint64_t m : minimal)
      if ((m & v) == m) {
        contains_smaller = true;
        break;
      }
    if (!contains_smaller) minimal.push_back(v);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

inline void check_enumeration_bound(const BinaryMatroid& m, std::size_t bound,
                                    const char* op) {
  if (m.size() > bound)
    throw std::invalid_argument(std::string(op) + ": ground set of size " +
                                std::to_string(m.size()) +
                                " exceeds enumeration bound " +
                                std::to_string(bound));
}

}  // namespace detail

/// All circuits (or cocircuits) as element masks, sorted ascending. Circuits
/// are the minimal supports of the null space of the representation;
/// cocircuits those of the row space.
inline std::vector<ElementMask> circuit_masks(
    const BinaryMatroid& m, CircuitKind kind = CircuitKind::kCircuit,
    std::size_t bound = kDefaultEnumerationBound) {
  detail::check_enumeration_bound(m, bound, "circuits");
  std::vector<std::uint64_t> basis;
  if (kind == CircuitKind::kCocircuit) {
    for (std::size_t r = 0; r < m.representation().row_count(); ++r)
      basis.push_back(m.representation().row_bits(r));
  } else {
    // Null-space basis: one vector per non-pivot column. The stored
    // representation is already reduced, so pivot rows read off directly.
    const BitMatrix& rep = m.representation();
    Rref red = rref(rep);  // recovers pivot columns of the canonical form
    std::vector<bool> is_pivot(m.size(), false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (is_pivot[c]) continue;
      std::uint64_t v = std::uint64_t{1} << c;
      for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
        if (rep.get(i, c)) v |= std::uint64_t{1} << red.pivot_cols[i];
      basis.push_back(v);
    }
  }
  return detail::minimal_supports(basis);
}

/// Circuits (or cocircuits) as sorted label sets.
inline std::vector<std::vector<std::string>> circuits(
    const BinaryMatroid& m, CircuitKind kind = CircuitKind::kCircuit,
    std::size_t bound = kDefaultEnumerationBound) {
  std::vector<std::vector<std::string>> out;
  for (ElementMask c : circuit_masks(m, kind, bound)) out.push_back(m.labels_of(c));
  return out;
}

/// Loops (zero columns) and coloops (elements whose deletion drops the rank).
struct LoopsColoops {
  std::vector<std::string> loops;
  std::vector<std::string> coloops;
};

inline ElementMask loops_mask(const BinaryMatroid& m) {
  ElementMask out = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.column(i) == 0) out |= ElementMask{1} << i;
  return out;
}

inline ElementMask coloops_mask(const BinaryMatroid& m) {
  ElementMask out = 0;
  const ElementMask all = m.full_mask();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.subset_rank(all & ~(ElementMask{1} << i)) + 1 == m.rank())
      out |= ElementMask{1} << i;
  return out;
}

inline LoopsColoops loops_coloops(const BinaryMatroid& m) {
  return LoopsColoops{m.labels_of(loops_mask(m)), m.labels_of(coloops_mask(m))};
}

/// True iff {x,y} is a cocircuit: deleting both drops the rank while deleting
/// either alone does not. Needs no enumeration, so no size bound applies.
inline bool is_2_cocircuit(const BinaryMatroid& m, const std::string& x,
                           const std::string& y) {
  if (x == y) throw std::invalid_argument("is_2_cocircuit: x = y");
  const std::size_t ix = m.require_index(x);
  const std::size_t iy = m.require_index(y);
  const ElementMask all = m.full_mask();
  const ElementMask bx = ElementMask{1} << ix;
  const ElementMask by = ElementMask{1} << iy;
  return m.subset_rank(all & ~bx) == m.rank() &&
         m.subset_rank(all & ~by) == m.rank() &&
         m.subset_rank(all & ~(bx | by)) + 1 == m.rank();
}

/// True iff the two matroids have the same ground set (as a set of labels)
/// and identical independent-set families. Decided by row-space equality of
/// the representations after aligning columns by label, which is equivalent
/// because a binary matroid determines its representation's row space.
inline bool same_matroid(const BinaryMatroid& a, const BinaryMatroid& b) {
  if (a.size() != b.size()) return false;
  BitMatrix aligned(b.representation().row_count(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto j = b.index_of(a.elements()[i]);
    if (!j) return false;
    for (std::size_t r = 0; r < b.representation().row_count(); ++r)
      if (b.representation().get(r, *j)) aligned.set(r, i, true);
  }
  return row_space_equal(a.representation(), aligned);
}

namespace detail {

/// Per-element invariant for isomorphism pruning: how many circuits of each
/// size pass through the element.
inline std::vector<std::map<std::size_t, std::size_t>> element_profiles(
    std::size_t n, const std::vector<ElementMask>& circuits) {
  std::vector<std::map<std::size_t, std::size_t>> prof(n);
  for (ElementMask c : circuits) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(c));
    for (std::size_t i = 0; i < n; ++i)
      if ((c >> i) & 1u) ++prof[i][size];
  }
  return prof;
}

/// pair_counts[i][j] = number of circuits containing both elements.
inline std::vector<std::vector<std::size_t>> pair_counts(
    std::size_t n, const std::vector<ElementMask>& circuits) {
  std::vector<std::vector<std::size_t>> cnt(n, std::vector<std::size_t>(n, 0));
  for (ElementMask c : circuits)
    for (std::size_t i = 0; i < n; ++i)
      if ((c >> i) & 1u)
        for (std::size_t j = i + 1; j < n; ++j)
          if ((c >> j) & 1u) {
            ++cnt[i][j];
            ++cnt[j][i];
          }
  return cnt;
}

}  // namespace detail

/// Searches for a label bijection mapping the circuits of `a` exactly onto
/// the circuits of `b`; returns it (as a -> b label pairs in a's ground-set
/// order), or nullopt. Backtracking over assignments in ground-set order,
/// pruned by per-element circuit profiles and pairwise co-circuit counts.
inline std::optional<std::vector<std::pair<std::string, std::string>>> isomorphic(
    const BinaryMatroid& a, const BinaryMatroid& b,
    std::size_t bound = kDefaultEnumerationBound) {
  detail::check_enumeration_bound(a, bound, "isomorphic");
  detail::check_enumeration_bound(b, bound, "isomorphic");
  const std::size_t n = a.size();
  if (n != b.size() || a.rank() != b.rank()) return std::nullopt;

  const std::vector<ElementMask> ca = circuit_masks(a, CircuitKind::kCircuit, bound);
  const std::vector<ElementMask> cb = circuit_masks(b, CircuitKind::kCircuit, bound);
  if (ca.size() != cb.size()) return std::nullopt;

  auto size_histogram = [](const std::vector<ElementMask>& cs) {
    std::map<int, std::size_t> h;
    for (ElementMask c : cs) ++h[std::popcount(c)];
    return h;
  };
  if (size_histogram(ca) != size_histogram(cb)) return std::nullopt;

  const auto prof_a = detail::element_profiles(n, ca);
  const auto prof_b = detail::element_profiles(n, cb);
  const auto pairs_a = detail::pair_counts(n, ca);
  const auto pairs_b = detail::pair_counts(n, cb);

  const std::set<ElementMask> cb_set(cb.begin(), cb.end());

  std::vector<std::size_t> image(n, n);  // image[i] = index in b, or n
  std::vector<bool> used(n, false);

  auto full_check = [&]() {
    // Invariants filtered the search; now verify the real thing: every
    // circuit of a maps to a circuit of b (same count, so onto).
    for (ElementMask c : ca) {
      ElementMask mapped = 0;
      for (std::size_t i = 0; i < n; ++i)
        if ((c >> i) & 1u) mapped |= ElementMask{1} << image[i];
      if (cb_set.find(mapped) == cb_set.end()) return false;
    }
    return true;
  };

  auto backtrack = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return full_check();
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || prof_a[i] != prof_b[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i; ++k)
        if (pairs_a[k][i] != pairs_b[image[k]][j]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[i] = j;
      used[j] = true;
      if (self(self, i + 1)) return true;
      used[j] = false;
      image[i] = n;
    }
    return false;
  };

  if (!backtrack(backtrack, 0)) return std::nullopt;
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.emplace_back(a.elements()[i], b.elements()[image[i]]);
  return out;
}

}  // namespace matsplit

#endif  // MATSPLIT_MATROID_HPP_
