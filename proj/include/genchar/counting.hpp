#pragma once

// The four counting quantities behind the coloring formula for generalized
// characters. Throughout, (lam, mu) is a covering pair with removed box
// (i, j), and gamma, sigma are permutations of {1..l}. Cycle colorings give
// the production count; functions, one-to-one maps and tableau translates
// give three successively more literal counts used as oracles.

#include <climits>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "genchar/partition.hpp"
#include "genchar/permutation.hpp"
#include "genchar/tableau.hpp"

namespace genchar {

namespace detail {

inline void require_covering(const Partition& lam, const Partition& mu) {
  if (!covers(lam, mu)) throw std::invalid_argument("not a covering pair");
}

inline void require_equal_degree(const Permutation& gamma, const Permutation& sigma) {
  if (gamma.degree() != sigma.degree()) throw std::invalid_argument("degree mismatch");
}

struct CyclePins {
  std::vector<std::vector<int>> gcycles, scycles;
  std::vector<int> gidx, sidx;  // cycle index of each point
  int g1 = 0, s1 = 0;           // cycles containing 1

  explicit CyclePins(const Permutation& gamma, const Permutation& sigma)
      : gcycles(cycles(gamma)), scycles(cycles(sigma)) {
    const int l = gamma.degree();
    gidx.assign(l + 1, 0);
    sidx.assign(l + 1, 0);
    for (std::size_t c = 0; c < gcycles.size(); ++c)
      for (int p : gcycles[c]) gidx[p] = static_cast<int>(c);
    for (std::size_t c = 0; c < scycles.size(); ++c)
      for (int p : scycles[c]) sidx[p] = static_cast<int>(c);
    g1 = gidx[1];
    s1 = sidx[1];
  }
};

}  // namespace detail

// N(gamma, sigma): colorings of the cycles, columns of lam for gamma-cycles
// and rows for sigma-cycles, with the cycles through 1 pinned to the removed
// box and every intersecting pair pinned to a box of lam. Column colors are
// enumerated; for each assignment the admissible rows of a sigma-cycle are
// 1..min over intersecting gamma-cycles of lam'_{color}, so the row choices
// multiply out without being enumerated.
inline std::uint64_t count_colorings(const Partition& lam, const Partition& mu,
                                     const Permutation& gamma, const Permutation& sigma) {
  detail::require_covering(lam, mu);
  detail::require_equal_degree(gamma, sigma);
  const Box rb = removed_box(lam, mu);
  const Partition conj = conjugate(lam);
  const detail::CyclePins pins(gamma, sigma);
  const int cols = lam.part(1);

  // distinct gamma-cycles met by each sigma-cycle
  std::vector<std::vector<int>> meets(pins.scycles.size());
  for (std::size_t si = 0; si < pins.scycles.size(); ++si) {
    std::vector<char> seen(pins.gcycles.size(), 0);
    for (int p : pins.scycles[si]) {
      const int gi = pins.gidx[p];
      if (!seen[gi]) {
        seen[gi] = 1;
        meets[si].push_back(gi);
      }
    }
  }

  std::vector<int> color(pins.gcycles.size(), 1);
  color[pins.g1] = rb.col;
  std::vector<int> free_cycles;
  for (std::size_t gi = 0; gi < pins.gcycles.size(); ++gi)
    if (static_cast<int>(gi) != pins.g1) free_cycles.push_back(static_cast<int>(gi));

  std::uint64_t total = 0;
  for (;;) {
    std::uint64_t prod = 1;
    for (std::size_t si = 0; si < pins.scycles.size() && prod != 0; ++si) {
      int maxrow = INT_MAX;
      for (int gi : meets[si]) maxrow = std::min(maxrow, conj.part(color[gi]));
      if (static_cast<int>(si) == pins.s1)
        prod *= (rb.row <= maxrow) ? 1 : 0;
      else
        prod *= static_cast<std::uint64_t>(maxrow);
    }
    total += prod;
    std::size_t k = 0;
    while (k < free_cycles.size() && color[free_cycles[k]] == cols)
      color[free_cycles[k++]] = 1;
    if (k == free_cycles.size()) break;
    ++color[free_cycles[k]];
  }
  return total;
}

namespace detail {

// Shared backtracking enumeration of box-valued functions f on {1..l} with
// f(1) the removed box, the column of f constant on gamma-cycles and the row
// constant on sigma-cycles. Points are visited so that a point sharing a
// cycle with an earlier point comes as soon as possible, which keeps the
// branching narrow. With `injective` set, boxes may not repeat.
inline std::uint64_t count_constrained_functions(const Partition& lam, const Partition& mu,
                                                 const Permutation& gamma,
                                                 const Permutation& sigma, bool injective) {
  require_covering(lam, mu);
  require_equal_degree(gamma, sigma);
  const int l = gamma.degree();
  if (injective && l > lam.n()) return 0;  // pigeonhole
  if (injective && lam.n() > 64) throw std::invalid_argument("diagram too large");
  const Box rb = removed_box(lam, mu);
  const Partition conj = conjugate(lam);
  const CyclePins pins(gamma, sigma);

  // visit order: 1 first, then greedily points sharing a cycle with a
  // visited point
  std::vector<int> order;
  std::vector<char> queued(l + 1, 0);
  std::vector<char> gseen(pins.gcycles.size(), 0), sseen(pins.scycles.size(), 0);
  order.push_back(1);
  queued[1] = 1;
  gseen[pins.gidx[1]] = sseen[pins.sidx[1]] = 1;
  while (static_cast<int>(order.size()) < l) {
    int pick = 0;
    for (int p = 1; p <= l && pick == 0; ++p)
      if (!queued[p] && (gseen[pins.gidx[p]] || sseen[pins.sidx[p]])) pick = p;
    if (pick == 0)
      for (int p = 1; p <= l && pick == 0; ++p)
        if (!queued[p]) pick = p;
    order.push_back(pick);
    queued[pick] = 1;
    gseen[pins.gidx[pick]] = sseen[pins.sidx[pick]] = 1;
  }

  std::vector<int> gcol(pins.gcycles.size(), 0), srow(pins.scycles.size(), 0);
  std::vector<int> row_offset(lam.rows() + 1, 0);
  for (int r = 1; r <= lam.rows(); ++r)
    row_offset[r] = row_offset[r - 1] + lam.part(r);
  std::uint64_t used = 0;  // box bitmask for the injective variant

  auto rec = [&](auto&& self, std::size_t step) -> std::uint64_t {
    if (step == order.size()) return 1;
    const int m = order[step];
    const int cg = pins.gidx[m], cs = pins.sidx[m];
    const int pinned_col = gcol[cg], pinned_row = srow[cs];
    std::uint64_t total = 0;
    auto try_box = [&](int r, int c) {
      const std::uint64_t bit = injective ? 1ull << (row_offset[r - 1] + c - 1) : 0;
      if (injective && (used & bit)) return;
      const int old_col = gcol[cg], old_row = srow[cs];
      gcol[cg] = c;
      srow[cs] = r;
      used |= bit;
      total += self(self, step + 1);
      used &= ~bit;
      gcol[cg] = old_col;
      srow[cs] = old_row;
    };
    if (m == 1) {
      try_box(rb.row, rb.col);
    } else if (pinned_col && pinned_row) {
      if (lam.contains(Box{pinned_row, pinned_col})) try_box(pinned_row, pinned_col);
    } else if (pinned_col) {
      for (int r = 1; r <= conj.part(pinned_col); ++r) try_box(r, pinned_col);
    } else if (pinned_row) {
      for (int c = 1; c <= lam.part(pinned_row); ++c) try_box(pinned_row, c);
    } else {
      for (int r = 1; r <= lam.rows(); ++r)
        for (int c = 1; c <= lam.part(r); ++c) try_box(r, c);
    }
    return total;
  };
  return rec(rec, 0);
}

}  // namespace detail

// N-hat(gamma, sigma): all box-valued functions with the constancy
// constraints. Enumerated directly; equals count_colorings, which the tests
// check rather than assume.
inline std::uint64_t count_functions(const Partition& lam, const Partition& mu,
                                     const Permutation& gamma, const Permutation& sigma) {
  return detail::count_constrained_functions(lam, mu, gamma, sigma, false);
}

// N-tilde restricted to S_l: the one-to-one maps among those functions.
inline std::uint64_t count_injective(const Partition& lam, const Partition& mu,
                                     const Permutation& gamma, const Permutation& sigma) {
  return detail::count_constrained_functions(lam, mu, gamma, sigma, true);
}

// N-tilde(gamma, sigma): permutations pi fixing 1 such that every cycle of
// gamma sits inside a column of pi t and every cycle of sigma inside a row,
// t the canonical tableau. Equals (n-l)! times count_injective.
inline std::uint64_t count_tableau_translates(const Partition& lam, const Partition& mu,
                                              const Permutation& gamma,
                                              const Permutation& sigma, int n,
                                              int max_n = 6) {
  detail::require_covering(lam, mu);
  detail::require_equal_degree(gamma, sigma);
  if (n != lam.n()) throw std::invalid_argument("n must equal |lambda|");
  if (gamma.degree() > n) throw std::invalid_argument("degree exceeds n");
  if (n > max_n) throw std::domain_error("oracle scale exceeded");

  const Tableau t = canonical_tableau(lam, mu);
  const auto gcycles = cycles(gamma);
  const auto scycles = cycles(sigma);
  std::vector<Box> pos(n + 1);
  std::uint64_t total = 0;
  for_each_fixing_one(n, [&](const Permutation& pi) {
    for (int i = 1; i <= lam.rows(); ++i)
      for (int j = 1; j <= lam.part(i); ++j) pos[pi(t.entry(i, j))] = Box{i, j};
    for (const auto& cyc : gcycles)
      for (int p : cyc)
        if (pos[p].col != pos[cyc.front()].col) return;
    for (const auto& cyc : scycles)
      for (int p : cyc)
        if (pos[p].row != pos[cyc.front()].row) return;
    ++total;
  });
  return total;
}

}  // namespace genchar
