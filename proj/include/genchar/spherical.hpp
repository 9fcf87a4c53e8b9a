#pragma once

// The generalized characters phi_{lam,mu} of S_n: the coloring-count
// factorization formula (the production route), the same sum over plain
// function counts, the spherical average over the point stabilizer, the
// transposition closed form, and full-table construction.

#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "genchar/characters.hpp"
#include "genchar/counting.hpp"
#include "genchar/partition.hpp"
#include "genchar/permutation.hpp"
#include "genchar/rational.hpp"

namespace genchar {

namespace detail {

// sum over factorizations theta = gamma o sigma in S_l of
// sign(gamma) count(gamma, sigma), divided by (n-1)_{l-1}.
template <typename Counter>
inline Rational factorization_sum(const Partition& lam, const Partition& mu,
                                  const Permutation& theta_l, Counter&& count) {
  const int l = theta_l.degree();
  Int acc = 0;
  for_each_permutation(l, [&](const Permutation& gamma) {
    const Permutation sigma = compose(inverse(gamma), theta_l);
    const Int term = Int(count(lam, mu, gamma, sigma));
    acc += sign(gamma) > 0 ? term : -term;
  });
  return Rational(acc, falling_factorial(lam.n() - 1, l - 1));
}

inline Permutation embed_or_throw(const Partition& lam, const Permutation& theta) {
  auto [l, th] = minimal_embedding(theta);
  if (l > lam.n()) throw std::invalid_argument("permutation support exceeds n");
  return th;
}

}  // namespace detail

// phi_{lam,mu}(theta) by the coloring-count formula, over the minimal S_l
// containing the support of theta and the point 1. The identity is the
// l = 1 case and evaluates to 1.
inline Rational phi_sfs(const Partition& lam, const Partition& mu, const Permutation& theta) {
  detail::require_covering(lam, mu);
  return detail::factorization_sum(lam, mu, detail::embed_or_throw(lam, theta),
                                   [](const Partition& l, const Partition& m,
                                      const Permutation& g, const Permutation& s) {
                                     return count_colorings(l, m, g, s);
                                   });
}

// Same sum evaluated over an explicitly chosen S_l with l at least the
// minimal embedding degree; the value does not depend on the choice.
inline Rational phi_sfs_embedded(const Partition& lam, const Partition& mu,
                                 const Permutation& theta, int l) {
  detail::require_covering(lam, mu);
  const Permutation th = detail::embed_or_throw(lam, theta);
  if (l < th.degree() || l > lam.n())
    throw std::invalid_argument("embedding degree out of range");
  return detail::factorization_sum(lam, mu, pad(th, l),
                                   [](const Partition& lm, const Partition& m,
                                      const Permutation& g, const Permutation& s) {
                                     return count_colorings(lm, m, g, s);
                                   });
}

// First independent oracle: the same factorization sum with the box-valued
// function count in place of the coloring count.
inline Rational phi_lemma(const Partition& lam, const Partition& mu, const Permutation& theta) {
  detail::require_covering(lam, mu);
  return detail::factorization_sum(lam, mu, detail::embed_or_throw(lam, theta),
                                   [](const Partition& l, const Partition& m,
                                      const Permutation& g, const Permutation& s) {
                                     return count_functions(l, m, g, s);
                                   });
}

// Second independent oracle, from the definition of a spherical function:
// (1/(n-1)!) sum over h fixing 1 of chi^lam(g h) chi^mu(h). Characters of
// symmetric groups are integer valued, so no conjugation appears.
inline Rational phi_spherical(const Partition& lam, const Partition& mu, const Permutation& g,
                              int max_n = 7) {
  detail::require_covering(lam, mu);
  const int n = lam.n();
  if (n > max_n) throw std::domain_error("oracle scale exceeded");
  const Permutation gn = pad(detail::embed_or_throw(lam, g), n);
  Int acc = 0;
  for_each_fixing_one(n, [&](const Permutation& h) {
    acc += Int(mn_character(lam, cycle_type(compose(gn, h))) * restricted_character(mu, h));
  });
  return Rational(acc, factorial(n - 1));
}

// phi_{lam,mu}((1 2)) = (lam_i - lam'_j)/(n-1) for the removed box (i, j).
inline Rational transposition_value(const Partition& lam, const Partition& mu) {
  detail::require_covering(lam, mu);
  if (lam.n() < 2) throw std::invalid_argument("n must be >= 2");
  const Box rb = removed_box(lam, mu);
  return Rational(lam.part(rb.row) - conjugate(lam).part(rb.col), lam.n() - 1);
}

// All covering pairs (lam of n, mu of n-1): lam in reverse-lexicographic
// order, mu reverse-lexicographic within each lam.
inline std::vector<std::pair<Partition, Partition>> covering_pairs(int n, int max_n = 12) {
  if (n < 2 || n > max_n) throw std::out_of_range("n out of range");
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& lam : enumerate_partitions(n, max_n)) {
    std::vector<Partition> mus;
    for (const Box& b : removable_boxes(lam)) {
      std::vector<int> parts = lam.parts();
      --parts[b.row - 1];
      mus.push_back(Partition(std::move(parts)));
    }
    std::sort(mus.begin(), mus.end(), revlex_before);
    for (auto& mu : mus) out.emplace_back(lam, std::move(mu));
  }
  return out;
}

// The full table of phi values: one row per covering pair, one column per
// marked class.
struct GenCharTable {
  int n = 0;
  std::vector<std::pair<Partition, Partition>> pairs;
  std::vector<MarkedClass> classes;
  std::vector<Permutation> reps;
  std::vector<std::vector<Rational>> values;  // [pair][class]

  const Rational& value(const Partition& lam, const Partition& mu, const MarkedClass& mc) const {
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (pairs[p].first != lam || pairs[p].second != mu) continue;
      for (std::size_t c = 0; c < classes.size(); ++c)
        if (classes[c] == mc) return values[p][c];
    }
    throw std::out_of_range("no such table entry");
  }
};

// Evaluates phi_sfs on every (pair, class representative). Independent
// entries are distributed across threads; the result does not depend on the
// scheduling.
inline GenCharTable build_table(int n, int max_n = 8, unsigned threads = 0) {
  if (n < 2 || n > max_n) throw std::domain_error("oracle scale exceeded");
  GenCharTable table;
  table.n = n;
  table.pairs = covering_pairs(n);
  for (auto& [mc, rep] : enumerate_marked_class_reps(n)) {
    table.classes.push_back(mc);
    table.reps.push_back(rep);
  }
  const std::size_t rows = table.pairs.size(), cols = table.classes.size();
  table.values.assign(rows, std::vector<Rational>(cols));

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(rows * cols));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= rows * cols) return;
      table.values[k / cols][k % cols] =
          phi_sfs(table.pairs[k / cols].first, table.pairs[k / cols].second,
                  table.reps[k % cols]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return table;
}

}  // namespace genchar
