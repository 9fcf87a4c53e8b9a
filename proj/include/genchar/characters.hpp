#pragma once

// Classical irreducible characters of S_n on cycle types, by the
// Murnaghan-Nakayama border-strip recursion over beta-numbers.

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "genchar/partition.hpp"
#include "genchar/permutation.hpp"

namespace genchar {

namespace detail {

inline std::vector<int> beta_numbers(const std::vector<int>& parts) {
  const int r = static_cast<int>(parts.size());
  std::vector<int> beta(r);
  for (int i = 0; i < r; ++i) beta[i] = parts[i] + (r - 1 - i);
  return beta;
}

inline std::vector<int> partition_from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int r = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < r; ++i) {
    const int p = beta[i] - (r - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

// ct is sorted decreasing; strips are removed for the largest cycle first.
inline long long mn_rec(const std::vector<int>& lam, const std::vector<int>& ct) {
  if (ct.empty()) return 1;  // lam is empty too when sizes match

  using Key = std::pair<std::vector<int>, std::vector<int>>;
  static std::map<Key, long long> cache;
  static std::mutex cache_mutex;
  const Key key{lam, ct};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const int k = ct.front();
  const std::vector<int> rest(ct.begin() + 1, ct.end());
  const std::vector<int> beta = beta_numbers(lam);
  long long total = 0;
  for (std::size_t idx = 0; idx < beta.size(); ++idx) {
    const int target = beta[idx] - k;
    if (target < 0) continue;
    bool occupied = false;
    int height = 0;
    for (std::size_t j = 0; j < beta.size(); ++j) {
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[idx]) ++height;
    }
    if (occupied) continue;
    std::vector<int> nbeta = beta;
    nbeta[idx] = target;
    const long long sub = mn_rec(partition_from_beta(std::move(nbeta)), rest);
    total += (height % 2 == 0) ? sub : -sub;
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, total);
  return total;
}

}  // namespace detail

inline long long mn_character(const Partition& lam, const Partition& ct) {
  if (lam.n() != ct.n()) throw std::invalid_argument("size mismatch");
  return detail::mn_rec(lam.parts(), ct.parts());
}

// chi^mu on a permutation of {1..n} fixing 1, relabeled to {1..n-1} by
// subtracting 1 from every point.
inline long long restricted_character(const Partition& mu, const Permutation& h) {
  if (h(1) != 1) throw std::invalid_argument("h does not fix 1");
  if (h.degree() == 1) return 1;  // mu is empty
  std::vector<int> img(h.degree() - 1);
  for (int x = 2; x <= h.degree(); ++x) img[x - 2] = h(x) - 1;
  return mn_character(mu, cycle_type(Permutation(std::move(img))));
}

}  // namespace genchar
