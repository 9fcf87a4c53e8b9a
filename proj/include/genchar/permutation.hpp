#pragma once

// Permutations of {1..n} with cycle structure, and the conjugacy classes of
// S_n under the stabilizer of the point 1 (cycle type plus the length of the
// cycle through 1, the "marked" cycle type).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genchar/partition.hpp"
#include "genchar/rational.hpp"

namespace genchar {

class Permutation {
 public:
  // Identity on {1..degree}.
  explicit Permutation(int degree) : img_(check_degree(degree)) {
    std::iota(img_.begin(), img_.end(), 1);
  }

  // 1-based image list: images[i-1] = pi(i).
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    check_degree(n);
    std::vector<char> seen(n + 1, 0);
    for (int v : img_) {
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("images are not a bijection of {1..n}");
      seen[v] = 1;
    }
  }

  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x - 1]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 1; i <= degree(); ++i)
      if (img_[i - 1] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img_ < b.img_;
  }

 private:
  static int check_degree(int n) {
    if (n < 1) throw std::invalid_argument("permutation degree must be >= 1");
    return n;
  }
  std::vector<int> img_;
};

// (a o b)(x) = a(b(x)): b acts first. This convention is fixed project-wide.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> img(a.degree());
  for (int x = 1; x <= a.degree(); ++x) img[x - 1] = a(b(x));
  return Permutation(std::move(img));
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[p(x) - 1] = x;
  return Permutation(std::move(img));
}

// All cycles, fixed points included as 1-cycles. Each cycle starts at its
// smallest point and cycles are ordered by smallest point, so the cycle
// containing 1 comes first.
inline std::vector<std::vector<int>> cycles(const Permutation& p) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(p.degree() + 1, 0);
  for (int s = 1; s <= p.degree(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (int x = s; !seen[x]; x = p(x)) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

inline int sign(const Permutation& p) {
  return (p.degree() - static_cast<int>(cycles(p).size())) % 2 == 0 ? 1 : -1;
}

inline std::vector<int> support(const Permutation& p) {
  std::vector<int> out;
  for (int x = 1; x <= p.degree(); ++x)
    if (p(x) != x) out.push_back(x);
  return out;
}

inline Partition cycle_type(const Permutation& p) {
  std::vector<int> lens;
  for (const auto& c : cycles(p)) lens.push_back(static_cast<int>(c.size()));
  std::sort(lens.rbegin(), lens.rend());
  return Partition(std::move(lens));
}

// Cycle type plus the length of the cycle through 1: the complete invariant
// of conjugacy under the stabilizer of 1.
struct MarkedClass {
  Partition cycle_type;
  int mark = 1;

  MarkedClass() = default;
  MarkedClass(Partition type, int m) : cycle_type(std::move(type)), mark(m) {
    const auto& parts = cycle_type.parts();
    if (std::find(parts.begin(), parts.end(), m) == parts.end())
      throw std::invalid_argument("mark must be a part of the cycle type");
  }

  friend bool operator==(const MarkedClass&, const MarkedClass&) = default;
  friend bool operator<(const MarkedClass& a, const MarkedClass& b) {
    if (a.cycle_type != b.cycle_type) return a.cycle_type < b.cycle_type;
    return a.mark < b.mark;
  }
};

inline MarkedClass marked_class(const Permutation& p) {
  return MarkedClass(cycle_type(p), static_cast<int>(cycles(p).front().size()));
}

// Smallest l with supp(p) together with 1 inside {1..l}, and p restricted to
// {1..l}. Identity gives l = 1.
inline std::pair<int, Permutation> minimal_embedding(const Permutation& p) {
  int l = 1;
  for (int x : support(p)) l = std::max(l, x);
  std::vector<int> img(l);
  for (int x = 1; x <= l; ++x) img[x - 1] = p(x);
  return {l, Permutation(std::move(img))};
}

// Extend with fixed points up to the given degree.
inline Permutation pad(const Permutation& p, int degree) {
  if (degree < p.degree()) throw std::invalid_argument("pad cannot shrink degree");
  std::vector<int> img(degree);
  for (int x = 1; x <= p.degree(); ++x) img[x - 1] = p(x);
  for (int x = p.degree() + 1; x <= degree; ++x) img[x - 1] = x;
  return Permutation(std::move(img));
}

// One canonical representative per marked class: the marked cycle is
// (1 2 ... m), remaining cycles fill subsequent integers in decreasing part
// order. Listing order: types lexicographically increasing (so the identity
// type comes first), marks ascending within a type.
inline std::vector<std::pair<MarkedClass, Permutation>> enumerate_marked_class_reps(
    int n, int max_n = 12) {
  if (n < 1 || n > max_n) throw std::out_of_range("n out of range");
  auto types = enumerate_partitions(n, max_n);
  std::reverse(types.begin(), types.end());
  std::vector<std::pair<MarkedClass, Permutation>> out;
  for (const auto& type : types) {
    std::vector<int> marks = type.parts();
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    std::sort(marks.begin(), marks.end());
    for (int m : marks) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      auto place_cycle = [&img](int start, int len) {
        for (int x = start; x < start + len - 1; ++x) img[x - 1] = x + 1;
        img[start + len - 2] = start;
      };
      place_cycle(1, m);
      int next = m + 1;
      std::vector<int> rest = type.parts();
      rest.erase(std::find(rest.begin(), rest.end(), m));
      for (int q : rest) {
        place_cycle(next, q);
        next += q;
      }
      out.emplace_back(MarkedClass(type, m), Permutation(std::move(img)));
    }
  }
  return out;
}

// Number of permutations of {1..n} with the given cycle type whose cycle
// through 1 has length mark: (n-1)! m k_m / prod_j j^{k_j} k_j!.
inline std::uint64_t marked_class_size(const MarkedClass& mc) {
  const int n = mc.cycle_type.n();
  std::vector<int> mult(n + 1, 0);
  for (int part : mc.cycle_type.parts()) ++mult[part];
  Int den = 1;
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= mult[j]; ++k) den *= Int(j) * k;
  const Int num = factorial(n - 1) * mc.mark * mult[mc.mark];
  return Int(num / den).convert_to<std::uint64_t>();
}

template <typename Fn>
inline void for_each_permutation(int degree, Fn&& fn) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  do {
    fn(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

// Permutations fixing the point 1.
template <typename Fn>
inline void for_each_fixing_one(int degree, Fn&& fn) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  do {
    fn(Permutation(img));
  } while (std::next_permutation(img.begin() + 1, img.end()));
}

inline Permutation random_permutation(int degree, std::mt19937& rng) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

inline Permutation random_fixing_one(int degree, std::mt19937& rng) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  if (degree > 1) std::shuffle(img.begin() + 1, img.end(), rng);
  return Permutation(std::move(img));
}

// Cycle notation "(1 2 3)(4 5)"; unlisted points are fixed; "e" or "()" is
// the identity.
inline Permutation parse_permutation(const std::string& s, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  std::vector<char> used(degree + 1, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i == s.size()) throw std::invalid_argument("bad permutation: " + s);
  if (s[i] == 'e') {
    ++i;
    skip_ws();
    if (i != s.size()) throw std::invalid_argument("bad permutation: " + s);
    return Permutation(std::move(img));
  }
  while (i < s.size()) {
    skip_ws();
    if (i == s.size()) break;
    if (s[i] != '(') throw std::invalid_argument("bad permutation: " + s);
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start) throw std::invalid_argument("bad permutation: " + s);
      const int pt = std::stoi(s.substr(start, i - start));
      if (pt < 1 || pt > degree)
        throw std::invalid_argument("point out of range in permutation: " + s);
      if (used[pt]) throw std::invalid_argument("repeated point in permutation: " + s);
      used[pt] = 1;
      cyc.push_back(pt);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(img));
}

inline std::string to_cycle_string(const Permutation& p) {
  std::string out;
  for (const auto& cyc : cycles(p)) {
    if (cyc.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cyc[k]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace genchar
