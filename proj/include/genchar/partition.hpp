#pragma once

// Integer partitions with Young-diagram geometry: conjugation, removable
// corner boxes, the one-box covering relation, hook-length dimensions and
// deterministic enumeration.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "genchar/rational.hpp"

namespace genchar {

// 1-based (row, column) coordinates of a cell of a Young diagram.
struct Box {
  int row = 0;
  int col = 0;
  friend bool operator==(const Box&, const Box&) = default;
};

// Weakly decreasing positive parts, stored without trailing zeros so that
// equality is structural. The empty partition (n = 0) only appears as an
// internal degenerate case.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("partition parts must be positive");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based row length; rows past the diagram have length 0.
  int part(int i) const { return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0; }

  const std::vector<int>& parts() const { return parts_; }

  bool contains(const Box& b) const {
    return b.row >= 1 && b.col >= 1 && b.col <= part(b.row);
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// Reverse-lexicographic enumeration order: (n) first, (1^n) last.
inline bool revlex_before(const Partition& a, const Partition& b) {
  return a.parts() > b.parts();
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> parts(p.part(1), 0);
  for (int j = 1; j <= p.part(1); ++j)
    for (int i = 1; i <= p.rows(); ++i)
      if (p.part(i) >= j) ++parts[j - 1];
  return Partition(std::move(parts));
}

// Outer corners whose removal leaves a partition, in increasing row order.
inline std::vector<Box> removable_boxes(const Partition& p) {
  if (p.empty()) throw std::invalid_argument("no boxes");
  std::vector<Box> out;
  for (int i = 1; i <= p.rows(); ++i)
    if (p.part(i) > p.part(i + 1)) out.push_back(Box{i, p.part(i)});
  return out;
}

// True iff mu is lam with exactly one box removed.
inline bool covers(const Partition& lam, const Partition& mu) {
  if (mu.n() + 1 != lam.n()) return false;
  if (mu.rows() < lam.rows() - 1 || mu.rows() > lam.rows()) return false;
  int diffs = 0;
  for (int i = 1; i <= lam.rows(); ++i) {
    const int d = lam.part(i) - mu.part(i);
    if (d < 0) return false;
    if (d > 1) return false;
    diffs += d;
  }
  return diffs == 1;
}

inline Box removed_box(const Partition& lam, const Partition& mu) {
  if (!covers(lam, mu)) throw std::invalid_argument("not a covering pair");
  for (int i = 1; i <= lam.rows(); ++i)
    if (lam.part(i) != mu.part(i)) return Box{i, lam.part(i)};
  throw std::logic_error("unreachable");
}

// Hook-length formula; equals the number of standard Young tableaux.
inline std::uint64_t dimension(const Partition& p) {
  if (p.n() < 1) throw std::invalid_argument("dimension requires n >= 1");
  const Partition q = conjugate(p);
  Int hooks = 1;
  for (int i = 1; i <= p.rows(); ++i)
    for (int j = 1; j <= p.part(i); ++j)
      hooks *= (p.part(i) - j) + (q.part(j) - i) + 1;
  const Int d = factorial(p.n()) / hooks;
  return d.convert_to<std::uint64_t>();
}

// All partitions of n in reverse-lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n, int max_n = 12) {
  if (n < 1 || n > max_n) throw std::out_of_range("n out of range");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int k = std::min(cap, remaining); k >= 1; --k) {
      cur.push_back(k);
      self(self, remaining - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// Text form "3,1"; trailing zeros are normalized away.
inline Partition parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition: " + s);
    }
    if (pos != tok.size() || v < 0) throw std::invalid_argument("bad partition: " + s);
    parts.push_back(v);
  }
  Partition p{parts};
  if (p.empty()) throw std::invalid_argument("bad partition: " + s);
  return p;
}

inline std::string to_string(const Partition& p) {
  std::string out;
  for (int i = 1; i <= p.rows(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p.part(i));
  }
  return out;
}

}  // namespace genchar
