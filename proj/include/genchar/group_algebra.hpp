#pragma once

// Formal rational linear combinations of permutations, Young symmetrizers,
// and the two conjugation-average formulas built from them: the classical
// character as an average over the full group and the generalized character
// as an average over the stabilizer of 1.

#include <map>
#include <stdexcept>
#include <utility>

#include "genchar/partition.hpp"
#include "genchar/permutation.hpp"
#include "genchar/rational.hpp"
#include "genchar/tableau.hpp"

namespace genchar {

class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int degree) : degree_(degree) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  }

  static GroupAlgebraElement delta(const Permutation& p) {
    GroupAlgebraElement e(p.degree());
    e.add(p, 1);
    return e;
  }

  int degree() const { return degree_; }
  const std::map<Permutation, Rational>& terms() const { return coeffs_; }
  std::size_t term_count() const { return coeffs_.size(); }

  Rational coeff(const Permutation& p) const {
    const auto it = coeffs_.find(p);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  // Zero coefficients are never stored.
  void add(const Permutation& p, const Rational& c) {
    if (p.degree() != degree_) throw std::invalid_argument("degree mismatch");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  void scale(const Rational& c) {
    if (c == 0) {
      coeffs_.clear();
      return;
    }
    for (auto& [p, v] : coeffs_) v *= c;
  }

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  int degree_;
  std::map<Permutation, Rational> coeffs_;
};

// (a*b)(theta) = sum over factorizations theta = gamma o sigma of
// a(gamma) b(sigma).
inline GroupAlgebraElement convolve(const GroupAlgebraElement& a,
                                    const GroupAlgebraElement& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  GroupAlgebraElement out(a.degree());
  for (const auto& [g, cg] : a.terms())
    for (const auto& [s, cs] : b.terms()) out.add(compose(g, s), cg * cs);
  return out;
}

inline GroupAlgebraElement conjugate_by(const GroupAlgebraElement& a,
                                        const Permutation& pi) {
  if (a.degree() != pi.degree()) throw std::invalid_argument("degree mismatch");
  GroupAlgebraElement out(a.degree());
  const Permutation inv = inverse(pi);
  for (const auto& [p, c] : a.terms()) out.add(compose(compose(pi, p), inv), c);
  return out;
}

inline Rational evaluate(const GroupAlgebraElement& a, const Permutation& p) {
  if (a.degree() != p.degree()) throw std::invalid_argument("degree mismatch");
  return a.coeff(p);
}

// E_t = sum over gamma in the column stabilizer and sigma in the row
// stabilizer of sign(gamma) gamma o sigma. Its coefficient at the identity
// is 1.
inline GroupAlgebraElement young_symmetrizer(const Tableau& t) {
  GroupAlgebraElement out(t.n());
  for (const auto& g : column_stabilizer(t)) {
    const int sg = sign(g);
    for (const auto& s : row_stabilizer(t)) out.add(compose(g, s), sg);
  }
  return out;
}

// chi^lam = (d_lam / n!) sum over pi in S_n of pi E_t pi^{-1}; constant on
// conjugacy classes, with coefficient d_lam at the identity.
inline GroupAlgebraElement character_via_symmetrizer(const Partition& lam, int max_n = 6) {
  const int n = lam.n();
  if (n < 1) throw std::invalid_argument("empty partition");
  if (n > max_n) throw std::domain_error("oracle scale exceeded");
  const GroupAlgebraElement e = young_symmetrizer(row_major_tableau(lam));
  GroupAlgebraElement out(n);
  for_each_permutation(n, [&](const Permutation& pi) {
    const Permutation inv = inverse(pi);
    for (const auto& [p, c] : e.terms()) out.add(compose(compose(pi, p), inv), c);
  });
  out.scale(Rational(Int(dimension(lam)), factorial(n)));
  return out;
}

// The generalized character as a full function on S_n: the average of
// pi E_t pi^{-1} over pi fixing 1, for a tableau t with 1 in the removed
// box. Constant on marked classes, coefficient 1 at the identity.
inline GroupAlgebraElement gen_char_via_travis(const Partition& lam, const Partition& mu,
                                               const Tableau& t, int max_n = 5) {
  const int n = lam.n();
  if (n > max_n) throw std::domain_error("oracle scale exceeded");
  const Box rb = removed_box(lam, mu);
  if (t.shape() != lam || t.box_of(1) != rb)
    throw std::invalid_argument("tableau must have shape lambda with 1 in the removed box");
  const GroupAlgebraElement e = young_symmetrizer(t);
  GroupAlgebraElement out(n);
  for_each_fixing_one(n, [&](const Permutation& pi) {
    const Permutation inv = inverse(pi);
    for (const auto& [p, c] : e.terms()) out.add(compose(compose(pi, p), inv), c);
  });
  out.scale(Rational(1, factorial(n - 1)));
  return out;
}

inline GroupAlgebraElement gen_char_via_travis(const Partition& lam, const Partition& mu,
                                               int max_n = 5) {
  return gen_char_via_travis(lam, mu, canonical_tableau(lam, mu), max_n);
}

}  // namespace genchar
