#pragma once

// Cross-verification checks: every identity the library promises, runnable
// at a given n. Each check returns nullopt on success or a description of
// the first mismatch. The driver maps checks above their scale limit to
// named skips.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "genchar/characters.hpp"
#include "genchar/counting.hpp"
#include "genchar/group_algebra.hpp"
#include "genchar/partition.hpp"
#include "genchar/permutation.hpp"
#include "genchar/rational.hpp"
#include "genchar/spherical.hpp"

namespace genchar {
namespace checks {

namespace detail_checks {

inline std::string describe(const Partition& lam, const Partition& mu,
                            const Permutation& theta) {
  return "lambda=" + to_string(lam) + " mu=" + to_string(mu) +
         " theta=" + to_cycle_string(theta);
}

}  // namespace detail_checks

// phi(e) = 1 for every covering pair.
inline std::optional<std::string> normalization(int n) {
  const Permutation e = Permutation::identity(n);
  for (const auto& [lam, mu] : covering_pairs(n))
    if (phi_sfs(lam, mu, e) != 1)
      return "phi(e) != 1 at lambda=" + to_string(lam) + " mu=" + to_string(mu);
  return std::nullopt;
}

inline std::optional<std::string> agreement_lemma(int n) {
  for (const auto& [lam, mu] : covering_pairs(n))
    for (const auto& [mc, rep] : enumerate_marked_class_reps(n))
      if (phi_sfs(lam, mu, rep) != phi_lemma(lam, mu, rep))
        return "sfs != lemma at " + detail_checks::describe(lam, mu, rep);
  return std::nullopt;
}

inline std::optional<std::string> agreement_spherical(int n) {
  for (const auto& [lam, mu] : covering_pairs(n))
    for (const auto& [mc, rep] : enumerate_marked_class_reps(n))
      if (phi_sfs(lam, mu, rep) != phi_spherical(lam, mu, rep))
        return "sfs != spherical at " + detail_checks::describe(lam, mu, rep);
  return std::nullopt;
}

inline std::optional<std::string> agreement_travis(int n) {
  const auto reps = enumerate_marked_class_reps(n);
  for (const auto& [lam, mu] : covering_pairs(n)) {
    const GroupAlgebraElement phi = gen_char_via_travis(lam, mu);
    for (const auto& [mc, rep] : reps)
      if (phi_sfs(lam, mu, rep) != evaluate(phi, rep))
        return "sfs != travis at " + detail_checks::describe(lam, mu, rep);
  }
  return std::nullopt;
}

// On permutations fixing 1, phi_{lam,mu} restricts to chi^mu / d_mu.
inline std::optional<std::string> restriction(int n) {
  for (const auto& [lam, mu] : covering_pairs(n))
    for (const auto& [mc, rep] : enumerate_marked_class_reps(n)) {
      if (mc.mark != 1) continue;
      const Rational expected(Int(restricted_character(mu, rep)), Int(dimension(mu)));
      if (phi_sfs(lam, mu, rep) != expected)
        return "restriction fails at " + detail_checks::describe(lam, mu, rep);
    }
  return std::nullopt;
}

// phi((1 2)) = (lam_i - lam'_j)/(n-1).
inline std::optional<std::string> transposition(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[0], img[1]);
  const Permutation t12{img};
  for (const auto& [lam, mu] : covering_pairs(n))
    if (phi_sfs(lam, mu, t12) != transposition_value(lam, mu))
      return "closed form fails at lambda=" + to_string(lam) + " mu=" + to_string(mu);
  return std::nullopt;
}

// The coloring count equals the function count, exhaustively in S_l.
inline std::optional<std::string> colorings_equal_functions(int n, int max_l = 4) {
  for (const auto& [lam, mu] : covering_pairs(n))
    for (int l = 1; l <= max_l; ++l) {
      bool bad = false;
      Permutation g_bad{1}, s_bad{1};
      for_each_permutation(l, [&](const Permutation& g) {
        for_each_permutation(l, [&](const Permutation& s) {
          if (!bad && count_colorings(lam, mu, g, s) != count_functions(lam, mu, g, s)) {
            bad = true;
            g_bad = g;
            s_bad = s;
          }
        });
      });
      if (bad)
        return "N != N-hat at lambda=" + to_string(lam) + " mu=" + to_string(mu) +
               " gamma=" + to_cycle_string(g_bad) + " sigma=" + to_cycle_string(s_bad);
    }
  return std::nullopt;
}

// Tableau-translate counts factor through injective function counts:
// N-tilde = (n-l)! N-tilde_{S_l}, exhaustively in S_l for l <= n.
inline std::optional<std::string> tableau_translate_factorization(int n) {
  for (const auto& [lam, mu] : covering_pairs(n))
    for (int l = 1; l <= n; ++l) {
      const Int scale = factorial(n - l);
      bool bad = false;
      Permutation g_bad{1}, s_bad{1};
      for_each_permutation(l, [&](const Permutation& g) {
        for_each_permutation(l, [&](const Permutation& s) {
          if (bad) return;
          if (Int(count_tableau_translates(lam, mu, g, s, n)) !=
              scale * count_injective(lam, mu, g, s)) {
            bad = true;
            g_bad = g;
            s_bad = s;
          }
        });
      });
      if (bad)
        return "translate factorization fails at lambda=" + to_string(lam) +
               " mu=" + to_string(mu) + " gamma=" + to_cycle_string(g_bad) +
               " sigma=" + to_cycle_string(s_bad);
    }
  return std::nullopt;
}

// Nonzero translate counts force supp(gamma), supp(sigma) inside
// supp(gamma o sigma).
inline std::optional<std::string> support_condition(int n, int max_l = 4) {
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (const auto& [lam, mu] : covering_pairs(n))
    for (int l = 1; l <= std::min(max_l, n); ++l) {
      bool bad = false;
      for_each_permutation(l, [&](const Permutation& g) {
        for_each_permutation(l, [&](const Permutation& s) {
          if (bad) return;
          if (count_tableau_translates(lam, mu, g, s, n) == 0) return;
          const auto sup_theta = support(compose(g, s));
          if (!subset(support(g), sup_theta) || !subset(support(s), sup_theta)) bad = true;
        });
      });
      if (bad)
        return "support condition fails at lambda=" + to_string(lam) +
               " mu=" + to_string(mu);
    }
  return std::nullopt;
}

// Distinct pairs are orthogonal over S_n; the squared norm is
// n!/(d_lam d_mu). Summation goes over marked classes weighted by size.
inline std::optional<std::string> orthogonality(int n) {
  const GenCharTable table = build_table(n);
  std::vector<Rational> sizes;
  for (const auto& mc : table.classes) sizes.emplace_back(Int(marked_class_size(mc)));
  for (std::size_t a = 0; a < table.pairs.size(); ++a)
    for (std::size_t b = a; b < table.pairs.size(); ++b) {
      Rational sum = 0;
      for (std::size_t c = 0; c < table.classes.size(); ++c)
        sum += sizes[c] * table.values[a][c] * table.values[b][c];
      const Rational expected =
          a == b ? Rational(factorial(n), Int(dimension(table.pairs[a].first)) *
                                              Int(dimension(table.pairs[a].second)))
                 : Rational(0);
      if (sum != expected)
        return "orthogonality fails between pair " + std::to_string(a) + " and " +
               std::to_string(b);
    }
  return std::nullopt;
}

// As many marked classes as covering pairs, and the classes really do
// partition S_n (checked elsewhere by orbit tests; here by exhaustive
// marked-class collection).
inline std::optional<std::string> class_pair_count(int n) {
  const auto reps = enumerate_marked_class_reps(n);
  if (reps.size() != covering_pairs(n).size())
    return "class count " + std::to_string(reps.size()) + " != pair count " +
           std::to_string(covering_pairs(n).size());
  std::set<MarkedClass> seen;
  for_each_permutation(n, [&](const Permutation& p) { seen.insert(marked_class(p)); });
  if (seen.size() != reps.size()) return "enumerated classes do not cover S_n";
  for (const auto& [mc, rep] : reps)
    if (!seen.count(mc) || marked_class(rep) != mc) return "bad class representative";
  return std::nullopt;
}

// phi depends only on the marked class: conjugating by permutations fixing 1
// never changes the value.
inline std::optional<std::string> conjugation_invariance(int n, int trials = 100,
                                                         unsigned seed = 20260810) {
  std::mt19937 rng(seed);
  const auto prs = covering_pairs(n);
  const auto reps = enumerate_marked_class_reps(n);
  std::uniform_int_distribution<std::size_t> pick_pair(0, prs.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_class(0, reps.size() - 1);
  for (int t = 0; t < trials; ++t) {
    const auto& [lam, mu] = prs[pick_pair(rng)];
    const auto& rep = reps[pick_class(rng)].second;
    const Permutation pi = random_fixing_one(n, rng);
    const Permutation conj = compose(compose(pi, rep), inverse(pi));
    if (marked_class(conj) != marked_class(rep))
      return "marked class not conjugation invariant at " + to_cycle_string(rep);
    if (phi_sfs(lam, mu, conj) != phi_sfs(lam, mu, rep))
      return "phi not constant on the marked class of " + to_cycle_string(rep);
  }
  return std::nullopt;
}

}  // namespace checks

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

// Scale limits per check; above them the check is skipped by name rather
// than run or failed.
struct VerifyLimits {
  int normalization = 8;
  int agreement_lemma = 6;
  int agreement_spherical = 7;
  int agreement_travis = 5;
  int restriction = 6;
  int transposition = 7;
  int colorings_equal_functions = 6;
  int tableau_translate_factorization = 5;
  int support_condition = 5;
  int orthogonality = 5;
  int class_pair_count = 8;
  int conjugation_invariance = 6;
};

// The oracle set gates the three cross-oracle agreement checks; every other
// property always runs (subject to its limit).
inline std::vector<CheckResult> run_verification(int n, const std::vector<std::string>& oracles,
                                                 const VerifyLimits& limits = {}) {
  auto has = [&](const std::string& name) {
    return std::find(oracles.begin(), oracles.end(), name) != oracles.end();
  };
  struct Row {
    std::string name;
    int limit;
    bool enabled;
    std::function<std::optional<std::string>(int)> fn;
  };
  const std::vector<Row> rows = {
      {"normalization", limits.normalization, true, checks::normalization},
      {"agreement_sfs_lemma", limits.agreement_lemma, has("lemma"), checks::agreement_lemma},
      {"agreement_sfs_spherical", limits.agreement_spherical, has("spherical"),
       checks::agreement_spherical},
      {"agreement_sfs_travis", limits.agreement_travis, has("travis"),
       checks::agreement_travis},
      {"restriction_identity", limits.restriction, true, checks::restriction},
      {"transposition_closed_form", limits.transposition, true, checks::transposition},
      {"colorings_equal_functions", limits.colorings_equal_functions, true,
       [](int m) { return checks::colorings_equal_functions(m); }},
      {"tableau_translate_factorization", limits.tableau_translate_factorization, true,
       checks::tableau_translate_factorization},
      {"support_condition", limits.support_condition, true,
       [](int m) { return checks::support_condition(m); }},
      {"orthogonality", limits.orthogonality, true, checks::orthogonality},
      {"class_pair_count", limits.class_pair_count, true, checks::class_pair_count},
      {"conjugation_invariance", limits.conjugation_invariance, true,
       [](int m) { return checks::conjugation_invariance(m); }},
  };
  std::vector<CheckResult> out;
  for (const auto& row : rows) {
    if (!row.enabled) continue;
    CheckResult r;
    r.name = row.name;
    if (n > row.limit) {
      r.status = CheckStatus::skip;
      r.detail = "oracle scale exceeded: n=" + std::to_string(n) + " > " +
                 std::to_string(row.limit);
    } else if (auto failure = row.fn(n)) {
      r.status = CheckStatus::fail;
      r.detail = *failure;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace genchar
