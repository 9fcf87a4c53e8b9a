#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "genchar/characters.hpp"
#include "genchar/group_algebra.hpp"
#include "genchar/spherical.hpp"

using namespace genchar;

namespace {

// A tableau of shape lam with 1 in the removed box and 2..n placed randomly.
Tableau random_marked_tableau(const Partition& lam, const Partition& mu, std::mt19937& rng) {
  const Box rb = removed_box(lam, mu);
  std::vector<int> rest(lam.n() - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::shuffle(rest.begin(), rest.end(), rng);
  std::vector<std::vector<int>> rows(lam.rows());
  std::size_t next = 0;
  for (int i = 1; i <= lam.rows(); ++i)
    for (int j = 1; j <= lam.part(i); ++j)
      rows[i - 1].push_back(Box{i, j} == rb ? 1 : rest[next++]);
  return Tableau(lam, std::move(rows));
}

}  // namespace

TEST_CASE("group algebra arithmetic") {
  const Permutation t12 = parse_permutation("(1 2)", 3);
  const GroupAlgebraElement de = GroupAlgebraElement::delta(Permutation::identity(3));
  GroupAlgebraElement a(3);
  a.add(t12, Rational(1, 2));
  a.add(parse_permutation("(1 2 3)", 3), Rational(-2, 3));
  CHECK(convolve(de, a) == a);
  CHECK(conjugate_by(a, Permutation::identity(3)) == a);
  CHECK(convolve(GroupAlgebraElement::delta(t12), GroupAlgebraElement::delta(t12)) == de);
  CHECK(evaluate(a, t12) == Rational(1, 2));
  CHECK(evaluate(a, Permutation::identity(3)) == 0);
  CHECK_THROWS_WITH(convolve(a, GroupAlgebraElement(4)), "degree mismatch");
}

TEST_CASE("zero coefficients are dropped") {
  GroupAlgebraElement a(3);
  a.add(Permutation::identity(3), 1);
  a.add(Permutation::identity(3), -1);
  CHECK(a.term_count() == 0);
}

TEST_CASE("canonical tableau puts 1 in the removed box") {
  const Tableau t = canonical_tableau(Partition({2, 1}), Partition({1, 1}));
  CHECK(t.entry(1, 1) == 2);
  CHECK(t.entry(1, 2) == 1);
  CHECK(t.entry(2, 1) == 3);
  const Tableau u = canonical_tableau(Partition({2, 1}), Partition({2}));
  CHECK(u.entry(1, 1) == 2);
  CHECK(u.entry(1, 2) == 3);
  CHECK(u.entry(2, 1) == 1);
  const Tableau v = canonical_tableau(Partition({4}), Partition({3}));
  CHECK(v.entry(1, 1) == 2);
  CHECK(v.entry(1, 4) == 1);
  CHECK_THROWS_WITH(canonical_tableau(Partition({3, 1}), Partition({1, 1})),
                    "not a covering pair");
}

TEST_CASE("row and column stabilizers") {
  const Tableau row5 = row_major_tableau(Partition({5}));
  CHECK(row_stabilizer(row5).size() == 120);
  CHECK(column_stabilizer(row5).size() == 1);
  const Tableau col4 = row_major_tableau(Partition({1, 1, 1, 1}));
  CHECK(row_stabilizer(col4).size() == 1);
  CHECK(column_stabilizer(col4).size() == 24);

  const Tableau t = canonical_tableau(Partition({2, 1}), Partition({1, 1}));
  auto rt = row_stabilizer(t);
  auto ct = column_stabilizer(t);
  std::sort(rt.begin(), rt.end());
  std::sort(ct.begin(), ct.end());
  CHECK(rt == std::vector<Permutation>{Permutation::identity(3), parse_permutation("(1 2)", 3)});
  CHECK(ct == std::vector<Permutation>{Permutation::identity(3), parse_permutation("(2 3)", 3)});

  for (int n = 2; n <= 5; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      const Tableau tab = row_major_tableau(shape);
      std::uint64_t rsize = 1, csize = 1;
      for (int i = 1; i <= shape.rows(); ++i)
        for (int k = 2; k <= shape.part(i); ++k) rsize *= k;
      const Partition conj = conjugate(shape);
      for (int j = 1; j <= conj.rows(); ++j)
        for (int k = 2; k <= conj.part(j); ++k) csize *= k;
      CHECK(row_stabilizer(tab).size() == rsize);
      CHECK(column_stabilizer(tab).size() == csize);
    }
}

TEST_CASE("young symmetrizer of extreme shapes") {
  const GroupAlgebraElement sym = young_symmetrizer(row_major_tableau(Partition({4})));
  CHECK(sym.term_count() == 24);
  for (const auto& [p, c] : sym.terms()) CHECK(c == 1);

  const GroupAlgebraElement alt = young_symmetrizer(row_major_tableau(Partition({1, 1, 1, 1})));
  CHECK(alt.term_count() == 24);
  for (const auto& [p, c] : alt.terms()) CHECK(c == sign(p));
}

TEST_CASE("young symmetrizer takes value 1 at the identity") {
  std::mt19937 rng(17);
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      CHECK(evaluate(young_symmetrizer(row_major_tableau(shape)), Permutation::identity(n)) == 1);
      for (int trial = 0; trial < 2; ++trial) {
        // random filling: relabel the row-major tableau by a random permutation
        const Tableau t = relabeled(row_major_tableau(shape), random_permutation(n, rng));
        CHECK(evaluate(young_symmetrizer(t), Permutation::identity(n)) == 1);
      }
    }
}

TEST_CASE("young symmetrizer is a multiple of an idempotent") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      const GroupAlgebraElement e = young_symmetrizer(row_major_tableau(shape));
      GroupAlgebraElement scaled = e;
      scaled.scale(Rational(factorial(n), Int(dimension(shape))));
      CHECK(convolve(e, e) == scaled);
    }
}

TEST_CASE("symmetrizer average reproduces classical characters") {
  const GroupAlgebraElement triv = character_via_symmetrizer(Partition({4}));
  for_each_permutation(4, [&](const Permutation& p) { CHECK(evaluate(triv, p) == 1); });

  const GroupAlgebraElement sgn = character_via_symmetrizer(Partition({1, 1, 1}));
  for_each_permutation(3, [&](const Permutation& p) { CHECK(evaluate(sgn, p) == sign(p)); });

  const GroupAlgebraElement chi21 = character_via_symmetrizer(Partition({2, 1}));
  CHECK(evaluate(chi21, Permutation::identity(3)) == 2);
  CHECK(evaluate(chi21, parse_permutation("(1 2)", 3)) == 0);
  CHECK(evaluate(chi21, parse_permutation("(1 2 3)", 3)) == -1);

  CHECK_THROWS_WITH(character_via_symmetrizer(Partition({7})), "oracle scale exceeded");
}

TEST_CASE("symmetrizer average agrees with the border-strip recursion") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      const GroupAlgebraElement chi = character_via_symmetrizer(lam);
      for (const auto& [mc, rep] : enumerate_marked_class_reps(n))
        CHECK(evaluate(chi, rep) == mn_character(lam, mc.cycle_type));
    }
}

TEST_CASE("stabilizer average gives the generalized character") {
  const Partition lam({2, 1}), mu1({1, 1}), mu2({2});
  const GroupAlgebraElement phi1 = gen_char_via_travis(lam, mu1);
  const GroupAlgebraElement phi2 = gen_char_via_travis(lam, mu2);
  CHECK(evaluate(phi1, Permutation::identity(3)) == 1);
  CHECK(evaluate(phi2, Permutation::identity(3)) == 1);
  CHECK(evaluate(phi1, parse_permutation("(1 2)", 3)) == Rational(1, 2));
  CHECK(evaluate(phi2, parse_permutation("(1 2)", 3)) == Rational(-1, 2));
  CHECK_THROWS_WITH(gen_char_via_travis(Partition({4, 2}), Partition({4, 1})),
                    "oracle scale exceeded");
}

TEST_CASE("generalized character is normalized at the identity") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& [lam, mu] : covering_pairs(n))
      CHECK(evaluate(gen_char_via_travis(lam, mu), Permutation::identity(n)) == 1);
}

TEST_CASE("generalized character is invariant under conjugation fixing 1") {
  std::mt19937 rng(19);
  for (int n = 2; n <= 5; ++n)
    for (const auto& [lam, mu] : covering_pairs(n)) {
      const GroupAlgebraElement phi = gen_char_via_travis(lam, mu);
      for (int trial = 0; trial < 3; ++trial)
        CHECK(conjugate_by(phi, random_fixing_one(n, rng)) == phi);
    }
}

TEST_CASE("generalized character does not depend on the tableau") {
  std::mt19937 rng(23);
  for (int n = 2; n <= 5; ++n)
    for (const auto& [lam, mu] : covering_pairs(n)) {
      const GroupAlgebraElement canonical = gen_char_via_travis(lam, mu);
      for (int trial = 0; trial < 2; ++trial) {
        const Tableau t = random_marked_tableau(lam, mu, rng);
        CHECK(gen_char_via_travis(lam, mu, t) == canonical);
      }
    }
}
