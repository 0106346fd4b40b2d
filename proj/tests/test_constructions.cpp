#include <doctest.h>

#include <bit>
#include <map>
#include <random>
#include <set>

#include "ybe/bridge.hpp"
#include "ybe/constructions.hpp"
#include "ybe/error.hpp"

using namespace ybe;

TEST_CASE("aug brace n=1: two elements, all products zero") {
  F2IdealBrace b = aug_brace(1);
  CHECK(b.element_count() == 2);
  std::vector<uint64_t> elems = b.elements();
  CHECK(elems == std::vector<uint64_t>{0b00, 0b11});
  for (uint64_t x : elems)
    for (uint64_t y : elems) CHECK(b.ring_mul(x, y) == 0);
  FiniteBrace dense = materialize_aug_brace(1);
  CHECK(dense.size() == 2);
  CHECK(dense.mul.table == dense.add.table);  // trivial brace of order 2
}

TEST_CASE("aug brace n=2: order 8, a o a = 0, square free") {
  F2IdealBrace b = aug_brace(2);
  CHECK(b.element_count() == 8);
  for (uint64_t a : b.elements()) {
    CHECK(b.circle(a, a) == 0);
    CHECK(b.lambda_of(a, a) == a);
  }
}

TEST_CASE("lambda_alpha(alpha) = alpha for every rank (sampled for 4, 5)") {
  for (int n = 1; n <= 5; ++n) {
    F2IdealBrace b = aug_brace(n);
    std::mt19937_64 rng(1000 + static_cast<unsigned>(n));
    for (int trial = 0; trial < 200; ++trial) {
      uint64_t mask = rng() & ((uint64_t{1} << b.group_order) - 1);
      if (std::popcount(mask) % 2 == 1) mask ^= 1;  // force even parity
      CHECK(b.is_element(mask));
      CHECK(b.lambda_of(mask, mask) == mask);
      CHECK(b.circle(mask, mask) == 0);
    }
  }
}

TEST_CASE("ring multiplication is commutative and associative (sampled)") {
  F2IdealBrace b = aug_brace(3);
  std::mt19937_64 rng(555);
  auto rand_elem = [&]() {
    uint64_t m = rng() & 0xff;
    if (std::popcount(m) % 2 == 1) m ^= 1;
    return m;
  };
  for (int trial = 0; trial < 500; ++trial) {
    uint64_t x = rand_elem(), y = rand_elem(), z = rand_elem();
    CHECK(b.ring_mul(x, y) == b.ring_mul(y, x));
    CHECK(b.ring_mul(b.ring_mul(x, y), z) == b.ring_mul(x, b.ring_mul(y, z)));
    CHECK(b.ring_mul(x, b.plus(y, z)) == b.plus(b.ring_mul(x, y), b.ring_mul(x, z)));
  }
}

TEST_CASE("ideal power bases: dimensions and strict descent") {
  // (n, 1) has rank 2^n - 1; (n, n) has rank 1 spanned by the all-ones
  // vector; (n, n+1) is empty
  for (int n = 1; n <= 5; ++n) {
    F2IdealBrace b = aug_brace(n);
    F2Matrix r1 = ideal_power_basis(n, 1);
    CHECK(static_cast<int>(r1.rows.size()) == b.group_order - 1);
    F2Matrix rn = ideal_power_basis(n, n);
    REQUIRE(rn.rows.size() == 1);
    uint64_t all_ones = (uint64_t{1} << b.group_order) - 1;
    CHECK(rn.rows[0] == all_ones);
    CHECK(ideal_power_basis(n, n + 1).rows.empty());

    int prev = static_cast<int>(r1.rows.size());
    for (int m = 2; m <= n; ++m) {
      int rank = static_cast<int>(ideal_power_basis(n, m).rows.size());
      CHECK(rank < prev);
      prev = rank;
    }
  }
  CHECK(ideal_power_basis(2, 1).rows.size() == 3);
}

TEST_CASE("product span of R^1 with itself matches dense enumeration for n=2") {
  F2IdealBrace b = aug_brace(2);
  F2Matrix r2 = ideal_power_basis(2, 2);
  // dense oracle: span of all 8x8 element products
  F2Matrix dense{b.group_order, {}};
  for (uint64_t x : b.elements())
    for (uint64_t y : b.elements()) dense.rows.push_back(b.ring_mul(x, y));
  CHECK(f2_same_span(r2, dense));
}

TEST_CASE("aug_brace_mpl returns the rank") {
  CHECK(aug_brace_mpl(1) == 1);
  CHECK(aug_brace_mpl(2) == 2);
  CHECK(aug_brace_mpl(3) == 3);
  CHECK(aug_brace_mpl(4) == 4);
}

TEST_CASE("structural mpl agrees with the dense computation for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    FiniteSolution s = solution_from_brace(materialize_aug_brace(n));
    MplResult m = mpl(s);
    CHECK(m.finite);
    CHECK(m.level == aug_brace_mpl(n));
  }
}

TEST_CASE("materialized aug braces: two-sided, square free, abelian 2-group") {
  for (int n = 1; n <= 3; ++n) {
    FiniteBrace dense = materialize_aug_brace(n);
    CHECK(dense.is_two_sided());
    CHECK(brace_square_free(dense));
    FiniteSolution s = solution_from_brace(dense);
    WitnessedClosure g = yb_group(s);
    CHECK(g.abelian);
    for (const Permutation &p : g.elements) CHECK((p * p).is_identity());
  }
}

TEST_CASE("aug(2) equals from_radical_ring of the same ring") {
  F2IdealBrace ring = aug_brace(2);
  std::vector<uint64_t> elems = ring.elements();
  const int n = 8;
  std::vector<int> star(64), add(64);
  std::map<uint64_t, int> idx;
  for (int i = 0; i < n; ++i) idx[elems[static_cast<size_t>(i)]] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      star[static_cast<size_t>(i) * n + j] =
          idx.at(ring.ring_mul(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]));
      add[static_cast<size_t>(i) * n + j] =
          idx.at(ring.plus(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]));
    }
  FiniteBrace via_ring = from_radical_ring(n, star, add);
  FiniteBrace direct = materialize_aug_brace(2);
  CHECK(via_ring.add.table == direct.add.table);
  CHECK(via_ring.mul.table == direct.mul.table);
}

TEST_CASE("socle of aug braces is the top nonzero ideal power") {
  for (int n = 1; n <= 3; ++n) {
    F2IdealBrace ring = aug_brace(n);
    FiniteBrace dense = materialize_aug_brace(n);
    BraceSubset soc = socle(dense);
    F2Matrix top = ideal_power_basis(n, n);
    std::vector<uint64_t> elems = ring.elements();
    // Soc(R) = {a : a*b = 0 for all b} = span of the all-ones vector = R^n
    std::set<uint64_t> soc_masks;
    for (int e : soc.elements()) soc_masks.insert(elems[static_cast<size_t>(e)]);
    std::set<uint64_t> rn_masks{0};
    for (uint64_t r : top.rows) rn_masks.insert(r);
    CHECK(soc_masks == rn_masks);
  }
}

TEST_CASE("annihilator characterization of the socle, densely for n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    F2IdealBrace ring = aug_brace(n);
    FiniteBrace dense = materialize_aug_brace(n);
    std::vector<uint64_t> elems = ring.elements();
    BraceSubset soc = socle(dense);
    for (int i = 0; i < dense.size(); ++i) {
      bool annihilates = true;
      for (uint64_t b : elems)
        if (ring.ring_mul(elems[static_cast<size_t>(i)], b) != 0) {
          annihilates = false;
          break;
        }
      CHECK(annihilates == soc.contains(i));
    }
  }
}

TEST_CASE("adjoint embedding reports") {
  AdjointEmbeddingReport z2 = adjoint_embedding(2, cyclic_group(2));
  CHECK(z2.ring_size == 2);
  CHECK(z2.homomorphism);
  CHECK(z2.injective);

  AdjointEmbeddingReport z4 = adjoint_embedding(2, cyclic_group(4));
  CHECK(z4.ring_size == 8);
  CHECK(z4.homomorphism);

  AdjointEmbeddingReport d4 = adjoint_embedding(2, dihedral_group(4));
  CHECK(d4.ring_size == 128);

  AdjointEmbeddingReport h27 = adjoint_embedding(3, heisenberg_group_27());
  CHECK(h27.ring_size == 2541865828329ULL);  // 3^26

  CHECK_THROWS_AS(adjoint_embedding(2, dihedral_group(3)), ValidationError);  // Sym3: not a p-group
  CHECK_THROWS_AS(adjoint_embedding(7, cyclic_group(7)), ValidationError);    // p outside {2,3,5}
}

TEST_CASE("class2 brace on abelian groups is the trivial brace on H") {
  FiniteBrace b = class2_brace(cyclic_group(6));
  // H = squares * whole center = whole group; sum reduces to the product
  CHECK(b.size() == 6);
  CHECK(b.mul.table == b.add.table);
}

TEST_CASE("class2 brace on dihedral-8 and quaternion-8") {
  FiniteBrace d = class2_brace(dihedral_group(4));
  CHECK(d.is_two_sided());
  CHECK(brace_square_free(d));
  CHECK(d.size() == 2);  // squares and center are both {1, r^2}

  FiniteBrace q = class2_brace(quaternion_group_8());
  CHECK(q.is_two_sided());
  CHECK(brace_square_free(q));
  CHECK(q.size() == 2);
}

TEST_CASE("class2 brace rejects groups of class 3") {
  CHECK_THROWS_AS(class2_brace(dihedral_group(8)), ValidationError);  // D8 has class 3
  CHECK_THROWS_AS(class2_brace(dihedral_group(3)), ValidationError);  // Sym3 not nilpotent
}

TEST_CASE("ault-watters brace on dihedral-8") {
  CayleyGroup d4 = dihedral_group(4);
  FiniteBrace b = ault_watters_brace(d4, {0, 2}, {1, 4});
  CHECK(b.size() == 8);
  CHECK(b.is_two_sided());
  FiniteSolution s = solution_from_brace(b);
  CHECK_FALSE(is_square_free(s));
  MplResult m = mpl(s);
  CHECK(m.finite);
  CHECK(m.level == 2);
  WitnessedClosure g = yb_group(s);
  CHECK(g.abelian);
}

TEST_CASE("ault-watters brace on the quaternion group") {
  CayleyGroup q8 = quaternion_group_8();
  // Z = {1, -1} = {0, 1} in our indexing; Q8/Z = C2 x C2 generated by [i], [j]
  FiniteBrace b = ault_watters_brace(q8, {0, 1}, {2, 4});
  CHECK(b.is_two_sided());
  BraceSubset soc = socle(b);
  CHECK(soc.contains(0));
  CHECK(soc.contains(1));
}

TEST_CASE("ault-watters rejects a bad decomposition") {
  CayleyGroup d4 = dihedral_group(4);
  // generators that do not decompose G/Z: {r} alone covers only half
  CHECK_THROWS_AS(ault_watters_brace(d4, {0, 2}, {1}), ValidationError);
  // Z not central
  CHECK_THROWS_AS(ault_watters_brace(d4, {0, 4}, {1, 4}), ValidationError);
}

TEST_CASE("trivial brace of Z6: socle is everything, mpl at most 1") {
  FiniteBrace b = trivial_brace(cyclic_group(6));
  CHECK(socle(b).count() == 6);
  MplResult m = mpl(solution_from_brace(b));
  CHECK(m.finite);
  CHECK(m.level <= 1);
}

TEST_CASE("six-point fixture: permutation group is Sym3, not nilpotent") {
  FiniteSolution s = six_point_solution();
  WitnessedClosure g = yb_group(s);
  CHECK(g.elements.size() == 6);
  CHECK_FALSE(g.abelian);
  CHECK_FALSE(nilpotency_class(g.group).has_value());
}

TEST_CASE("fixture braces all validate with expected sides") {
  for (auto &[name, b] : fixture_braces()) {
    INFO(name);
    if (name == "sym3")
      CHECK(b.side == BraceSide::Left);
    else if (name == "semidirect-sym3")
      CHECK(b.side == BraceSide::Left);
    else if (name == "wreath-Z2-Z2")
      CHECK(b.is_left());
    else
      CHECK(b.is_two_sided());
  }
}
