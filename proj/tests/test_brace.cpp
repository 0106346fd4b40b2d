#include <doctest.h>

#include <set>

#include "ybe/brace.hpp"
#include "ybe/constructions.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/error.hpp"

using namespace ybe;

TEST_CASE("trivial brace on Z4 is two-sided with identity lambdas") {
  FiniteBrace b = trivial_brace(cyclic_group(4));
  CHECK(b.side == BraceSide::TwoSided);
  for (int a = 0; a < 4; ++a) CHECK(lambda_map(b, a).is_identity());
  CHECK(socle(b).count() == 4);
}

TEST_CASE("Sym3 fixture: left brace, not right, with the documented lambdas") {
  FiniteBrace b = sym3_brace();
  CHECK(b.side == BraceSide::Left);

  // additive indexing: 0=id, 1=(0,1), 2=(0,1,2), 3=(0,2), 4=(0,2,1), 5=(1,2);
  // the three transpositions share one lambda, the double transposition
  // swapping 1<->5 and 2<->4
  Permutation expected(std::vector<int>{0, 5, 4, 3, 2, 1});
  CHECK(lambda_map(b, 1) == expected);
  CHECK(lambda_map(b, 3) == expected);
  CHECK(lambda_map(b, 5) == expected);
  CHECK(lambda_map(b, 0).is_identity());
  CHECK(lambda_map(b, 2).is_identity());
  CHECK(lambda_map(b, 4).is_identity());

  // Soc(G) = N, the rotation subgroup {id, (0,1,2), (0,2,1)}
  CHECK(socle(b).elements() == std::vector<int>{0, 2, 4});
}

TEST_CASE("lambda_a(0) = 0 on every valid left brace") {
  for (auto &[name, b] : fixture_braces())
    for (int a = 0; a < b.size(); ++a) CHECK(b.lambda_of(a, 0) == 0);
}

TEST_CASE("lambda laws hold on every fixture (Lemma-style guarantees)") {
  for (auto &[name, b] : fixture_braces()) {
    INFO(name);
    CHECK(check_lambda_homomorphism(b).ok);
  }
}

TEST_CASE("the sum identity a lambda_{a^-1}(b) = a + b") {
  for (auto &[name, b] : fixture_braces()) {
    INFO(name);
    for (int a = 0; a < b.size(); ++a)
      for (int c = 0; c < b.size(); ++c)
        CHECK(b.times(a, b.lambda_of(b.times_inv(a), c)) == b.plus(a, c));
  }
}

TEST_CASE("validate_left_brace failure modes carry distinct codes") {
  CayleyGroup z4 = cyclic_group(4);
  // additive failure: non-abelian addition
  CayleyGroup d4 = dihedral_group(4);
  CHECK_THROWS_WITH_AS(validate_left_brace(8, d4.table, d4.table),
                       doctest::Contains("abelian"), ValidationError);
  // multiplicative failure: broken table
  std::vector<int> bad = z4.table;
  bad[5] = 0;
  try {
    validate_left_brace(4, z4.table, bad);
    FAIL("expected multiplicative failure");
  } catch (const ValidationError &e) {
    CHECK(e.code() == "multiplicative-failure");
  }
  // left law failure: braces of prime order are trivial, so any conjugated
  // Z5 table that differs from the addition cannot satisfy the left law
  CayleyGroup z5 = cyclic_group(5);
  std::vector<int> tau = {0, 2, 1, 3, 4};
  std::vector<int> twisted(25);
  for (int a = 0; a < 5; ++a)
    for (int c = 0; c < 5; ++c)
      twisted[static_cast<size_t>(tau[static_cast<size_t>(a)]) * 5 + tau[static_cast<size_t>(c)]] =
          tau[static_cast<size_t>(z5.at(a, c))];
  REQUIRE(twisted != z5.table);
  try {
    validate_left_brace(5, z5.table, twisted);
    FAIL("expected left-law failure");
  } catch (const ValidationError &e) {
    CHECK(e.code() == "left-law");
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("opposite brace swaps sides and is an involution") {
  FiniteBrace s3 = sym3_brace();
  FiniteBrace op = opposite_brace(s3);
  CHECK(op.side == BraceSide::Right);
  FiniteBrace back = opposite_brace(op);
  CHECK(back.side == BraceSide::Left);
  CHECK(back.mul.table == s3.mul.table);
  CHECK(back.add.table == s3.add.table);

  FiniteBrace triv = trivial_brace(cyclic_group(4));
  CHECK(opposite_brace(triv).mul.table == triv.mul.table);
}

TEST_CASE("rho laws hold on the opposite of the Sym3 brace") {
  FiniteBrace right = opposite_brace(sym3_brace());
  CHECK(check_lambda_homomorphism(right).ok);
}

TEST_CASE("socle of a nontrivial two-sided brace is nontrivial") {
  for (auto &[name, b] : fixture_braces()) {
    if (!b.is_two_sided() || b.size() == 1) continue;
    INFO(name);
    CHECK(socle(b).count() > 1);
  }
}

TEST_CASE("ideal test: trivial and full ideals, quotients") {
  FiniteBrace s3 = sym3_brace();
  BraceSubset zero = BraceSubset::of(6, {0});
  BraceSubset full = BraceSubset::full(6);
  CHECK(is_ideal(s3, zero));
  CHECK(is_ideal(s3, full));
  CHECK(quotient_brace(s3, zero).brace.size() == 6);
  CHECK(quotient_brace(s3, full).brace.size() == 1);

  BraceSubset soc = socle(s3);
  CHECK(is_ideal(s3, soc));
  QuotientBrace q = quotient_brace(s3, soc);
  CHECK(q.brace.size() == 2);  // IYB group is cyclic of order 2

  // not an ideal: a transposition-generated multiplicative subgroup
  BraceSubset sub = BraceSubset::of(6, {0, 1});
  std::vector<int> w;
  CHECK_FALSE(is_ideal(s3, sub, &w));
  CHECK_THROWS_AS(quotient_brace(s3, sub), ValidationError);
}

TEST_CASE("coset identity Ic = I + c over all fixture ideals") {
  for (auto &[name, b] : fixture_braces()) {
    INFO(name);
    BraceSubset soc = socle(b);
    for (int c = 0; c < b.size(); ++c) {
      std::set<int> mul_coset, add_coset;
      for (int i : soc.elements()) {
        mul_coset.insert(b.times(i, c));
        add_coset.insert(b.plus(i, c));
      }
      CHECK(mul_coset == add_coset);
    }
  }
}

TEST_CASE("radical ring round trip on two-sided fixtures") {
  for (auto &[name, b] : fixture_braces()) {
    if (!b.is_two_sided()) continue;
    INFO(name);
    std::vector<int> star = to_radical_ring(b);
    FiniteBrace back = from_radical_ring(b.size(), star, b.add.table);
    CHECK(back.add.table == b.add.table);
    CHECK(back.mul.table == b.mul.table);
  }
}

TEST_CASE("zero ring gives the trivial brace") {
  const int n = 6;
  std::vector<int> star(36, 0);
  FiniteBrace b = from_radical_ring(n, star, cyclic_group(n).table);
  CHECK(b.is_two_sided());
  CHECK(b.mul.table == b.add.table);
}

TEST_CASE("to_radical_ring rejects the Sym3 brace") {
  CHECK_THROWS_AS(to_radical_ring(sym3_brace()), ValidationError);
}

TEST_CASE("from_radical_ring rejects a non-associative star") {
  // star(a,b) = a*b with a twist that breaks associativity but keeps both
  // distributive laws is hard to cook by hand; a simpler broken input:
  // multiplication table of Z4 used as star (not distributive over itself)
  CayleyGroup z4 = cyclic_group(4);
  CHECK_THROWS_AS(from_radical_ring(4, z4.table, z4.table), ValidationError);
}

TEST_CASE("semidirect product with trivial action equals the direct product") {
  FiniteBrace a = trivial_brace(cyclic_group(2));
  FiniteBrace b = trivial_brace(cyclic_group(3));
  std::vector<Permutation> eta(3, Permutation::identity(2));
  FiniteBrace direct = direct_product_brace(a, b);
  FiniteBrace semi = semidirect_product_brace(a, b, eta);
  CHECK(direct.add.table == semi.add.table);
  CHECK(direct.mul.table == semi.mul.table);
  CHECK(direct.size() == 6);
}

TEST_CASE("semidirect Z3 x| Z2 with inversion is the Sym3 fixture brace") {
  FiniteBrace n3 = trivial_brace(cyclic_group(3));
  FiniteBrace h2 = trivial_brace(cyclic_group(2));
  std::vector<Permutation> eta = {Permutation::identity(3),
                                  Permutation(std::vector<int>{0, 2, 1})};
  FiniteBrace semi = semidirect_product_brace(n3, h2, eta);
  CHECK(semi.size() == 6);
  CHECK(semi.side == BraceSide::Left);
  CHECK(brace_isomorphic(semi, sym3_brace()).has_value());
}

TEST_CASE("semidirect product rejects a non-automorphism action") {
  FiniteBrace n3 = trivial_brace(cyclic_group(3));
  FiniteBrace h2 = trivial_brace(cyclic_group(2));
  std::vector<Permutation> bad = {Permutation::identity(3),
                                  Permutation(std::vector<int>{1, 0, 2})};  // not additive
  CHECK_THROWS_AS(semidirect_product_brace(n3, h2, bad), ValidationError);
}

TEST_CASE("wreath product Z2 wr Z2 is a valid left brace of order 8") {
  FiniteBrace z2 = trivial_brace(cyclic_group(2));
  FiniteBrace w = wreath_product_brace(z2, z2);
  CHECK(w.size() == 8);
  CHECK(w.is_left());
  CHECK(group_isomorphic(w.mul, dihedral_group(4)).has_value());
}

TEST_CASE("wreath product size cap") {
  FiniteBrace z6 = trivial_brace(cyclic_group(6));
  CHECK_THROWS_AS(wreath_product_brace(z6, z6), ValidationError);
}

TEST_CASE("square-free structure report on the augmentation brace") {
  FiniteBrace aug2 = materialize_aug_brace(2);
  SquareBraceReport rep = theorem_square_report(aug2);
  CHECK(rep.nilpotency_class <= 1);  // abelian here
  CHECK(rep.statement_product_matches);
}

TEST_CASE("square-free structure report on the trivial Z3 brace") {
  FiniteBrace b = trivial_brace(cyclic_group(3));
  SquareBraceReport rep = theorem_square_report(b);
  CHECK(rep.socle_set.count() == 3);
}

TEST_CASE("square-free report on a genuinely class-2 example") {
  FiniteBrace b = class2_brace(heisenberg_group_27());
  CHECK(b.size() == 27);
  SquareBraceReport rep = theorem_square_report(b);
  CHECK(rep.nilpotency_class == 2);
  CHECK(rep.odd_part.count() == 27);
  CHECK(rep.even_part.count() == 1);
}

TEST_CASE("square-free report rejects the Sym3 brace") {
  try {
    theorem_square_report(sym3_brace());
    FAIL("expected rejection");
  } catch (const ValidationError &e) {
    CHECK(e.code() == "not-square-free-brace");
  }
}

TEST_CASE("brace isomorphism basics") {
  FiniteBrace t4 = trivial_brace(cyclic_group(4));
  FiniteBrace v4 = trivial_brace(group_direct_product(cyclic_group(2), cyclic_group(2)));
  CHECK(brace_isomorphic(t4, t4).has_value());
  CHECK_FALSE(brace_isomorphic(t4, v4).has_value());

  // relabeled copy must be isomorphic: push Sym3 brace through canonicalize
  FiniteBrace s3 = sym3_brace();
  CHECK(canonicalize(s3) == canonicalize(s3));
}
