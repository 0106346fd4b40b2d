#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/group.hpp"
#include "ybe/permutation.hpp"

namespace ybe {

enum class BraceSide { Left, Right, TwoSided };

std::string to_string(BraceSide side);

// Finite brace: one carrier {0..n-1} with an abelian addition and a group
// multiplication sharing the neutral element 0.  `side` records which of the
// two brace laws actually hold; it is always computed from the tables, never
// trusted from input.
struct FiniteBrace {
  CayleyGroup add;
  CayleyGroup mul;
  BraceSide side = BraceSide::Left;

  int size() const { return add.n; }
  int plus(int a, int b) const { return add.at(a, b); }
  int neg(int a) const { return add.inverse(a); }
  int minus(int a, int b) const { return add.at(a, add.inverse(b)); }
  int times(int a, int b) const { return mul.at(a, b); }
  int times_inv(int a) const { return mul.inverse(a); }

  // lambda_a(b) = ab - a,  rho_a(b) = ba - a
  int lambda_of(int a, int b) const { return minus(times(a, b), a); }
  int rho_of(int a, int b) const { return minus(times(b, a), a); }

  bool is_left() const { return side != BraceSide::Right; }
  bool is_right() const { return side != BraceSide::Left; }
  bool is_two_sided() const { return side == BraceSide::TwoSided; }
};

// Subset of a brace carrier with deterministic element listing.
struct BraceSubset {
  std::vector<char> member;

  static BraceSubset of(int n, const std::vector<int> &elements);
  static BraceSubset full(int n);
  int carrier_size() const { return static_cast<int>(member.size()); }
  int count() const;
  bool contains(int a) const { return member[static_cast<size_t>(a)] != 0; }
  std::vector<int> elements() const;

  friend bool operator==(const BraceSubset &, const BraceSubset &) = default;
};

// Throws additive-failure / multiplicative-failure / left-law with a witness.
// Both laws are tested on all n^3 triples; `side` reflects the result.
FiniteBrace validate_left_brace(int n, std::vector<int> add_table, std::vector<int> mul_table);
// Same checks but accepts right-only braces as well (rejects tables where
// neither law holds, code no-brace-law).
FiniteBrace validate_any_brace(int n, std::vector<int> add_table, std::vector<int> mul_table);

Permutation lambda_map(const FiniteBrace &b, int a);
Permutation rho_map(const FiniteBrace &b, int a);

// lambda_a(x+y) = lambda_a(x) + lambda_a(y) and lambda_a lambda_b =
// lambda_{ab} on left braces; the mirrored rho laws on right braces.
struct LambdaHomReport {
  bool ok = true;
  std::string what;
  std::vector<int> witness;
};
LambdaHomReport check_lambda_homomorphism(const FiniteBrace &b);

FiniteBrace opposite_brace(const FiniteBrace &b);

// Soc(B) = {a : lambda_a = id}; always an ideal (checked, internal error if
// the tables contradict that).
BraceSubset socle(const FiniteBrace &b);

// Normal subgroup of the multiplicative group closed under every rho_a; the
// lambda formulation is cross-checked and disagreement is an internal error.
bool is_ideal(const FiniteBrace &b, const BraceSubset &s, std::vector<int> *witness = nullptr);

struct QuotientBrace {
  FiniteBrace brace;
  std::vector<int> projection;  // carrier index -> quotient index
  std::vector<int> reps;        // quotient index -> smallest coset member
};
// Requires an ideal; asserts the coset identity Ic = I + c before building.
QuotientBrace quotient_brace(const FiniteBrace &b, const BraceSubset &ideal);

// a*b = ab - a - b.  Only two-sided braces correspond to radical rings.
std::vector<int> to_radical_ring(const FiniteBrace &b);
// Validates star associativity, two-sided distributivity and that the circle
// operation a o b = a*b + a + b is a group, then builds the two-sided brace.
FiniteBrace from_radical_ring(int n, std::vector<int> star_table, std::vector<int> add_table);

FiniteBrace direct_product_brace(const FiniteBrace &g, const FiniteBrace &h);
// eta[h] must be a brace automorphism of n for every h, and h -> eta[h]
// multiplicative; carrier index is g*|H| + h.
FiniteBrace semidirect_product_brace(const FiniteBrace &n, const FiniteBrace &h,
                                     const std::vector<Permutation> &eta);
// G wr H on |G|^|H| * |H| points (capped at 10^4).
FiniteBrace wreath_product_brace(const FiniteBrace &g, const FiniteBrace &h);

bool brace_square_free(const FiniteBrace &b);  // lambda_a(a) = a for all a

// Structure report for braces with lambda_a(a) = a: two-sidedness, nilpotency
// class <= 2 of the multiplicative group, Soc inside the centre, the 2-part /
// odd-part ideal decomposition and the socle product identity.  Violations of
// anything the theorem guarantees throw theorem-violation; the alternate
// product form is recorded, not enforced.
struct SquareBraceReport {
  int nilpotency_class = 0;
  BraceSubset socle_set;
  BraceSubset even_part;  // elements of 2-power order
  BraceSubset odd_part;   // elements of odd order
  bool statement_product_matches = false;  // Soc(G_e)*Z(G_o) == Soc(T(G))   (enforced)
  bool alternate_product_matches = false;  // Z(G_e)*Soc(G_o) == Soc(T(G))   (recorded)
};
SquareBraceReport theorem_square_report(const FiniteBrace &b);

// Bijection preserving both tables, or nullopt.
std::optional<std::vector<int>> brace_isomorphic(const FiniteBrace &a, const FiniteBrace &b);

}  // namespace ybe
