#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybe/permutation.hpp"

namespace ybe {

// Finite group given by its full Cayley table.  After validation the neutral
// element is always index 0 (inputs with a different neutral element are
// relabelled on ingest).
struct CayleyGroup {
  int n = 0;
  std::vector<int> table;  // row-major: table[a*n + b] = a*b
  std::vector<int> inv;
  int id = 0;

  int at(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
  int inverse(int a) const { return inv[static_cast<size_t>(a)]; }
  bool is_abelian() const;
};

// Checks Latin square, two-sided identity, inverses and all n^3 associativity
// triples; throws ValidationError (not-latin-square / no-identity /
// no-inverse / non-associative) with a witness on the first violation.
CayleyGroup validate_group(int n, std::vector<int> table);

int element_order(const CayleyGroup &g, int a);
int power(const CayleyGroup &g, int a, int k);  // k >= 0
int commutator(const CayleyGroup &g, int a, int b);  // a^-1 b^-1 a b

std::vector<int> center(const CayleyGroup &g);
std::vector<int> subgroup_closure(const CayleyGroup &g, std::vector<int> generators);

// Lower central series G = g0 >= g1 >= ... with g_{i+1} = [G, g_i], stopping
// when stable.  Class is the number of steps to reach {0}; nullopt when the
// series stalls above the trivial subgroup.
std::optional<int> nilpotency_class(const CayleyGroup &g);

// Backtracking table isomorphism; returns images h[a] or nullopt.
std::optional<std::vector<int>> group_isomorphic(const CayleyGroup &g, const CayleyGroup &h);

// Every automorphism of g, in deterministic (lexicographic) order.
std::vector<Permutation> all_automorphisms(const CayleyGroup &g);

// ---- builders ----------------------------------------------------------

CayleyGroup cyclic_group(int n);
CayleyGroup group_direct_product(const CayleyGroup &a, const CayleyGroup &b);
// All abelian groups of order n up to isomorphism, each labelled by its
// cyclic-factor decomposition, e.g. "Z4xZ2".
std::vector<std::pair<std::string, CayleyGroup>> abelian_groups_of_order(int n);

CayleyGroup dihedral_group(int m);  // order 2m, m >= 1
CayleyGroup quaternion_group_8();
CayleyGroup heisenberg_group_27();  // unitriangular 3x3 over Z/3

}  // namespace ybe
