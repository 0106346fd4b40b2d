#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/f2.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Implicit two-sided brace on the augmentation ideal R of the GF(2) group
// algebra of (Z/2)^n.  Ring elements are subsets of the group encoded as
// bitmasks of width 2^n (group element g sits at bit g, the group operation
// is XOR on indices); R consists of the even-parity masks.
struct F2IdealBrace {
  int rank = 0;          // n
  int group_order = 0;   // 2^n

  uint64_t ring_mul(uint64_t a, uint64_t b) const;            // XOR convolution
  uint64_t plus(uint64_t a, uint64_t b) const { return a ^ b; }
  uint64_t circle(uint64_t a, uint64_t b) const;               // ab + a + b
  uint64_t lambda_of(uint64_t a, uint64_t b) const;            // ab + b
  bool is_element(uint64_t a) const;                           // even parity, in range
  unsigned long long element_count() const;                    // 2^(2^n - 1)
  std::vector<uint64_t> elements() const;                      // ascending; rank <= 4
};

F2IdealBrace aug_brace(int n);  // 1 <= n <= 5

// Reduced basis of R^m, 1 <= m <= n+1, computed by iterated product spans
// from the generators g+1.  Strict descent down to R^{n+1} = 0 is asserted.
F2Matrix ideal_power_basis(int n, int m);

// Multipermutation level of the associated solution, computed structurally:
// the annihilator of R modulo R^m is verified to be R^{m-1} at every step of
// the retraction chain, so no element enumeration happens.
int aug_brace_mpl(int n);

// Dense Cayley tables; n <= 3 (order 2^(2^n-1) <= 128).
FiniteBrace materialize_aug_brace(int n);

// g |-> g-1 embeds a finite p-group into the adjoint (circle) group of the
// augmentation ideal of F_p[G].
struct AdjointEmbeddingReport {
  int p = 0;
  int group_order = 0;
  unsigned long long ring_size = 0;  // p^(|G|-1)
  bool homomorphism = false;
  bool injective = false;
};
AdjointEmbeddingReport adjoint_embedding(int p, const CayleyGroup &g);

// Two-sided brace on H = {g^2 z : g in G, z in Z(G)} for G nilpotent of
// class <= 2, with  h1^2 z1 + h2^2 z2 = (h1 h2)^2 z1 z2 [h2,h1].
FiniteBrace class2_brace(const CayleyGroup &g);

// Two-sided brace on all of G from a caller-supplied cyclic decomposition of
// G/Z: every element must factor uniquely as gens[0]^m0 ... gens[k-1]^m_{k-1} z
// with z in Z; addition adds the exponent tuples and multiplies the z parts.
FiniteBrace ault_watters_brace(const CayleyGroup &g, const std::vector<int> &z_subgroup,
                               const std::vector<int> &gens);

FiniteBrace sym3_brace();
FiniteSolution six_point_solution();
FiniteBrace trivial_brace(const CayleyGroup &abelian);

// The named braces used across sweeps and regression suites.
std::vector<std::pair<std::string, FiniteBrace>> fixture_braces();

}  // namespace ybe
