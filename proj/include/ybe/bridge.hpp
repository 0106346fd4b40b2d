#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Lazy evaluator of the structure-group cocycle phi: Z^X -> Sym_X attached to
// a solution.  phi(e_x) = sigma_x, phi(-e_{T(x)}) = sigma_x^{-1} with
// T(x) = sigma_x^{-1}(x), and in general
//     phi(a + phi(a)(b)) = phi(a) . phi(b).
// Evaluation descends on the L1 norm and is memoized; concurrent calls return
// the same results as serial execution (the memo is mutex-guarded).
class IStructure {
public:
  explicit IStructure(FiniteSolution base);

  const FiniteSolution &base() const { return base_; }
  const Permutation &diag() const { return diag_; }          // T
  const Permutation &diag_inv() const { return diag_inv_; }

  Permutation phi(const std::vector<int> &a) const;

  // Memo-free evaluation with a seeded random choice among eligible descent
  // coordinates; used to assert descent-order independence.
  Permutation phi_with_policy(const std::vector<int> &a, uint64_t seed) const;

  std::size_t memo_size() const;

private:
  Permutation phi_locked(const std::vector<int> &a) const;

  FiniteSolution base_;
  Permutation diag_, diag_inv_;
  mutable std::map<std::vector<int>, Permutation> memo_;
  mutable std::mutex mutex_;
};

// Structure-group element, stored as its Z^X vector only; the permutation
// component is always recomputed through phi.
struct SGElement {
  std::vector<int> vec;
  friend bool operator==(const SGElement &, const SGElement &) = default;
};

SGElement sg_mul(const IStructure &is, const SGElement &a, const SGElement &b);
SGElement sg_add(const SGElement &a, const SGElement &b);
SGElement sg_inv(const IStructure &is, const SGElement &a);
SGElement sg_basis(int n, int x);

// sigma_a := lambda_a; the associated solution of a left brace.
FiniteSolution solution_from_brace(const FiniteBrace &b);

// Solution on B x {1,2} whose retraction is the associated solution of B and
// whose permutation group is the multiplicative group of B.
struct DoubleCover {
  FiniteSolution solution;
  std::vector<std::pair<int, int>> labels;  // point -> (brace element, layer 1|2)
};
DoubleCover double_cover_solution(const FiniteBrace &b);

// Left brace structure on G(X,r): multiplication is composition, addition is
// g (+) h = phi(a_g + a_h) through the element witnesses.  Well-definedness
// is re-checked with alternative witnesses (a failure would be a bug, the
// theory guarantees it).
struct IybQuotient {
  FiniteBrace brace;        // carrier indices = closure element indices
  WitnessedClosure group;   // G(X,r) with witnesses
};
IybQuotient iyb_quotient_brace(const FiniteSolution &s, std::size_t cap = 100000);

// Ret(G,r) equals the solution associated to G/Soc(G) under the canonical
// identification (class of a |-> coset of a), not just up to isomorphism.
bool retract_equals_socle_quotient(const FiniteBrace &b);

// The lambda maps of the structure-group brace permute the basis: sigma_x
// sends e_y to a basis vector, and -(e_x)^{-1} is again a basis vector.
bool itype_basis_check(const IStructure &is);

}  // namespace ybe
