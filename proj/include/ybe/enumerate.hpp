#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Lexicographically minimal relabeling of an object's tables; two objects
// have equal canonical forms exactly when they are isomorphic (exhaustive
// minimization, so this is a guarantee at these sizes, cross-checked against
// the backtracking isomorphism tests).
struct CanonicalForm {
  std::vector<int> key;
  friend bool operator==(const CanonicalForm &, const CanonicalForm &) = default;
  friend auto operator<=>(const CanonicalForm &, const CanonicalForm &) = default;
};

CanonicalForm canonicalize(const FiniteSolution &s);
CanonicalForm canonicalize(const FiniteBrace &b);

struct SolutionEnumeration {
  std::vector<FiniteSolution> solutions;  // deterministic order
  long long raw_count = 0;                // all valid sigma tables
  long long iso_count = 0;                // classes (when up_to_iso)
};
// Backtracking over sigma assignments with incremental pruning by the
// sigma-only solution criterion and partial gamma injectivity; full
// validation at the leaves.  1 <= n <= 6.  Output is identical for every
// worker count.
SolutionEnumeration enumerate_solutions(int n, bool up_to_iso, int jobs = 1);

struct BraceEnumeration {
  std::vector<FiniteBrace> braces;
  long long raw_count = 0;  // regular-subgroup functions phi on this literal table
  long long iso_count = 0;
};
// Left braces with additive group A: searches functions phi: A -> Aut(A)
// with phi(0) = id closed under phi(a + phi(a)(b)) = phi(a)phi(b), i.e.
// subgroups {(a, phi(a))} of A x| Aut(A).  |A| <= 16.
BraceEnumeration enumerate_braces(const CayleyGroup &a, bool up_to_iso);

// Enumerated braces of every order <= max_order (up to iso) plus the named
// fixtures; the corpus the theorem sweeps run over.
std::vector<std::pair<std::string, FiniteBrace>> corpus_braces(int max_order);

struct SweepResult {
  std::string check;
  long long tested = 0;
  long long counterexamples = 0;
  std::string first_witness;  // serialized counterexample, empty when none
};

// abelian G(X,r) implies finite multipermutation level, over all solutions
// with carrier size <= max_n.
SweepResult sweep_abelian_retractable(int max_n, int jobs = 1);
// square-free solutions of size >= 2 decompose into invariant parts.
SweepResult sweep_square_free_decomposable(int max_n, int jobs = 1);
// Ret(G,r) equals the solution of G/Soc(G) for every corpus brace.
SweepResult sweep_retract_socle(int max_brace_order);
// nontrivial two-sided corpus braces have Soc != {0} and retractable solutions.
SweepResult sweep_two_sided_socle(int max_brace_order);

// Census record: canonical form plus the flags square-free, decomposable,
// abelian permutation group, mpl (or irretractable size) and |G(X,r)|.
std::string census_line(const FiniteSolution &s);
std::string census_line(const FiniteBrace &b);

}  // namespace ybe
