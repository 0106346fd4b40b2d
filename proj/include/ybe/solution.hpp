#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ybe/closure.hpp"
#include "ybe/permutation.hpp"

namespace ybe {

// Finite involutive non-degenerate set-theoretic solution, stored by its
// sigma table only: r(x,y) = (sigma_x(y), gamma_y(x)) with the gamma maps
// always derived as gamma_y(x) = sigma^{-1}_{sigma_x(y)}(x).
struct FiniteSolution {
  int n = 0;
  std::vector<Permutation> sigma;

  const Permutation &sigma_of(int x) const { return sigma[static_cast<size_t>(x)]; }
  int gamma_of(int y, int x) const;  // gamma_y(x)
  Permutation gamma(int y) const;
  std::pair<int, int> apply_r(int x, int y) const;
};

// Checks the direct definition (r^2 = id on all pairs, braid relation on all
// triples) and the sigma-only criterion
//     sigma_x sigma_{sigma_x^{-1}(y)} = sigma_y sigma_{sigma_y^{-1}(x)}
// side by side; the two verdicts disagreeing is an internal error.  Failures
// are reported as braid-failure / involution-failure with a witness.
FiniteSolution validate_solution(int n, std::vector<Permutation> sigma);
FiniteSolution validate_solution_rows(int n, const std::vector<std::vector<int>> &rows);

bool is_square_free(const FiniteSolution &s);  // sigma_x(x) = x for all x

struct RetractionStep {
  std::vector<int> projection;             // x -> class index (first-discovery order)
  std::vector<std::vector<int>> classes;   // class index -> members
  FiniteSolution quotient;
};
RetractionStep retract(const FiniteSolution &s);

struct MplResult {
  bool finite = false;
  int level = 0;        // meaningful when finite
  int stable_size = 1;  // size at which retraction stopped shrinking
};
MplResult mpl(const FiniteSolution &s);

// Closure of {sigma_x} with basis-vector witnesses; the permutation group
// G(X,r) together with one structure-group vector per element.
WitnessedClosure yb_group(const FiniteSolution &s, std::size_t cap = 100000);

// Restriction to a subset closed under every sigma_x and gamma_x
// (not-invariant with witness otherwise); the result is re-validated.
FiniteSolution invariant_subset_restriction(const FiniteSolution &s, const std::vector<int> &subset);

// Orbits of the group generated by all sigma_x and gamma_x; a bipartition
// (first orbit, rest) when there are at least two orbits.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_decomposition(
    const FiniteSolution &s);

// f maps S's carrier onto T's; homomorphism condition
// (f(sigma_x(y)), f(gamma_y(x))) = r'(f(x), f(y)).
bool solution_hom_check(const std::vector<int> &f, const FiniteSolution &s,
                        const FiniteSolution &t, std::vector<int> *witness = nullptr);

// Induced map between Ret(S) and Ret(T); asserts the commuting square with
// the two projections.
std::vector<int> push_forward_retract(const std::vector<int> &f, const FiniteSolution &s,
                                      const FiniteSolution &t);

std::optional<std::vector<int>> solution_isomorphic(const FiniteSolution &s,
                                                    const FiniteSolution &t);

}  // namespace ybe
