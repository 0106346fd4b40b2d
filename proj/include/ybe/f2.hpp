#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ybe {

// Row space over GF(2).  Rows are bitvectors packed into one 64-bit word
// (width <= 64 covers everything this library builds: augmentation ideals of
// (Z/2)^n need width 2^n with n <= 5).
struct F2Matrix {
  int width = 0;
  std::vector<uint64_t> rows;
};

// Reduced row echelon form with zero rows dropped; idempotent.
F2Matrix f2_reduce(const F2Matrix &m);
int f2_rank(const F2Matrix &m);

// Span membership against a reduced matrix.
bool f2_in_span(const F2Matrix &rref, uint64_t v);
bool f2_same_span(const F2Matrix &a, const F2Matrix &b);

// Residue of v after elimination by a reduced matrix (0 iff in span).
uint64_t f2_residue(const F2Matrix &rref, uint64_t v);

// Reduced span of all pairwise products of rows of a and b.
F2Matrix f2_product_span(const F2Matrix &a, const F2Matrix &b,
                         const std::function<uint64_t(uint64_t, uint64_t)> &mul);

// Basis of {x in GF(2)^unknowns : for every row r of constraints,
// parity(x & r) = 0}.  Each constraint row has width `unknowns`.
F2Matrix f2_nullspace(const F2Matrix &constraints, int unknowns);

}  // namespace ybe
