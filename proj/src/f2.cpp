#include "ybe/f2.hpp"

#include <bit>

#include "ybe/error.hpp"

namespace ybe {

namespace {

void check_width(const F2Matrix &m) {
  if (m.width < 0 || m.width > 64)
    throw ValidationError("width-mismatch", "row width must be in [0,64]", {m.width});
  if (m.width < 64) {
    uint64_t mask = m.width == 0 ? 0 : ((uint64_t{1} << m.width) - 1);
    for (uint64_t r : m.rows)
      if (r & ~mask) throw ValidationError("width-mismatch", "row has bits beyond width");
  }
}

int leading_bit(uint64_t r) { return 63 - std::countl_zero(r); }

}  // namespace

F2Matrix f2_reduce(const F2Matrix &m) {
  check_width(m);
  F2Matrix out{m.width, {}};
  std::vector<uint64_t> rows = m.rows;
  for (int bit = m.width - 1; bit >= 0; --bit) {
    size_t src = rows.size();
    for (size_t i = 0; i < rows.size(); ++i)
      if (rows[i] >> bit & 1) {
        src = i;
        break;
      }
    if (src == rows.size()) continue;
    uint64_t p = rows[src];
    rows.erase(rows.begin() + static_cast<long>(src));
    for (auto &r : rows)
      if (r >> bit & 1) r ^= p;
    for (auto &r : out.rows)
      if (r >> bit & 1) r ^= p;
    out.rows.push_back(p);
  }
  return out;
}

int f2_rank(const F2Matrix &m) { return static_cast<int>(f2_reduce(m).rows.size()); }

uint64_t f2_residue(const F2Matrix &rref, uint64_t v) {
  for (uint64_t r : rref.rows)
    if (r != 0 && (v >> leading_bit(r) & 1)) v ^= r;
  return v;
}

bool f2_in_span(const F2Matrix &rref, uint64_t v) { return f2_residue(rref, v) == 0; }

bool f2_same_span(const F2Matrix &a, const F2Matrix &b) {
  F2Matrix ra = f2_reduce(a), rb = f2_reduce(b);
  return ra.width == rb.width && ra.rows == rb.rows;
}

F2Matrix f2_product_span(const F2Matrix &a, const F2Matrix &b,
                         const std::function<uint64_t(uint64_t, uint64_t)> &mul) {
  if (a.width != b.width)
    throw ValidationError("width-mismatch", "product span needs equal widths", {a.width, b.width});
  F2Matrix prod{a.width, {}};
  for (uint64_t x : a.rows)
    for (uint64_t y : b.rows) prod.rows.push_back(mul(x, y));
  return f2_reduce(prod);
}

F2Matrix f2_nullspace(const F2Matrix &constraints, int unknowns) {
  if (constraints.width != unknowns)
    throw ValidationError("width-mismatch", "constraint width must equal unknown count",
                          {constraints.width, unknowns});
  F2Matrix rref = f2_reduce(constraints);
  std::vector<char> is_pivot(static_cast<size_t>(unknowns) + 1, 0);
  for (uint64_t r : rref.rows)
    if (r != 0) is_pivot[static_cast<size_t>(leading_bit(r))] = 1;

  F2Matrix kernel{unknowns, {}};
  for (int free = 0; free < unknowns; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    uint64_t v = uint64_t{1} << free;
    // In full RREF the non-leading bits of every row are free columns, so the
    // pivot value is the parity of the row's overlap with the free part of v.
    for (uint64_t r : rref.rows) {
      if (r == 0) continue;
      uint64_t lead = uint64_t{1} << leading_bit(r);
      if (std::popcount(v & (r ^ lead)) % 2 == 1) v |= lead;
    }
    kernel.rows.push_back(v);
  }
  return f2_reduce(kernel);
}

}  // namespace ybe
