#include "ybe/brace.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ybe/error.hpp"

namespace ybe {

std::string to_string(BraceSide side) {
  switch (side) {
    case BraceSide::Left: return "left";
    case BraceSide::Right: return "right";
    case BraceSide::TwoSided: return "two-sided";
  }
  return "?";
}

BraceSubset BraceSubset::of(int n, const std::vector<int> &elements) {
  BraceSubset s;
  s.member.assign(static_cast<size_t>(n), 0);
  for (int e : elements) s.member[static_cast<size_t>(e)] = 1;
  return s;
}

BraceSubset BraceSubset::full(int n) {
  BraceSubset s;
  s.member.assign(static_cast<size_t>(n), 1);
  return s;
}

int BraceSubset::count() const {
  int c = 0;
  for (char m : member) c += m != 0;
  return c;
}

std::vector<int> BraceSubset::elements() const {
  std::vector<int> out;
  for (int i = 0; i < carrier_size(); ++i)
    if (member[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

namespace {

enum class Require { Left, Any };

FiniteBrace validate_brace_impl(int n, std::vector<int> add_table, std::vector<int> mul_table,
                                Require require) {
  if (n <= 0 || static_cast<int>(add_table.size()) != n * n ||
      static_cast<int>(mul_table.size()) != n * n)
    throw ValidationError("parse-error", "brace tables must both be n*n", {n});

  // If the additive neutral element sits at e != 0, relabel BOTH tables by
  // the transposition (0 e) so the shared carrier convention holds.
  for (int e = 0; e < n; ++e) {
    bool neutral = true;
    for (int a = 0; a < n && neutral; ++a)
      neutral = add_table[static_cast<size_t>(e) * n + a] == a &&
                add_table[static_cast<size_t>(a) * n + e] == a;
    if (!neutral) continue;
    if (e != 0) {
      std::vector<int> m(static_cast<size_t>(n));
      std::iota(m.begin(), m.end(), 0);
      std::swap(m[0], m[static_cast<size_t>(e)]);
      auto relabel = [&](const std::vector<int> &t) {
        std::vector<int> out(t.size());
        for (int a = 0; a < n; ++a)
          for (int c = 0; c < n; ++c)
            out[static_cast<size_t>(m[static_cast<size_t>(a)]) * n + m[static_cast<size_t>(c)]] =
                m[static_cast<size_t>(t[static_cast<size_t>(a) * n + c])];
        return out;
      };
      add_table = relabel(add_table);
      mul_table = relabel(mul_table);
    }
    break;
  }

  FiniteBrace b;
  try {
    b.add = validate_group(n, std::move(add_table));
  } catch (const ValidationError &e) {
    throw ValidationError("additive-failure", std::string("additive group: ") + e.what(),
                          e.witness());
  }
  if (!b.add.is_abelian()) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (b.add.at(x, y) != b.add.at(y, x))
          throw ValidationError("additive-failure", "additive group is not abelian", {x, y});
  }
  // 1 = 0 in any brace: the multiplicative table must have its neutral
  // element at 0 already.  Relabelling only one of the two tables would
  // silently change the brace, so this is checked on the raw table.
  for (int a = 0; a < n; ++a)
    if (mul_table[static_cast<size_t>(a)] != a || mul_table[static_cast<size_t>(a) * n] != a)
      throw ValidationError("multiplicative-failure",
                            "multiplicative neutral element is not the additive neutral 0", {a});
  try {
    b.mul = validate_group(n, std::move(mul_table));
  } catch (const ValidationError &e) {
    throw ValidationError("multiplicative-failure", std::string("multiplicative group: ") + e.what(),
                          e.witness());
  }

  bool left = true, right = true;
  std::vector<int> left_witness, right_witness;
  for (int a = 0; a < n && (left || right); ++a)
    for (int bb = 0; bb < n && (left || right); ++bb)
      for (int c = 0; c < n && (left || right); ++c) {
        if (left && b.plus(b.times(a, b.plus(bb, c)), a) != b.plus(b.times(a, bb), b.times(a, c))) {
          left = false;
          left_witness = {a, bb, c};
        }
        if (right && b.plus(b.times(b.plus(a, bb), c), c) != b.plus(b.times(a, c), b.times(bb, c))) {
          right = false;
          right_witness = {a, bb, c};
        }
      }

  if (require == Require::Left && !left)
    throw ValidationError("left-law", "a(b+c)+a = ab+ac fails", left_witness);
  if (!left && !right)
    throw ValidationError("no-brace-law", "neither brace law holds", left_witness);

  b.side = left ? (right ? BraceSide::TwoSided : BraceSide::Left) : BraceSide::Right;
  return b;
}

}  // namespace

FiniteBrace validate_left_brace(int n, std::vector<int> add_table, std::vector<int> mul_table) {
  return validate_brace_impl(n, std::move(add_table), std::move(mul_table), Require::Left);
}

FiniteBrace validate_any_brace(int n, std::vector<int> add_table, std::vector<int> mul_table) {
  return validate_brace_impl(n, std::move(add_table), std::move(mul_table), Require::Any);
}

Permutation lambda_map(const FiniteBrace &b, int a) {
  std::vector<int> img(static_cast<size_t>(b.size()));
  for (int x = 0; x < b.size(); ++x) img[static_cast<size_t>(x)] = b.lambda_of(a, x);
  return Permutation(std::move(img));
}

Permutation rho_map(const FiniteBrace &b, int a) {
  std::vector<int> img(static_cast<size_t>(b.size()));
  for (int x = 0; x < b.size(); ++x) img[static_cast<size_t>(x)] = b.rho_of(a, x);
  return Permutation(std::move(img));
}

LambdaHomReport check_lambda_homomorphism(const FiniteBrace &b) {
  LambdaHomReport rep;
  const int n = b.size();
  if (b.is_left()) {
    for (int a = 0; a < n; ++a) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (b.lambda_of(a, b.plus(x, y)) != b.plus(b.lambda_of(a, x), b.lambda_of(a, y)))
            return {false, "lambda_a is not additive", {a, x, y}};
      for (int a2 = 0; a2 < n; ++a2)
        for (int x = 0; x < n; ++x)
          if (b.lambda_of(a, b.lambda_of(a2, x)) != b.lambda_of(b.times(a, a2), x))
            return {false, "lambda_a lambda_b != lambda_ab", {a, a2, x}};
    }
  }
  if (b.is_right()) {
    for (int a = 0; a < n; ++a) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (b.rho_of(a, b.plus(x, y)) != b.plus(b.rho_of(a, x), b.rho_of(a, y)))
            return {false, "rho_a is not additive", {a, x, y}};
      for (int a2 = 0; a2 < n; ++a2)
        for (int x = 0; x < n; ++x)
          if (b.rho_of(a, b.rho_of(a2, x)) != b.rho_of(b.times(a2, a), x))
            return {false, "rho_a rho_b != rho_ba", {a, a2, x}};
    }
  }
  return rep;
}

FiniteBrace opposite_brace(const FiniteBrace &b) {
  const int n = b.size();
  std::vector<int> op(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) op[static_cast<size_t>(a) * n + c] = b.times(c, a);
  FiniteBrace out = validate_any_brace(n, b.add.table, std::move(op));
  // left <-> right must swap, two-sided stays
  BraceSide expect = b.side == BraceSide::Left    ? BraceSide::Right
                     : b.side == BraceSide::Right ? BraceSide::Left
                                                  : BraceSide::TwoSided;
  if (out.side != expect) throw internal_error("opposite brace has unexpected side");
  return out;
}

BraceSubset socle(const FiniteBrace &b) {
  std::vector<int> elems;
  for (int a = 0; a < b.size(); ++a) {
    bool id = true;
    for (int x = 0; x < b.size() && id; ++x) id = b.lambda_of(a, x) == x;
    if (id) elems.push_back(a);
  }
  BraceSubset s = BraceSubset::of(b.size(), elems);
  if (!is_ideal(b, s)) throw internal_error("socle is not an ideal");
  return s;
}

bool is_ideal(const FiniteBrace &b, const BraceSubset &s, std::vector<int> *witness) {
  const int n = b.size();
  auto fail = [&](std::vector<int> w) {
    if (witness) *witness = std::move(w);
    return false;
  };
  if (s.carrier_size() != n) throw ValidationError("degree-mismatch", "subset carrier mismatch");
  if (!s.contains(0)) return fail({0});

  bool rho_ok = true, lambda_ok = true;
  std::vector<int> w_first;
  // multiplicative subgroup + normality
  bool subgroup = true;
  for (int a = 0; a < n && subgroup; ++a) {
    if (!s.contains(a)) continue;
    if (!s.contains(b.times_inv(a))) {
      subgroup = false;
      w_first = {a};
    }
    for (int c = 0; c < n && subgroup; ++c) {
      if (s.contains(c) && !s.contains(b.times(a, c))) {
        subgroup = false;
        w_first = {a, c};
      }
    }
  }
  bool normal = subgroup;
  for (int g = 0; g < n && normal; ++g)
    for (int a = 0; a < n && normal; ++a) {
      if (!s.contains(a)) continue;
      if (!s.contains(b.times(b.times(b.times_inv(g), a), g))) {
        normal = false;
        w_first = {g, a};
      }
    }
  if (!subgroup || !normal) return fail(w_first);

  std::vector<int> w_rho, w_lambda;
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) {
      if (!s.contains(x)) continue;
      if (rho_ok && !s.contains(b.rho_of(a, x))) {
        rho_ok = false;
        w_rho = {a, x};
      }
      if (lambda_ok && !s.contains(b.lambda_of(a, x))) {
        lambda_ok = false;
        w_lambda = {a, x};
      }
    }
  if (rho_ok != lambda_ok)
    throw internal_error("rho and lambda ideal tests disagree on a normal subgroup");
  if (!rho_ok) return fail(w_rho);
  return true;
}

QuotientBrace quotient_brace(const FiniteBrace &b, const BraceSubset &ideal) {
  std::vector<int> w;
  if (!is_ideal(b, ideal, &w)) throw ValidationError("not-ideal", "subset is not an ideal", w);
  const int n = b.size();

  // Coset of a = I*a; identified by its smallest member.
  std::vector<int> coset_min(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    int mn = n;
    for (int i : ideal.elements()) mn = std::min(mn, b.times(i, a));
    coset_min[static_cast<size_t>(a)] = mn;
  }
  // Coset identity Ic = I + c (guaranteed for ideals; see the quotient
  // construction in the source theory).
  for (int c = 0; c < n; ++c) {
    std::vector<char> mul_coset(static_cast<size_t>(n), 0), add_coset(static_cast<size_t>(n), 0);
    for (int i : ideal.elements()) {
      mul_coset[static_cast<size_t>(b.times(i, c))] = 1;
      add_coset[static_cast<size_t>(b.plus(i, c))] = 1;
    }
    if (mul_coset != add_coset) throw internal_error("coset identity Ic = I+c fails", {c});
  }

  std::vector<int> reps;
  std::vector<int> proj(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    if (coset_min[static_cast<size_t>(a)] == a) {
      proj[static_cast<size_t>(a)] = static_cast<int>(reps.size());
      reps.push_back(a);
    }
  for (int a = 0; a < n; ++a) proj[static_cast<size_t>(a)] = proj[static_cast<size_t>(coset_min[static_cast<size_t>(a)])];

  const int k = static_cast<int>(reps.size());
  std::vector<int> qadd(static_cast<size_t>(k) * k), qmul(static_cast<size_t>(k) * k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) {
      qadd[static_cast<size_t>(x) * k + y] = proj[static_cast<size_t>(b.plus(reps[static_cast<size_t>(x)], reps[static_cast<size_t>(y)]))];
      qmul[static_cast<size_t>(x) * k + y] = proj[static_cast<size_t>(b.times(reps[static_cast<size_t>(x)], reps[static_cast<size_t>(y)]))];
    }
  QuotientBrace out;
  out.brace = b.is_left() ? validate_left_brace(k, std::move(qadd), std::move(qmul))
                          : validate_any_brace(k, std::move(qadd), std::move(qmul));
  out.projection = std::move(proj);
  out.reps = std::move(reps);
  return out;
}

std::vector<int> to_radical_ring(const FiniteBrace &b) {
  if (!b.is_two_sided())
    throw ValidationError("not-two-sided", "only two-sided braces give radical rings");
  const int n = b.size();
  std::vector<int> star(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      star[static_cast<size_t>(a) * n + c] = b.minus(b.minus(b.times(a, c), a), c);
  return star;
}

FiniteBrace from_radical_ring(int n, std::vector<int> star_table, std::vector<int> add_table) {
  CayleyGroup add;
  try {
    add = validate_group(n, add_table);
  } catch (const ValidationError &e) {
    throw ValidationError("additive-failure", std::string("additive group: ") + e.what(),
                          e.witness());
  }
  if (!add.is_abelian())
    throw ValidationError("additive-failure", "additive group is not abelian");
  // Note: no relabelling support here; the ring zero must be element 0.
  for (int a = 0; a < n; ++a)
    if (add.at(0, a) != a)
      throw ValidationError("additive-failure", "ring zero must be element 0", {a});

  auto star = [&](int a, int c) { return star_table[static_cast<size_t>(a) * n + c]; };
  for (int v : star_table)
    if (v < 0 || v >= n) throw ValidationError("parse-error", "star entry out of range", {v});

  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d)
        if (star(star(a, c), d) != star(a, star(c, d)))
          throw ValidationError("star-not-associative", "star is not associative", {a, c, d});
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        if (star(a, add.at(c, d)) != add.at(star(a, c), star(a, d)))
          throw ValidationError("star-not-distributive", "left distributivity fails", {a, c, d});
        if (star(add.at(a, c), d) != add.at(star(a, d), star(c, d)))
          throw ValidationError("star-not-distributive", "right distributivity fails", {a, c, d});
      }

  std::vector<int> circle(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      circle[static_cast<size_t>(a) * n + c] = add.at(add.at(star(a, c), a), c);
  CayleyGroup mul;
  try {
    mul = validate_group(n, circle);
  } catch (const ValidationError &e) {
    throw ValidationError("circle-not-group", std::string("circle operation: ") + e.what(),
                          e.witness());
  }
  FiniteBrace out = validate_any_brace(n, add.table, mul.table);
  if (!out.is_two_sided())
    throw internal_error("radical ring produced a brace that is not two-sided");
  return out;
}

FiniteBrace direct_product_brace(const FiniteBrace &g, const FiniteBrace &h) {
  std::vector<Permutation> eta(static_cast<size_t>(h.size()), Permutation::identity(g.size()));
  return semidirect_product_brace(g, h, eta);
}

FiniteBrace semidirect_product_brace(const FiniteBrace &nb, const FiniteBrace &hb,
                                     const std::vector<Permutation> &eta) {
  const int nn = nb.size(), nh = hb.size();
  if (static_cast<int>(eta.size()) != nh)
    throw ValidationError("eta-invalid", "need one automorphism per element of H",
                          {static_cast<int>(eta.size()), nh});
  for (int h = 0; h < nh; ++h) {
    const Permutation &f = eta[static_cast<size_t>(h)];
    if (f.degree() != nn) throw ValidationError("eta-invalid", "eta degree mismatch", {h});
    for (int x = 0; x < nn; ++x)
      for (int y = 0; y < nn; ++y) {
        if (f(nb.plus(x, y)) != nb.plus(f(x), f(y)))
          throw ValidationError("eta-invalid", "eta(h) does not preserve addition", {h, x, y});
        if (f(nb.times(x, y)) != nb.times(f(x), f(y)))
          throw ValidationError("eta-invalid", "eta(h) does not preserve multiplication", {h, x, y});
      }
  }
  for (int h1 = 0; h1 < nh; ++h1)
    for (int h2 = 0; h2 < nh; ++h2)
      if (!(eta[static_cast<size_t>(hb.times(h1, h2))] ==
            eta[static_cast<size_t>(h1)] * eta[static_cast<size_t>(h2)]))
        throw ValidationError("eta-invalid", "eta is not multiplicative", {h1, h2});

  const int n = nn * nh;
  auto ix = [&](int g, int h) { return g * nh + h; };
  std::vector<int> add(static_cast<size_t>(n) * n), mul(static_cast<size_t>(n) * n);
  for (int g1 = 0; g1 < nn; ++g1)
    for (int h1 = 0; h1 < nh; ++h1)
      for (int g2 = 0; g2 < nn; ++g2)
        for (int h2 = 0; h2 < nh; ++h2) {
          add[static_cast<size_t>(ix(g1, h1)) * n + ix(g2, h2)] =
              ix(nb.plus(g1, g2), hb.plus(h1, h2));
          mul[static_cast<size_t>(ix(g1, h1)) * n + ix(g2, h2)] =
              ix(nb.times(g1, eta[static_cast<size_t>(h1)](g2)), hb.times(h1, h2));
        }
  return validate_left_brace(n, std::move(add), std::move(mul));
}

FiniteBrace wreath_product_brace(const FiniteBrace &g, const FiniteBrace &h) {
  const int ng = g.size(), nh = h.size();
  long long wsize = 1;
  for (int i = 0; i < nh; ++i) {
    wsize *= ng;
    if (wsize * nh > 10000)
      throw ValidationError("size-cap", "wreath product exceeds 10^4 elements");
  }
  const int nw = static_cast<int>(wsize);

  // W = functions H -> G, mixed-radix index with digit h = f(h).
  auto digit = [&](int f, int pos) {
    for (int i = 0; i < pos; ++i) f /= ng;
    return f % ng;
  };
  std::vector<int> wadd(static_cast<size_t>(nw) * nw), wmul(static_cast<size_t>(nw) * nw);
  for (int f1 = 0; f1 < nw; ++f1)
    for (int f2 = 0; f2 < nw; ++f2) {
      int sa = 0, sm = 0, base = 1;
      for (int pos = 0; pos < nh; ++pos) {
        sa += g.plus(digit(f1, pos), digit(f2, pos)) * base;
        sm += g.times(digit(f1, pos), digit(f2, pos)) * base;
        base *= ng;
      }
      wadd[static_cast<size_t>(f1) * nw + f2] = sa;
      wmul[static_cast<size_t>(f1) * nw + f2] = sm;
    }
  FiniteBrace w = validate_left_brace(nw, std::move(wadd), std::move(wmul));

  // eta(h)(f)(x) = f(h x), multiplication in H
  std::vector<Permutation> eta;
  eta.reserve(static_cast<size_t>(nh));
  for (int hh = 0; hh < nh; ++hh) {
    std::vector<int> img(static_cast<size_t>(nw));
    for (int f = 0; f < nw; ++f) {
      int out = 0, base = 1;
      for (int pos = 0; pos < nh; ++pos) {
        out += digit(f, h.times(hh, pos)) * base;
        base *= ng;
      }
      img[static_cast<size_t>(f)] = out;
    }
    eta.push_back(Permutation(std::move(img)));
  }
  return semidirect_product_brace(w, h, eta);
}

bool brace_square_free(const FiniteBrace &b) {
  for (int a = 0; a < b.size(); ++a)
    if (b.lambda_of(a, a) != a) return false;
  return true;
}

namespace {

BraceSubset socle_within(const FiniteBrace &b, const BraceSubset &part) {
  std::vector<int> out;
  for (int a : part.elements()) {
    bool id = true;
    for (int x : part.elements())
      if (b.lambda_of(a, x) != x) {
        id = false;
        break;
      }
    if (id) out.push_back(a);
  }
  return BraceSubset::of(b.size(), out);
}

BraceSubset center_within(const FiniteBrace &b, const BraceSubset &part) {
  std::vector<int> out;
  for (int a : part.elements()) {
    bool central = true;
    for (int x : part.elements())
      if (b.times(a, x) != b.times(x, a)) {
        central = false;
        break;
      }
    if (central) out.push_back(a);
  }
  return BraceSubset::of(b.size(), out);
}

BraceSubset product_set(const FiniteBrace &b, const BraceSubset &x, const BraceSubset &y) {
  std::vector<int> out;
  for (int a : x.elements())
    for (int c : y.elements()) out.push_back(b.times(a, c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return BraceSubset::of(b.size(), out);
}

}  // namespace

SquareBraceReport theorem_square_report(const FiniteBrace &b) {
  const int n = b.size();
  for (int a = 0; a < n; ++a)
    if (b.lambda_of(a, a) != a)
      throw ValidationError("not-square-free-brace", "lambda_a(a) = a fails", {a});

  SquareBraceReport rep;
  if (!b.is_two_sided())
    throw ValidationError("theorem-violation", "square-free brace must be two-sided");

  auto cls = nilpotency_class(b.mul);
  if (!cls || *cls > 2)
    throw ValidationError("theorem-violation", "multiplicative group not nilpotent of class <= 2");
  rep.nilpotency_class = *cls;

  rep.socle_set = socle(b);
  for (int a : rep.socle_set.elements())
    for (int x = 0; x < n; ++x)
      if (b.times(a, x) != b.times(x, a))
        throw ValidationError("theorem-violation", "socle element outside the centre", {a, x});

  // power identities: a^n = na and a^-1 = -a
  for (int a = 0; a < n; ++a) {
    if (b.times_inv(a) != b.neg(a))
      throw ValidationError("theorem-violation", "a^-1 != -a", {a});
    int mp = 0, ap = 0;
    for (int k = 1; k <= n; ++k) {
      mp = b.times(mp, a);
      ap = b.plus(ap, a);
      if (mp != ap) throw ValidationError("theorem-violation", "a^k != ka", {a, k});
    }
  }

  std::vector<int> even, odd;
  for (int a = 0; a < n; ++a) {
    int ord = element_order(b.mul, a);
    if (ord % 2 == 1)
      odd.push_back(a);
    if ((ord & (ord - 1)) == 0)  // power of two (1 counts for both parts)
      even.push_back(a);
  }
  rep.even_part = BraceSubset::of(n, even);
  rep.odd_part = BraceSubset::of(n, odd);
  if (!is_ideal(b, rep.even_part))
    throw ValidationError("theorem-violation", "2-part is not an ideal");
  if (!is_ideal(b, rep.odd_part))
    throw ValidationError("theorem-violation", "odd part is not an ideal");

  BraceSubset soc_odd = socle_within(b, rep.odd_part);
  BraceSubset z_odd = center_within(b, rep.odd_part);
  if (!(soc_odd == z_odd))
    throw ValidationError("theorem-violation", "Soc(G_o) != Z(G_o)");

  BraceSubset soc_even = socle_within(b, rep.even_part);
  BraceSubset z_even = center_within(b, rep.even_part);
  rep.statement_product_matches = product_set(b, soc_even, z_odd) == rep.socle_set;
  rep.alternate_product_matches = product_set(b, z_even, soc_odd) == rep.socle_set;
  if (!rep.statement_product_matches)
    throw ValidationError("theorem-violation", "Soc(G_e) Z(G_o) != Soc(T(G))");
  return rep;
}

namespace {

bool extend_brace_iso(const FiniteBrace &g, const FiniteBrace &h, std::vector<int> &f,
                      std::vector<char> &used, int next) {
  const int n = g.size();
  if (next == n) return true;
  if (f[static_cast<size_t>(next)] >= 0) return extend_brace_iso(g, h, f, used, next + 1);
  for (int cand = 0; cand < n; ++cand) {
    if (used[static_cast<size_t>(cand)]) continue;
    if (element_order(g.add, next) != element_order(h.add, cand) ||
        element_order(g.mul, next) != element_order(h.mul, cand))
      continue;
    std::vector<std::pair<int, int>> trail;
    auto assign = [&](int x, int y) -> bool {
      if (f[static_cast<size_t>(x)] >= 0) return f[static_cast<size_t>(x)] == y;
      if (used[static_cast<size_t>(y)]) return false;
      f[static_cast<size_t>(x)] = y;
      used[static_cast<size_t>(y)] = 1;
      trail.push_back({x, y});
      return true;
    };
    bool ok = assign(next, cand);
    for (size_t i = 0; ok && i < trail.size(); ++i) {
      int x = trail[i].first;
      for (int z = 0; ok && z < n; ++z) {
        if (f[static_cast<size_t>(z)] < 0) continue;
        int fx = f[static_cast<size_t>(x)], fz = f[static_cast<size_t>(z)];
        ok = assign(g.plus(x, z), h.plus(fx, fz)) && assign(g.times(x, z), h.times(fx, fz)) &&
             assign(g.times(z, x), h.times(fz, fx));
      }
    }
    if (ok && extend_brace_iso(g, h, f, used, next + 1)) return true;
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      f[static_cast<size_t>(it->first)] = -1;
      used[static_cast<size_t>(it->second)] = 0;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> brace_isomorphic(const FiniteBrace &a, const FiniteBrace &b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> f(static_cast<size_t>(a.size()), -1);
  std::vector<char> used(static_cast<size_t>(a.size()), 0);
  f[0] = 0;
  used[0] = 1;
  if (extend_brace_iso(a, b, f, used, 1)) return f;
  return std::nullopt;
}

}  // namespace ybe
