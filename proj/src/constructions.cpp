#include "ybe/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "ybe/bridge.hpp"
#include "ybe/error.hpp"

namespace ybe {

uint64_t F2IdealBrace::ring_mul(uint64_t a, uint64_t b) const {
  uint64_t out = 0;
  for (uint64_t x = a; x;) {
    int h = std::countr_zero(x);
    x &= x - 1;
    for (uint64_t y = b; y;) {
      int k = std::countr_zero(y);
      y &= y - 1;
      out ^= uint64_t{1} << (h ^ k);
    }
  }
  return out;
}

uint64_t F2IdealBrace::circle(uint64_t a, uint64_t b) const { return ring_mul(a, b) ^ a ^ b; }

uint64_t F2IdealBrace::lambda_of(uint64_t a, uint64_t b) const { return ring_mul(a, b) ^ b; }

bool F2IdealBrace::is_element(uint64_t a) const {
  if (group_order < 64 && (a >> group_order)) return false;
  return std::popcount(a) % 2 == 0;
}

unsigned long long F2IdealBrace::element_count() const {
  return 1ULL << (group_order - 1);
}

std::vector<uint64_t> F2IdealBrace::elements() const {
  if (rank > 4)
    throw ValidationError("size-cap", "element enumeration only supported for rank <= 4", {rank});
  std::vector<uint64_t> out;
  out.reserve(element_count());
  for (uint64_t m = 0; m < (uint64_t{1} << group_order); ++m)
    if (std::popcount(m) % 2 == 0) out.push_back(m);
  return out;
}

F2IdealBrace aug_brace(int n) {
  if (n < 1 || n > 5)
    throw ValidationError("size-cap", "augmentation-ideal brace supports 1 <= n <= 5", {n});
  F2IdealBrace b;
  b.rank = n;
  b.group_order = 1 << n;
  return b;
}

F2Matrix ideal_power_basis(int n, int m) {
  F2IdealBrace b = aug_brace(n);
  if (m < 1 || m > n + 1)
    throw ValidationError("size-cap", "ideal power out of range", {n, m});

  F2Matrix gens{b.group_order, {}};
  for (int g = 1; g < b.group_order; ++g) gens.rows.push_back((uint64_t{1} << g) | 1);
  F2Matrix current = f2_reduce(gens);
  auto mul = [&b](uint64_t x, uint64_t y) { return b.ring_mul(x, y); };
  int prev_rank = static_cast<int>(current.rows.size());
  for (int k = 2; k <= m; ++k) {
    current = f2_product_span(current, gens, mul);
    int rank = static_cast<int>(current.rows.size());
    if (k <= n && rank >= prev_rank) throw internal_error("ideal power chain failed to descend", {k});
    if (k == n + 1 && rank != 0) throw internal_error("R^{n+1} is not zero", {rank});
    prev_rank = rank;
  }
  return current;
}

int aug_brace_mpl(int n) {
  F2IdealBrace b = aug_brace(n);
  auto mul = [&b](uint64_t x, uint64_t y) { return b.ring_mul(x, y); };

  std::vector<F2Matrix> powers(static_cast<size_t>(n) + 2);
  for (int m = 1; m <= n + 1; ++m) powers[static_cast<size_t>(m)] = ideal_power_basis(n, m);

  int top = n + 1;  // first zero power (asserted inside ideal_power_basis)

  // Retraction chain: Soc(R/R^m) must be R^{m-1}/R^m, verified through the
  // annihilator {x in R : x R <= R^m} on basis coordinates.
  const F2Matrix &r1 = powers[1];
  const int dim = static_cast<int>(r1.rows.size());
  for (int m = 2; m <= top; ++m) {
    const F2Matrix &rm = powers[static_cast<size_t>(m)];
    F2Matrix constraints{dim, {}};
    for (size_t j = 0; j < r1.rows.size(); ++j) {
      // residues of u_i * v_j modulo R^m, one bit column per unknown i
      std::vector<uint64_t> residues(static_cast<size_t>(dim));
      for (int i = 0; i < dim; ++i)
        residues[static_cast<size_t>(i)] = f2_residue(rm, mul(r1.rows[static_cast<size_t>(i)], r1.rows[j]));
      for (int t = 0; t < b.group_order; ++t) {
        uint64_t row = 0;
        for (int i = 0; i < dim; ++i)
          if (residues[static_cast<size_t>(i)] >> t & 1) row |= uint64_t{1} << i;
        if (row) constraints.rows.push_back(row);
      }
    }
    F2Matrix kernel = f2_nullspace(constraints, dim);
    F2Matrix annihilator = rm;  // R^m always annihilates modulo R^m
    for (uint64_t coeffs : kernel.rows) {
      uint64_t vec = 0;
      for (int i = 0; i < dim; ++i)
        if (coeffs >> i & 1) vec ^= r1.rows[static_cast<size_t>(i)];
      annihilator.rows.push_back(vec);
    }
    if (!f2_same_span(annihilator, powers[static_cast<size_t>(m - 1)]))
      throw internal_error("Soc(R/R^m) is not R^{m-1}/R^m", {m});
  }

  int level = top - 1;
  if (level != n) throw internal_error("augmentation brace level differs from rank", {level, n});
  return level;
}

FiniteBrace materialize_aug_brace(int n) {
  if (n < 1 || n > 3)
    throw ValidationError("size-cap", "materialization supports n <= 3", {n});
  F2IdealBrace b = aug_brace(n);
  std::vector<uint64_t> elems = b.elements();
  const int sz = static_cast<int>(elems.size());
  std::map<uint64_t, int> index;
  for (int i = 0; i < sz; ++i) index[elems[static_cast<size_t>(i)]] = i;

  std::vector<int> add(static_cast<size_t>(sz) * sz), mul(static_cast<size_t>(sz) * sz);
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      add[static_cast<size_t>(i) * sz + j] = index.at(b.plus(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]));
      mul[static_cast<size_t>(i) * sz + j] = index.at(b.circle(elems[static_cast<size_t>(i)], elems[static_cast<size_t>(j)]));
    }
  FiniteBrace out = validate_left_brace(sz, std::move(add), std::move(mul));
  if (!out.is_two_sided()) throw internal_error("augmentation-ideal brace must be two-sided");
  return out;
}

AdjointEmbeddingReport adjoint_embedding(int p, const CayleyGroup &g) {
  if (p != 2 && p != 3 && p != 5)
    throw ValidationError("not-p-group", "p must be one of 2, 3, 5", {p});
  if (g.n > 32) throw ValidationError("size-cap", "group order capped at 32", {g.n});
  int m = g.n;
  while (m % p == 0) m /= p;
  if (m != 1) throw ValidationError("not-p-group", "group order is not a power of p", {g.n, p});

  AdjointEmbeddingReport rep;
  rep.p = p;
  rep.group_order = g.n;
  rep.ring_size = 1;
  for (int i = 0; i < g.n - 1; ++i) rep.ring_size *= static_cast<unsigned long long>(p);

  using Vec = std::vector<int>;  // coefficient vector over F_p, indexed by group element
  auto conv = [&](const Vec &a, const Vec &b) {
    Vec out(static_cast<size_t>(g.n), 0);
    for (int x = 0; x < g.n; ++x) {
      if (a[static_cast<size_t>(x)] == 0) continue;
      for (int y = 0; y < g.n; ++y)
        out[static_cast<size_t>(g.at(x, y))] =
            (out[static_cast<size_t>(g.at(x, y))] + a[static_cast<size_t>(x)] * b[static_cast<size_t>(y)]) % p;
    }
    return out;
  };
  auto circle = [&](const Vec &a, const Vec &b) {
    Vec out = conv(a, b);
    for (int i = 0; i < g.n; ++i)
      out[static_cast<size_t>(i)] =
          (out[static_cast<size_t>(i)] + a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)]) % p;
    return out;
  };
  auto f = [&](int x) {
    Vec v(static_cast<size_t>(g.n), 0);
    v[static_cast<size_t>(x)] = (v[static_cast<size_t>(x)] + 1) % p;
    v[0] = ((v[0] - 1) % p + p) % p;
    return v;
  };

  rep.homomorphism = true;
  for (int x = 0; x < g.n && rep.homomorphism; ++x)
    for (int y = 0; y < g.n && rep.homomorphism; ++y)
      rep.homomorphism = circle(f(x), f(y)) == f(g.at(x, y));
  rep.injective = true;
  for (int x = 0; x < g.n && rep.injective; ++x)
    for (int y = x + 1; y < g.n && rep.injective; ++y) rep.injective = !(f(x) == f(y));
  if (!rep.homomorphism || !rep.injective)
    throw internal_error("adjoint embedding failed on a p-group");
  return rep;
}

FiniteBrace class2_brace(const CayleyGroup &g) {
  auto cls = nilpotency_class(g);
  if (!cls || *cls > 2)
    throw ValidationError("not-class-2", "group is not nilpotent of class <= 2");

  std::vector<int> zc = center(g);
  std::vector<char> in_h(static_cast<size_t>(g.n), 0);
  std::vector<std::vector<std::pair<int, int>>> reps_of(static_cast<size_t>(g.n));
  for (int h = 0; h < g.n; ++h)
    for (int z : zc) {
      int u = g.at(power(g, h, 2), z);
      in_h[static_cast<size_t>(u)] = 1;
      reps_of[static_cast<size_t>(u)].push_back({h, z});
    }
  std::vector<int> carrier;
  for (int u = 0; u < g.n; ++u)
    if (in_h[static_cast<size_t>(u)]) carrier.push_back(u);
  const int k = static_cast<int>(carrier.size());
  std::vector<int> pos(static_cast<size_t>(g.n), -1);
  for (int i = 0; i < k; ++i) pos[static_cast<size_t>(carrier[static_cast<size_t>(i)])] = i;

  std::vector<int> mul(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int prod = g.at(carrier[static_cast<size_t>(i)], carrier[static_cast<size_t>(j)]);
      if (pos[static_cast<size_t>(prod)] < 0) throw internal_error("H = G^2 Z(G) is not closed");
      mul[static_cast<size_t>(i) * k + j] = pos[static_cast<size_t>(prod)];
    }

  // sum over every representative pair; all must agree
  std::vector<int> add(static_cast<size_t>(k) * k, -1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int result = -1;
      for (auto [h1, z1] : reps_of[static_cast<size_t>(carrier[static_cast<size_t>(i)])])
        for (auto [h2, z2] : reps_of[static_cast<size_t>(carrier[static_cast<size_t>(j)])]) {
          int sum = g.at(g.at(g.at(power(g, g.at(h1, h2), 2), z1), z2), commutator(g, h2, h1));
          if (pos[static_cast<size_t>(sum)] < 0)
            throw internal_error("class-2 sum leaves H", {h1, z1, h2, z2});
          if (result == -1)
            result = pos[static_cast<size_t>(sum)];
          else if (result != pos[static_cast<size_t>(sum)])
            throw internal_error("class-2 sum is representative-dependent", {h1, z1, h2, z2});
        }
      add[static_cast<size_t>(i) * k + j] = result;
    }

  FiniteBrace out = validate_left_brace(k, std::move(add), std::move(mul));
  if (!out.is_two_sided()) throw internal_error("class-2 brace must be two-sided");
  if (!brace_square_free(out)) throw internal_error("class-2 brace solution must be square free");
  // star ring H*H*H = {1}
  std::vector<int> star = to_radical_ring(out);
  auto star_at = [&](int a, int c) { return star[static_cast<size_t>(a) * k + c]; };
  for (int a = 0; a < k; ++a)
    for (int c = 0; c < k; ++c)
      for (int d = 0; d < k; ++d)
        if (star_at(star_at(a, c), d) != 0)
          throw internal_error("H*H*H != 1 in class-2 brace", {a, c, d});
  return out;
}

FiniteBrace ault_watters_brace(const CayleyGroup &g, const std::vector<int> &z_subgroup,
                               const std::vector<int> &gens) {
  auto cls = nilpotency_class(g);
  if (!cls || *cls > 2)
    throw ValidationError("not-class-2", "group is not nilpotent of class <= 2");
  // Z must be a central subgroup.
  std::vector<char> in_z(static_cast<size_t>(g.n), 0);
  for (int z : z_subgroup) in_z[static_cast<size_t>(z)] = 1;
  if (!in_z[0]) throw ValidationError("decomposition-invalid", "Z must contain the identity");
  std::vector<int> zc = center(g);
  std::vector<char> central(static_cast<size_t>(g.n), 0);
  for (int z : zc) central[static_cast<size_t>(z)] = 1;
  for (int z : z_subgroup) {
    if (!central[static_cast<size_t>(z)])
      throw ValidationError("decomposition-invalid", "Z is not central", {z});
    if (!in_z[static_cast<size_t>(g.inverse(z))])
      throw ValidationError("decomposition-invalid", "Z not closed under inverse", {z});
    for (int w : z_subgroup)
      if (!in_z[static_cast<size_t>(g.at(z, w))])
        throw ValidationError("decomposition-invalid", "Z not closed under product", {z, w});
  }

  // Order of [gens[i]] in G/Z: least d with gens[i]^d in Z.
  std::vector<int> ord;
  for (int a : gens) {
    int d = 1, x = a;
    while (!in_z[static_cast<size_t>(x)]) {
      x = g.at(x, a);
      ++d;
    }
    ord.push_back(d);
  }

  // Every element must factor uniquely as gens^m * z.
  long long tuples = static_cast<long long>(z_subgroup.size());
  for (int d : ord) tuples *= d;
  if (tuples != g.n)
    throw ValidationError("decomposition-invalid", "tuple count differs from group order",
                          {static_cast<int>(tuples), g.n});

  struct Decomp {
    std::vector<int> exps;
    int z = 0;
  };
  std::vector<Decomp> decomp_of(static_cast<size_t>(g.n));
  std::vector<char> covered(static_cast<size_t>(g.n), 0);
  std::vector<int> exps(gens.size(), 0);
  while (true) {
    int base = 0;
    for (size_t i = 0; i < gens.size(); ++i) base = g.at(base, power(g, gens[i], exps[i]));
    for (int z : z_subgroup) {
      int el = g.at(base, z);
      if (covered[static_cast<size_t>(el)])
        throw ValidationError("decomposition-invalid", "element has two factorizations", {el});
      covered[static_cast<size_t>(el)] = 1;
      decomp_of[static_cast<size_t>(el)] = {exps, z};
    }
    size_t i = 0;
    for (; i < exps.size(); ++i) {
      if (++exps[i] < ord[i]) break;
      exps[i] = 0;
    }
    if (i == exps.size()) break;
  }
  for (char c : covered)
    if (!c) throw ValidationError("decomposition-invalid", "decomposition does not cover G");

  const int n = g.n;
  std::vector<int> add(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      const Decomp &da = decomp_of[static_cast<size_t>(a)];
      const Decomp &dc = decomp_of[static_cast<size_t>(c)];
      int out = 0;
      for (size_t i = 0; i < gens.size(); ++i)
        out = g.at(out, power(g, gens[i], da.exps[i] + dc.exps[i]));
      out = g.at(out, g.at(da.z, dc.z));
      add[static_cast<size_t>(a) * n + c] = out;
    }

  FiniteBrace out = validate_left_brace(n, std::move(add), g.table);
  if (!out.is_two_sided()) throw internal_error("Ault-Watters brace must be two-sided");
  // Z sits inside the socle.
  BraceSubset soc = socle(out);
  for (int z : z_subgroup)
    if (!soc.contains(z)) throw internal_error("Z escapes the socle", {z});

  bool abelian = g.is_abelian();
  if (!abelian) {
    FiniteSolution assoc = solution_from_brace(out);
    MplResult level = mpl(assoc);
    if (!level.finite || level.level != 2)
      throw internal_error("Ault-Watters solution must have level 2");
    if (is_square_free(assoc))
      throw internal_error("Ault-Watters solution must not be square free");
  }
  return out;
}

FiniteBrace sym3_brace() {
  // Additive index k corresponds to k.(0,1) in the cyclic additive group:
  // 0=id, 1=(0,1), 2=(0,1,2), 3=(0,2), 4=(0,2,1), 5=(1,2)  (0-based points).
  std::vector<Permutation> elems = {
      Permutation::identity(3),
      Permutation::from_cycles(3, {{0, 1}}),
      Permutation::from_cycles(3, {{0, 1, 2}}),
      Permutation::from_cycles(3, {{0, 2}}),
      Permutation::from_cycles(3, {{0, 2, 1}}),
      Permutation::from_cycles(3, {{1, 2}}),
  };
  const int n = 6;
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[elems[static_cast<size_t>(i)].images()] = i;
  std::vector<int> add(static_cast<size_t>(n) * n), mul(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add[static_cast<size_t>(i) * n + j] = (i + j) % 6;
      mul[static_cast<size_t>(i) * n + j] =
          index.at((elems[static_cast<size_t>(i)] * elems[static_cast<size_t>(j)]).images());
    }
  FiniteBrace out = validate_left_brace(n, std::move(add), std::move(mul));
  if (out.side != BraceSide::Left) throw internal_error("Sym3 brace should be left-only");
  return out;
}

FiniteSolution six_point_solution() {
  // 1-based in the source: sigma_1..3 = id, sigma_4 = (1,2,3),
  // sigma_5 = (1,3,2), sigma_6 = (4,5)(2,3); shifted down to 0-based here.
  std::vector<Permutation> sigma = {
      Permutation::identity(6),
      Permutation::identity(6),
      Permutation::identity(6),
      Permutation::from_cycles(6, {{0, 1, 2}}),
      Permutation::from_cycles(6, {{0, 2, 1}}),
      Permutation::from_cycles(6, {{3, 4}, {1, 2}}),
  };
  return validate_solution(6, std::move(sigma));
}

FiniteBrace trivial_brace(const CayleyGroup &abelian) {
  if (!abelian.is_abelian())
    throw ValidationError("additive-failure", "trivial brace needs an abelian group");
  return validate_left_brace(abelian.n, abelian.table, abelian.table);
}

std::vector<std::pair<std::string, FiniteBrace>> fixture_braces() {
  std::vector<std::pair<std::string, FiniteBrace>> out;
  out.push_back({"sym3", sym3_brace()});
  out.push_back({"trivial-Z4", trivial_brace(cyclic_group(4))});
  out.push_back({"trivial-V4", trivial_brace(group_direct_product(cyclic_group(2), cyclic_group(2)))});
  out.push_back({"trivial-Z6", trivial_brace(cyclic_group(6))});
  out.push_back({"aug-1", materialize_aug_brace(1)});
  out.push_back({"aug-2", materialize_aug_brace(2)});
  out.push_back({"aug-3", materialize_aug_brace(3)});
  out.push_back({"class2-dihedral8", class2_brace(dihedral_group(4))});
  out.push_back({"class2-quaternion8", class2_brace(quaternion_group_8())});
  out.push_back({"class2-heisenberg27", class2_brace(heisenberg_group_27())});
  {
    CayleyGroup d4 = dihedral_group(4);
    // Z = Z(D4) = {1, r^2}; D4/Z = <[r]> x <[s]>
    out.push_back({"aultwatters-dihedral8", ault_watters_brace(d4, {0, 2}, {1, 4})});
  }
  {
    FiniteBrace n3 = trivial_brace(cyclic_group(3));
    FiniteBrace h2 = trivial_brace(cyclic_group(2));
    std::vector<Permutation> eta = {Permutation::identity(3),
                                    Permutation(std::vector<int>{0, 2, 1})};  // inversion on Z/3
    out.push_back({"semidirect-sym3", semidirect_product_brace(n3, h2, eta)});
  }
  {
    FiniteBrace z2 = trivial_brace(cyclic_group(2));
    out.push_back({"wreath-Z2-Z2", wreath_product_brace(z2, z2)});
  }
  return out;
}

}  // namespace ybe
