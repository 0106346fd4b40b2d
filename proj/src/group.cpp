#include "ybe/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ybe/error.hpp"

namespace ybe {

bool CayleyGroup::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (at(a, b) != at(b, a)) return false;
  return true;
}

namespace {

std::vector<int> relabel_table(int n, const std::vector<int> &table, int e) {
  // Transpose 0 <-> e so the neutral element lands on index 0.
  std::vector<int> m(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)] = i;
  std::swap(m[0], m[static_cast<size_t>(e)]);
  std::vector<int> out(table.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[static_cast<size_t>(m[static_cast<size_t>(a)]) * n + m[static_cast<size_t>(b)]] =
          m[static_cast<size_t>(table[static_cast<size_t>(a) * n + b])];
  return out;
}

}  // namespace

CayleyGroup validate_group(int n, std::vector<int> table) {
  if (n <= 0 || static_cast<int>(table.size()) != n * n)
    throw ValidationError("parse-error", "Cayley table must be n*n over {0..n-1}", {n});
  for (int v : table)
    if (v < 0 || v >= n)
      throw ValidationError("not-latin-square", "table entry out of range", {v});

  // Latin square: every row and column is a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(static_cast<size_t>(n), 0), col(static_cast<size_t>(n), 0);
    for (int b = 0; b < n; ++b) {
      int r = table[static_cast<size_t>(a) * n + b];
      int c = table[static_cast<size_t>(b) * n + a];
      if (row[static_cast<size_t>(r)])
        throw ValidationError("not-latin-square", "repeated entry in row", {a, b, r});
      if (col[static_cast<size_t>(c)])
        throw ValidationError("not-latin-square", "repeated entry in column", {a, b, c});
      row[static_cast<size_t>(r)] = 1;
      col[static_cast<size_t>(c)] = 1;
    }
  }

  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table[static_cast<size_t>(cand) * n + a] == a && table[static_cast<size_t>(a) * n + cand] == a;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw ValidationError("no-identity", "no two-sided neutral element");

  if (e != 0) table = relabel_table(n, table, e);

  CayleyGroup g;
  g.n = n;
  g.table = std::move(table);
  g.id = 0;
  g.inv.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.at(a, b) == 0 && g.at(b, a) == 0) {
        g.inv[static_cast<size_t>(a)] = b;
        break;
      }
    }
    if (g.inv[static_cast<size_t>(a)] < 0)
      throw ValidationError("no-inverse", "element has no two-sided inverse", {a});
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
          throw ValidationError("non-associative", "associativity fails", {a, b, c});

  return g;
}

int power(const CayleyGroup &g, int a, int k) {
  int acc = 0;
  for (int i = 0; i < k; ++i) acc = g.at(acc, a);
  return acc;
}

int element_order(const CayleyGroup &g, int a) {
  int x = a, ord = 1;
  while (x != 0) {
    x = g.at(x, a);
    ++ord;
  }
  return ord;
}

int commutator(const CayleyGroup &g, int a, int b) {
  return g.at(g.at(g.inverse(a), g.inverse(b)), g.at(a, b));
}

std::vector<int> center(const CayleyGroup &g) {
  std::vector<int> z;
  for (int a = 0; a < g.n; ++a) {
    bool central = true;
    for (int b = 0; b < g.n && central; ++b) central = g.at(a, b) == g.at(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> subgroup_closure(const CayleyGroup &g, std::vector<int> generators) {
  std::vector<char> in(static_cast<size_t>(g.n), 0);
  in[0] = 1;
  std::vector<int> frontier{0};
  for (int x : generators)
    if (!in[static_cast<size_t>(x)]) {
      in[static_cast<size_t>(x)] = 1;
      frontier.push_back(x);
    }
  std::vector<int> elems = frontier;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier) {
      for (int b : elems) {
        for (int p : {g.at(a, b), g.at(b, a)}) {
          if (!in[static_cast<size_t>(p)]) {
            in[static_cast<size_t>(p)] = 1;
            next.push_back(p);
            elems.push_back(p);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::optional<int> nilpotency_class(const CayleyGroup &g) {
  std::vector<int> current(static_cast<size_t>(g.n));
  std::iota(current.begin(), current.end(), 0);
  int cls = 0;
  while (current.size() > 1) {
    std::vector<int> gens;
    for (int a = 0; a < g.n; ++a)
      for (int b : current) gens.push_back(commutator(g, a, b));
    std::vector<int> next = subgroup_closure(g, gens);
    if (next.size() == current.size()) return std::nullopt;  // stalled above {0}
    current = std::move(next);
    ++cls;
  }
  return cls;
}

namespace {

bool extend_iso(const CayleyGroup &g, const CayleyGroup &h, std::vector<int> &f,
                std::vector<char> &used, int next) {
  if (next == g.n) return true;
  if (f[static_cast<size_t>(next)] >= 0) {
    // Forced by earlier products; consistency was checked on assignment.
    return extend_iso(g, h, f, used, next + 1);
  }
  for (int cand = 0; cand < h.n; ++cand) {
    if (used[static_cast<size_t>(cand)]) continue;
    if (element_order(g, next) != element_order(h, cand)) continue;
    // Assign, then propagate products against all currently mapped elements.
    std::vector<std::pair<int, int>> assigned;  // (element, image) trail for rollback
    auto assign = [&](int x, int y) -> bool {
      if (f[static_cast<size_t>(x)] >= 0) return f[static_cast<size_t>(x)] == y;
      if (used[static_cast<size_t>(y)]) return false;
      f[static_cast<size_t>(x)] = y;
      used[static_cast<size_t>(y)] = 1;
      assigned.push_back({x, y});
      return true;
    };
    bool ok = assign(next, cand);
    // Close under products with every mapped element until stable.
    for (size_t i = 0; ok && i < assigned.size(); ++i) {
      int x = assigned[i].first;
      for (int z = 0; ok && z < g.n; ++z) {
        if (f[static_cast<size_t>(z)] < 0) continue;
        ok = assign(g.at(x, z), h.at(f[static_cast<size_t>(x)], f[static_cast<size_t>(z)])) &&
             assign(g.at(z, x), h.at(f[static_cast<size_t>(z)], f[static_cast<size_t>(x)]));
      }
    }
    if (ok && extend_iso(g, h, f, used, next + 1)) return true;
    for (auto it = assigned.rbegin(); it != assigned.rend(); ++it) {
      f[static_cast<size_t>(it->first)] = -1;
      used[static_cast<size_t>(it->second)] = 0;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> group_isomorphic(const CayleyGroup &g, const CayleyGroup &h) {
  if (g.n != h.n) return std::nullopt;
  std::vector<int> f(static_cast<size_t>(g.n), -1);
  std::vector<char> used(static_cast<size_t>(g.n), 0);
  f[0] = 0;
  used[0] = 1;
  if (extend_iso(g, h, f, used, 1)) return f;
  return std::nullopt;
}

namespace {

void collect_autos(const CayleyGroup &g, std::vector<int> &f, std::vector<char> &used, int next,
                   std::vector<Permutation> &out) {
  if (next == g.n) {
    out.push_back(Permutation(f));
    return;
  }
  if (f[static_cast<size_t>(next)] >= 0) {
    collect_autos(g, f, used, next + 1, out);
    return;
  }
  for (int cand = 0; cand < g.n; ++cand) {
    if (used[static_cast<size_t>(cand)]) continue;
    if (element_order(g, next) != element_order(g, cand)) continue;
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
      for (int z = 0; ok && z < g.n; ++z) {
        if (f[static_cast<size_t>(z)] < 0) continue;
        ok = assign(g.at(x, z), g.at(f[static_cast<size_t>(x)], f[static_cast<size_t>(z)])) &&
             assign(g.at(z, x), g.at(f[static_cast<size_t>(z)], f[static_cast<size_t>(x)]));
      }
    }
    if (ok) collect_autos(g, f, used, next + 1, out);
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      f[static_cast<size_t>(it->first)] = -1;
      used[static_cast<size_t>(it->second)] = 0;
    }
  }
}

}  // namespace

std::vector<Permutation> all_automorphisms(const CayleyGroup &g) {
  std::vector<int> f(static_cast<size_t>(g.n), -1);
  std::vector<char> used(static_cast<size_t>(g.n), 0);
  f[0] = 0;
  used[0] = 1;
  std::vector<Permutation> out;
  collect_autos(g, f, used, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

CayleyGroup cyclic_group(int n) {
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return validate_group(n, std::move(t));
}

CayleyGroup group_direct_product(const CayleyGroup &a, const CayleyGroup &b) {
  int n = a.n * b.n;
  std::vector<int> t(static_cast<size_t>(n) * n);
  auto ix = [&](int x, int y) { return x * b.n + y; };
  for (int x1 = 0; x1 < a.n; ++x1)
    for (int y1 = 0; y1 < b.n; ++y1)
      for (int x2 = 0; x2 < a.n; ++x2)
        for (int y2 = 0; y2 < b.n; ++y2)
          t[static_cast<size_t>(ix(x1, y1)) * n + ix(x2, y2)] = ix(a.at(x1, x2), b.at(y1, y2));
  return validate_group(n, std::move(t));
}

namespace {

void partitions_of(int k, std::vector<std::vector<int>> &out) {
  // Partitions of k as non-increasing sequences.
  std::vector<int> cur;
  auto rec = [&](auto &&self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, k, k);
}

}  // namespace

std::vector<std::pair<std::string, CayleyGroup>> abelian_groups_of_order(int n) {
  // Factor n, take one partition of each prime exponent, and combine the
  // corresponding direct products of cyclic prime-power groups.
  std::vector<std::pair<int, int>> factors;  // (p, e)
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      factors.push_back({p, e});
    }
  }
  if (m > 1) factors.push_back({m, 1});

  std::vector<std::pair<std::string, CayleyGroup>> result;
  if (n == 1) {
    result.push_back({"Z1", cyclic_group(1)});
    return result;
  }

  std::vector<std::vector<std::vector<int>>> parts_per_prime;
  for (auto [p, e] : factors) {
    std::vector<std::vector<int>> parts;
    partitions_of(e, parts);
    parts_per_prime.push_back(parts);
  }

  std::vector<size_t> pick(factors.size(), 0);
  while (true) {
    std::vector<int> cyclic_factors;
    for (size_t i = 0; i < factors.size(); ++i) {
      int p = factors[i].first;
      for (int exp : parts_per_prime[i][pick[i]]) {
        int q = 1;
        for (int k = 0; k < exp; ++k) q *= p;
        cyclic_factors.push_back(q);
      }
    }
    std::sort(cyclic_factors.rbegin(), cyclic_factors.rend());
    CayleyGroup g = cyclic_group(cyclic_factors[0]);
    std::string name = "Z" + std::to_string(cyclic_factors[0]);
    for (size_t i = 1; i < cyclic_factors.size(); ++i) {
      g = group_direct_product(g, cyclic_group(cyclic_factors[i]));
      name += "xZ" + std::to_string(cyclic_factors[i]);
    }
    result.push_back({name, std::move(g)});

    size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < parts_per_prime[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  std::sort(result.begin(), result.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  return result;
}

CayleyGroup dihedral_group(int m) {
  // Elements r^i s^j, index i + m*j; s r s = r^-1.
  int n = 2 * m;
  std::vector<int> t(static_cast<size_t>(n) * n);
  auto ix = [&](int i, int j) { return i + m * j; };
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          // (r^i1 s^j1)(r^i2 s^j2) = r^{i1 + (-1)^{j1} i2} s^{j1+j2}
          int i = j1 == 0 ? (i1 + i2) % m : ((i1 - i2) % m + m) % m;
          t[static_cast<size_t>(ix(i1, j1)) * n + ix(i2, j2)] = ix(i, (j1 + j2) % 2);
        }
  return validate_group(n, std::move(t));
}

CayleyGroup quaternion_group_8() {
  // {1,-1,i,-i,j,-j,k,-k} as 0..7: sign s in {0,1}, basis b in {1,i,j,k}.
  // index = 2*b + s
  auto mulbase = [](int a, int b, int &sign) -> int {
    // basis products with sign, 0=1,1=i,2=j,3=k
    static const int tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
    sign = sgn[a][b];
    return tab[a][b];
  };
  int n = 8;
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int b1 = 0; b1 < 4; ++b1)
    for (int s1 = 0; s1 < 2; ++s1)
      for (int b2 = 0; b2 < 4; ++b2)
        for (int s2 = 0; s2 < 2; ++s2) {
          int sg;
          int b = mulbase(b1, b2, sg);
          int s = (s1 + s2 + (sg < 0 ? 1 : 0)) % 2;
          t[static_cast<size_t>(2 * b1 + s1) * n + (2 * b2 + s2)] = 2 * b + s;
        }
  return validate_group(n, std::move(t));
}

CayleyGroup heisenberg_group_27() {
  // Upper unitriangular 3x3 matrices over Z/3: (a,b,c) with
  // (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2).
  int n = 27;
  auto ix = [](int a, int b, int c) { return a * 9 + b * 3 + c; };
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a1 = 0; a1 < 3; ++a1)
    for (int b1 = 0; b1 < 3; ++b1)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int a2 = 0; a2 < 3; ++a2)
          for (int b2 = 0; b2 < 3; ++b2)
            for (int c2 = 0; c2 < 3; ++c2)
              t[static_cast<size_t>(ix(a1, b1, c1)) * n + ix(a2, b2, c2)] =
                  ix((a1 + a2) % 3, (b1 + b2) % 3, (c1 + c2 + a1 * b2) % 3);
  return validate_group(n, std::move(t));
}

}  // namespace ybe
