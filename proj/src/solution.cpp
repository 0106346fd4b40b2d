#include "ybe/solution.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "ybe/error.hpp"

namespace ybe {

int FiniteSolution::gamma_of(int y, int x) const {
  return sigma[static_cast<size_t>(sigma[static_cast<size_t>(x)](y))].inverse()(x);
}

Permutation FiniteSolution::gamma(int y) const {
  std::vector<int> img(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) img[static_cast<size_t>(x)] = gamma_of(y, x);
  return Permutation(std::move(img));
}

std::pair<int, int> FiniteSolution::apply_r(int x, int y) const {
  return {sigma[static_cast<size_t>(x)](y), gamma_of(y, x)};
}

FiniteSolution validate_solution(int n, std::vector<Permutation> sigma) {
  if (n <= 0 || static_cast<int>(sigma.size()) != n)
    throw ValidationError("parse-error", "need one sigma permutation per point", {n});
  for (const auto &p : sigma)
    if (p.degree() != n)
      throw ValidationError("degree-mismatch", "sigma degree mismatch", {p.degree(), n});

  FiniteSolution s;
  s.n = n;
  s.sigma = std::move(sigma);

  // Direct route: r^2 = id on pairs, braid relation on triples.
  bool direct_ok = true;
  std::string direct_code;
  std::vector<int> direct_witness;
  for (int x = 0; x < n && direct_ok; ++x)
    for (int y = 0; y < n && direct_ok; ++y) {
      auto [u, v] = s.apply_r(x, y);
      if (s.apply_r(u, v) != std::pair<int, int>{x, y}) {
        direct_ok = false;
        direct_code = "involution-failure";
        direct_witness = {x, y};
      }
    }
  auto r1 = [&](std::array<int, 3> t) {
    auto [a, b] = s.apply_r(t[0], t[1]);
    return std::array<int, 3>{a, b, t[2]};
  };
  auto r2 = [&](std::array<int, 3> t) {
    auto [a, b] = s.apply_r(t[1], t[2]);
    return std::array<int, 3>{t[0], a, b};
  };
  for (int x = 0; x < n && direct_ok; ++x)
    for (int y = 0; y < n && direct_ok; ++y)
      for (int z = 0; z < n && direct_ok; ++z) {
        std::array<int, 3> t{x, y, z};
        if (r1(r2(r1(t))) != r2(r1(r2(t)))) {
          direct_ok = false;
          direct_code = "braid-failure";
          direct_witness = {x, y, z};
        }
      }

  // Criterion route: r^2 = id plus
  // sigma_x sigma_{sigma_x^{-1}(y)} = sigma_y sigma_{sigma_y^{-1}(x)}.
  bool criterion_ok = true;
  for (int x = 0; x < n && criterion_ok; ++x) {
    Permutation sx_inv = s.sigma_of(x).inverse();
    for (int y = 0; y < n && criterion_ok; ++y) {
      Permutation lhs = s.sigma_of(x) * s.sigma_of(sx_inv(y));
      Permutation rhs = s.sigma_of(y) * s.sigma_of(s.sigma_of(y).inverse()(x));
      if (!(lhs == rhs)) criterion_ok = false;
      auto [u, v] = s.apply_r(x, y);
      if (s.apply_r(u, v) != std::pair<int, int>{x, y}) criterion_ok = false;
    }
  }

  if (direct_ok != criterion_ok)
    throw internal_error("direct and criterion validation verdicts disagree");
  if (!direct_ok) throw ValidationError(direct_code, "not a solution", direct_witness);

  // Left non-degeneracy follows for finite carriers; check it anyway.
  for (int y = 0; y < n; ++y) {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
      int g = s.gamma_of(y, x);
      if (seen[static_cast<size_t>(g)]) throw internal_error("derived gamma not bijective", {y, x});
      seen[static_cast<size_t>(g)] = 1;
    }
  }
  return s;
}

FiniteSolution validate_solution_rows(int n, const std::vector<std::vector<int>> &rows) {
  std::vector<Permutation> sigma;
  sigma.reserve(rows.size());
  for (const auto &r : rows) sigma.push_back(Permutation(r));
  return validate_solution(n, std::move(sigma));
}

bool is_square_free(const FiniteSolution &s) {
  for (int x = 0; x < s.n; ++x)
    if (s.sigma_of(x)(x) != x) return false;
  return true;
}

RetractionStep retract(const FiniteSolution &s) {
  RetractionStep step;
  step.projection.assign(static_cast<size_t>(s.n), -1);
  std::map<std::vector<int>, int> class_of;
  for (int x = 0; x < s.n; ++x) {
    auto [it, fresh] = class_of.insert({s.sigma_of(x).images(), static_cast<int>(step.classes.size())});
    if (fresh) step.classes.push_back({});
    step.projection[static_cast<size_t>(x)] = it->second;
    step.classes[static_cast<size_t>(it->second)].push_back(x);
  }

  const int k = static_cast<int>(step.classes.size());
  std::vector<std::vector<int>> qsigma(static_cast<size_t>(k),
                                       std::vector<int>(static_cast<size_t>(k), -1));
  // sigma~_[x]([y]) = [sigma_x(y)]; must not depend on the representatives.
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int cx = step.projection[static_cast<size_t>(x)];
      int cy = step.projection[static_cast<size_t>(y)];
      int img = step.projection[static_cast<size_t>(s.sigma_of(x)(y))];
      int &slot = qsigma[static_cast<size_t>(cx)][static_cast<size_t>(cy)];
      if (slot == -1)
        slot = img;
      else if (slot != img)
        throw internal_error("retract quotient is not well-defined", {x, y});
    }
  step.quotient = validate_solution_rows(k, qsigma);

  if (!solution_hom_check(step.projection, s, step.quotient))
    throw internal_error("retract projection is not a homomorphism");
  return step;
}

MplResult mpl(const FiniteSolution &s) {
  MplResult res;
  FiniteSolution cur = s;
  int level = 0;
  while (cur.n > 1) {
    RetractionStep step = retract(cur);
    if (step.quotient.n == cur.n) {
      res.finite = false;
      res.stable_size = cur.n;
      res.level = level;
      return res;
    }
    cur = std::move(step.quotient);
    ++level;
  }
  res.finite = true;
  res.level = level;
  res.stable_size = 1;
  return res;
}

WitnessedClosure yb_group(const FiniteSolution &s, std::size_t cap) {
  std::vector<std::vector<int>> wit;
  for (int x = 0; x < s.n; ++x) {
    std::vector<int> e(static_cast<size_t>(s.n), 0);
    e[static_cast<size_t>(x)] = 1;
    wit.push_back(std::move(e));
  }
  return closure_with_witnesses(s.sigma, wit, cap);
}

FiniteSolution invariant_subset_restriction(const FiniteSolution &s, const std::vector<int> &subset) {
  std::vector<int> ys = subset;
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  if (ys.empty()) throw ValidationError("not-invariant", "empty subset");
  std::vector<int> pos(static_cast<size_t>(s.n), -1);
  for (size_t i = 0; i < ys.size(); ++i) {
    if (ys[i] < 0 || ys[i] >= s.n)
      throw ValidationError("not-invariant", "subset point out of range", {ys[i]});
    pos[static_cast<size_t>(ys[i])] = static_cast<int>(i);
  }
  for (int x = 0; x < s.n; ++x)
    for (int y : ys) {
      if (pos[static_cast<size_t>(s.sigma_of(x)(y))] < 0)
        throw ValidationError("not-invariant", "subset not closed under sigma", {x, y});
      if (pos[static_cast<size_t>(s.gamma_of(x, y))] < 0)
        throw ValidationError("not-invariant", "subset not closed under gamma", {x, y});
    }

  const int k = static_cast<int>(ys.size());
  std::vector<std::vector<int>> rows(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          pos[static_cast<size_t>(s.sigma_of(ys[static_cast<size_t>(i)])(ys[static_cast<size_t>(j)]))];
  return validate_solution_rows(k, rows);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_decomposition(
    const FiniteSolution &s) {
  // Union-find over the action of all sigma_x and gamma_x.
  std::vector<int> parent(static_cast<size_t>(s.n));
  for (int i = 0; i < s.n; ++i) parent[static_cast<size_t>(i)] = i;
  auto find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      unite(y, s.sigma_of(x)(y));
      unite(y, s.gamma_of(x, y));
    }
  int root0 = find(0);
  std::vector<int> first, rest;
  for (int x = 0; x < s.n; ++x) (find(x) == root0 ? first : rest).push_back(x);
  if (rest.empty()) return std::nullopt;
  return std::make_pair(first, rest);
}

bool solution_hom_check(const std::vector<int> &f, const FiniteSolution &s, const FiniteSolution &t,
                        std::vector<int> *witness) {
  if (static_cast<int>(f.size()) != s.n) return false;
  std::vector<char> hit(static_cast<size_t>(t.n), 0);
  for (int v : f) {
    if (v < 0 || v >= t.n) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  for (char h : hit)
    if (!h) return false;  // must be onto
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      auto [u, v] = s.apply_r(x, y);
      auto [tu, tv] = t.apply_r(f[static_cast<size_t>(x)], f[static_cast<size_t>(y)]);
      if (f[static_cast<size_t>(u)] != tu || f[static_cast<size_t>(v)] != tv) {
        if (witness) *witness = {x, y};
        return false;
      }
    }
  return true;
}

std::vector<int> push_forward_retract(const std::vector<int> &f, const FiniteSolution &s,
                                      const FiniteSolution &t) {
  std::vector<int> w;
  if (!solution_hom_check(f, s, t, &w))
    throw ValidationError("not-homomorphism", "map is not an onto solution homomorphism", w);
  RetractionStep rs = retract(s), rt = retract(t);
  std::vector<int> induced(static_cast<size_t>(rs.quotient.n), -1);
  for (int x = 0; x < s.n; ++x) {
    int from = rs.projection[static_cast<size_t>(x)];
    int to = rt.projection[static_cast<size_t>(f[static_cast<size_t>(x)])];
    if (induced[static_cast<size_t>(from)] == -1)
      induced[static_cast<size_t>(from)] = to;
    else if (induced[static_cast<size_t>(from)] != to)
      throw internal_error("induced retract map is not well-defined", {x});
  }
  // commuting square and homomorphism property
  for (int x = 0; x < s.n; ++x)
    if (induced[static_cast<size_t>(rs.projection[static_cast<size_t>(x)])] !=
        rt.projection[static_cast<size_t>(f[static_cast<size_t>(x)])])
      throw internal_error("retract square does not commute", {x});
  if (!solution_hom_check(induced, rs.quotient, rt.quotient))
    throw internal_error("induced retract map is not a homomorphism");
  return induced;
}

namespace {

bool extend_solution_iso(const FiniteSolution &s, const FiniteSolution &t, std::vector<int> &f,
                         std::vector<char> &used, int next) {
  const int n = s.n;
  if (next == n) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (f[static_cast<size_t>(s.sigma_of(x)(y))] !=
            t.sigma_of(f[static_cast<size_t>(x)])(f[static_cast<size_t>(y)]))
          return false;
    return true;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[static_cast<size_t>(cand)]) continue;
    f[static_cast<size_t>(next)] = cand;
    used[static_cast<size_t>(cand)] = 1;
    bool ok = true;
    // check all constraints whose three participants are assigned
    for (int x = 0; x <= next && ok; ++x)
      for (int y = 0; y <= next && ok; ++y) {
        int img = s.sigma_of(x)(y);
        if (img > next) continue;
        ok = f[static_cast<size_t>(img)] ==
             t.sigma_of(f[static_cast<size_t>(x)])(f[static_cast<size_t>(y)]);
      }
    if (ok && extend_solution_iso(s, t, f, used, next + 1)) return true;
    used[static_cast<size_t>(cand)] = 0;
    f[static_cast<size_t>(next)] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> solution_isomorphic(const FiniteSolution &s,
                                                    const FiniteSolution &t) {
  if (s.n != t.n) return std::nullopt;
  std::vector<int> f(static_cast<size_t>(s.n), -1);
  std::vector<char> used(static_cast<size_t>(s.n), 0);
  if (extend_solution_iso(s, t, f, used, 0)) return f;
  return std::nullopt;
}

}  // namespace ybe
