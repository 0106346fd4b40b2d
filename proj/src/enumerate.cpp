#include "ybe/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "ybe/bridge.hpp"
#include "ybe/constructions.hpp"
#include "ybe/error.hpp"
#include "ybe/io.hpp"

namespace ybe {

namespace {

std::vector<std::vector<int>> all_perm_images(int n) {
  std::vector<int> base(static_cast<size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Lexicographic comparison of the relabeled table against the current best,
// aborting as soon as the candidate is worse.
enum class KeyCmp { Better, Equal, Worse };

}  // namespace

CanonicalForm canonicalize(const FiniteSolution &s) {
  const int n = s.n;
  auto perms = all_perm_images(n);
  std::vector<int> best;
  std::vector<int> inv(static_cast<size_t>(n));
  for (const auto &p : perms) {
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(p[static_cast<size_t>(i)])] = i;
    KeyCmp cmp = best.empty() ? KeyCmp::Better : KeyCmp::Equal;
    std::vector<int> cand;
    if (cmp == KeyCmp::Better) cand.reserve(static_cast<size_t>(n) * n);
    for (int idx = 0; idx < n * n && cmp != KeyCmp::Worse; ++idx) {
      int x = idx / n, y = idx % n;
      int v = p[static_cast<size_t>(s.sigma_of(inv[static_cast<size_t>(x)])(inv[static_cast<size_t>(y)]))];
      if (cmp == KeyCmp::Equal) {
        if (v < best[static_cast<size_t>(idx)]) {
          cmp = KeyCmp::Better;
          cand.assign(best.begin(), best.begin() + idx);
          cand.push_back(v);
        } else if (v > best[static_cast<size_t>(idx)]) {
          cmp = KeyCmp::Worse;
        }
      } else {
        cand.push_back(v);
      }
    }
    if (cmp == KeyCmp::Better) best = std::move(cand);
  }
  return {std::move(best)};
}

CanonicalForm canonicalize(const FiniteBrace &b) {
  const int n = b.size();
  // isomorphisms fix the shared neutral element, so only relabelings with
  // p(0) = 0 need to be scanned
  std::vector<int> tail(static_cast<size_t>(n) - 1);
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<int> best;
  std::vector<int> p(static_cast<size_t>(n)), inv(static_cast<size_t>(n));
  do {
    p[0] = 0;
    for (int i = 1; i < n; ++i) p[static_cast<size_t>(i)] = tail[static_cast<size_t>(i - 1)];
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(p[static_cast<size_t>(i)])] = i;
    KeyCmp cmp = best.empty() ? KeyCmp::Better : KeyCmp::Equal;
    std::vector<int> cand;
    if (cmp == KeyCmp::Better) cand.reserve(2 * static_cast<size_t>(n) * n);
    for (int idx = 0; idx < 2 * n * n && cmp != KeyCmp::Worse; ++idx) {
      int table = idx / (n * n);
      int x = (idx % (n * n)) / n, y = idx % n;
      int raw = table == 0 ? b.plus(inv[static_cast<size_t>(x)], inv[static_cast<size_t>(y)])
                           : b.times(inv[static_cast<size_t>(x)], inv[static_cast<size_t>(y)]);
      int v = p[static_cast<size_t>(raw)];
      if (cmp == KeyCmp::Equal) {
        if (v < best[static_cast<size_t>(idx)]) {
          cmp = KeyCmp::Better;
          cand.assign(best.begin(), best.begin() + idx);
          cand.push_back(v);
        } else if (v > best[static_cast<size_t>(idx)]) {
          cmp = KeyCmp::Worse;
        }
      } else {
        cand.push_back(v);
      }
    }
    if (cmp == KeyCmp::Better) best = std::move(cand);
  } while (std::next_permutation(tail.begin(), tail.end()));
  return {std::move(best)};
}

namespace {

// Incremental constraint checks for the sigma-assignment search.  `assigned`
// is the number of points whose sigma is fixed; the new index is assigned-1.
bool partial_constraints_ok(const std::vector<const std::vector<int> *> &sig,
                            const std::vector<const std::vector<int> *> &sig_inv, int assigned,
                            int n) {
  int k = assigned - 1;
  // criterion pairs (x,y): sigma_x sigma_{sigma_x^-1(y)} = sigma_y sigma_{sigma_y^-1(x)}
  // check each pair whose four participating indices are all assigned and at
  // least one participant is the new index k
  for (int x = 0; x < assigned; ++x)
    for (int y = 0; y < assigned; ++y) {
      int xs = (*sig_inv[static_cast<size_t>(x)])[static_cast<size_t>(y)];
      int ys = (*sig_inv[static_cast<size_t>(y)])[static_cast<size_t>(x)];
      if (xs >= assigned || ys >= assigned) continue;
      if (x != k && y != k && xs != k && ys != k) continue;
      for (int t = 0; t < n; ++t) {
        int lhs = (*sig[static_cast<size_t>(x)])[static_cast<size_t>(
            (*sig[static_cast<size_t>(xs)])[static_cast<size_t>(t)])];
        int rhs = (*sig[static_cast<size_t>(y)])[static_cast<size_t>(
            (*sig[static_cast<size_t>(ys)])[static_cast<size_t>(t)])];
        if (lhs != rhs) return false;
      }
    }
  // partial injectivity of gamma_y(x) = sigma^{-1}_{sigma_x(y)}(x) over assigned x
  for (int y = 0; y < n; ++y) {
    unsigned seen = 0;
    for (int x = 0; x < assigned; ++x) {
      int sxy = (*sig[static_cast<size_t>(x)])[static_cast<size_t>(y)];
      if (sxy >= assigned) continue;
      int g = (*sig_inv[static_cast<size_t>(sxy)])[static_cast<size_t>(x)];
      if (seen >> g & 1u) return false;
      seen |= 1u << g;
    }
  }
  return true;
}

void solution_dfs(int n, const std::vector<std::vector<int>> &perms,
                  const std::vector<std::vector<int>> &perm_invs, std::vector<int> &choice,
                  int depth, std::vector<const std::vector<int> *> &sig,
                  std::vector<const std::vector<int> *> &sig_inv,
                  std::vector<FiniteSolution> &out) {
  if (depth == n) {
    std::vector<Permutation> sigma;
    sigma.reserve(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) sigma.push_back(Permutation(*sig[static_cast<size_t>(x)]));
    out.push_back(validate_solution(n, std::move(sigma)));  // guaranteed by the leaf constraints
    return;
  }
  for (size_t c = 0; c < perms.size(); ++c) {
    choice[static_cast<size_t>(depth)] = static_cast<int>(c);
    sig[static_cast<size_t>(depth)] = &perms[c];
    sig_inv[static_cast<size_t>(depth)] = &perm_invs[c];
    if (partial_constraints_ok(sig, sig_inv, depth + 1, n))
      solution_dfs(n, perms, perm_invs, choice, depth + 1, sig, sig_inv, out);
  }
}

}  // namespace

SolutionEnumeration enumerate_solutions(int n, bool up_to_iso, int jobs) {
  if (n < 1 || n > 6)
    throw ValidationError("size-cap", "solution enumeration supports 1 <= n <= 6", {n});
  auto perms = all_perm_images(n);
  std::vector<std::vector<int>> perm_invs;
  perm_invs.reserve(perms.size());
  for (const auto &p : perms) {
    std::vector<int> inv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(p[static_cast<size_t>(i)])] = i;
    perm_invs.push_back(std::move(inv));
  }

  // Top-level branches: the choice of sigma_0.  Workers own whole branches,
  // results are concatenated in branch order, so output never depends on the
  // worker count.
  std::vector<std::vector<FiniteSolution>> per_branch(perms.size());
  std::atomic<size_t> next_branch{0};
  auto work = [&]() {
    for (;;) {
      size_t c = next_branch.fetch_add(1);
      if (c >= perms.size()) return;
      std::vector<int> choice(static_cast<size_t>(n), -1);
      std::vector<const std::vector<int> *> sig(static_cast<size_t>(n), nullptr);
      std::vector<const std::vector<int> *> sig_inv(static_cast<size_t>(n), nullptr);
      choice[0] = static_cast<int>(c);
      sig[0] = &perms[c];
      sig_inv[0] = &perm_invs[c];
      if (partial_constraints_ok(sig, sig_inv, 1, n))
        solution_dfs(n, perms, perm_invs, choice, 1, sig, sig_inv, per_branch[c]);
    }
  };
  if (jobs <= 1 || n <= 2) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(work);
    for (auto &t : threads) t.join();
  }

  SolutionEnumeration result;
  for (auto &branch : per_branch)
    for (auto &s : branch) {
      ++result.raw_count;
      result.solutions.push_back(std::move(s));
    }
  if (up_to_iso) {
    std::set<std::vector<int>> seen;
    std::vector<FiniteSolution> classes;
    for (auto &s : result.solutions)
      if (seen.insert(canonicalize(s).key).second) classes.push_back(std::move(s));
    result.solutions = std::move(classes);
    result.iso_count = static_cast<long long>(result.solutions.size());
  }
  return result;
}

namespace {

struct BraceSearch {
  const CayleyGroup &a;
  std::vector<Permutation> auts;
  std::map<std::vector<int>, int> aut_index;
  std::vector<int> comp;  // aut composition table, comp[i*k+j] = index of auts[i]*auts[j]
  std::vector<FiniteBrace> found;

  explicit BraceSearch(const CayleyGroup &g) : a(g) {
    auts = all_automorphisms(a);
    const int k = static_cast<int>(auts.size());
    for (int i = 0; i < k; ++i) aut_index[auts[static_cast<size_t>(i)].images()] = i;
    comp.assign(static_cast<size_t>(k) * k, -1);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        comp[static_cast<size_t>(i) * k + j] =
            aut_index.at((auts[static_cast<size_t>(i)] * auts[static_cast<size_t>(j)]).images());
  }

  // phi[x] = aut index or -1.  Propagates the subgroup closure rule
  // phi(a + phi(a)(b)) = phi(a) phi(b) from every assigned pair.
  bool propagate(std::vector<int> &phi, std::vector<int> &dirty) {
    for (size_t head = 0; head < dirty.size(); ++head) {
      int x = dirty[head];
      for (int y = 0; y < a.n; ++y) {
        if (phi[static_cast<size_t>(y)] < 0) continue;
        for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
          int pi = phi[static_cast<size_t>(p)], qi = phi[static_cast<size_t>(q)];
          if (pi < 0 || qi < 0) continue;
          int c = a.at(p, auts[static_cast<size_t>(pi)](q));
          int want = comp[static_cast<size_t>(pi) * auts.size() + qi];
          int &slot = phi[static_cast<size_t>(c)];
          if (slot < 0) {
            slot = want;
            dirty.push_back(c);
          } else if (slot != want) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void dfs(std::vector<int> &phi) {
    int unassigned = -1;
    for (int x = 0; x < a.n; ++x)
      if (phi[static_cast<size_t>(x)] < 0) {
        unassigned = x;
        break;
      }
    if (unassigned < 0) {
      emit(phi);
      return;
    }
    for (int cand = 0; cand < static_cast<int>(auts.size()); ++cand) {
      std::vector<int> next = phi;
      next[static_cast<size_t>(unassigned)] = cand;
      std::vector<int> dirty{unassigned};
      if (propagate(next, dirty)) dfs(next);
    }
  }

  void emit(const std::vector<int> &phi) {
    const int n = a.n;
    std::vector<int> mul(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        mul[static_cast<size_t>(x) * n + y] =
            a.at(x, auts[static_cast<size_t>(phi[static_cast<size_t>(x)])](y));
    FiniteBrace b = validate_left_brace(n, a.table, std::move(mul));
    // round trip through the lambda maps must restore phi
    for (int x = 0; x < n; ++x)
      if (!(lambda_map(b, x) == auts[static_cast<size_t>(phi[static_cast<size_t>(x)])]))
        throw internal_error("lambda maps do not reproduce the subgroup function", {x});
    found.push_back(std::move(b));
  }
};

}  // namespace

BraceEnumeration enumerate_braces(const CayleyGroup &a, bool up_to_iso) {
  if (a.n > 16) throw ValidationError("size-cap", "brace enumeration capped at order 16", {a.n});
  if (!a.is_abelian())
    throw ValidationError("additive-failure", "additive group must be abelian");

  BraceSearch search(a);
  std::vector<int> phi(static_cast<size_t>(a.n), -1);
  phi[0] = search.aut_index.at(Permutation::identity(a.n).images());
  std::vector<int> dirty{0};
  if (!search.propagate(phi, dirty)) throw internal_error("identity seed failed to propagate");
  search.dfs(phi);

  BraceEnumeration result;
  result.raw_count = static_cast<long long>(search.found.size());
  result.braces = std::move(search.found);
  if (up_to_iso) {
    std::set<std::vector<int>> seen;
    std::vector<FiniteBrace> classes;
    for (auto &b : result.braces)
      if (seen.insert(canonicalize(b).key).second) classes.push_back(std::move(b));
    result.braces = std::move(classes);
    result.iso_count = static_cast<long long>(result.braces.size());
  }
  return result;
}

std::vector<std::pair<std::string, FiniteBrace>> corpus_braces(int max_order) {
  std::vector<std::pair<std::string, FiniteBrace>> out;
  for (int order = 1; order <= max_order; ++order) {
    for (auto &[name, group] : abelian_groups_of_order(order)) {
      BraceEnumeration bs = enumerate_braces(group, true);
      for (size_t i = 0; i < bs.braces.size(); ++i)
        out.push_back({"add-" + name + "#" + std::to_string(i), std::move(bs.braces[i])});
    }
  }
  for (auto &[name, b] : fixture_braces()) out.push_back({"fixture-" + name, b});
  return out;
}

SweepResult sweep_abelian_retractable(int max_n, int jobs) {
  SweepResult res{"abelian-retractable", 0, 0, ""};
  for (int n = 1; n <= max_n; ++n) {
    SolutionEnumeration en = enumerate_solutions(n, false, jobs);
    for (const auto &s : en.solutions) {
      WitnessedClosure g = yb_group(s);
      if (!g.abelian) continue;
      ++res.tested;
      if (!mpl(s).finite) {
        ++res.counterexamples;
        if (res.first_witness.empty()) res.first_witness = write_solution_string(s);
        return res;
      }
    }
  }
  return res;
}

SweepResult sweep_square_free_decomposable(int max_n, int jobs) {
  SweepResult res{"square-free-decomposable", 0, 0, ""};
  for (int n = 2; n <= max_n; ++n) {
    SolutionEnumeration en = enumerate_solutions(n, false, jobs);
    for (const auto &s : en.solutions) {
      if (!is_square_free(s)) continue;
      ++res.tested;
      if (!find_decomposition(s)) {
        ++res.counterexamples;
        if (res.first_witness.empty()) res.first_witness = write_solution_string(s);
        return res;
      }
    }
  }
  return res;
}

SweepResult sweep_retract_socle(int max_brace_order) {
  SweepResult res{"retract-socle", 0, 0, ""};
  for (const auto &[name, b] : corpus_braces(max_brace_order)) {
    ++res.tested;
    if (!retract_equals_socle_quotient(b)) {
      ++res.counterexamples;
      if (res.first_witness.empty()) res.first_witness = name + "\n" + write_brace_string(b);
      return res;
    }
  }
  return res;
}

SweepResult sweep_two_sided_socle(int max_brace_order) {
  SweepResult res{"two-sided-socle", 0, 0, ""};
  for (const auto &[name, b] : corpus_braces(max_brace_order)) {
    if (!b.is_two_sided() || b.size() == 1) continue;
    ++res.tested;
    bool bad = socle(b).count() <= 1 || !mpl(solution_from_brace(b)).finite;
    if (bad) {
      ++res.counterexamples;
      if (res.first_witness.empty()) res.first_witness = name + "\n" + write_brace_string(b);
      return res;
    }
  }
  return res;
}

std::string census_line(const FiniteSolution &s) {
  std::ostringstream out;
  out << "solution n=" << s.n;
  out << " sf=" << (is_square_free(s) ? 1 : 0);
  out << " dec=" << (find_decomposition(s) ? 1 : 0);
  WitnessedClosure g = yb_group(s);
  out << " abelianG=" << (g.abelian ? 1 : 0);
  MplResult m = mpl(s);
  if (m.finite)
    out << " mpl=" << m.level;
  else
    out << " irretractable=" << m.stable_size;
  out << " Gorder=" << g.elements.size();
  CanonicalForm c = canonicalize(s);
  out << " canon=";
  for (size_t i = 0; i < c.key.size(); ++i) {
    if (i) out << (i % static_cast<size_t>(s.n) == 0 ? ";" : ",");
    out << c.key[i];
  }
  return out.str();
}

std::string census_line(const FiniteBrace &b) {
  std::ostringstream out;
  out << "brace n=" << b.size();
  out << " side=" << to_string(b.side);
  out << " soc=" << socle(b).count();
  FiniteSolution s = solution_from_brace(b);
  out << " sf=" << (is_square_free(s) ? 1 : 0);
  MplResult m = mpl(s);
  if (m.finite)
    out << " mpl=" << m.level;
  else
    out << " irretractable=" << m.stable_size;
  CanonicalForm c = canonicalize(b);
  out << " canon=";
  for (size_t i = 0; i < c.key.size(); ++i) {
    if (i) out << (i % static_cast<size_t>(b.size()) == 0 ? ";" : ",");
    out << c.key[i];
  }
  return out.str();
}

}  // namespace ybe
