#include "ybe/bridge.hpp"

#include <algorithm>

#include "ybe/error.hpp"

namespace ybe {

namespace {

bool is_zero(const std::vector<int> &a) {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

}  // namespace

IStructure::IStructure(FiniteSolution base) : base_(std::move(base)) {
  std::vector<int> img(static_cast<size_t>(base_.n));
  for (int x = 0; x < base_.n; ++x) img[static_cast<size_t>(x)] = base_.sigma_of(x).inverse()(x);
  // T must be a bijection for phi(-e_y) to make sense; it always is for
  // involutive non-degenerate solutions.
  try {
    diag_ = Permutation(std::move(img));
  } catch (const ValidationError &) {
    throw internal_error("diagonal map T(x) = sigma_x^{-1}(x) is not a bijection");
  }
  diag_inv_ = diag_.inverse();
}

std::size_t IStructure::memo_size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

Permutation IStructure::phi(const std::vector<int> &a) const {
  if (static_cast<int>(a.size()) != base_.n)
    throw ValidationError("degree-mismatch", "phi argument has wrong length",
                          {static_cast<int>(a.size()), base_.n});
  std::lock_guard<std::mutex> lock(mutex_);
  return phi_locked(a);
}

Permutation IStructure::phi_locked(const std::vector<int> &a) const {
  if (is_zero(a)) return Permutation::identity(base_.n);
  auto it = memo_.find(a);
  if (it != memo_.end()) return it->second;

  Permutation result;
  int pos = -1, neg = -1;
  for (int x = 0; x < base_.n; ++x) {
    if (a[static_cast<size_t>(x)] > 0) {
      pos = x;
      break;
    }
    if (neg < 0 && a[static_cast<size_t>(x)] < 0) neg = x;
  }
  if (pos >= 0) {
    // phi(a) = sigma_x . phi(sigma_x^{-1}(a - e_x))
    std::vector<int> b = a;
    b[static_cast<size_t>(pos)] -= 1;
    b = apply_to_vector(base_.sigma_of(pos).inverse(), b);
    result = base_.sigma_of(pos) * phi_locked(b);
  } else {
    // phi(a) = phi(-e_y) . phi(phi(-e_y)^{-1}(a + e_y)),
    // phi(-e_y) = sigma_{T^{-1}(y)}^{-1}
    int y = neg;
    Permutation p = base_.sigma_of(diag_inv_(y)).inverse();
    std::vector<int> b = a;
    b[static_cast<size_t>(y)] += 1;
    b = apply_to_vector(p.inverse(), b);
    result = p * phi_locked(b);
  }
  memo_.insert({a, result});
  return result;
}

Permutation IStructure::phi_with_policy(const std::vector<int> &a, uint64_t seed) const {
  if (static_cast<int>(a.size()) != base_.n)
    throw ValidationError("degree-mismatch", "phi argument has wrong length");
  if (is_zero(a)) return Permutation::identity(base_.n);

  // LCG; only used to pick among eligible descent coordinates
  auto next = [&seed]() {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return seed >> 33;
  };
  std::vector<int> positive, negative;
  for (int x = 0; x < base_.n; ++x) {
    if (a[static_cast<size_t>(x)] > 0) positive.push_back(x);
    if (a[static_cast<size_t>(x)] < 0) negative.push_back(x);
  }
  if (!positive.empty()) {
    int x = positive[static_cast<size_t>(next() % positive.size())];
    std::vector<int> b = a;
    b[static_cast<size_t>(x)] -= 1;
    b = apply_to_vector(base_.sigma_of(x).inverse(), b);
    return base_.sigma_of(x) * phi_with_policy(b, next());
  }
  int y = negative[static_cast<size_t>(next() % negative.size())];
  Permutation p = base_.sigma_of(diag_inv_(y)).inverse();
  std::vector<int> b = a;
  b[static_cast<size_t>(y)] += 1;
  b = apply_to_vector(p.inverse(), b);
  return p * phi_with_policy(b, next());
}

SGElement sg_mul(const IStructure &is, const SGElement &a, const SGElement &b) {
  std::vector<int> moved = apply_to_vector(is.phi(a.vec), b.vec);
  std::vector<int> out = a.vec;
  for (size_t i = 0; i < out.size(); ++i) out[i] += moved[i];
  return {std::move(out)};
}

SGElement sg_add(const SGElement &a, const SGElement &b) {
  std::vector<int> out = a.vec;
  for (size_t i = 0; i < out.size(); ++i) out[i] += b.vec[i];
  return {std::move(out)};
}

SGElement sg_inv(const IStructure &is, const SGElement &a) {
  std::vector<int> out = apply_to_vector(is.phi(a.vec).inverse(), a.vec);
  for (int &v : out) v = -v;
  return {std::move(out)};
}

SGElement sg_basis(int n, int x) {
  std::vector<int> v(static_cast<size_t>(n), 0);
  v[static_cast<size_t>(x)] = 1;
  return {std::move(v)};
}

FiniteSolution solution_from_brace(const FiniteBrace &b) {
  std::vector<Permutation> sigma;
  sigma.reserve(static_cast<size_t>(b.size()));
  for (int a = 0; a < b.size(); ++a) sigma.push_back(lambda_map(b, a));
  return validate_solution(b.size(), std::move(sigma));
}

DoubleCover double_cover_solution(const FiniteBrace &b) {
  const int n = b.size();
  const int m = 2 * n;  // (a,1) -> a, (a,2) -> n + a
  DoubleCover dc;
  dc.labels.reserve(static_cast<size_t>(m));
  for (int a = 0; a < n; ++a) dc.labels.push_back({a, 1});
  for (int a = 0; a < n; ++a) dc.labels.push_back({a, 2});

  std::vector<Permutation> sigma(static_cast<size_t>(n), Permutation::identity(m));
  sigma.reserve(static_cast<size_t>(m));
  for (int a = 0; a < n; ++a) {
    std::vector<int> img(static_cast<size_t>(m));
    for (int c = 0; c < n; ++c) img[static_cast<size_t>(c)] = b.times(a, c);
    for (int c = 0; c < n; ++c) img[static_cast<size_t>(n + c)] = n + b.lambda_of(a, c);
    sigma.push_back(Permutation(std::move(img)));
  }
  dc.solution = validate_solution(m, std::move(sigma));
  return dc;
}

IybQuotient iyb_quotient_brace(const FiniteSolution &s, std::size_t cap) {
  IybQuotient out;
  out.group = yb_group(s, cap);
  const int n = static_cast<int>(out.group.elements.size());
  IStructure is(s);

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[out.group.elements[static_cast<size_t>(i)].images()] = i;
  auto element_of = [&](const Permutation &p) {
    auto it = index.find(p.images());
    if (it == index.end()) throw internal_error("phi image escapes G(X,r)");
    return it->second;
  };

  std::vector<int> add(static_cast<size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      SGElement sum = sg_add({out.group.witnesses[static_cast<size_t>(g)]},
                             {out.group.witnesses[static_cast<size_t>(h)]});
      add[static_cast<size_t>(g) * n + h] = element_of(is.phi(sum.vec));
    }

  // Well-definedness: recompute with alternative witnesses for g.  For any k,
  // phi(witness(g*k) * witness(k)^{-1}) is another vector mapping to g.
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      for (int k = 1; k <= 3 && k < n; ++k) {
        int gk = out.group.group.at(g, k);
        SGElement alt = sg_mul(is, {out.group.witnesses[static_cast<size_t>(gk)]},
                               sg_inv(is, {out.group.witnesses[static_cast<size_t>(k)]}));
        if (element_of(is.phi(alt.vec)) != g)
          throw internal_error("alternative witness maps to wrong element", {g, k});
        SGElement sum = sg_add(alt, {out.group.witnesses[static_cast<size_t>(h)]});
        if (element_of(is.phi(sum.vec)) != add[static_cast<size_t>(g) * n + h])
          throw internal_error("brace addition on G(X,r) is witness-dependent", {g, h, k});
      }
    }

  out.brace = validate_left_brace(n, std::move(add), out.group.group.table);
  return out;
}

bool retract_equals_socle_quotient(const FiniteBrace &b) {
  FiniteSolution assoc = solution_from_brace(b);
  RetractionStep ret = retract(assoc);

  BraceSubset soc = socle(b);
  QuotientBrace q = quotient_brace(b, soc);
  FiniteSolution qsol = solution_from_brace(q.brace);

  if (ret.quotient.n != qsol.n) return false;
  // canonical identification: class of a (in Ret) <-> coset of a (in G/Soc)
  std::vector<int> ident(static_cast<size_t>(ret.quotient.n), -1);
  for (int a = 0; a < b.size(); ++a) {
    int cls = ret.projection[static_cast<size_t>(a)];
    int cos = q.projection[static_cast<size_t>(a)];
    if (ident[static_cast<size_t>(cls)] == -1)
      ident[static_cast<size_t>(cls)] = cos;
    else if (ident[static_cast<size_t>(cls)] != cos)
      return false;  // retract classes are not socle cosets
  }
  std::vector<char> hit(static_cast<size_t>(qsol.n), 0);
  for (int v : ident) {
    if (v < 0 || hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  for (int c = 0; c < ret.quotient.n; ++c)
    for (int d = 0; d < ret.quotient.n; ++d)
      if (ident[static_cast<size_t>(ret.quotient.sigma_of(c)(d))] !=
          qsol.sigma_of(ident[static_cast<size_t>(c)])(ident[static_cast<size_t>(d)]))
        return false;
  return true;
}

bool itype_basis_check(const IStructure &is) {
  const int n = is.base().n;
  for (int x = 0; x < n; ++x) {
    SGElement ex = sg_basis(n, x);
    // phi(e_x)(e_y) must be a basis vector (the image is e_{sigma_x(y)})
    for (int y = 0; y < n; ++y) {
      std::vector<int> img = apply_to_vector(is.phi(ex.vec), sg_basis(n, y).vec);
      int ones = 0, where = -1;
      for (int i = 0; i < n; ++i) {
        if (img[static_cast<size_t>(i)] == 1) {
          ++ones;
          where = i;
        } else if (img[static_cast<size_t>(i)] != 0) {
          return false;
        }
      }
      if (ones != 1 || where != is.base().sigma_of(x)(y)) return false;
    }
    // -(e_x)^{-1} must be a basis vector (it is e_{T(x)})
    SGElement inv = sg_inv(is, ex);
    for (int &v : inv.vec) v = -v;
    int ones = 0, where = -1;
    for (int i = 0; i < n; ++i) {
      if (inv.vec[static_cast<size_t>(i)] == 1) {
        ++ones;
        where = i;
      } else if (inv.vec[static_cast<size_t>(i)] != 0) {
        return false;
      }
    }
    if (ones != 1 || where != is.diag()(x)) return false;
  }
  return true;
}

}  // namespace ybe
