#include "ybe/permutation.hpp"

#include "ybe/error.hpp"

namespace ybe {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw ValidationError("not-bijection", "image table is not a bijection of {0..n-1}", {v});
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<size_t>(i)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>> &cycles) {
  std::vector<int> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<size_t>(i)] = i;
  for (const auto &cyc : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw ValidationError("not-bijection", "cycle point out of range", {from});
      img[static_cast<size_t>(from)] = to;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, std::initializer_list<std::vector<int>> cycles) {
  return from_cycles(degree, std::vector<std::vector<int>>(cycles));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i) img[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Permutation operator*(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw ValidationError("degree-mismatch", "cannot compose permutations of different degree",
                          {p.degree(), q.degree()});
  std::vector<int> img(p.images_.size());
  for (int i = 0; i < p.degree(); ++i) img[static_cast<size_t>(i)] = p(q(i));
  return Permutation(std::move(img));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<char> done(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (done[static_cast<size_t>(i)] || images_[static_cast<size_t>(i)] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!done[static_cast<size_t>(j)]) {
      done[static_cast<size_t>(j)] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = images_[static_cast<size_t>(j)];
    }
    out += ")";
  }
  if (out.empty()) out = "()";
  return out;
}

std::vector<int> apply_to_vector(const Permutation &p, const std::vector<int> &v) {
  if (static_cast<int>(v.size()) != p.degree())
    throw ValidationError("degree-mismatch", "vector length does not match permutation degree",
                          {static_cast<int>(v.size()), p.degree()});
  std::vector<int> out(v.size());
  for (int i = 0; i < p.degree(); ++i) out[static_cast<size_t>(p(i))] = v[static_cast<size_t>(i)];
  return out;
}

}  // namespace ybe
