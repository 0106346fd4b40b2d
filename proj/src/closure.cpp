#include "ybe/closure.hpp"

#include <map>

#include "ybe/error.hpp"

namespace ybe {

int WitnessedClosure::index_of(const Permutation &p) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == p) return static_cast<int>(i);
  return -1;
}

WitnessedClosure closure_with_witnesses(const std::vector<Permutation> &generators,
                                        const std::vector<std::vector<int>> &witnesses,
                                        std::size_t max_size) {
  if (generators.empty())
    throw ValidationError("degree-mismatch", "closure needs at least one generator");
  const int deg = generators[0].degree();
  for (const auto &g : generators)
    if (g.degree() != deg)
      throw ValidationError("degree-mismatch", "generators of mixed degree", {deg, g.degree()});
  if (witnesses.size() != generators.size())
    throw ValidationError("degree-mismatch", "one witness vector per generator required");
  for (const auto &w : witnesses)
    if (static_cast<int>(w.size()) != deg)
      throw ValidationError("degree-mismatch", "witness vector length must equal the degree");

  WitnessedClosure out;
  std::map<std::vector<int>, int> index;  // image table -> element index

  auto add = [&](const Permutation &p, std::vector<int> wit) -> bool {
    auto [it, fresh] = index.insert({p.images(), static_cast<int>(out.elements.size())});
    if (!fresh) return false;
    out.elements.push_back(p);
    out.witnesses.push_back(std::move(wit));
    if (out.elements.size() > max_size)
      throw ValidationError("size-cap", "closure exceeded element cap",
                            {static_cast<int>(max_size)});
    return true;
  };

  add(Permutation::identity(deg), std::vector<int>(static_cast<size_t>(deg), 0));
  for (size_t i = 0; i < generators.size(); ++i) add(generators[i], witnesses[i]);

  // BFS over right-multiplication by generators.
  for (size_t head = 0; head < out.elements.size(); ++head) {
    for (size_t gi = 0; gi < generators.size(); ++gi) {
      Permutation prod = out.elements[head] * generators[gi];
      if (index.find(prod.images()) != index.end()) continue;
      // witness(g . s) = a_g + phi(a_g)(e-witness of s), phi(a_g) = g
      std::vector<int> wit = out.witnesses[head];
      std::vector<int> moved = apply_to_vector(out.elements[head], witnesses[gi]);
      for (int k = 0; k < deg; ++k) wit[static_cast<size_t>(k)] += moved[static_cast<size_t>(k)];
      add(prod, std::move(wit));
    }
  }

  const int n = static_cast<int>(out.elements.size());
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Permutation prod = out.elements[static_cast<size_t>(a)] * out.elements[static_cast<size_t>(b)];
      auto it = index.find(prod.images());
      if (it == index.end()) throw internal_error("closure not closed under composition");
      table[static_cast<size_t>(a) * n + b] = it->second;
    }
  out.group = validate_group(n, std::move(table));
  out.abelian = out.group.is_abelian();
  return out;
}

}  // namespace ybe
