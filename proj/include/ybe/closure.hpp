#pragma once

#include <vector>

#include "ybe/group.hpp"
#include "ybe/permutation.hpp"

namespace ybe {

// Breadth-first closure of a permutation generating set.  Element 0 is the
// identity; the rest appear in first-discovery order (generators in input
// order, then products).  Each element g carries one witness vector a with
// phi(a) = g in the structure group, maintained under right-multiplication by
// the product rule  a.b  |->  a + phi(a)(b).
struct WitnessedClosure {
  std::vector<Permutation> elements;
  std::vector<std::vector<int>> witnesses;
  CayleyGroup group;  // indices match `elements`
  bool abelian = false;

  int index_of(const Permutation &p) const;  // -1 if absent
};

// `witnesses` must supply one vector per generator, all of the generators'
// degree.  `max_size` guards runaway closures (throws size-cap).
WitnessedClosure closure_with_witnesses(const std::vector<Permutation> &generators,
                                        const std::vector<std::vector<int>> &witnesses,
                                        std::size_t max_size = 100000);

}  // namespace ybe
