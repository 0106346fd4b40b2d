#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ybe {

// Bijection of {0..n-1}, stored as the image table: p(i) = images()[i].
//
// Composition convention, used everywhere in this library:
//     (p * q)(i) = p(q(i))        -- the right factor acts first.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // Cycles use the same 0-based points as everything else;
  // e.g. from_cycles(6, {{0,1,2},{3,4}}).
  static Permutation from_cycles(int degree, std::initializer_list<std::vector<int>> cycles);
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>> &cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<int> &images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  // (p * q)(i) = p(q(i)); throws on degree mismatch.
  friend Permutation operator*(const Permutation &p, const Permutation &q);

  friend bool operator==(const Permutation &a, const Permutation &b) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) = default;

  // Cycle notation on 0-based points, "()" for the identity.
  std::string to_cycle_string() const;

private:
  std::vector<int> images_;
};

// Natural action of Sym_X on Z^X: value at position i moves to position p(i),
// so e_x maps to e_{p(x)}.
std::vector<int> apply_to_vector(const Permutation &p, const std::vector<int> &v);

}  // namespace ybe
