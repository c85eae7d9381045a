#pragma once

#include <compare>
#include <vector>

namespace mcg {

/// A bijection of {0, ..., degree-1}, stored as its image table.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Cycle-notation helper; points not mentioned stay fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[point]; }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  /// Composition: (a * b)(p) = a(b(p)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  bool is_identity() const;
  int order() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace mcg
