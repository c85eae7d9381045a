#include "mcg/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace mcg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("Permutation: image table is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> used(degree, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || used[from])
        throw std::invalid_argument("Permutation: bad cycle entry " + std::to_string(from));
      used[from] = 1;
      img[from] = to;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("Permutation: degree mismatch in composition");
  std::vector<int> img(images_.size());
  for (std::size_t p = 0; p < img.size(); ++p) img[p] = images_[rhs.images_[p]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(images_.size());
  for (std::size_t p = 0; p < img.size(); ++p) img[images_[p]] = static_cast<int>(p);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < images_.size(); ++p)
    if (images_[p] != static_cast<int>(p)) return false;
  return true;
}

int Permutation::order() const {
  // lcm of cycle lengths
  std::vector<char> seen(images_.size(), 0);
  long long ord = 1;
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (seen[p]) continue;
    int len = 0;
    int q = static_cast<int>(p);
    while (!seen[q]) {
      seen[q] = 1;
      q = images_[q];
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

}  // namespace mcg
