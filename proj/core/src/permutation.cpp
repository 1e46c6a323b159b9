#include "twobraid/permutation.hpp"

#include <stdexcept>

namespace twobraid {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(im));
}

Permutation Permutation::block_transposition(int n, int m) {
  std::vector<int> im(static_cast<std::size_t>(n + m));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + m;
  for (int i = n; i < n + m; ++i) im[static_cast<std::size_t>(i)] = i - n;
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(i)],
            p.images_[static_cast<std::size_t>(j)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < size(); ++i)
    im[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<int> im(a.images_.size());
  for (int i = 0; i < a.size(); ++i) im[static_cast<std::size_t>(i)] = b(a(i));
  return Permutation(std::move(im));
}

Permutation block_sum(const Permutation& a, const Permutation& b) {
  std::vector<int> im;
  im.reserve(static_cast<std::size_t>(a.size() + b.size()));
  for (int i = 0; i < a.size(); ++i) im.push_back(a(i));
  for (int i = 0; i < b.size(); ++i) im.push_back(a.size() + b(i));
  return Permutation(std::move(im));
}

}  // namespace twobraid
