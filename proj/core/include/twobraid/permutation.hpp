#ifndef TWOBRAID_PERMUTATION_HPP
#define TWOBRAID_PERMUTATION_HPP

#include <compare>
#include <cstdint>
#include <vector>

namespace twobraid {

// Permutation of {0,...,n-1}, stored as the image table. Composition is in
// diagrammatic order: (a * b)(i) = b(a(i)), matching left-to-right
// composition of morphisms elsewhere in the library.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  // Transposition of adjacent blocks: the first n slots move past the last m.
  // sigma(i) = i + m for i < n, sigma(i) = i - n otherwise.
  static Permutation block_transposition(int n, int m);
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  Permutation inverse() const;
  bool is_identity() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<int> images_;
};

// Permutation decorated with an integer grade. Products add the grades.
struct DecoratedPermutation {
  Permutation sigma;
  std::int64_t k = 0;

  static DecoratedPermutation identity(int n) {
    return {Permutation::identity(n), 0};
  }

  friend DecoratedPermutation operator*(const DecoratedPermutation& a,
                                        const DecoratedPermutation& b) {
    return {a.sigma * b.sigma, a.k + b.k};
  }
  friend auto operator<=>(const DecoratedPermutation&,
                          const DecoratedPermutation&) = default;
};

// Block direct sum: acts as a on the first block and b on the second.
Permutation block_sum(const Permutation& a, const Permutation& b);

}  // namespace twobraid

#endif
