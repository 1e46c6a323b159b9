#ifndef TWOBRAID_UN_SPACE_HPP
#define TWOBRAID_UN_SPACE_HPP

#include <cstddef>
#include <stdexcept>

#include "twobraid/tensor.hpp"

namespace twobraid {

struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of the relative tensor space U^(n): the span of monomials with
// exactly one h letter, modulo  x d(u) y v z = x u y d(v) z  for the
// boundary map d. Instances always hold the combined normal form: every slot
// word sorted, and no g letter with a declared d-preimage occurring at a
// smaller global position than the h letter.
class UnElement {
 public:
  explicit UnElement(int arity) : value_(arity) {}

  int arity() const { return value_.arity(); }
  const TensorElement& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  std::size_t term_count() const { return value_.term_count(); }

  UnElement& operator+=(const UnElement& o) {
    value_ += o.value_;
    return *this;
  }
  UnElement& operator-=(const UnElement& o) {
    value_ -= o.value_;
    return *this;
  }
  UnElement& operator*=(const Rational& s) {
    value_ *= s;
    return *this;
  }
  friend UnElement operator+(UnElement a, const UnElement& b) { return a += b; }
  friend UnElement operator-(UnElement a, const UnElement& b) { return a -= b; }
  friend UnElement operator*(UnElement a, const Rational& s) { return a *= s; }
  friend UnElement operator*(const Rational& s, UnElement a) { return a *= s; }
  friend UnElement operator-(UnElement a) { return a *= Rational(-1); }
  friend bool operator==(const UnElement& a, const UnElement& b) {
    return a.value_ == b.value_;
  }

 private:
  friend UnElement un_normalize(const TensorElement&, const CrossedModule&,
                                std::size_t);
  TensorElement value_;
};

enum class UnOracle { kRewrite, kSpan, kBoth };

// Rewrites `raw` (every monomial must carry exactly one h letter) to the
// combined normal form. The support cap aborts runaway computations with
// ResourceCapError.
UnElement un_normalize(const TensorElement& raw, const CrossedModule& mod,
                       std::size_t support_cap = 20000);

// Equality in U^(n). kRewrite compares normal forms; kSpan decides whether
// the difference lies in the relation subspace by exact rank over the
// closure of relation instances; kBoth runs both and requires agreement
// (disagreement throws logic_error, since it falsifies confluence).
bool un_equal(const TensorElement& a, const TensorElement& b,
              const CrossedModule& mod, UnOracle mode = UnOracle::kBoth,
              std::size_t support_cap = 20000);
bool un_equal(const UnElement& a, const UnElement& b, const CrossedModule& mod,
              UnOracle mode = UnOracle::kBoth, std::size_t support_cap = 20000);

// The map beta: U^(n) -> U(g)^{(x)n} replacing the h letter by its boundary.
TensorElement beta_un(const UnElement& e, const CrossedModule& mod);

// h action: v |> r = Delta(v) r - r Delta(v) for r in U(g)^{(x)n}.
UnElement h_act(const LetterComb& v, const TensorElement& r,
                const CrossedModule& mod);

// g action on U^(n) through the diagonal.
UnElement g_act_un(const LetterComb& x, const UnElement& e,
                   const CrossedModule& mod);

// Module products (slot-wise concatenation followed by normalization).
UnElement mul_un(const TensorElement& a, const UnElement& b,
                 const CrossedModule& mod);
UnElement mul_un(const UnElement& a, const TensorElement& b,
                 const CrossedModule& mod);

// Juxtapositions into arity m+n.
UnElement un_tensor(const TensorElement& a, const UnElement& b,
                    const CrossedModule& mod);
UnElement un_tensor(const UnElement& a, const TensorElement& b,
                    const CrossedModule& mod);

UnElement permute_slots_un(const Permutation& sigma, const UnElement& e,
                           const CrossedModule& mod);
UnElement insertion_un(const UnElement& e, const std::vector<int>& positions,
                       int arity, const CrossedModule& mod);

}  // namespace twobraid

#endif
