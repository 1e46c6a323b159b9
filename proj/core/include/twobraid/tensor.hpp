#ifndef TWOBRAID_TENSOR_HPP
#define TWOBRAID_TENSOR_HPP

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "twobraid/crossed_module.hpp"
#include "twobraid/permutation.hpp"

namespace twobraid {

struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Word = std::vector<Letter>;

// A pure tensor of words, one word per slot. The empty word is the unit of
// its slot, so the monomial with all words empty is the identity.
struct TensorMonomial {
  std::vector<Word> slots;

  int arity() const { return static_cast<int>(slots.size()); }
  friend auto operator<=>(const TensorMonomial&,
                          const TensorMonomial&) = default;
};

// Element of U(e)^{(x) n} for the total algebra e of a crossed module, as a
// linear combination of slot-word monomials. Values are immutable from the
// caller's point of view: all operations return fresh elements.
class TensorElement {
 public:
  explicit TensorElement(int arity) : arity_(arity) {}
  TensorElement(int arity, LinComb<TensorMonomial> terms)
      : arity_(arity), terms_(std::move(terms)) {}

  static TensorElement unit(int arity) {
    TensorMonomial one;
    one.slots.resize(static_cast<std::size_t>(arity));
    return TensorElement(arity, LinComb<TensorMonomial>::unit(one));
  }
  static TensorElement monomial(TensorMonomial m, Rational coeff = Rational(1)) {
    int n = m.arity();
    return TensorElement(n, LinComb<TensorMonomial>::unit(std::move(m),
                                                          std::move(coeff)));
  }
  // Single letter placed in one slot.
  static TensorElement letter_at(int arity, int slot, const Letter& l);
  static TensorElement letters_at(int arity, int slot, const LetterComb& c);

  int arity() const { return arity_; }
  const LinComb<TensorMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }
  std::size_t term_count() const { return terms_.size(); }

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Rational& s) {
    terms_ *= s;
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) {
    return a += b;
  }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) {
    return a -= b;
  }
  friend TensorElement operator*(TensorElement a, const Rational& s) {
    return a *= s;
  }
  friend TensorElement operator*(const Rational& s, TensorElement a) {
    return a *= s;
  }
  friend TensorElement operator-(TensorElement a) {
    return a *= Rational(-1);
  }
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  void add(const TensorMonomial& m, const Rational& c);

 private:
  int arity_;
  LinComb<TensorMonomial> terms_;
};

enum class PbwSchedule {
  kLeftmostInnermost,   // default: first inversion in slot-major order
  kRightmostInnermost,  // alternative schedule for confluence checks
};

// Slot-wise concatenation product, no normalization.
TensorElement concat_mul(const TensorElement& a, const TensorElement& b);

// Straighten every slot word into nondecreasing letter order using the
// rewrite x_j x_i -> x_i x_j + [x_j, x_i] for x_j > x_i.
TensorElement pbw_normalize(const TensorElement& e, const CrossedModule& mod,
                            PbwSchedule schedule = PbwSchedule::kLeftmostInnermost);

// Product followed by normalization.
TensorElement mul(const TensorElement& a, const TensorElement& b,
                  const CrossedModule& mod);

// Diagonal embedding: X -> sum_i 1 (x) ... (x) X (x) ... (x) 1.
TensorElement diagonal(const LetterComb& x, int arity);

// Adjoint action of a g letter through the diagonal:
// X |> e = Delta(X) e - e Delta(X), normalized.
TensorElement g_act(const LetterComb& x, const TensorElement& e,
                    const CrossedModule& mod);

// Place slot i of `e` into slot positions[i] of an arity-n element, leaving
// all other slots empty. Positions must be distinct.
TensorElement insertion(const TensorElement& e, const std::vector<int>& positions,
                        int arity);

// Slot relabeling: slot i of the input becomes slot sigma(i) of the output.
TensorElement permute_slots(const Permutation& sigma, const TensorElement& e);

// Juxtaposition a (x) b of an arity-m and an arity-n element into arity m+n.
TensorElement tensor_concat(const TensorElement& a, const TensorElement& b);

// [r^{12} + r^{13}, r^{23}] in U(g)^{(x)3}, normalized. Zero exactly when r
// satisfies the classical four-term relation.
TensorElement classical_four_term_defect(const TensorElement& r,
                                         const CrossedModule& mod);

// Counts h letters across all slots.
int h_letter_count(const TensorMonomial& m);

std::string to_string(const TensorElement& e, const CrossedModule& mod);

}  // namespace twobraid

#endif
