#ifndef TWOBRAID_TWO_CATEGORY_HPP
#define TWOBRAID_TWO_CATEGORY_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "twobraid/un_space.hpp"

namespace twobraid {

// Linear map g -> U^(n), represented by a rule on basis letters and extended
// linearly. Rules may be closed-form (the braiding construction) or finite
// tables; evaluations are memoized per letter.
class Zeta {
 public:
  using Rule = std::function<UnElement(const Letter&)>;

  Zeta(int arity, Rule rule)
      : arity_(arity),
        rule_(std::move(rule)),
        cache_(std::make_shared<std::map<Letter, UnElement>>()) {}

  static Zeta zero(int arity) {
    return Zeta(arity, [arity](const Letter&) { return UnElement(arity); });
  }

  int arity() const { return arity_; }

  UnElement operator()(const Letter& x) const {
    auto it = cache_->find(x);
    if (it != cache_->end()) return it->second;
    UnElement v = rule_(x);
    cache_->emplace(x, v);
    return v;
  }

  UnElement operator()(const LetterComb& x) const {
    UnElement out(arity_);
    for (const auto& [l, c] : x) out += (*this)(l)*c;
    return out;
  }

 private:
  int arity_;
  Rule rule_;
  std::shared_ptr<std::map<Letter, UnElement>> cache_;
};

Zeta zeta_add(const Zeta& a, const Zeta& b);
Zeta zeta_scale(const Rational& s, const Zeta& a);
// Post-composition with a linear transform U^(m) -> U^(n).
Zeta zeta_map(int arity, std::function<UnElement(const UnElement&)> f,
              const Zeta& a);

// 1-morphism n -> n of the 2-category: an invertible element R of
// U(g)^{(x)n}, a derivation-like map zeta, and a decorated permutation.
// Hom(m, n) is empty for m != n, so the object is carried as the arity of R.
struct OneMorphism {
  TensorElement R;  // stored PBW-normalized
  Zeta zeta;
  DecoratedPermutation tau;

  int object() const { return R.arity(); }

  static OneMorphism identity(int n) {
    return {TensorElement::unit(n), Zeta::zero(n),
            DecoratedPermutation::identity(n)};
  }
};

// 2-morphism: an element T of U^(n) attached to a source 1-morphism. The
// target has R' = R + beta(T) and zeta'(X) = zeta(X) + X |> T; vertical
// composition adds the T components, so every 2-morphism is invertible.
struct TwoMorphism {
  OneMorphism source;
  UnElement T;

  int object() const { return source.object(); }

  static TwoMorphism identity(OneMorphism m) {
    int n = m.object();
    return {std::move(m), UnElement(n)};
  }
};

OneMorphism target(const TwoMorphism& t, const CrossedModule& mod);

// Exact defect of one validity condition at one basis witness.
struct MorphismDefect {
  std::string condition;
  std::string witness;
  std::size_t term_count = 0;
};

// Validity of a 1-morphism over the enumerated bases up to degree_bound:
//   (i)   X |> R = beta(zeta(X))        for g basis letters X
//   (ii)  u |> R = zeta(partial(u))     for h basis letters u
//   (iii) zeta([X,Y]) = X |> zeta(Y) - Y |> zeta(X) on g basis pairs
// For infinite-dimensional g this is the documented semi-decision: agreement
// on the enumerated basis up to the bound.
std::vector<MorphismDefect> validate_one(const OneMorphism& m,
                                         const CrossedModule& mod,
                                         int degree_bound);
// Validates the target of a 2-morphism (the source is assumed checked).
std::vector<MorphismDefect> validate_two(const TwoMorphism& t,
                                         const CrossedModule& mod,
                                         int degree_bound);

// Equality of 1-morphisms: (R, tau) exactly, zeta on the enumerated g basis
// up to degree_bound (same semi-decision as validation).
bool one_equal(const OneMorphism& a, const OneMorphism& b,
               const CrossedModule& mod, int degree_bound);
bool two_equal(const TwoMorphism& a, const TwoMorphism& b,
               const CrossedModule& mod, int degree_bound);

// Left-to-right composition: a followed by b, via the semidirect formula
// (R sigma(R'), X -> R sigma(zeta'(X)) + zeta(X) sigma(R'), sigma sigma',
// k + k'). Throws ArityError on object mismatch.
OneMorphism compose_one(const OneMorphism& a, const OneMorphism& b,
                        const CrossedModule& mod);

// Whiskering: left attaches the 1-morphism before the 2-morphism (element
// R'' tau''(T)), right attaches it after (element T tau(R'')).
TwoMorphism whisker_left(const OneMorphism& m, const TwoMorphism& t,
                         const CrossedModule& mod);
TwoMorphism whisker_right(const TwoMorphism& t, const OneMorphism& m,
                          const CrossedModule& mod);

// Vertical composition T + T'. Requires the (R, tau) data of b's source to
// match a's target exactly.
TwoMorphism vertical_compose(const TwoMorphism& a, const TwoMorphism& b,
                             const CrossedModule& mod);

// Horizontal composition in the canonical order: (a . source(b)) then
// (target(a) . b). The interchange law makes the other order agree.
TwoMorphism horizontal_compose(const TwoMorphism& a, const TwoMorphism& b,
                               const CrossedModule& mod);

// Monoidal structure: objects add, and
//   1 (x) 1: (R (x) R', R (x) zeta' + zeta (x) R', tau (+) tau', k + k')
//   2 (x) 2: T (x) R_source' + R_target (x) T'.
OneMorphism tensor_one(const OneMorphism& a, const OneMorphism& b,
                       const CrossedModule& mod);
TwoMorphism tensor_two(const TwoMorphism& a, const TwoMorphism& b,
                       const CrossedModule& mod);

// The symmetric braiding 1-morphism: (1, 0, (sigma_{n,m}, 0)).
OneMorphism braiding_one(int n, int m);

// Derived crossed module gl(x) at object n. gl^0 is 1-endomorphisms with the
// commutator, gl^1 is U^(n) with {T,S} = T beta(S) - S beta(T), the action is
// f |> T = f T - T f, and the boundary is the target map (here beta).
UnElement gl_bracket(const UnElement& t, const UnElement& s,
                     const CrossedModule& mod);
UnElement gl_act(const OneMorphism& f, const UnElement& t,
                 const CrossedModule& mod);

}  // namespace twobraid

#endif
