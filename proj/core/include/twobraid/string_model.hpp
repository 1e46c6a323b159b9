#ifndef TWOBRAID_STRING_MODEL_HPP
#define TWOBRAID_STRING_MODEL_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "twobraid/crossed_module.hpp"

namespace twobraid {

// Sparse polynomial in one variable: degree -> coefficient. Used both for
// elements of F0 = C[x] and, via p <-> p(x) d/dx, for polynomial vector
// fields; a 1-form p(x) dx is also stored as the polynomial p.
using Poly = LinComb<int>;

Poly poly_derivative(const Poly& p);
Poly poly_mul(const Poly& a, const Poly& b);

// Vector field bracket on W1: [p d/dx, q d/dx] = (p q' - p' q) d/dx.
Poly w1_bracket(const Poly& p, const Poly& q);
// Lie derivative of a function: (p d/dx) |> q = p q'.
Poly w1_act_fun(const Poly& p, const Poly& q);
// Lie derivative of a 1-form: (p d/dx) |> (q dx) = (p q' + p' q) dx.
Poly w1_act_form(const Poly& p, const Poly& q);
// Degree-two cocycle on W1 with values in 1-forms:
// alpha(p d/dx, q d/dx) = (1/2)(p' q'' - p'' q') dx.
Poly alpha_cocycle(const Poly& p, const Poly& q);
// Primitive with zero constant term: Q(p dx) = int p, so Q(dx) = x.
Poly q_primitive(const Poly& form);

// The string crossed module: h = F0 = C[x], g = F1 x| sl2 where F1 = C[x]dx,
// partial(p) = dp, and g acts on F0 through the vector-field realization
// f = d/dx, k = x d/dx, e = x^2 d/dx.
//
// Letter layout:
//   g: 0 = f, 1 = k, 2 = e, 3+m = x^m dx
//   h: m = x^m
// Basis order is f < k < e < x^0 dx < x^1 dx < ... < (h letters last).
class StringModel : public CrossedModule {
 public:
  static constexpr int kF = 0;
  static constexpr int kK = 1;
  static constexpr int kE = 2;

  static Letter f() { return Letter::g(kF); }
  static Letter k() { return Letter::g(kK); }
  static Letter e() { return Letter::g(kE); }
  static Letter form(int degree) { return Letter::g(3 + degree); }   // x^deg dx
  static Letter fun(int degree) { return Letter::h(degree); }        // x^deg
  static bool is_sl2(const Letter& l) { return l.in_g() && l.index < 3; }
  static bool is_form(const Letter& l) { return l.in_g() && l.index >= 3; }
  static int form_degree(const Letter& l) { return l.index - 3; }

  // The defining polynomial of an sl2 letter as a vector field.
  static Poly sl2_poly(const Letter& l);

  using CrossedModule::bracket;
  using CrossedModule::partial;
  LetterComb bracket(const Letter& a, const Letter& b) const override;
  LetterComb partial(const Letter& h) const override;
  std::optional<LetterComb> section(const Letter& g) const override;
  std::vector<Letter> g_basis(int degree_bound) const override;
  std::vector<Letter> h_basis(int degree_bound) const override;
  std::string name(const Letter& l) const override;

  // sl2 structure constants alone (no cocycle part): [f,e] = 2k, [k,e] = e,
  // [k,f] = -f, as a combination of sl2 letters.
  LetterComb sl2_bracket(const Letter& a, const Letter& b) const;
  // Cocycle part of the semidirect bracket on sl2 letters, as an F1 letter
  // combination: alpha(k,e) = dx = -alpha(e,k), zero otherwise.
  LetterComb sl2_alpha(const Letter& a, const Letter& b) const;

  // Killing form <x,y> = Tr(ad_x ad_y) on sl2 letters, from the structure
  // constants above.
  Rational killing(const Letter& a, const Letter& b) const;

  // omega(X,Y) = Q(alpha(X,Y)) in F0, on sl2 letters.
  Poly omega(const Letter& a, const Letter& b) const;

  // Six-term coboundary of a 2-cochain w : sl2 x sl2 -> F0:
  // delta(w)(X,Y,Z) = X|>w(Y,Z) + Y|>w(Z,X) + Z|>w(X,Y)
  //                 + w(X,[Y,Z]) + w(Y,[Z,X]) + w(Z,[X,Y]).
  template <typename W>
  Poly coboundary(W&& w, const Letter& X, const Letter& Y,
                  const Letter& Z) const;

  // The obstruction 3-cocycle computed from the pinned sections
  // s(X) = (0, X) and s' = Q: with b(Y,Z) = s'(s([Y,Z]) - [s(Y), s(Z)]),
  // returns b([X,Y],Z) + cyclic - (s(X) |> b(Y,Z) + cyclic). For this model
  // the value is a constant polynomial (an element of ker(partial)).
  Poly k_invariant(const Letter& X, const Letter& Y, const Letter& Z) const;
};

// -- template implementation --------------------------------------------

template <typename W>
Poly StringModel::coboundary(W&& w, const Letter& X, const Letter& Y,
                             const Letter& Z) const {
  auto act = [&](const Letter& v, const Poly& p) {
    return w1_act_fun(sl2_poly(v), p);
  };
  auto w_bracket = [&](const Letter& a, const Letter& b,
                       const Letter& c) {  // w(a, [b,c])
    Poly out;
    for (const auto& [l, coef] : sl2_bracket(b, c)) {
      Poly part = w(a, l);
      part *= coef;
      out += part;
    }
    return out;
  };
  Poly out = act(X, w(Y, Z)) + act(Y, w(Z, X)) + act(Z, w(X, Y));
  out += w_bracket(X, Y, Z) + w_bracket(Y, Z, X) + w_bracket(Z, X, Y);
  return out;
}

}  // namespace twobraid

#endif
