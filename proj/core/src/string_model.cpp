#include "twobraid/string_model.hpp"

#include <stdexcept>

namespace twobraid {

LetterComb CrossedModule::bracket(const LetterComb& a,
                                  const LetterComb& b) const {
  LetterComb out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) {
      LetterComb part = bracket(la, lb);
      part *= ca * cb;
      out += part;
    }
  return out;
}

LetterComb CrossedModule::partial(const LetterComb& h) const {
  LetterComb out;
  for (const auto& [l, c] : h) {
    LetterComb part = partial(l);
    part *= c;
    out += part;
  }
  return out;
}

Poly poly_derivative(const Poly& p) {
  Poly out;
  for (const auto& [deg, c] : p)
    if (deg > 0) out.add(deg - 1, c * deg);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) out.add(da + db, ca * cb);
  return out;
}

Poly w1_bracket(const Poly& p, const Poly& q) {
  return poly_mul(p, poly_derivative(q)) - poly_mul(poly_derivative(p), q);
}

Poly w1_act_fun(const Poly& p, const Poly& q) {
  return poly_mul(p, poly_derivative(q));
}

Poly w1_act_form(const Poly& p, const Poly& q) {
  return poly_mul(p, poly_derivative(q)) + poly_mul(poly_derivative(p), q);
}

Poly alpha_cocycle(const Poly& p, const Poly& q) {
  Poly p1 = poly_derivative(p), q1 = poly_derivative(q);
  Poly p2 = poly_derivative(p1), q2 = poly_derivative(q1);
  Poly out = poly_mul(p1, q2) - poly_mul(p2, q1);
  out *= Rational(1, 2);
  return out;
}

Poly q_primitive(const Poly& form) {
  Poly out;
  for (const auto& [deg, c] : form) out.add(deg + 1, c / (deg + 1));
  return out;
}

Poly StringModel::sl2_poly(const Letter& l) {
  if (!is_sl2(l)) throw std::invalid_argument("not an sl2 letter");
  return Poly::unit(l.index);  // f = x^0 d/dx, k = x^1 d/dx, e = x^2 d/dx
}

namespace {

LetterComb form_from_poly(const Poly& p) {
  LetterComb out;
  for (const auto& [deg, c] : p) out.add(StringModel::form(deg), c);
  return out;
}

LetterComb fun_from_poly(const Poly& p) {
  LetterComb out;
  for (const auto& [deg, c] : p) out.add(StringModel::fun(deg), c);
  return out;
}

Poly poly_of_form_letter(const Letter& l) {
  return Poly::unit(StringModel::form_degree(l));
}

}  // namespace

LetterComb StringModel::sl2_bracket(const Letter& a, const Letter& b) const {
  Poly p = w1_bracket(sl2_poly(a), sl2_poly(b));
  LetterComb out;
  for (const auto& [deg, c] : p) {
    if (deg > 2) throw std::logic_error("sl2 bracket escaped sl2");
    out.add(Letter::g(deg), c);
  }
  return out;
}

LetterComb StringModel::sl2_alpha(const Letter& a, const Letter& b) const {
  return form_from_poly(alpha_cocycle(sl2_poly(a), sl2_poly(b)));
}

LetterComb StringModel::bracket(const Letter& a, const Letter& b) const {
  if (a.in_g() && b.in_g()) {
    if (is_sl2(a) && is_sl2(b)) return sl2_bracket(a, b) + sl2_alpha(a, b);
    if (is_sl2(a) && is_form(b))
      return form_from_poly(
          w1_act_form(sl2_poly(a), poly_of_form_letter(b)));
    if (is_form(a) && is_sl2(b))
      return -form_from_poly(
          w1_act_form(sl2_poly(b), poly_of_form_letter(a)));
    return {};  // [F1, F1] = 0
  }
  if (a.in_g() && b.in_h()) {
    if (is_form(a)) return {};  // F1 acts trivially on F0
    return fun_from_poly(w1_act_fun(sl2_poly(a), Poly::unit(b.index)));
  }
  if (a.in_h() && b.in_g()) return -bracket(b, a);
  return {};  // h is abelian
}

LetterComb StringModel::partial(const Letter& h) const {
  if (!h.in_h()) throw std::invalid_argument("partial expects an h letter");
  if (h.index == 0) return {};
  return LetterComb::unit(form(h.index - 1), Rational(h.index));
}

std::optional<LetterComb> StringModel::section(const Letter& g) const {
  if (!is_form(g)) return std::nullopt;
  int deg = form_degree(g);
  return LetterComb::unit(fun(deg + 1), Rational(1, deg + 1));
}

std::vector<Letter> StringModel::g_basis(int degree_bound) const {
  std::vector<Letter> out = {f(), k(), e()};
  for (int m = 0; m <= degree_bound; ++m) out.push_back(form(m));
  return out;
}

std::vector<Letter> StringModel::h_basis(int degree_bound) const {
  std::vector<Letter> out;
  for (int m = 0; m <= degree_bound; ++m) out.push_back(fun(m));
  return out;
}

std::string StringModel::name(const Letter& l) const {
  if (l.in_g()) {
    switch (l.index) {
      case kF: return "f";
      case kK: return "k";
      case kE: return "e";
      default: return "x^" + std::to_string(form_degree(l)) + "dx";
    }
  }
  return "x^" + std::to_string(l.index);
}

Rational StringModel::killing(const Letter& a, const Letter& b) const {
  // Tr(ad_a ad_b) over the sl2 basis {f,k,e}.
  Rational trace(0);
  for (int i = 0; i < 3; ++i) {
    Letter basis = Letter::g(i);
    LetterComb once = sl2_bracket(b, basis);
    LetterComb twice;
    for (const auto& [l, c] : once) {
      LetterComb part = sl2_bracket(a, l);
      part *= c;
      twice += part;
    }
    trace += twice.coeff(basis);
  }
  return trace;
}

Poly StringModel::omega(const Letter& a, const Letter& b) const {
  return q_primitive(alpha_cocycle(sl2_poly(a), sl2_poly(b)));
}

Poly StringModel::k_invariant(const Letter& X, const Letter& Y,
                              const Letter& Z) const {
  // b(Y,Z) = s'(s([Y,Z]) - [s(Y), s(Z)]) = -omega(Y,Z) for s(X) = (0,X),
  // s' = Q, since the defect of s against the semidirect bracket is exactly
  // -alpha(Y,Z).
  auto b = [&](const Letter& u, const Letter& v) { return -omega(u, v); };
  auto b_of_bracket = [&](const Letter& u, const Letter& v, const Letter& w) {
    Poly out;  // b([u,v], w)
    for (const auto& [l, c] : sl2_bracket(u, v)) {
      Poly part = b(l, w);
      part *= c;
      out += part;
    }
    return out;
  };
  Poly out = b_of_bracket(X, Y, Z) + b_of_bracket(Y, Z, X) +
             b_of_bracket(Z, X, Y);
  out -= w1_act_fun(sl2_poly(X), b(Y, Z));
  out -= w1_act_fun(sl2_poly(Y), b(Z, X));
  out -= w1_act_fun(sl2_poly(Z), b(X, Y));
  return out;
}

}  // namespace twobraid
