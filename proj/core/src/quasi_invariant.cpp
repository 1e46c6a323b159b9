#include "twobraid/quasi_invariant.hpp"

namespace twobraid {

std::vector<RPair> r_pairs(const TensorElement& r) {
  if (r.arity() != 2) throw ArityError("tensor r must have arity 2");
  std::vector<RPair> out;
  for (const auto& [m, c] : r.terms()) {
    if (m.slots[0].size() != 1 || m.slots[1].size() != 1 ||
        !m.slots[0][0].in_g() || !m.slots[1][0].in_g())
      throw std::invalid_argument(
          "tensor r must be a combination of single-letter g (x) g terms");
    out.push_back({m.slots[0][0], m.slots[1][0], c});
  }
  return out;
}

namespace {

// Places a polynomial p = sum c_d x^d as h letters into one slot.
TensorElement poly_at(int arity, int slot, const Poly& p) {
  TensorElement out(arity);
  for (const auto& [deg, c] : p)
    out += Rational(c) * TensorElement::letter_at(arity, slot,
                                                  StringModel::fun(deg));
  return out;
}

TensorElement pure_pair(const Letter& a, const Letter& b) {
  TensorMonomial m;
  m.slots = {{a}, {b}};
  return TensorElement::monomial(m);
}

}  // namespace

std::vector<MorphismDefect> validate_tensor(const QuasiInvariantTensor& q,
                                            const CrossedModule& mod,
                                            int degree_bound) {
  std::vector<MorphismDefect> out;
  auto report = [&](const char* cond, const std::string& witness,
                    std::size_t count) {
    if (count > 0) out.push_back({cond, witness, count});
  };
  Permutation flip({1, 0});
  TensorElement r = pbw_normalize(q.r, mod);
  report("r = flip(r)", "r", (r - permute_slots(flip, r)).term_count());
  for (const Letter& x : mod.g_basis(degree_bound))
    report("xi(X) = flip(xi(X))", mod.name(x),
           (q.xi(x) - permute_slots_un(flip, q.xi(x), mod)).term_count());
  report("partial(c) = 0", "c", mod.partial(q.c).size());
  for (const Letter& x : mod.g_basis(degree_bound))
    report("X |> c = 0", mod.name(x),
           mod.bracket(LetterComb::unit(x), q.c).size());
  OneMorphism as_one{r, q.xi, DecoratedPermutation::identity(2)};
  for (const MorphismDefect& d : validate_one(as_one, mod, degree_bound))
    out.push_back(d);
  return out;
}

QuasiInvariantTensor string_tensor(const StringModel& model,
                                   const LetterComb& c) {
  Letter f = StringModel::f(), k = StringModel::k(), e = StringModel::e();
  TensorElement r(2);
  r += pure_pair(f, e);
  r += pure_pair(e, f);
  r -= Rational(2) * pure_pair(k, k);
  std::vector<RPair> pairs = r_pairs(r);
  const StringModel* m = &model;
  Zeta xi(2, [m, pairs](const Letter& x) {
    TensorElement out(2);
    // C part: 1 (x) X + X (x) 1 for sl2 letters only. The sign is pinned by
    // condition (iii): under the diagonal action on U^(2) each of the two
    // mixed terms X |> C(Y), -Y |> C(X) contributes a full copy of
    // C([X,Y]), so the C summand must enter negatively to cancel the
    // Phi-pairing residue of the xi0 summand.
    if (StringModel::is_sl2(x)) {
      out -= pure_pair(StringModel::fun(0), x);
      out -= pure_pair(x, StringModel::fun(0));
    }
    // -xi0 part.
    for (const RPair& p : pairs) {
      Poly left, right;
      if (StringModel::is_sl2(x)) {
        left = m->omega(p.s, x);
        right = m->omega(p.t, x);
      } else {
        Poly primitive =
            q_primitive(Poly::unit(StringModel::form_degree(x)));
        left = w1_act_fun(StringModel::sl2_poly(p.s), primitive);
        right = w1_act_fun(StringModel::sl2_poly(p.t), primitive);
      }
      out -= p.coeff * concat_mul(poly_at(2, 0, left),
                                  TensorElement::letter_at(2, 1, p.t));
      out -= p.coeff * concat_mul(TensorElement::letter_at(2, 0, p.s),
                                  poly_at(2, 1, right));
    }
    return un_normalize(out, *m);
  });
  return {std::move(r), std::move(xi), c};
}

UnElement p_element(const QuasiInvariantTensor& q, const CrossedModule& mod,
                    CoherenceConvention convention) {
  Rational sign(convention == CoherenceConvention::kDirect ? 1 : -1);
  UnElement out(3);
  for (const RPair& p : r_pairs(q.r)) {
    UnElement xit = insertion_un(q.xi(p.t), {1, 2}, 3, mod);
    out += (sign * p.coeff) *
           mul_un(TensorElement::letter_at(3, 0, p.s), xit, mod);
  }
  TensorElement cr = concat_mul(TensorElement::letters_at(3, 0, q.c),
                                insertion(q.r, {1, 2}, 3));
  out += un_normalize(cr, mod);
  return out;
}

UnElement coherence_defect(const QuasiInvariantTensor& q,
                           const CrossedModule& mod,
                           CoherenceConvention convention) {
  UnElement p = p_element(q, mod, convention);
  Permutation rho({1, 2, 0});
  return p + permute_slots_un(rho, p, mod) +
         permute_slots_un(rho * rho, p, mod);
}

std::vector<MorphismDefect> phi_pairing_check(const StringModel& model) {
  std::vector<MorphismDefect> out;
  QuasiInvariantTensor q = string_tensor(model);
  std::vector<RPair> pairs = r_pairs(q.r);
  auto omega = [&](const Letter& a, const Letter& b) {
    return model.omega(a, b);
  };
  std::vector<Letter> sl2 = {StringModel::f(), StringModel::k(),
                             StringModel::e()};
  for (const Letter& x : sl2)
    for (const Letter& y : sl2) {
      TensorElement lhs(2), rhs(2);
      for (const RPair& p : pairs) {
        Poly phi_s = model.coboundary(omega, p.s, x, y);
        Poly phi_t = model.coboundary(omega, p.t, x, y);
        lhs += p.coeff * concat_mul(poly_at(2, 0, phi_s),
                                    TensorElement::letter_at(2, 1, p.t));
        rhs += p.coeff * concat_mul(TensorElement::letter_at(2, 0, p.s),
                                    poly_at(2, 1, phi_t));
      }
      TensorElement bracket_l(2), bracket_r(2);
      for (const auto& [l, c] : model.bracket(x, y)) {
        bracket_l.add({{{StringModel::fun(0)}, {l}}}, c);
        bracket_r.add({{{l}, {StringModel::fun(0)}}}, c);
      }
      std::string witness = "(" + model.name(x) + ", " + model.name(y) + ")";
      std::size_t d1 = un_normalize(lhs - bracket_l, model).term_count();
      std::size_t d2 = un_normalize(rhs - bracket_r, model).term_count();
      if (d1 > 0)
        out.push_back({"sum Phi(s_i,X,Y) (x) t_i = 1 (x) [X,Y]", witness, d1});
      if (d2 > 0)
        out.push_back({"sum s_i (x) Phi(t_i,X,Y) = [X,Y] (x) 1", witness, d2});
    }
  return out;
}

}  // namespace twobraid
