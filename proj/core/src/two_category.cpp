#include "twobraid/two_category.hpp"

namespace twobraid {

namespace {

// Action of a decorated permutation's underlying sigma on tensor factors.
// permute_slots sends input slot i to output slot sigma(i); for the
// semidirect composition formula to be associative with diagrammatic
// permutation products, sigma must act through its inverse here.
TensorElement sigma_act(const Permutation& s, const TensorElement& e) {
  return permute_slots(s.inverse(), e);
}
UnElement sigma_act(const Permutation& s, const UnElement& e,
                    const CrossedModule& mod) {
  return permute_slots_un(s.inverse(), e, mod);
}

void check_same_object(int a, int b, const char* what) {
  if (a != b)
    throw ArityError(std::string(what) + ": object mismatch (" +
                     std::to_string(a) + " vs " + std::to_string(b) + ")");
}

}  // namespace

Zeta zeta_add(const Zeta& a, const Zeta& b) {
  check_same_object(a.arity(), b.arity(), "zeta_add");
  return Zeta(a.arity(), [a, b](const Letter& x) { return a(x) + b(x); });
}

Zeta zeta_scale(const Rational& s, const Zeta& a) {
  return Zeta(a.arity(), [s, a](const Letter& x) { return a(x) * s; });
}

Zeta zeta_map(int arity, std::function<UnElement(const UnElement&)> f,
              const Zeta& a) {
  return Zeta(arity, [f, a](const Letter& x) { return f(a(x)); });
}

OneMorphism target(const TwoMorphism& t, const CrossedModule& mod) {
  const CrossedModule* m = &mod;
  Zeta sz = t.source.zeta;
  UnElement T = t.T;
  Zeta z(t.object(), [sz, T, m](const Letter& x) {
    return sz(x) + g_act_un(LetterComb::unit(x), T, *m);
  });
  return {t.source.R + beta_un(t.T, mod), z, t.source.tau};
}

std::vector<MorphismDefect> validate_one(const OneMorphism& m,
                                         const CrossedModule& mod,
                                         int degree_bound) {
  std::vector<MorphismDefect> out;
  auto report = [&](const char* cond, const std::string& witness,
                    std::size_t count) {
    if (count > 0) out.push_back({cond, witness, count});
  };
  std::vector<Letter> gs = mod.g_basis(degree_bound);
  for (const Letter& x : gs) {
    TensorElement defect =
        g_act(LetterComb::unit(x), m.R, mod) - beta_un(m.zeta(x), mod);
    report("X |> R = beta(zeta(X))", mod.name(x), defect.term_count());
  }
  for (const Letter& u : mod.h_basis(degree_bound)) {
    UnElement defect = h_act(LetterComb::unit(u), m.R, mod) -
                       m.zeta(mod.partial(u));
    report("u |> R = zeta(partial u)", mod.name(u), defect.term_count());
  }
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      const Letter &x = gs[i], &y = gs[j];
      UnElement defect = m.zeta(mod.bracket(x, y)) -
                         g_act_un(LetterComb::unit(x), m.zeta(y), mod) +
                         g_act_un(LetterComb::unit(y), m.zeta(x), mod);
      report("zeta([X,Y]) = X |> zeta(Y) - Y |> zeta(X)",
             "(" + mod.name(x) + ", " + mod.name(y) + ")",
             defect.term_count());
    }
  return out;
}

std::vector<MorphismDefect> validate_two(const TwoMorphism& t,
                                         const CrossedModule& mod,
                                         int degree_bound) {
  return validate_one(target(t, mod), mod, degree_bound);
}

bool one_equal(const OneMorphism& a, const OneMorphism& b,
               const CrossedModule& mod, int degree_bound) {
  if (a.object() != b.object()) return false;
  if (!(a.tau == b.tau) || !(a.R == b.R)) return false;
  for (const Letter& x : mod.g_basis(degree_bound))
    if (!(a.zeta(x) == b.zeta(x))) return false;
  return true;
}

bool two_equal(const TwoMorphism& a, const TwoMorphism& b,
               const CrossedModule& mod, int degree_bound) {
  return a.T == b.T && one_equal(a.source, b.source, mod, degree_bound);
}

OneMorphism compose_one(const OneMorphism& a, const OneMorphism& b,
                        const CrossedModule& mod) {
  check_same_object(a.object(), b.object(), "compose_one");
  int n = a.object();
  const CrossedModule* m = &mod;
  Permutation sigma = a.tau.sigma;
  TensorElement rb = sigma_act(sigma, b.R);
  TensorElement R = mul(a.R, rb, mod);
  Zeta az = a.zeta, bz = b.zeta;
  TensorElement ra = a.R;
  Zeta z(n, [az, bz, ra, rb, sigma, m](const Letter& x) {
    return mul_un(ra, sigma_act(sigma, bz(x), *m), *m) +
           mul_un(az(x), rb, *m);
  });
  return {std::move(R), std::move(z), a.tau * b.tau};
}

TwoMorphism whisker_left(const OneMorphism& m, const TwoMorphism& t,
                         const CrossedModule& mod) {
  check_same_object(m.object(), t.object(), "whisker_left");
  UnElement T = mul_un(m.R, sigma_act(m.tau.sigma, t.T, mod), mod);
  return {compose_one(m, t.source, mod), std::move(T)};
}

TwoMorphism whisker_right(const TwoMorphism& t, const OneMorphism& m,
                          const CrossedModule& mod) {
  check_same_object(m.object(), t.object(), "whisker_right");
  UnElement T = mul_un(t.T, sigma_act(t.source.tau.sigma, m.R), mod);
  return {compose_one(t.source, m, mod), std::move(T)};
}

TwoMorphism vertical_compose(const TwoMorphism& a, const TwoMorphism& b,
                             const CrossedModule& mod) {
  check_same_object(a.object(), b.object(), "vertical_compose");
  if (!(a.source.tau == b.source.tau) ||
      !(a.source.R + beta_un(a.T, mod) == b.source.R))
    throw std::invalid_argument(
        "vertical_compose: source of the second factor does not match the "
        "target of the first");
  return {a.source, a.T + b.T};
}

TwoMorphism horizontal_compose(const TwoMorphism& a, const TwoMorphism& b,
                               const CrossedModule& mod) {
  return vertical_compose(whisker_right(a, b.source, mod),
                          whisker_left(target(a, mod), b, mod), mod);
}

OneMorphism tensor_one(const OneMorphism& a, const OneMorphism& b,
                       const CrossedModule& mod) {
  int n = a.object() + b.object();
  const CrossedModule* m = &mod;
  TensorElement R = tensor_concat(a.R, b.R);
  TensorElement ra = a.R, rb = b.R;
  Zeta az = a.zeta, bz = b.zeta;
  Zeta z(n, [az, bz, ra, rb, m](const Letter& x) {
    return un_tensor(ra, bz(x), *m) + un_tensor(az(x), rb, *m);
  });
  DecoratedPermutation tau{block_sum(a.tau.sigma, b.tau.sigma),
                           a.tau.k + b.tau.k};
  return {std::move(R), std::move(z), std::move(tau)};
}

TwoMorphism tensor_two(const TwoMorphism& a, const TwoMorphism& b,
                       const CrossedModule& mod) {
  OneMorphism src = tensor_one(a.source, b.source, mod);
  UnElement T = un_tensor(a.T, b.source.R, mod) +
                un_tensor(a.source.R + beta_un(a.T, mod), b.T, mod);
  return {std::move(src), std::move(T)};
}

OneMorphism braiding_one(int n, int m) {
  return {TensorElement::unit(n + m), Zeta::zero(n + m),
          {Permutation::block_transposition(n, m), 0}};
}

UnElement gl_bracket(const UnElement& t, const UnElement& s,
                     const CrossedModule& mod) {
  return mul_un(t, beta_un(s, mod), mod) - mul_un(s, beta_un(t, mod), mod);
}

UnElement gl_act(const OneMorphism& f, const UnElement& t,
                 const CrossedModule& mod) {
  return mul_un(f.R, sigma_act(f.tau.sigma, t, mod), mod) -
         mul_un(t, f.R, mod);
}

}  // namespace twobraid
