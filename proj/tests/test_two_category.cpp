#include "doctest.h"

#include "twobraid/model_io.hpp"
#include "twobraid/string_model.hpp"
#include "twobraid/two_category.hpp"

#include <random>

using namespace twobraid;

namespace {

const StringModel& model() {
  static StringModel m;
  return m;
}

constexpr int kD = 3;

TensorMonomial random_an_monomial(std::mt19937_64& rng, int arity,
                                  int max_len = 2, int max_deg = 2) {
  std::vector<Letter> g_alphabet = {StringModel::f(), StringModel::k(),
                                    StringModel::e()};
  for (int d = 0; d <= max_deg; ++d) g_alphabet.push_back(StringModel::form(d));
  TensorMonomial m;
  m.slots.resize(static_cast<std::size_t>(arity));
  for (auto& slot : m.slots)
    for (std::size_t i = 0, len = rng() % (max_len + 1); i < len; ++i)
      slot.push_back(g_alphabet[rng() % g_alphabet.size()]);
  int slot = static_cast<int>(rng() % arity);
  Word& w = m.slots[static_cast<std::size_t>(slot)];
  std::size_t pos = w.empty() ? 0 : rng() % (w.size() + 1);
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos),
           StringModel::fun(static_cast<int>(rng() % (max_deg + 1))));
  return m;
}

UnElement random_un(std::mt19937_64& rng, int arity, int terms = 2) {
  TensorElement out(arity);
  for (int t = 0; t < terms; ++t) {
    long num = static_cast<long>(rng() % 7) - 3;
    if (num == 0) num = 1;
    out.add(random_an_monomial(rng, arity), Rational(num));
  }
  return un_normalize(out, model());
}

// Random valid 1-morphism: braiding composites (for a nontrivial sigma and
// decoration) shifted along random 2-morphisms.
OneMorphism random_one(std::mt19937_64& rng, int n) {
  OneMorphism m = OneMorphism::identity(n);
  m.tau.k = static_cast<std::int64_t>(rng() % 4);
  int steps = static_cast<int>(rng() % 3);
  for (int i = 0; i < steps && n >= 2; ++i) {
    int a = 1 + static_cast<int>(rng() % (n - 1));
    m = compose_one(m, braiding_one(a, n - a), model());
  }
  TwoMorphism shift{m, random_un(rng, n)};
  return target(shift, model());
}

TwoMorphism random_two(std::mt19937_64& rng, int n) {
  return {random_one(rng, n), random_un(rng, n)};
}

}  // namespace

TEST_CASE("identity is a two-sided unit for composition") {
  std::mt19937_64 rng(301);
  for (int trial = 0; trial < 5; ++trial) {
    OneMorphism m = random_one(rng, 2);
    OneMorphism id = OneMorphism::identity(2);
    CHECK(one_equal(compose_one(m, id, model()), m, model(), kD));
    CHECK(one_equal(compose_one(id, m, model()), m, model(), kD));
  }
}

TEST_CASE("decorations add under composition") {
  OneMorphism a = OneMorphism::identity(2);
  a.tau.k = 2;
  OneMorphism b = OneMorphism::identity(2);
  b.tau.k = 3;
  CHECK(compose_one(a, b, model()).tau.k == 5);
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(302);
  for (int trial = 0; trial < 4; ++trial) {
    OneMorphism a = random_one(rng, 2);
    OneMorphism b = random_one(rng, 2);
    OneMorphism c = random_one(rng, 2);
    CHECK(one_equal(compose_one(compose_one(a, b, model()), c, model()),
                    compose_one(a, compose_one(b, c, model()), model()),
                    model(), kD));
  }
}

TEST_CASE("random shifted morphisms and their composites are valid") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 3; ++trial) {
    OneMorphism a = random_one(rng, 2);
    OneMorphism b = random_one(rng, 2);
    CHECK(validate_one(a, model(), kD).empty());
    CHECK(validate_one(compose_one(a, b, model()), model(), kD).empty());
    CHECK(validate_one(tensor_one(a, b, model()), model(), kD).empty());
    TwoMorphism t = random_two(rng, 2);
    CHECK(validate_two(t, model(), kD).empty());
    CHECK(validate_two(whisker_left(a, t, model()), model(), kD).empty());
    CHECK(validate_two(whisker_right(t, a, model()), model(), kD).empty());
  }
  CHECK(validate_one(braiding_one(1, 2), model(), kD).empty());
}

TEST_CASE("whiskering by the identity is trivial") {
  std::mt19937_64 rng(304);
  TwoMorphism t = random_two(rng, 2);
  OneMorphism id = OneMorphism::identity(2);
  CHECK(two_equal(whisker_left(id, t, model()), t, model(), kD));
  CHECK(two_equal(whisker_right(t, id, model()), t, model(), kD));
}

TEST_CASE("vertical composition adds arrow data and inverts") {
  std::mt19937_64 rng(305);
  TwoMorphism a = random_two(rng, 2);
  TwoMorphism b{target(a, model()), random_un(rng, 2)};
  TwoMorphism v = vertical_compose(a, b, model());
  CHECK(v.T == a.T + b.T);
  // Inverse: -T composed back gives the identity 2-morphism.
  TwoMorphism inv{target(a, model()), -a.T};
  CHECK(vertical_compose(a, inv, model()).T.is_zero());
  // Mismatched sources are rejected.
  CHECK_THROWS_AS(vertical_compose(a, a, model()), std::invalid_argument);
}

TEST_CASE("interchange law for horizontal composition") {
  std::mt19937_64 rng(306);
  for (int trial = 0; trial < 3; ++trial) {
    TwoMorphism a = random_two(rng, 2);
    TwoMorphism b = random_two(rng, 2);
    // The two whiskering orders agree.
    TwoMorphism h1 = horizontal_compose(a, b, model());
    TwoMorphism h2 = vertical_compose(whisker_left(a.source, b, model()),
                                      whisker_right(a, target(b, model()),
                                                    model()),
                                      model());
    CHECK(two_equal(h1, h2, model(), kD));
    // Full square: vertical-then-horizontal equals horizontal-then-vertical.
    TwoMorphism a2{target(a, model()), random_un(rng, 2)};
    TwoMorphism b2{target(b, model()), random_un(rng, 2)};
    TwoMorphism lhs = horizontal_compose(vertical_compose(a, a2, model()),
                                         vertical_compose(b, b2, model()),
                                         model());
    TwoMorphism rhs = vertical_compose(horizontal_compose(a, b, model()),
                                       horizontal_compose(a2, b2, model()),
                                       model());
    CHECK(two_equal(lhs, rhs, model(), kD));
  }
}

TEST_CASE("whiskering is associative across 1-morphisms") {
  std::mt19937_64 rng(307);
  for (int trial = 0; trial < 3; ++trial) {
    TwoMorphism t = random_two(rng, 2);
    OneMorphism h = random_one(rng, 2);
    OneMorphism s = random_one(rng, 2);
    CHECK(two_equal(whisker_right(whisker_right(t, h, model()), s, model()),
                    whisker_right(t, compose_one(h, s, model()), model()),
                    model(), kD));
    CHECK(two_equal(whisker_left(h, whisker_left(s, t, model()), model()),
                    whisker_left(compose_one(h, s, model()), t, model()),
                    model(), kD));
    CHECK(two_equal(whisker_right(whisker_left(h, t, model()), s, model()),
                    whisker_left(h, whisker_right(t, s, model()), model()),
                    model(), kD));
  }
}

TEST_CASE("tensor respects objects and the unit") {
  std::mt19937_64 rng(308);
  OneMorphism a = random_one(rng, 2);
  OneMorphism b = random_one(rng, 1);
  CHECK(tensor_one(a, b, model()).object() == 3);
  OneMorphism unit = OneMorphism::identity(0);
  CHECK(one_equal(tensor_one(a, unit, model()), a, model(), kD));
  CHECK(one_equal(tensor_one(unit, a, model()), a, model(), kD));
}

TEST_CASE("tensor of 2-morphisms satisfies the interchange identity") {
  std::mt19937_64 rng(309);
  for (int trial = 0; trial < 3; ++trial) {
    TwoMorphism a = random_two(rng, 2);
    TwoMorphism b = random_two(rng, 1);
    // T (x) R' + (R + beta(T)) (x) T' = R (x) T' + T (x) (R' + beta(T')).
    UnElement lhs = un_tensor(a.T, b.source.R, model()) +
                    un_tensor(target(a, model()).R, b.T, model());
    UnElement rhs = un_tensor(a.source.R, b.T, model()) +
                    un_tensor(a.T, target(b, model()).R, model());
    CHECK(lhs == rhs);
    // Hence the two evaluations of the 2 (x) 2 tensor agree.
    TwoMorphism t = tensor_two(a, b, model());
    CHECK(t.T == rhs);
    CHECK(validate_two(t, model(), kD).empty());
  }
}

TEST_CASE("braiding is involutive and trivial against the unit") {
  OneMorphism bb =
      compose_one(braiding_one(1, 2), braiding_one(2, 1), model());
  CHECK(one_equal(bb, OneMorphism::identity(3), model(), kD));
  CHECK(one_equal(braiding_one(2, 0), OneMorphism::identity(2), model(), kD));
  CHECK(one_equal(braiding_one(0, 2), OneMorphism::identity(2), model(), kD));
}

TEST_CASE("braiding is natural in both factors") {
  std::mt19937_64 rng(310);
  for (int trial = 0; trial < 3; ++trial) {
    OneMorphism f = random_one(rng, 1);
    OneMorphism g = random_one(rng, 2);
    OneMorphism lhs = compose_one(tensor_one(f, g, model()),
                                  braiding_one(1, 2), model());
    OneMorphism rhs = compose_one(braiding_one(1, 2),
                                  tensor_one(g, f, model()), model());
    CHECK(one_equal(lhs, rhs, model(), kD));
    OneMorphism lhs2 = compose_one(tensor_one(g, f, model()),
                                   braiding_one(2, 1), model());
    OneMorphism rhs2 = compose_one(braiding_one(2, 1),
                                   tensor_one(f, g, model()), model());
    CHECK(one_equal(lhs2, rhs2, model(), kD));
  }
}

TEST_CASE("gl(x) bracket and action identities") {
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 5; ++trial) {
    UnElement t = random_un(rng, 2);
    UnElement s = random_un(rng, 2);
    OneMorphism f = random_one(rng, 2);
    // beta(T) |> S = {T, S}.
    UnElement adj = mul_un(beta_un(t, model()), s, model()) -
                    mul_un(s, beta_un(t, model()), model());
    CHECK(adj == gl_bracket(t, s, model()));
    // beta(f |> T) = f |> beta(T).
    TensorElement lhs = beta_un(gl_act(f, t, model()), model());
    TensorElement sig =
        permute_slots(f.tau.sigma.inverse(), beta_un(t, model()));
    TensorElement rhs =
        mul(f.R, sig, model()) - mul(beta_un(t, model()), f.R, model());
    CHECK(lhs == rhs);
    // The zero element acts as zero.
    CHECK(gl_act(f, UnElement(2), model()).is_zero());
  }
}

TEST_CASE("cross-object operations are typed errors") {
  OneMorphism a = OneMorphism::identity(2);
  OneMorphism b = OneMorphism::identity(3);
  CHECK_THROWS_AS(compose_one(a, b, model()), ArityError);
  TwoMorphism t = TwoMorphism::identity(b);
  CHECK_THROWS_AS(whisker_left(a, t, model()), ArityError);
  CHECK_THROWS_AS(whisker_right(t, a, model()), ArityError);
}

TEST_CASE("degenerate h = 0 model trivializes 2-morphisms") {
  FiniteCrossedModule sl2 = sl2_model();
  // With no h letters, U^(n) is zero and every 1-morphism has zeta = 0 on
  // invariant R; the braiding passes validation.
  CHECK(validate_one(braiding_one(1, 1), sl2, 0).empty());
  CHECK(validate_one(OneMorphism::identity(2), sl2, 0).empty());
}
