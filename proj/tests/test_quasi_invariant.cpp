#include "doctest.h"

#include "twobraid/model_io.hpp"
#include "twobraid/quasi_invariant.hpp"

using namespace twobraid;

namespace {

const StringModel& model() {
  static StringModel m;
  return m;
}

LetterComb c_times(const Rational& v) {
  return LetterComb::unit(StringModel::fun(0), v);
}

TensorElement pure_pair(const Letter& a, const Letter& b) {
  TensorMonomial m;
  m.slots = {{a}, {b}};
  return TensorElement::monomial(m);
}

}  // namespace

TEST_CASE("string tensor satisfies all quasi-invariance conditions") {
  QuasiInvariantTensor q = string_tensor(model());
  auto defects = validate_tensor(q, model(), 6);
  for (const auto& d : defects)
    MESSAGE(d.condition, " fails at ", d.witness, " with ", d.term_count,
            " terms");
  CHECK(defects.empty());
}

TEST_CASE("xi on e contains the omega(k,e) = x correction") {
  QuasiInvariantTensor q = string_tensor(model());
  UnElement xe = q.xi(StringModel::e());
  // -xi0(e) contributes +2 (x (x) k + k (x) x) through the -2 k (x) k term.
  TensorMonomial xk;
  xk.slots = {{StringModel::fun(1)}, {StringModel::k()}};
  CHECK(xe.value().terms().coeff(xk) == Rational(2));
  // C contributes -(1 (x) e).
  TensorMonomial oe;
  oe.slots = {{StringModel::fun(0)}, {StringModel::e()}};
  CHECK(xe.value().terms().coeff(oe) == Rational(-1));
  // xi vanishes on nothing here but is symmetric.
  CHECK(xe == permute_slots_un(Permutation({1, 0}), xe, model()));
}

TEST_CASE("non-symmetric r is rejected with a named witness") {
  QuasiInvariantTensor bad{pure_pair(StringModel::e(), StringModel::f()),
                           Zeta::zero(2), LetterComb{}};
  auto defects = validate_tensor(bad, model(), 2);
  bool found = false;
  for (const auto& d : defects)
    if (d.condition == std::string("r = flip(r)") && d.witness == "r")
      found = true;
  CHECK(found);
}

TEST_CASE("degenerate h = 0 module passes with invariant r") {
  FiniteCrossedModule sl2 = sl2_model();
  TensorElement r = pure_pair(StringModel::f(), StringModel::e()) +
                    pure_pair(StringModel::e(), StringModel::f()) -
                    Rational(2) * pure_pair(StringModel::k(), StringModel::k());
  QuasiInvariantTensor q{r, Zeta::zero(2), LetterComb{}};
  CHECK(validate_tensor(q, sl2, 0).empty());
}

TEST_CASE("coherence pins c = -2 under the direct convention") {
  CHECK(coherence_defect(string_tensor(model(), c_times(Rational(-2))),
                         model())
            .is_zero());
  for (long v : {0L, 1L, -1L}) {
    CAPTURE(v);
    CHECK_FALSE(coherence_defect(string_tensor(model(), c_times(Rational(v))),
                                 model())
                    .is_zero());
  }
}

TEST_CASE("the direct convention pins the opposite sign of c") {
  CHECK(coherence_defect(string_tensor(model(), c_times(Rational(2))),
                         model(), CoherenceConvention::kDirect)
            .is_zero());
  CHECK_FALSE(coherence_defect(string_tensor(model(), c_times(Rational(-2))),
                               model(), CoherenceConvention::kDirect)
                  .is_zero());
}

TEST_CASE("coherence defect is affine in c") {
  QuasiInvariantTensor q1 = string_tensor(model(), c_times(Rational(3)));
  QuasiInvariantTensor q2 = string_tensor(model(), c_times(Rational(-1)));
  UnElement diff = coherence_defect(q1, model()) -
                   coherence_defect(q2, model());
  // Cyclic sum of (c1 - c2) (x) r.
  TensorElement cr = concat_mul(
      TensorElement::letter_at(3, 0, StringModel::fun(0)) * Rational(4),
      insertion(q1.r, {1, 2}, 3));
  UnElement base = un_normalize(cr, model());
  Permutation rho({1, 2, 0});
  UnElement expected = base + permute_slots_un(rho, base, model()) +
                       permute_slots_un(rho * rho, base, model());
  CHECK(diff == expected);
}

TEST_CASE("phi pairing identities hold for all sl2 pairs") {
  auto defects = phi_pairing_check(model());
  for (const auto& d : defects)
    MESSAGE(d.condition, " fails at ", d.witness);
  CHECK(defects.empty());
}
