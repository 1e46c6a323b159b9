#include "doctest.h"

#include "twobraid/kz_forms.hpp"
#include "twobraid/model_io.hpp"

#include <set>

using namespace twobraid;

namespace {

const StringModel& model() {
  static StringModel m;
  return m;
}

const Braiding2& braiding() {
  static Braiding2 b = build_braiding(string_tensor(model()), model());
  return b;
}

bool all_zero_un(const std::map<FormMonomial, UnElement>& m) {
  for (const auto& [k, v] : m)
    if (!v.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("wedge is anticommutative and kills squares") {
  FormComb a = wedge_word({form_gen(0, 1), form_gen(0, 1)});
  CHECK(a.is_zero());
  FormComb xy = wedge_word({form_gen(0, 1), form_gen(2, 3)});
  FormComb yx = wedge_word({form_gen(2, 3), form_gen(0, 1)});
  CHECK((xy + yx).is_zero());
  // Generator symmetry w_ab = w_ba is applied at construction.
  CHECK(form_gen(3, 1) == form_gen(1, 3));
}

TEST_CASE("arnold relation normalizes to zero") {
  FormComb sum = wedge_word({form_gen(0, 1), form_gen(1, 2)}) +
                 wedge_word({form_gen(1, 2), form_gen(2, 0)}) +
                 wedge_word({form_gen(2, 0), form_gen(0, 1)});
  CHECK(wedge_normalize(sum).is_zero());
  // The full triple circuit vanishes in degree 3.
  CHECK(wedge_word({form_gen(0, 1), form_gen(1, 2), form_gen(0, 2)})
            .is_zero());
}

TEST_CASE("wedge_normalize is idempotent and degree preserving") {
  FormComb e = wedge_word({form_gen(0, 2), form_gen(1, 2), form_gen(2, 3)});
  CHECK(wedge_normalize(e) == e);
  for (const auto& [m, c] : e) CHECK(m.degree() == 3);
}

TEST_CASE("degree-3 normal forms on four points span six monomials") {
  std::vector<FormGen> gens;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) gens.push_back(form_gen(a, b));
  std::set<FormMonomial> support;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (std::size_t k = j + 1; k < gens.size(); ++k)
        for (const auto& [m, c] : wedge_word({gens[i], gens[j], gens[k]}))
          support.insert(m);
  CHECK(support.size() == 6);
  for (const FormMonomial& m : support) {
    // Strictly increasing second indices with i_k < j_k.
    CHECK(m.gens[0].b < m.gens[1].b);
    CHECK(m.gens[1].b < m.gens[2].b);
  }
}

TEST_CASE("connection term counts by particle number") {
  PQData pq = pq_arrow_parts(braiding(), 3);
  const TensorElement& r = braiding().tensor().r;
  CHECK(build_connection(pq, r, 2).B.empty());
  CHECK(build_connection(pq, r, 3).B.size() == 2);
  Connection2 c4 = build_connection(pq, r, 4);
  CHECK(c4.A.size() == 6);
  CHECK(c4.B.size() == 8);
}

TEST_CASE("string connection is fake flat") {
  PQData pq = pq_arrow_parts(braiding(), 3);
  const TensorElement& r = braiding().tensor().r;
  for (int n : {3, 4}) {
    CAPTURE(n);
    Connection2 c = build_connection(pq, r, n);
    CurvatureReport rep = curvature_and_fake_flatness(c);
    CHECK(rep.fake_defect.empty());
    // With a non-invariant r the curvature itself does not vanish.
    if (n >= 3) CHECK_FALSE(rep.F_A.empty());
  }
}

TEST_CASE("string connection is flat at n = 4 and only for c = -2") {
  PQData pq = pq_arrow_parts(braiding(), 3);
  const TensorElement& r = braiding().tensor().r;
  CHECK(all_zero_un(two_curvature(build_connection(pq, r, 4))));
  Braiding2 bad(
      string_tensor(model(), LetterComb::unit(StringModel::fun(0))), model());
  PQData pq_bad = pq_arrow_parts(bad, 3);
  CHECK_FALSE(all_zero_un(two_curvature(build_connection(pq_bad, r, 4))));
}

TEST_CASE("degenerate h = 0 module gives the classically flat connection") {
  FiniteCrossedModule sl2 = sl2_model();
  TensorMonomial fe, ef, kk;
  fe.slots = {{StringModel::f()}, {StringModel::e()}};
  ef.slots = {{StringModel::e()}, {StringModel::f()}};
  kk.slots = {{StringModel::k()}, {StringModel::k()}};
  TensorElement r = TensorElement::monomial(fe) + TensorElement::monomial(ef) -
                    Rational(2) * TensorElement::monomial(kk);
  Braiding2 b = build_braiding({r, Zeta::zero(2), LetterComb{}}, sl2, 0);
  PQData pq = pq_arrow_parts(b, 3);
  Connection2 c = build_connection(pq, r, 4);
  CHECK(c.B.empty());
  CurvatureReport rep = curvature_and_fake_flatness(c);
  CHECK(rep.F_A.empty());
  CHECK(rep.fake_defect.empty());
  CHECK(two_curvature(c).empty());
}

TEST_CASE("matrix identities all verify") {
  auto defects = matrix_identities();
  for (const auto& d : defects)
    MESSAGE(d.condition, " fails at ", d.witness, " with ", d.term_count,
            " terms");
  CHECK(defects.empty());
}

TEST_CASE("symmetric group pullback fixes the string connection") {
  PQData pq = pq_arrow_parts(braiding(), 3);
  const TensorElement& r = braiding().tensor().r;
  Connection2 c = build_connection(pq, r, 3);
  CHECK(connection_equal(sn_pullback(Permutation::identity(3), c), c));
  CHECK(connection_equal(sn_pullback(Permutation({1, 0, 2}), c), c));
  CHECK(connection_equal(sn_pullback(Permutation({1, 2, 0}), c), c));
}

TEST_CASE("pullback is a group action") {
  // Use a deliberately unsymmetric connection so the action is visible.
  PQData pq = pq_arrow_parts(braiding(), 3);
  Connection2 c{3, &model(), {}, {}};
  c.A.emplace(FormMonomial{{form_gen(0, 1)}},
              insertion(braiding().tensor().r, {0, 1}, 3));
  c.B.emplace(FormMonomial{{form_gen(0, 1), form_gen(0, 2)}}, pq.p_arrow);
  Permutation sigma({1, 2, 0});
  Permutation tau({0, 2, 1});
  CHECK_FALSE(connection_equal(sn_pullback(sigma, c), c));
  CHECK(connection_equal(sn_pullback(tau * sigma, c),
                         sn_pullback(tau, sn_pullback(sigma, c))));
}
