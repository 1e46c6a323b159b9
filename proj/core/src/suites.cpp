#include "twobraid/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <random>

#include "twobraid/braiding2.hpp"
#include "twobraid/kz_forms.hpp"
#include "twobraid/model_io.hpp"
#include "twobraid/quasi_invariant.hpp"

namespace twobraid {

namespace {

const StringModel& string_model() {
  static StringModel m;
  return m;
}

LetterComb c_letter(const Rational& c) {
  return LetterComb::unit(StringModel::fun(0), c);
}

Braiding2 config_braiding(const SuiteConfig& cfg) {
  // Validation is skipped so off-theorem values of c remain explorable; the
  // coherence suite is the dedicated detector for them.
  return Braiding2(string_tensor(string_model(), c_letter(cfg.c)),
                   string_model());
}

std::mt19937_64 seeded(const SuiteConfig& cfg, std::uint64_t salt) {
  return std::mt19937_64(cfg.seed * 0x9e3779b97f4a7c15ULL + salt);
}

// Runs one check body (returning the exact defect monomial count) with
// error capture and optional timing.
void add_check(SuiteReport& rep, const std::string& id, const std::string& ref,
               const std::function<std::size_t()>& body) {
  CheckResult r;
  r.id = id;
  r.ref = ref;
  auto start = std::chrono::steady_clock::now();
  try {
    r.defect_term_count = body();
    r.status = r.defect_term_count == 0 ? "pass" : "fail";
  } catch (const ResourceCapError&) {
    throw;  // surfaces as a dedicated process exit code
  } catch (const std::exception&) {
    r.status = "error";
    r.defect_term_count = 1;
  }
  if (rep.config.timings)
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  rep.checks.push_back(std::move(r));
}

std::size_t defect_total(const std::vector<MorphismDefect>& ds) {
  std::size_t total = 0;
  for (const MorphismDefect& d : ds) total += std::max<std::size_t>(d.term_count, 1);
  return total;
}

TensorMonomial pure(std::vector<Word> slots) {
  TensorMonomial m;
  m.slots = std::move(slots);
  return m;
}

// -- random element generators (shared by several suites) -----------------

Word random_g_word(std::mt19937_64& rng, const std::vector<Letter>& alphabet,
                   std::size_t max_len) {
  Word w;
  for (std::size_t i = 0, len = rng() % (max_len + 1); i < len; ++i)
    w.push_back(alphabet[rng() % alphabet.size()]);
  return w;
}

// Arity-n monomial with exactly one h letter, short g words.
TensorMonomial random_an_monomial(std::mt19937_64& rng,
                                  const CrossedModule& mod, int arity,
                                  int max_len, int max_deg) {
  std::vector<Letter> g_alphabet = mod.g_basis(max_deg);
  std::vector<Letter> h_alphabet = mod.h_basis(max_deg);
  TensorMonomial m;
  m.slots.resize(static_cast<std::size_t>(arity));
  for (auto& slot : m.slots)
    slot = random_g_word(rng, g_alphabet, static_cast<std::size_t>(max_len));
  int slot = static_cast<int>(rng() % arity);
  Word& w = m.slots[static_cast<std::size_t>(slot)];
  std::size_t pos = w.empty() ? 0 : rng() % (w.size() + 1);
  w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos),
           h_alphabet[rng() % h_alphabet.size()]);
  return m;
}

TensorElement random_an_element(std::mt19937_64& rng, const CrossedModule& mod,
                                int arity, int terms = 3, int max_len = 3,
                                int max_deg = 3) {
  TensorElement out(arity);
  for (int t = 0; t < terms; ++t) {
    long num = static_cast<long>(rng() % 9) - 4;
    if (num == 0) num = 1;
    out.add(random_an_monomial(rng, mod, arity, max_len, max_deg),
            Rational(num));
  }
  return out;
}

UnElement random_un(std::mt19937_64& rng, const CrossedModule& mod, int arity,
                    int terms = 2) {
  return un_normalize(random_an_element(rng, mod, arity, terms, 2, 2), mod);
}

// Random valid 1-morphism: a braiding composite (nontrivial permutation and
// decoration) shifted along a random 2-morphism.
OneMorphism random_one(std::mt19937_64& rng, const CrossedModule& mod, int n) {
  OneMorphism m = OneMorphism::identity(n);
  m.tau.k = static_cast<std::int64_t>(rng() % 4);
  int steps = static_cast<int>(rng() % 3);
  for (int i = 0; i < steps && n >= 2; ++i) {
    int a = 1 + static_cast<int>(rng() % (n - 1));
    m = compose_one(m, braiding_one(a, n - a), mod);
  }
  TwoMorphism shift{m, random_un(rng, mod, n)};
  return target(shift, mod);
}

TwoMorphism random_two(std::mt19937_64& rng, const CrossedModule& mod, int n) {
  return {random_one(rng, mod, n), random_un(rng, mod, n)};
}

// -- pbw -------------------------------------------------------------------

void suite_pbw(SuiteReport& rep, const CrossedModule& mod) {
  const SuiteConfig& cfg = rep.config;
  std::vector<Letter> sl2 = {StringModel::f(), StringModel::k(),
                             StringModel::e()};
  std::vector<Letter> small = cfg.model_path.empty() ? sl2 : mod.g_basis(0);
  auto schedules_agree = [&](const TensorElement& e) {
    return pbw_normalize(e, mod, PbwSchedule::kLeftmostInnermost) ==
           pbw_normalize(e, mod, PbwSchedule::kRightmostInnermost);
  };
  add_check(rep, "pbw-short-words",
            "two rewrite schedules agree on all short basis words", [&] {
              std::size_t bad = 0;
              std::vector<Word> frontier = {{}};
              for (int len = 1; len <= 4; ++len) {
                std::vector<Word> next;
                for (const Word& w : frontier)
                  for (const Letter& l : small) {
                    Word ext = w;
                    ext.push_back(l);
                    if (!schedules_agree(TensorElement::monomial(pure({ext}))))
                      ++bad;
                    next.push_back(std::move(ext));
                  }
                frontier = std::move(next);
              }
              return bad;
            });
  add_check(rep, "pbw-random-words",
            "two rewrite schedules agree on 200 seeded random words", [&] {
              std::mt19937_64 rng = seeded(cfg, 11);
              std::vector<Letter> alphabet = mod.g_basis(3);
              std::size_t bad = 0;
              for (int trial = 0; trial < 200; ++trial) {
                TensorElement e =
                    TensorElement::monomial(pure({random_g_word(rng, alphabet, 6)}));
                if (!schedules_agree(e)) ++bad;
              }
              return bad;
            });
  add_check(rep, "pbw-idempotent",
            "normalizing a normal form is the identity", [&] {
              std::mt19937_64 rng = seeded(cfg, 12);
              std::vector<Letter> alphabet = mod.g_basis(3);
              std::size_t bad = 0;
              for (int trial = 0; trial < 50; ++trial) {
                TensorElement e =
                    TensorElement::monomial(pure({random_g_word(rng, alphabet, 5)}));
                TensorElement n = pbw_normalize(e, mod);
                if (pbw_normalize(n, mod) != n) ++bad;
              }
              return bad;
            });
}

// -- classical-4t ------------------------------------------------------------

void suite_classical_4t(SuiteReport& rep) {
  FiniteCrossedModule sl2 = sl2_model();
  Letter f = StringModel::f(), k = StringModel::k(), e = StringModel::e();
  add_check(rep, "4t-symmetric-r",
            "4-term defect of f(x)e + e(x)f - 2 k(x)k vanishes", [&] {
              TensorElement r(2);
              r.add(pure({{f}, {e}}), Rational(1));
              r.add(pure({{e}, {f}}), Rational(1));
              r.add(pure({{k}, {k}}), Rational(-2));
              return classical_four_term_defect(r, sl2).term_count();
            });
  add_check(rep, "4t-negative-control",
            "4-term defect of the non-invariant e(x)f is nonzero", [&] {
              TensorElement r(2);
              r.add(pure({{e}, {f}}), Rational(1));
              return std::size_t(
                  classical_four_term_defect(r, sl2).is_zero() ? 1 : 0);
            });
}

// -- un-space ----------------------------------------------------------------

void suite_un_space(SuiteReport& rep, const CrossedModule& mod) {
  const SuiteConfig& cfg = rep.config;
  UnOracle oracle = resolved_oracle(cfg);
  if (cfg.model_path.empty()) {
    const StringModel& m = string_model();
    add_check(rep, "un-boundary-slide",
              "(dx)(x)x equals x(x)(dx) in the quotient", [&] {
                TensorElement lhs = TensorElement::monomial(
                    pure({{StringModel::form(0)}, {StringModel::fun(1)}}));
                TensorElement rhs = TensorElement::monomial(
                    pure({{StringModel::fun(1)}, {StringModel::form(0)}}));
                return std::size_t(un_equal(lhs, rhs, m, oracle) ? 0 : 1);
              });
    add_check(rep, "un-unit-boundary", "1(x)(dx) is zero in the quotient",
              [&] {
                TensorElement e = TensorElement::monomial(
                    pure({{StringModel::fun(0)}, {StringModel::form(0)}}));
                return std::size_t(
                    un_equal(e, TensorElement(2), m, oracle) ? 0 : 1);
              });
    add_check(rep, "un-kernel-bracket",
              "1(x)[X,Y] drops the cocycle part, for all sl2 pairs", [&] {
                std::size_t bad = 0;
                std::vector<Letter> sl2 = {StringModel::f(), StringModel::k(),
                                           StringModel::e()};
                for (const Letter& X : sl2)
                  for (const Letter& Y : sl2) {
                    TensorElement full(2), reduced(2);
                    for (const auto& [l, c] : m.bracket(X, Y))
                      full.add(pure({{StringModel::fun(0)}, {l}}), c);
                    for (const auto& [l, c] : m.sl2_bracket(X, Y))
                      reduced.add(pure({{StringModel::fun(0)}, {l}}), c);
                    if (!un_equal(full, reduced, m, oracle)) ++bad;
                  }
                return bad;
              });
  }
  add_check(rep, "un-oracle-agreement",
            "rewrite and span equality agree on 200 seeded random elements",
            [&] {
              if (mod.h_basis(3).empty()) return std::size_t(0);
              std::mt19937_64 rng = seeded(cfg, 21);
              std::size_t bad = 0;
              for (int trial = 0; trial < 200; ++trial) {
                int arity = 2 + static_cast<int>(rng() % 2);
                TensorElement a = random_an_element(rng, mod, arity);
                // kBoth throws on oracle disagreement.
                bool zero = un_equal(a, TensorElement(arity), mod,
                                     UnOracle::kBoth);
                UnElement n = un_normalize(a, mod);
                if (zero != n.is_zero()) ++bad;
                if (!un_equal(a, n.value(), mod, UnOracle::kBoth)) ++bad;
              }
              return bad;
            });
}

// -- two-cat-laws ------------------------------------------------------------

void suite_two_cat_laws(SuiteReport& rep) {
  const SuiteConfig& cfg = rep.config;
  const StringModel& m = string_model();
  const int D = cfg.degree_bound;
  constexpr int kTrials = 25;
  auto trial_loop = [&](std::uint64_t salt,
                        const std::function<bool(std::mt19937_64&)>& one) {
    std::mt19937_64 rng = seeded(cfg, salt);
    std::size_t bad = 0;
    for (int t = 0; t < kTrials; ++t)
      if (!one(rng)) ++bad;
    return bad;
  };
  add_check(rep, "law-identity-unit",
            "the identity is a two-sided unit for composition", [&] {
              return trial_loop(31, [&](std::mt19937_64& rng) {
                OneMorphism a = random_one(rng, m, 2);
                OneMorphism id = OneMorphism::identity(2);
                return one_equal(compose_one(a, id, m), a, m, D) &&
                       one_equal(compose_one(id, a, m), a, m, D);
              });
            });
  add_check(rep, "law-compose-assoc", "composition of 1-morphisms associates",
            [&] {
              return trial_loop(32, [&](std::mt19937_64& rng) {
                OneMorphism a = random_one(rng, m, 2);
                OneMorphism b = random_one(rng, m, 2);
                OneMorphism c = random_one(rng, m, 2);
                return one_equal(
                    compose_one(compose_one(a, b, m), c, m),
                    compose_one(a, compose_one(b, c, m), m), m, D);
              });
            });
  add_check(rep, "law-closure-valid",
            "composites, tensors, and whiskerings of valid data are valid",
            [&] {
              return trial_loop(33, [&](std::mt19937_64& rng) {
                OneMorphism a = random_one(rng, m, 2);
                OneMorphism b = random_one(rng, m, 2);
                TwoMorphism t = random_two(rng, m, 2);
                return validate_one(a, m, D).empty() &&
                       validate_one(compose_one(a, b, m), m, D).empty() &&
                       validate_one(tensor_one(a, b, m), m, D).empty() &&
                       validate_two(t, m, D).empty() &&
                       validate_two(whisker_left(a, t, m), m, D).empty() &&
                       validate_two(whisker_right(t, a, m), m, D).empty();
              });
            });
  add_check(rep, "law-vertical",
            "vertical composition adds arrow parts and inverts", [&] {
              return trial_loop(34, [&](std::mt19937_64& rng) {
                TwoMorphism a = random_two(rng, m, 2);
                TwoMorphism b{target(a, m), random_un(rng, m, 2)};
                TwoMorphism inv{target(a, m), -a.T};
                return vertical_compose(a, b, m).T == a.T + b.T &&
                       vertical_compose(a, inv, m).T.is_zero();
              });
            });
  add_check(rep, "law-interchange",
            "horizontal and vertical composition satisfy interchange", [&] {
              return trial_loop(35, [&](std::mt19937_64& rng) {
                TwoMorphism a = random_two(rng, m, 2);
                TwoMorphism b = random_two(rng, m, 2);
                TwoMorphism h1 = horizontal_compose(a, b, m);
                TwoMorphism h2 = vertical_compose(
                    whisker_left(a.source, b, m),
                    whisker_right(a, target(b, m), m), m);
                if (!two_equal(h1, h2, m, D)) return false;
                TwoMorphism a2{target(a, m), random_un(rng, m, 2)};
                TwoMorphism b2{target(b, m), random_un(rng, m, 2)};
                TwoMorphism lhs = horizontal_compose(
                    vertical_compose(a, a2, m), vertical_compose(b, b2, m), m);
                TwoMorphism rhs = vertical_compose(
                    horizontal_compose(a, b, m),
                    horizontal_compose(a2, b2, m), m);
                return two_equal(lhs, rhs, m, D);
              });
            });
  add_check(rep, "law-whisker-compat",
            "whiskering is compatible with composition on both sides", [&] {
              return trial_loop(36, [&](std::mt19937_64& rng) {
                TwoMorphism t = random_two(rng, m, 2);
                OneMorphism h = random_one(rng, m, 2);
                OneMorphism s = random_one(rng, m, 2);
                return two_equal(
                           whisker_right(whisker_right(t, h, m), s, m),
                           whisker_right(t, compose_one(h, s, m), m), m, D) &&
                       two_equal(
                           whisker_left(h, whisker_left(s, t, m), m),
                           whisker_left(compose_one(h, s, m), t, m), m, D) &&
                       two_equal(
                           whisker_right(whisker_left(h, t, m), s, m),
                           whisker_left(h, whisker_right(t, s, m), m), m, D);
              });
            });
  add_check(rep, "law-tensor-interchange",
            "the two evaluations of the tensor of 2-morphisms agree", [&] {
              return trial_loop(37, [&](std::mt19937_64& rng) {
                TwoMorphism a = random_two(rng, m, 2);
                TwoMorphism b = random_two(rng, m, 1);
                UnElement lhs = un_tensor(a.T, b.source.R, m) +
                                un_tensor(target(a, m).R, b.T, m);
                UnElement rhs = un_tensor(a.source.R, b.T, m) +
                                un_tensor(a.T, target(b, m).R, m);
                TwoMorphism t = tensor_two(a, b, m);
                return lhs == rhs && t.T == rhs &&
                       validate_two(t, m, D).empty();
              });
            });
  add_check(rep, "law-braiding-involutive",
            "the braiding squares to the identity and fixes the unit", [&] {
              OneMorphism bb =
                  compose_one(braiding_one(1, 2), braiding_one(2, 1), m);
              bool ok =
                  one_equal(bb, OneMorphism::identity(3), m, D) &&
                  one_equal(braiding_one(2, 0), OneMorphism::identity(2), m,
                            D) &&
                  one_equal(braiding_one(0, 2), OneMorphism::identity(2), m, D);
              return std::size_t(ok ? 0 : 1);
            });
  add_check(rep, "law-braiding-natural",
            "the braiding strictly commutes with tensor 1-morphisms", [&] {
              return trial_loop(38, [&](std::mt19937_64& rng) {
                OneMorphism f = random_one(rng, m, 1);
                OneMorphism g = random_one(rng, m, 2);
                return one_equal(
                           compose_one(tensor_one(f, g, m), braiding_one(1, 2),
                                       m),
                           compose_one(braiding_one(1, 2), tensor_one(g, f, m),
                                       m),
                           m, D) &&
                       one_equal(
                           compose_one(tensor_one(g, f, m), braiding_one(2, 1),
                                       m),
                           compose_one(braiding_one(2, 1), tensor_one(f, g, m),
                                       m),
                           m, D);
              });
            });
  add_check(rep, "gl-peiffer",
            "boundary action equals the bracket in the derived crossed module",
            [&] {
              return trial_loop(39, [&](std::mt19937_64& rng) {
                UnElement t = random_un(rng, m, 2);
                UnElement s = random_un(rng, m, 2);
                UnElement adj = mul_un(beta_un(t, m), s, m) -
                                mul_un(s, beta_un(t, m), m);
                return adj == gl_bracket(t, s, m);
              });
            });
  add_check(rep, "gl-boundary-equivariance",
            "the boundary intertwines the 1-morphism action", [&] {
              return trial_loop(40, [&](std::mt19937_64& rng) {
                UnElement t = random_un(rng, m, 2);
                OneMorphism f = random_one(rng, m, 2);
                TensorElement lhs = beta_un(gl_act(f, t, m), m);
                TensorElement sig =
                    permute_slots(f.tau.sigma.inverse(), beta_un(t, m));
                TensorElement rhs =
                    mul(f.R, sig, m) - mul(beta_un(t, m), f.R, m);
                return lhs == rhs;
              });
            });
}

// -- quasi-invariant -----------------------------------------------------------

void suite_quasi_invariant(SuiteReport& rep) {
  const SuiteConfig& cfg = rep.config;
  add_check(rep, "tensor-conditions",
            "symmetry, invariance of c, and the three defining conditions",
            [&] {
              return defect_total(validate_tensor(
                  string_tensor(string_model(), c_letter(cfg.c)),
                  string_model(), cfg.degree_bound));
            });
  add_check(rep, "phi-pairing",
            "coboundary pairing against the tensor reproduces the bracket",
            [&] { return defect_total(phi_pairing_check(string_model())); });
}

// -- coherence -----------------------------------------------------------------

void suite_coherence(SuiteReport& rep) {
  const SuiteConfig& cfg = rep.config;
  add_check(rep, "coherence-cyclic-sum",
            "cyclic sum of the failure morphism vanishes", [&] {
              return coherence_defect(
                         string_tensor(string_model(), c_letter(cfg.c)),
                         string_model())
                  .term_count();
            });
}

// -- braiding-axioms -------------------------------------------------------------

void suite_braiding_axioms(SuiteReport& rep) {
  const SuiteConfig& cfg = rep.config;
  const int D = cfg.degree_bound;
  Braiding2 b = config_braiding(cfg);
  add_check(rep, "braiding-r-shapes",
            "r_{n,m} is a valid decorated 1-morphism for all n+m <= 4", [&] {
              std::size_t bad = 0;
              for (int n = 1; n <= 3; ++n)
                for (int m = 1; n + m <= 4; ++m) {
                  OneMorphism r = b.r(n, m);
                  if (r.tau.k != 1 || !r.tau.sigma.is_identity()) ++bad;
                  bad += defect_total(validate_one(r, b.module(), D));
                }
              return bad;
            });
  add_check(rep, "braiding-axioms",
            "naturality, linearity, composition, and interchange axioms",
            [&] {
              return defect_total(check_axioms(
                  b, D, static_cast<unsigned>(cfg.seed), 25));
            });
  add_check(rep, "braiding-symmetric",
            "total symmetry of the braiding and its failure morphisms",
            [&] { return defect_total(check_totally_symmetric(b, D)); });
  add_check(rep, "braiding-jacobi",
            "cyclic sum of failure-morphism insertions vanishes", [&] {
              return jacobi_defect(pq_arrow_parts(b, 3)).term_count();
            });
}

// -- categorified-4t --------------------------------------------------------------

void suite_categorified_4t(SuiteReport& rep) {
  const SuiteConfig& cfg = rep.config;
  Braiding2 b = config_braiding(cfg);
  PQData pq = pq_arrow_parts(b, 4);
  std::vector<MorphismDefect> defects =
      categorified_four_term(pq, b.tensor().r);
  const std::vector<std::string> ids = {"nat1", "nat1-verbatim", "nat2",
                                        "nat3", "nat4",          "nat5",
                                        "nat6"};
  for (const std::string& id : ids)
    add_check(rep, "categorified-" + id,
              "categorified 4-term relation " + id + " vanishes exactly",
              [&] {
                std::size_t total = 0;
                for (const MorphismDefect& d : defects)
                  if (d.condition == id)
                    total += std::max<std::size_t>(d.term_count, 1);
                return total;
              });
  add_check(rep, "categorified-perturbation-control",
            "a perturbed failure morphism breaks at least one relation", [&] {
              PQData bad = pq;
              TensorMonomial m;
              m.slots = {{StringModel::fun(1)}, {StringModel::e()}, {}};
              bad.p_arrow +=
                  un_normalize(TensorElement::monomial(m), b.module());
              return std::size_t(
                  categorified_four_term(bad, b.tensor().r).empty() ? 1 : 0);
            });
}

// -- matrices ----------------------------------------------------------------------

void suite_matrices(SuiteReport& rep) {
  add_check(rep, "matrix-identities",
            "rank, transcription, and relation-matching identities of M and N",
            [&] { return defect_total(matrix_identities()); });
}

// -- kz-flatness -------------------------------------------------------------------

void suite_kz_flatness(SuiteReport& rep) {
  const SuiteConfig& cfg = rep.config;
  const int n = std::max(3, std::min(cfg.n, 4));
  Braiding2 b = config_braiding(cfg);
  PQData pq = pq_arrow_parts(b, 3);
  Connection2 conn = build_connection(pq, b.tensor().r, n);
  add_check(rep, "kz-fake-flatness",
            "boundary of the 2-form equals the curvature of the 1-form", [&] {
              CurvatureReport r = curvature_and_fake_flatness(conn);
              std::size_t total = 0;
              for (const auto& [m, d] : r.fake_defect) total += d.term_count();
              return total;
            });
  add_check(rep, "kz-two-curvature",
            "the 2-curvature 3-form vanishes on every basis monomial", [&] {
              std::size_t total = 0;
              for (const auto& [m, g] : two_curvature(conn))
                total += g.term_count();
              return total;
            });
  add_check(rep, "kz-classical-limit",
            "the module with trivial kernel part gives the flat classical "
            "connection with zero 2-form",
            [&] {
              FiniteCrossedModule sl2 = sl2_model();
              TensorElement r(2);
              r.add(pure({{StringModel::f()}, {StringModel::e()}}),
                    Rational(1));
              r.add(pure({{StringModel::e()}, {StringModel::f()}}),
                    Rational(1));
              r.add(pure({{StringModel::k()}, {StringModel::k()}}),
                    Rational(-2));
              Braiding2 cb({r, Zeta::zero(2), LetterComb{}}, sl2);
              Connection2 cc =
                  build_connection(pq_arrow_parts(cb, 3), r, n);
              CurvatureReport cr = curvature_and_fake_flatness(cc);
              std::size_t total = cc.B.size() + cr.F_A.size();
              for (const auto& [m, g] : two_curvature(cc))
                total += g.term_count();
              return total;
            });
}

// -- sn-invariance -----------------------------------------------------------------

void suite_sn_invariance(SuiteReport& rep) {
  const SuiteConfig& cfg = rep.config;
  Braiding2 b = config_braiding(cfg);
  PQData pq = pq_arrow_parts(b, 3);
  Connection2 conn = build_connection(pq, b.tensor().r, 3);
  add_check(rep, "sn-transpositions",
            "pullback along every transposition fixes the connection", [&] {
              std::size_t bad = 0;
              for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                  if (!connection_equal(
                          sn_pullback(Permutation::transposition(3, i, j),
                                      conn),
                          conn))
                    ++bad;
              return bad;
            });
  add_check(rep, "sn-full-group",
            "pullback along every 3-point permutation fixes the connection",
            [&] {
              std::size_t bad = 0;
              std::vector<int> img = {0, 1, 2};
              do {
                if (!connection_equal(sn_pullback(Permutation(img), conn),
                                      conn))
                  ++bad;
              } while (std::next_permutation(img.begin(), img.end()));
              return bad;
            });
  add_check(rep, "sn-action-law",
            "pullbacks compose as a group action on an unsymmetric witness",
            [&] {
              Connection2 c{3, &b.module(), {}, {}};
              c.A.emplace(FormMonomial{{form_gen(0, 1)}},
                          insertion(b.tensor().r, {0, 1}, 3));
              c.B.emplace(FormMonomial{{form_gen(0, 1), form_gen(0, 2)}},
                          pq.p_arrow);
              Permutation sigma({1, 2, 0});
              Permutation tau({0, 2, 1});
              bool moved = !connection_equal(sn_pullback(sigma, c), c);
              bool law = connection_equal(
                  sn_pullback(tau * sigma, c),
                  sn_pullback(tau, sn_pullback(sigma, c)));
              return std::size_t(moved && law ? 0 : 1);
            });
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "pbw",          "classical-4t",   "un-space",
      "two-cat-laws", "quasi-invariant", "coherence",
      "braiding-axioms", "categorified-4t", "matrices",
      "kz-flatness",  "sn-invariance"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = name;
  rep.config = cfg;
  resolved_oracle(cfg);  // validates the oracle flag up front
  if (name == "all") {
    for (const std::string& sub : suite_names()) {
      SuiteReport part = run_suite(sub, cfg);
      for (CheckResult& c : part.checks) {
        c.id = sub + "/" + c.id;
        rep.checks.push_back(std::move(c));
      }
    }
    return rep;
  }
  // The custom-model override applies to the module-generic suites; the
  // remaining suites are statements about the built-in string module.
  const bool custom = !cfg.model_path.empty();
  std::optional<FiniteCrossedModule> loaded;
  if (custom) loaded.emplace(load_model(cfg.model_path));
  const CrossedModule& generic =
      custom ? static_cast<const CrossedModule&>(*loaded) : string_model();
  if (name == "pbw")
    suite_pbw(rep, generic);
  else if (name == "classical-4t")
    suite_classical_4t(rep);
  else if (name == "un-space")
    suite_un_space(rep, generic);
  else if (name == "two-cat-laws")
    suite_two_cat_laws(rep);
  else if (name == "quasi-invariant")
    suite_quasi_invariant(rep);
  else if (name == "coherence")
    suite_coherence(rep);
  else if (name == "braiding-axioms")
    suite_braiding_axioms(rep);
  else if (name == "categorified-4t")
    suite_categorified_4t(rep);
  else if (name == "matrices")
    suite_matrices(rep);
  else if (name == "kz-flatness")
    suite_kz_flatness(rep);
  else if (name == "sn-invariance")
    suite_sn_invariance(rep);
  else
    throw UnknownSuiteError("unknown suite: " + name);
  return rep;
}

}  // namespace twobraid
