#ifndef TWOBRAID_KZ_FORMS_HPP
#define TWOBRAID_KZ_FORMS_HPP

#include <array>
#include <compare>

#include "twobraid/braiding2.hpp"

namespace twobraid {

// Wedge generator w_{ab} = (dz_a - dz_b)/(z_a - z_b) on the configuration
// space of n points; w_{ab} = w_{ba}, so the stored pair satisfies a < b.
// Indices are 0-based. The only facts used about these forms are symmetry,
// closedness, anticommutativity of the wedge, and the Arnold relation
//   w_{ij} w_{jk} + w_{jk} w_{ki} + w_{ki} w_{ij} = 0.
struct FormGen {
  int a = 0;
  int b = 0;
  auto operator<=>(const FormGen&) const = default;
};

FormGen form_gen(int a, int b);

// Anticommutative wedge monomial in normal form: generators strictly
// increasing in (second index, first index) order with pairwise distinct
// second indices (the broken-circuit-free family; in degree 3 these are the
// monomials with strictly increasing second indices).
struct FormMonomial {
  std::vector<FormGen> gens;

  int degree() const { return static_cast<int>(gens.size()); }
  auto operator<=>(const FormMonomial&) const = default;
};

using FormComb = LinComb<FormMonomial>;

// Normalizes a juxtaposition of generators: anticommutative sorting, then
// Arnold rewriting w_{aj} w_{bj} -> w_{ab} w_{bj} - w_{ab} w_{aj} (a < b < j)
// until no two generators share a second index. Linear, idempotent, and
// degree-preserving.
FormComb wedge_word(const std::vector<FormGen>& gens);
FormComb wedge_normalize(const FormComb& e);
FormComb wedge(const FormComb& x, const FormComb& y);

// The KZ 2-connection on the configuration space of n points:
//   A = sum_{a<b} w_{ab} r^{ab}
//   B = 2 sum_{a<b<c} w_{bc} w_{ca} P^{abc} - 2 sum_{a<b<c} w_{ca} w_{ab} Q^{abc}
// with coefficients at tensor arity n; B is stored over normal-form 2-form
// monomials.
struct Connection2 {
  int n = 0;
  const CrossedModule* mod = nullptr;
  std::map<FormMonomial, TensorElement> A;
  std::map<FormMonomial, UnElement> B;
};

Connection2 build_connection(const PQData& pq, const TensorElement& r, int n);

// F_A = dA + [A, A] = [A, A] (dA = 0 since the generators are closed), with
// [A, A] the full commutator expansion sum_{e,f} w_e w_f [r_e, r_f] over
// ordered pairs, and the fake curvature defect beta(B) - F_A, both per
// normal-form 2-form monomial.
struct CurvatureReport {
  std::map<FormMonomial, TensorElement> F_A;
  std::map<FormMonomial, TensorElement> fake_defect;
};

CurvatureReport curvature_and_fake_flatness(const Connection2& c);

// The 2-curvature G = dB + A ^ B = A ^ B, with the pairing of a 1-form
// coefficient R against a 2-form coefficient X given by the gl action
// R |> X = R X - X R, expressed over normal-form 3-form monomials.
std::map<FormMonomial, UnElement> two_curvature(const Connection2& c);

// Pullback along the symmetric-group action: generators map by
// w_{ab} -> w_{sigma^{-1}(a) sigma^{-1}(b)} and coefficients by the matching
// slot permutation. For a totally symmetric braiding the connection is a
// fixed point.
Connection2 sn_pullback(const Permutation& sigma, const Connection2& c);

// Exact structural equality of connections (same n, same normalized maps).
bool connection_equal(const Connection2& x, const Connection2& y);

// Free symbols W_{ab,cde} = r^{ab} |> P^{cde} and Z_{ab,cde} = -r^{ab} |> Q^{cde}.
struct WZSymbol {
  bool z = false;
  FormGen pair;                 // normalized a < b
  std::array<int, 3> triple{};  // sorted

  auto operator<=>(const WZSymbol&) const = default;
};

using WZComb = LinComb<WZSymbol>;

// The symbolic 2-curvature for n = 4 on the quadruple (0,1,2,3): the wedge
// expansion of A ^ B with coefficients replaced by free W/Z symbols and the
// overall factor 2 dropped, expressed in the six-monomial 3-form basis.
std::map<FormMonomial, WZComb> symbolic_two_curvature();

// Transcribed constants: the 6 x 24 matrix M of basis coordinates of the
// twenty-four 3-forms of the 2-curvature expansion (columns in order of
// appearance), the rank-6 matrix N, the symbol vector V in the same order,
// and the twenty-four literal 3-form words.
struct MatrixMN {
  std::array<std::array<int, 24>, 6> M{};
  std::array<std::array<int, 6>, 6> N{};
  std::vector<WZSymbol> V;
  std::vector<std::vector<FormGen>> forms;
};

const MatrixMN& matrix_mn();

// Verifies: rank(M) = rank(N) = 6; every column of M equals the normal-form
// coordinates of the corresponding 3-form; the symbolic 2-curvature equals
// M V per basis monomial; the transcribed product N M matches the computed
// one; and each row of N M V = 0 matches one of the six categorified 4-term
// relations (as a signed W/Z combination), bijectively.
std::vector<MorphismDefect> matrix_identities();

}  // namespace twobraid

#endif
