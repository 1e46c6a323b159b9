#include "twobraid/kz_forms.hpp"

#include <algorithm>

namespace twobraid {

FormGen form_gen(int a, int b) {
  if (a == b) throw std::invalid_argument("form_gen: indices must differ");
  if (a > b) std::swap(a, b);
  return {a, b};
}

namespace {

// Ordering used for the anticommutative sort: second index first, so that
// generators sharing a second index become adjacent.
bool gen_before(const FormGen& x, const FormGen& y) {
  return x.b != y.b ? x.b < y.b : x.a < y.a;
}

FormComb normalize_word(std::vector<FormGen> gens) {
  // Anticommutative insertion sort, tracking the sign.
  Rational sign(1);
  for (std::size_t i = 1; i < gens.size(); ++i)
    for (std::size_t j = i; j > 0 && gen_before(gens[j], gens[j - 1]); --j) {
      std::swap(gens[j], gens[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) {
    if (gens[i] == gens[i + 1]) return FormComb{};
    if (gens[i].b == gens[i + 1].b) {
      // w_{aj} w_{bj} -> w_{ab} w_{bj} - w_{ab} w_{aj} with a < b < j.
      int a = gens[i].a, b = gens[i + 1].a;
      std::vector<FormGen> first = gens, second = gens;
      first[i] = form_gen(a, b);
      second[i] = form_gen(a, b);
      second[i + 1] = gens[i];
      return sign * (normalize_word(std::move(first)) -
                     normalize_word(std::move(second)));
    }
  }
  return FormComb::unit(FormMonomial{std::move(gens)}, sign);
}

std::vector<FormGen> concat(const std::vector<FormGen>& x,
                            const std::vector<FormGen>& y) {
  std::vector<FormGen> out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

// Accumulates coeff-weighted normalized forms into a coefficient map.
template <typename C>
void add_terms(std::map<FormMonomial, C>& out, const FormComb& forms,
               const C& coeff) {
  for (const auto& [m, r] : forms) {
    auto it = out.find(m);
    if (it == out.end()) {
      C v = r * coeff;
      if (!v.is_zero()) out.emplace(m, std::move(v));
    } else {
      it->second += r * coeff;
      if (it->second.is_zero()) out.erase(it);
    }
  }
}

}  // namespace

FormComb wedge_word(const std::vector<FormGen>& gens) {
  for (const FormGen& g : gens)
    if (g.a >= g.b)
      throw std::invalid_argument("wedge_word: generators must satisfy a < b");
  return normalize_word(gens);
}

FormComb wedge_normalize(const FormComb& e) {
  FormComb out;
  for (const auto& [m, c] : e) out += c * normalize_word(m.gens);
  return out;
}

FormComb wedge(const FormComb& x, const FormComb& y) {
  FormComb out;
  for (const auto& [mx, cx] : x)
    for (const auto& [my, cy] : y)
      out += (cx * cy) * normalize_word(concat(mx.gens, my.gens));
  return out;
}

Connection2 build_connection(const PQData& pq, const TensorElement& r,
                             int n) {
  if (n < 2) throw std::invalid_argument("build_connection: need n >= 2");
  const CrossedModule& mod = *pq.mod;
  Connection2 out{n, &mod, {}, {}};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      out.A.emplace(FormMonomial{{form_gen(a, b)}}, insertion(r, {a, b}, n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        UnElement P = insertion_un(pq.p_arrow, {a, b, c}, n, mod);
        UnElement Q = insertion_un(pq.q_arrow, {a, b, c}, n, mod);
        add_terms(out.B,
                  Rational(2) * wedge_word({form_gen(b, c), form_gen(c, a)}),
                  P);
        add_terms(out.B,
                  Rational(-2) * wedge_word({form_gen(c, a), form_gen(a, b)}),
                  Q);
      }
  return out;
}

CurvatureReport curvature_and_fake_flatness(const Connection2& c) {
  const CrossedModule& mod = *c.mod;
  CurvatureReport out;
  for (const auto& [ma, ra] : c.A)
    for (const auto& [mb, rb] : c.A)
      add_terms(out.F_A, normalize_word(concat(ma.gens, mb.gens)),
                mul(ra, rb, mod) - mul(rb, ra, mod));
  for (const auto& [m, r] : out.F_A)
    out.fake_defect.emplace(m, -r);
  for (const auto& [m, x] : c.B) {
    TensorElement bx = beta_un(x, mod);
    auto it = out.fake_defect.find(m);
    if (it == out.fake_defect.end()) {
      if (!bx.is_zero()) out.fake_defect.emplace(m, std::move(bx));
    } else {
      it->second += bx;
      if (it->second.is_zero()) out.fake_defect.erase(it);
    }
  }
  return out;
}

std::map<FormMonomial, UnElement> two_curvature(const Connection2& c) {
  const CrossedModule& mod = *c.mod;
  std::map<FormMonomial, UnElement> out;
  for (const auto& [ma, r] : c.A)
    for (const auto& [mb, x] : c.B) {
      FormComb w = normalize_word(concat(ma.gens, mb.gens));
      if (w.is_zero()) continue;
      add_terms(out, w, mul_un(r, x, mod) - mul_un(x, r, mod));
    }
  return out;
}

Connection2 sn_pullback(const Permutation& sigma, const Connection2& c) {
  const CrossedModule& mod = *c.mod;
  Permutation rho = sigma.inverse();
  auto relabel = [&](const std::vector<FormGen>& gens) {
    std::vector<FormGen> out;
    out.reserve(gens.size());
    for (const FormGen& g : gens) out.push_back(form_gen(rho(g.a), rho(g.b)));
    return out;
  };
  Connection2 out{c.n, c.mod, {}, {}};
  for (const auto& [m, r] : c.A)
    add_terms(out.A, normalize_word(relabel(m.gens)),
              permute_slots(rho, r));
  for (const auto& [m, x] : c.B)
    add_terms(out.B, normalize_word(relabel(m.gens)),
              permute_slots_un(rho, x, mod));
  return out;
}

bool connection_equal(const Connection2& x, const Connection2& y) {
  return x.n == y.n && x.A == y.A && x.B == y.B;
}

namespace {

WZSymbol w_sym(int a, int b, std::array<int, 3> t) {
  return {false, form_gen(a, b), t};
}
WZSymbol z_sym(int a, int b, std::array<int, 3> t) {
  return {true, form_gen(a, b), t};
}

}  // namespace

std::map<FormMonomial, WZComb> symbolic_two_curvature() {
  std::map<FormMonomial, WZComb> out;
  for (int x = 0; x < 4; ++x)
    for (int y = x + 1; y < 4; ++y)
      for (int z = y + 1; z < 4; ++z)
        for (int u = 0; u < 4; ++u)
          for (int v = u + 1; v < 4; ++v) {
            std::array<int, 3> t{x, y, z};
            // [uv][yz][zx] W_{uv,xyz} + [uv][zx][xy] Z_{uv,xyz}.
            add_terms(out,
                      wedge_word({form_gen(u, v), form_gen(y, z),
                                  form_gen(z, x)}),
                      WZComb::unit(w_sym(u, v, t)));
            add_terms(out,
                      wedge_word({form_gen(u, v), form_gen(z, x),
                                  form_gen(x, y)}),
                      WZComb::unit(z_sym(u, v, t)));
          }
  return out;
}

namespace {

MatrixMN make_matrix_mn() {
  MatrixMN mn;
  const int M[6][24] = {
      {0, 0, 0, 0, 1, -1, -1, 1, 0, 0, -1, 1, 1, -1, 1, -1, 1, -1, 0, 0, 0, 0,
       -1, 0},
      {0, 0, 0, 0, -1, 0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0,
       1},
      {0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0,
       0},
      {0, 0, -1, 0, 0, 0, 1, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, -1, 1, -1, 1,
       -1},
      {1, -1, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0,
       1, 0},
      {-1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, -1, 0, -1, 0,
       -1, 0}};
  const int N[6][6] = {{0, -1, 0, -1, 0, -1}, {0, 0, 0, 0, 0, -1},
                       {1, 1, 1, 1, 1, 1},    {0, 0, 0, 1, 0, 1},
                       {0, 0, 0, 0, -1, -1},  {0, 0, 1, 0, 0, 0}};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 24; ++j) mn.M[i][j] = M[i][j];
    for (int j = 0; j < 6; ++j) mn.N[i][j] = N[i][j];
  }
  // The twenty-four coefficient symbols and their paired 3-form words, in
  // order of appearance on the quadruple (a,b,c,d) = (0,1,2,3).
  struct Entry {
    WZSymbol sym;
    std::vector<FormGen> form;
  };
  auto g = [](int a, int b) { return form_gen(a, b); };
  std::vector<Entry> entries = {
      {w_sym(2, 3, {0, 1, 2}), {g(2, 3), g(1, 2), g(0, 2)}},
      {z_sym(2, 3, {0, 1, 2}), {g(2, 3), g(0, 2), g(0, 1)}},
      {w_sym(1, 3, {0, 1, 2}), {g(1, 3), g(1, 2), g(0, 2)}},
      {z_sym(1, 3, {0, 1, 2}), {g(1, 3), g(0, 2), g(0, 1)}},
      {w_sym(0, 3, {0, 1, 2}), {g(0, 3), g(1, 2), g(0, 2)}},
      {z_sym(0, 3, {0, 1, 2}), {g(0, 3), g(0, 2), g(0, 1)}},
      {w_sym(2, 3, {0, 1, 3}), {g(2, 3), g(1, 3), g(0, 3)}},
      {z_sym(2, 3, {0, 1, 3}), {g(2, 3), g(0, 3), g(0, 1)}},
      {w_sym(1, 2, {0, 1, 3}), {g(1, 2), g(1, 3), g(0, 3)}},
      {z_sym(1, 2, {0, 1, 3}), {g(1, 2), g(0, 3), g(0, 1)}},
      {w_sym(0, 2, {0, 1, 3}), {g(0, 2), g(1, 3), g(0, 3)}},
      {z_sym(0, 2, {0, 1, 3}), {g(0, 2), g(0, 3), g(0, 1)}},
      {w_sym(1, 3, {0, 2, 3}), {g(1, 3), g(2, 3), g(0, 3)}},
      {z_sym(1, 3, {0, 2, 3}), {g(1, 3), g(0, 3), g(0, 2)}},
      {w_sym(1, 2, {0, 2, 3}), {g(1, 2), g(2, 3), g(0, 3)}},
      {z_sym(1, 2, {0, 2, 3}), {g(1, 2), g(0, 3), g(0, 2)}},
      {w_sym(0, 1, {0, 2, 3}), {g(0, 1), g(2, 3), g(0, 3)}},
      {z_sym(0, 1, {0, 2, 3}), {g(0, 1), g(0, 3), g(0, 2)}},
      {w_sym(0, 1, {1, 2, 3}), {g(0, 1), g(2, 3), g(1, 3)}},
      {z_sym(0, 1, {1, 2, 3}), {g(0, 1), g(1, 3), g(1, 2)}},
      {w_sym(0, 2, {1, 2, 3}), {g(0, 2), g(2, 3), g(1, 3)}},
      {z_sym(0, 2, {1, 2, 3}), {g(0, 2), g(1, 3), g(1, 2)}},
      {w_sym(0, 3, {1, 2, 3}), {g(0, 3), g(2, 3), g(1, 3)}},
      {z_sym(0, 3, {1, 2, 3}), {g(0, 3), g(1, 3), g(1, 2)}}};
  for (Entry& e : entries) {
    mn.V.push_back(e.sym);
    mn.forms.push_back(std::move(e.form));
  }
  return mn;
}

// The degree-3 normal-form basis monomials on (0,1,2,3), in the row order
// of M.
std::vector<FormMonomial> basis_forms() {
  auto g = [](int a, int b) { return form_gen(a, b); };
  return {FormMonomial{{g(0, 1), g(0, 2), g(0, 3)}},
          FormMonomial{{g(0, 1), g(1, 2), g(0, 3)}},
          FormMonomial{{g(0, 1), g(0, 2), g(1, 3)}},
          FormMonomial{{g(0, 1), g(1, 2), g(1, 3)}},
          FormMonomial{{g(0, 1), g(0, 2), g(2, 3)}},
          FormMonomial{{g(0, 1), g(1, 2), g(2, 3)}}};
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size());
       ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    const std::vector<Rational>& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size();
         ++i) {
      if (rows[i][c] == 0) continue;
      Rational f = rows[i][c] / p[c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * p[j];
    }
    ++rank;
  }
  return rank;
}

// The six categorified 4-term relations as signed W/Z combinations on the
// quadruple (0,1,2,3), translated via W_{ab,cde} = r^{ab} |> P^{cde} and
// Z_{ab,cde} = -r^{ab} |> Q^{cde}.
std::vector<WZComb> nat_relations() {
  auto W = [](int a, int b, std::array<int, 3> t) {
    return WZComb::unit(w_sym(a, b, t));
  };
  auto Z = [](int a, int b, std::array<int, 3> t) {
    return WZComb::unit(z_sym(a, b, t));
  };
  std::array<int, 3> t012{0, 1, 2}, t013{0, 1, 3}, t023{0, 2, 3},
      t123{1, 2, 3};
  std::vector<WZComb> out;
  out.push_back(W(0, 3, t012) + W(1, 3, t012) + W(2, 3, t012) + Z(0, 1, t123) +
                Z(0, 2, t123) - Z(1, 2, t013) - Z(1, 2, t023));
  out.push_back(W(0, 1, t123) + W(0, 2, t123) + W(0, 3, t123) + W(2, 3, t012) +
                W(2, 3, t013) - W(1, 2, t023) - W(1, 3, t023));
  out.push_back(-Z(0, 3, t012) - Z(1, 3, t012) - Z(2, 3, t012) -
                Z(0, 1, t023) - Z(0, 1, t123) + Z(0, 2, t013) + Z(1, 2, t013));
  out.push_back(-Z(0, 1, t123) - Z(0, 2, t123) - Z(0, 3, t123) +
                W(1, 2, t013) + W(1, 2, t023) - W(1, 3, t012) - W(2, 3, t012));
  out.push_back(W(0, 1, t023) + W(0, 1, t123) + Z(2, 3, t012) + Z(2, 3, t013));
  out.push_back(W(0, 2, t013) - W(0, 2, t123) + Z(0, 2, t123) + W(1, 3, t012) -
                Z(1, 3, t012) + Z(1, 3, t023));
  return out;
}

}  // namespace

const MatrixMN& matrix_mn() {
  static MatrixMN mn = make_matrix_mn();
  return mn;
}

std::vector<MorphismDefect> matrix_identities() {
  const MatrixMN& mn = matrix_mn();
  std::vector<MorphismDefect> out;
  auto add = [&](const char* cond, const std::string& witness,
                 std::size_t count) {
    if (count > 0) out.push_back({cond, witness, count});
  };

  // Ranks.
  std::vector<std::vector<Rational>> mrows(6, std::vector<Rational>(24)),
      nrows(6, std::vector<Rational>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 24; ++j) mrows[i][j] = Rational(mn.M[i][j]);
    for (int j = 0; j < 6; ++j) nrows[i][j] = Rational(mn.N[i][j]);
  }
  add("rank(M) = 6", "M", rational_rank(mrows) == 6 ? 0 : 1);
  add("rank(N) = 6", "N", rational_rank(nrows) == 6 ? 0 : 1);

  // Columns of M are the normal-form coordinates of the 24 display forms.
  std::vector<FormMonomial> basis = basis_forms();
  for (int j = 0; j < 24; ++j) {
    FormComb nf = wedge_word(mn.forms[static_cast<std::size_t>(j)]);
    std::size_t mismatches = 0;
    std::size_t support = nf.size();
    for (int i = 0; i < 6; ++i) {
      Rational c = nf.coeff(basis[static_cast<std::size_t>(i)]);
      if (c != Rational(mn.M[i][j])) ++mismatches;
      if (c != 0) --support;
    }
    add("M column = normalized 3-form", "column " + std::to_string(j + 1),
        mismatches + support);
  }

  // The symbolic 2-curvature equals M V per basis monomial.
  {
    std::map<FormMonomial, WZComb> sym = symbolic_two_curvature();
    std::size_t stray = 0;
    for (const auto& [m, wz] : sym)
      if (std::find(basis.begin(), basis.end(), m) == basis.end())
        stray += wz.size();
    add("symbolic 2-curvature lies in the basis span", "n = 4", stray);
    for (int i = 0; i < 6; ++i) {
      WZComb expect;
      for (int j = 0; j < 24; ++j)
        expect += Rational(mn.M[i][j]) *
                  WZComb::unit(mn.V[static_cast<std::size_t>(j)]);
      auto it = sym.find(basis[static_cast<std::size_t>(i)]);
      WZComb got = it == sym.end() ? WZComb{} : it->second;
      add("symbolic 2-curvature = M V", "basis row " + std::to_string(i + 1),
          (got - expect).size());
    }
  }

  // The transcribed product N M.
  const int NM[6][24] = {
      {1, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 0, 1, 0,
       0},
      {1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1, 0, 1,
       0},
      {0, -1, 0, -1, 0, -1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0,
       0, 0},
      {-1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, -1,
       0, -1},
      {0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0,
       0},
      {0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 1, 0,
       0}};
  for (int i = 0; i < 6; ++i) {
    std::size_t bad = 0;
    for (int j = 0; j < 24; ++j) {
      int prod = 0;
      for (int l = 0; l < 6; ++l) prod += mn.N[i][l] * mn.M[l][j];
      if (prod != NM[i][j]) ++bad;
    }
    add("N M matches the transcription", "row " + std::to_string(i + 1), bad);
  }

  // Each row of N M V matches one categorified 4-term relation up to sign,
  // bijectively.
  {
    std::vector<WZComb> rels = nat_relations();
    std::vector<bool> used(rels.size(), false);
    for (int i = 0; i < 6; ++i) {
      WZComb row;
      for (int j = 0; j < 24; ++j)
        row += Rational(NM[i][j]) *
               WZComb::unit(mn.V[static_cast<std::size_t>(j)]);
      bool matched = false;
      for (std::size_t k = 0; k < rels.size() && !matched; ++k) {
        if (used[k]) continue;
        if (row == rels[k] || row == -rels[k]) {
          used[k] = true;
          matched = true;
        }
      }
      add("N M row matches a categorified 4-term relation",
          "row " + std::to_string(i + 1), matched ? 0 : 1);
    }
  }
  return out;
}

}  // namespace twobraid
