#include "twobraid/model_io.hpp"

#include <fstream>
#include <sstream>

namespace twobraid {

namespace {

// Echelonized span of vectors over Q, remembering how each pivot row was
// produced from the inserted generators. Small and dense; model bases are
// expected to stay small.
class SolvableSpan {
 public:
  explicit SolvableSpan(int dim) : dim_(dim) {}

  // Insert a generator with external coordinates `expr`.
  void insert(std::vector<Rational> vec, LetterComb expr) {
    reduce(vec, expr);
    for (int i = 0; i < dim_; ++i) {
      if (vec[static_cast<std::size_t>(i)] != 0) {
        Rational inv = Rational(1) / vec[static_cast<std::size_t>(i)];
        for (auto& v : vec) v *= inv;
        expr *= inv;
        rows_.push_back({i, std::move(vec), std::move(expr)});
        return;
      }
    }
  }

  // If `vec` lies in the span, returns the solution expression.
  std::optional<LetterComb> solve(std::vector<Rational> vec) const {
    LetterComb expr;
    reduce(vec, expr);
    for (const auto& v : vec)
      if (v != 0) return std::nullopt;
    return -expr;
  }

 private:
  struct Row {
    int pivot;
    std::vector<Rational> vec;
    LetterComb expr;
  };

  void reduce(std::vector<Rational>& vec, LetterComb& expr) const {
    for (const auto& row : rows_) {
      Rational c = vec[static_cast<std::size_t>(row.pivot)];
      if (c == 0) continue;
      for (int i = 0; i < dim_; ++i)
        vec[static_cast<std::size_t>(i)] -=
            c * row.vec[static_cast<std::size_t>(i)];
      expr -= c * row.expr;
    }
  }

  int dim_;
  std::vector<Row> rows_;
};

std::string pair_name(const std::vector<std::string>& names, int i, int j) {
  return "(" + names[static_cast<std::size_t>(i)] + ", " +
         names[static_cast<std::size_t>(j)] + ")";
}

}  // namespace

FiniteCrossedModule::FiniteCrossedModule(Data data) : data_(std::move(data)) {
  // Fill in missing orientations by antisymmetry and reject explicit
  // violations.
  auto close = [&](std::map<std::pair<int, int>, LetterComb>& table,
                   const std::vector<std::string>& names,
                   const char* which) {
    auto snapshot = table;
    for (const auto& [key, value] : snapshot) {
      auto flipped = std::make_pair(key.second, key.first);
      auto it = table.find(flipped);
      if (it == table.end()) {
        if (!value.is_zero()) table[flipped] = -value;
      } else if (!(it->second + value).is_zero()) {
        throw ModelError(std::string(which) +
                         " bracket is not antisymmetric on pair " +
                         pair_name(names, key.first, key.second));
      }
    }
    for (const auto& [key, value] : table) {
      if (key.first == key.second && !value.is_zero())
        throw ModelError(std::string(which) +
                         " bracket is not antisymmetric on pair " +
                         pair_name(names, key.first, key.second));
    }
  };
  close(data_.g_bracket, data_.g_names, "g");
  close(data_.h_bracket, data_.h_names, "h");
  validate();
  build_sections();
}

LetterComb FiniteCrossedModule::bracket(const Letter& a,
                                        const Letter& b) const {
  auto lookup = [](const std::map<std::pair<int, int>, LetterComb>& table,
                   int i, int j) -> LetterComb {
    auto it = table.find({i, j});
    return it == table.end() ? LetterComb{} : it->second;
  };
  if (a.in_g() && b.in_g()) return lookup(data_.g_bracket, a.index, b.index);
  if (a.in_g() && b.in_h()) return lookup(data_.action, a.index, b.index);
  if (a.in_h() && b.in_g()) return -lookup(data_.action, b.index, a.index);
  return lookup(data_.h_bracket, a.index, b.index);
}

LetterComb FiniteCrossedModule::partial(const Letter& h) const {
  auto it = data_.partial.find(h.index);
  return it == data_.partial.end() ? LetterComb{} : it->second;
}

std::optional<LetterComb> FiniteCrossedModule::section(const Letter& g) const {
  return sections_[static_cast<std::size_t>(g.index)];
}

std::vector<Letter> FiniteCrossedModule::g_basis(int) const {
  std::vector<Letter> out;
  for (int i = 0; i < g_dim(); ++i) out.push_back(Letter::g(i));
  return out;
}

std::vector<Letter> FiniteCrossedModule::h_basis(int) const {
  std::vector<Letter> out;
  for (int i = 0; i < h_dim(); ++i) out.push_back(Letter::h(i));
  return out;
}

std::string FiniteCrossedModule::name(const Letter& l) const {
  const auto& names = l.in_g() ? data_.g_names : data_.h_names;
  return names[static_cast<std::size_t>(l.index)];
}

void FiniteCrossedModule::validate() const {
  std::vector<Letter> letters;
  for (int i = 0; i < g_dim(); ++i) letters.push_back(Letter::g(i));
  for (int i = 0; i < h_dim(); ++i) letters.push_back(Letter::h(i));

  // Jacobi over all basis triples of the total bracket. This covers the
  // g-bracket, the representation property of the action and derivations on
  // the h-bracket at once.
  for (const Letter& x : letters)
    for (const Letter& y : letters)
      for (const Letter& z : letters) {
        LetterComb defect = bracket(bracket(x, y), LetterComb::unit(z));
        defect += bracket(bracket(y, z), LetterComb::unit(x));
        defect += bracket(bracket(z, x), LetterComb::unit(y));
        if (!defect.is_zero())
          throw ModelError("Jacobi identity fails on (" + name(x) + ", " +
                           name(y) + ", " + name(z) + ")");
      }

  // partial intertwines the action with the adjoint action.
  for (int i = 0; i < g_dim(); ++i)
    for (int j = 0; j < h_dim(); ++j) {
      Letter X = Letter::g(i), u = Letter::h(j);
      LetterComb defect = partial(bracket(X, u));
      defect -= bracket(LetterComb::unit(X), partial(u));
      if (!defect.is_zero())
        throw ModelError("boundary map does not intertwine the action on (" +
                         name(X) + ", " + name(u) + ")");
    }

  // Peiffer identity: [u, v] = partial(u) |> v.
  for (int i = 0; i < h_dim(); ++i)
    for (int j = 0; j < h_dim(); ++j) {
      Letter u = Letter::h(i), v = Letter::h(j);
      LetterComb defect = bracket(u, v);
      defect -= bracket(partial(u), LetterComb::unit(v));
      if (!defect.is_zero())
        throw ModelError("Peiffer identity fails on (" + name(u) + ", " +
                         name(v) + ")");
    }
}

void FiniteCrossedModule::build_sections() {
  SolvableSpan span(g_dim());
  for (int j = 0; j < h_dim(); ++j) {
    std::vector<Rational> col(static_cast<std::size_t>(g_dim()), Rational(0));
    for (const auto& [l, c] : partial(Letter::h(j)))
      col[static_cast<std::size_t>(l.index)] = c;
    span.insert(std::move(col), LetterComb::unit(Letter::h(j)));
  }
  sections_.resize(static_cast<std::size_t>(g_dim()));
  for (int i = 0; i < g_dim(); ++i) {
    std::vector<Rational> unit(static_cast<std::size_t>(g_dim()), Rational(0));
    unit[static_cast<std::size_t>(i)] = Rational(1);
    sections_[static_cast<std::size_t>(i)] = span.solve(std::move(unit));
  }
}

FiniteCrossedModule parse_model(std::istream& in) {
  FiniteCrossedModule::Data data;
  bool saw_version = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string keyword;
    if (!(ss >> keyword)) continue;
    auto fail = [&](const std::string& why) {
      throw ModelError("line " + std::to_string(line_no) + ": " + why);
    };
    auto read_int = [&]() {
      int v;
      if (!(ss >> v)) fail("expected an integer");
      return v;
    };
    auto read_coeff = [&]() {
      std::string tok;
      if (!(ss >> tok)) fail("expected a rational coefficient");
      return parse_rational(tok);
    };
    if (keyword == "version") {
      int v = read_int();
      if (v != 1) fail("unsupported version " + std::to_string(v));
      saw_version = true;
    } else if (keyword == "g_basis" || keyword == "h_basis") {
      auto& names = keyword == "g_basis" ? data.g_names : data.h_names;
      std::string n;
      while (ss >> n) names.push_back(n);
    } else if (keyword == "g_bracket" || keyword == "h_bracket" ||
               keyword == "action") {
      int i = read_int(), j = read_int(), k = read_int();
      Rational c = read_coeff();
      if (keyword == "g_bracket")
        data.g_bracket[{i, j}].add(Letter::g(k), c);
      else if (keyword == "h_bracket")
        data.h_bracket[{i, j}].add(Letter::h(k), c);
      else
        data.action[{i, j}].add(Letter::h(k), c);
    } else if (keyword == "partial") {
      int i = read_int(), j = read_int();
      Rational c = read_coeff();
      data.partial[i].add(Letter::g(j), c);
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!saw_version) throw ModelError("missing version header");
  auto check_index = [&](int idx, int dim, const char* what) {
    if (idx < 0 || idx >= dim)
      throw ModelError(std::string("index out of range in ") + what);
  };
  for (const auto& [key, value] : data.g_bracket) {
    check_index(key.first, static_cast<int>(data.g_names.size()), "g_bracket");
    check_index(key.second, static_cast<int>(data.g_names.size()),
                "g_bracket");
    for (const auto& [l, c] : value)
      check_index(l.index, static_cast<int>(data.g_names.size()), "g_bracket");
  }
  for (const auto& [key, value] : data.h_bracket) {
    check_index(key.first, static_cast<int>(data.h_names.size()), "h_bracket");
    check_index(key.second, static_cast<int>(data.h_names.size()),
                "h_bracket");
    for (const auto& [l, c] : value)
      check_index(l.index, static_cast<int>(data.h_names.size()), "h_bracket");
  }
  for (const auto& [key, value] : data.action) {
    check_index(key.first, static_cast<int>(data.g_names.size()), "action");
    check_index(key.second, static_cast<int>(data.h_names.size()), "action");
    for (const auto& [l, c] : value)
      check_index(l.index, static_cast<int>(data.h_names.size()), "action");
  }
  for (const auto& [key, value] : data.partial) {
    check_index(key, static_cast<int>(data.h_names.size()), "partial");
    for (const auto& [l, c] : value)
      check_index(l.index, static_cast<int>(data.g_names.size()), "partial");
  }
  return FiniteCrossedModule(std::move(data));
}

FiniteCrossedModule sl2_model() {
  FiniteCrossedModule::Data data;
  data.g_names = {"f", "k", "e"};
  data.g_bracket[{0, 2}] = LetterComb::unit(Letter::g(1), Rational(2));
  data.g_bracket[{1, 2}] = LetterComb::unit(Letter::g(2));
  data.g_bracket[{1, 0}] = LetterComb::unit(Letter::g(0), Rational(-1));
  return FiniteCrossedModule(std::move(data));
}

FiniteCrossedModule load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file: " + path);
  return parse_model(in);
}

}  // namespace twobraid
