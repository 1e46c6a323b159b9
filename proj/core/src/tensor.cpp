#include "twobraid/tensor.hpp"

#include <sstream>

namespace twobraid {

namespace {

void require_same_arity(const TensorElement& a, const TensorElement& b) {
  if (a.arity() != b.arity())
    throw ArityError("arity mismatch: " + std::to_string(a.arity()) + " vs " +
                     std::to_string(b.arity()));
}

// Finds an adjacent inversion in slot-major order. Returns {slot, pos} of the
// left letter, or {-1, -1} if every slot word is sorted.
std::pair<int, int> find_inversion(const TensorMonomial& m,
                                   PbwSchedule schedule) {
  std::pair<int, int> found{-1, -1};
  for (int s = 0; s < m.arity(); ++s) {
    const Word& w = m.slots[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i + 1] < w[i]) {
        found = {s, static_cast<int>(i)};
        if (schedule == PbwSchedule::kLeftmostInnermost) return found;
      }
    }
  }
  return found;
}

}  // namespace

TensorElement TensorElement::letter_at(int arity, int slot, const Letter& l) {
  TensorMonomial m;
  m.slots.resize(static_cast<std::size_t>(arity));
  m.slots[static_cast<std::size_t>(slot)].push_back(l);
  return monomial(std::move(m));
}

TensorElement TensorElement::letters_at(int arity, int slot,
                                        const LetterComb& c) {
  TensorElement out(arity);
  for (const auto& [l, coeff] : c) {
    TensorMonomial m;
    m.slots.resize(static_cast<std::size_t>(arity));
    m.slots[static_cast<std::size_t>(slot)].push_back(l);
    out.add(m, coeff);
  }
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  require_same_arity(*this, o);
  terms_ += o.terms_;
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  require_same_arity(*this, o);
  terms_ -= o.terms_;
  return *this;
}

void TensorElement::add(const TensorMonomial& m, const Rational& c) {
  if (m.arity() != arity_) throw ArityError("monomial arity mismatch");
  terms_.add(m, c);
}

TensorElement concat_mul(const TensorElement& a, const TensorElement& b) {
  require_same_arity(a, b);
  TensorElement out(a.arity());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      TensorMonomial m = ma;
      for (int s = 0; s < m.arity(); ++s) {
        const Word& wb = mb.slots[static_cast<std::size_t>(s)];
        Word& w = m.slots[static_cast<std::size_t>(s)];
        w.insert(w.end(), wb.begin(), wb.end());
      }
      out.add(m, ca * cb);
    }
  return out;
}

TensorElement pbw_normalize(const TensorElement& e, const CrossedModule& mod,
                            PbwSchedule schedule) {
  LinComb<TensorMonomial> pending = e.terms();
  TensorElement out(e.arity());
  while (!pending.is_zero()) {
    auto it = pending.begin();
    TensorMonomial m = it->first;
    Rational coeff = it->second;
    pending.add(m, -coeff);  // pop

    auto [slot, pos] = find_inversion(m, schedule);
    if (slot < 0) {
      out.add(m, coeff);
      continue;
    }
    Word& w = m.slots[static_cast<std::size_t>(slot)];
    Letter hi = w[static_cast<std::size_t>(pos)];
    Letter lo = w[static_cast<std::size_t>(pos) + 1];

    // Swapped term.
    TensorMonomial swapped = m;
    Word& ws = swapped.slots[static_cast<std::size_t>(slot)];
    ws[static_cast<std::size_t>(pos)] = lo;
    ws[static_cast<std::size_t>(pos) + 1] = hi;
    pending.add(swapped, coeff);

    // Bracket terms [hi, lo].
    for (const auto& [l, c] : mod.bracket(hi, lo)) {
      TensorMonomial br = m;
      Word& wb = br.slots[static_cast<std::size_t>(slot)];
      wb.erase(wb.begin() + pos);
      wb[static_cast<std::size_t>(pos)] = l;
      pending.add(br, coeff * c);
    }
  }
  return out;
}

TensorElement mul(const TensorElement& a, const TensorElement& b,
                  const CrossedModule& mod) {
  return pbw_normalize(concat_mul(a, b), mod);
}

TensorElement diagonal(const LetterComb& x, int arity) {
  TensorElement out(arity);
  for (int s = 0; s < arity; ++s) out += TensorElement::letters_at(arity, s, x);
  return out;
}

TensorElement g_act(const LetterComb& x, const TensorElement& e,
                    const CrossedModule& mod) {
  TensorElement d = diagonal(x, e.arity());
  return pbw_normalize(concat_mul(d, e) - concat_mul(e, d), mod);
}

TensorElement insertion(const TensorElement& e,
                        const std::vector<int>& positions, int arity) {
  if (static_cast<int>(positions.size()) != e.arity())
    throw ArityError("insertion position count must match element arity");
  std::vector<bool> used(static_cast<std::size_t>(arity), false);
  for (int p : positions) {
    if (p < 0 || p >= arity || used[static_cast<std::size_t>(p)])
      throw ArityError("insertion positions must be distinct and in range");
    used[static_cast<std::size_t>(p)] = true;
  }
  TensorElement out(arity);
  for (const auto& [m, c] : e.terms()) {
    TensorMonomial placed;
    placed.slots.resize(static_cast<std::size_t>(arity));
    for (int i = 0; i < m.arity(); ++i)
      placed.slots[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] =
          m.slots[static_cast<std::size_t>(i)];
    out.add(placed, c);
  }
  return out;
}

TensorElement permute_slots(const Permutation& sigma, const TensorElement& e) {
  if (sigma.size() != e.arity())
    throw ArityError("permutation size must match arity");
  TensorElement out(e.arity());
  for (const auto& [m, c] : e.terms()) {
    TensorMonomial p;
    p.slots.resize(m.slots.size());
    for (int i = 0; i < m.arity(); ++i)
      p.slots[static_cast<std::size_t>(sigma(i))] =
          m.slots[static_cast<std::size_t>(i)];
    out.add(p, c);
  }
  return out;
}

TensorElement tensor_concat(const TensorElement& a, const TensorElement& b) {
  TensorElement out(a.arity() + b.arity());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      TensorMonomial m = ma;
      m.slots.insert(m.slots.end(), mb.slots.begin(), mb.slots.end());
      out.add(m, ca * cb);
    }
  return out;
}

TensorElement classical_four_term_defect(const TensorElement& r,
                                         const CrossedModule& mod) {
  if (r.arity() != 2) throw ArityError("expected an arity-2 tensor");
  TensorElement r12 = insertion(r, {0, 1}, 3);
  TensorElement r13 = insertion(r, {0, 2}, 3);
  TensorElement r23 = insertion(r, {1, 2}, 3);
  TensorElement lhs = r12 + r13;
  return pbw_normalize(concat_mul(lhs, r23) - concat_mul(r23, lhs), mod);
}

int h_letter_count(const TensorMonomial& m) {
  int count = 0;
  for (const Word& w : m.slots)
    for (const Letter& l : w)
      if (l.in_h()) ++count;
  return count;
}

std::string to_string(const TensorElement& e, const CrossedModule& mod) {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    out << (first ? "" : " + ") << "(" << rational_to_string(c) << ")";
    first = false;
    for (const Word& w : m.slots) {
      out << " [";
      for (std::size_t i = 0; i < w.size(); ++i)
        out << (i ? " " : "") << mod.name(w[i]);
      out << "]";
    }
  }
  return out.str();
}

}  // namespace twobraid
