#include "twobraid/un_space.hpp"

#include <deque>
#include <set>

namespace twobraid {

namespace {

struct GlobalPos {
  int slot = -1;
  int pos = -1;
  bool valid() const { return slot >= 0; }
  friend auto operator<=>(const GlobalPos&, const GlobalPos&) = default;
};

GlobalPos find_h_letter(const TensorMonomial& m) {
  for (int s = 0; s < m.arity(); ++s) {
    const Word& w = m.slots[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i].in_h()) return {s, static_cast<int>(i)};
  }
  return {};
}

Letter& letter_at(TensorMonomial& m, GlobalPos p) {
  return m.slots[static_cast<std::size_t>(p.slot)][static_cast<std::size_t>(p.pos)];
}
const Letter& letter_at(const TensorMonomial& m, GlobalPos p) {
  return m.slots[static_cast<std::size_t>(p.slot)][static_cast<std::size_t>(p.pos)];
}

// Relation instance: exchange a sectioned g letter at `gp` against the h
// letter at `hp` (either relative order). Returns the raw (unnormalized)
// partner combination.
LinComb<TensorMonomial> exchange(const TensorMonomial& m, GlobalPos gp,
                                 GlobalPos hp, const CrossedModule& mod) {
  const Letter w = letter_at(m, gp);
  const Letter v = letter_at(m, hp);
  LinComb<TensorMonomial> out;
  auto sect = mod.section(w);
  for (const auto& [u, cu] : *sect)
    for (const auto& [dl, cd] : mod.partial(v)) {
      TensorMonomial swapped = m;
      letter_at(swapped, gp) = u;
      letter_at(swapped, hp) = dl;
      out.add(swapped, cu * cd);
    }
  return out;
}

// The closest sectioned g letter strictly before `hp` in slot-major order.
GlobalPos find_preceding_sectioned(const TensorMonomial& m, GlobalPos hp,
                                   const CrossedModule& mod) {
  GlobalPos best{};
  for (int s = 0; s <= hp.slot; ++s) {
    const Word& w = m.slots[static_cast<std::size_t>(s)];
    int limit = (s == hp.slot) ? hp.pos : static_cast<int>(w.size());
    for (int i = 0; i < limit; ++i) {
      const Letter& l = w[static_cast<std::size_t>(i)];
      if (l.in_g() && mod.section(l).has_value()) best = {s, i};
    }
  }
  return best;
}

bool find_sectioned_after(const TensorMonomial& m, GlobalPos hp,
                          const CrossedModule& mod) {
  for (int s = hp.slot; s < m.arity(); ++s) {
    const Word& w = m.slots[static_cast<std::size_t>(s)];
    int start = (s == hp.slot) ? hp.pos + 1 : 0;
    for (int i = start; i < static_cast<int>(w.size()); ++i) {
      const Letter& l = w[static_cast<std::size_t>(i)];
      if (l.in_g() && mod.section(l).has_value()) return true;
    }
  }
  return false;
}

// Canonical choice of the h letter within its slot. The h letter can trade
// a boundary with any later sectioned g letter in the same slot (two
// relation instances via a detour through that position), which re-promotes
// that letter's section to be the h letter. Monomials where a strictly
// smaller h letter is reachable this way are not canonical; this finds the
// best such trade, preferring the smallest resulting h letter.
GlobalPos find_repromotion(const TensorMonomial& m, GlobalPos hp,
                           const CrossedModule& mod) {
  const Letter v = letter_at(m, hp);
  const Word& w = m.slots[static_cast<std::size_t>(hp.slot)];
  GlobalPos best{};
  std::optional<Letter> best_key;
  for (int i = hp.pos + 1; i < static_cast<int>(w.size()); ++i) {
    const Letter& l = w[static_cast<std::size_t>(i)];
    if (!l.in_g()) continue;
    auto sect = mod.section(l);
    if (!sect.has_value() || sect->is_zero()) continue;
    // Largest h letter produced by the trade; require it to beat v strictly
    // so the rewrite terminates.
    Letter key = sect->begin()->first;
    for (const auto& [sl, sc] : *sect) key = std::max(key, sl);
    if (!(key < v)) continue;
    if (!best.valid() || key < *best_key) {
      best = {hp.slot, i};
      best_key = key;
    }
  }
  return best;
}

std::pair<int, int> find_first_inversion(const TensorMonomial& m) {
  for (int s = 0; s < m.arity(); ++s) {
    const Word& w = m.slots[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i + 1] < w[i]) return {s, static_cast<int>(i)};
  }
  return {-1, -1};
}

}  // namespace

UnElement un_normalize(const TensorElement& raw, const CrossedModule& mod,
                       std::size_t support_cap) {
  for (const auto& [m, c] : raw.terms())
    if (h_letter_count(m) != 1)
      throw std::invalid_argument(
          "relative tensor monomials must carry exactly one h letter");

  LinComb<TensorMonomial> pending = raw.terms();
  UnElement out(raw.arity());
  std::size_t steps = 0;
  while (!pending.is_zero()) {
    if (pending.size() + out.term_count() > support_cap)
      throw ResourceCapError("relative tensor support cap exceeded");
    if (++steps > support_cap * 64)
      throw ResourceCapError("relative tensor rewrite step cap exceeded");
    auto it = pending.begin();
    TensorMonomial m = it->first;
    Rational coeff = it->second;
    pending.add(m, -coeff);

    auto [slot, pos] = find_first_inversion(m);
    if (slot >= 0) {
      Word& w = m.slots[static_cast<std::size_t>(slot)];
      Letter hi = w[static_cast<std::size_t>(pos)];
      Letter lo = w[static_cast<std::size_t>(pos) + 1];
      TensorMonomial swapped = m;
      Word& ws = swapped.slots[static_cast<std::size_t>(slot)];
      ws[static_cast<std::size_t>(pos)] = lo;
      ws[static_cast<std::size_t>(pos) + 1] = hi;
      pending.add(swapped, coeff);
      for (const auto& [l, c] : mod.bracket(hi, lo)) {
        TensorMonomial br = m;
        Word& wb = br.slots[static_cast<std::size_t>(slot)];
        wb.erase(wb.begin() + pos);
        wb[static_cast<std::size_t>(pos)] = l;
        pending.add(br, coeff * c);
      }
      continue;
    }

    GlobalPos hp = find_h_letter(m);
    GlobalPos gp = find_preceding_sectioned(m, hp, mod);
    if (!gp.valid()) {
      // A kernel h letter trades places with any later sectioned g letter
      // and produces a zero boundary factor, so the monomial vanishes.
      if (mod.partial(letter_at(m, hp)).is_zero() &&
          find_sectioned_after(m, hp, mod)) {
        continue;
      }
      GlobalPos rp = find_repromotion(m, hp, mod);
      if (rp.valid()) {
        for (const auto& [partner, c] : exchange(m, rp, hp, mod))
          pending.add(partner, coeff * c);
        continue;
      }
      out.value_.add(m, coeff);
      continue;
    }
    for (const auto& [partner, c] : exchange(m, gp, hp, mod))
      pending.add(partner, coeff * c);
  }
  return out;
}

namespace {

// Row-echelon accumulator over the monomial basis, used as a membership
// oracle for the relation subspace.
class Echelon {
 public:
  // Reduces `v` against the stored rows in place.
  void reduce(LinComb<TensorMonomial>& v) const {
    bool changed = true;
    while (changed && !v.is_zero()) {
      changed = false;
      auto lead = v.begin()->first;
      auto it = rows_.find(lead);
      if (it != rows_.end()) {
        Rational c = v.begin()->second;
        v -= c * it->second;
        changed = true;
      }
    }
  }

  void insert(LinComb<TensorMonomial> v) {
    reduce(v);
    if (v.is_zero()) return;
    Rational lead = v.begin()->second;
    v *= Rational(1) / lead;
    rows_.emplace(v.begin()->first, std::move(v));
  }

 private:
  std::map<TensorMonomial, LinComb<TensorMonomial>> rows_;
};

bool span_membership(const TensorElement& diff, const CrossedModule& mod,
                     std::size_t support_cap) {
  // Closure of the PBW-normalized support under relation instances.
  std::set<TensorMonomial> support;
  std::deque<TensorMonomial> queue;
  auto enqueue = [&](const TensorMonomial& m) {
    if (support.insert(m).second) {
      queue.push_back(m);
      if (support.size() > support_cap)
        throw ResourceCapError("span oracle support cap exceeded");
    }
  };
  for (const auto& [m, c] : diff.terms()) enqueue(m);

  Echelon rows;
  while (!queue.empty()) {
    TensorMonomial m = queue.front();
    queue.pop_front();
    GlobalPos hp = find_h_letter(m);
    for (int s = 0; s < m.arity(); ++s) {
      const Word& w = m.slots[static_cast<std::size_t>(s)];
      for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        GlobalPos gp{s, i};
        if (gp == hp) continue;
        const Letter& l = w[static_cast<std::size_t>(i)];
        if (!l.in_g() || !mod.section(l).has_value()) continue;
        TensorElement partner(m.arity());
        for (const auto& [pm, pc] : exchange(m, gp, hp, mod))
          partner.add(pm, pc);
        TensorElement normal = pbw_normalize(partner, mod);
        LinComb<TensorMonomial> gen = LinComb<TensorMonomial>::unit(m);
        gen -= normal.terms();
        for (const auto& [pm, pc] : normal.terms()) enqueue(pm);
        rows.insert(std::move(gen));
      }
    }
  }
  LinComb<TensorMonomial> v = diff.terms();
  rows.reduce(v);
  return v.is_zero();
}

}  // namespace

bool un_equal(const TensorElement& a, const TensorElement& b,
              const CrossedModule& mod, UnOracle mode,
              std::size_t support_cap) {
  TensorElement diff = pbw_normalize(a - b, mod);
  for (const auto& [m, c] : diff.terms())
    if (h_letter_count(m) != 1)
      throw std::invalid_argument(
          "relative tensor monomials must carry exactly one h letter");
  bool rewrite_ok = true, span_ok = true;
  if (mode != UnOracle::kSpan)
    rewrite_ok = un_normalize(diff, mod, support_cap).is_zero();
  if (mode != UnOracle::kRewrite)
    span_ok = span_membership(diff, mod, support_cap);
  if (mode == UnOracle::kBoth && rewrite_ok != span_ok)
    throw std::logic_error(
        "rewrite and span oracles disagree on relative tensor equality");
  return mode == UnOracle::kSpan ? span_ok : rewrite_ok;
}

bool un_equal(const UnElement& a, const UnElement& b, const CrossedModule& mod,
              UnOracle mode, std::size_t support_cap) {
  if (mode == UnOracle::kRewrite) return a == b;
  return un_equal(a.value(), b.value(), mod, mode, support_cap);
}

TensorElement beta_un(const UnElement& e, const CrossedModule& mod) {
  TensorElement out(e.arity());
  for (const auto& [m, c] : e.value().terms()) {
    GlobalPos hp = find_h_letter(m);
    const Letter v = letter_at(m, hp);
    for (const auto& [dl, cd] : mod.partial(v)) {
      TensorMonomial g = m;
      letter_at(g, hp) = dl;
      out.add(g, c * cd);
    }
  }
  return pbw_normalize(out, mod);
}

UnElement h_act(const LetterComb& v, const TensorElement& r,
                const CrossedModule& mod) {
  TensorElement d = diagonal(v, r.arity());
  return un_normalize(concat_mul(d, r) - concat_mul(r, d), mod);
}

UnElement g_act_un(const LetterComb& x, const UnElement& e,
                   const CrossedModule& mod) {
  TensorElement d = diagonal(x, e.arity());
  return un_normalize(concat_mul(d, e.value()) - concat_mul(e.value(), d), mod);
}

UnElement mul_un(const TensorElement& a, const UnElement& b,
                 const CrossedModule& mod) {
  return un_normalize(concat_mul(a, b.value()), mod);
}

UnElement mul_un(const UnElement& a, const TensorElement& b,
                 const CrossedModule& mod) {
  return un_normalize(concat_mul(a.value(), b), mod);
}

UnElement un_tensor(const TensorElement& a, const UnElement& b,
                    const CrossedModule& mod) {
  return un_normalize(tensor_concat(a, b.value()), mod);
}

UnElement un_tensor(const UnElement& a, const TensorElement& b,
                    const CrossedModule& mod) {
  return un_normalize(tensor_concat(a.value(), b), mod);
}

UnElement permute_slots_un(const Permutation& sigma, const UnElement& e,
                           const CrossedModule& mod) {
  return un_normalize(permute_slots(sigma, e.value()), mod);
}

UnElement insertion_un(const UnElement& e, const std::vector<int>& positions,
                       int arity, const CrossedModule& mod) {
  return un_normalize(insertion(e.value(), positions, arity), mod);
}

}  // namespace twobraid
