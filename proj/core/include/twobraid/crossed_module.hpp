#ifndef TWOBRAID_CROSSED_MODULE_HPP
#define TWOBRAID_CROSSED_MODULE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twobraid/lincomb.hpp"

namespace twobraid {

// A basis letter of the total algebra of a differential crossed module
// (partial : h -> g, with g acting on h). Letters live either in g or in h;
// the ordering (g before h, then by index) is the monomial order used by the
// normal-form rewriters, so it must stay a total order.
struct Letter {
  // h letters sort strictly below g letters. PBW sorting within a slot then
  // pulls the single h letter of a relative-tensor monomial to the front of
  // its slot, which is the same direction the quotient rewrite moves it; a
  // g-before-h order would make the two normalizers cycle.
  std::uint8_t domain = 1;  // 0 = h, 1 = g
  std::int32_t index = 0;

  static Letter g(std::int32_t i) { return Letter{1, i}; }
  static Letter h(std::int32_t i) { return Letter{0, i}; }
  bool in_g() const { return domain == 1; }
  bool in_h() const { return domain == 0; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using LetterComb = LinComb<Letter>;

// Differential crossed module presented by structure constants on basis
// letters. bracket() covers all four sectors:
//   [g,g] in g, [g,h] = action in h, [h,g] = -action, [h,h] in h.
// This is exactly the bracket of the semidirect product e = h x| g restricted
// to basis letters, except that the g-valued component of [h,h'] is always
// zero (h is an ideal via partial only after passing to e; here h-brackets
// stay in h).
class CrossedModule {
 public:
  virtual ~CrossedModule() = default;

  virtual LetterComb bracket(const Letter& a, const Letter& b) const = 0;
  // Boundary map on h letters (result in g letters).
  virtual LetterComb partial(const Letter& h) const = 0;
  // Pinned section of partial on its image: for a g letter w known to lie in
  // im(partial), returns u in h with partial(u) = w; nullopt otherwise.
  virtual std::optional<LetterComb> section(const Letter& g) const = 0;
  virtual std::vector<Letter> g_basis(int degree_bound) const = 0;
  virtual std::vector<Letter> h_basis(int degree_bound) const = 0;
  virtual std::string name(const Letter& l) const = 0;

  // Linear extensions.
  LetterComb bracket(const LetterComb& a, const LetterComb& b) const;
  LetterComb partial(const LetterComb& h) const;
};

}  // namespace twobraid

#endif
