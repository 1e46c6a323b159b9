#ifndef TWOBRAID_LINCOMB_HPP
#define TWOBRAID_LINCOMB_HPP

#include <map>
#include <utility>

#include "twobraid/rational.hpp"

namespace twobraid {

// Finitely supported linear combination over a totally ordered key type.
// Zero coefficients are never stored, so support() is always exact and
// equality is structural.
template <typename Key>
class LinComb {
 public:
  using Terms = std::map<Key, Rational>;
  using const_iterator = typename Terms::const_iterator;

  LinComb() = default;

  static LinComb unit(Key key, Rational coeff = Rational(1)) {
    LinComb out;
    out.add(std::move(key), std::move(coeff));
    return out;
  }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }

  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }

  LinComb& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= scalar;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator<(const LinComb& a, const LinComb& b) {
    return a.terms_ < b.terms_;
  }

 private:
  Terms terms_;
};

// Convenience for bilinear extension: apply f to every key pair.
template <typename Key, typename Fn>
auto bilinear(const LinComb<Key>& a, const LinComb<Key>& b, Fn&& f)
    -> decltype(f(std::declval<Key>(), std::declval<Key>())) {
  decltype(f(std::declval<Key>(), std::declval<Key>())) out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto part = f(ka, kb);
      part *= ca * cb;
      out += part;
    }
  return out;
}

}  // namespace twobraid

#endif
