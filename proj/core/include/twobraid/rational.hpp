#ifndef TWOBRAID_RATIONAL_HPP
#define TWOBRAID_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace twobraid {

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, which is the canonical form assumed everywhere.
using Rational = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p", "-p", "p/q". Rejects zero denominators and malformed input.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p" for integers, "p/q" otherwise, q > 0.
std::string rational_to_string(const Rational& value);

}  // namespace twobraid

#endif
