#ifndef HOPFFORGE_SCALAR_IO_HPP
#define HOPFFORGE_SCALAR_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "hopfforge/ratfunc.hpp"

namespace hopfforge {

// parse failure with the (0-based) offset of the offending character
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Scalar grammar (whitespace insensitive):
//   scalar   := ['-'|'+'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | zpow
//   rational := digits ['/' digits]
//   zpow     := 'z' ['^' digits]
// z^k with k >= m wraps via z^m = 1 before reduction mod Phi_m.
CycScalar parse_scalar(const std::string& text, unsigned m);

// Same grammar extended for families: factors may also be t-powers and the
// whole value may be the quotient form "(poly)/(poly)".
RatFunc parse_ratfunc(const std::string& text, unsigned m);

// Minimal canonical forms ("0", "1", "-1/2*z^3 + 2", "(t + 1)/(t^2)", ...);
// parse(to_string(x)) == x.
std::string to_string(const CycScalar& s);
std::string to_string(const TPoly& p);
std::string to_string(const RatFunc& r);

} // namespace hopfforge

#endif
