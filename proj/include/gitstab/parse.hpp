#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gitstab/henon.hpp"
#include "gitstab/ratmap.hpp"

namespace gitstab {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line(line),
          col(col) {}
    int line, col;
};

// Sum-of-terms grammar: terms like 3*x^2*y with integer or p/q coefficients,
// '*' optional, '^' nonnegative integer exponents, whitespace ignored.
Poly parse_poly(const std::string& text, const std::vector<std::string>& var_names);

// "map N=2 d=2 vars=(x,y,z): [p : p : p]"; the bare form "[p : p : p]" is
// accepted with default variable names and inferred N, d.
ProjMap parse_map(const std::string& text);

// "line: u*x + v*y + w*z" (the "line:" prefix is optional); must be linear.
LineP2 parse_line(const std::string& text);

// "henon N=3 k=2 d=2 b=(1,2,3) P3=(x2^2) P4=(x2*x3 + 1/2*x3^2)"
HenonSpec parse_henon(const std::string& text);

// comma-separated integers
std::vector<long long> parse_weights(const std::string& text);

// canonical names: (x, y, z) in three variables, else (x1, ..., xn)
std::vector<std::string> default_var_names(int n);

// names x2..xN used by the P polynomials of a Henon spec in N affine variables
std::vector<std::string> henon_var_names(int n);

std::string format_map(const ProjMap& m);
std::string format_henon(const HenonSpec& spec);

}  // namespace gitstab
