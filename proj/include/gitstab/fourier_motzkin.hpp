#pragma once

#include <optional>
#include <vector>

#include "gitstab/rational.hpp"

namespace gitstab::fm {

// a . x + c > 0 (strict) or >= 0.
struct Constraint {
    std::vector<Rat> a;
    Rat c;
    bool strict;
};

// Exact Fourier-Motzkin feasibility over the rationals. Returns a feasible
// point, chosen deterministically (variables eliminated from the back;
// back-substitution picks the midpoint of two-sided intervals and steps one
// unit inside one-sided ones).
std::optional<std::vector<Rat>> feasible_point(std::vector<Constraint> cons, int nvars);

}  // namespace gitstab::fm
