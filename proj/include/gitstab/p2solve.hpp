#pragma once

#include <array>
#include <string>
#include <vector>

#include "gitstab/poly.hpp"

namespace gitstab {

// Solution content the solver could not resolve into rational points:
// either candidate values with irrational minimal-polynomial data
// (dimension 0) or a positive-dimensional component (dimension >= 1).
struct P2Residual {
    std::string chart;            // "x=1", "x=0,y=1", ...
    std::vector<Poly> eliminants; // triangular minimal-polynomial data
    int dimension;
};

struct P2Solutions {
    std::vector<std::array<Rat, 3>> points;  // normalized, deduplicated
    std::vector<P2Residual> residual;
    bool certified_empty() const { return points.empty() && residual.empty(); }
};

// All common projective zeros of a system of homogeneous polynomials in
// three variables. Rational zeros are returned as points (each verified by
// substitution into every input equation); anything beyond the rationals is
// reported as residual data, never silently dropped.
//
// Method: split P^2 into the charts {x=1}, {x=0,y=1}, {(0:0:1)}. In each
// affine chart, repeatedly factor out nonconstant gcds of pairs (branching
// on V(p,q) = V(gcd) u V(p/gcd, q/gcd)), then eliminate one variable with
// pairwise Sylvester resultants, take rational roots of the gcd of the
// eliminants, and back-substitute.
P2Solutions solve_p2_system(const std::vector<Poly>& system);

}  // namespace gitstab
