#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gitstab/p2solve.hpp"
#include "gitstab/poly.hpp"

namespace gitstab {

// Degree-d rational self-map of P^N, stored as N+1 homogeneous coordinate
// polynomials in N+1 variables. Always normalized: coordinates are coprime,
// jointly integer-primitive, and the first nonzero coordinate has positive
// grlex leading coefficient.
class ProjMap {
public:
    // Validates (homogeneous, equal degrees, not all zero), removes the
    // common polynomial factor and the global scalar.
    static ProjMap from_coords(std::vector<Poly> coords);

    int dim() const { return dim_; }         // N
    int degree() const { return deg_; }      // d
    const std::vector<Poly>& coords() const { return coords_; }

    bool operator==(const ProjMap& o) const = default;

private:
    ProjMap(int dim, int deg, std::vector<Poly> coords)
        : dim_(dim), deg_(deg), coords_(std::move(coords)) {}
    int dim_;
    int deg_;
    std::vector<Poly> coords_;
};

// g after f: coordinates of g evaluated at the coordinates of f, normalized.
ProjMap compose_maps(const ProjMap& g, const ProjMap& f);

// A o F o A^{-1} for an invertible (N+1)x(N+1) rational matrix A.
ProjMap linear_conjugate(const ProjMap& f, const std::vector<std::vector<Rat>>& a);

// [deg F, deg F^2, ..., deg F^n], each iterate normalized before measuring.
std::vector<int> iterate_degrees(const ProjMap& m, int n);

// deg F^j == (deg F)^j for j = 1..n.
bool is_algebraically_stable_upto(const ProjMap& m, int n);

// Jacobian-determinant criterion (valid in characteristic zero).
bool is_dominant(const ProjMap& m);

// Common projective zeros of the coordinates of a self-map of P^2.
P2Solutions common_zeros_p2(const ProjMap& m);

// True iff the coordinates have no common zero over the algebraic closure.
// Throws UndecidedOverQ when unverified irrational candidates remain.
bool is_morphism_p2(const ProjMap& m);

struct UndecidedOverQ : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line u*x + v*y + w*z = 0 in P^2, stored with first nonzero coefficient 1.
struct LineP2 {
    std::array<Rat, 3> coeffs;
    static LineP2 make(const Rat& u, const Rat& v, const Rat& w);
    Poly equation() const;  // in 3 variables
};

enum class CurveKind { point, line, irreducible_conic, reducible_or_degenerate };

std::string curve_kind_name(CurveKind k);

struct PlaneCurveImage {
    CurveKind kind;
    std::vector<Rat> point;  // set when kind == point (normalized triple)
    Poly equation;           // set otherwise (homogeneous in 3 variables)
};

// Closure of the image of a line under a dominant quadratic self-map of P^2,
// computed by parametrizing the line, composing, removing the common factor
// of the resulting binary forms, and implicitizing.
PlaneCurveImage line_image(const ProjMap& m, const LineP2& line);

// Normalization helper shared by the point-reporting code paths: scales a
// projective tuple so its first nonzero entry is 1.
std::vector<Rat> normalize_point(std::vector<Rat> p);

}  // namespace gitstab
