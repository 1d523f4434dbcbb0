#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gitstab/monomial.hpp"
#include "gitstab/rational.hpp"

namespace gitstab {

// Sparse multivariate polynomial with exact rational coefficients.
//
// Terms are kept in a map ordered by graded lex, zero coefficients are never
// stored, and the variable count is fixed at construction. The degree of the
// zero polynomial is reported as an empty optional rather than any integer
// sentinel.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat>;

    static Poly zero(int num_vars);
    static Poly one(int num_vars) { return constant(num_vars, Rat(1)); }
    static Poly constant(int num_vars, const Rat& c);
    static Poly variable(int num_vars, int var);
    static Poly monomial(const Monomial& m, const Rat& c);

    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    int term_count() const { return static_cast<int>(terms_.size()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<int> degree() const;
    int degree_in(int var) const;  // 0 for the zero polynomial
    bool is_homogeneous() const;   // vacuously true for zero
    bool uses_var(int var) const;
    int max_used_var() const;      // -1 when constant

    Rat coeff(const Monomial& m) const;
    Rat constant_coeff() const;
    const Monomial& leading_monomial() const;  // grlex; requires nonzero
    Rat leading_coeff() const;                 // grlex; requires nonzero

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rat& c) const;
    Poly pow(int e) const;
    bool operator==(const Poly& o) const {
        return num_vars_ == o.num_vars_ && terms_ == o.terms_;
    }

    Poly derivative(int var) const;
    Rat evaluate(const std::vector<Rat>& point) const;
    Poly substitute(int var, const Rat& value) const;    // same variable count
    Poly compose(const std::vector<Poly>& subs) const;   // subs.size() == num_vars
    Poly homogenize(int target_deg) const;               // appends one variable
    Poly dehomogenize() const;                           // sets last variable to 1

    // Univariate view in one variable, coefficients are polynomials in the
    // remaining variables (stored with the same variable count).
    std::vector<Poly> coeffs_in(int var) const;
    static Poly from_coeffs_in(int var, int num_vars, const std::vector<Poly>& cs);

    // Exact division; empty when the divisor does not divide exactly.
    std::optional<Poly> divide_exact(const Poly& divisor) const;

    // p = content * primitive with primitive integer-coprime and its grlex
    // leading coefficient positive; content carries the sign.
    std::pair<Rat, Poly> rational_content() const;
    Poly normalized_primitive() const;

    // Subresultant-PRS gcd, normalized: content 1, positive grlex leading
    // coefficient. gcd(p, 0) is the normalization of p.
    static Poly gcd(const Poly& a, const Poly& b);

    // Sylvester resultant with respect to one variable.
    static Poly resultant(const Poly& f, const Poly& g, int var);

    // Determinant of a square matrix of polynomials (Laplace expansion with
    // column-subset memoization; fine for the small matrices used here).
    static Poly det(const std::vector<std::vector<Poly>>& m);

    std::string str(const std::vector<std::string>& var_names) const;

private:
    explicit Poly(int num_vars) : num_vars_(num_vars) {}
    void add_term(const Monomial& m, const Rat& c);

    int num_vars_ = 0;
    TermMap terms_;
};

struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity), ascending
    Poly cofactor;                           // rational-root-free part, primitive
    int cofactor_degree = 0;
};

// All rational roots (with multiplicity) of a polynomial in at most one
// variable, plus the degree of the unresolved cofactor.
RationalRoots rational_roots(const Poly& p);

// Entry (i, j) is d(coords[i])/d(x_j).
std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& coords);

Poly gcd_many(const std::vector<Poly>& ps);

}  // namespace gitstab
