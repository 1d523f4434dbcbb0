#pragma once

#include <random>
#include <vector>

#include "gitstab/poly.hpp"
#include "gitstab/ratmap.hpp"

namespace gitstab {

// Data of a generalized Henon map: dimension N >= k >= 2, degree d >= 2,
// nonzero scalars b_1..b_N, and polynomials P_{i+1} in x_k..x_i for
// k <= i <= N with max_i deg P_{i+1} = d.
//
// The affine map is
//   (b_2 x_2, ..., b_k x_k,
//    b_{k+1} x_{k+1} + P_{k+1}, ..., b_N x_N + P_N,
//    b_1 x_1 + P_{N+1}).
struct HenonSpec {
    int N, k, d;
    std::vector<Rat> b;   // b[i] = b_{i+1}, size N
    std::vector<Poly> P;  // P[j] = P_{k+1+j} in N affine variables, size N-k+1

    // Validates every invariant; the only way to build a spec.
    static HenonSpec make(int N, int k, int d, std::vector<Rat> b, std::vector<Poly> P);
};

// The N affine coordinate polynomials, in the order above.
std::vector<Poly> build_affine(const HenonSpec& spec);

// Extension to P^N: coordinate j picks up x_{N+1}^{d-1}, the P parts are
// homogenized to degree d, and the last coordinate is x_{N+1}^d.
ProjMap homogenize_map(const HenonSpec& spec);

// Inverse automorphism by back-substitution; composing either way with
// build_affine gives the identity tuple.
std::vector<Poly> inverse_affine(const HenonSpec& spec);

// The family [t*x^d + y*z^{d-1} : x*z^{d-1} + y^d : z^d] on P^2.
ProjMap family_fdt(int d, const Rat& t);

// Reproducible random spec: coefficients have numerator in {-9..9}\{0} and
// denominator in {1..4}, each admissible monomial enters with probability
// 1/2, and one degree-d monomial is forced so that max deg P_{i+1} = d.
HenonSpec random_spec(int N, int k, int d, std::mt19937_64& rng);

// Uniform helpers for the generator and the test sweeps; kept free of
// std::uniform_int_distribution so that seeded runs are identical across
// standard libraries.
long long rand_range(std::mt19937_64& rng, long long lo, long long hi);
Rat rand_coeff(std::mt19937_64& rng);  // numerator -9..9 nonzero, denominator 1..4

}  // namespace gitstab
