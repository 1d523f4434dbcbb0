#pragma once

// Shared helpers for the test suites: seeded random objects and the
// brute-force conjugation oracle for mu.

#include <random>
#include <vector>

#include "gitstab/git.hpp"
#include "gitstab/henon.hpp"
#include "gitstab/poly.hpp"
#include "gitstab/ratmap.hpp"

namespace testsupport {

using namespace gitstab;

// Random polynomial of degree <= max_deg: every monomial enters with
// probability 1/2, coefficients as in the Henon generator.
inline Poly random_poly(std::mt19937_64& rng, int nvars, int max_deg) {
    std::vector<Monomial> monos;
    std::vector<int> e(nvars, 0);
    auto rec = [&](auto&& self, int v, int budget) -> void {
        if (v == nvars) {
            monos.push_back(Monomial(e));
            return;
        }
        for (int i = 0; i <= budget; ++i) {
            e[v] = i;
            self(self, v + 1, budget - i);
        }
        e[v] = 0;
    };
    rec(rec, 0, max_deg);
    Poly p = Poly::zero(nvars);
    for (const Monomial& m : monos)
        if (rand_range(rng, 0, 1) == 1) p += Poly::monomial(m, rand_coeff(rng));
    return p;
}

inline Poly random_nonzero_poly(std::mt19937_64& rng, int nvars, int max_deg) {
    for (int tries = 0; tries < 100; ++tries) {
        Poly p = random_poly(rng, nvars, max_deg);
        if (!p.is_zero()) return p;
    }
    return Poly::one(nvars);
}

inline Poly random_homogeneous(std::mt19937_64& rng, int nvars, int deg) {
    std::vector<Monomial> monos;
    std::vector<int> e(nvars, 0);
    auto rec = [&](auto&& self, int v, int budget) -> void {
        if (v == nvars - 1) {
            e[v] = budget;
            monos.push_back(Monomial(e));
            return;
        }
        for (int i = 0; i <= budget; ++i) {
            e[v] = i;
            self(self, v + 1, budget - i);
        }
        e[v] = 0;
    };
    rec(rec, 0, deg);
    Poly p = Poly::zero(nvars);
    for (const Monomial& m : monos)
        if (rand_range(rng, 0, 1) == 1) p += Poly::monomial(m, rand_coeff(rng));
    return p;
}

// Random map of the requested shape; coordinates may be sparse but the
// result is a valid normalized map of degree exactly d.
inline ProjMap random_map(std::mt19937_64& rng, int N, int d) {
    for (int tries = 0; tries < 200; ++tries) {
        std::vector<Poly> coords;
        bool nonzero = false;
        for (int i = 0; i <= N; ++i) {
            Poly p = random_homogeneous(rng, N + 1, d);
            nonzero = nonzero || !p.is_zero();
            coords.push_back(std::move(p));
        }
        if (!nonzero) continue;
        try {
            ProjMap m = ProjMap::from_coords(std::move(coords));
            if (m.degree() == d) return m;
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::runtime_error("random_map: could not build a map");
}

inline WeightVector random_weights(std::mt19937_64& rng, int n) {
    while (true) {
        std::vector<long long> w;
        long long sum = 0;
        for (int i = 0; i + 1 < n; ++i) {
            w.push_back(rand_range(rng, -6, 6));
            sum += w.back();
        }
        w.push_back(-sum);
        bool zero = true;
        for (long long v : w) zero = zero && v == 0;
        if (!zero) return WeightVector(std::move(w));
    }
}

// Random quadratic Henon spec on P^2 (N = k = 2, deg P = 2).
inline HenonSpec random_classic_spec(std::mt19937_64& rng) { return random_spec(2, 2, 2, rng); }

// Independent route to mu: adjoin alpha as an extra polynomial variable,
// substitute x_i -> alpha^(M - w_i) x_i, multiply coordinate j by
// alpha^(maxw + w_j), and read off the minimal alpha-exponent.
inline long long mu_conjugation_oracle(const ProjMap& m, const WeightVector& w) {
    int n = m.dim() + 1;
    long long maxw = 0;
    for (int i = 0; i < n; ++i) maxw = std::max(maxw, std::llabs(w[i]));
    long long big = maxw + 1;
    int alpha = n;  // index of the adjoined variable
    std::vector<Poly> subs;
    for (int i = 0; i < n; ++i) {
        Poly xi = Poly::variable(n + 1, i);
        Poly a = Poly::variable(n + 1, alpha).pow(static_cast<int>(big - w[i]));
        subs.push_back(xi * a);
    }
    long long offset = maxw + static_cast<long long>(m.degree()) * big;
    bool first = true;
    long long best = 0;
    for (int j = 0; j < n; ++j) {
        const Poly& c = m.coords()[j];
        if (c.is_zero()) continue;
        Poly conj = c.compose(subs) * Poly::variable(n + 1, alpha).pow(static_cast<int>(maxw + w[j]));
        for (const auto& [mono, coeff] : conj.terms()) {
            long long e = mono.exp(alpha) - offset;
            if (first || e < best) best = e;
            first = false;
        }
    }
    if (first) throw std::logic_error("mu_conjugation_oracle: empty support");
    return best;
}

// Random invertible rational matrix with small integer entries.
inline std::vector<std::vector<Rat>> random_invertible(std::mt19937_64& rng, int n) {
    for (int tries = 0; tries < 200; ++tries) {
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = Rat(rand_range(rng, -3, 3));
        // cheap nonsingularity test via the polynomial determinant
        std::vector<std::vector<Poly>> pm(n, std::vector<Poly>(n, Poly::zero(1)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) pm[i][j] = Poly::constant(1, a[i][j]);
        if (!Poly::det(pm).is_zero()) return a;
    }
    throw std::runtime_error("random_invertible: no invertible sample");
}

}  // namespace testsupport
