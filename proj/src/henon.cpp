#include "gitstab/henon.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gitstab {

HenonSpec HenonSpec::make(int N, int k, int d, std::vector<Rat> b, std::vector<Poly> P) {
    if (!(N >= k && k >= 2)) throw std::invalid_argument("HenonSpec: need N >= k >= 2");
    if (d < 2) throw std::invalid_argument("HenonSpec: need d >= 2");
    if (static_cast<int>(b.size()) != N)
        throw std::invalid_argument("HenonSpec: need exactly N scalars b_1..b_N");
    for (int i = 0; i < N; ++i)
        if (b[i].is_zero()) {
            std::ostringstream os;
            os << "HenonSpec: b_" << (i + 1) << " must be nonzero";
            throw std::invalid_argument(os.str());
        }
    if (static_cast<int>(P.size()) != N - k + 1)
        throw std::invalid_argument("HenonSpec: need polynomials P_{k+1}..P_{N+1}");
    int max_deg = -1;
    for (int j = 0; j < static_cast<int>(P.size()); ++j) {
        const Poly& p = P[j];
        int i = k + j;  // this entry is P_{i+1}, allowed variables x_k..x_i
        if (p.num_vars() != N)
            throw std::invalid_argument("HenonSpec: P polynomials live in the N affine variables");
        for (int v = 0; v < N; ++v)
            if (p.uses_var(v) && (v < k - 1 || v > i - 1)) {
                std::ostringstream os;
                os << "HenonSpec: P_" << (i + 1) << " may only use x_" << k << "..x_" << i
                   << " but uses x_" << (v + 1);
                throw std::invalid_argument(os.str());
            }
        if (p.degree() && *p.degree() > d) {
            std::ostringstream os;
            os << "HenonSpec: deg P_" << (i + 1) << " = " << *p.degree() << " exceeds d = " << d;
            throw std::invalid_argument(os.str());
        }
        if (p.degree()) max_deg = std::max(max_deg, *p.degree());
    }
    if (max_deg != d) {
        std::ostringstream os;
        os << "HenonSpec: max deg P_{i+1} is "
           << (max_deg < 0 ? std::string("-inf") : std::to_string(max_deg)) << ", must equal d = "
           << d;
        throw std::invalid_argument(os.str());
    }
    return HenonSpec{N, k, d, std::move(b), std::move(P)};
}

std::vector<Poly> build_affine(const HenonSpec& spec) {
    const int N = spec.N, k = spec.k;
    std::vector<Poly> f;
    for (int i = 1; i <= k - 1; ++i)  // b_{i+1} x_{i+1}
        f.push_back(Poly::variable(N, i).scaled(spec.b[i]));
    for (int i = k; i <= N - 1; ++i)  // b_{i+1} x_{i+1} + P_{i+1}
        f.push_back(Poly::variable(N, i).scaled(spec.b[i]) + spec.P[i - k]);
    f.push_back(Poly::variable(N, 0).scaled(spec.b[0]) + spec.P[N - k]);  // b_1 x_1 + P_{N+1}
    return f;
}

ProjMap homogenize_map(const HenonSpec& spec) {
    std::vector<Poly> coords;
    for (const Poly& p : build_affine(spec)) coords.push_back(p.homogenize(spec.d));
    coords.push_back(Poly::variable(spec.N + 1, spec.N).pow(spec.d));
    return ProjMap::from_coords(std::move(coords));
}

std::vector<Poly> inverse_affine(const HenonSpec& spec) {
    const int N = spec.N, k = spec.k;
    // expr[v] = x_{v+1} written in the target coordinates y_1..y_N
    std::vector<Poly> expr(N, Poly::zero(N));
    for (int i = 1; i <= k - 1; ++i)  // y_i = b_{i+1} x_{i+1}
        expr[i] = Poly::variable(N, i - 1).scaled(spec.b[i].inverse());
    for (int i = k; i <= N - 1; ++i)  // y_i = b_{i+1} x_{i+1} + P_{i+1}(x_k..x_i)
        expr[i] = (Poly::variable(N, i - 1) - spec.P[i - k].compose(expr))
                      .scaled(spec.b[i].inverse());
    expr[0] = (Poly::variable(N, N - 1) - spec.P[N - k].compose(expr))
                  .scaled(spec.b[0].inverse());
    return expr;
}

ProjMap family_fdt(int d, const Rat& t) {
    if (d < 2) throw std::invalid_argument("family_fdt: need d >= 2");
    Poly x = Poly::variable(3, 0), y = Poly::variable(3, 1), z = Poly::variable(3, 2);
    std::vector<Poly> coords = {
        x.pow(d).scaled(t) + y * z.pow(d - 1),
        x * z.pow(d - 1) + y.pow(d),
        z.pow(d),
    };
    return ProjMap::from_coords(std::move(coords));
}

long long rand_range(std::mt19937_64& rng, long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("rand_range: empty range");
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

Rat rand_coeff(std::mt19937_64& rng) {
    long long num = rand_range(rng, 1, 9);
    if (rand_range(rng, 0, 1) == 0) num = -num;
    return Rat(num, rand_range(rng, 1, 4));
}

namespace {

// All monomials in variables lo..hi (0-based, inclusive) of total degree <= d.
std::vector<Monomial> monomials_upto(int num_vars, int lo, int hi, int d) {
    std::vector<Monomial> out;
    std::vector<int> e(num_vars, 0);
    std::function<void(int, int)> rec = [&](int v, int budget) {
        if (v > hi) {
            out.push_back(Monomial(e));
            return;
        }
        for (int i = 0; i <= budget; ++i) {
            e[v] = i;
            rec(v + 1, budget - i);
        }
        e[v] = 0;
    };
    rec(lo, d);
    return out;
}

}  // namespace

HenonSpec random_spec(int N, int k, int d, std::mt19937_64& rng) {
    std::vector<Rat> b;
    for (int i = 0; i < N; ++i) b.push_back(rand_coeff(rng));
    std::vector<Poly> P;
    for (int i = k; i <= N; ++i) {
        Poly p = Poly::zero(N);
        for (const Monomial& m : monomials_upto(N, k - 1, i - 1, d))
            if (rand_range(rng, 0, 1) == 1) p += Poly::monomial(m, rand_coeff(rng));
        if (p.degree() && *p.degree() > d) throw std::logic_error("random_spec: degree overflow");
        P.push_back(std::move(p));
    }
    // force the max-degree condition with one top-degree monomial
    int pick = static_cast<int>(rand_range(rng, 0, N - k));
    int top_var_hi = k + pick;  // P_{k+pick+1} may use x_k..x_{k+pick}
    std::vector<Monomial> top;
    for (const Monomial& m : monomials_upto(N, k - 1, top_var_hi - 1, d))
        if (m.degree() == d) top.push_back(m);
    const Monomial& forced = top[static_cast<size_t>(rand_range(rng, 0, static_cast<long long>(top.size()) - 1))];
    Poly& target = P[pick];
    target = target - Poly::monomial(forced, target.coeff(forced)) + Poly::monomial(forced, rand_coeff(rng));
    return HenonSpec::make(N, k, d, std::move(b), std::move(P));
}

}  // namespace gitstab
