#include "gitstab/git.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "gitstab/fourier_motzkin.hpp"

namespace gitstab {

WeightVector::WeightVector(std::vector<long long> w) : w_(std::move(w)) {
    if (w_.size() < 2) throw std::invalid_argument("WeightVector: need at least two entries");
    long long sum = std::accumulate(w_.begin(), w_.end(), 0LL);
    if (sum != 0) throw std::invalid_argument("WeightVector: entries must sum to zero");
    if (std::all_of(w_.begin(), w_.end(), [](long long x) { return x == 0; }))
        throw std::invalid_argument("WeightVector: the trivial weight vector is not a 1-PS");
}

ExponentFunctional ExponentFunctional::from_pair(int coord, const Monomial& mono) {
    std::vector<long long> c(mono.num_vars(), 0);
    c.at(coord) += 1;
    for (int v = 0; v < mono.num_vars(); ++v) c[v] -= mono.exp(v);
    return ExponentFunctional{std::move(c)};
}

long long ExponentFunctional::eval(const WeightVector& w) const {
    if (static_cast<int>(covector.size()) != w.size())
        throw std::invalid_argument("ExponentFunctional: dimension mismatch");
    long long acc = 0;
    for (int v = 0; v < w.size(); ++v) acc += covector[v] * w[v];
    return acc;
}

long long exponent(int coord, const Monomial& mono, const WeightVector& w) {
    if (mono.num_vars() != w.size())
        throw std::invalid_argument("exponent: monomial and weight dimensions differ");
    return ExponentFunctional::from_pair(coord, mono).eval(w);
}

long long mu(const ProjMap& m, const WeightVector& w) {
    if (w.size() != m.dim() + 1) throw std::invalid_argument("mu: weight dimension mismatch");
    bool first = true;
    long long best = 0;
    for (int j = 0; j <= m.dim(); ++j)
        for (const auto& [mono, c] : m.coords()[j].terms()) {
            long long e = exponent(j, mono, w);
            if (first || e < best) best = e;
            first = false;
        }
    if (first) throw std::logic_error("mu: map has empty support");
    return best;
}

WeightVector henon_block_weights(int N, int k, long long r, long long s, long long t) {
    if (!(N >= k && k >= 2)) throw std::invalid_argument("henon_block_weights: need N >= k >= 2");
    if (r < 0 || s < 0 || t < 0)
        throw std::invalid_argument("henon_block_weights: need r, s, t >= 0");
    if (r == 0 && s == 0 && t == 0)
        throw std::invalid_argument("henon_block_weights: need some positive weight");
    if (r * (k - 1) - s * (N - k + 1) - t != 0) {
        std::ostringstream os;
        os << "henon_block_weights: balance r(k-1) - s(N-k+1) - t = "
           << r * (k - 1) - s * (N - k + 1) - t << " != 0";
        throw std::invalid_argument(os.str());
    }
    std::vector<long long> w;
    for (int i = 0; i < k - 1; ++i) w.push_back(r);
    for (int i = 0; i < N - k + 1; ++i) w.push_back(-s);
    w.push_back(-t);
    return WeightVector(std::move(w));
}

CertificateRST paper_certificate_rst(int N, int k, int d) {
    if (!(N >= k && k >= 2 && d >= 2))
        throw std::invalid_argument("paper_certificate: need N >= k >= 2 and d >= 2");
    if (d == 2 && k == 2) return {1, 0, 1};
    return {2LL * N + 2 - k, k - 1LL, static_cast<long long>(k - 1) * (N + 1)};
}

WeightVector paper_certificate(int N, int k, int d) {
    CertificateRST c = paper_certificate_rst(N, k, d);
    return henon_block_weights(N, k, c.r, c.s, c.t);
}

std::string mu_kind_name(MuKind k) {
    return k == MuKind::strictly_destabilizing ? "strictly-destabilizing" : "non-stable-witness";
}

namespace {

struct Support {
    std::vector<ExponentFunctional> funcs;
    int size = 0;
};

Support support_functionals(const ProjMap& m) {
    Support s;
    for (int j = 0; j <= m.dim(); ++j)
        for (const auto& [mono, c] : m.coords()[j].terms()) {
            s.funcs.push_back(ExponentFunctional::from_pair(j, mono));
            ++s.size;
        }
    return s;
}

// Rational sample -> primitive integer vector (scales by the common
// denominator, divides by the gcd).
std::vector<long long> to_primitive_integers(const std::vector<Rat>& x) {
    mpz_class den_lcm = 1;
    for (const Rat& r : x) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.den().get_mpz_t());
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const Rat& r : x) {
        mpz_class v = r.num() * (den_lcm / r.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    std::vector<long long> out;
    for (mpz_class& v : ints) {
        if (g != 0) v /= g;
        if (!v.fits_slong_p()) throw std::overflow_error("destabilizing weights overflow");
        out.push_back(v.get_si());
    }
    return out;
}

std::optional<std::vector<long long>> solve_weight_system(const Support& s, int n, bool strict,
                                                          std::optional<std::pair<int, int>> pin) {
    std::vector<fm::Constraint> cons;
    for (const ExponentFunctional& f : s.funcs) {
        fm::Constraint k;
        for (long long v : f.covector) k.a.push_back(Rat(v));
        k.c = Rat(0);
        k.strict = strict;
        cons.push_back(std::move(k));
    }
    // sum of weights = 0
    fm::Constraint sum_le, sum_ge;
    sum_le.a.assign(n, Rat(1));
    sum_le.c = Rat(0);
    sum_le.strict = false;
    sum_ge.a.assign(n, Rat(-1));
    sum_ge.c = Rat(0);
    sum_ge.strict = false;
    cons.push_back(sum_le);
    cons.push_back(sum_ge);
    if (pin) {
        auto [u, sigma] = *pin;
        fm::Constraint up, dn;
        up.a.assign(n, Rat(0));
        up.a[u] = Rat(1);
        up.c = Rat(-sigma);
        up.strict = false;
        dn.a.assign(n, Rat(0));
        dn.a[u] = Rat(-1);
        dn.c = Rat(sigma);
        dn.strict = false;
        cons.push_back(up);
        cons.push_back(dn);
    }
    auto x = fm::feasible_point(std::move(cons), n);
    if (!x) return std::nullopt;
    return to_primitive_integers(*x);
}

}  // namespace

std::optional<MuCertificate> find_destabilizing_diag(const ProjMap& m, bool strict) {
    Support s = support_functionals(m);
    int n = m.dim() + 1;
    std::optional<std::vector<long long>> best;
    if (strict) {
        best = solve_weight_system(s, n, true, std::nullopt);
    } else {
        for (int u = 0; u < n; ++u)
            for (int sigma : {+1, -1}) {
                auto cand = solve_weight_system(s, n, false, std::make_pair(u, sigma));
                if (cand && (!best || *cand < *best)) best = cand;
            }
    }
    if (!best) return std::nullopt;
    WeightVector w(*best);
    long long value = mu(m, w);
    if (strict ? value <= 0 : value < 0)
        throw std::logic_error("find_destabilizing_diag: search returned an infeasible witness");
    return MuCertificate{w, value,
                         strict ? MuKind::strictly_destabilizing : MuKind::non_stable_witness,
                         s.size};
}

VerifyResult verify_certificate(const ProjMap& m, const WeightVector& w, MuSign expect) {
    long long value = mu(m, w);
    bool ok = expect == MuSign::positive ? value > 0 : value >= 0;
    if (!ok) return {false, value, std::nullopt};
    Support s = support_functionals(m);
    MuKind kind = (expect == MuSign::positive && value > 0) ? MuKind::strictly_destabilizing
                                                            : MuKind::non_stable_witness;
    return {true, value, MuCertificate{w, value, kind, s.size}};
}

std::string LinearFormRST::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](long long c, const char* name) {
        if (c == 0) return;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        long long a = c < 0 ? -c : c;
        if (a != 1) os << a;
        os << name;
    };
    emit(cr, "r");
    emit(cs, "s");
    emit(ct, "t");
    if (first) os << "0";
    return os.str();
}

namespace {

std::string roman(int line) {
    static const char* names[] = {"I", "II", "III", "IV", "V", "VI"};
    return names[line - 1];
}

std::vector<TableRow> table_rows(int N, int k, int d, const std::vector<int>& ms) {
    std::vector<TableRow> rows;
    LinearFormRST dt1{0, 0, d - 1};
    if (k >= 3) rows.push_back({1, roman(1), 1, k - 2, "x_{i+1}*x_{N+1}^{d-1}", -1, dt1});
    rows.push_back({2, roman(2), k - 1, k - 1, "x_k*x_{N+1}^{d-1}", -1, {1, 1, d - 1}});
    if (k <= N - 1) rows.push_back({3, roman(3), k, N - 1, "x_{i+1}*x_{N+1}^{d-1}", -1, dt1});
    for (int m : ms) {
        std::ostringstream os;
        os << "monomial of Pbar_{i+1} of degree " << m << " in x_k..x_N";
        rows.push_back({4, roman(4), k, N, os.str(), m, {0, m - 1, d - m}});
    }
    rows.push_back({5, roman(5), N, N, "x_1*x_{N+1}^{d-1}", -1, {-1, -1, d - 1}});
    rows.push_back({6, roman(6), N + 1, N + 1, "x_{N+1}^d", -1, dt1});
    return rows;
}

}  // namespace

SymbolicExponentTable symbolic_table(const HenonSpec& spec) {
    std::set<int> ms;
    for (const Poly& p : spec.P)
        for (const auto& [mono, c] : p.terms()) ms.insert(mono.degree());
    return {spec.N, spec.k, spec.d,
            table_rows(spec.N, spec.k, spec.d, std::vector<int>(ms.begin(), ms.end()))};
}

SymbolicExponentTable symbolic_table_generic(int N, int k, int d) {
    if (!(N >= k && k >= 2 && d >= 2))
        throw std::invalid_argument("symbolic_table: need N >= k >= 2 and d >= 2");
    std::vector<int> ms(d + 1);
    std::iota(ms.begin(), ms.end(), 0);
    return {N, k, d, table_rows(N, k, d, ms)};
}

std::pair<int, int> classify_table_row(const HenonSpec& spec, int coord, const Monomial& mono) {
    const int N = spec.N, k = spec.k, d = spec.d;
    if (mono.num_vars() != N + 1) throw std::invalid_argument("classify_table_row: bad monomial");
    if (coord < 1 || coord > N + 1) throw std::invalid_argument("classify_table_row: bad coordinate");
    auto is_single = [&](int var1based) {
        return mono.exp(var1based - 1) == 1 && mono.exp(N) == d - 1 && mono.degree() == d;
    };
    if (coord <= k - 2) {
        if (!is_single(coord + 1)) throw std::invalid_argument("classify_table_row: unexpected monomial");
        return {1, -1};
    }
    if (coord == k - 1) {
        if (!is_single(k)) throw std::invalid_argument("classify_table_row: unexpected monomial");
        return {2, -1};
    }
    if (coord == N + 1) {
        if (mono.exp(N) != d) throw std::invalid_argument("classify_table_row: unexpected monomial");
        return {6, -1};
    }
    // coordinates k..N
    if (coord <= N - 1 && is_single(coord + 1)) return {3, -1};
    if (coord == N && is_single(1)) return {5, -1};
    // a homogenized P monomial: degree m in x_k..x_coord, rest on x_{N+1}
    int m = 0;
    for (int v = 0; v < N; ++v) {
        if (mono.exp(v) == 0) continue;
        if (v < k - 1 || v > coord - 1)
            throw std::invalid_argument("classify_table_row: monomial outside the P block");
        m += mono.exp(v);
    }
    if (mono.exp(N) != d - m) throw std::invalid_argument("classify_table_row: inhomogeneous entry");
    return {4, m};
}

}  // namespace gitstab
