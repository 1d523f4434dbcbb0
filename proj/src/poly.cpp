#include "gitstab/poly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gitstab {

namespace {

void require_same_ring(const Poly& a, const Poly& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("Poly: mismatched variable counts");
}

}  // namespace

Poly Poly::zero(int num_vars) {
    if (num_vars <= 0) throw std::invalid_argument("Poly: need at least one variable");
    return Poly(num_vars);
}

Poly Poly::constant(int num_vars, const Rat& c) {
    Poly p = zero(num_vars);
    if (!c.is_zero()) p.terms_.emplace(Monomial(num_vars), c);
    return p;
}

Poly Poly::variable(int num_vars, int var) {
    Poly p = zero(num_vars);
    p.terms_.emplace(Monomial(num_vars).with_exp(var, 1), Rat(1));
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
    Poly p = zero(m.num_vars());
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

std::optional<int> Poly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();  // grlex leader has maximal degree
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exp(var));
    return d;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool Poly::uses_var(int var) const {
    for (const auto& [m, c] : terms_)
        if (m.exp(var) > 0) return true;
    return false;
}

int Poly::max_used_var() const {
    int v = -1;
    for (const auto& [m, c] : terms_)
        for (int i = num_vars_ - 1; i > v; --i)
            if (m.exp(i) > 0) { v = i; break; }
    return v;
}

Rat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_coeff() const { return coeff(Monomial(num_vars_)); }

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("Poly: zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

Rat Poly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("Poly: zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly p(num_vars_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_ring(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    Poly p = Poly::zero(a.num_vars());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) p.add_term(ma.times(mb), ca * cb);
    return p;
}

Poly Poly::scaled(const Rat& c) const {
    Poly p(num_vars_);
    if (c.is_zero()) return p;
    for (const auto& [m, k] : terms_) p.terms_.emplace(m, k * c);
    return p;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly: negative power");
    Poly r = one(num_vars_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

Poly Poly::derivative(int var) const {
    Poly p(num_vars_);
    for (const auto& [m, c] : terms_) {
        int e = m.exp(var);
        if (e > 0) p.add_term(m.with_exp(var, e - 1), c * Rat(e));
    }
    return p;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != num_vars_)
        throw std::invalid_argument("Poly: evaluation point has wrong dimension");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int v = 0; v < num_vars_; ++v)
            for (int i = 0; i < m.exp(v); ++i) t *= point[v];
        acc += t;
    }
    return acc;
}

Poly Poly::substitute(int var, const Rat& value) const {
    Poly p(num_vars_);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (int i = 0; i < m.exp(var); ++i) t *= value;
        p.add_term(m.with_exp(var, 0), t);
    }
    return p;
}

Poly Poly::compose(const std::vector<Poly>& subs) const {
    if (static_cast<int>(subs.size()) != num_vars_)
        throw std::invalid_argument("Poly: compose arity mismatch");
    for (const Poly& s : subs)
        if (s.num_vars() != subs.front().num_vars())
            throw std::invalid_argument("Poly: compose substitutions in different rings");
    int target_vars = subs.front().num_vars();
    // power cache per variable
    std::vector<std::vector<Poly>> powers(num_vars_, std::vector<Poly>{Poly::one(target_vars)});
    auto power = [&](int v, int e) -> const Poly& {
        auto& cache = powers[v];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * subs[v]);
        return cache[e];
    };
    Poly acc = Poly::zero(target_vars);
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(target_vars, c);
        for (int v = 0; v < num_vars_; ++v)
            if (m.exp(v) > 0) t *= power(v, m.exp(v));
        acc += t;
    }
    return acc;
}

Poly Poly::homogenize(int target_deg) const {
    if (degree() && *degree() > target_deg)
        throw std::invalid_argument("Poly: homogenization degree below polynomial degree");
    Poly p(num_vars_ + 1);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e = m.exps();
        e.push_back(target_deg - m.degree());
        p.terms_.emplace(Monomial(std::move(e)), c);
    }
    return p;
}

Poly Poly::dehomogenize() const {
    if (num_vars_ < 2) throw std::invalid_argument("Poly: cannot dehomogenize a univariate ring");
    if (!is_homogeneous()) throw std::invalid_argument("Poly: dehomogenize needs a homogeneous polynomial");
    Poly p(num_vars_ - 1);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(m.exps().begin(), m.exps().end() - 1);
        p.add_term(Monomial(std::move(e)), c);
    }
    return p;
}

std::vector<Poly> Poly::coeffs_in(int var) const {
    std::vector<Poly> cs(degree_in(var) + 1, Poly::zero(num_vars_));
    for (const auto& [m, c] : terms_) cs[m.exp(var)].add_term(m.with_exp(var, 0), c);
    return cs;
}

Poly Poly::from_coeffs_in(int var, int num_vars, const std::vector<Poly>& cs) {
    Poly p = Poly::zero(num_vars);
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        for (const auto& [m, c] : cs[i].terms_) {
            if (m.exp(var) != 0) throw std::invalid_argument("Poly: coefficient uses the view variable");
            p.add_term(m.with_exp(var, static_cast<int>(i)), c);
        }
    }
    return p;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
    require_same_ring(*this, divisor);
    if (divisor.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    Poly q = Poly::zero(num_vars_);
    Poly r = *this;
    const Monomial& dm = divisor.leading_monomial();
    const Rat dc = divisor.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& rm = r.leading_monomial();
        if (!dm.divides(rm)) return std::nullopt;
        Poly t = Poly::monomial(dm.divide_into(rm), r.leading_coeff() / dc);
        q += t;
        r -= t * divisor;
    }
    return q;
}

std::pair<Rat, Poly> Poly::rational_content() const {
    if (is_zero()) return {Rat(0), *this};
    // content = gcd(numerators) / lcm(denominators), signed by the leading coeff
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    if (leading_coeff().sign() < 0) content = -content;
    Poly prim = scaled(content.inverse());
    return {content, prim};
}

Poly Poly::normalized_primitive() const {
    if (is_zero()) return *this;
    return rational_content().second;
}

namespace {

// lc(B)^(deg A - deg B + 1) * A = Q*B + R in the view variable; returns R.
Poly pseudo_rem(const Poly& A, const Poly& B, int var) {
    int db = B.degree_in(var);
    std::vector<Poly> bc = B.coeffs_in(var);
    const Poly& lb = bc[db];
    Poly r = A;
    int steps_needed = A.degree_in(var) - db + 1;
    int steps = 0;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        int dr = r.degree_in(var);
        Poly lr = r.coeffs_in(var)[dr];
        Poly shift = Poly::variable(r.num_vars(), var).pow(dr - db);
        r = lb * r - lr * shift * B;
        ++steps;
    }
    for (; steps < steps_needed; ++steps) r = lb * r;
    return r;
}

Poly divide_exact_or_throw(const Poly& a, const Poly& b) {
    auto q = a.divide_exact(b);
    if (!q) throw std::logic_error("Poly: expected exact division failed");
    return *q;
}

// Content of p viewed in `var`: gcd of the coefficient polynomials.
Poly content_wrt(const Poly& p, int var) {
    std::vector<Poly> cs = p.coeffs_in(var);
    Poly g = Poly::zero(p.num_vars());
    for (const Poly& c : cs)
        if (!c.is_zero()) g = Poly::gcd(g, c);
    return g;
}

// Subresultant PRS on primitive inputs; returns a gcd up to content in `var`.
Poly prs_gcd(Poly A, Poly B, int var) {
    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);
    Poly g = Poly::one(A.num_vars());
    Poly h = g;
    while (true) {
        int delta = A.degree_in(var) - B.degree_in(var);
        Poly R = pseudo_rem(A, B, var);
        if (R.is_zero()) {
            Poly cont = content_wrt(B, var);
            return divide_exact_or_throw(B, cont);
        }
        if (R.degree_in(var) == 0) return Poly::one(A.num_vars());
        A = B;
        B = divide_exact_or_throw(R, g * h.pow(delta));
        g = A.coeffs_in(var)[A.degree_in(var)];
        if (delta > 0) h = divide_exact_or_throw(g.pow(delta), h.pow(delta - 1));
    }
}

// Euclid on univariate coefficient vectors (constant term first); true iff
// the gcd is a nonzero constant.
bool univariate_gcd_is_constant(std::vector<Rat> a, std::vector<Rat> b) {
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return false;
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            Rat f = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a.size() == 1;
}

// Exact fast path: certifies gcd(a, b) constant by specializing every
// variable direction at deterministic points. If for each variable v some
// specialization keeps the leading coefficient in v alive and yields a
// constant univariate gcd, the true gcd has degree 0 in every variable.
// Returning false only means "not certified".
bool certify_coprime(const Poly& a, const Poly& b) {
    int nv = a.num_vars();
    for (int v = 0; v < nv; ++v) {
        const Poly* lead = nullptr;
        if (a.uses_var(v)) lead = &a;
        else if (b.uses_var(v)) lead = &b;
        else continue;  // no variable content to rule out
        const Poly& other = (lead == &a) ? b : a;
        bool certified = false;
        for (unsigned attempt = 0; attempt < 3 && !certified; ++attempt) {
            Poly pa = *lead, pb = other;
            unsigned long long state = 0x9E3779B97F4A7C15ull + attempt * 0xBF58476D1CE4E5B9ull;
            for (int u = 0; u < nv; ++u) {
                if (u == v) continue;
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                Rat value(static_cast<long long>(2 + (state >> 33) % 37));
                pa = pa.substitute(u, value);
                pb = pb.substitute(u, value);
            }
            if (pa.degree_in(v) != lead->degree_in(v)) continue;  // leading coeff vanished
            if (pb.is_zero()) continue;
            auto onevar = [&](const Poly& p) {
                std::vector<Rat> cs;
                for (const Poly& c : p.coeffs_in(v)) cs.push_back(c.constant_coeff());
                return cs;
            };
            certified = univariate_gcd_is_constant(onevar(pa), onevar(pb));
        }
        if (!certified) return false;
    }
    return true;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    require_same_ring(a, b);
    if (a.is_zero()) return b.normalized_primitive();
    if (b.is_zero()) return a.normalized_primitive();
    if (a.is_constant() || b.is_constant()) return Poly::one(a.num_vars());
    if (certify_coprime(a, b)) return Poly::one(a.num_vars());
    int var = std::max(a.max_used_var(), b.max_used_var());
    if (!a.uses_var(var)) return gcd(a, content_wrt(b, var));
    if (!b.uses_var(var)) return gcd(content_wrt(a, var), b);
    Poly ca = content_wrt(a, var);
    Poly cb = content_wrt(b, var);
    Poly pa = divide_exact_or_throw(a, ca);
    Poly pb = divide_exact_or_throw(b, cb);
    Poly cont = gcd(ca, cb);
    Poly part = prs_gcd(pa, pb, var);
    return (cont * part).normalized_primitive();
}

Poly gcd_many(const std::vector<Poly>& ps) {
    if (ps.empty()) throw std::invalid_argument("gcd_many: empty input");
    Poly g = Poly::zero(ps.front().num_vars());
    for (const Poly& p : ps) g = Poly::gcd(g, p);
    return g;
}

Poly Poly::det(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("det: empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");
    if (n > 20) throw std::invalid_argument("det: matrix too large");
    int nv = m[0][0].num_vars();
    // minors[mask] = det of rows 0..popcount-1, columns in mask
    std::map<unsigned, Poly> cur;
    cur.emplace(0u, Poly::one(nv));
    for (size_t row = 0; row < n; ++row) {
        std::map<unsigned, Poly> next;
        for (const auto& [mask, minor] : cur) {
            if (minor.is_zero()) continue;
            int sign = 1;
            for (size_t col = 0; col < n; ++col) {
                unsigned bit = 1u << col;
                if (mask & bit) continue;
                if (!m[row][col].is_zero()) {
                    Poly contrib = m[row][col] * minor;
                    if (sign < 0) contrib = -contrib;
                    auto [it, inserted] = next.emplace(mask | bit, contrib);
                    if (!inserted) it->second += contrib;
                }
                sign = -sign;
            }
        }
        cur = std::move(next);
        if (cur.empty()) return Poly::zero(nv);
    }
    unsigned full = (n == 32) ? ~0u : ((1u << n) - 1u);
    auto it = cur.find(full);
    return it == cur.end() ? Poly::zero(nv) : it->second;
}

Poly Poly::resultant(const Poly& f, const Poly& g, int var) {
    require_same_ring(f, g);
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("resultant: both arguments zero");
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.num_vars());
    int m = f.degree_in(var), n = g.degree_in(var);
    if (m == 0 && n == 0) return Poly::one(f.num_vars());
    // Res(f, g) = f^n when f is free of the variable (and symmetrically).
    if (m == 0) return f.pow(n);
    if (n == 0) return g.pow(m);
    std::vector<Poly> fc = f.coeffs_in(var);
    std::vector<Poly> gc = g.coeffs_in(var);
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size, Poly::zero(f.num_vars())));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[row][row + j] = fc[m - j];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s[n + row][row + j] = gc[n - j];
    return det(s);
}

std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& coords) {
    if (coords.empty()) throw std::invalid_argument("jacobian: no coordinates");
    int nv = coords.front().num_vars();
    std::vector<std::vector<Poly>> j;
    for (const Poly& p : coords) {
        if (p.num_vars() != nv) throw std::invalid_argument("jacobian: mismatched variable counts");
        std::vector<Poly> row;
        for (int v = 0; v < nv; ++v) row.push_back(p.derivative(v));
        j.push_back(std::move(row));
    }
    return j;
}

namespace {

std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
    mpz_class n = ::abs(n_in);
    if (n == 0) throw std::logic_error("divisors_of: zero");
    std::vector<mpz_class> small, large;
    mpz_class i = 1;
    long steps = 0;
    for (; i * i <= n; ++i) {
        if (++steps > 4000000)
            throw std::runtime_error("rational_roots: coefficients too large for divisor enumeration");
        if (n % i == 0) {
            small.push_back(i);
            if (i * i != n) large.push_back(n / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

RationalRoots rational_roots(const Poly& p_in) {
    if (p_in.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    int var = p_in.max_used_var();
    if (var < 0) {
        // nonzero constant: no roots
        return {{}, Poly::one(p_in.num_vars()), 0};
    }
    for (int v = 0; v < p_in.num_vars(); ++v)
        if (v != var && p_in.uses_var(v))
            throw std::invalid_argument("rational_roots: polynomial is not univariate");

    Poly p = p_in.normalized_primitive();
    RationalRoots out{{}, p, 0};

    // factor out powers of the variable -> root 0
    int zero_mult = 0;
    Poly x = Poly::variable(p.num_vars(), var);
    while (p.constant_coeff().is_zero() && !p.is_constant()) {
        p = divide_exact_or_throw(p, x);
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.push_back({Rat(0), zero_mult});

    if (!p.is_constant()) {
        int d = p.degree_in(var);
        mpz_class a0 = p.constant_coeff().num();  // primitive => integer coefficients
        mpz_class am = p.coeffs_in(var)[d].constant_coeff().num();
        std::set<Rat> candidates;
        for (const mpz_class& pn : divisors_of(a0))
            for (const mpz_class& qd : divisors_of(am)) {
                candidates.insert(Rat(pn, qd));
                candidates.insert(Rat(-pn, qd));
            }
        for (const Rat& r : candidates) {
            int mult = 0;
            Poly lin = x - Poly::constant(p.num_vars(), r);
            while (!p.is_constant()) {
                std::vector<Rat> pt(p.num_vars(), Rat(0));
                pt[var] = r;
                if (!p.evaluate(pt).is_zero()) break;
                p = divide_exact_or_throw(p, lin);
                ++mult;
            }
            if (mult > 0) out.roots.push_back({r, mult});
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.cofactor = p.normalized_primitive();
    out.cofactor_degree = out.cofactor.degree_in(var);
    return out;
}

std::string Poly::str(const std::vector<std::string>& var_names) const {
    if (static_cast<int>(var_names.size()) != num_vars_)
        throw std::invalid_argument("Poly: wrong number of variable names");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_vars = m.degree() > 0;
        if (!a.is_one() || !has_vars) {
            os << a.str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (int v = 0; v < num_vars_; ++v) {
            int e = m.exp(v);
            if (e == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << var_names[v];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace gitstab
