#include "gitstab/ratmap.hpp"

#include <algorithm>
#include <sstream>

#include "linalg.hpp"

namespace gitstab {

ProjMap ProjMap::from_coords(std::vector<Poly> coords) {
    if (coords.size() < 2) throw std::invalid_argument("ProjMap: need at least two coordinates");
    int nv = coords.front().num_vars();
    if (nv != static_cast<int>(coords.size()))
        throw std::invalid_argument("ProjMap: coordinate count must match variable count");
    std::optional<int> deg;
    for (const Poly& p : coords) {
        if (p.num_vars() != nv) throw std::invalid_argument("ProjMap: mixed variable counts");
        if (p.is_zero()) continue;
        if (!p.is_homogeneous()) throw std::invalid_argument("ProjMap: coordinate not homogeneous");
        if (deg && *deg != *p.degree())
            throw std::invalid_argument("ProjMap: coordinates of different degrees");
        deg = *p.degree();
    }
    if (!deg) throw std::invalid_argument("ProjMap: all coordinates are zero");

    // remove the common polynomial factor
    Poly g = gcd_many(coords);
    if (!g.is_constant())
        for (Poly& p : coords) p = *p.divide_exact(g);

    // remove the global scalar: jointly integer-primitive, first nonzero
    // coordinate with positive grlex leading coefficient
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const Poly& p : coords)
        for (const auto& [m, c] : p.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
        }
    Rat content(num_gcd, den_lcm);
    for (const Poly& p : coords)
        if (!p.is_zero()) {
            if (p.leading_coeff().sign() < 0) content = -content;
            break;
        }
    for (Poly& p : coords) p = p.scaled(content.inverse());

    int d = 0;
    for (const Poly& p : coords)
        if (!p.is_zero()) { d = *p.degree(); break; }
    if (d < 1) throw std::invalid_argument("ProjMap: degree must be at least 1");
    return ProjMap(nv - 1, d, std::move(coords));
}

ProjMap compose_maps(const ProjMap& g, const ProjMap& f) {
    if (g.dim() != f.dim()) throw std::invalid_argument("compose_maps: dimension mismatch");
    std::vector<Poly> coords;
    for (const Poly& p : g.coords()) coords.push_back(p.compose(f.coords()));
    bool all_zero = std::all_of(coords.begin(), coords.end(),
                                [](const Poly& p) { return p.is_zero(); });
    if (all_zero) throw std::domain_error("compose_maps: composition is identically zero");
    return ProjMap::from_coords(std::move(coords));
}

ProjMap linear_conjugate(const ProjMap& f, const std::vector<std::vector<Rat>>& a) {
    size_t n = static_cast<size_t>(f.dim()) + 1;
    if (a.size() != n) throw std::invalid_argument("linear_conjugate: matrix size mismatch");
    linalg::Matrix ainv = linalg::inverse(a);
    auto linear_polys = [&](const linalg::Matrix& m) {
        std::vector<Poly> ps;
        for (size_t i = 0; i < n; ++i) {
            Poly p = Poly::zero(static_cast<int>(n));
            for (size_t j = 0; j < n; ++j)
                p += Poly::variable(static_cast<int>(n), static_cast<int>(j)).scaled(m[i][j]);
            ps.push_back(std::move(p));
        }
        return ps;
    };
    std::vector<Poly> ainv_polys = linear_polys(ainv);
    std::vector<Poly> coords;
    for (size_t i = 0; i < n; ++i) {
        // row i of A applied to F, then precomposed with A^{-1}
        Poly p = Poly::zero(static_cast<int>(n));
        for (size_t j = 0; j < n; ++j) p += f.coords()[j].scaled(a[i][j]);
        coords.push_back(p.compose(ainv_polys));
    }
    return ProjMap::from_coords(std::move(coords));
}

std::vector<int> iterate_degrees(const ProjMap& m, int n) {
    if (n < 1) throw std::invalid_argument("iterate_degrees: need n >= 1");
    std::vector<int> degs;
    ProjMap it = m;
    degs.push_back(it.degree());
    for (int i = 1; i < n; ++i) {
        it = compose_maps(m, it);
        degs.push_back(it.degree());
    }
    return degs;
}

bool is_algebraically_stable_upto(const ProjMap& m, int n) {
    std::vector<int> degs = iterate_degrees(m, n);
    long long expect = 1;
    for (int i = 0; i < n; ++i) {
        expect *= m.degree();
        if (degs[i] != expect) return false;
    }
    return true;
}

bool is_dominant(const ProjMap& m) {
    return !Poly::det(jacobian(m.coords())).is_zero();
}

P2Solutions common_zeros_p2(const ProjMap& m) {
    if (m.dim() != 2) throw std::invalid_argument("common_zeros_p2: map is not a self-map of P^2");
    return solve_p2_system(m.coords());
}

bool is_morphism_p2(const ProjMap& m) {
    P2Solutions sols = common_zeros_p2(m);
    if (!sols.points.empty()) return false;
    for (const P2Residual& r : sols.residual)
        if (r.dimension >= 1) return false;  // positive-dimensional: certainly nonempty
    if (!sols.residual.empty()) {
        std::ostringstream os;
        os << "is_morphism_p2: undecided over Q; unverified candidate content:";
        for (const P2Residual& r : sols.residual) {
            os << " [chart " << r.chart << ":";
            for (const Poly& e : r.eliminants) os << " " << e.str({"x", "y", "z"});
            os << "]";
        }
        throw UndecidedOverQ(os.str());
    }
    return true;
}

std::vector<Rat> normalize_point(std::vector<Rat> p) {
    for (const Rat& c : p)
        if (!c.is_zero()) {
            Rat inv = c.inverse();
            for (Rat& x : p) x *= inv;
            return p;
        }
    throw std::invalid_argument("normalize_point: zero tuple");
}

LineP2 LineP2::make(const Rat& u, const Rat& v, const Rat& w) {
    std::vector<Rat> c = normalize_point({u, v, w});
    return LineP2{{c[0], c[1], c[2]}};
}

Poly LineP2::equation() const {
    Poly p = Poly::zero(3);
    for (int i = 0; i < 3; ++i) p += Poly::variable(3, i).scaled(coeffs[i]);
    return p;
}

std::string curve_kind_name(CurveKind k) {
    switch (k) {
        case CurveKind::point: return "point";
        case CurveKind::line: return "line";
        case CurveKind::irreducible_conic: return "irreducible-conic";
        case CurveKind::reducible_or_degenerate: return "reducible-or-degenerate";
    }
    throw std::logic_error("curve_kind_name: bad kind");
}

namespace {

// Two independent points spanning the line u*x + v*y + w*z = 0.
std::pair<std::array<Rat, 3>, std::array<Rat, 3>> span_of_line(const LineP2& line) {
    const Rat& u = line.coeffs[0];
    const Rat& v = line.coeffs[1];
    const Rat& w = line.coeffs[2];
    if (!u.is_zero()) return {{-v / u, Rat(1), Rat(0)}, {-w / u, Rat(0), Rat(1)}};
    if (!v.is_zero()) return {{Rat(1), Rat(0), Rat(0)}, {Rat(0), -w / v, Rat(1)}};
    return {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}};
}

// Coefficient triple (s^2, s*t, t^2) of a binary quadratic in variables (s, t).
std::array<Rat, 3> quadratic_coeffs(const Poly& q) {
    return {q.coeff(Monomial({2, 0})), q.coeff(Monomial({1, 1})), q.coeff(Monomial({0, 2}))};
}

// Sylvester resultant of two binary quadratic forms whose coefficients are
// polynomials; forms are given by coefficient triples (s^2, s*t, t^2).
Poly binary_form_resultant(const std::array<Poly, 3>& a, const std::array<Poly, 3>& b) {
    int nv = a[0].num_vars();
    Poly z = Poly::zero(nv);
    std::vector<std::vector<Poly>> m = {
        {a[0], a[1], a[2], z},
        {z, a[0], a[1], a[2]},
        {b[0], b[1], b[2], z},
        {z, b[0], b[1], b[2]},
    };
    return Poly::det(m);
}

}  // namespace

PlaneCurveImage line_image(const ProjMap& m, const LineP2& line) {
    if (m.dim() != 2 || m.degree() != 2)
        throw std::invalid_argument("line_image: need a quadratic self-map of P^2");
    if (!is_dominant(m)) throw std::invalid_argument("line_image: map must be dominant");

    auto [pa, pb] = span_of_line(line);
    // parametrize: (s, t) -> s*A + t*B, then push through the map
    std::vector<Poly> param;
    for (int i = 0; i < 3; ++i)
        param.push_back(Poly::variable(2, 0).scaled(pa[i]) + Poly::variable(2, 1).scaled(pb[i]));
    std::vector<Poly> q;
    for (const Poly& c : m.coords()) q.push_back(c.compose(param));

    Poly g = gcd_many(q);
    if (g.is_zero()) throw std::logic_error("line_image: map vanished on the line");
    if (!g.is_constant())
        for (Poly& f : q) f = *f.divide_exact(g);

    int d = 0;
    for (const Poly& f : q)
        if (!f.is_zero()) d = std::max(d, *f.degree());

    if (d == 0) {
        std::vector<Rat> pt = normalize_point(
            {q[0].constant_coeff(), q[1].constant_coeff(), q[2].constant_coeff()});
        return {CurveKind::point, pt, Poly::zero(3)};
    }

    if (d == 1) {
        // line through the images of (1:0) and (0:1)
        std::vector<Rat> p1, p2;
        for (const Poly& f : q) {
            p1.push_back(f.evaluate({Rat(1), Rat(0)}));
            p2.push_back(f.evaluate({Rat(0), Rat(1)}));
        }
        std::array<Rat, 3> cross = {p1[1] * p2[2] - p1[2] * p2[1],
                                    p1[2] * p2[0] - p1[0] * p2[2],
                                    p1[0] * p2[1] - p1[1] * p2[0]};
        LineP2 l = LineP2::make(cross[0], cross[1], cross[2]);
        return {CurveKind::line, {}, l.equation().normalized_primitive()};
    }

    // degree 2: if the three forms are linearly dependent the image is a line
    std::array<std::array<Rat, 3>, 3> qc;
    for (int i = 0; i < 3; ++i) qc[i] = quadratic_coeffs(q[i]);
    {
        // left kernel of the 3x3 coefficient matrix = linear relation among forms
        linalg::Matrix mt(3, std::vector<Rat>(3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) mt[i][j] = qc[j][i];  // transpose
        if (linalg::rank(mt) <= 2) {
            for (int free = 2; free >= 0; --free) {
                // try relation with coefficient 1 on position `free`
                linalg::Matrix a(3, std::vector<Rat>(2));
                std::vector<Rat> rhs(3);
                int cols[2], ci = 0;
                for (int j = 0; j < 3; ++j)
                    if (j != free) cols[ci++] = j;
                for (int i = 0; i < 3; ++i) {
                    a[i][0] = qc[cols[0]][i];
                    a[i][1] = qc[cols[1]][i];
                    rhs[i] = -qc[free][i];
                }
                auto sol = linalg::solve(a, rhs);
                if (!sol) continue;
                std::array<Rat, 3> rel;
                rel[free] = Rat(1);
                rel[cols[0]] = (*sol)[0];
                rel[cols[1]] = (*sol)[1];
                LineP2 l = LineP2::make(rel[0], rel[1], rel[2]);
                return {CurveKind::line, {}, l.equation().normalized_primitive()};
            }
            throw std::logic_error("line_image: dependent forms without a relation");
        }
    }

    // implicitize: resultants of the pencils x*q_j - y*q_i; each has an
    // extraneous factor concentrated over the roots of the pivot form, so the
    // gcd of the three choices of pivot is the conic itself
    auto lift = [](const std::array<Rat, 3>& c) {
        std::array<Poly, 3> out = {Poly::constant(3, c[0]), Poly::constant(3, c[1]),
                                   Poly::constant(3, c[2])};
        return out;
    };
    std::array<Poly, 3> xyz = {Poly::variable(3, 0), Poly::variable(3, 1), Poly::variable(3, 2)};
    auto pencil = [&](int i, int j) {
        // xyz[j] * q_i - xyz[i] * q_j as a coefficient triple of polynomials
        std::array<Poly, 3> qi = lift(qc[i]), qj = lift(qc[j]), out = qi;
        for (int k = 0; k < 3; ++k) out[k] = xyz[j] * qi[k] - xyz[i] * qj[k];
        return out;
    };
    Poly r1 = binary_form_resultant(pencil(0, 1), pencil(0, 2));
    Poly r2 = binary_form_resultant(pencil(1, 0), pencil(1, 2));
    Poly r3 = binary_form_resultant(pencil(2, 0), pencil(2, 1));
    Poly conic = Poly::gcd(Poly::gcd(r1, r2), r3);
    if (!conic.degree() || *conic.degree() != 2)
        throw std::logic_error("line_image: implicitization did not produce a conic");
    // exact check: the conic vanishes on the parametrized image
    if (!conic.compose({q[0], q[1], q[2]}).is_zero())
        throw std::logic_error("line_image: implicit conic fails on the parametrization");
    conic = conic.normalized_primitive();

    // irreducible iff the symmetric matrix (doubled to stay integral) is nonsingular
    Rat A = conic.coeff(Monomial({2, 0, 0})), B = conic.coeff(Monomial({0, 2, 0})),
        C = conic.coeff(Monomial({0, 0, 2})), D = conic.coeff(Monomial({1, 1, 0})),
        E = conic.coeff(Monomial({0, 1, 1})), F = conic.coeff(Monomial({1, 0, 1}));
    linalg::Matrix sym = {{A + A, D, F}, {D, B + B, E}, {F, E, C + C}};
    CurveKind kind = linalg::rank(sym) == 3 ? CurveKind::irreducible_conic
                                            : CurveKind::reducible_or_degenerate;
    return {kind, {}, conic};
}

}  // namespace gitstab
