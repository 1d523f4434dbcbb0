#include "gitstab/classify2.hpp"

#include <algorithm>
#include <sstream>

#include "linalg.hpp"

namespace gitstab {

std::string branch_name(Branch22 b) {
    switch (b) {
        case Branch22::fibered: return "fibered";
        case Branch22::degree_drop: return "degree-drop";
        case Branch22::both: return "both";
        case Branch22::neither: return "neither";
    }
    throw std::logic_error("branch_name: bad branch");
}

std::string semistable_name(Semistable22 s) {
    return s == Semistable22::semistable ? "semistable" : "unknown";
}

namespace {

void require_quadratic_p2(const ProjMap& f, const char* who) {
    if (f.dim() != 2 || f.degree() != 2) {
        std::ostringstream os;
        os << who << ": need a quadratic self-map of P^2 (got N=" << f.dim()
           << ", d=" << f.degree() << ")";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

CenterSearch fibering_centers(const ProjMap& f) {
    require_quadratic_p2(f, "fibering_centers");
    if (!is_dominant(f)) throw std::invalid_argument("fibering_centers: map must be dominant");
    std::vector<std::vector<Poly>> grad = jacobian(f.coords());
    std::vector<Poly> system;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int c = 0; c < 3; ++c) {
                Poly e = Poly::variable(3, j) * grad[i][c] - Poly::variable(3, i) * grad[j][c];
                if (!e.is_zero()) system.push_back(std::move(e));
            }
    if (system.empty()) throw std::logic_error("fibering_centers: empty center system");
    P2Solutions sols = solve_p2_system(system);
    CenterSearch out;
    for (const auto& p : sols.points) {
        // every rational center must admit an actual witness
        if (!check_fibering(f, p))
            throw std::logic_error("fibering_centers: center candidate without a witness");
        out.rational_centers.push_back(p);
    }
    out.residual = std::move(sols.residual);
    return out;
}

std::optional<FiberingWitness> check_fibering(const ProjMap& f, const std::array<Rat, 3>& p_in) {
    require_quadratic_p2(f, "check_fibering");
    if (p_in[0].is_zero() && p_in[1].is_zero() && p_in[2].is_zero())
        throw std::invalid_argument("check_fibering: zero point");
    std::vector<Rat> p = normalize_point({p_in[0], p_in[1], p_in[2]});

    // basis of the linear forms vanishing at p: for each index other than the
    // pivot e (first nonzero entry), L_j = x_j - p_j * x_e
    int e = 0;
    while (p[e].is_zero()) ++e;
    std::vector<Poly> ls;
    std::array<std::array<Rat, 3>, 2> pi_rows;
    int row = 0;
    for (int j = 0; j < 3; ++j) {
        if (j == e) continue;
        Poly l = Poly::variable(3, j) - Poly::variable(3, e).scaled(p[j]);
        pi_rows[row][0] = l.coeff(Monomial({1, 0, 0}));
        pi_rows[row][1] = l.coeff(Monomial({0, 1, 0}));
        pi_rows[row][2] = l.coeff(Monomial({0, 0, 1}));
        ls.push_back(std::move(l));
        ++row;
    }

    // express L_i o F in the basis {L1^2, L1*L2, L2^2}
    std::array<Poly, 3> basis = {ls[0] * ls[0], ls[0] * ls[1], ls[1] * ls[1]};
    auto quad_coords = [](const Poly& q) {
        static const std::array<Monomial, 6> monos = {
            Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({1, 0, 1}),
            Monomial({0, 2, 0}), Monomial({0, 1, 1}), Monomial({0, 0, 2})};
        std::vector<Rat> v;
        for (const Monomial& m : monos) v.push_back(q.coeff(m));
        return v;
    };
    linalg::Matrix a(6, std::vector<Rat>(3));
    for (int col = 0; col < 3; ++col) {
        std::vector<Rat> bc = quad_coords(basis[col]);
        for (int r = 0; r < 6; ++r) a[r][col] = bc[r];
    }
    std::array<Poly, 2> g = {Poly::zero(2), Poly::zero(2)};
    for (int i = 0; i < 2; ++i) {
        Poly lof = ls[i].compose(f.coords());
        auto sol = linalg::solve(a, quad_coords(lof));
        if (!sol) return std::nullopt;  // not in I(p)^2: p is not a center
        g[i] = Poly::monomial(Monomial({2, 0}), (*sol)[0]) +
               Poly::monomial(Monomial({1, 1}), (*sol)[1]) +
               Poly::monomial(Monomial({0, 2}), (*sol)[2]);
        // paranoia: the expression must reproduce L_i o F exactly
        if (g[i].compose({ls[0], ls[1]}) != lof)
            throw std::logic_error("check_fibering: inconsistent linear solve");
    }
    bool degenerate = !Poly::gcd(g[0], g[1]).is_constant();
    return FiberingWitness{{p[0], p[1], p[2]}, pi_rows, g, degenerate};
}

std::pair<int, bool> degree_drop_22(const ProjMap& f) {
    require_quadratic_p2(f, "degree_drop_22");
    ProjMap f2 = compose_maps(f, f);
    return {f2.degree(), f2.degree() <= 2};
}

Rat22Verdict rat22_verdict(const ProjMap& f) {
    require_quadratic_p2(f, "rat22_verdict");
    if (!is_dominant(f))
        throw std::invalid_argument("rat22_verdict: the classification needs a dominant map");
    CenterSearch centers = fibering_centers(f);
    std::optional<FiberingWitness> witness;
    for (const auto& p : centers.rational_centers) {
        witness = check_fibering(f, p);
        if (witness) break;
    }
    auto [deg2, drop] = degree_drop_22(f);
    bool fibered = witness.has_value();
    Branch22 branch = fibered && drop ? Branch22::both
                     : fibered        ? Branch22::fibered
                     : drop           ? Branch22::degree_drop
                                      : Branch22::neither;
    Semistable22 conclusion =
        (branch == Branch22::neither && centers.residual.empty()) ? Semistable22::semistable
                                                                  : Semistable22::unknown;
    return Rat22Verdict{branch,   conclusion, std::move(witness),
                        centers,  deg2,       {f.degree(), deg2}};
}

namespace {

std::string point_str(const std::vector<Rat>& p) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? ":" : "") << p[i].str();
    os << "]";
    return os.str();
}

const std::vector<std::string> kXYZ = {"x", "y", "z"};

}  // namespace

LineAuditReport henon_line_audit(const HenonSpec& spec, unsigned long long seed, int per_class) {
    if (spec.N != 2 || spec.k != 2)
        throw std::invalid_argument("henon_line_audit: need a classic Henon spec (N = k = 2)");
    if (!spec.P[0].degree() || *spec.P[0].degree() != 2)
        throw std::invalid_argument("henon_line_audit: need deg P = 2");
    if (per_class < 1) throw std::invalid_argument("henon_line_audit: need per_class >= 1");
    ProjMap f = homogenize_map(spec);
    const Rat& a = spec.b[1];  // the map is (a*y, b*x + P(y)) with a = b_2

    LineAuditReport report{seed, per_class, {}, true};
    std::mt19937_64 rng(seed);
    auto push = [&](const std::string& cls, const LineP2& line, const std::string& expected,
                    const std::string& got, bool ok) {
        report.checks.push_back({cls, line.equation().str(kXYZ), expected, got, ok});
        report.all_ok = report.all_ok && ok;
    };
    auto describe = [&](const PlaneCurveImage& img) {
        if (img.kind == CurveKind::point) return curve_kind_name(img.kind) + " " + point_str(img.point);
        return curve_kind_name(img.kind) + " {" + img.equation.str(kXYZ) + " = 0}";
    };

    {  // the line at infinity collapses to [0:1:0]
        LineP2 line = LineP2::make(Rat(0), Rat(0), Rat(1));
        PlaneCurveImage img = line_image(f, line);
        bool ok = img.kind == CurveKind::point &&
                  img.point == std::vector<Rat>{Rat(0), Rat(1), Rat(0)};
        push("z=0", line, "point [0:1:0]", describe(img), ok);
    }
    for (int i = 0; i < per_class; ++i) {  // horizontal lines
        Rat b_val(rand_range(rng, -9, 9), rand_range(rng, 1, 4));
        LineP2 line = LineP2::make(Rat(0), Rat(1), -b_val);
        Poly expect = Poly::variable(3, 0) - Poly::variable(3, 2).scaled(a * b_val);
        expect = expect.normalized_primitive();
        PlaneCurveImage img = line_image(f, line);
        bool ok = img.kind == CurveKind::line && img.equation == expect;
        push("y=B*z", line, "line {" + expect.str(kXYZ) + " = 0}", describe(img), ok);
    }
    for (int i = 0; i < per_class; ++i) {  // non-horizontal affine lines x = l*y + m
        Rat l(rand_range(rng, -9, 9), rand_range(rng, 1, 4));
        Rat mc(rand_range(rng, -9, 9), rand_range(rng, 1, 4));
        LineP2 line = LineP2::make(Rat(1), -l, -mc);
        PlaneCurveImage img = line_image(f, line);
        bool ok = img.kind == CurveKind::irreducible_conic;
        push("non-horizontal", line, "irreducible conic", describe(img), ok);
    }
    return report;
}

}  // namespace gitstab
