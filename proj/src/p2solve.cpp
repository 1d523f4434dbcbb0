#include "gitstab/p2solve.hpp"

#include <algorithm>
#include <stdexcept>

namespace gitstab {

namespace {

struct AffineOut {
    std::vector<std::array<Rat, 2>> pts;   // values of the two chart variables
    std::vector<P2Residual> residual;      // chart tag filled by the caller
};

void merge(AffineOut& into, AffineOut&& from) {
    for (auto& p : from.pts)
        if (std::find(into.pts.begin(), into.pts.end(), p) == into.pts.end())
            into.pts.push_back(p);
    for (auto& r : from.residual) into.residual.push_back(std::move(r));
}

std::vector<Poly> cleaned(const std::vector<Poly>& in) {
    std::vector<Poly> out;
    for (const Poly& p : in) {
        if (p.is_zero()) continue;
        Poly q = p.normalized_primitive();
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
    }
    return out;
}

// Common zeros of polynomials using only the chart variables va, vb.
AffineOut solve_affine(std::vector<Poly> s, int va, int vb, int depth) {
    if (depth > 64) throw std::runtime_error("solve_affine: branching depth exceeded");
    AffineOut out;
    s = cleaned(s);
    if (s.empty()) {
        out.residual.push_back({"", {}, 2});
        return out;
    }
    for (const Poly& p : s)
        if (p.is_constant()) return out;  // nonzero constant: empty
    if (s.size() == 1) {
        out.residual.push_back({"", {s[0]}, 1});
        return out;
    }

    // factor out a common divisor of the whole system
    Poly g = gcd_many(s);
    if (!g.is_constant()) {
        out.residual.push_back({"", {g}, 1});
        std::vector<Poly> quot;
        for (const Poly& p : s) quot.push_back(*p.divide_exact(g));
        merge(out, solve_affine(quot, va, vb, depth + 1));
        return out;
    }

    // branch on pairwise common factors: V(p,q) = V(g) u V(p/g, q/g)
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
            Poly gij = Poly::gcd(s[i], s[j]);
            if (gij.is_constant()) continue;
            std::vector<Poly> rest;
            for (size_t t = 0; t < s.size(); ++t)
                if (t != i && t != j) rest.push_back(s[t]);
            std::vector<Poly> b1 = rest;
            b1.push_back(gij);
            std::vector<Poly> b2 = rest;
            b2.push_back(*s[i].divide_exact(gij));
            b2.push_back(*s[j].divide_exact(gij));
            AffineOut o1 = solve_affine(b1, va, vb, depth + 1);
            merge(o1, solve_affine(b2, va, vb, depth + 1));
            return o1;
        }

    // pairwise coprime from here on; eliminate va
    std::vector<Poly> with_a, without_a;
    for (const Poly& p : s) (p.degree_in(va) >= 1 ? with_a : without_a).push_back(p);
    if (with_a.empty()) return out;  // >= 2 coprime univariates in vb: no common root

    std::vector<Poly> elim = without_a;
    for (size_t i = 0; i < with_a.size(); ++i)
        for (size_t j = i + 1; j < with_a.size(); ++j)
            elim.push_back(Poly::resultant(with_a[i], with_a[j], va));
    if (elim.empty()) throw std::logic_error("solve_affine: no eliminants for a multi-equation system");
    Poly cand = gcd_many(elim);
    if (cand.is_zero()) throw std::logic_error("solve_affine: vanishing eliminant for coprime system");
    if (cand.is_constant()) return out;

    RationalRoots rr = rational_roots(cand);
    for (const auto& [b_val, mult] : rr.roots) {
        std::vector<Poly> fibre;
        bool impossible = false;
        for (const Poly& p : s) {
            Poly q = p.substitute(vb, b_val);
            if (q.is_zero()) continue;
            if (q.is_constant()) { impossible = true; break; }
            fibre.push_back(q);
        }
        if (impossible) continue;
        if (fibre.empty()) throw std::logic_error("solve_affine: fibre collapse for coprime system");
        Poly h = gcd_many(fibre);
        if (h.is_constant()) continue;
        RationalRoots hr = rational_roots(h);
        for (const auto& [a_val, amult] : hr.roots) {
            bool ok = true;
            for (const Poly& p : s) {
                std::vector<Rat> pt(p.num_vars(), Rat(0));
                pt[va] = a_val;
                pt[vb] = b_val;
                if (!p.evaluate(pt).is_zero()) { ok = false; break; }
            }
            if (ok) out.pts.push_back({a_val, b_val});
        }
        if (hr.cofactor_degree > 0) {
            Poly line = Poly::variable(h.num_vars(), vb) - Poly::constant(h.num_vars(), b_val);
            out.residual.push_back({"", {line, hr.cofactor}, 0});
        }
    }
    if (rr.cofactor_degree > 0) out.residual.push_back({"", {rr.cofactor}, 0});
    return out;
}

bool vanishes_at(const std::vector<Poly>& system, const std::array<Rat, 3>& p) {
    for (const Poly& q : system)
        if (!q.evaluate({p[0], p[1], p[2]}).is_zero()) return false;
    return true;
}

}  // namespace

P2Solutions solve_p2_system(const std::vector<Poly>& system_in) {
    if (system_in.empty()) throw std::invalid_argument("solve_p2_system: empty system");
    std::vector<Poly> system;
    for (const Poly& p : system_in) {
        if (p.num_vars() != 3) throw std::invalid_argument("solve_p2_system: need 3 variables");
        if (!p.is_homogeneous()) throw std::invalid_argument("solve_p2_system: need homogeneous input");
        if (!p.is_zero()) system.push_back(p);
    }
    P2Solutions out;
    if (system.empty()) {
        out.residual.push_back({"P2", {}, 2});
        return out;
    }

    auto push_point = [&](std::array<Rat, 3> p) {
        if (!vanishes_at(system, p)) throw std::logic_error("solve_p2_system: unverified candidate");
        if (std::find(out.points.begin(), out.points.end(), p) == out.points.end())
            out.points.push_back(std::move(p));
    };

    // chart x = 1
    std::vector<Poly> sa;
    for (const Poly& p : system) sa.push_back(p.substitute(0, Rat(1)));
    AffineOut a = solve_affine(sa, 1, 2, 0);
    for (const auto& yz : a.pts) push_point({Rat(1), yz[0], yz[1]});
    for (auto& r : a.residual) {
        r.chart = "x=1";
        out.residual.push_back(std::move(r));
    }

    // chart x = 0, y = 1
    std::vector<Poly> sb;
    bool all_zero = true;
    bool impossible = false;
    for (const Poly& p : system) {
        Poly q = p.substitute(0, Rat(0)).substitute(1, Rat(1));
        if (q.is_zero()) continue;
        all_zero = false;
        if (q.is_constant()) { impossible = true; break; }
        sb.push_back(q);
    }
    if (all_zero) {
        out.residual.push_back({"x=0", {Poly::variable(3, 0)}, 1});
    } else if (!impossible) {
        Poly g = gcd_many(sb);
        if (!g.is_constant()) {
            RationalRoots rr = rational_roots(g);
            for (const auto& [z_val, mult] : rr.roots) push_point({Rat(0), Rat(1), z_val});
            if (rr.cofactor_degree > 0) out.residual.push_back({"x=0,y=1", {rr.cofactor}, 0});
        }
    }

    // the point (0:0:1)
    bool at_origin = true;
    for (const Poly& p : system)
        if (!p.evaluate({Rat(0), Rat(0), Rat(1)}).is_zero()) { at_origin = false; break; }
    if (at_origin) push_point({Rat(0), Rat(0), Rat(1)});

    std::sort(out.points.begin(), out.points.end());
    return out;
}

}  // namespace gitstab
