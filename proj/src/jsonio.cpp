#include "gitstab/jsonio.hpp"

#include "gitstab/parse.hpp"

namespace gitstab::jsonio {

json rat_json(const Rat& r) { return r.str(); }

json point_json(const std::vector<Rat>& p) {
    json a = json::array();
    for (const Rat& c : p) a.push_back(rat_json(c));
    return a;
}

namespace {

json point3_json(const std::array<Rat, 3>& p) {
    return point_json(std::vector<Rat>(p.begin(), p.end()));
}

const std::vector<std::string> kXYZ = {"x", "y", "z"};
const std::vector<std::string> kVW = {"v", "w"};

}  // namespace

json residual_json(const std::vector<P2Residual>& rs) {
    json a = json::array();
    for (const P2Residual& r : rs) {
        json e = json::array();
        for (const Poly& p : r.eliminants) e.push_back(p.str(kXYZ));
        a.push_back({{"chart", r.chart}, {"eliminants", e}, {"dimension", r.dimension}});
    }
    return a;
}

json map_report(const ProjMap& m) {
    return {{"N", m.dim()}, {"d", m.degree()}, {"map", format_map(m)}};
}

json mu_report(const ProjMap& m, const WeightVector& w) {
    int support = 0;
    for (const Poly& c : m.coords()) support += c.term_count();
    return {{"mu", mu(m, w)}, {"weights", w.weights()}, {"support_size", support}};
}

json certificate_json(const MuCertificate& c) {
    return {{"weights", c.weights.weights()},
            {"mu", c.mu},
            {"kind", mu_kind_name(c.kind)},
            {"support_size", c.support_size}};
}

json destab_report(const ProjMap& m, bool strict) {
    auto cert = find_destabilizing_diag(m, strict);
    json out = {{"mode", strict ? "strict" : "nonstrict"}, {"found", cert.has_value()}};
    if (cert) {
        out["certificate"] = certificate_json(*cert);
    } else {
        out["note"] = strict
            ? "no diagonal 1-PS in these coordinates has mu > 0; no semistability claim is implied"
            : "no nonzero diagonal 1-PS in these coordinates has mu >= 0";
    }
    return out;
}

json verify_report(const ProjMap& m, const WeightVector& w, MuSign expect) {
    VerifyResult v = verify_certificate(m, w, expect);
    json out = {{"ok", v.ok},
                {"mu", v.mu},
                {"expected", expect == MuSign::positive ? "mu>0" : "mu>=0"}};
    if (v.certificate) out["certificate"] = certificate_json(*v.certificate);
    return out;
}

json iterate_report(const ProjMap& m, int n) {
    std::vector<int> degs = iterate_degrees(m, n);
    std::vector<long long> geometric;
    long long e = 1;
    for (int i = 0; i < n; ++i) geometric.push_back(e *= m.degree());
    bool stable = true;
    for (int i = 0; i < n; ++i) stable = stable && degs[i] == geometric[i];
    return {{"degrees", degs},
            {"geometric", geometric},
            {"algebraically_stable_upto", stable},
            {"n", n}};
}

namespace {

json witness_json(const FiberingWitness& w) {
    json pi = json::array();
    for (const auto& row : w.pi)
        pi.push_back(point_json(std::vector<Rat>(row.begin(), row.end())));
    return {{"center", point3_json(w.center)},
            {"pi", pi},
            {"G", {w.g[0].str(kVW), w.g[1].str(kVW)}},
            {"g_degenerate", w.g_degenerate}};
}

}  // namespace

json classify22_report(const ProjMap& m) {
    Rat22Verdict v = rat22_verdict(m);
    json centers = json::array();
    for (const auto& p : v.centers.rational_centers) centers.push_back(point3_json(p));
    json evidence = {{"iterate_degrees", v.iterate_degrees}};
    if (v.witness) evidence["witness"] = witness_json(*v.witness);
    return {{"branch", branch_name(v.branch)},
            {"semistable_conclusion", semistable_name(v.conclusion)},
            {"centers", centers},
            {"residual", residual_json(v.centers.residual)},
            {"deg_F2", v.deg_f2},
            {"evidence", evidence}};
}

json line_image_report(const ProjMap& m, const LineP2& line) {
    PlaneCurveImage img = line_image(m, line);
    json out = {{"line", line.equation().str(kXYZ)}, {"kind", curve_kind_name(img.kind)}};
    if (img.kind == CurveKind::point)
        out["point"] = point_json(img.point);
    else
        out["equation"] = img.equation.str(kXYZ);
    return out;
}

json table_report(int N, int k, int d) {
    SymbolicExponentTable t = symbolic_table_generic(N, k, d);
    CertificateRST c = paper_certificate_rst(N, k, d);
    json rows = json::array();
    for (const TableRow& r : t.rows) {
        json row = {{"line", r.line_label},
                    {"coordinates", {r.coord_lo, r.coord_hi}},
                    {"monomial", r.monomial},
                    {"form", r.form.str()},
                    {"value", r.form.eval(c.r, c.s, c.t)}};
        if (r.m >= 0) row["m"] = r.m;
        rows.push_back(std::move(row));
    }
    return {{"N", N},
            {"k", k},
            {"d", d},
            {"certificate", {{"r", c.r}, {"s", c.s}, {"t", c.t}}},
            {"expected_mu", (d == 2 && k == 2) ? "zero" : "positive"},
            {"rows", rows}};
}

json henon_build_report(const HenonSpec& spec) {
    std::vector<std::string> names = henon_var_names(spec.N);
    json affine = json::array(), inverse = json::array();
    for (const Poly& p : build_affine(spec)) affine.push_back(p.str(names));
    for (const Poly& p : inverse_affine(spec)) inverse.push_back(p.str(names));
    ProjMap m = homogenize_map(spec);
    return {{"N", spec.N},
            {"k", spec.k},
            {"d", spec.d},
            {"spec", format_henon(spec)},
            {"affine", affine},
            {"inverse", inverse},
            {"map", format_map(m)}};
}

json audit_report(const HenonSpec& spec, unsigned long long seed, int per_class) {
    LineAuditReport r = henon_line_audit(spec, seed, per_class);
    json checks = json::array();
    for (const LineAuditCheck& c : r.checks)
        checks.push_back({{"class", c.line_class},
                          {"line", c.line},
                          {"expected", c.expected},
                          {"got", c.got},
                          {"ok", c.ok}});
    return {{"seed", r.seed}, {"per_class", r.per_class}, {"checks", checks}, {"all_ok", r.all_ok}};
}

}  // namespace gitstab::jsonio
