#include <doctest.h>

#include "gitstab/fourier_motzkin.hpp"
#include "gitstab/git.hpp"
#include "gitstab/parse.hpp"
#include "support.hpp"

using namespace gitstab;

namespace {

ProjMap classic_henon() { return parse_map("[y*z : x*z + y^2 : z^2]"); }
ProjMap cubic_henon() { return parse_map("[y*z^2 : x*z^2 + y^3 : z^3]"); }

HenonSpec classic_spec() {
    return parse_henon("henon N=2 k=2 d=2 b=(1,1) P3=(x2^2)");
}

}  // namespace

TEST_CASE("weight vectors validate") {
    CHECK_THROWS_AS(WeightVector({1, 1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(WeightVector({0, 0, 0}), std::invalid_argument);
    CHECK(WeightVector({1, 0, -1}).weights() == std::vector<long long>{1, 0, -1});
}

TEST_CASE("exponent examples") {
    WeightVector w({1, 0, -1});
    // y-coordinate times xz
    CHECK(exponent(1, Monomial({1, 0, 1}), w) == 0);
    // x-coordinate times yz
    CHECK(exponent(0, Monomial({0, 1, 1}), w) == 2);
    // identity monomial x_j in coordinate j
    CHECK(exponent(2, Monomial({0, 0, 1}), w) == 0);
    CHECK_THROWS_AS(exponent(0, Monomial({1, 0}), w), std::invalid_argument);
}

TEST_CASE("mu examples") {
    CHECK(mu(classic_henon(), WeightVector({1, 0, -1})) == 0);

    // cubic Henon at (4,-1,-3): exponent multiset {11, 1, 2, 6}
    ProjMap f = cubic_henon();
    WeightVector w({4, -1, -3});
    CHECK(exponent(0, Monomial({0, 1, 2}), w) == 11);
    CHECK(exponent(1, Monomial({1, 0, 2}), w) == 1);
    CHECK(exponent(1, Monomial({0, 3, 0}), w) == 2);
    CHECK(exponent(2, Monomial({0, 0, 3}), w) == 6);
    CHECK(mu(f, w) == 1);

    // positive homogeneity
    CHECK(mu(f, WeightVector({8, -2, -6})) == 2 * mu(f, w));
}

TEST_CASE("mu scales under positive integer multiples of the weights") {
    std::mt19937_64 rng(406);
    for (int i = 0; i < 30; ++i) {
        ProjMap m = testsupport::random_map(rng, 2, 2);
        WeightVector w = testsupport::random_weights(rng, 3);
        long long c = rand_range(rng, 2, 5);
        std::vector<long long> scaled;
        for (int v = 0; v < 3; ++v) scaled.push_back(c * w[v]);
        CHECK(mu(m, WeightVector(scaled)) == c * mu(m, w));
    }
}

TEST_CASE("block weights and the balance constraint") {
    CHECK(henon_block_weights(2, 2, 1, 0, 1).weights() == std::vector<long long>{1, 0, -1});
    CHECK(henon_block_weights(2, 2, 4, 1, 3).weights() == std::vector<long long>{4, -1, -3});
    CHECK(henon_block_weights(3, 3, 5, 2, 8).weights() == std::vector<long long>{5, 5, -2, -8});
    CHECK_THROWS_AS(henon_block_weights(3, 3, 6, 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(henon_block_weights(2, 2, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("certificate weights") {
    CHECK(paper_certificate(2, 2, 3).weights() == std::vector<long long>{4, -1, -3});
    CHECK(paper_certificate(2, 2, 2).weights() == std::vector<long long>{1, 0, -1});
    CHECK(paper_certificate(3, 2, 2).weights() == std::vector<long long>{1, 0, 0, -1});
    CHECK_THROWS_AS(paper_certificate(2, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(paper_certificate(2, 2, 1), std::invalid_argument);
}

TEST_CASE("symbolic table rows") {
    SymbolicExponentTable t = symbolic_table(classic_spec());
    auto find_line = [&](int line) -> const TableRow& {
        for (const TableRow& r : t.rows)
            if (r.line == line) return r;
        FAIL("missing line");
        return t.rows.front();
    };
    CHECK(find_line(2).form == LinearFormRST{1, 1, 1});    // r + s + (d-1)t at d=2
    CHECK(find_line(5).form == LinearFormRST{-1, -1, 1});  // -r - s + (d-1)t
    CHECK(find_line(6).form == LinearFormRST{0, 0, 1});    // (d-1)t
    CHECK(find_line(5).form.str() == "-r-s+t");

    SymbolicExponentTable g = symbolic_table_generic(2, 2, 3);
    auto& rows = g.rows;
    bool found_ii = false;
    for (const TableRow& r : rows)
        if (r.line == 2) {
            CHECK(r.form == LinearFormRST{1, 1, 2});
            found_ii = true;
        }
    CHECK(found_ii);
}

TEST_CASE("table rows match the exponent functional on the support") {
    std::mt19937_64 rng(401);
    for (int i = 0; i < 20; ++i) {
        int n = static_cast<int>(rand_range(rng, 2, 4));
        int k = static_cast<int>(rand_range(rng, 2, n));
        int d = static_cast<int>(rand_range(rng, 2, 3));
        HenonSpec spec = random_spec(n, k, d, rng);
        ProjMap f = homogenize_map(spec);
        // any admissible (r, s, t) with the balance condition
        long long s = rand_range(rng, 0, 3);
        long long r = s * (n - k + 1) + rand_range(rng, 1, 3) * (k - 1);
        long long t = r * (k - 1) - s * (n - k + 1);
        WeightVector w = henon_block_weights(n, k, r, s, t);
        SymbolicExponentTable table = symbolic_table(spec);
        for (int j = 0; j <= n; ++j)
            for (const auto& [mono, c] : f.coords()[j].terms()) {
                auto [line, m] = classify_table_row(spec, j + 1, mono);
                const TableRow* row = nullptr;
                for (const TableRow& tr : table.rows)
                    if (tr.line == line && (line != 4 || tr.m == m) && j + 1 >= tr.coord_lo &&
                        j + 1 <= tr.coord_hi)
                        row = &tr;
                REQUIRE(row != nullptr);
                CHECK(row->form.eval(r, s, t) == exponent(j, mono, w));
            }
    }
}

TEST_CASE("certificate sweep identities") {
    for (int n = 2; n <= 5; ++n)
        for (int k = 2; k <= n; ++k)
            for (int d = 2; d <= 4; ++d) {
                if (d == 2 && k == 2) continue;
                CertificateRST c = paper_certificate_rst(n, k, d);
                CHECK(c.r * (k - 1) - c.s * (n - k + 1) - c.t == 0);
                CHECK(d * c.t - c.s == static_cast<long long>(k - 1) * (d * (n + 1) - 1));
                CHECK(-c.r - c.s + (d - 1) * c.t ==
                      static_cast<long long>((d - 1) * (k - 1) - 2) * (n + 1) + 1);
                // every table row is strictly positive at the certificate
                for (const TableRow& row : symbolic_table_generic(n, k, d).rows)
                    CHECK(row.form.eval(c.r, c.s, c.t) > 0);
            }
}

TEST_CASE("destabilizing search") {
    // cubic Henon is unstable: a strict certificate exists
    auto cert = find_destabilizing_diag(cubic_henon(), true);
    REQUIRE(cert.has_value());
    CHECK(cert->mu > 0);
    CHECK(cert->kind == MuKind::strictly_destabilizing);
    CHECK(mu(cubic_henon(), cert->weights) == cert->mu);

    // quadratic Henon: no strict witness, and the non-strict cone is the ray (1,0,-1)
    CHECK_FALSE(find_destabilizing_diag(classic_henon(), true).has_value());
    auto soft = find_destabilizing_diag(classic_henon(), false);
    REQUIRE(soft.has_value());
    CHECK(soft->mu == 0);
    CHECK(soft->weights.weights() == std::vector<long long>{1, 0, -1});

    // the Remark map [xz : yz + x^2 : z^2] is unstable
    auto phi = find_destabilizing_diag(parse_map("[x*z : y*z + x^2 : z^2]"), true);
    REQUIRE(phi.has_value());
    CHECK(phi->mu > 0);
}

TEST_CASE("verify certificate") {
    VerifyResult ok = verify_certificate(classic_henon(), WeightVector({1, 0, -1}),
                                         MuSign::non_negative);
    CHECK(ok.ok);
    CHECK(ok.mu == 0);
    REQUIRE(ok.certificate.has_value());
    CHECK(ok.certificate->kind == MuKind::non_stable_witness);

    VerifyResult strict = verify_certificate(cubic_henon(), WeightVector({4, -1, -3}),
                                             MuSign::positive);
    CHECK(strict.ok);
    CHECK(strict.mu == 1);

    VerifyResult bad = verify_certificate(classic_henon(), WeightVector({-1, 0, 1}),
                                          MuSign::positive);
    CHECK_FALSE(bad.ok);
    CHECK(bad.mu < 0);
    CHECK_FALSE(bad.certificate.has_value());
}

TEST_CASE("exponent is linear in the weights") {
    std::mt19937_64 rng(402);
    for (int i = 0; i < 50; ++i) {
        int n = static_cast<int>(rand_range(rng, 2, 4));
        WeightVector w1 = testsupport::random_weights(rng, n + 1);
        WeightVector w2 = testsupport::random_weights(rng, n + 1);
        long long a = rand_range(rng, 1, 4), b = rand_range(rng, 1, 4);
        std::vector<long long> combo;
        for (int v = 0; v <= n; ++v) combo.push_back(a * w1[v] + b * w2[v]);
        bool all_zero = true;
        for (long long v : combo) all_zero = all_zero && v == 0;
        if (all_zero) continue;
        WeightVector wc(combo);
        std::vector<int> e(n + 1, 0);
        for (int t = 0; t < 2; ++t) ++e[rand_range(rng, 0, n)];
        Monomial mono{e};
        int j = static_cast<int>(rand_range(rng, 0, n));
        CHECK(exponent(j, mono, wc) == a * exponent(j, mono, w1) + b * exponent(j, mono, w2));
    }
}

TEST_CASE("mu equals the brute-force conjugation oracle") {
    std::mt19937_64 rng(403);
    for (int i = 0; i < 50; ++i) {
        int n = static_cast<int>(rand_range(rng, 2, 3));
        int d = static_cast<int>(rand_range(rng, 2, 3));
        ProjMap m = testsupport::random_map(rng, n, d);
        WeightVector w = testsupport::random_weights(rng, n + 1);
        CHECK(mu(m, w) == testsupport::mu_conjugation_oracle(m, w));
    }
}

TEST_CASE("mu is equivariant under coordinate permutations") {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 30; ++i) {
        ProjMap m = testsupport::random_map(rng, 2, 2);
        WeightVector w = testsupport::random_weights(rng, 3);
        std::vector<int> perm = {0, 1, 2};
        for (int a = 2; a > 0; --a)
            std::swap(perm[a], perm[rand_range(rng, 0, a)]);
        // permutation matrix: sigma(e_j) = e_{perm[j]}
        std::vector<std::vector<Rat>> p(3, std::vector<Rat>(3, Rat(0)));
        for (int j = 0; j < 3; ++j) p[perm[j]][j] = Rat(1);
        ProjMap conj = linear_conjugate(m, p);
        std::vector<long long> pw(3);
        for (int j = 0; j < 3; ++j) pw[perm[j]] = w[j];
        CHECK(mu(conj, WeightVector(pw)) == mu(m, w));
    }
}

TEST_CASE("mu depends only on the support") {
    std::mt19937_64 rng(405);
    for (int i = 0; i < 30; ++i) {
        ProjMap m = testsupport::random_map(rng, 2, 2);
        WeightVector w = testsupport::random_weights(rng, 3);
        // rescale one arbitrary coefficient
        std::vector<Poly> coords = m.coords();
        int which = static_cast<int>(rand_range(rng, 0, 2));
        if (coords[which].is_zero()) continue;
        const auto& [mono, c] = *coords[which].terms().begin();
        coords[which] += Poly::monomial(mono, c.abs() + Rat(rand_range(rng, 1, 5)));
        ProjMap m2 = ProjMap::from_coords(coords);
        bool support_equal = true;
        for (int j = 0; j < 3; ++j) {
            if (m2.coords()[j].term_count() != m.coords()[j].term_count()) support_equal = false;
        }
        if (!support_equal || m2.degree() != m.degree()) continue;
        CHECK(mu(m2, w) == mu(m, w));
    }
}

TEST_CASE("fourier-motzkin basics") {
    using fm::Constraint;
    // x > 0, y > 0, x + y < 1 is feasible
    std::vector<Constraint> cons = {
        {{Rat(1), Rat(0)}, Rat(0), true},
        {{Rat(0), Rat(1)}, Rat(0), true},
        {{Rat(-1), Rat(-1)}, Rat(1), true},
    };
    auto pt = fm::feasible_point(cons, 2);
    REQUIRE(pt.has_value());
    CHECK((*pt)[0] > Rat(0));
    CHECK((*pt)[1] > Rat(0));
    CHECK((*pt)[0] + (*pt)[1] < Rat(1));

    // x > 0 and x < 0 is infeasible
    std::vector<Constraint> bad = {
        {{Rat(1)}, Rat(0), true},
        {{Rat(-1)}, Rat(0), true},
    };
    CHECK_FALSE(fm::feasible_point(bad, 1).has_value());

    // x >= 3 and x <= 3 pins the point
    std::vector<Constraint> pin = {
        {{Rat(1)}, Rat(-3), false},
        {{Rat(-1)}, Rat(3), false},
    };
    auto p3 = fm::feasible_point(pin, 1);
    REQUIRE(p3.has_value());
    CHECK((*p3)[0] == Rat(3));
}
