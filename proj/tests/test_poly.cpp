#include <doctest.h>

#include "gitstab/parse.hpp"
#include "gitstab/poly.hpp"
#include "support.hpp"

using namespace gitstab;

namespace {

const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

Poly P2(const char* text) { return parse_poly(text, XY); }
Poly P3(const char* text) { return parse_poly(text, XYZ); }

}  // namespace

TEST_CASE("arithmetic basics") {
    CHECK(P2("x+y") + P2("x-y") == P2("2*x"));
    CHECK(P2("x+y") * P2("x+y") == P2("x^2+2*x*y+y^2"));
    CHECK(P2("x^2-y^2") * Poly::one(2) == P2("x^2-y^2"));
    CHECK(P2("x+y") - P2("x+y") == Poly::zero(2));
    CHECK(P2("x").pow(0) == Poly::one(2));
    CHECK_THROWS_AS(P2("x") + P3("x"), std::invalid_argument);
}

TEST_CASE("degree of zero is a sentinel") {
    CHECK_FALSE(Poly::zero(2).degree().has_value());
    CHECK(P2("x*y").degree() == 2);
    CHECK(Poly::constant(2, Rat(7)).degree() == 0);
}

TEST_CASE("compose") {
    // renaming x^2 |-> y^2
    Poly x2 = parse_poly("x^2", {"x"});
    CHECK(x2.compose({P2("y")}) == P2("y^2"));
    CHECK(P2("x+y").compose({P2("x"), P2("x")}) == P2("2*x"));
    // oracle: (x+y)(x-y) expanded by hand
    CHECK(P2("x*y").compose({P2("x+y"), P2("x-y")}) == P2("x^2-y^2"));
    CHECK_THROWS_AS(P2("x").compose({P2("x"), P2("y"), P2("x")}), std::invalid_argument);
}

TEST_CASE("homogenize and dehomogenize") {
    Poly p = P2("5/2*x + y^2");
    CHECK(p.homogenize(2) == P3("5/2*x*z + y^2"));
    CHECK(Poly::constant(2, Rat(5)).homogenize(2) == P3("5*z^2"));
    CHECK(P3("y^2 - x*z").dehomogenize() == P2("y^2 - x"));
    CHECK_THROWS_AS(P2("y^2").homogenize(1), std::invalid_argument);
    CHECK_THROWS_AS(P3("y^2 - x").dehomogenize(), std::invalid_argument);
}

TEST_CASE("gcd examples") {
    CHECK(Poly::gcd(P2("x^2-y^2"), P2("x^2+2*x*y+y^2")) == P2("x+y"));
    CHECK(Poly::gcd(P2("x^2"), P2("y^2")) == Poly::one(2));
    CHECK(Poly::gcd(P3("z^2*x^2"), P3("z^2*y^2")) == P3("z^2"));
    CHECK(Poly::gcd(P2("x"), Poly::zero(2)) == P2("x"));
    CHECK(Poly::gcd(Poly::zero(2), Poly::zero(2)) == Poly::zero(2));
    // normalization: content 1, positive leading coefficient
    CHECK(Poly::gcd(P2("-2*x^2-2*x*y"), P2("-4*x")) == P2("x"));
}

TEST_CASE("resultant examples") {
    // Res_x(x - a, x - b) = a - b under our row convention
    std::vector<std::string> xab = {"x", "a", "b"};
    Poly f = parse_poly("x - a", xab);
    Poly g = parse_poly("x - b", xab);
    CHECK(Poly::resultant(f, g, 0) == parse_poly("a - b", xab));
    // Res_t(t^2 - x, t - y) = y^2 - x
    std::vector<std::string> txy = {"t", "x", "y"};
    CHECK(Poly::resultant(parse_poly("t^2 - x", txy), parse_poly("t - y", txy), 0) ==
          parse_poly("y^2 - x", txy));
    CHECK(Poly::resultant(parse_poly("t^2", txy), parse_poly("t", txy), 0).is_zero());
    CHECK_THROWS_AS(Poly::resultant(Poly::zero(2), Poly::zero(2), 0), std::invalid_argument);
}

TEST_CASE("rational roots") {
    std::vector<std::string> X = {"x"};
    auto rr = rational_roots(parse_poly("x^2 - 1", X));
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0].first == Rat(-1));
    CHECK(rr.roots[1].first == Rat(1));
    CHECK(rr.cofactor_degree == 0);

    rr = rational_roots(parse_poly("x^2 - 2", X));
    CHECK(rr.roots.empty());
    CHECK(rr.cofactor_degree == 2);

    rr = rational_roots(parse_poly("2*x^2 - 3*x + 1", X));
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0].first == Rat(1, 2));
    CHECK(rr.roots[1].first == Rat(1));

    // multiplicities and the zero root
    rr = rational_roots(parse_poly("x^3 - 2*x^2 + x", X));
    REQUIRE(rr.roots.size() == 2);
    CHECK(rr.roots[0] == std::pair<Rat, int>{Rat(0), 1});
    CHECK(rr.roots[1] == std::pair<Rat, int>{Rat(1), 2});

    CHECK_THROWS_AS(rational_roots(Poly::zero(1)), std::invalid_argument);
    CHECK_THROWS_AS(rational_roots(P2("x*y")), std::invalid_argument);
}

TEST_CASE("jacobian") {
    auto j = jacobian({P2("x^2"), P2("y^2")});
    CHECK(j[0][0] == P2("2*x"));
    CHECK(j[0][1] == Poly::zero(2));
    CHECK(j[1][1] == P2("2*y"));

    auto j2 = jacobian({P2("x*y")});
    CHECK(j2[0][0] == P2("y"));
    CHECK(j2[0][1] == P2("x"));

    // with a = 2, b = 3: [a*y*z, b*x*z + y^2, z^2]
    auto j3 = jacobian({P3("2*y*z"), P3("3*x*z + y^2"), P3("z^2")});
    CHECK(j3[0][0] == Poly::zero(3));
    CHECK(j3[0][1] == P3("2*z"));
    CHECK(j3[0][2] == P3("2*y"));
    CHECK(j3[1][0] == P3("3*z"));
    CHECK(j3[1][1] == P3("2*y"));
    CHECK(j3[1][2] == P3("3*x"));
    CHECK(j3[2][2] == P3("2*z"));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 50; ++i) {
        Poly p = testsupport::random_poly(rng, 2, 2);
        Poly q = testsupport::random_poly(rng, 2, 2);
        Poly r = testsupport::random_poly(rng, 2, 2);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
    }
}

TEST_CASE("gcd multiplicativity") {
    std::mt19937_64 rng(2025);
    for (int i = 0; i < 30; ++i) {
        Poly p = testsupport::random_nonzero_poly(rng, 2, 2);
        Poly q = testsupport::random_nonzero_poly(rng, 2, 2);
        Poly h = testsupport::random_nonzero_poly(rng, 2, 1);
        Poly lhs = Poly::gcd(p * h, q * h);
        Poly rhs = (h * Poly::gcd(p, q)).normalized_primitive();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("compose is associative over substitution chains") {
    std::mt19937_64 rng(2026);
    for (int i = 0; i < 20; ++i) {
        Poly p = testsupport::random_poly(rng, 2, 2);
        std::vector<Poly> f = {testsupport::random_poly(rng, 2, 2),
                               testsupport::random_poly(rng, 2, 2)};
        std::vector<Poly> g = {testsupport::random_poly(rng, 2, 1),
                               testsupport::random_poly(rng, 2, 1)};
        Poly lhs = p.compose(f).compose(g);
        Poly rhs = p.compose({f[0].compose(g), f[1].compose(g)});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("homogenization round trips") {
    std::mt19937_64 rng(2027);
    for (int i = 0; i < 30; ++i) {
        Poly p = testsupport::random_poly(rng, 2, 3);
        CHECK(p.homogenize(4).dehomogenize() == p);
        Poly h = testsupport::random_homogeneous(rng, 3, 2);
        if (h.is_zero()) continue;
        // round trip holds when no term is divisible by the last variable,
        // i.e. some term is free of it; otherwise the degree drops
        bool has_pure = false;
        for (const auto& [m, c] : h.terms()) has_pure = has_pure || m.exp(2) == 0;
        if (has_pure) CHECK(h.dehomogenize().homogenize(*h.degree()) == h);
    }
}

TEST_CASE("resultant vanishes iff the gcd is nonconstant (univariate)") {
    std::mt19937_64 rng(2028);
    std::vector<std::string> X = {"x"};
    for (int i = 0; i < 40; ++i) {
        Poly a = testsupport::random_nonzero_poly(rng, 1, 2);
        Poly b = testsupport::random_nonzero_poly(rng, 1, 2);
        Poly c = testsupport::random_nonzero_poly(rng, 1, 1);
        bool share = rand_range(rng, 0, 1) == 1 && !c.is_constant();
        Poly f = share ? a * c : a;
        Poly g = share ? b * c : b;
        bool res_zero = Poly::resultant(f, g, 0).is_zero();
        bool gcd_nonconst = !Poly::gcd(f, g).is_constant();
        CHECK(res_zero == gcd_nonconst);
    }
}
