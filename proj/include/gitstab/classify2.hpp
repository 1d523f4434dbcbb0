#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gitstab/henon.hpp"
#include "gitstab/p2solve.hpp"
#include "gitstab/ratmap.hpp"

namespace gitstab {

// Witness that F factors through the linear projection pi = [L1 : L2] to
// P^1: pi o F = G o pi exactly.
struct FiberingWitness {
    std::array<Rat, 3> center;            // normalized; common zero of L1, L2
    std::array<std::array<Rat, 3>, 2> pi; // rows are the coefficients of L1, L2
    std::array<Poly, 2> g;                // binary quadratics in the fiber coordinates (v, w)
    bool g_degenerate;                    // true when G1, G2 share a factor
};

struct CenterSearch {
    std::vector<std::array<Rat, 3>> rational_centers;  // normalized
    std::vector<P2Residual> residual;
};

enum class Branch22 { fibered, degree_drop, both, neither };
enum class Semistable22 { semistable, unknown };

std::string branch_name(Branch22 b);
std::string semistable_name(Semistable22 s);

struct Rat22Verdict {
    Branch22 branch;
    Semistable22 conclusion;
    std::optional<FiberingWitness> witness;  // present when fibered
    CenterSearch centers;
    int deg_f2;
    std::vector<int> iterate_degrees;  // [deg F, deg F^2]
};

// All points p such that every quadric l.F with l(p) = 0 is singular at p;
// these are exactly the possible centers of a linear fibering. The system
// solved is x_j * grad F_i - x_i * grad F_j = 0 over the three index pairs.
CenterSearch fibering_centers(const ProjMap& f);

// Builds the witness at p when p is a center: expresses L1 o F and L2 o F in
// the basis {L1^2, L1*L2, L2^2} by an exact linear solve.
std::optional<FiberingWitness> check_fibering(const ProjMap& f, const std::array<Rat, 3>& p);

// (deg F^2 after normalization, whether it dropped to <= 2).
std::pair<int, bool> degree_drop_22(const ProjMap& f);

// Classification verdict for a dominant quadratic self-map of P^2: a map in
// the unstable locus is linearly fibered or has deg F^2 <= 2, so a map with
// neither property (and a fully resolved center search) is semistable.
Rat22Verdict rat22_verdict(const ProjMap& f);

struct LineAuditCheck {
    std::string line_class;  // "z=0", "y=B*z", "non-horizontal"
    std::string line;        // the sampled line equation
    std::string expected;
    std::string got;
    bool ok;
};

struct LineAuditReport {
    unsigned long long seed;
    int per_class;
    std::vector<LineAuditCheck> checks;
    bool all_ok;
};

// Samples lines from the three classes and checks the image trichotomy for a
// quadratic Henon map on P^2: {z=0} -> the point [0:1:0], horizontal lines
// {y=B*z} -> vertical lines {x=a*B*z}, anything else -> an irreducible conic.
LineAuditReport henon_line_audit(const HenonSpec& spec, unsigned long long seed, int per_class);

}  // namespace gitstab
