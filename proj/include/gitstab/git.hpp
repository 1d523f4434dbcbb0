#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gitstab/henon.hpp"
#include "gitstab/ratmap.hpp"

namespace gitstab {

// Diagonal one-parameter subgroup of SL_{N+1}: integer weights summing to
// zero, not all zero.
class WeightVector {
public:
    explicit WeightVector(std::vector<long long> w);
    int size() const { return static_cast<int>(w_.size()); }
    long long operator[](int i) const { return w_.at(i); }
    const std::vector<long long>& weights() const { return w_; }
    bool operator==(const WeightVector& o) const = default;

private:
    std::vector<long long> w_;
};

// The linear functional w -> w_j - <i, w> attached to a coordinate index and
// a monomial of the map.
struct ExponentFunctional {
    std::vector<long long> covector;
    static ExponentFunctional from_pair(int coord, const Monomial& mono);
    long long eval(const WeightVector& w) const;
};

// alpha-exponent of the (coord, monomial) entry under conjugation by the
// diagonal 1-PS with the given weights.
long long exponent(int coord, const Monomial& mono, const WeightVector& w);

// Minimum exponent over the support of the map.
long long mu(const ProjMap& m, const WeightVector& w);

// Block weights (r x (k-1), -s x (N-k+1), -t); requires the balance
// condition r(k-1) - s(N-k+1) - t = 0 with r,s,t >= 0 and not all zero.
WeightVector henon_block_weights(int N, int k, long long r, long long s, long long t);

struct CertificateRST {
    long long r, s, t;
};

// The certificate triple: (2N+2-k, k-1, (k-1)(N+1)) when d >= 3 or k >= 3,
// and (1, 0, k-1) when d = k = 2. In the first case mu > 0 on every Henon
// map; in the second mu = 0.
CertificateRST paper_certificate_rst(int N, int k, int d);
WeightVector paper_certificate(int N, int k, int d);

enum class MuKind { strictly_destabilizing, non_stable_witness };
std::string mu_kind_name(MuKind k);

struct MuCertificate {
    WeightVector weights;
    long long mu;
    MuKind kind;
    int support_size;
};

// Exact search for a diagonal destabilizing weight vector in the given
// coordinates. strict: all support exponents > 0 (mu > 0); non-strict:
// nonzero weights with all exponents >= 0 (mu >= 0). Feasibility is decided
// by Fourier-Motzkin elimination over the rationals; absence is a value.
std::optional<MuCertificate> find_destabilizing_diag(const ProjMap& m, bool strict);

enum class MuSign { positive, non_negative };

struct VerifyResult {
    bool ok;
    long long mu;
    std::optional<MuCertificate> certificate;  // present when ok
};

// Recomputes mu and checks it has the expected sign.
VerifyResult verify_certificate(const ProjMap& m, const WeightVector& w, MuSign expect);

// Integer linear form a*r + b*s + c*t.
struct LinearFormRST {
    long long cr = 0, cs = 0, ct = 0;
    long long eval(long long r, long long s, long long t) const { return cr * r + cs * s + ct * t; }
    bool operator==(const LinearFormRST&) const = default;
    std::string str() const;
};

struct TableRow {
    int line;                 // 1..6 for I..VI
    std::string line_label;   // "I".."VI"
    int coord_lo, coord_hi;   // 1-based coordinate range of the map
    std::string monomial;     // pattern description
    int m;                    // degree in x_k..x_N for line IV rows, else -1
    LinearFormRST form;
};

struct SymbolicExponentTable {
    int N, k, d;
    std::vector<TableRow> rows;
};

// Exponent table of the homogenized map under the block weights, grouped in
// the six standard lines; line IV carries one row per degree m that occurs
// in the spec's P polynomials.
SymbolicExponentTable symbolic_table(const HenonSpec& spec);

// (line, m) classification of one support entry of homogenize_map(spec);
// coord is 1-based.
std::pair<int, int> classify_table_row(const HenonSpec& spec, int coord, const Monomial& mono);

// Generic table for the given parameters: all admissible monomials present,
// so line IV shows every m in 0..d.
SymbolicExponentTable symbolic_table_generic(int N, int k, int d);

}  // namespace gitstab
