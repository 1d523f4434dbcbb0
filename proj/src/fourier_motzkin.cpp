#include "gitstab/fourier_motzkin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gitstab::fm {

namespace {

// Scale so that the first nonzero entry of (a, c) is +-1 with numerators
// coprime; keeps duplicate detection effective across rational multiples.
void normalize(Constraint& k) {
    mpz_class num_gcd = 0, den_lcm = 1;
    auto fold = [&](const Rat& r) {
        if (r.is_zero()) return;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.den().get_mpz_t());
    };
    for (const Rat& r : k.a) fold(r);
    fold(k.c);
    if (num_gcd == 0) return;  // all-zero row
    Rat scale = Rat(den_lcm, num_gcd);
    if (scale.sign() < 0) scale = -scale;
    for (Rat& r : k.a) r *= scale;
    k.c *= scale;
}

struct Key {
    std::vector<std::string> parts;
    bool strict;
    bool operator<(const Key& o) const {
        if (strict != o.strict) return strict < o.strict;
        return parts < o.parts;
    }
};

Key key_of(const Constraint& k) {
    Key out;
    out.strict = k.strict;
    for (const Rat& r : k.a) out.parts.push_back(r.str());
    out.parts.push_back(k.c.str());
    return out;
}

}  // namespace

std::optional<std::vector<Rat>> feasible_point(std::vector<Constraint> cons, int nvars) {
    if (nvars < 0) throw std::invalid_argument("feasible_point: negative dimension");
    for (const Constraint& k : cons)
        if (static_cast<int>(k.a.size()) != nvars)
            throw std::invalid_argument("feasible_point: constraint dimension mismatch");

    // stages[v] holds the constraints alive while x_v was being eliminated
    std::vector<std::vector<Constraint>> stages(nvars);
    for (int v = nvars - 1; v >= 0; --v) {
        // dedupe
        std::set<Key> seen;
        std::vector<Constraint> unique;
        for (Constraint& k : cons) {
            normalize(k);
            if (seen.insert(key_of(k)).second) unique.push_back(std::move(k));
        }
        stages[v] = unique;

        std::vector<const Constraint*> lower, upper;
        std::vector<Constraint> next;
        for (const Constraint& k : stages[v]) {
            int s = k.a[v].sign();
            if (s > 0) lower.push_back(&k);
            else if (s < 0) upper.push_back(&k);
            else next.push_back(k);
        }
        for (const Constraint* lo : lower)
            for (const Constraint* hi : upper) {
                // positive combination cancelling x_v
                Rat p = lo->a[v];   // > 0
                Rat q = -hi->a[v];  // > 0
                Constraint combo;
                combo.a.resize(nvars, Rat(0));
                for (int j = 0; j < nvars; ++j) combo.a[j] = q * lo->a[j] + p * hi->a[j];
                combo.c = q * lo->c + p * hi->c;
                combo.strict = lo->strict || hi->strict;
                next.push_back(std::move(combo));
            }
        cons = std::move(next);
    }

    // variable-free system: every row must hold
    for (const Constraint& k : cons) {
        int s = k.c.sign();
        if (s < 0 || (s == 0 && k.strict)) return std::nullopt;
    }

    // back-substitute
    std::vector<Rat> x(nvars, Rat(0));
    for (int v = 0; v < nvars; ++v) {
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rat lo(0), hi(0);
        for (const Constraint& k : stages[v]) {
            int s = k.a[v].sign();
            if (s == 0) continue;
            Rat rest = k.c;
            for (int j = 0; j < v; ++j) rest += k.a[j] * x[j];
            // a[v]*x[v] + rest >= 0 (vars beyond v were eliminated: coefficient zero there)
            for (int j = v + 1; j < nvars; ++j)
                if (!k.a[j].is_zero())
                    throw std::logic_error("feasible_point: stage constraint not triangular");
            Rat bound = -rest / k.a[v];
            if (s > 0) {  // x[v] >= bound
                if (!has_lo || bound > lo || (bound == lo && k.strict)) {
                    lo = bound;
                    lo_strict = k.strict;
                }
                has_lo = true;
            } else {  // x[v] <= bound
                if (!has_hi || bound < hi || (bound == hi && k.strict)) {
                    hi = bound;
                    hi_strict = k.strict;
                }
                has_hi = true;
            }
        }
        if (has_lo && has_hi) {
            if (lo > hi || (lo == hi && (lo_strict || hi_strict)))
                throw std::logic_error("feasible_point: empty interval after elimination");
            x[v] = (lo == hi) ? lo : (lo + hi) / Rat(2);
        } else if (has_lo) {
            x[v] = lo_strict ? lo + Rat(1) : lo;
        } else if (has_hi) {
            x[v] = hi_strict ? hi - Rat(1) : hi;
        } else {
            x[v] = Rat(0);
        }
    }
    return x;
}

}  // namespace gitstab::fm
