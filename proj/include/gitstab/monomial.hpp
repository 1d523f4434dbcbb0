#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gitstab {

// Exponent vector of fixed length. Ordered by graded lexicographic order:
// total degree first, ties broken lexicographically with earlier variables
// weighing more.
class Monomial {
public:
    explicit Monomial(int num_vars) : e_(check_nvars(num_vars), 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        if (e_.empty()) throw std::invalid_argument("Monomial: no variables");
        for (int x : e_)
            if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    int num_vars() const { return static_cast<int>(e_.size()); }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    int exp(int var) const { return e_.at(var); }
    const std::vector<int>& exps() const { return e_; }

    Monomial with_exp(int var, int value) const {
        Monomial m = *this;
        if (value < 0) throw std::invalid_argument("Monomial: negative exponent");
        m.e_.at(var) = value;
        return m;
    }

    Monomial times(const Monomial& o) const {
        require_same(o);
        Monomial m = *this;
        for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
        return m;
    }

    bool divides(const Monomial& o) const {
        require_same(o);
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // o / this; requires divides(o)
    Monomial divide_into(const Monomial& o) const {
        require_same(o);
        Monomial m(num_vars());
        for (size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] > o.e_[i]) throw std::invalid_argument("Monomial: not divisible");
            m.e_[i] = o.e_[i] - e_[i];
        }
        return m;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    std::strong_ordering operator<=>(const Monomial& o) const {
        require_same(o);
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        for (size_t i = 0; i < e_.size(); ++i)
            if (auto c = e_[i] <=> o.e_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    static int check_nvars(int n) {
        if (n <= 0) throw std::invalid_argument("Monomial: need at least one variable");
        return n;
    }
    void require_same(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw std::invalid_argument("Monomial: mismatched variable counts");
    }

    std::vector<int> e_;
};

}  // namespace gitstab
