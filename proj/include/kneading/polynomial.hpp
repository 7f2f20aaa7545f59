#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kneading {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense polynomial in t with coefficients in ascending powers. Trailing
/// zeros are dropped, so the zero polynomial has no coefficients.
template <class Coef>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Coef> c) : c_(c) { trim(); }
    explicit Polynomial(std::vector<Coef> c) : c_(std::move(c)) { trim(); }

    static Polynomial monomial(Coef a, std::size_t k) {
        std::vector<Coef> c(k + 1, Coef(0));
        c[k] = std::move(a);
        return Polynomial(std::move(c));
    }

    const std::vector<Coef>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    Coef coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Coef(0); }
    const Coef& leading() const { return c_.back(); }

    template <class X>
    X evaluate(const X& x) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    /// p(-t)
    Polynomial reflect() const {
        auto c = c_;
        for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
        return Polynomial(std::move(c));
    }

    /// t^n p(1/t) for n = degree.
    Polynomial reversed() const {
        auto c = c_;
        std::reverse(c.begin(), c.end());
        return Polynomial(std::move(c));
    }

    Polynomial derivative() const {
        std::vector<Coef> c;
        for (std::size_t k = 1; k < c_.size(); ++k) c.push_back(c_[k] * Coef(static_cast<long>(k)));
        return Polynomial(std::move(c));
    }

    template <class Other>
    Polynomial<Other> convert() const {
        std::vector<Other> c;
        for (const auto& x : c_) c.push_back(Other(x));
        return Polynomial<Other>(std::move(c));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Coef> c(std::max(a.c_.size(), b.c_.size()), Coef(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a) {
        auto c = a.c_;
        for (auto& x : c) x = -x;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coef> c(a.c_.size() + b.c_.size() - 1, Coef(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Human readable form in t, e.g. "1 - t - t^2".
    std::string to_string(const char* var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == Coef(0)) continue;
            const bool neg = c_[k] < Coef(0);
            const Coef mag = neg ? Coef(-c_[k]) : c_[k];
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            if (k == 0 || mag != Coef(1)) os << mag;
            if (k >= 1) os << var;
            if (k >= 2) os << '^' << k;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == Coef(0)) c_.pop_back();
    }

    std::vector<Coef> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<BigRational>;

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F> r = a.coefficients();
    const auto& bc = b.coefficients();
    const std::size_t nb = bc.size();
    if (r.size() < nb) return {Polynomial<F>{}, a};
    std::vector<F> q(r.size() - nb + 1, F(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        const F f = r[k + nb - 1] / bc.back();
        q[k] = f;
        if (f == F(0)) continue;
        for (std::size_t j = 0; j < nb; ++j) r[k + j] -= f * bc[j];
    }
    r.resize(nb - 1);
    return {Polynomial<F>(std::move(q)), Polynomial<F>(std::move(r))};
}

template <class F>
Polynomial<F> monic(const Polynomial<F>& p) {
    if (p.is_zero()) return p;
    auto c = p.coefficients();
    const F lead = c.back();
    for (auto& x : c) x /= lead;
    return Polynomial<F>(std::move(c));
}

template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Product of the distinct irreducible factors: p / gcd(p, p').
template <class F>
Polynomial<F> square_free_part(const Polynomial<F>& p) {
    if (p.degree() < 1) return p;
    return monic(divmod(p, gcd(p, p.derivative())).first);
}

}  // namespace kneading
