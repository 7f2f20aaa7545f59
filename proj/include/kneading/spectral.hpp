#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "kneading/markov.hpp"

namespace kneading {

struct SpectralOptions {
    double tol = 1e-12;
    std::size_t max_iterations = 1000000;
};

namespace detail {

// Tarjan's algorithm, iterative to survive long chains.
inline std::vector<std::vector<std::size_t>> strongly_connected_components(const TransitionMatrix& m) {
    const std::size_t n = m.order();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unset), low(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<std::size_t>> comps;
    std::size_t counter = 0;
    struct Frame { std::size_t v, next; };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unset) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& f = call.back();
            if (f.next < n) {
                const std::size_t w = f.next++;
                if (!m(f.v, w)) continue;
                if (index[w] == unset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const std::size_t v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
    }
    return comps;
}

// Perron root of an irreducible block by power iteration on I + A, which is
// primitive, bracketed by Collatz-Wielandt bounds.
inline double perron_root_irreducible(const TransitionMatrix& a, const SpectralOptions& opt) {
    const std::size_t n = a.order();
    std::vector<double> x(n, 1.0), y(n);
    for (std::size_t it = 0; it < opt.max_iterations; ++it) {
        double lo = HUGE_VAL, hi = 0.0, norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = x[i];
            for (std::size_t j = 0; j < n; ++j)
                if (a(i, j)) s += x[j];
            y[i] = s;
            lo = std::min(lo, s / x[i]);
            hi = std::max(hi, s / x[i]);
            norm = std::max(norm, s);
        }
        if (hi - lo <= opt.tol) return 0.5 * (lo + hi) - 1.0;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    throw Error(ErrorCode::NonConvergence, "power iteration did not settle within the iteration cap");
}

inline int sign_of(const BigRational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

inline std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
    std::vector<RationalPolynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        auto r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

inline int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

// Distinct real roots strictly above x.
inline int roots_above(const std::vector<RationalPolynomial>& chain, const BigRational& x) {
    std::vector<int> at_x, at_inf;
    for (const auto& q : chain) {
        at_x.push_back(sign_of(q.evaluate(x)));
        at_inf.push_back(sign_of(q.leading()));
    }
    return variations(at_x) - variations(at_inf);
}

}  // namespace detail

/// Perron root by power iteration over the strongly connected components.
inline double spectral_radius_power(const TransitionMatrix& m, const SpectralOptions& opt = {}) {
    double best = 0.0;
    for (const auto& comp : detail::strongly_connected_components(m)) {
        if (comp.size() == 1) {
            best = std::max(best, static_cast<double>(m(comp[0], comp[0])));
            continue;
        }
        best = std::max(best, detail::perron_root_irreducible(m.principal(comp), opt));
    }
    return best;
}

/// Largest real root of t^n d(1/t), located by Sturm counting on its
/// square-free part and exact dyadic bisection.
inline double spectral_radius_roots(const TransitionMatrix& m, const SpectralOptions& opt = {}) {
    const auto d = char_poly(m);
    const auto chi = d.reversed().convert<BigRational>();
    // d(t) may lose trailing degree; reversed() then drops powers of lambda
    // that only contribute the root 0, which never exceeds the Perron root.
    if (chi.degree() < 1) return 0.0;
    const auto sq = square_free_part(chi);
    const auto chain = detail::sturm_chain(sq);
    BigRational bound = 1;
    for (const auto& c : sq.coefficients()) bound += abs(c / sq.leading());
    BigRational lo = -1, hi = bound;
    if (detail::roots_above(chain, lo) == 0) return 0.0;  // no nonnegative root: nilpotent part only
    const BigRational width(opt.tol / 4);
    std::size_t guard = 0;
    while (hi - lo > width) {
        const BigRational mid = (lo + hi) / 2;
        if (detail::roots_above(chain, mid) >= 1) lo = mid;
        else hi = mid;
        if (++guard > 4000) throw Error(ErrorCode::NonConvergence, "root bisection did not settle");
    }
    return static_cast<double>((lo + hi) / 2);
}

/// Both routes must agree within 10 tol.
inline double spectral_radius(const TransitionMatrix& m, const SpectralOptions& opt = {}) {
    if (m.order() == 0) return 0.0;
    const double a = spectral_radius_power(m, opt);
    const double b = spectral_radius_roots(m, opt);
    if (std::abs(a - b) > 10 * opt.tol)
        throw Error(ErrorCode::NonConvergence,
                    "power iteration and root bisection disagree (" + std::to_string(a) + " vs " +
                        std::to_string(b) + ")");
    return b;
}

inline double entropy(const KneadingData& d, const SpectralOptions& opt = {}) {
    const double rho = spectral_radius(transition_matrix(d), opt);
    return rho <= 1.0 ? 0.0 : std::log(rho);
}

// ---------------------------------------------------------------------------
// Primitivity

namespace detail {

class BoolMatrix {
public:
    explicit BoolMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    static BoolMatrix from(const TransitionMatrix& m) {
        BoolMatrix b(m.order());
        for (std::size_t i = 0; i < m.order(); ++i)
            for (std::size_t j = 0; j < m.order(); ++j)
                if (m(i, j)) b.set(i, j);
        return b;
    }

    void set(std::size_t i, std::size_t j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
    bool get(std::size_t i, std::size_t j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U; }

    BoolMatrix operator*(const BoolMatrix& o) const {
        BoolMatrix c(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k)
                if (get(i, k))
                    for (std::size_t w = 0; w < words_; ++w) c.bits_[i * words_ + w] |= o.bits_[k * words_ + w];
        return c;
    }

    bool all_ones() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (!get(i, j)) return false;
        return true;
    }

private:
    std::size_t n_, words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace detail

/// A^((n-1)^2+1) > 0 over the booleans. Any positive power forces
/// primitivity, and a primitive matrix is positive from the Wielandt bound on.
inline bool is_primitive(const TransitionMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) return false;
    std::size_t e = (n - 1) * (n - 1) + 1;
    auto base = detail::BoolMatrix::from(m);
    std::optional<detail::BoolMatrix> acc;
    while (e > 0) {
        if (e & 1U) acc = acc ? *acc * base : base;
        e >>= 1U;
        if (e) base = base * base;
    }
    return acc->all_ones();
}

struct ComplexityOptions {
    std::size_t max_order = 16;
};

/// Primitive, while no proper principal submatrix is.
inline bool is_irreducibly_complex(const TransitionMatrix& m, const ComplexityOptions& opt = {}) {
    const std::size_t n = m.order();
    if (n < 2) throw Error(ErrorCode::TypeMismatch, "irreducible complexity needs order at least 2");
    if (n > opt.max_order)
        throw Error(ErrorCode::OrderTooLarge,
                    "order " + std::to_string(n) + " exceeds the cap " + std::to_string(opt.max_order));
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i)) return false;
    if (!is_primitive(m)) return false;
    // Size-1 submatrices are zero here, so start from pairs.
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size < 2) continue;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) keep.push_back(i);
        if (is_primitive(m.principal(keep))) return false;
    }
    return true;
}

}  // namespace kneading
