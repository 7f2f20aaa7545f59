#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "kneading/admissibility.hpp"

namespace kneading {

/// f_a(x) = a x^3 + (1 - a) x on [-1, 1], odd, with fixed endpoints.
/// Increasing on the outer laps and decreasing on the middle one for a > 1.
class CubicMap {
public:
    explicit CubicMap(double a) : a_(a) {
        if (!(a > 1.0 && a <= 4.0))
            throw Error(ErrorCode::DomainExceeded, "parameter a must lie in (1, 4]");
        c2_ = std::sqrt((a - 1.0) / (3.0 * a));
        c1_ = -c2_;
    }

    double a() const noexcept { return a_; }
    double c1() const noexcept { return c1_; }
    double c2() const noexcept { return c2_; }

private:
    double a_, c1_, c2_;
};

inline double evaluate(const CubicMap& f, double x) {
    if (!(x >= -1.0 && x <= 1.0)) throw Error(ErrorCode::DomainExceeded, "x outside [-1, 1]");
    // x (a x^2 + 1 - a) is odd in x bit for bit.
    return x * (f.a() * x * x + (1.0 - f.a()));
}

inline char symbol_at(const CubicMap& f, double x, double eps = 1e-10) {
    if (std::abs(x - f.c1()) < eps) return 'A';
    if (std::abs(x - f.c2()) < eps) return 'B';
    if (x < f.c1()) return 'L';
    if (x < f.c2()) return 'M';
    return 'R';
}

/// Symbols of f^j(x0) for j = 1..n, stopping after the first critical hit.
inline Sequence itinerary(const CubicMap& f, double x0, std::size_t n, double eps = 1e-10) {
    if (n < 1) throw Error(ErrorCode::DomainExceeded, "itinerary needs n >= 1");
    std::string out;
    double x = x0;
    for (std::size_t j = 0; j < n; ++j) {
        x = evaluate(f, x);
        const char s = symbol_at(f, x, eps);
        out.push_back(s);
        if (s == 'A' || s == 'B') break;
    }
    return Sequence(Alphabet::bimodal, out, Periodicity::finite);
}

struct RealizeOptions {
    double tol = 1e-12;
    std::size_t scan = 1000;
    double eps = 1e-10;
    std::size_t bisection_steps = 200;
};

struct Realization {
    double a = 0.0;
    double defect = 0.0;
    Sequence c1_itinerary;
    Sequence c2_itinerary;
};

namespace detail {

struct RealizeTarget {
    std::string c1_block;  // P^(p-1) followed by the critical symbol it returns to
    std::string c2_block;
    std::size_t period;
    bool to_c2;
};

inline RealizeTarget realize_target(const KneadingData& target) {
    if (!target.is_bimodal() || !target.is_symmetric())
        throw Error(ErrorCode::NotAdmissible, target.to_string() + " is not symmetric bimodal data");
    const std::string p1 = target.half_block();
    if (!p1.empty() && p1.front() == 'L')
        throw Error(ErrorCode::NoBracket, "c1 sequences of the family start with R");
    if (!is_admissible_bimodal(target))
        throw Error(ErrorCode::NotAdmissible, target.to_string() + " is not admissible");
    const bool doubly = target.kind() == DataKind::bimodal_doubly_stable;
    const std::string q1 = conjugate(Sequence(Alphabet::bimodal, p1, Periodicity::finite)).word();
    return RealizeTarget{p1 + (doubly ? "B" : "A"), q1 + (doubly ? "A" : "B"), p1.size() + 1, doubly};
}

inline std::optional<double> defect(const RealizeTarget& t, double a) {
    const CubicMap f(a);
    double x = f.c1();
    try {
        for (std::size_t j = 0; j < t.period; ++j) x = evaluate(f, x);
    } catch (const Error&) {
        return std::nullopt;
    }
    return x - (t.to_c2 ? f.c2() : f.c1());
}

inline double bisect(const RealizeTarget& t, double lo, double hi, double glo, const RealizeOptions& opt) {
    for (std::size_t i = 0; i < opt.bisection_steps && hi - lo > 0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double gm = *defect(t, mid);
        if (gm == 0.0) return mid;
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    const double glo2 = std::abs(*defect(t, lo)), ghi = std::abs(*defect(t, hi));
    return glo2 <= ghi ? lo : hi;
}

inline Realization check_root(const RealizeTarget& t, double a, const RealizeOptions& opt) {
    const CubicMap f(a);
    Realization r;
    r.a = a;
    r.defect = std::abs(*defect(t, a));
    r.c1_itinerary = itinerary(f, f.c1(), t.period, opt.eps);
    r.c2_itinerary = itinerary(f, f.c2(), t.period, opt.eps);
    return r;
}

inline bool matches(const RealizeTarget& t, const Realization& r, double tol) {
    return r.defect < tol && r.c1_itinerary.word() == t.c1_block && r.c2_itinerary.word() == t.c2_block;
}

}  // namespace detail

/// Root of the defect inside [a_lo, a_hi], which must bracket a sign change.
/// The root must carry the target itinerary.
inline Realization realize_in(const KneadingData& target, double a_lo, double a_hi,
                              const RealizeOptions& opt = {}) {
    const auto t = detail::realize_target(target);
    const auto glo = detail::defect(t, a_lo), ghi = detail::defect(t, a_hi);
    if (!glo || !ghi || (*glo < 0) == (*ghi < 0))
        throw Error(ErrorCode::NoBracket, "no sign change of the defect on the given interval");
    const auto r = detail::check_root(t, detail::bisect(t, a_lo, a_hi, *glo, opt), opt);
    if (r.defect >= opt.tol)
        throw Error(ErrorCode::NonConvergence, "bisection stalled at defect " + std::to_string(r.defect));
    if (!detail::matches(t, r, opt.tol))
        throw Error(ErrorCode::ItineraryMismatch,
                    "root at a=" + std::to_string(r.a) + " has itinerary " + r.c1_itinerary.word() +
                        " instead of " + t.c1_block);
    return r;
}

/// Scans a over (1, 4] and bisects every sign change of the defect
/// f^p(c1) - c1 (pairs) or f^p(c1) - c2 (doubly stable blocks), returning
/// the first root whose itineraries match the target.
inline Realization realize(const KneadingData& target, const RealizeOptions& opt = {}) {
    const auto t = detail::realize_target(target);
    if (opt.scan < 1) throw Error(ErrorCode::NoBracket, "empty scan grid");
    const double step = 3.0 / static_cast<double>(opt.scan);
    double prev_a = 1.0 + step;
    auto prev_g = detail::defect(t, prev_a);
    for (std::size_t i = 2; i <= opt.scan; ++i) {
        const double a = i == opt.scan ? 4.0 : 1.0 + step * static_cast<double>(i);
        const auto g = detail::defect(t, a);
        if (prev_g && g && (*prev_g == 0.0 || (*prev_g < 0) != (*g < 0))) {
            const double root = *prev_g == 0.0 ? prev_a : detail::bisect(t, prev_a, a, *prev_g, opt);
            const auto r = detail::check_root(t, root, opt);
            if (detail::matches(t, r, opt.tol)) return r;
        }
        prev_a = a;
        prev_g = g;
    }
    if (prev_g && *prev_g == 0.0) {
        const auto r = detail::check_root(t, prev_a, opt);
        if (detail::matches(t, r, opt.tol)) return r;
    }
    throw Error(ErrorCode::NoBracket, "no root with itinerary " + t.c1_block + " on the scanned grid");
}

struct KneadingSample {
    double a;
    Sequence c1_itinerary;
};

/// Kneading sequences of c1 along a grid, for the monotonicity probe.
inline std::vector<KneadingSample> kneading_scan(double a_lo, double a_hi, std::size_t steps, std::size_t n,
                                                 double eps = 1e-10) {
    std::vector<KneadingSample> out;
    for (std::size_t i = 0; i <= steps; ++i) {
        const double a = a_lo + (a_hi - a_lo) * static_cast<double>(i) / static_cast<double>(steps);
        const CubicMap f(a);
        out.push_back({a, itinerary(f, f.c1(), n, eps)});
    }
    return out;
}

}  // namespace kneading
