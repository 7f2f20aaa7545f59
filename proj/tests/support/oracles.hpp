#pragma once

// Independent reference computations used only by the tests. None of them
// calls into the library routine it checks.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "golden_data.hpp"
#include "kneading/kneading.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>;
using boost::multiprecision::cpp_int;

inline Grid to_grid(const kneading::TransitionMatrix& m) { return m.rows(); }

template <std::size_t N>
Grid from_strings(const std::array<std::string_view, N>& rows) {
    Grid g;
    for (auto r : rows) {
        std::vector<int> row;
        for (char c : r) row.push_back(c == '1');
        g.push_back(row);
    }
    return g;
}

// Ordering by theta weights: each symbol contributes its doubled position
// (L=2, A=3, M=4, B=5, R=6) times the sign of the prefix, and words compare
// lexicographically on those weights.
inline std::vector<int> theta_weights(const std::string& period, std::size_t n) {
    std::vector<int> out;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        const char c = period[j % period.size()];
        int w = 0, e = 0;
        switch (c) {
            case 'L': w = 2; e = 1; break;
            case 'A': w = 3; e = 0; break;
            case 'M': w = 4; e = -1; break;
            case 'B': w = 5; e = 0; break;
            case 'R': w = 6; e = 1; break;
            default: break;
        }
        out.push_back(sign * w);
        sign *= e;
    }
    return out;
}

inline std::string rotate(const std::string& w, std::size_t k) {
    k %= w.size();
    return w.substr(k) + w.substr(0, k);
}

// Transition matrix from the periodic words of a bimodal datum, sorted by
// theta weights; row i spans the intervals between the images of its ends.
inline Grid transition_matrix(const std::vector<std::string>& orbits) {
    std::vector<std::string> pts;
    std::size_t horizon = 1;
    for (const auto& o : orbits) {
        horizon = std::lcm(horizon, o.size());
        for (std::size_t i = 0; i < o.size(); ++i) pts.push_back(rotate(o, i));
    }
    horizon *= 2;
    std::sort(pts.begin(), pts.end(), [&](const std::string& a, const std::string& b) {
        return theta_weights(a, horizon) < theta_weights(b, horizon);
    });
    std::vector<std::size_t> img;
    for (const auto& p : pts) {
        const auto target = rotate(p, 1);
        img.push_back(static_cast<std::size_t>(std::find(pts.begin(), pts.end(), target) - pts.begin()));
    }
    const std::size_t n = pts.size() - 1;
    Grid g(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto lo = std::min(img[i], img[i + 1]), hi = std::max(img[i], img[i + 1]);
        for (std::size_t j = lo; j < hi; ++j) g[i][j] = 1;
    }
    return g;
}

inline Grid transition_matrix(const kneading::KneadingData& d) {
    std::vector<std::string> orbits{d.first().word()};
    if (d.second()) orbits.push_back(d.second()->word());
    return transition_matrix(orbits);
}

// Unimodal words map onto the bimodal weights through l -> L, c -> A, r -> M,
// which keeps both the base order and the orientation signs.
inline Grid unimodal_transition_matrix(const std::string& u) {
    std::string w;
    for (char c : u) w.push_back(c == 'l' ? 'L' : c == 'c' ? 'A' : 'M');
    return transition_matrix(std::vector<std::string>{w});
}

// Fraction-free Gaussian elimination.
inline cpp_int bareiss_det(std::vector<std::vector<cpp_int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    cpp_int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// det(I - tA) at an integer t.
inline cpp_int det_i_minus_ta(const Grid& a, long t) {
    const std::size_t n = a.size();
    std::vector<std::vector<cpp_int>> m(n, std::vector<cpp_int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? 1 : 0) - t * a[i][j];
    return bareiss_det(std::move(m));
}

// Primitive iff strongly connected with period one. The period is the gcd of
// level[u] + 1 - level[v] over every edge, with levels from one BFS.
inline bool is_primitive(const Grid& a) {
    const std::size_t n = a.size();
    if (n == 0) return false;
    auto reach = [&](bool transposed) {
        std::vector<long> level(n, -1);
        std::queue<std::size_t> q;
        level[0] = 0;
        q.push(0);
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v)
                if ((transposed ? a[v][u] : a[u][v]) && level[v] < 0) {
                    level[v] = level[u] + 1;
                    q.push(v);
                }
        }
        return level;
    };
    const auto fwd = reach(false), bwd = reach(true);
    for (std::size_t i = 0; i < n; ++i)
        if (fwd[i] < 0 || bwd[i] < 0) return false;
    long g = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (a[u][v]) g = std::gcd(g, std::abs(fwd[u] + 1 - fwd[v]));
    return g == 1;
}

inline Grid principal(const Grid& a, const std::vector<std::size_t>& keep) {
    Grid out(keep.size(), std::vector<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) out[i][j] = a[keep[i]][keep[j]];
    return out;
}

// Every proper principal submatrix, sizes 1 through n-1, checked by the graph test.
inline bool is_irreducibly_complex(const Grid& a) {
    const std::size_t n = a.size();
    if (!is_primitive(a)) return false;
    for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1UL) keep.push_back(i);
        if (is_primitive(principal(a, keep))) return false;
    }
    return true;
}

// Largest eigenvalue modulus from a dense eigen-solver, taken per strongly
// connected class (closure by reachability) so that every Perron root the
// solver sees is simple and therefore well conditioned.
inline double spectral_radius(const Grid& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) reach[i][j] = a[i][j] != 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = true;
    double best = 0.0;
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> cls;
        for (std::size_t j = 0; j < n; ++j)
            if (j == i || (reach[i][j] && reach[j][i])) cls.push_back(j);
        for (auto j : cls) done[j] = true;
        const auto m = static_cast<Eigen::Index>(cls.size());
        Eigen::MatrixXd b(m, m);
        for (Eigen::Index r = 0; r < m; ++r)
            for (Eigen::Index c = 0; c < m; ++c) b(r, c) = a[cls[r]][cls[c]];
        Eigen::EigenSolver<Eigen::MatrixXd> es(b, false);
        best = std::max(best, es.eigenvalues().cwiseAbs().maxCoeff());
    }
    return best;
}

}  // namespace oracle
