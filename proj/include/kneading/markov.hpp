#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kneading/admissibility.hpp"
#include "kneading/polynomial.hpp"

namespace kneading {

/// Square 0/1 matrix over an ordered Markov partition. Labels are the two
/// orbit points bounding each interval; matrices built by hand have none.
class TransitionMatrix {
public:
    TransitionMatrix() = default;
    explicit TransitionMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

    TransitionMatrix(std::initializer_list<std::initializer_list<int>> rows)
        : TransitionMatrix(rows.size()) {
        std::size_t i = 0;
        for (const auto& r : rows) {
            if (r.size() != n_) throw Error(ErrorCode::TypeMismatch, "matrix is not square");
            std::size_t j = 0;
            for (int v : r) set(i, j++, v);
            ++i;
        }
    }

    static TransitionMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        TransitionMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw Error(ErrorCode::TypeMismatch, "matrix is not square");
            for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    std::size_t order() const noexcept { return n_; }
    int operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, int v) {
        if (v != 0 && v != 1) throw Error(ErrorCode::TypeMismatch, "entries must be 0 or 1");
        a_[i * n_ + j] = static_cast<std::uint8_t>(v);
    }

    const std::vector<std::pair<Sequence, Sequence>>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::pair<Sequence, Sequence>> l) { labels_ = std::move(l); }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
        return out;
    }

    /// Principal submatrix on the given (sorted) indices.
    TransitionMatrix principal(const std::vector<std::size_t>& keep) const {
        TransitionMatrix m(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j) m.set(i, j, (*this)(keep[i], keep[j]));
        return m;
    }

    /// Entries only; labels do not take part.
    friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> a_;
    std::vector<std::pair<Sequence, Sequence>> labels_;
};

inline bool has_consecutive_ones(const TransitionMatrix& m) {
    for (std::size_t i = 0; i < m.order(); ++i) {
        int runs = 0;
        for (std::size_t j = 0; j < m.order(); ++j)
            if (m(i, j) && (j == 0 || !m(i, j - 1))) ++runs;
        if (runs != 1) return false;
    }
    return true;
}

inline std::string matrix_to_text(const TransitionMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) out += m(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline std::string matrix_to_csv(const TransitionMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (j) out += ',';
            out += m(i, j) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Partition and matrix

namespace detail {

inline std::vector<Sequence> orbit_points(const KneadingData& d) {
    std::vector<const Sequence*> orbits{&d.first()};
    if (d.second()) orbits.push_back(&*d.second());
    std::vector<Sequence> pts;
    for (const Sequence* o : orbits)
        for (std::size_t i = 0; i < o->size(); ++i) pts.push_back(shift(*o, i));
    return pts;
}

}  // namespace detail

/// Every shift of the kneading sequence(s), ascending.
inline std::vector<Sequence> markov_partition(const KneadingData& d) {
    if (d.is_g_factor())
        throw Error(ErrorCode::TypeMismatch, "G elements carry no Markov partition of their own");
    if (!is_admissible(d)) throw Error(ErrorCode::NotAdmissible, d.to_string() + " is not admissible");
    auto pts = detail::orbit_points(d);
    std::sort(pts.begin(), pts.end(), [](const Sequence& a, const Sequence& b) { return less(a, b); });
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (compare(pts[i], pts[i + 1]) == std::strong_ordering::equal)
            throw Error(ErrorCode::DuplicatePoint, "orbit point " + pts[i].word() + " repeats");
    return pts;
}

/// Image of each sorted point under the shift, as an index into the same list.
inline std::vector<std::size_t> shift_images(const std::vector<Sequence>& pts) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i].word(), i);
    std::vector<std::size_t> img;
    img.reserve(pts.size());
    for (const auto& p : pts) img.push_back(index.at(shift(p, 1).word()));
    return img;
}

/// Row i covers the intervals between the images of the endpoints of
/// interval i. Orientation does not matter for the hull.
inline TransitionMatrix transition_matrix(const KneadingData& d) {
    const auto pts = markov_partition(d);
    if (pts.size() < 2)
        throw Error(ErrorCode::DegeneratePartition, d.to_string() + " has fewer than two orbit points");
    const auto img = shift_images(pts);
    const std::size_t n = pts.size() - 1;
    TransitionMatrix m(n);
    std::vector<std::pair<Sequence, Sequence>> labels;
    for (std::size_t i = 0; i < n; ++i) {
        const auto lo = std::min(img[i], img[i + 1]), hi = std::max(img[i], img[i + 1]);
        if (lo == hi) throw Error(ErrorCode::DegeneratePartition, "interval collapses under the map");
        for (std::size_t j = lo; j < hi; ++j) m.set(i, j, 1);
        labels.emplace_back(pts[i], pts[i + 1]);
    }
    m.set_labels(std::move(labels));
    return m;
}

/// det(I - tA) with exact integers (Faddeev-LeVerrier; every division is exact).
inline IntPolynomial char_poly(const TransitionMatrix& a) {
    const std::size_t n = a.order();
    using Mat = std::vector<std::vector<BigInt>>;
    Mat m(n, std::vector<BigInt>(n, 0));
    std::vector<BigInt> coef{1};
    for (std::size_t k = 1; k <= n; ++k) {
        // m <- A*m + c_{k-1} I, then c_k = -tr(A m) / k
        Mat next(n, std::vector<BigInt>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (a(i, l))
                    for (std::size_t j = 0; j < n; ++j) next[i][j] += m[l][j];
        for (std::size_t i = 0; i < n; ++i) next[i][i] += coef.back();
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (a(i, l)) tr += next[l][i];
        coef.push_back(-tr / static_cast<long>(k));
        m = std::move(next);
    }
    return IntPolynomial(std::move(coef));
}

}  // namespace kneading
