#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "kneading/markov.hpp"
#include "kneading/star_product.hpp"

namespace kneading {

// Assembly of A_{V*W} from A_V and the factor's unimodal matrix.
//
// Every orbit point of V becomes a cluster of K points, one per orbit point
// of the factor's unimodal word u, listed in u's order either as is or
// reversed (the cluster's orientation). The c1 cluster and its mirror fold
// positions by the shift of u; every other step keeps the position. From
// that point map the matrix is built in two passes:
//   1. stencils: identity or anti-identity on the internal rows of ordinary
//      clusters, the re-oriented A_u on the two critical clusters, and the
//      gap rows between clusters spread along the row of A_V;
//   2. continuity: each row is completed to the hull of its endpoint images.

/// Checks that (v, w) is a legal configuration and names the product type.
inline StarType legal_factor_pair(const KneadingData& v, const KneadingData& w) {
    if (!v.is_bimodal() || !is_in_d(v))
        throw Error(ErrorCode::IllegalFactorPair, v.to_string() + " is not in D");
    if (v.kind() == DataKind::bimodal_pair && w.kind() == DataKind::unimodal) {
        if (!is_admissible_unimodal(w.first()))
            throw Error(ErrorCode::IllegalFactorPair, w.to_string() + " is not admissible");
        return StarType::type1;
    }
    if (v.kind() == DataKind::bimodal_doubly_stable && w.is_g_factor()) {
        if (!is_in_g(w)) throw Error(ErrorCode::IllegalFactorPair, w.to_string() + " is not in G");
        return w.kind() == DataKind::g_doubly ? StarType::type2 : StarType::type3;
    }
    throw Error(ErrorCode::IllegalFactorPair,
                std::string("no product of ") + to_string(v.kind()) + " with " + to_string(w.kind()));
}

inline TransitionMatrix assemble_otimes(const KneadingData& v, const KneadingData& w) {
    const auto type = legal_factor_pair(v, w);
    const Sequence u = type == StarType::type1 ? w.first() : g_factor_source(w);

    const auto pts_v = markov_partition(v);
    const auto img_v = shift_images(pts_v);
    const auto a_v = transition_matrix(v);
    const auto pts_u = markov_partition(KneadingData::unimodal(u));
    const auto img_u = shift_images(pts_u);
    const std::size_t n_v = pts_v.size(), k = pts_u.size();
    const std::string p1 = v.half_block();
    const std::size_t p = p1.size() + 1;
    if (n_v != 2 * p) throw Error(ErrorCode::AssemblyMismatch, "unexpected orbit size of the left factor");

    // Clusters visited by c1 before it returns: a[0] = c1, a[j] = f^j(c1).
    std::vector<std::size_t> a(p);
    for (std::size_t i = 0; i < n_v; ++i)
        if (pts_v[i].word().front() == 'A') a[0] = i;
    for (std::size_t j = 1; j < p; ++j) a[j] = img_v[a[j - 1]];

    // Orientation of each cluster and its successor cluster.
    int full = 1;
    for (char c : p1) full *= epsilon(c);
    const int h = type == StarType::type1 ? 1 : -1;
    std::vector<int> orient(n_v, 0);
    std::vector<std::size_t> next(n_v, 0);
    int prefix = 1;
    for (std::size_t j = 0; j < p; ++j) {
        const int o = j == 0 ? full * h : prefix;
        if (j >= 1) prefix *= epsilon(p1[j - 1]);
        orient[a[j]] = o;
        orient[n_v - 1 - a[j]] = -o;
        const bool last = j + 1 == p;
        const std::size_t succ = last ? a[0] : a[j + 1];
        const bool flip = last && type != StarType::type1;
        next[a[j]] = flip ? n_v - 1 - succ : succ;
        next[n_v - 1 - a[j]] = flip ? succ : n_v - 1 - succ;
    }
    for (int o : orient)
        if (o == 0) throw Error(ErrorCode::AssemblyMismatch, "clusters do not cover the orbit of the left factor");

    const auto rank_of = [&](std::size_t c, std::size_t pos) { return orient[c] > 0 ? pos : k - 1 - pos; };
    const auto global = [&](std::size_t c, std::size_t pos) { return c * k + rank_of(c, pos); };
    const auto critical = [&](std::size_t c) { return c == a[0] || c == n_v - 1 - a[0]; };

    const std::size_t total = n_v * k;
    std::vector<std::size_t> img(total);
    for (std::size_t c = 0; c < n_v; ++c)
        for (std::size_t pos = 0; pos < k; ++pos)
            img[global(c, pos)] = global(next[c], critical(c) ? img_u[pos] : pos);

    TransitionMatrix m(total - 1);

    // Pass 1: stencils.
    std::optional<TransitionMatrix> a_u;
    if (k >= 2) a_u = transition_matrix(KneadingData::unimodal(u));
    for (std::size_t c = 0; c < n_v; ++c) {
        const std::size_t t = next[c];
        for (std::size_t q = 0; q + 1 < k; ++q) {
            const std::size_t row = c * k + q;
            const std::size_t x0 = orient[c] > 0 ? q : k - 1 - q;
            const std::size_t x1 = orient[c] > 0 ? q + 1 : k - 2 - q;
            if (!critical(c)) {
                // Position is kept: one column, diagonal or anti-diagonal.
                const std::size_t r0 = rank_of(t, x0), r1 = rank_of(t, x1);
                m.set(row, t * k + std::min(r0, r1), 1);
                continue;
            }
            const std::size_t iu = std::min(x0, x1);
            for (std::size_t ju = 0; ju + 1 < k; ++ju)
                if ((*a_u)(iu, ju)) m.set(row, t * k + std::min(rank_of(t, ju), rank_of(t, ju + 1)), 1);
        }
    }
    for (std::size_t g = 0; g + 1 < n_v; ++g) {
        const std::size_t row = g * k + k - 1;
        std::size_t lo = n_v, hi = 0;
        for (std::size_t j = 0; j + 1 < n_v; ++j) {
            if (!a_v(g, j)) continue;
            m.set(row, j * k + k - 1, 1);
            lo = std::min(lo, j);
            hi = std::max(hi, j);
        }
        for (std::size_t c = lo + 1; c <= hi; ++c)
            for (std::size_t q = 0; q + 1 < k; ++q) m.set(row, c * k + q, 1);
    }

    // Pass 2: continuity.
    for (std::size_t i = 0; i + 1 < total; ++i) {
        const std::size_t lo = std::min(img[i], img[i + 1]), hi = std::max(img[i], img[i + 1]);
        for (std::size_t j = 0; j + 1 < total; ++j) {
            const bool inside = j >= lo && j < hi;
            if (m(i, j) && !inside)
                throw Error(ErrorCode::AssemblyMismatch,
                            "stencil entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") lies outside the image of its interval");
            if (inside) m.set(i, j, 1);
        }
    }
    return m;
}

/// Assembled product, diffed against the matrix of the star product.
inline TransitionMatrix otimes(const KneadingData& v, const KneadingData& w) {
    auto assembled = assemble_otimes(v, w);
    const auto direct = transition_matrix(star(v, w));
    if (!(assembled == direct)) {
        std::ostringstream os;
        os << "assembled and direct matrices differ";
        if (assembled.order() != direct.order()) {
            os << " in order (" << assembled.order() << " vs " << direct.order() << ")";
        } else {
            int shown = 0;
            for (std::size_t i = 0; i < direct.order() && shown < 8; ++i)
                for (std::size_t j = 0; j < direct.order() && shown < 8; ++j)
                    if (assembled(i, j) != direct(i, j)) {
                        os << " (" << i << "," << j << "): " << assembled(i, j) << "!=" << direct(i, j);
                        ++shown;
                    }
        }
        throw Error(ErrorCode::AssemblyMismatch, os.str());
    }
    assembled.set_labels(direct.labels());
    return assembled;
}

}  // namespace kneading
