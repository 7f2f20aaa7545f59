#pragma once

#include <vector>

#include "kneading/markov.hpp"
#include "kneading/trees.hpp"

namespace kneading {

// Block form of A_S for a D1 node with half period p, after reordering the
// intervals as (middle interval, left block reversed, right block):
//
//     [ 1  W1   W2  ]
//     [ 0  0    A_P ]
//     [ 0  A_P  0   ]
//
// with A_P the matrix of the unimodal word at the same tree address.
struct DecompositionReport {
    std::vector<std::size_t> permutation;  // new position -> old interval index
    TransitionMatrix permuted;
    std::vector<int> w1, w2;
    TransitionMatrix upper_right, lower_left;
    TransitionMatrix a_p;
    bool match = false;
};

namespace detail {

inline TransitionMatrix block(const TransitionMatrix& m, std::size_t r0, std::size_t c0, std::size_t n) {
    TransitionMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b.set(i, j, m(r0 + i, c0 + j));
    return b;
}

}  // namespace detail

inline DecompositionReport decompose(const KneadingData& d) {
    if (!is_in_d1(d)) throw Error(ErrorCode::NotInD1, d.to_string() + " is not a node of D1");
    const auto a_s = transition_matrix(d);
    const std::size_t n = a_s.order();
    const std::size_t p = (n + 1) / 2;
    const std::size_t k = p - 1;  // size of each side block

    DecompositionReport r;
    r.permutation.push_back(p - 1);
    for (std::size_t i = p - 1; i-- > 0;) r.permutation.push_back(i);
    for (std::size_t i = p; i < n; ++i) r.permutation.push_back(i);

    r.permuted = TransitionMatrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.permuted.set(i, j, a_s(r.permutation[i], r.permutation[j]));

    const auto& b = r.permuted;
    for (std::size_t j = 0; j < k; ++j) {
        r.w1.push_back(b(0, 1 + j));
        r.w2.push_back(b(0, 1 + k + j));
    }
    r.upper_right = detail::block(b, 1, 1 + k, k);
    r.lower_left = detail::block(b, 1 + k, 1, k);
    r.a_p = transition_matrix(KneadingData::unimodal(d1_to_unimodal(d)));

    bool ok = b(0, 0) == 1 && r.upper_right == r.a_p && r.lower_left == r.a_p;
    for (std::size_t i = 1; i < n && ok; ++i) ok = b(i, 0) == 0;
    ok = ok && detail::block(b, 1, 1, k) == TransitionMatrix(k) &&
         detail::block(b, 1 + k, 1 + k, k) == TransitionMatrix(k);
    if (!ok)
        throw Error(ErrorCode::BlockMismatch,
                    "permuted matrix of " + d.to_string() + " does not have the expected block form");
    r.match = true;
    return r;
}

struct FactorizationReport {
    IntPolynomial d_s;                   // det(I - t A_S)
    IntPolynomial d_p;                   // det(I - t A_P)
    std::vector<IntPolynomial> factors;  // 1 - t, d_P(t), d_P(-t)
    IntPolynomial product;
    bool verified = false;
};

/// d_S(t) = (1 - t) d_P(t) d_P(-t), compared exactly.
inline FactorizationReport verify_factorization(const KneadingData& d) {
    if (!is_in_d1(d)) throw Error(ErrorCode::NotInD1, d.to_string() + " is not a node of D1");
    FactorizationReport r;
    r.d_s = char_poly(transition_matrix(d));
    r.d_p = char_poly(transition_matrix(KneadingData::unimodal(d1_to_unimodal(d))));
    r.factors = {IntPolynomial{1, -1}, r.d_p, r.d_p.reflect()};
    r.product = r.factors[0] * r.factors[1] * r.factors[2];
    r.verified = r.product == r.d_s;
    return r;
}

}  // namespace kneading
