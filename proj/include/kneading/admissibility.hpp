#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "kneading/kneading_data.hpp"

namespace kneading {

/// sigma^i(x) <= x for every shift i.
inline bool is_admissible_unimodal(const Sequence& x) {
    if (x.alphabet() != Alphabet::unimodal || !x.periodic() || x.word().back() != 'c')
        throw Error(ErrorCode::MalformedKneading, "'" + x.word() + "' is not a periodic block ending in c");
    for (std::size_t i = 1; i < x.size(); ++i) {
        try {
            if (compare(shift(x, i), x) == std::strong_ordering::greater) return false;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::AmbiguousAfterCritical) return false;
            throw;
        }
    }
    return true;
}

/// Every orbit point W satisfies Q <= W <= P, with P the c1 and Q the c2
/// kneading sequence. Undecidable comparisons count as inadmissible.
inline bool is_admissible_bimodal(const KneadingData& d) {
    if (!d.is_bimodal())
        throw Error(ErrorCode::MalformedKneading, std::string(to_string(d.kind())) + " data is not bimodal");
    const Sequence p = d.c1_sequence();
    const Sequence q = d.c2_sequence();
    std::vector<const Sequence*> orbits{&d.first()};
    if (d.second()) orbits.push_back(&*d.second());
    try {
        for (const Sequence* o : orbits) {
            for (std::size_t i = 0; i < o->size(); ++i) {
                const Sequence w = shift(*o, i);
                if (compare(w, p) == std::strong_ordering::greater) return false;
                if (compare(w, q) == std::strong_ordering::less) return false;
            }
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::AmbiguousAfterCritical) return false;
        throw;
    }
    return true;
}

inline bool is_admissible(const KneadingData& d) {
    if (d.kind() == DataKind::unimodal) return is_admissible_unimodal(d.first());
    if (d.is_bimodal()) return is_admissible_bimodal(d);
    throw Error(ErrorCode::TypeMismatch, "admissibility of G elements is decided by factor decoding");
}

/// Membership in the diagonal set: symmetric and admissible.
inline bool is_in_d(const KneadingData& d) {
    return d.is_bimodal() && d.is_symmetric() && is_admissible_bimodal(d);
}

/// The c1 block lies at or below R M M M ... . The first period decides it
/// because the block ends in a critical symbol that never matches M.
inline bool within_d1_box(const KneadingData& d) {
    const std::string& w = d.c1_sequence().word();
    const Sequence block(Alphabet::bimodal, w, Periodicity::finite);
    const Sequence bound(Alphabet::bimodal, "R" + std::string(w.size() - 1, 'M'), Periodicity::finite);
    return compare(block, bound) != std::strong_ordering::greater;
}

// ---------------------------------------------------------------------------
// Table of admissible pairs

/// Datum formed by a row word and the conjugate of a column word, or nothing
/// when the endings do not combine (A with A, B with B).
inline std::optional<KneadingData> table_cell_datum(const Sequence& row, const Sequence& col_source) {
    const char re = row.word().back(), ce = col_source.word().back();
    if (re != ce) return std::nullopt;
    const Sequence col = conjugate(col_source);
    if (re == 'A') return KneadingData::pair(row, col);
    return KneadingData::doubly_stable(
        Sequence(Alphabet::bimodal, row.word() + col.word(), Periodicity::periodic));
}

struct KneadingTable {
    std::vector<Sequence> rows;  // c1 words, ascending
    std::vector<std::vector<bool>> cells;

    std::size_t size() const noexcept { return rows.size(); }
    Sequence column(std::size_t j) const { return conjugate(rows[j]); }
    bool admissible(std::size_t i, std::size_t j) const { return cells[i][j]; }
    /// Diagonal cells carry symmetric data.
    bool symmetric(std::size_t i, std::size_t j) const noexcept { return i == j; }
};

namespace detail {

inline void extend_words(std::string& cur, std::size_t left, std::vector<std::string>& out) {
    out.push_back(cur);
    if (left == 0) return;
    for (char c : {'L', 'M', 'R'}) {
        cur.push_back(c);
        extend_words(cur, left - 1, out);
        cur.pop_back();
    }
}

inline KneadingTable build_table(std::vector<Sequence> rows) {
    std::sort(rows.begin(), rows.end(), [](const Sequence& a, const Sequence& b) { return less(a, b); });
    KneadingTable t;
    t.rows = std::move(rows);
    t.cells.assign(t.rows.size(), std::vector<bool>(t.rows.size(), false));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.rows.size(); ++j)
            if (auto d = table_cell_datum(t.rows[i], t.rows[j])) t.cells[i][j] = is_admissible_bimodal(*d);
    return t;
}

}  // namespace detail

/// All c1 words R w X (X in {A,B}, |w| <= max_len - 2) that admit at least
/// one partner, ordered ascending; cell (i,j) pairs row i with the conjugate
/// of row j.
inline KneadingTable enumerate_kneading_table(std::size_t max_len) {
    if (max_len < 2) throw Error(ErrorCode::MalformedKneading, "max_len must be at least 2");
    std::vector<std::string> middles;
    std::string cur;
    detail::extend_words(cur, max_len - 2, middles);
    std::vector<Sequence> candidates;
    for (const auto& m : middles)
        for (char end : {'A', 'B'})
            candidates.emplace_back(Alphabet::bimodal, "R" + m + end, Periodicity::periodic);
    const auto full = detail::build_table(candidates);
    std::vector<Sequence> kept;
    for (std::size_t i = 0; i < full.size(); ++i)
        if (std::find(full.cells[i].begin(), full.cells[i].end(), true) != full.cells[i].end())
            kept.push_back(full.rows[i]);
    return detail::build_table(std::move(kept));
}

/// Sub-table on the given rows (in the given order).
inline KneadingTable restrict_table(const KneadingTable& t, const std::vector<Sequence>& rows) {
    std::vector<std::size_t> idx;
    for (const auto& r : rows) {
        auto it = std::find(t.rows.begin(), t.rows.end(), r);
        if (it == t.rows.end())
            throw Error(ErrorCode::NotAdmissible, "row '" + r.word() + "' is not in the table");
        idx.push_back(static_cast<std::size_t>(it - t.rows.begin()));
    }
    KneadingTable out;
    out.rows = rows;
    out.cells.assign(rows.size(), std::vector<bool>(rows.size(), false));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out.cells[i][j] = t.cells[idx[i]][idx[j]];
    return out;
}

}  // namespace kneading
