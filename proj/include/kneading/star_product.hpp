#pragma once

#include <array>
#include <string>
#include <string_view>

#include "kneading/admissibility.hpp"
#include "kneading/trees.hpp"

namespace kneading {

enum class Parity { even, odd };

inline Parity parity_of(std::string_view block) noexcept {
    return m_parity(block) ? Parity::odd : Parity::even;
}

/// Symbols inserted between copies of the left factor's blocks, indexed by
/// the symbol of the right factor. Type-1 tables insert one symbol, Type-2
/// tables a (B-side, A-side) pair.
struct SubstitutionTable {
    Parity parity;
    std::string_view keys;
    std::array<std::string_view, 7> values;

    std::string_view lookup(char z) const {
        const auto pos = keys.find(z);
        if (pos == std::string_view::npos)
            throw Error(ErrorCode::UnsupportedSymbol,
                        std::string("no substitution for '") + z + "' in this table");
        return values[pos];
    }
};

inline const SubstitutionTable& type1_a_table(Parity p) {
    static const SubstitutionTable even{Parity::even, "rcl", {"M", "A", "L"}};
    static const SubstitutionTable odd{Parity::odd, "rcl", {"L", "A", "M"}};
    return p == Parity::even ? even : odd;
}

inline const SubstitutionTable& type1_b_table(Parity p) {
    static const SubstitutionTable even{Parity::even, "rcl", {"M", "B", "R"}};
    static const SubstitutionTable odd{Parity::odd, "rcl", {"R", "B", "M"}};
    return p == Parity::even ? even : odd;
}

inline const SubstitutionTable& type2_table(Parity p) {
    static const SubstitutionTable even{
        Parity::even, "LAMBRCU", {"MM", "MA", "ML", "BL", "RL", "RA", "RM"}};
    static const SubstitutionTable odd{
        Parity::odd, "LAMBRCU", {"RL", "RA", "RM", "BM", "MM", "MA", "ML"}};
    return p == Parity::even ? even : odd;
}

enum class StarType { type1 = 1, type2 = 2, type3 = 3 };

namespace detail {

struct DoublyHalves {
    std::string p1, q1;
    Parity parity;
};

inline DoublyHalves doubly_halves(const KneadingData& f) {
    if (f.kind() != DataKind::bimodal_doubly_stable)
        throw Error(ErrorCode::TypeMismatch, "left factor must be doubly stable");
    const std::string& s = f.first().word();
    const std::size_t b = f.b_index();
    DoublyHalves h{s.substr(0, b), s.substr(b + 1, s.size() - b - 2), Parity::even};
    if (h.p1.size() != h.q1.size())
        throw Error(ErrorCode::TypeMismatch, "doubly stable halves differ in length");
    const Parity pp = parity_of(h.p1), pq = parity_of(h.q1);
    if (pp != pq) throw Error(ErrorCode::UnsupportedParity, "P and its partner block have opposite parity");
    h.parity = pp;
    return h;
}

inline Sequence bimodal_periodic(std::string w) {
    return Sequence(Alphabet::bimodal, std::move(w), Periodicity::periodic);
}

}  // namespace detail

/// (P^(p-1)A, Q^(p-1)B) * (X,X): copies of P interleaved with the Type-1
/// insertions for X, closed by A; likewise for Q with B.
inline KneadingData star_type1(const KneadingData& f, const KneadingData& g) {
    if (f.kind() != DataKind::bimodal_pair)
        throw Error(ErrorCode::TypeMismatch, "Type 1 needs a bimodal pair on the left");
    if (g.kind() != DataKind::unimodal)
        throw Error(ErrorCode::TypeMismatch, "Type 1 needs a duplicated unimodal pair on the right");
    const std::string& pw = f.first().word();
    const std::string& qw = f.second()->word();
    const std::string p1 = pw.substr(0, pw.size() - 1), q1 = qw.substr(0, qw.size() - 1);
    const auto& ta = type1_a_table(parity_of(p1));
    const auto& tb = type1_b_table(parity_of(q1));
    const std::string& x = g.first().word();
    std::string a, b;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        a += p1;
        a += ta.lookup(x[i]);
        b += q1;
        b += tb.lookup(x[i]);
    }
    a += p1 + "A";
    b += q1 + "B";
    return KneadingData::pair(detail::bimodal_periodic(a), detail::bimodal_periodic(b));
}

/// P^(p-1)B Q^(p-1)A * X B Y D: one P..Q block pair per symbol of the G word.
inline KneadingData star_type2(const KneadingData& f, const KneadingData& g) {
    const auto h = detail::doubly_halves(f);
    if (g.kind() != DataKind::g_doubly)
        throw Error(ErrorCode::TypeMismatch, "Type 2 needs a doubled G word on the right");
    const std::string& z = g.first().word();
    if (z.back() != 'A' && z.back() != 'C')
        throw Error(ErrorCode::TypeMismatch, "G word must end in A or C");
    const auto& t = type2_table(h.parity);
    std::string out;
    for (char c : z) {
        const auto ins = t.lookup(c);
        out += h.p1;
        out += ins[0];
        out += h.q1;
        out += ins[1];
    }
    return KneadingData::doubly_stable(detail::bimodal_periodic(out));
}

/// Doubly stable left factor with a G pair (X, Y): the first component uses
/// the Type-2 tables on X, the second runs the tables on Y rotated so that
/// its B comes first, then rotates the result by one symbol.
inline KneadingData star_type3(const KneadingData& f, const KneadingData& g) {
    const auto h = detail::doubly_halves(f);
    if (g.kind() != DataKind::g_pair)
        throw Error(ErrorCode::TypeMismatch, "Type 3 needs a G pair on the right");
    const std::string& x = g.first().word();
    const std::string& y = g.second()->word();
    if (x.back() != 'A' && x.back() != 'C')
        throw Error(ErrorCode::TypeMismatch, "first G component must end in A or C");
    if (y.back() != 'B') throw Error(ErrorCode::TypeMismatch, "second G component must end in B");
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] == 'B')
            throw Error(ErrorCode::ForbiddenSymbol, "B inside the first G component", i);
    for (std::size_t i = 0; i + 1 < y.size(); ++i)
        if (y[i] == 'A' || y[i] == 'C')
            throw Error(ErrorCode::UnsupportedSymbol,
                        std::string("no second-component case for '") + y[i] + "'", i);
    const auto& t = type2_table(h.parity);
    std::string first;
    for (char c : x) {
        const auto ins = t.lookup(c);
        first += h.p1;
        first += ins[0];
        first += h.q1;
        first += ins[1];
    }
    const std::string rotated = y.back() + y.substr(0, y.size() - 1);
    std::string raw;
    for (char c : rotated) {
        const auto ins = t.lookup(c);
        raw += ins[0];
        raw += h.q1;
        raw += ins[1];
        raw += h.p1;
    }
    const std::string second = raw.substr(1) + raw[0];
    return KneadingData::pair(detail::bimodal_periodic(first), detail::bimodal_periodic(second));
}

inline StarType star_type_of(const KneadingData& f, const KneadingData& g) {
    if (f.kind() == DataKind::bimodal_pair) {
        if (g.kind() == DataKind::unimodal) return StarType::type1;
    } else if (f.kind() == DataKind::bimodal_doubly_stable) {
        if (g.kind() == DataKind::g_doubly) return StarType::type2;
        if (g.kind() == DataKind::g_pair) return StarType::type3;
    }
    if (g.is_bimodal())
        throw Error(ErrorCode::NotAFactor, g.to_string() + " is bimodal data, not a right factor");
    throw Error(ErrorCode::TypeMismatch,
                std::string("no product of ") + to_string(f.kind()) + " with " + to_string(g.kind()));
}

/// Validates both factors and dispatches on their kinds.
inline KneadingData star(const KneadingData& f, const KneadingData& g) {
    if (!f.is_bimodal()) throw Error(ErrorCode::TypeMismatch, "left factor must be bimodal");
    if (!is_in_d(f)) throw Error(ErrorCode::NotAdmissible, f.to_string() + " is not in D");
    if (g.is_bimodal())
        throw Error(ErrorCode::NotAFactor, g.to_string() + " is bimodal data, not a right factor");
    if (g.kind() == DataKind::unimodal) {
        if (!is_admissible_unimodal(g.first()))
            throw Error(ErrorCode::NotAFactor, g.first().word() + " is not admissible");
    } else {
        g_factor_source(g);
    }
    switch (star_type_of(f, g)) {
        case StarType::type1: return star_type1(f, g);
        case StarType::type2: return star_type2(f, g);
        case StarType::type3: return star_type3(f, g);
    }
    throw Error(ErrorCode::TypeMismatch, "unreachable");
}

}  // namespace kneading
