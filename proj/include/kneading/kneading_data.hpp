#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kneading/symbolic_core.hpp"

namespace kneading {

enum class DataKind { unimodal, bimodal_pair, bimodal_doubly_stable, g_pair, g_doubly };

inline const char* to_string(DataKind k) noexcept {
    switch (k) {
        case DataKind::unimodal: return "unimodal";
        case DataKind::bimodal_pair: return "bimodal-pair";
        case DataKind::bimodal_doubly_stable: return "bimodal-doubly-stable";
        case DataKind::g_pair: return "G-factor-pair";
        case DataKind::g_doubly: return "G-factor-doubly";
    }
    return "?";
}

/// Kneading data of one map: a unimodal block, a bimodal pair (P,Q), a
/// bimodal doubly stable block, or an element of the factor tree G.
///
/// Bimodal and unimodal words are periodic; G words are finite blocks
/// (a doubled word like UBA must not be folded to a shorter period).
class KneadingData {
public:
    static KneadingData unimodal(Sequence x) {
        if (x.alphabet() != Alphabet::unimodal || !x.periodic())
            throw Error(ErrorCode::MalformedKneading, "unimodal data needs a periodic lcr block");
        const auto& w = x.word();
        if (w.back() != 'c')
            throw Error(ErrorCode::MalformedKneading, "unimodal block '" + w + "' must end in c");
        if (w.find('c') != w.size() - 1)
            throw Error(ErrorCode::MalformedKneading, "unimodal block '" + w + "' has an interior c");
        return KneadingData(DataKind::unimodal, std::move(x), std::nullopt);
    }

    static KneadingData pair(Sequence p, Sequence q) {
        require_bimodal_block(p, 'A');
        require_bimodal_block(q, 'B');
        return KneadingData(DataKind::bimodal_pair, std::move(p), std::move(q));
    }

    static KneadingData symmetric_pair(Sequence p) {
        auto q = conjugate(p);
        return pair(std::move(p), std::move(q));
    }

    /// A block with exactly one interior B and final A. Symmetry is not
    /// required here; is_symmetric() reports it.
    static KneadingData doubly_stable(Sequence s) {
        if (s.alphabet() != Alphabet::bimodal || !s.periodic())
            throw Error(ErrorCode::MalformedKneading, "doubly stable data needs a periodic bimodal block");
        const auto& w = s.word();
        if (w.size() < 2 || w.back() != 'A')
            throw Error(ErrorCode::MalformedKneading, "doubly stable block '" + w + "' must end in A");
        std::size_t bs = 0;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == 'B') ++bs;
            else if (w[i] == 'A')
                throw Error(ErrorCode::MalformedKneading, "interior A in '" + w + "'", i);
        }
        if (bs != 1)
            throw Error(ErrorCode::MalformedKneading,
                        "doubly stable block '" + w + "' needs exactly one interior B");
        return KneadingData(DataKind::bimodal_doubly_stable, std::move(s), std::nullopt);
    }

    static KneadingData g_pair(Sequence x, Sequence y) {
        require_g_block(x, "AC");
        require_g_block(y, "B");
        return KneadingData(DataKind::g_pair, std::move(x), std::move(y));
    }

    static KneadingData g_doubly(Sequence z) {
        require_g_block(z, "AC");
        const auto& w = z.word();
        if (std::count(w.begin(), w.end() - 1, 'B') != 1)
            throw Error(ErrorCode::MalformedKneading, "G word '" + w + "' needs one interior B");
        return KneadingData(DataKind::g_doubly, std::move(z), std::nullopt);
    }

    DataKind kind() const noexcept { return kind_; }
    const Sequence& first() const noexcept { return first_; }
    const std::optional<Sequence>& second() const noexcept { return second_; }

    bool is_bimodal() const noexcept {
        return kind_ == DataKind::bimodal_pair || kind_ == DataKind::bimodal_doubly_stable;
    }
    bool is_g_factor() const noexcept {
        return kind_ == DataKind::g_pair || kind_ == DataKind::g_doubly;
    }

    /// Index of the interior B of a doubly stable block.
    std::size_t b_index() const {
        require(kind_ == DataKind::bimodal_doubly_stable, "b_index");
        return first_.word().find('B');
    }

    /// Kneading sequence of c1 (the maximal one).
    Sequence c1_sequence() const {
        require(is_bimodal(), "c1_sequence");
        return first_;
    }

    /// Kneading sequence of c2; for a doubly stable block this is the shift
    /// that starts right after B.
    Sequence c2_sequence() const {
        require(is_bimodal(), "c2_sequence");
        if (kind_ == DataKind::bimodal_pair) return *second_;
        return shift(first_, b_index() + 1);
    }

    bool is_symmetric() const {
        switch (kind_) {
            case DataKind::bimodal_pair: return conjugate(first_) == *second_;
            case DataKind::bimodal_doubly_stable: {
                const auto& w = first_.word();
                const std::size_t p = b_index() + 1;
                return 2 * p == w.size() && conjugate(first_) == shift(first_, p);
            }
            default: return false;
        }
    }

    /// P^(p-1): the c1 block before its first critical symbol.
    std::string half_block() const {
        require(is_bimodal(), "half_block");
        const auto& w = first_.word();
        return kind_ == DataKind::bimodal_pair ? w.substr(0, w.size() - 1) : w.substr(0, b_index());
    }

    std::string to_string() const {
        if (second_) return "(" + first_.word() + "," + second_->word() + ")";
        return first_.word();
    }

    friend bool operator==(const KneadingData&, const KneadingData&) = default;

private:
    KneadingData(DataKind kind, Sequence first, std::optional<Sequence> second)
        : kind_(kind), first_(std::move(first)), second_(std::move(second)) {}

    void require(bool ok, const char* what) const {
        if (!ok)
            throw Error(ErrorCode::TypeMismatch,
                        std::string(what) + " is undefined for " + kneading::to_string(kind_) + " data");
    }

    static void require_bimodal_block(const Sequence& s, char end) {
        if (s.alphabet() != Alphabet::bimodal || !s.periodic())
            throw Error(ErrorCode::MalformedKneading, "pair components must be periodic bimodal blocks");
        const auto& w = s.word();
        if (w.back() != end)
            throw Error(ErrorCode::MalformedKneading,
                        "block '" + w + "' must end in " + std::string(1, end));
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (is_critical(w[i]))
                throw Error(ErrorCode::MalformedKneading, "interior critical symbol in '" + w + "'", i);
    }

    static void require_g_block(const Sequence& s, std::string_view ends) {
        if (s.alphabet() != Alphabet::g_factor || s.empty())
            throw Error(ErrorCode::MalformedKneading, "G data needs nonempty G-alphabet words");
        if (ends.find(s.word().back()) == std::string_view::npos)
            throw Error(ErrorCode::MalformedKneading,
                        "G word '" + s.word() + "' must end in one of " + std::string(ends));
    }

    DataKind kind_;
    Sequence first_;
    std::optional<Sequence> second_;
};

namespace detail {

struct RawDatum {
    std::string a;
    std::optional<std::string> b;
    std::size_t a_offset = 0, b_offset = 0;
};

// Splits "(X,Y)" or "X", ignoring whitespace, remembering original offsets.
inline RawDatum split_datum(std::string_view text) {
    std::string s;
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') continue;
        s.push_back(text[i]);
        pos.push_back(i);
    }
    if (s.empty()) throw Error(ErrorCode::EmptyInput, "empty kneading datum");
    RawDatum out;
    if (s.front() != '(') {
        if (auto bad = s.find_first_of("(),"); bad != std::string::npos)
            throw Error(ErrorCode::UnknownSymbol, std::string("unexpected '") + s[bad] + "'", pos[bad]);
        out.a = s;
        out.a_offset = pos[0];
        return out;
    }
    if (s.back() != ')')
        throw Error(ErrorCode::MalformedKneading, "missing ')'", pos.back());
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorCode::MalformedKneading, "pair needs a ','", pos.back());
    if (s.find_first_of("(),", comma + 1) != s.size() - 1 || s.find_first_of("()", 1) < comma)
        throw Error(ErrorCode::MalformedKneading, "malformed pair", pos[comma]);
    out.a = s.substr(1, comma - 1);
    out.b = s.substr(comma + 1, s.size() - comma - 2);
    if (out.a.empty()) throw Error(ErrorCode::EmptyInput, "empty first component", pos[0]);
    if (out.b->empty()) throw Error(ErrorCode::EmptyInput, "empty second component", pos[comma]);
    out.a_offset = pos[1];
    out.b_offset = pos[comma + 1];
    return out;
}

inline bool has_lowercase(std::string_view s) {
    return s.find_first_of("lcr") != std::string_view::npos;
}

inline void reject_uppercase(std::string_view w, std::size_t offset) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] >= 'A' && w[i] <= 'Z')
            throw Error(ErrorCode::AlphabetMix, "unimodal and bimodal symbols mixed", offset + i);
}

inline KneadingData build_unimodal(const RawDatum& raw) {
    reject_uppercase(raw.a, raw.a_offset);
    if (raw.b) reject_uppercase(*raw.b, raw.b_offset);
    auto x = parse_sequence(raw.a, Alphabet::unimodal, Periodicity::periodic, raw.a_offset);
    if (raw.b) {
        auto y = parse_sequence(*raw.b, Alphabet::unimodal, Periodicity::periodic, raw.b_offset);
        if (!(x == y))
            throw Error(ErrorCode::TypeMismatch, "a unimodal pair must repeat the same word");
    }
    return KneadingData::unimodal(std::move(x));
}

inline KneadingData build_g(const RawDatum& raw) {
    auto x = parse_sequence(raw.a, Alphabet::g_factor, Periodicity::finite, raw.a_offset);
    if (!raw.b) return KneadingData::g_doubly(std::move(x));
    auto y = parse_sequence(*raw.b, Alphabet::g_factor, Periodicity::finite, raw.b_offset);
    return KneadingData::g_pair(std::move(x), std::move(y));
}

}  // namespace detail

/// Parse a datum whose alphabet is read off its letters: lowercase is
/// unimodal, any C or U makes it a G element, otherwise bimodal. A single
/// bimodal word ending in A without B is shorthand for (P, conjugate(P)).
inline KneadingData parse_datum(std::string_view text) {
    const auto raw = detail::split_datum(text);
    const std::string all = raw.a + (raw.b ? *raw.b : "");
    if (detail::has_lowercase(all)) {
        // Let parse_sequence report mixing with an exact position.
        return detail::build_unimodal(raw);
    }
    if (all.find_first_of("CU") != std::string::npos) return detail::build_g(raw);
    auto first = parse_sequence(raw.a, Alphabet::bimodal, Periodicity::periodic, raw.a_offset);
    if (raw.b) {
        auto second = parse_sequence(*raw.b, Alphabet::bimodal, Periodicity::periodic, raw.b_offset);
        return KneadingData::pair(std::move(first), std::move(second));
    }
    if (first.word().find('B') != std::string::npos) return KneadingData::doubly_stable(std::move(first));
    return KneadingData::symmetric_pair(std::move(first));
}

/// Parse the right operand of a star product: lowercase gives the Type-1
/// factor (X,X); uppercase is always read in the G alphabet.
inline KneadingData parse_factor(std::string_view text) {
    const auto raw = detail::split_datum(text);
    const std::string all = raw.a + (raw.b ? *raw.b : "");
    if (detail::has_lowercase(all)) return detail::build_unimodal(raw);
    return detail::build_g(raw);
}

}  // namespace kneading
