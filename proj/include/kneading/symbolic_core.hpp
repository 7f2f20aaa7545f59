#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kneading/error.hpp"

namespace kneading {

// Three symbol sets share one representation: a char plus an alphabet tag.
//   bimodal   L < A < M < B < R          eps  + 0 - 0 +
//   unimodal  l < c < r                  eps  + 0 -
//   g_factor  L < A < M < B < R < C < U  eps  + 0 - 0 + 0 -
enum class Alphabet { bimodal, unimodal, g_factor };

inline const char* to_string(Alphabet a) noexcept {
    switch (a) {
        case Alphabet::bimodal: return "bimodal";
        case Alphabet::unimodal: return "unimodal";
        case Alphabet::g_factor: return "g_factor";
    }
    return "?";
}

namespace detail {

inline std::string_view letters(Alphabet a) noexcept {
    switch (a) {
        case Alphabet::bimodal: return "LAMBR";
        case Alphabet::unimodal: return "lcr";
        case Alphabet::g_factor: return "LAMBRCU";
    }
    return "";
}

inline constexpr int eps_of_letter(char c) noexcept {
    switch (c) {
        case 'L': case 'R': case 'l': return 1;
        case 'M': case 'U': case 'r': return -1;
        default: return 0;
    }
}

}  // namespace detail

struct Symbol {
    char letter;
    int epsilon;
    int rank;  // position in the base (unsigned) order

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

inline bool in_alphabet(Alphabet a, char c) noexcept {
    return detail::letters(a).find(c) != std::string_view::npos;
}

inline Symbol make_symbol(Alphabet a, char c) {
    const auto pos = detail::letters(a).find(c);
    if (pos == std::string_view::npos)
        throw Error(ErrorCode::UnknownSymbol,
                    std::string("'") + c + "' is not in the " + to_string(a) + " alphabet");
    return Symbol{c, detail::eps_of_letter(c), static_cast<int>(pos)};
}

inline int epsilon(char c) noexcept { return detail::eps_of_letter(c); }

inline bool is_critical(char c) noexcept { return detail::eps_of_letter(c) == 0; }

enum class Periodicity { finite, periodic };

/// A word over one alphabet. Periodic words stand for their infinite
/// repetition and are stored as their shortest period.
class Sequence {
public:
    Sequence() = default;

    Sequence(Alphabet alphabet, std::string word, Periodicity periodicity)
        : alphabet_(alphabet), word_(std::move(word)), periodicity_(periodicity) {
        for (std::size_t i = 0; i < word_.size(); ++i)
            if (!in_alphabet(alphabet_, word_[i]))
                throw Error(ErrorCode::UnknownSymbol,
                            std::string("'") + word_[i] + "' is not in the " +
                                kneading::to_string(alphabet_) + " alphabet",
                            i);
        if (periodicity_ == Periodicity::periodic) {
            if (word_.empty()) throw Error(ErrorCode::EmptyInput, "empty periodic block");
            canonicalize();
        }
    }

    Alphabet alphabet() const noexcept { return alphabet_; }
    const std::string& word() const noexcept { return word_; }
    Periodicity periodicity() const noexcept { return periodicity_; }
    bool periodic() const noexcept { return periodicity_ == Periodicity::periodic; }
    std::size_t size() const noexcept { return word_.size(); }
    bool empty() const noexcept { return word_.empty(); }

    /// Symbol j of the expansion; periodic words wrap.
    char at(std::size_t j) const {
        if (periodic()) return word_[j % word_.size()];
        if (j >= word_.size())
            throw Error(ErrorCode::ShiftOutOfRange,
                        "index " + std::to_string(j) + " beyond finite block of length " +
                            std::to_string(word_.size()));
        return word_[j];
    }

    Symbol symbol(std::size_t j) const { return make_symbol(alphabet_, at(j)); }

    const std::string& to_string() const noexcept { return word_; }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    void canonicalize() {
        const std::size_t n = word_.size();
        for (std::size_t d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            bool repeats = true;
            for (std::size_t i = d; i < n && repeats; ++i) repeats = word_[i] == word_[i - d];
            if (repeats) {
                word_.resize(d);
                return;
            }
        }
    }

    Alphabet alphabet_ = Alphabet::bimodal;
    std::string word_;
    Periodicity periodicity_ = Periodicity::finite;
};

/// Parse one word. `offset` shifts reported error positions so callers
/// parsing a larger expression can point into the original text.
inline Sequence parse_sequence(std::string_view text, Alphabet alphabet,
                               Periodicity periodicity, std::size_t offset = 0) {
    if (text.empty()) throw Error(ErrorCode::EmptyInput, "empty sequence", offset);
    bool lower = false, upper = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        const bool known = in_alphabet(Alphabet::g_factor, c) || in_alphabet(Alphabet::unimodal, c);
        if (!known)
            throw Error(ErrorCode::UnknownSymbol, std::string("unexpected character '") + c + "'",
                        offset + i);
        (c >= 'a' && c <= 'z' ? lower : upper) = true;
        if (lower && upper)
            throw Error(ErrorCode::AlphabetMix, "unimodal and bimodal symbols mixed", offset + i);
        if (!in_alphabet(alphabet, c))
            throw Error(ErrorCode::UnknownSymbol,
                        std::string("'") + c + "' is not in the " + to_string(alphabet) +
                            " alphabet",
                        offset + i);
    }
    return Sequence(alphabet, std::string(text), periodicity);
}

inline Sequence conjugate(const Sequence& s) {
    if (s.alphabet() != Alphabet::bimodal)
        throw Error(ErrorCode::AlphabetMismatch, "conjugate is defined on bimodal words only");
    std::string w = s.word();
    for (char& c : w) {
        switch (c) {
            case 'L': c = 'R'; break;
            case 'R': c = 'L'; break;
            case 'A': c = 'B'; break;
            case 'B': c = 'A'; break;
            default: break;
        }
    }
    return Sequence(s.alphabet(), std::move(w), s.periodicity());
}

inline Sequence shift(const Sequence& s, std::size_t k) {
    if (s.periodic()) {
        const std::size_t n = s.size();
        k %= n;
        return Sequence(s.alphabet(), s.word().substr(k) + s.word().substr(0, k),
                        Periodicity::periodic);
    }
    if (k >= s.size())
        throw Error(ErrorCode::ShiftOutOfRange,
                    "shift " + std::to_string(k) + " of a finite block of length " +
                        std::to_string(s.size()));
    return Sequence(s.alphabet(), s.word().substr(k), Periodicity::finite);
}

/// True when the block holds an odd number of orientation-reversing symbols.
inline bool m_parity(const Sequence& s) noexcept {
    bool odd = false;
    for (char c : s.word())
        if (epsilon(c) < 0) odd = !odd;
    return odd;
}

inline bool m_parity(std::string_view block) noexcept {
    bool odd = false;
    for (char c : block)
        if (epsilon(c) < 0) odd = !odd;
    return odd;
}

/// Signed lexicographic order. The horizon defaults to 2*lcm of the periods
/// for two periodic words, or to the shorter finite length otherwise.
inline std::strong_ordering compare(const Sequence& a, const Sequence& b,
                                    std::optional<std::size_t> horizon = std::nullopt) {
    if (a.alphabet() != b.alphabet())
        throw Error(ErrorCode::AlphabetMismatch, "compare across alphabets");
    std::size_t n;
    if (a.periodic() && b.periodic()) {
        n = 2 * std::lcm(a.size(), b.size());
    } else if (a.periodic()) {
        n = b.size();
    } else if (b.periodic()) {
        n = a.size();
    } else {
        n = std::min(a.size(), b.size());
    }
    if (horizon) {
        if (*horizon > n && !(a.periodic() && b.periodic()))
            throw Error(ErrorCode::ShiftOutOfRange, "horizon exceeds a finite block");
        n = *horizon;
    }
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        const char x = a.at(j), y = b.at(j);
        if (x != y) {
            if (sign == 0)
                throw Error(ErrorCode::AmbiguousAfterCritical,
                            "words agree through a critical symbol and differ at index " +
                                std::to_string(j));
            const auto rx = make_symbol(a.alphabet(), x).rank;
            const auto ry = make_symbol(a.alphabet(), y).rank;
            return sign > 0 ? rx <=> ry : ry <=> rx;
        }
        sign *= epsilon(x);
    }
    return std::strong_ordering::equal;
}

inline bool less(const Sequence& a, const Sequence& b) {
    return compare(a, b) == std::strong_ordering::less;
}

/// Coefficients of the formal series theta over the basis (L, M, R), kept in
/// units of one half so that A -> (1,1,0) and B -> (0,1,1) stay integral.
struct InvariantCoordinate {
    std::vector<std::array<int, 3>> halves;

    /// Image of each coefficient under the order-preserving functional
    /// L -> 1, M -> 2, R -> 3 (again doubled).
    std::vector<int> weights() const {
        std::vector<int> out;
        out.reserve(halves.size());
        for (const auto& v : halves) out.push_back(v[0] + 2 * v[1] + 3 * v[2]);
        return out;
    }

    friend bool operator==(const InvariantCoordinate&, const InvariantCoordinate&) = default;
};

inline InvariantCoordinate invariant_coordinate(const Sequence& s, std::size_t n) {
    if (s.alphabet() != Alphabet::bimodal)
        throw Error(ErrorCode::AlphabetMismatch, "invariant coordinate needs a bimodal word");
    InvariantCoordinate out;
    out.halves.reserve(n);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        const char c = s.at(j);
        std::array<int, 3> v{};
        switch (c) {
            case 'L': v = {2, 0, 0}; break;
            case 'A': v = {1, 1, 0}; break;
            case 'M': v = {0, 2, 0}; break;
            case 'B': v = {0, 1, 1}; break;
            case 'R': v = {0, 0, 2}; break;
            default: break;
        }
        for (int& x : v) x *= sign;
        out.halves.push_back(v);
        sign *= epsilon(c);
    }
    return out;
}

}  // namespace kneading
