#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kneading/admissibility.hpp"

namespace kneading {

enum class TreeFamily { D1, T, U, F, G };

inline const char* to_string(TreeFamily f) noexcept {
    switch (f) {
        case TreeFamily::D1: return "D1";
        case TreeFamily::T: return "T";
        case TreeFamily::U: return "U";
        case TreeFamily::F: return "F";
        case TreeFamily::G: return "G";
    }
    return "?";
}

inline std::optional<TreeFamily> parse_tree_family(std::string_view s) {
    if (s == "D1") return TreeFamily::D1;
    if (s == "T") return TreeFamily::T;
    if (s == "U") return TreeFamily::U;
    if (s == "F") return TreeFamily::F;
    if (s == "G") return TreeFamily::G;
    return std::nullopt;
}

/// Node of the tree F: a unimodal word u either doubled (odd levels) or
/// paired with its shift (even levels).
struct FactorWord {
    Sequence u;
    bool doubled;

    std::string second_word() const { return u.word().substr(1) + u.word().front(); }

    std::string to_string() const {
        if (doubled) return u.word() + u.word();
        return "(" + u.word() + "," + second_word() + ")";
    }

    friend bool operator==(const FactorWord&, const FactorWord&) = default;
};

using NodeValue = std::variant<Sequence, KneadingData, FactorWord>;

struct TreeNode {
    std::size_t id = 0;
    std::size_t level = 0;
    std::optional<std::size_t> parent;
    std::string branch;  // label of the edge from the parent
    NodeValue value;
    std::string text;
};

struct KneadingTree {
    TreeFamily family = TreeFamily::D1;
    std::vector<TreeNode> nodes;                  // breadth first
    std::vector<std::vector<std::size_t>> levels;  // ids per level, left to right

    const TreeNode& node(std::size_t id) const { return nodes.at(id); }

    std::vector<std::string> level_texts(std::size_t k) const {
        std::vector<std::string> out;
        for (auto id : levels.at(k)) out.push_back(nodes[id].text);
        return out;
    }
};

// ---------------------------------------------------------------------------
// D1

namespace detail {

inline std::string conjugate_word(const std::string& w) {
    return conjugate(Sequence(Alphabet::bimodal, w, Periodicity::finite)).word();
}

// "(M,M̄)" with a combining overline.
inline std::string conjugate_branch(char x) {
    return std::string("(") + x + "," + x + "̄)";
}

inline bool ascending_c1(const KneadingData& a, const KneadingData& b) {
    return less(a.c1_sequence(), b.c1_sequence());
}

}  // namespace detail

/// D1 node with half block w: a pair at even levels, a doubly stable block
/// at odd levels. The level is |w| - 1.
inline KneadingData d1_node(const std::string& w) {
    if (w.empty()) throw Error(ErrorCode::MalformedKneading, "empty half block");
    const bool doubly = (w.size() - 1) % 2 == 1;
    if (doubly)
        return KneadingData::doubly_stable(Sequence(
            Alphabet::bimodal, w + "B" + detail::conjugate_word(w) + "A", Periodicity::periodic));
    return KneadingData::symmetric_pair(Sequence(Alphabet::bimodal, w + "A", Periodicity::periodic));
}

inline KneadingData d1_root() { return d1_node("R"); }

struct D1Candidate {
    char symbol;
    KneadingData datum;
    bool admissible;
    bool in_box;
    bool accepted() const noexcept { return admissible && in_box; }
};

/// The three candidate children (L,L̄), (M,M̄), (R,R̄) of a D1 node, with the
/// verdict on each.
inline std::vector<D1Candidate> d1_candidates(const KneadingData& parent) {
    const std::string w = parent.half_block();
    std::vector<D1Candidate> out;
    for (char x : {'L', 'M', 'R'}) {
        auto d = d1_node(w + x);
        const bool adm = is_admissible_bimodal(d);
        const bool box = within_d1_box(d);
        out.push_back(D1Candidate{x, std::move(d), adm, box});
    }
    return out;
}

inline std::vector<D1Candidate> d1_children(const KneadingData& parent) {
    std::vector<D1Candidate> kept;
    for (auto& c : d1_candidates(parent))
        if (c.accepted()) kept.push_back(std::move(c));
    std::sort(kept.begin(), kept.end(),
              [](const D1Candidate& a, const D1Candidate& b) { return detail::ascending_c1(a.datum, b.datum); });
    return kept;
}

/// Tree membership: every ancestor along the half block is itself a node.
inline bool is_in_d1(const KneadingData& d) {
    if (!d.is_bimodal() || !d.is_symmetric()) return false;
    const std::string w = d.half_block();
    if (w.empty() || w[0] != 'R') return false;
    for (std::size_t k = 1; k <= w.size(); ++k) {
        const char x = w[k - 1];
        if (k % 2 == 1 ? (x != 'M' && x != 'R') : (x != 'M' && x != 'L')) return false;
        const auto node = d1_node(w.substr(0, k));
        if (!is_admissible_bimodal(node) || !within_d1_box(node)) return false;
    }
    return d1_node(w) == d;
}

// ---------------------------------------------------------------------------
// U and the isomorphism

inline Sequence unimodal_word(std::string w) {
    return Sequence(Alphabet::unimodal, std::move(w), Periodicity::periodic);
}

inline bool is_in_u(const Sequence& u) {
    if (u.alphabet() != Alphabet::unimodal || !u.periodic()) return false;
    const std::string& w = u.word();
    if (w.size() < 2 || w[0] != 'r' || w.back() != 'c' || w.find('c') != w.size() - 1) return false;
    for (std::size_t k = 2; k <= w.size(); ++k)
        if (!is_admissible_unimodal(unimodal_word(w.substr(0, k - 1) + "c"))) return false;
    return true;
}

inline std::vector<Sequence> u_children(const Sequence& u) {
    std::vector<Sequence> kept;
    const std::string stem = u.word().substr(0, u.size() - 1);
    for (char y : {'l', 'r'}) {
        auto x = unimodal_word(stem + y + "c");
        if (is_admissible_unimodal(x)) kept.push_back(std::move(x));
    }
    std::sort(kept.begin(), kept.end(), [](const Sequence& a, const Sequence& b) { return less(a, b); });
    return kept;
}

/// Same tree address in U: M -> l, L and R -> r, then the closing c.
inline Sequence d1_to_unimodal(const KneadingData& d) {
    if (!is_in_d1(d)) throw Error(ErrorCode::NotInD1, d.to_string() + " is not a node of D1");
    std::string out;
    for (char c : d.half_block()) out.push_back(c == 'M' ? 'l' : 'r');
    out.push_back('c');
    return unimodal_word(std::move(out));
}

inline KneadingData unimodal_to_d1(const Sequence& x) {
    if (!is_in_u(x)) throw Error(ErrorCode::NotAdmissible, x.word() + " is not a node of U");
    std::string w;
    const std::string& u = x.word();
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == 'l') w.push_back('M');
        else w.push_back(i % 2 == 0 ? 'R' : 'L');
    }
    return d1_node(w);
}

// ---------------------------------------------------------------------------
// G: translation of 2-blocks of F words

inline char translate_block(char a, char b) {
    const std::string blk{a, b};
    if (blk == "ll") return 'L';
    if (blk == "lc") return 'A';
    if (blk == "lr") return 'M';
    if (blk == "cr") return 'B';
    if (blk == "rr") return 'R';
    if (blk == "rc") return 'C';
    if (blk == "rl") return 'U';
    throw Error(ErrorCode::UntranslatableBlock, "no G symbol for the block '" + blk + "'");
}

inline std::string untranslate_symbol(char g) {
    switch (g) {
        case 'L': return "ll";
        case 'A': return "lc";
        case 'M': return "lr";
        case 'B': return "cr";
        case 'R': return "rr";
        case 'C': return "rc";
        case 'U': return "rl";
        default: break;
    }
    throw Error(ErrorCode::UnknownSymbol, std::string("'") + g + "' is not a G symbol");
}

inline std::string translate_word(std::string_view w) {
    if (w.size() % 2 != 0)
        throw Error(ErrorCode::UntranslatableBlock, "odd length word '" + std::string(w) + "'");
    std::string out;
    for (std::size_t i = 0; i < w.size(); i += 2) out.push_back(translate_block(w[i], w[i + 1]));
    return out;
}

inline std::string untranslate_word(std::string_view g) {
    std::string out;
    for (char c : g) out += untranslate_symbol(c);
    return out;
}

inline KneadingData unimodal_pair_to_G(const FactorWord& f) {
    if (f.doubled)
        return KneadingData::g_doubly(
            Sequence(Alphabet::g_factor, translate_word(f.u.word() + f.u.word()), Periodicity::finite));
    return KneadingData::g_pair(
        Sequence(Alphabet::g_factor, translate_word(f.u.word()), Periodicity::finite),
        Sequence(Alphabet::g_factor, translate_word(f.second_word()), Periodicity::finite));
}

inline FactorWord factor_word_for(const Sequence& u) {
    return FactorWord{u, (u.size() - 2) % 2 == 1};
}

/// The U node a G element was translated from; NotAFactor when the element
/// is not in G.
inline Sequence g_factor_source(const KneadingData& g) {
    auto fail = [&](const std::string& why) {
        return Error(ErrorCode::NotAFactor, g.to_string() + " is not in G: " + why);
    };
    if (!g.is_g_factor()) throw fail("not a G-alphabet datum");
    const std::string raw = untranslate_word(g.first().word());
    std::string u;
    if (g.kind() == DataKind::g_doubly) {
        if (raw.size() % 2 != 0 || raw.substr(0, raw.size() / 2) != raw.substr(raw.size() / 2))
            throw fail("not a doubled word");
        u = raw.substr(0, raw.size() / 2);
    } else {
        u = raw;
    }
    if (u.find('c') != u.size() - 1) throw fail("misplaced critical symbol");
    const auto seq = unimodal_word(u);
    if (!(seq.word() == u) || !is_in_u(seq)) throw fail("source word is not in U");
    const auto f = factor_word_for(seq);
    if (f.doubled != (g.kind() == DataKind::g_doubly)) throw fail("wrong kind for its level");
    if (!f.doubled && untranslate_word(g.second()->word()) != f.second_word())
        throw fail("second component is not the shifted word");
    return seq;
}

inline bool is_in_g(const KneadingData& g) {
    try {
        g_factor_source(g);
        return true;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotAFactor) return false;
        throw;
    }
}

// ---------------------------------------------------------------------------
// Generation

namespace detail {

inline std::string node_text(const NodeValue& v) {
    struct {
        std::string operator()(const Sequence& s) const { return s.word(); }
        std::string operator()(const KneadingData& d) const { return d.to_string(); }
        std::string operator()(const FactorWord& f) const { return f.to_string(); }
    } visit;
    return std::visit(visit, v);
}

inline void push_node(KneadingTree& t, std::size_t level, std::optional<std::size_t> parent,
                      std::string branch, NodeValue v) {
    TreeNode n;
    n.id = t.nodes.size();
    n.level = level;
    n.parent = parent;
    n.branch = std::move(branch);
    n.text = node_text(v);
    n.value = std::move(v);
    if (t.levels.size() <= level) t.levels.resize(level + 1);
    t.levels[level].push_back(n.id);
    t.nodes.push_back(std::move(n));
}

inline KneadingTree generate_u(std::size_t depth) {
    KneadingTree t;
    t.family = TreeFamily::U;
    push_node(t, 0, std::nullopt, "", unimodal_word("rc"));
    for (std::size_t k = 0; k < depth; ++k) {
        for (auto id : std::vector<std::size_t>(t.levels[k])) {
            const Sequence u = std::get<Sequence>(t.nodes[id].value);
            for (auto& c : u_children(u)) {
                std::string label(1, c.word()[c.size() - 2]);
                push_node(t, k + 1, id, std::move(label), std::move(c));
            }
        }
        if (t.levels.size() <= k + 1) t.levels.resize(k + 2);
    }
    return t;
}

inline KneadingTree generate_d1(std::size_t depth) {
    KneadingTree t;
    t.family = TreeFamily::D1;
    push_node(t, 0, std::nullopt, "", d1_root());
    for (std::size_t k = 0; k < depth; ++k) {
        for (auto id : std::vector<std::size_t>(t.levels[k])) {
            const auto parent = std::get<KneadingData>(t.nodes[id].value);
            for (auto& c : d1_children(parent))
                push_node(t, k + 1, id, conjugate_branch(c.symbol), std::move(c.datum));
        }
        if (t.levels.size() <= k + 1) t.levels.resize(k + 2);
    }
    return t;
}

// Full binary tree on {M,R} at odd positions and {M,L} at even positions;
// M comes first when the parent holds an even number of R and L symbols.
inline KneadingTree generate_t(std::size_t depth) {
    KneadingTree t;
    t.family = TreeFamily::T;
    push_node(t, 0, std::nullopt, "", Sequence(Alphabet::bimodal, "", Periodicity::finite));
    for (std::size_t k = 0; k < depth; ++k) {
        for (auto id : std::vector<std::size_t>(t.levels[k])) {
            const std::string w = std::get<Sequence>(t.nodes[id].value).word();
            const auto turns = std::count_if(w.begin(), w.end(), [](char c) { return c != 'M'; });
            const char side = (k + 1) % 2 == 1 ? 'R' : 'L';
            const std::string order = turns % 2 == 0 ? std::string{'M', side} : std::string{side, 'M'};
            for (char x : order)
                push_node(t, k + 1, id, std::string(1, x),
                          Sequence(Alphabet::bimodal, w + x, Periodicity::finite));
        }
    }
    return t;
}

// F and G mirror U node for node.
inline KneadingTree generate_from_u(std::size_t depth, TreeFamily family) {
    const auto u = generate_u(depth);
    KneadingTree t;
    t.family = family;
    for (const auto& n : u.nodes) {
        const auto f = factor_word_for(std::get<Sequence>(n.value));
        NodeValue v = family == TreeFamily::F ? NodeValue(f) : NodeValue(unimodal_pair_to_G(f));
        push_node(t, n.level, n.parent, n.branch, std::move(v));
    }
    t.levels.resize(u.levels.size());
    return t;
}

}  // namespace detail

inline KneadingTree generate_tree(TreeFamily family, std::size_t depth) {
    switch (family) {
        case TreeFamily::D1: return detail::generate_d1(depth);
        case TreeFamily::T: return detail::generate_t(depth);
        case TreeFamily::U: return detail::generate_u(depth);
        case TreeFamily::F:
        case TreeFamily::G: return detail::generate_from_u(depth, family);
    }
    throw Error(ErrorCode::TypeMismatch, "unknown tree family");
}

}  // namespace kneading
