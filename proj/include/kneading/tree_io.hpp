#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "kneading/admissibility.hpp"
#include "kneading/trees.hpp"

namespace kneading {

inline std::string display_text(const TreeNode& n) {
    return n.text.empty() ? "<root>" : n.text;
}

/// One line per level, nodes left to right separated by single spaces.
inline std::string tree_to_text(const KneadingTree& t) {
    std::string out;
    for (const auto& level : t.levels) {
        std::string line;
        for (auto id : level) {
            if (!line.empty()) line += ' ';
            line += display_text(t.nodes[id]);
        }
        out += line + '\n';
    }
    return out;
}

inline nlohmann::ordered_json tree_to_json(const KneadingTree& t) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const auto& n : t.nodes) {
        nlohmann::ordered_json j;
        j["id"] = n.id;
        j["level"] = n.level;
        j["text"] = n.text;
        j["parent"] = n.parent ? nlohmann::ordered_json(*n.parent) : nlohmann::ordered_json(nullptr);
        j["branch"] = n.branch;
        nodes.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["family"] = to_string(t.family);
    out["depth"] = t.levels.empty() ? 0 : t.levels.size() - 1;
    out["nodes"] = std::move(nodes);
    return out;
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}
}  // namespace detail

inline std::string tree_to_dot(const KneadingTree& t) {
    std::ostringstream os;
    os << "digraph " << to_string(t.family) << " {\n";
    os << "  node [shape=plaintext];\n";
    for (const auto& n : t.nodes)
        os << "  n" << n.id << " [label=\"" << detail::dot_escape(display_text(n)) << "\"];\n";
    for (const auto& n : t.nodes)
        if (n.parent)
            os << "  n" << *n.parent << " -> n" << n.id << " [label=\"" << detail::dot_escape(n.branch)
               << "\"];\n";
    os << "}\n";
    return os.str();
}

/// Grid with the row words as header row and header column; "*" marks an
/// admissible cell, "(*)" an admissible symmetric (diagonal) one.
inline std::string table_to_csv(const KneadingTable& t) {
    std::string out;
    for (const auto& r : t.rows) out += "," + r.word();
    out += '\n';
    for (std::size_t i = 0; i < t.size(); ++i) {
        out += t.rows[i].word();
        for (std::size_t j = 0; j < t.size(); ++j) {
            out += ',';
            if (t.admissible(i, j)) out += t.symmetric(i, j) ? "(*)" : "*";
        }
        out += '\n';
    }
    return out;
}

inline std::string table_to_text(const KneadingTable& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size(); ++i) {
        os << (i + 1) << '-' << t.rows[i].word() << ':';
        for (std::size_t j = 0; j < t.size(); ++j)
            if (t.admissible(i, j)) os << ' ' << (j + 1) << (t.symmetric(i, j) ? "@" : "");
        os << '\n';
    }
    return os.str();
}

inline nlohmann::ordered_json table_to_json(const KneadingTable& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        rows.push_back(t.rows[i].word());
        cols.push_back(t.column(i).word());
    }
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < t.size(); ++j) row.push_back(t.admissible(i, j) ? 1 : 0);
        cells.push_back(std::move(row));
    }
    nlohmann::ordered_json out;
    out["rows"] = std::move(rows);
    out["columns"] = std::move(cols);
    out["cells"] = std::move(cells);
    return out;
}

}  // namespace kneading
