#pragma once

#include <functional>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "kneading/kneading.hpp"

namespace fixture {

inline std::vector<kneading::KneadingData> d1_nodes(std::size_t depth) {
    std::vector<kneading::KneadingData> out;
    for (const auto& n : kneading::generate_tree(kneading::TreeFamily::D1, depth).nodes)
        out.push_back(std::get<kneading::KneadingData>(n.value));
    return out;
}

inline std::vector<kneading::Sequence> u_nodes(std::size_t depth) {
    std::vector<kneading::Sequence> out;
    for (const auto& n : kneading::generate_tree(kneading::TreeFamily::U, depth).nodes)
        out.push_back(std::get<kneading::Sequence>(n.value));
    return out;
}

inline std::vector<kneading::KneadingData> g_nodes(std::size_t depth) {
    std::vector<kneading::KneadingData> out;
    for (const auto& n : kneading::generate_tree(kneading::TreeFamily::G, depth).nodes)
        out.push_back(std::get<kneading::KneadingData>(n.value));
    return out;
}

// Every legal (v, w) with v a D1 node and w a factor drawn from the G tree
// (doubly stable v) or from U duplicated (pair v).
inline std::vector<std::pair<kneading::KneadingData, kneading::KneadingData>> legal_pairs(std::size_t d1_depth,
                                                                                          std::size_t g_depth) {
    using kneading::DataKind;
    std::vector<std::pair<kneading::KneadingData, kneading::KneadingData>> out;
    for (const auto& v : d1_nodes(d1_depth)) {
        if (v.kind() == DataKind::bimodal_doubly_stable) {
            for (const auto& w : g_nodes(g_depth)) out.emplace_back(v, w);
        } else {
            for (const auto& u : u_nodes(g_depth)) out.emplace_back(v, kneading::KneadingData::unimodal(u));
        }
    }
    return out;
}

inline kneading::ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const kneading::Error& e) {
        return e.code();
    }
    FAIL("expected a kneading::Error");
    return kneading::ErrorCode::UnknownSymbol;
}

}  // namespace fixture
