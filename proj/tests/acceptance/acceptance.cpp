// Acceptance run: one PASS/FAIL line per criterion, detail lines indented
// below it. Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/golden_data.hpp"
#include "support/oracles.hpp"

using namespace kneading;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("mismatch: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::vector<KneadingData> d1_nodes(std::size_t depth) {
    std::vector<KneadingData> out;
    for (const auto& n : generate_tree(TreeFamily::D1, depth).nodes) out.push_back(std::get<KneadingData>(n.value));
    return out;
}

std::vector<KneadingData> g_nodes(std::size_t depth) {
    std::vector<KneadingData> out;
    for (const auto& n : generate_tree(TreeFamily::G, depth).nodes) out.push_back(std::get<KneadingData>(n.value));
    return out;
}

Sequence periodic(std::string_view w) { return Sequence(Alphabet::bimodal, std::string(w), Periodicity::periodic); }

Outcome star_examples() {
    Outcome o;
    const auto check = [&](const char* f, const char* g, const char* expected) {
        const auto got = star(parse_datum(f), parse_factor(g)).to_string();
        o.require(got == expected, std::string(f) + " * " + g + " = " + got + ", expected " + expected);
    };
    check("(RMMA,LMMB)", "(rlc,rlc)", "(RMMMRMMLRMMA,LMMMLMMRLMMB)");
    check("RBLA", "ULBLA", "RRLMRMLMRBLLRMLMRMLA");
    check("RBLA", "(UA,LB)", "(RRLMRMLA,LLRMLMRB)");
    return o;
}

Outcome matrix_goldens() {
    Outcome o;
    const auto a_v = transition_matrix(parse_datum("(RMMA,LMMB)"));
    o.require(oracle::to_grid(a_v) == oracle::from_strings(golden::a_v), "A_V differs from the 7x7 reference");
    const auto a_s = otimes(parse_datum("(RMMA,LMMB)"), parse_datum("(rlc,rlc)"));
    o.require(oracle::to_grid(a_s) == oracle::from_strings(golden::a_s), "A_S differs from the 23x23 reference");
    o.note("A_V " + std::to_string(a_v.order()) + "x" + std::to_string(a_v.order()) + ", A_S " +
           std::to_string(a_s.order()) + "x" + std::to_string(a_s.order()));
    return o;
}

Outcome otimes_property() {
    Outcome o;
    std::size_t g_pairs = 0, u_pairs = 0;
    for (const auto& v : d1_nodes(3)) {
        if (v.kind() == DataKind::bimodal_doubly_stable) {
            for (const auto& w : g_nodes(3)) {
                o.require(assemble_otimes(v, w) == transition_matrix(star(v, w)),
                          v.to_string() + " (x) " + w.to_string());
                ++g_pairs;
            }
        } else {
            for (const auto& n : generate_tree(TreeFamily::U, 3).nodes) {
                const auto w = KneadingData::unimodal(std::get<Sequence>(n.value));
                o.require(assemble_otimes(v, w) == transition_matrix(star(v, w)),
                          v.to_string() + " (x) " + w.to_string());
                ++u_pairs;
            }
        }
    }
    o.require(g_pairs >= 20, "fewer than 20 pairs with a G factor");
    o.note(std::to_string(g_pairs) + " pairs with a G factor, " + std::to_string(u_pairs) +
           " pairs with a duplicated unimodal factor");
    return o;
}

Outcome factorization_identity() {
    Outcome o;
    const auto nodes = d1_nodes(6);
    std::size_t through4 = 0;
    for (const auto& d : nodes) {
        const auto r = verify_factorization(d);
        o.require(r.verified, "d_S != (1-t) d_P(t) d_P(-t) for " + d.to_string());
        if (d.half_block().size() <= 5) ++through4;
    }
    o.note(std::to_string(nodes.size()) + " D1 nodes through depth 6 (" + std::to_string(through4) +
           " through depth 4)");
    return o;
}

Outcome trees_and_isomorphism() {
    Outcome o;
    const std::vector<std::vector<std::string>> fig_d1{
        {"(RA,LB)"},
        {"RMBLMA"},
        {"(RMRA,LMLB)", "(RMMA,LMMB)"},
        {"RMRLBLMLRA", "RMMLBLMMRA", "RMMMBLMMMA"},
        {"(RMRLRA,LMLRLB)", "(RMMLMA,LMMRMB)", "(RMMLRA,LMMRLB)", "(RMMMRA,LMMMLB)", "(RMMMMA,LMMMMB)"},
    };
    const std::vector<std::vector<std::string>> fig_u{
        {"rc"}, {"rlc"}, {"rlrc", "rllc"}, {"rlrrc", "rllrc", "rlllc"},
        {"rlrrrc", "rllrlc", "rllrrc", "rlllrc", "rllllc"},
    };
    const auto d1 = generate_tree(TreeFamily::D1, 6), u = generate_tree(TreeFamily::U, 6);
    for (std::size_t k = 0; k <= 4; ++k) {
        o.require(d1.level_texts(k) == fig_d1[k], "D1 level " + std::to_string(k));
        o.require(u.level_texts(k) == fig_u[k], "U level " + std::to_string(k));
    }
    o.require(d1.nodes.size() == u.nodes.size(), "D1 and U differ in size at depth 6");
    for (std::size_t i = 0; i < d1.nodes.size() && i < u.nodes.size(); ++i) {
        const auto& d = std::get<KneadingData>(d1.nodes[i].value);
        const auto& x = std::get<Sequence>(u.nodes[i].value);
        o.require(d1_to_unimodal(d) == x && unimodal_to_d1(x) == d, "round trip at " + d.to_string());
    }
    std::ostringstream counts;
    for (std::size_t k = 0; k < d1.levels.size(); ++k) counts << (k ? "," : "") << d1.levels[k].size();
    o.note("level counts through depth 6: " + counts.str() + "; round trip on " + std::to_string(d1.nodes.size()) +
           " nodes");
    return o;
}

Outcome table_reproduction() {
    Outcome o;
    const auto t = enumerate_kneading_table(4);
    std::vector<Sequence> legend;
    for (auto w : golden::table_legend) legend.push_back(periodic(w));
    const auto sub = restrict_table(t, legend);
    std::size_t agree = 0;
    for (std::size_t i = 0; i < 21; ++i)
        for (std::size_t j = 0; j < 21; ++j) {
            const bool want = golden::table_grid[i][j] == '1';
            if (sub.admissible(i, j) == want) {
                ++agree;
            } else {
                o.require(false, "cell " + std::to_string(i + 1) + "-" + legend[i].word() + " x " +
                                     std::to_string(j + 1) + ": computed " + (want ? "blank" : "*"));
            }
        }
    o.note("reference 21x21 grid: " + std::to_string(agree) + "/441 cells agree");

    for (std::size_t i = 0; i < t.size(); ++i) {
        if (std::find(legend.begin(), legend.end(), t.rows[i]) != legend.end()) continue;
        std::string partners;
        for (std::size_t j = 0; j < t.size(); ++j)
            if (t.admissible(i, j)) partners += (partners.empty() ? "" : " ") + t.rows[j].word();
        o.note("diff: extra admissible row " + t.rows[i].word() + " (partners: " + partners + ")");
    }

    std::string no_diag;
    for (std::size_t i = 0; i < 21; ++i)
        if (!sub.admissible(i, i)) no_diag += (no_diag.empty() ? "" : ", ") + std::to_string(i + 1) + "-" + legend[i].word();
    o.note("rows without a diagonal star (symmetric datum not admissible): " + no_diag);
    const std::set<std::size_t> reference(golden::table_symmetric_rows.begin(), golden::table_symmetric_rows.end());
    for (std::size_t i = 0; i < 21; ++i)
        o.require(sub.admissible(i, i) == (reference.count(i + 1) > 0), "diagonal of row " + std::to_string(i + 1));
    return o;
}

Outcome spectral_consequence() {
    Outcome o;
    double worst = 0.0;
    for (const auto& d : d1_nodes(6)) {
        const double a_s = spectral_radius(transition_matrix(d));
        const double a_p = spectral_radius(transition_matrix(KneadingData::unimodal(d1_to_unimodal(d))));
        worst = std::max(worst, std::abs(a_s - a_p));
        o.require(std::abs(a_s - a_p) < 1e-9, "Perron roots differ for " + d.to_string());
    }
    const double h0 = entropy(parse_datum("(RA,LB)"));
    const double h1 = entropy(parse_datum("RMBLMA"));
    const double golden_log = std::log((1 + std::sqrt(5.0)) / 2);
    o.require(std::abs(h0) < 1e-12, "entropy (RA,LB) = " + std::to_string(h0));
    o.require(std::abs(h1 - golden_log) < 1e-9, "entropy RMBLMA = " + std::to_string(h1));
    char buf[160];
    std::snprintf(buf, sizeof buf, "max |rho(A_S) - rho(A_P)| = %.3g; h(RA,LB) = %.3g; h(RMBLMA) - log phi = %.3g",
                  worst, h0, h1 - golden_log);
    o.note(buf);
    return o;
}

Outcome irreducible_complexity() {
    Outcome o;
    o.require(!is_irreducibly_complex(TransitionMatrix{{0, 1}, {1, 1}}), "[[0,1],[1,1]] reported complex");
    o.require(is_irreducibly_complex(TransitionMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), "J - I not complex");
    std::vector<KneadingData> built = d1_nodes(6);
    for (const auto& v : d1_nodes(3)) {
        if (v.kind() == DataKind::bimodal_doubly_stable)
            for (const auto& w : g_nodes(3)) built.push_back(star(v, w));
        else
            for (const auto& n : generate_tree(TreeFamily::U, 3).nodes)
                built.push_back(star(v, KneadingData::unimodal(std::get<Sequence>(n.value))));
    }
    const auto table = enumerate_kneading_table(4);
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table.size(); ++j)
            if (table.admissible(i, j)) built.push_back(*table_cell_datum(table.rows[i], table.rows[j]));
    std::size_t checked = 0, complex = 0;
    for (const auto& d : built) {
        const auto m = transition_matrix(d);
        if (m.order() > 9 || m.order() < 2) continue;
        const bool got = is_irreducibly_complex(m);
        o.require(got == oracle::is_irreducibly_complex(oracle::to_grid(m)), "oracle disagrees on " + d.to_string());
        ++checked;
        complex += got;
    }
    o.require(checked > 0, "no matrices of order <= 9");
    o.note(std::to_string(checked) + " constructed matrices of order <= 9 checked, " + std::to_string(complex) +
           " irreducibly complex");
    return o;
}

Outcome realization() {
    Outcome o;
    double worst = 0.0;
    const auto nodes = d1_nodes(4);
    for (const auto& d : nodes) {
        const auto r = realize(d);
        const std::string target = d.half_block() + (d.kind() == DataKind::bimodal_doubly_stable ? "B" : "A");
        worst = std::max(worst, r.defect);
        o.require(r.defect < 1e-12, "defect for " + d.to_string());
        o.require(r.c1_itinerary.word() == target,
                  d.to_string() + ": c1 itinerary " + r.c1_itinerary.word() + " vs " + target);
        o.require(r.c2_itinerary == conjugate(r.c1_itinerary), d.to_string() + ": c2 itinerary not conjugate");
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu nodes realized, max defect %.3g", nodes.size(), worst);
    o.note(buf);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"star-product worked examples", star_examples},
        {"A_V and A_S reference matrices", matrix_goldens},
        {"assembled product equals the matrix of the star product", otimes_property},
        {"d_S(t) = (1-t) d_P(t) d_P(-t) on D1 to depth 6", factorization_identity},
        {"D1 and U trees and their isomorphism", trees_and_isomorphism},
        {"table of admissible pairs", table_reproduction},
        {"Perron roots and entropy", spectral_consequence},
        {"irreducible complexity", irreducible_complexity},
        {"realization in the cubic family", realization},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("%s criterion %zu: %s (%.0f ms)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), ms);
        for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
