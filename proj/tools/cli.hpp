#pragma once

#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kneading/kneading.hpp"

namespace kneading::cli {

struct CommandResult {
    int status = 0;
    std::string payload;  // stdout
    std::string error;    // stderr
};

enum ExitCode { ok = 0, usage = 1, negative = 2, numeric = 3 };

using Json = nlohmann::ordered_json;

inline std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline Json json_number12(double x) { return Json(std::strtod(fmt12(x).c_str(), nullptr)); }

inline Json json_envelope() {
    Json j;
    j["schema"] = "1";
    return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json json_int(const BigInt& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(x));
    return Json(x.str());
}

inline int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotAdmissible:
        case ErrorCode::NotInD1:
        case ErrorCode::NotAFactor:
        case ErrorCode::IllegalFactorPair:
        case ErrorCode::UnsupportedParity:
            return negative;
        case ErrorCode::NonConvergence:
        case ErrorCode::NoBracket:
        case ErrorCode::ItineraryMismatch:
        case ErrorCode::DomainExceeded:
        case ErrorCode::BlockMismatch:
        case ErrorCode::AssemblyMismatch:
            return numeric;
        default:
            return usage;
    }
}

inline Json matrix_json(const TransitionMatrix& m) {
    Json j = json_envelope();
    j["order"] = m.order();
    Json labels = Json::array();
    for (const auto& [lo, hi] : m.labels()) labels.push_back(Json::array({lo.word(), hi.word()}));
    j["labels"] = std::move(labels);
    j["entries"] = m.rows();
    return j;
}

inline std::string render_matrix(const TransitionMatrix& m, const std::string& format) {
    if (format == "csv") return matrix_to_csv(m);
    if (format == "json") return dump(matrix_json(m));
    return matrix_to_text(m);
}

inline Json poly_json(const IntPolynomial& p) {
    Json c = Json::array();
    for (const auto& x : p.coefficients()) c.push_back(json_int(x));
    return c;
}

/// A literal 0/1 matrix in JSON ("[[0,1],[1,1]]") or kneading data.
inline TransitionMatrix matrix_argument(const std::string& arg) {
    if (!arg.empty() && arg.front() == '[') {
        std::vector<std::vector<int>> rows;
        try {
            rows = Json::parse(arg).get<std::vector<std::vector<int>>>();
        } catch (const std::exception& e) {
            throw Error(ErrorCode::TypeMismatch, std::string("bad matrix literal: ") + e.what());
        }
        return TransitionMatrix::from_rows(rows);
    }
    return transition_matrix(parse_datum(arg));
}

inline std::vector<Sequence> parse_row_list(const std::string& list) {
    std::vector<Sequence> rows;
    std::stringstream ss(list);
    std::string item;
    std::size_t offset = 0;
    while (std::getline(ss, item, ',')) {
        rows.push_back(parse_sequence(item, Alphabet::bimodal, Periodicity::periodic, offset));
        offset += item.size() + 1;
    }
    return rows;
}

/// Runs one command line. Never throws; every failure maps to an exit code.
inline CommandResult run(const std::vector<std::string>& args) {
    CLI::App app{"Kneading data, star products and Markov matrices of bimodal maps", "kneading"};
    app.require_subcommand(1, 1);
    std::ostringstream out;

    std::string format = "text", family, left, right, arg;
    std::size_t depth = 0, max_len = 4, scan = 1000, cap = 16;
    double tol = 1e-12;
    std::string rows;

    auto* tree = app.add_subcommand("tree", "Print a kneading tree");
    tree->add_option("--family", family, "D1, T, U, F or G")->required()->check(CLI::IsMember({"D1", "T", "U", "F", "G"}));
    tree->add_option("--depth", depth, "Deepest level")->check(CLI::Range(0, 12));
    tree->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

    auto* star_cmd = app.add_subcommand("star", "Star product LEFT * RIGHT");
    star_cmd->add_option("left", left)->required();
    star_cmd->add_option("right", right)->required();
    star_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto add_datum_cmd = [&](const char* name, const char* help, std::vector<std::string> formats) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("datum", arg, "Kneading data, e.g. \"(RA,LB)\" or RMBLMA")->required();
        c->add_option("--format", format)->check(CLI::IsMember(formats));
        return c;
    };
    auto* matrix_cmd = add_datum_cmd("matrix", "Markov transition matrix", {"text", "csv", "json"});
    auto* charpoly_cmd = add_datum_cmd("charpoly", "det(I - tA) of the transition matrix", {"text", "json"});
    auto* factorize_cmd = add_datum_cmd("factorize", "Check d_S(t) = (1-t) d_P(t) d_P(-t)", {"text", "json"});
    auto* decompose_cmd = add_datum_cmd("decompose", "Block form of the transition matrix", {"text", "json"});
    auto* entropy_cmd = add_datum_cmd("entropy", "Topological entropy", {"text", "json"});
    entropy_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
    auto* admissible_cmd = add_datum_cmd("admissible", "Admissibility of kneading data", {"text", "json"});
    auto* complexity_cmd = add_datum_cmd("complexity", "Primitivity and irreducible complexity", {"text", "json"});
    complexity_cmd->add_option("--cap", cap, "Largest order searched exhaustively");
    auto* realize_cmd = add_datum_cmd("realize", "Parameter of the cubic family realizing the data", {"text", "json"});
    realize_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
    realize_cmd->add_option("--scan", scan)->check(CLI::PositiveNumber);

    auto* table_cmd = app.add_subcommand("table1", "Grid of admissible pairs");
    table_cmd->add_option("--max-len", max_len)->check(CLI::Range(2, 8));
    table_cmd->add_option("--rows", rows, "Comma separated row words to keep, in order");
    table_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "text", "json"}));

    auto* otimes_cmd = app.add_subcommand("otimes", "Assembled matrix of a product V * W");
    otimes_cmd->add_option("v", left)->required();
    otimes_cmd->add_option("w", right)->required();
    otimes_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    std::vector<const char*> argv{"kneading"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, err;
        const int code = app.exit(e, o, err);
        return {code == 0 ? ok : usage, o.str(), err.str()};
    }
    if (table_cmd->parsed() && format == "text" && table_cmd->count("--format") == 0) format = "csv";

    try {
        if (tree->parsed()) {
            const auto t = generate_tree(*parse_tree_family(family), depth);
            if (format == "json") {
                Json j = json_envelope();
                const auto body = tree_to_json(t);
                for (auto& [k, v] : body.items()) j[k] = v;
                return {ok, dump(j), ""};
            }
            return {ok, format == "dot" ? tree_to_dot(t) : tree_to_text(t), ""};
        }
        if (star_cmd->parsed()) {
            const auto f = parse_datum(left);
            const auto g = parse_factor(right);
            const auto type = star_type_of(f, g);
            const auto s = star(f, g);
            if (format == "json") {
                Json j = json_envelope();
                j["type"] = static_cast<int>(type);
                j["result"] = s.to_string();
                j["length"] = s.first().size();
                j["admissible"] = is_admissible_bimodal(s);
                return {ok, dump(j), ""};
            }
            return {ok, s.to_string() + "\n", ""};
        }
        if (matrix_cmd->parsed()) return {ok, render_matrix(transition_matrix(parse_datum(arg)), format), ""};
        if (charpoly_cmd->parsed()) {
            const auto p = char_poly(transition_matrix(parse_datum(arg)));
            if (format == "json") {
                Json j = json_envelope();
                j["coefficients"] = poly_json(p);
                j["text"] = p.to_string();
                return {ok, dump(j), ""};
            }
            return {ok, p.to_string() + "\n", ""};
        }
        if (factorize_cmd->parsed()) {
            const auto r = verify_factorization(parse_datum(arg));
            const int status = r.verified ? ok : negative;
            if (format == "json") {
                Json j = json_envelope();
                j["d_S"] = poly_json(r.d_s);
                j["d_P"] = poly_json(r.d_p);
                Json fs = Json::array();
                for (const auto& f : r.factors) fs.push_back(f.to_string());
                j["factors"] = std::move(fs);
                j["verified"] = r.verified;
                return {status, dump(j), ""};
            }
            out << "d_S(t) = " << r.d_s.to_string() << "\n";
            out << "factors: (" << r.factors[0].to_string() << ") (" << r.factors[1].to_string() << ") ("
                << r.factors[2].to_string() << ")\n";
            out << "verified=" << (r.verified ? "true" : "false") << "\n";
            return {status, out.str(), ""};
        }
        if (decompose_cmd->parsed()) {
            const auto r = decompose(parse_datum(arg));
            if (format == "json") {
                Json j = json_envelope();
                j["permutation"] = r.permutation;
                j["W1"] = r.w1;
                j["W2"] = r.w2;
                j["A_P"] = r.a_p.rows();
                j["match"] = r.match;
                return {ok, dump(j), ""};
            }
            out << "permutation:";
            for (auto i : r.permutation) out << ' ' << i;
            out << "\npermuted:\n" << matrix_to_text(r.permuted) << "A_P:\n" << matrix_to_text(r.a_p);
            out << "match=" << (r.match ? "true" : "false") << "\n";
            return {ok, out.str(), ""};
        }
        if (entropy_cmd->parsed()) {
            SpectralOptions opt;
            opt.tol = tol;
            const double h = entropy(parse_datum(arg), opt);
            if (format == "json") {
                Json j = json_envelope();
                j["entropy"] = json_number12(h);
                return {ok, dump(j), ""};
            }
            return {ok, fmt12(h) + "\n", ""};
        }
        if (admissible_cmd->parsed()) {
            const auto d = parse_datum(arg);
            const bool yes = d.is_g_factor() ? is_in_g(d) : is_admissible(d);
            const int status = yes ? ok : negative;
            if (format == "json") {
                Json j = json_envelope();
                j["datum"] = d.to_string();
                j["admissible"] = yes;
                if (d.is_bimodal()) j["symmetric"] = d.is_symmetric();
                return {status, dump(j), ""};
            }
            return {status, yes ? "admissible\n" : "not admissible\n", ""};
        }
        if (complexity_cmd->parsed()) {
            const auto m = matrix_argument(arg);
            const bool prim = is_primitive(m);
            ComplexityOptions opt;
            opt.max_order = cap;
            const bool irr = is_irreducibly_complex(m, opt);
            const int status = irr ? ok : negative;
            if (format == "json") {
                Json j = json_envelope();
                j["order"] = m.order();
                j["primitive"] = prim;
                j["irreducibly_complex"] = irr;
                return {status, dump(j), ""};
            }
            out << "primitive=" << (prim ? "true" : "false") << "\n";
            out << "irreducibly_complex=" << (irr ? "true" : "false") << "\n";
            return {status, out.str(), ""};
        }
        if (realize_cmd->parsed()) {
            RealizeOptions opt;
            opt.tol = tol;
            opt.scan = scan;
            const auto r = realize(parse_datum(arg), opt);
            if (format == "json") {
                Json j = json_envelope();
                j["a"] = json_number12(r.a);
                j["defect"] = json_number12(r.defect);
                j["c1_itinerary"] = r.c1_itinerary.word();
                j["c2_itinerary"] = r.c2_itinerary.word();
                return {ok, dump(j), ""};
            }
            out << "a=" << fmt12(r.a) << "\n";
            out << "defect=" << fmt12(r.defect) << "\n";
            out << "c1_itinerary=" << r.c1_itinerary.word() << "\n";
            out << "c2_itinerary=" << r.c2_itinerary.word() << "\n";
            return {ok, out.str(), ""};
        }
        if (table_cmd->parsed()) {
            auto t = enumerate_kneading_table(max_len);
            if (!rows.empty()) t = restrict_table(t, parse_row_list(rows));
            if (format == "json") {
                Json j = json_envelope();
                const auto body = table_to_json(t);
                for (auto& [k, v] : body.items()) j[k] = v;
                return {ok, dump(j), ""};
            }
            return {ok, format == "text" ? table_to_text(t) : table_to_csv(t), ""};
        }
        if (otimes_cmd->parsed()) {
            const auto v = parse_datum(left);
            const auto w = parse_factor(right);
            return {ok, render_matrix(otimes(v, w), format), ""};
        }
    } catch (const Error& e) {
        return {exit_code_for(e.code()), "", std::string(e.what()) + "\n"};
    } catch (const std::exception& e) {
        return {numeric, "", std::string("internal error: ") + e.what() + "\n"};
    }
    return {usage, "", "no command\n"};
}

inline CommandResult run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace kneading::cli
