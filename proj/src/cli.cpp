// Command-line front end. Results are written byte-deterministically to the
// given stream (or --output); diagnostics go to stderr.

#include "schubert/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "schubert/error.hpp"
#include "schubert/serialize.hpp"
#include "schubert/structconst.hpp"

namespace schubert {

namespace {

CoordMode mode_for(const RootSystem& rs, const std::string& coords) {
    if (coords == "zA") {
        if (rs.type.family != Family::A)
            throw InputError("coordinate mode zA needs a type A root system, not " +
                             rs.type.to_string());
        return CoordMode::TypeAZ;
    }
    return CoordMode::Canonical;
}

std::string read_source(const std::string& path) {
    std::ostringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error("cannot open input file " + path);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open output file " + output_path);
    file << text;
}

int usage_failed(const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
}

int computation_failed(const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
}

int capacity_failed(const CapacityError& e) {
    std::cerr << "error: " << e.what() << " (pass --cutoff to bound the vertex set)\n";
    return 1;
}

int max_support_length(const SchubertSum& s) {
    int top = 0;
    for (const auto& [w, c] : s.coeffs) top = std::max(top, w.length());
    return top;
}

GKMClass truncate_gkm(const GKMClass& h, int cutoff) {
    if (cutoff < 0 || cutoff >= h.cutoff) return h;
    GKMClass cut(*h.rs, cutoff);
    for (auto& [v, value] : cut.values) value = h.values.at(v);
    return cut;
}

struct CommonArgs {
    std::string type;
    std::string coords = "canonical";
    std::string output;
    bool alpha = false;
};

void root_line(std::ostream& os, const RootSystem& rs, const RootVec& beta, CoordMode mode) {
    DoublePolynomial p = root_as_t_form(rs, beta).to_polynomial(rs.n);
    QVec beta_q(beta.begin(), beta.end());
    os << format_polynomial_alpha(rs, p) << ": " << format_weight_t(rs, beta_q, mode) << "\n";
}

int cmd_roots(const CommonArgs& a, std::ostream& out) {
    RootSystem rs;
    CoordMode mode;
    try {
        rs = build_root_system(a.type);
        mode = mode_for(rs, a.coords);
    } catch (const Error& e) {
        return usage_failed(e);
    }
    try {
        std::ostringstream text;
        text << "type: " << rs.type.to_string() << "\n";
        text << "rank: " << rs.n << "\n";
        text << "weyl group order: " << rs.weyl_order << "\n";
        text << "cartan matrix:\n";
        for (int i = 0; i < rs.n; ++i) {
            for (int j = 0; j < rs.n; ++j) text << (j ? " " : "") << rs.cartan[i][j];
            text << "\n";
        }
        text << "simple roots:\n";
        for (int i = 0; i < rs.n; ++i) root_line(text, rs, rs.positive_roots[i], mode);
        if (rs.positive_roots.size() > static_cast<size_t>(rs.n)) {
            text << "other positive roots:\n";
            for (size_t k = rs.n; k < rs.positive_roots.size(); ++k)
                root_line(text, rs, rs.positive_roots[k], mode);
        }
        emit(text.str(), a.output, out);
    } catch (const Error& e) {
        return computation_failed(e);
    }
    return 0;
}

struct ConvertArgs : CommonArgs {
    std::string from, to, input, cache_dir;
    int cutoff = -1;
};

int cmd_convert(const ConvertArgs& a, std::ostream& out) {
    RootSystem rs;
    CoordMode mode;
    try {
        rs = build_root_system(a.type);
        mode = mode_for(rs, a.coords);
    } catch (const Error& e) {
        return usage_failed(e);
    }
    try {
        Store store(resolve_store_dir(a.cache_dir));
        std::string source = read_source(a.input);

        DoublePolynomial f;
        GKMClass h;
        SchubertSum s;
        if (a.from == "borel")
            f = parse_borel(rs, source, mode);
        else if (a.from == "gkm")
            h = parse_gkm(rs, source, mode);
        else
            s = parse_schubert_sum(rs, source, mode);

        std::string result;
        if (a.to == "gkm") {
            GKMClass target;
            if (a.from == "borel")
                target = borel_to_gkm(rs, f, a.cutoff);
            else if (a.from == "schubert")
                target = schubert_to_gkm(s, a.cutoff);
            else
                target = truncate_gkm(h, a.cutoff);
            result = serialize_gkm(target, mode, a.alpha);
        } else if (a.to == "schubert") {
            SchubertSum target;
            if (a.from == "borel")
                target = borel_to_schubert(rs, f);
            else if (a.from == "gkm")
                target = gkm_to_schubert(h);
            else
                target = s;
            result = serialize_schubert_sum(target, mode, a.alpha);
        } else {
            DoublePolynomial target;
            if (a.from == "borel") {
                target = f;
            } else {
                SchubertSum sum = a.from == "gkm" ? gkm_to_schubert(h) : s;
                if (!sum.coeffs_t_only())
                    throw InputError("coefficients must be free of x to expand");
                SigmaTable sig = sigma_table_cached(rs, max_support_length(sum), &store);
                target = schubert_to_borel(sum, sig);
            }
            result = serialize_borel(rs, target, mode, a.alpha);
        }
        emit(result, a.output, out);
    } catch (const CapacityError& e) {
        return capacity_failed(e);
    } catch (const Error& e) {
        return computation_failed(e);
    }
    return 0;
}

struct LocalizeArgs : CommonArgs {
    std::string w_text, v_text;
};

int cmd_localize(const LocalizeArgs& a, std::ostream& out) {
    RootSystem rs;
    CoordMode mode;
    std::optional<WeylElement> w, v;
    try {
        rs = build_root_system(a.type);
        mode = mode_for(rs, a.coords);
        w = from_word(rs, parse_word_csv(rs, a.w_text));
        v = from_word(rs, parse_word_csv(rs, a.v_text));
    } catch (const Error& e) {
        return usage_failed(e);
    }
    try {
        DoublePolynomial loc = billey_localize(*w, *v);
        emit(format_rendered(rs, loc, mode, a.alpha) + "\n", a.output, out);
    } catch (const Error& e) {
        return computation_failed(e);
    }
    return 0;
}

struct MultiplyArgs : CommonArgs {
    std::string u_text, v_text, method = "both", cache_dir, json_path;
};

int cmd_multiply(const MultiplyArgs& a, std::ostream& out) {
    RootSystem rs;
    CoordMode mode;
    std::optional<WeylElement> up, vp;
    try {
        rs = build_root_system(a.type);
        mode = mode_for(rs, a.coords);
        up = from_word(rs, parse_word_csv(rs, a.u_text));
        vp = from_word(rs, parse_word_csv(rs, a.v_text));
    } catch (const Error& e) {
        return usage_failed(e);
    }
    const WeylElement& u = *up;
    const WeylElement& v = *vp;
    try {
        Store store(resolve_store_dir(a.cache_dir));
        std::optional<StructConstResult> gkm_result, borel_result;
        if (a.method != "borel") gkm_result = multiply_via_gkm(u, v, &store);
        if (a.method != "gkm") borel_result = multiply_via_borel(u, v, &store);
        if (gkm_result && borel_result &&
            !(gkm_result->expansion == borel_result->expansion))
            throw Error("the localization and polynomial methods disagree on " +
                        format_word(u) + " * " + format_word(v));
        const StructConstResult& r = gkm_result ? *gkm_result : *borel_result;

        nlohmann::ordered_json doc;
        doc["type"] = rs.type.to_string();
        doc["u"] = format_word(u);
        doc["v"] = format_word(v);
        doc["method"] = a.method;

        std::ostringstream text;
        if (borel_result) {
            int max_len = std::max(u.length(), v.length());
            SigmaTable sig = sigma_table_cached(rs, max_len, &store);
            auto sigma_json = nlohmann::ordered_json::object();
            for (const WeylElement& q : enumerate_up_to_length(rs, max_len)) {
                if (q.is_identity() || !(bruhat_leq(q, u) || bruhat_leq(q, v))) continue;
                std::string rendered = format_rendered(rs, sig.at(q), mode, a.alpha);
                text << "sigma " << format_word(q) << ": " << rendered << "\n";
                sigma_json[format_word(q)] = rendered;
            }
            doc["sigma"] = sigma_json;
        }
        text << serialize_schubert_sum(r.expansion, mode, a.alpha);

        auto expansion_json = nlohmann::ordered_json::object();
        for (const auto& [w, c] : r.expansion.coeffs)
            expansion_json[format_word(w)] = format_rendered(rs, c, mode, a.alpha);
        doc["expansion"] = expansion_json;
        if (!a.json_path.empty()) emit(doc.dump(2) + "\n", a.json_path, out);

        emit(text.str(), a.output, out);
    } catch (const Error& e) {
        return computation_failed(e);
    }
    return 0;
}

struct GraphArgs : CommonArgs {
    int cutoff = -1;
};

int cmd_graph(const GraphArgs& a, std::ostream& out) {
    RootSystem rs;
    CoordMode mode;
    try {
        rs = build_root_system(a.type);
        mode = mode_for(rs, a.coords);
    } catch (const Error& e) {
        return usage_failed(e);
    }
    try {
        emit(gkm_to_dot(rs, a.cutoff, mode), a.output, out);
    } catch (const CapacityError& e) {
        return capacity_failed(e);
    } catch (const Error& e) {
        return computation_failed(e);
    }
    return 0;
}

void add_common_options(CLI::App* cmd, CommonArgs& a, bool with_alpha = true) {
    cmd->add_option("--type", a.type, "Cartan type, e.g. A2, C3, E8")->required();
    cmd->add_option("--coords", a.coords,
                    "Variable rendering: canonical, or zA for type A fixtures")
        ->transform(CLI::IsMember({"canonical", "zA"}, CLI::ignore_case));
    cmd->add_option("--output", a.output, "Write the result to this file instead of stdout");
    if (with_alpha)
        cmd->add_flag("--alpha", a.alpha, "Render polynomials in simple-root coordinates");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Torus-equivariant Schubert calculus on flag manifolds"};
    app.name("schubert");
    app.require_subcommand(1);

    CommonArgs roots_args;
    CLI::App* roots = app.add_subcommand("roots", "List root data and the Cartan matrix");
    add_common_options(roots, roots_args, false);

    ConvertArgs convert_args;
    CLI::App* convert =
        app.add_subcommand("convert", "Convert a class between the three presentations");
    add_common_options(convert, convert_args);
    convert->add_option("--from", convert_args.from, "Input presentation")
        ->required()
        ->check(CLI::IsMember({"borel", "gkm", "schubert"}));
    convert->add_option("--to", convert_args.to, "Output presentation")
        ->required()
        ->check(CLI::IsMember({"borel", "gkm", "schubert"}));
    convert->add_option("--input", convert_args.input,
                        "Input file; stdin when omitted or \"-\"");
    convert->add_option("--cutoff", convert_args.cutoff,
                        "Bound the fixed-point vertex set by length (truncates)");
    convert->add_option("--cache-dir", convert_args.cache_dir,
                        "Cache directory (defaults to the per-user cache)");

    LocalizeArgs localize_args;
    CLI::App* localize =
        app.add_subcommand("localize", "Restrict a basis class to a fixed point");
    add_common_options(localize, localize_args);
    localize->add_option("w", localize_args.w_text, "Basis class word, e.g. 4,2 or e")
        ->required();
    localize->add_option("v", localize_args.v_text, "Fixed point word")->required();

    MultiplyArgs multiply_args;
    CLI::App* multiply =
        app.add_subcommand("multiply", "Expand a product of two basis classes");
    add_common_options(multiply, multiply_args);
    multiply->add_option("u", multiply_args.u_text, "First factor word, e.g. 4,2")->required();
    multiply->add_option("v", multiply_args.v_text, "Second factor word")->required();
    multiply->add_option("--method", multiply_args.method,
                         "gkm, borel, or both (both cross-checks)")
        ->transform(CLI::IsMember({"gkm", "borel", "both"}));
    multiply->add_option("--cache-dir", multiply_args.cache_dir,
                         "Cache directory (defaults to the per-user cache)");
    multiply->add_option("--json", multiply_args.json_path,
                         "Also write the result to this file as JSON");

    GraphArgs graph_args;
    CLI::App* graph = app.add_subcommand("gkm-graph", "Emit the labeled graph as DOT text");
    add_common_options(graph, graph_args, false);
    graph->add_option("--cutoff", graph_args.cutoff, "Bound the vertex set by length");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("schubert");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, std::cerr);
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand(roots)) return cmd_roots(roots_args, out);
    if (app.got_subcommand(convert)) return cmd_convert(convert_args, out);
    if (app.got_subcommand(localize)) return cmd_localize(localize_args, out);
    if (app.got_subcommand(multiply)) return cmd_multiply(multiply_args, out);
    return cmd_graph(graph_args, out);
}

}  // namespace schubert
