#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <capri/capri.hpp>

using ordered_json = nlohmann::ordered_json;

namespace {

// Exit code contract: 0 member/success, 1 class violation, 2 error.
struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedGraph {
    capri::Graph graph = capri::Graph::from_edges(1, {});
    std::string source;
};

bool is_random_family(const std::string& family) {
    return family.rfind("random_", 0) == 0;
}

// Inputs are file paths or inline "gen:" generator specs.  A seedless random
// spec draws its seed from --seed plus the caller's slot so batch trials stay
// reproducible yet distinct.
LoadedGraph load_input(const std::string& token, std::uint64_t slot_seed) {
    LoadedGraph out;
    out.source = token;
    if (token.rfind("gen:", 0) == 0) {
        capri::GeneratorSpec spec = capri::GeneratorSpec::parse(token.substr(4));
        if (is_random_family(spec.family) && !spec.seed) spec.seed = slot_seed;
        out.graph = capri::generate(spec);
        return out;
    }
    std::ifstream in(token);
    if (!in) throw CliError("cannot read input file '" + token + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<std::string> warnings;
    out.graph = capri::parse_graph(buf.str(), &warnings);
    for (const auto& w : warnings) std::cerr << token << ": warning: " << w << "\n";
    return out;
}

ordered_json echo_input(const LoadedGraph& in) {
    ordered_json j;
    j["source"] = in.source;
    j["vertices"] = in.graph.vertex_count();
    j["edges"] = in.graph.edge_count();
    return j;
}

void ensure(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("result failed its final check: ") + what);
}

capri::Cotree require_cotree_checked(const capri::Graph& g) {
    auto r = capri::build_cotree(g);
    ensure(std::holds_alternative<capri::Cotree>(r), "cotree construction");
    capri::Cotree t = std::get<capri::Cotree>(r);
    ensure(capri::realize(t) == g, "cotree reproduces its graph");
    return t;
}

// ---- recognize ----

int run_recognize(const LoadedGraph& in, const std::string& cls, ordered_json& out) {
    out["class"] = cls;
    if (cls == "cograph") {
        auto r = capri::build_cotree(in.graph);
        if (std::holds_alternative<capri::NotCograph>(r)) {
            const auto w = std::get<capri::NotCograph>(r).witness;
            ensure(in.graph.has_edge(w[0], w[1]) && in.graph.has_edge(w[1], w[2]) &&
                       in.graph.has_edge(w[2], w[3]) && !in.graph.has_edge(w[0], w[2]) &&
                       !in.graph.has_edge(w[0], w[3]) && !in.graph.has_edge(w[1], w[3]),
                   "induced path witness");
            out["member"] = false;
            out["witness"] = std::vector<int>(w.begin(), w.end());
            return 1;
        }
        capri::Cotree t = std::get<capri::Cotree>(r);
        ensure(capri::realize(t) == in.graph, "cotree reproduces its graph");
        out["member"] = true;
        out["cotree"] = capri::to_term(t);
        return 0;
    }
    auto p = capri::split_partition(in.graph);
    if (!p) {
        out["member"] = false;
        return 1;
    }
    ensure(capri::is_valid_split_partition(in.graph, *p), "split partition");
    out["member"] = true;
    out["partition"] = {{"independent", p->independent}, {"clique", p->clique}};
    return 0;
}

// ---- alpha-product ----

void emit_alpha(const capri::Graph& g, const capri::Graph& h, const capri::AlphaResult& r,
                ordered_json& out) {
    ensure(static_cast<std::int64_t>(r.certificate.size()) == r.value, "certificate length");
    ensure(capri::is_independent_in_product(g, h, r.certificate), "certificate independence");
    out["alpha"] = r.value;
    if (r.case_tag != capri::SplitCase::None) out["case_tag"] = capri::split_case_name(r.case_tag);
    out["certificate"] = r.certificate;
}

int run_alpha_product(const LoadedGraph& a, const LoadedGraph& b, const std::string& cls,
                      ordered_json& out) {
    out["class"] = cls;
    if (cls == "cograph") {
        const LoadedGraph* pair[2] = {&a, &b};
        for (int i = 0; i < 2; ++i) {
            auto r = capri::build_cotree(pair[i]->graph);
            if (std::holds_alternative<capri::NotCograph>(r)) {
                const auto w = std::get<capri::NotCograph>(r).witness;
                out["violation"] = {{"input", i}, {"witness", std::vector<int>(w.begin(), w.end())}};
                return 1;
            }
        }
        emit_alpha(a.graph, b.graph,
                   capri::alpha_product_cographs(require_cotree_checked(a.graph),
                                                 require_cotree_checked(b.graph)),
                   out);
        return 0;
    }
    if (cls == "split") {
        auto pa = capri::split_partition(a.graph);
        if (!pa) {
            out["violation"] = {{"input", 0}};
            return 1;
        }
        auto pb = capri::split_partition(b.graph);
        if (!pb) {
            out["violation"] = {{"input", 1}};
            return 1;
        }
        emit_alpha(a.graph, b.graph, capri::alpha_product_splitgraphs(a.graph, *pa, b.graph, *pb),
                   out);
        return 0;
    }
    capri::Graph prod = capri::categorical_product(a.graph, b.graph);
    const capri::BruteAlphaResult r = capri::brute_alpha(prod);
    capri::AlphaResult wrapped;
    wrapped.value = r.value;
    wrapped.certificate.assign(r.certificate.begin(), r.certificate.end());
    emit_alpha(a.graph, b.graph, wrapped, out);
    return 0;
}

// ---- capacity ----

int run_capacity(const LoadedGraph& in, const std::string& mode, ordered_json& out) {
    out["mode"] = mode;
    if (mode == "trichotomy") {
        out["capacity_class"] =
            capri::capacity_class_name(capri::capacity_trichotomy(in.graph));
        return 0;
    }
    auto r = capri::build_cotree(in.graph);
    if (std::holds_alternative<capri::NotCograph>(r)) {
        const auto w = std::get<capri::NotCograph>(r).witness;
        out["violation"] = {{"witness", std::vector<int>(w.begin(), w.end())}};
        return 1;
    }
    capri::Cotree t = std::get<capri::Cotree>(r);
    ensure(capri::realize(t) == in.graph, "cotree reproduces its graph");
    const capri::ARatioResult ar = capri::a_ratio(capri::neighborhood_profile(t));
    out["capacity"] = capri::a_star(ar.value).str();
    out["a"] = ar.value.str();
    out["argmax_k"] = ar.argmax_k;
    if (ar.value > capri::half()) out["binding"] = capri::binding_from_a(ar.value).str();
    return 0;
}

// ---- generate / product ----

void emit_graph(const capri::Graph& g, const std::string& out_path, ordered_json& out) {
    out["vertices"] = g.vertex_count();
    out["edges"] = g.edge_count();
    const std::string text = capri::write_graph(g);
    if (out_path.empty()) {
        out["graph"] = text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw CliError("cannot write output file '" + out_path + "'");
    f << text;
    if (!f) throw CliError("write failed for '" + out_path + "'");
    out["out"] = out_path;
}

int run_generate(const std::string& spec_text, std::uint64_t seed, const std::string& out_path,
                 ordered_json& out) {
    std::string text = spec_text;
    if (text.rfind("gen:", 0) == 0) text = text.substr(4);
    capri::GeneratorSpec spec = capri::GeneratorSpec::parse(text);
    if (is_random_family(spec.family) && !spec.seed) spec.seed = seed;
    out["spec"] = spec.str();
    emit_graph(capri::generate(spec), out_path, out);
    return 0;
}

int run_product(const LoadedGraph& a, const LoadedGraph& b, const std::string& out_path,
                ordered_json& out) {
    emit_graph(capri::categorical_product(a.graph, b.graph), out_path, out);
    return 0;
}

// ---- oracle ----

int run_oracle(const LoadedGraph& in, ordered_json& out) {
    const capri::BruteAlphaResult r = capri::brute_alpha(in.graph);
    ensure(static_cast<int>(r.certificate.size()) == r.value, "certificate length");
    for (std::size_t i = 0; i < r.certificate.size(); ++i)
        for (std::size_t j = i + 1; j < r.certificate.size(); ++j)
            ensure(!in.graph.has_edge(r.certificate[i], r.certificate[j]),
                   "certificate independence");
    out["alpha"] = r.value;
    out["certificate"] = r.certificate;
    return 0;
}

// ---- report plumbing ----

void render_plain(const ordered_json& j, const std::string& prefix, std::ostream& os) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        const ordered_json& v = it.value();
        if (v.is_object()) {
            render_plain(v, key, os);
        } else if (v.is_array()) {
            if (!v.empty() && v[0].is_object()) {
                for (std::size_t i = 0; i < v.size(); ++i)
                    render_plain(v[i], key + "[" + std::to_string(i) + "]", os);
            } else {
                os << key << ":";
                for (const auto& e : v) os << " " << e.dump();
                os << "\n";
            }
        } else if (key == "graph" && v.is_string()) {
            os << "graph:\n" << v.get<std::string>();
        } else if (v.is_string()) {
            os << key << ": " << v.get<std::string>() << "\n";
        } else {
            os << key << ": " << v.dump() << "\n";
        }
    }
}

void print_report(const ordered_json& report, const std::string& format) {
    if (format == "plain") {
        render_plain(report, "", std::cout);
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent sets and capacities of tensor products"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t seed = 0;
    int trials = 1;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "plain"}));
    app.add_option("--seed", seed, "base seed for seedless random generator inputs");
    app.add_option("--trials", trials, "independent repetitions for batch runs")
        ->check(CLI::PositiveNumber);
    app.fallthrough();

    std::string rec_input, rec_class = "cograph";
    CLI::App* rec = app.add_subcommand("recognize", "class membership with certificates");
    rec->add_option("input", rec_input, "graph file or gen: spec")->required();
    rec->add_option("--class", rec_class, "graph class")
        ->check(CLI::IsMember({"cograph", "split"}));

    std::string ap_a, ap_b, ap_class = "cograph";
    CLI::App* ap = app.add_subcommand("alpha-product", "independence number of a tensor product");
    ap->add_option("inputG", ap_a, "left factor")->required();
    ap->add_option("inputH", ap_b, "right factor")->required();
    ap->add_option("--class", ap_class, "solver class")
        ->check(CLI::IsMember({"cograph", "split", "oracle"}));

    std::string cap_input, cap_mode = "cograph";
    CLI::App* cap = app.add_subcommand("capacity", "tensor capacity");
    cap->add_option("input", cap_input, "graph file or gen: spec")->required();
    cap->add_option("--mode", cap_mode, "computation mode")
        ->check(CLI::IsMember({"cograph", "trichotomy"}));

    std::string gen_spec, gen_out;
    CLI::App* gen = app.add_subcommand("generate", "instantiate a generator spec");
    gen->add_option("spec", gen_spec, "generator spec")->required();
    gen->add_option("--out", gen_out, "write the graph to this file");

    std::string prod_a, prod_b, prod_out;
    CLI::App* prod = app.add_subcommand("product", "materialize a tensor product");
    prod->add_option("inputG", prod_a, "left factor")->required();
    prod->add_option("inputH", prod_b, "right factor")->required();
    prod->add_option("--out", prod_out, "write the product to this file");

    std::string ora_input;
    CLI::App* ora = app.add_subcommand("oracle", "exhaustive independence number");
    ora->add_option("input", ora_input, "graph file or gen: spec")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        ordered_json err;
        err["error"] = std::string("command line: ") + e.what();
        std::cout << err.dump(2) << "\n";
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    std::string command;
    try {
        ordered_json report;
        int code = 0;

        auto run_trial = [&](int trial, ordered_json& body) {
            const std::uint64_t base = seed + 2 * static_cast<std::uint64_t>(trial);
            if (rec->parsed()) {
                LoadedGraph in = load_input(rec_input, base);
                body["inputs"] = ordered_json::array({echo_input(in)});
                return run_recognize(in, rec_class, body);
            }
            if (ap->parsed()) {
                LoadedGraph a = load_input(ap_a, base);
                LoadedGraph b = load_input(ap_b, base + 1);
                body["inputs"] = ordered_json::array({echo_input(a), echo_input(b)});
                return run_alpha_product(a, b, ap_class, body);
            }
            if (cap->parsed()) {
                LoadedGraph in = load_input(cap_input, base);
                body["inputs"] = ordered_json::array({echo_input(in)});
                return run_capacity(in, cap_mode, body);
            }
            LoadedGraph in = load_input(ora_input, base);
            body["inputs"] = ordered_json::array({echo_input(in)});
            return run_oracle(in, body);
        };

        if (rec->parsed()) command = "recognize";
        else if (ap->parsed()) command = "alpha-product";
        else if (cap->parsed()) command = "capacity";
        else if (gen->parsed()) command = "generate";
        else if (prod->parsed()) command = "product";
        else command = "oracle";
        report["command"] = command;

        if (gen->parsed() || prod->parsed()) {
            if (trials != 1) throw CliError("--trials applies to analysis commands only");
            if (gen->parsed()) {
                code = run_generate(gen_spec, seed, gen_out, report);
            } else {
                LoadedGraph a = load_input(prod_a, seed);
                LoadedGraph b = load_input(prod_b, seed + 1);
                report["inputs"] = ordered_json::array({echo_input(a), echo_input(b)});
                code = run_product(a, b, prod_out, report);
            }
        } else if (trials == 1) {
            code = run_trial(0, report);
        } else {
            report["trials"] = trials;
            report["seed"] = seed;
            ordered_json results = ordered_json::array();
            for (int t = 0; t < trials; ++t) {
                ordered_json body;
                body["trial"] = t;
                code = std::max(code, run_trial(t, body));
                results.push_back(std::move(body));
            }
            report["results"] = std::move(results);
        }

        const auto elapsed = std::chrono::steady_clock::now() - started;
        report["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        print_report(report, format);
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        ordered_json err;
        if (!command.empty()) err["command"] = command;
        err["error"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 2;
    }
}
