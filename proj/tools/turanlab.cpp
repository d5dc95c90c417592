/*
 * turanlab: exact counting and certificate tooling for pattern-vs-clique
 * extremal problems.
 *
 * Graph arguments accept three spellings: a graph6 literal ("DQc"), an
 * edge-list literal with a vertex count ("5; 0-1,1-2,2-3,3-4"), or the path
 * of a file whose first nonempty line is either of those.  Counts print as
 * plain decimals; structured results print as JSON.  Exit codes: 0 success,
 * 1 failed verification / infeasible search / unknown registry entry,
 * 2 bad usage or malformed input.
 */

#include "turanlab/canonical.hpp"
#include "turanlab/certify.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/enumerate.hpp"
#include "turanlab/error.hpp"
#include "turanlab/extremal.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/multipartite.hpp"
#include "turanlab/registry.hpp"
#include "turanlab/tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace turan;

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw error(errc::parse, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ')) s.pop_back();
    std::size_t at = s.find_first_not_of(' ');
    return at == std::string::npos ? "" : s.substr(at);
}

SmallGraph load_graph(const std::string& arg) {
    if (arg.find(';') != std::string::npos) return from_edge_list(arg);
    if (std::filesystem::exists(arg)) {
        std::istringstream in(slurp(arg));
        std::string line;
        while (std::getline(in, line)) {
            line = trimmed(line);
            if (!line.empty()) return parse_graph(line);
        }
        throw error(errc::parse, "no graph found in " + arg);
    }
    return from_graph6(arg);
}

std::vector<SmallGraph> load_graphs(const std::vector<std::string>& args) {
    std::vector<SmallGraph> out;
    for (const std::string& a : args) out.push_back(load_graph(a));
    return out;
}

GoodnessRegistry make_registry(const std::string& axiom_path) {
    GoodnessRegistry registry;
    if (!axiom_path.empty()) {
        std::ifstream f(axiom_path);
        if (!f) throw error(errc::parse, "cannot open " + axiom_path);
        registry.load(f);
    }
    return registry;
}

int run(int argc, char** argv) {
    CLI::App app{"exact generalized Turán counting toolkit"};
    app.require_subcommand(1);

    std::string pattern_arg, host_arg, parts_arg, cert_path, axiom_path, out_path, format = "json";
    std::vector<std::string> gadget_args, extra_args;
    int n = 0, k = 0, bound_at = 0;
    bool full = false, maximal = false, dump = false;

    auto* count_cmd = app.add_subcommand("count", "subgraph copies of a pattern in a host");
    count_cmd->add_option("--pattern,-p", pattern_arg, "pattern graph")->required();
    count_cmd->add_option("--host,-g", host_arg, "host graph")->required();

    auto* induced_cmd = app.add_subcommand("induced", "induced copies of a pattern in a host");
    induced_cmd->add_option("--pattern,-p", pattern_arg, "pattern graph")->required();
    induced_cmd->add_option("--host,-g", host_arg, "host graph")->required();

    auto* turan_cmd =
        app.add_subcommand("turan", "copies in a complete multipartite host (closed form)");
    turan_cmd->add_option("--pattern,-p", pattern_arg, "pattern graph")->required();
    turan_cmd->add_option("--parts", parts_arg, "part sizes, e.g. 3,2,2");
    turan_cmd->add_option("--n", n, "host vertices (with --k)");
    turan_cmd->add_option("--k", k, "forbidden clique; host becomes T_{k-1}(n)");

    auto* table_cmd = app.add_subcommand("table", "pattern/gadget counts over all types");
    table_cmd->add_option("--pattern,-p", pattern_arg, "pattern graph")->required();
    auto* table_k = table_cmd->add_option("--k", k, "restrict types to K_k-free graphs");
    table_cmd->add_option("--gadget", gadget_args, "gadget graph (repeatable)");
    table_cmd->add_option("--extra-type", extra_args, "extra type column (repeatable)");
    table_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* certify_cmd = app.add_subcommand("certify", "verify a certificate file");
    certify_cmd->add_option("--cert", cert_path, "certificate JSON file")->required();
    certify_cmd->add_option("--axioms", axiom_path, "extra registry entries (JSON lines)");
    auto* bound_opt =
        certify_cmd->add_option("--bound-at", bound_at, "also evaluate both sides at T_{k-1}(n)");

    auto* find_cmd = app.add_subcommand("find-cert", "search for a certificate over a pool");
    find_cmd->add_option("--pattern,-p", pattern_arg, "pattern graph")->required();
    find_cmd->add_option("--k", k, "forbidden clique")->required();
    find_cmd->add_option("--gadget", gadget_args, "pool gadget (repeatable)")->required();
    find_cmd->add_option("--axioms", axiom_path, "extra registry entries (JSON lines)");
    find_cmd->add_option("--out", out_path, "also write the certificate here");

    auto* extremal_cmd = app.add_subcommand("extremal", "exhaustive maximum over K_k-free hosts");
    extremal_cmd->add_option("--pattern,-p", pattern_arg, "pattern graph")->required();
    extremal_cmd->add_option("--n", n, "host vertices")->required();
    extremal_cmd->add_option("--k", k, "forbidden clique")->required();
    extremal_cmd->add_flag("--full", full, "sweep all K_k-free classes, not just edge-maximal");

    auto* registry_cmd = app.add_subcommand("registry", "query or dump goodness entries");
    auto* reg_pattern = registry_cmd->add_option("--pattern,-p", pattern_arg, "pattern graph");
    auto* reg_k = registry_cmd->add_option("--k", k, "forbidden clique");
    registry_cmd->add_flag("--dump", dump, "print all stored entries");
    registry_cmd->add_option("--axioms", axiom_path, "extra registry entries (JSON lines)");

    auto* gen_cmd = app.add_subcommand("gen", "enumerate graph classes as graph6 lines");
    gen_cmd->add_option("--n", n, "vertex count")->required();
    auto* gen_k = gen_cmd->add_option("--k", k, "keep K_k-free classes only");
    auto* gen_contains = gen_cmd->add_option("--contains", pattern_arg, "keep classes containing this pattern");
    gen_cmd->add_flag("--maximal", maximal, "keep edge-maximal K_k-free classes (needs --k)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (*count_cmd) {
        std::cout << count_copies(load_graph(pattern_arg), load_graph(host_arg)).str() << "\n";
        return 0;
    }
    if (*induced_cmd) {
        std::cout << count_induced_copies(load_graph(pattern_arg), load_graph(host_arg)).str()
                  << "\n";
        return 0;
    }
    if (*turan_cmd) {
        PartVector parts;
        if (!parts_arg.empty())
            parts = parse_part_vector(parts_arg);
        else if (n > 0 && k > 0)
            parts = turan_parts(k - 1, n);
        else
            throw error(errc::invalid_argument, "need --parts or both --n and --k");
        std::cout << count_copies_in_multipartite(load_graph(pattern_arg), parts).str() << "\n";
        return 0;
    }
    if (*table_cmd) {
        std::optional<int> kopt;
        if (*table_k) kopt = k;
        TypeTable table = build_type_table(load_graph(pattern_arg), kopt,
                                           load_graphs(gadget_args), load_graphs(extra_args));
        std::cout << (format == "csv" ? render_table_csv(table) : render_table_json(table));
        return 0;
    }
    if (*certify_cmd) {
        GoodnessRegistry registry = make_registry(axiom_path);
        Certificate cert = certificate_from_json(slurp(cert_path));
        VerificationReport report = verify_certificate(cert, registry);
        if (*bound_opt && report.verified) {
            nlohmann::json j;
            j["verification"] = nlohmann::json::parse(verification_report_to_json(report));
            BoundReport bound = certificate_bound_at(cert, registry, bound_at);
            j["bound"] = {{"n", bound.n},
                          {"pattern_count", bound.pattern_count.str()},
                          {"bound", bound.bound.str()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << verification_report_to_json(report);
        }
        return report.verified ? 0 : 1;
    }
    if (*find_cmd) {
        GoodnessRegistry registry = make_registry(axiom_path);
        FindResult res =
            find_certificate(load_graph(pattern_arg), k, load_graphs(gadget_args), registry);
        if (std::holds_alternative<InfeasibilityWitness>(res)) {
            std::cout << witness_to_json(std::get<InfeasibilityWitness>(res));
            return 1;
        }
        std::string text = certificate_to_json(std::get<Certificate>(res));
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            f << text;
        }
        std::cout << text;
        return 0;
    }
    if (*extremal_cmd) {
        ExtremalReport report = brute_force_ex(load_graph(pattern_arg), n, k, !full);
        std::cout << extremal_report_to_json(report);
        return 0;
    }
    if (*registry_cmd) {
        GoodnessRegistry registry = make_registry(axiom_path);
        if (dump) {
            registry.dump(std::cout);
            return 0;
        }
        if (!*reg_pattern || !*reg_k)
            throw error(errc::invalid_argument, "need --pattern and --k (or --dump)");
        auto entry = registry.is_known_good(load_graph(pattern_arg), k);
        nlohmann::json j;
        j["known"] = entry.has_value();
        if (entry) {
            j["graph"] = to_graph6(entry->rep);
            j["k"] = entry->condition.str();
            j["provenance"] = provenance_tag(entry->provenance);
            j["note"] = entry->note;
        }
        std::cout << j.dump(2) << "\n";
        return entry ? 0 : 1;
    }
    if (*gen_cmd) {
        std::vector<SmallGraph> stream;
        if (maximal) {
            if (!*gen_k) throw error(errc::invalid_argument, "--maximal needs --k");
            stream = enumerate_kfree_maximal(n, k);
            if (*gen_contains) {
                SmallGraph h = load_graph(pattern_arg);
                std::erase_if(stream,
                              [&](const SmallGraph& g) { return count_copies(h, g) == 0; });
            }
        } else if (*gen_contains) {
            stream = enumerate_types(n, *gen_k ? std::optional<int>(k) : std::nullopt,
                                     load_graph(pattern_arg));
        } else if (*gen_k) {
            stream = enumerate_kfree(n, k);
        } else {
            stream = enumerate_graphs(n);
        }
        for (const SmallGraph& g : stream) std::cout << to_graph6(g) << "\n";
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const turan::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code == turan::errc::provenance || e.code == turan::errc::unverified ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
