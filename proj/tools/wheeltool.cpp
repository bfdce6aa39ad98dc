#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wheels/case_generation.hpp"
#include "wheels/connectivity.hpp"
#include "wheels/io.hpp"
#include "wheels/isomorphism.hpp"
#include "wheels/subdivision_search.hpp"
#include "wheels/wheel_recognition.hpp"

namespace fs = std::filesystem;

namespace {

wheels::vertex_set parse_ids(const std::string& s) {
    std::string cleaned = s;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::istringstream ss(cleaned);
    wheels::vertex_set out;
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::runtime_error("invalid vertex id '" + tok + "'");
        }
    }
    if (out.empty()) throw std::runtime_error("empty vertex list '" + s + "'");
    return out;
}

std::string join_ids(const wheels::vertex_set& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i]);
    }
    return out;
}

void write_graph_file(const fs::path& p, const wheels::graph& g) {
    std::ofstream f(p);
    if (!f) throw std::runtime_error("cannot write file: " + p.string());
    wheels::write_edge_list(f, g);
}

// Shared tail of the wheelproof and exceptions reports: counts, optional
// isomorphism-class summary, note for an empty run, then output files.
void report_exceptions(const wheels::exception_list& exl, bool dedup,
                       const std::string& outdir, bool separation_note) {
    std::cout << "status: " << (exl.budget_exhausted ? "budget_exhausted" : "ok")
              << "\n";
    std::cout << "candidates_tested: " << exl.candidates_tested << "\n";
    std::cout << "exceptions_found: " << exl.graphs.size() << "\n";
    std::cout << "skipped_not_3connected: " << exl.skipped_not_3connected
              << "\n";

    std::optional<wheels::iso_class_summary> summary;
    if (dedup) {
        summary = wheels::iso_classes(exl.graphs);
        std::cout << "classes: " << summary->classes.size() << "\n";
        std::string sizes;
        for (std::size_t i = 0; i < summary->classes.size(); ++i) {
            if (i) sizes += ' ';
            sizes += std::to_string(summary->classes[i].member_indices.size());
        }
        std::cout << "class_sizes: " << sizes << "\n";
    }
    if (exl.graphs.empty() && !exl.budget_exhausted) {
        std::cout << "note: all candidates contain a W_" << exl.k
                  << "-subdivision";
        if (separation_note) std::cout << "; this separation case is ruled out";
        std::cout << "\n";
    }

    if (!exl.graphs.empty() || dedup) fs::create_directories(outdir);
    for (std::size_t i = 0; i < exl.graphs.size(); ++i) {
        fs::path p = fs::path(outdir) / ("exception_" + std::to_string(i) +
                                         ".txt");
        write_graph_file(p, exl.graphs[i]);
        std::cout << "output: " << p.string() << "\n";
    }
    if (dedup) {
        fs::path p = fs::path(outdir) / "classes.txt";
        std::ofstream f(p);
        if (!f) throw std::runtime_error("cannot write file: " + p.string());
        for (std::size_t c = 0; c < summary->classes.size(); ++c) {
            const auto& cls = summary->classes[c];
            f << "class " << c << ": size " << cls.member_indices.size()
              << " members";
            for (int m : cls.member_indices) f << ' ' << m;
            f << '\n';
        }
        std::cout << "output: " << p.string() << "\n";
    }
}

int run_findwheel(const std::string& file, int k, long long budget, int jobs,
                  const std::string& outdir) {
    wheels::graph g = wheels::read_edge_list_file(file);
    wheels::search_outcome res = wheels::find_k_wheel(g, k, budget, jobs);
    std::cout << "command: findwheel\n";
    std::cout << "k: " << k << "\n";
    switch (res.status) {
        case wheels::search_status::found: {
            std::cout << "status: found\n";
            fs::create_directories(outdir);
            fs::path p = fs::path(outdir) / "witness.txt";
            write_graph_file(p, *res.witness);
            std::cout << "output: " << p.string() << "\n";
            return 0;
        }
        case wheels::search_status::not_found:
            std::cout << "status: not_found\n";
            return 1;
        case wheels::search_status::budget_exhausted:
            std::cout << "status: budget_exhausted\n";
            return 3;
    }
    return 2;
}

int run_iskwheel(const std::string& file, int k) {
    wheels::graph g = wheels::read_edge_list_file(file);
    std::optional<wheels::graph> w = wheels::is_k_wheel(g, k);
    std::cout << "command: iskwheel\n";
    std::cout << "k: " << k << "\n";
    std::cout << "status: " << (w ? "wheel" : "not_wheel") << "\n";
    return w ? 0 : 1;
}

int run_wheelproof(int k, long long budget, int jobs, const std::string& outdir,
                   bool dedup) {
    wheels::exception_list exl = wheels::wheelproof(k, jobs, budget);
    std::cout << "command: wheelproof\n";
    std::cout << "k: " << k << "\n";
    std::cout << "skip_mode: intent\n";
    report_exceptions(exl, dedup, outdir, false);
    return exl.budget_exhausted ? 3 : 0;
}

int run_exceptions(const std::string& file, int k, const std::string& sep,
                   const std::string& regions, const std::string& mode_str,
                   long long budget, int jobs, const std::string& outdir,
                   bool dedup) {
    if (sep.empty() == regions.empty()) {
        std::cerr << "error: exactly one of --sep and --regions is required\n";
        return 2;
    }
    wheels::graph g = wheels::read_edge_list_file(file);

    wheels::vertex_set a, b;
    if (!sep.empty()) {
        wheels::vertex_set s = parse_ids(sep);
        std::vector<wheels::vertex_set> comps = wheels::components_minus(g, s);
        if (comps.size() != 2) {
            std::cerr << "error: removing the separator leaves "
                      << comps.size() << " components, expected 2\n";
            return 2;
        }
        a = comps[0];
        b = comps[1];
    } else {
        std::size_t semi = regions.find(';');
        if (semi == std::string::npos ||
            regions.find(';', semi + 1) != std::string::npos) {
            std::cerr << "error: --regions must be two vertex lists separated "
                         "by one ';'\n";
            return 2;
        }
        a = parse_ids(regions.substr(0, semi));
        b = parse_ids(regions.substr(semi + 1));
    }

    wheels::skip_mode mode = mode_str == "literal" ? wheels::skip_mode::literal
                                                   : wheels::skip_mode::intent;
    wheels::exception_list exl =
        wheels::exception_generator(g, a, b, k, mode, jobs, budget);
    std::cout << "command: exceptions\n";
    std::cout << "k: " << k << "\n";
    std::cout << "skip_mode: " << mode_str << "\n";
    std::cout << "regions: " << join_ids(a) << " | " << join_ids(b) << "\n";
    report_exceptions(exl, dedup, outdir, true);
    return exl.budget_exhausted ? 3 : 0;
}

int run_isoclasses(const std::vector<std::string>& files) {
    std::vector<wheels::graph> graphs;
    graphs.reserve(files.size());
    for (const std::string& f : files)
        graphs.push_back(wheels::read_edge_list_file(f));
    wheels::iso_class_summary summary = wheels::iso_classes(graphs);
    std::cout << "command: isoclasses\n";
    std::cout << "total: " << summary.total << "\n";
    std::cout << "classes: " << summary.classes.size() << "\n";
    std::string sizes;
    for (std::size_t i = 0; i < summary.classes.size(); ++i) {
        if (i) sizes += ' ';
        sizes += std::to_string(summary.classes[i].member_indices.size());
    }
    std::cout << "class_sizes: " << sizes << "\n";
    for (std::size_t c = 0; c < summary.classes.size(); ++c) {
        std::cout << "class_" << c << ":";
        for (int m : summary.classes[c].member_indices) std::cout << ' ' << m;
        std::cout << "\n";
    }
    return 0;
}

int run_dot(const std::string& file, const std::string& outfile) {
    wheels::graph g = wheels::read_edge_list_file(file);
    std::string dot = wheels::to_dot(g);
    if (outfile.empty()) {
        std::cout << dot;
    } else {
        std::ofstream f(outfile);
        if (!f) throw std::runtime_error("cannot write file: " + outfile);
        f << dot;
        std::cout << "command: dot\n";
        std::cout << "output: " << outfile << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wheeltool: wheel-subdivision search and exception-case "
                 "generation for small graphs"};
    app.require_subcommand(1);

    std::string file, outdir = ".", outfile, sep, regions,
                mode_str = "intent";
    std::vector<std::string> files;
    int k = 0, jobs = 1;
    long long budget = -1;
    bool dedup = false;

    CLI::App* c_find = app.add_subcommand(
        "findwheel", "search a graph for a subdivision of the k-wheel");
    c_find->add_option("file", file, "input edge-list file")->required();
    c_find->add_option("-k", k, "wheel size")->required();
    c_find->add_option("--budget", budget,
                       "search-node budget, -1 for unlimited");
    c_find->add_option("--jobs", jobs, "worker threads");
    c_find->add_option("-o,--out", outdir, "output directory");

    CLI::App* c_isk = app.add_subcommand(
        "iskwheel", "test whether a graph is exactly a k-wheel subdivision");
    c_isk->add_option("file", file, "input edge-list file")->required();
    c_isk->add_option("-k", k, "wheel size")->required();

    CLI::App* c_proof = app.add_subcommand(
        "wheelproof", "enumerate the two-attachment candidates over a "
                      "(k-1)-wheel and emit the exceptions");
    c_proof->add_option("-k", k, "wheel size")->required();
    c_proof->add_option("--budget", budget,
                        "per-candidate search budget, -1 for unlimited");
    c_proof->add_option("--jobs", jobs, "worker threads");
    c_proof->add_option("-o,--out", outdir, "output directory");
    c_proof->add_flag("--dedup", dedup,
                      "group the exceptions into isomorphism classes");

    CLI::App* c_exc = app.add_subcommand(
        "exceptions", "run the exception generator across a separation of "
                      "the input graph");
    c_exc->add_option("file", file, "input edge-list file")->required();
    c_exc->add_option("-k", k, "wheel size")->required();
    c_exc->add_option("--sep", sep,
                      "separator vertices; the rest of the graph must fall "
                      "into exactly two components");
    c_exc->add_option("--regions", regions,
                      "explicit attachment regions, two vertex lists "
                      "separated by ';'");
    c_exc->add_option("--skip-mode", mode_str,
                      "neighbour-skip rule: intent or literal")
        ->check(CLI::IsMember({"intent", "literal"}));
    c_exc->add_option("--budget", budget,
                      "per-candidate search budget, -1 for unlimited");
    c_exc->add_option("--jobs", jobs, "worker threads");
    c_exc->add_option("-o,--out", outdir, "output directory");
    c_exc->add_flag("--dedup", dedup,
                    "group the exceptions into isomorphism classes");

    CLI::App* c_iso = app.add_subcommand(
        "isoclasses", "group edge-list files into isomorphism classes");
    c_iso->add_option("files", files, "input edge-list files")->required();

    CLI::App* c_dot = app.add_subcommand("dot",
                                         "convert an edge list to DOT format");
    c_dot->add_option("file", file, "input edge-list file")->required();
    c_dot->add_option("-o,--out", outfile, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    int rc = 2;
    try {
        if (c_find->parsed())
            rc = run_findwheel(file, k, budget, jobs, outdir);
        else if (c_isk->parsed())
            rc = run_iskwheel(file, k);
        else if (c_proof->parsed())
            rc = run_wheelproof(k, budget, jobs, outdir, dedup);
        else if (c_exc->parsed())
            rc = run_exceptions(file, k, sep, regions, mode_str, budget, jobs,
                                outdir, dedup);
        else if (c_iso->parsed())
            rc = run_isoclasses(files);
        else if (c_dot->parsed())
            rc = run_dot(file, outfile);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "elapsed_ms: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                     .count()
              << "\n";
    return rc;
}
