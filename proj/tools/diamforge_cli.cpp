// Command-line front end over the diamforge C API.
//
// Exit status: 0 success, 1 verification failure, 2 invalid arguments.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "diamforge/diamforge.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr unsigned long long kDefaultBudget = 100000000ULL;

using nlohmann::json;

struct StringDeleter {
    void operator()(char* s) const { dfg_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ComplexDeleter {
    void operator()(dfg_complex* c) const { dfg_complex_free(c); }
};
struct GenseqDeleter {
    void operator()(dfg_genseq* g) const { dfg_genseq_free(g); }
};
struct DecompDeleter {
    void operator()(dfg_decomposition* d) const { dfg_decomposition_free(d); }
};
struct SearchDeleter {
    void operator()(dfg_search_result* r) const { dfg_search_free(r); }
};

// Maps a library failure to an exit status and reports it.
int report(dfg_status s) {
    std::cerr << "error: " << dfg_last_error() << "\n";
    switch (s) {
        case DFG_ERR_INVALID_ARGUMENT:
        case DFG_ERR_PRECONDITION:
        case DFG_ERR_NOT_FOUND: return kUsage;
        default: return kFailed;
    }
}

bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

template <class F>
json take_json(F&& to_json) {
    char* raw = nullptr;
    dfg_status s = to_json(&raw);
    if (s != DFG_OK) throw std::runtime_error(dfg_last_error());
    OwnedString owned(raw);
    return json::parse(owned.get());
}

void print_pair_text(const json& j) {
    std::cout << "labels:";
    for (const auto& v : j.at("labels")) std::cout << ' ' << v.get<int>();
    std::cout << "\nlayout:";
    for (const auto& v : j.at("layout")) std::cout << ' ' << v.get<int>();
    std::cout << "\n";
}

void print_certificate_text(const json& c) {
    std::cout << "good: " << (c.at("good").get<bool>() ? "yes" : "no") << "\n";
    std::cout << "circular: " << (c.at("circular").get<bool>() ? "yes" : "no") << "\n";
    std::cout << "covered_edges: " << c.at("covered_edges").get<long long>() << "\n";
    std::cout << "diameter: " << (c.at("diameter").is_null() ? std::string("none") : c.at("diameter").dump()) << "\n";
    std::cout << "optimum: " << c.at("optimum").get<int>() << "\n";
    std::cout << "matches_optimum: " << (c.at("matches_optimum").get<bool>() ? "yes" : "no") << "\n";
    std::cout << "uncovered_edges:";
    for (const auto& e : c.at("uncovered_edges")) std::cout << " {" << e[0] << "," << e[1] << "}";
    std::cout << "\n";
}

int cmd_construct(int n, const std::string& format) {
    dfg_complex* raw = nullptr;
    if (dfg_status s = dfg_construct(n, &raw); s != DFG_OK) return report(s);
    std::unique_ptr<dfg_complex, ComplexDeleter> c(raw);
    json j = take_json([&](char** o) { return dfg_complex_to_json(c.get(), o); });
    if (format == "text") {
        std::cout << "n: " << n << "\n";
        print_certificate_text(j.at("certificate"));
        print_pair_text(j);
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return j.at("certificate").at("matches_optimum").get<bool>() ? kOk : kFailed;
}

int cmd_verify(const std::string& path, bool circular_ok) {
    std::string text;
    if (!read_input(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return kUsage;
    }
    dfg_complex* raw = nullptr;
    if (dfg_status s = dfg_complex_from_json(text.c_str(), &raw); s != DFG_OK) return report(s);
    std::unique_ptr<dfg_complex, ComplexDeleter> c(raw);
    json j = take_json([&](char** o) { return dfg_complex_to_json(c.get(), o); });
    const json& cert = j.at("certificate");
    std::cout << cert.dump(2) << "\n";
    const bool good = cert.at("good").get<bool>();
    const bool circular = cert.at("circular").get<bool>();
    if (circular && !circular_ok) std::cerr << "note: the pair is circular; pass --circular-ok to accept it\n";
    return good && (!circular || circular_ok) ? kOk : kFailed;
}

int cmd_genseq(int n, const std::string& missing) {
    dfg_family fam = missing == "none" ? DFG_FAMILY_FULL
                     : missing == "12" ? DFG_FAMILY_MISSING_12
                                       : DFG_FAMILY_MISSING_1248;
    dfg_genseq* raw = nullptr;
    if (dfg_status s = dfg_genseq_family(n, fam, &raw); s != DFG_OK) return report(s);
    std::unique_ptr<dfg_genseq, GenseqDeleter> g(raw);
    json j = take_json([&](char** o) { return dfg_genseq_to_json(g.get(), o); });
    std::cout << j.dump(2) << "\n";
    return j.at("valid").get<bool>() ? kOk : kFailed;
}

int cmd_decompose(int p, int builtin, const std::string& path) {
    dfg_decomposition* raw = nullptr;
    dfg_status s;
    if (p != 0) {
        s = dfg_decompose_prime(p, &raw);
    } else if (builtin != 0) {
        s = dfg_decompose_builtin(builtin, &raw);
    } else {
        std::string text;
        if (!read_input(path, text)) {
            std::cerr << "error: cannot read " << path << "\n";
            return kUsage;
        }
        s = dfg_decomposition_from_json(text.c_str(), &raw);
    }
    if (s != DFG_OK) return report(s);
    std::unique_ptr<dfg_decomposition, DecompDeleter> d(raw);
    json j = take_json([&](char** o) { return dfg_decomposition_to_json(d.get(), o); });
    std::cout << j.dump(2) << "\n";
    return j.at("report").at("success").get<bool>() ? kOk : kFailed;
}

int cmd_search(int n, unsigned long long budget, int jobs) {
    dfg_search_result* raw = nullptr;
    if (dfg_status s = dfg_search(n, budget, jobs, &raw); s != DFG_OK) return report(s);
    std::unique_ptr<dfg_search_result, SearchDeleter> r(raw);
    json j = take_json([&](char** o) { return dfg_search_to_json(r.get(), o); });
    std::cout << j.dump(2) << "\n";
    return kOk;
}

int cmd_table(int n) {
    dfg_complex* raw = nullptr;
    dfg_status s = dfg_small_table(n, &raw);
    if (s == DFG_ERR_NOT_FOUND) {
        std::cout << json{{"found", false}, {"n", n}}.dump(2) << "\n";
        return kOk;
    }
    if (s != DFG_OK) return report(s);
    std::unique_ptr<dfg_complex, ComplexDeleter> c(raw);
    json j = take_json([&](char** o) { return dfg_complex_to_json(c.get(), o); });
    j["found"] = true;
    std::cout << j.dump(2) << "\n";
    return kOk;
}

unsigned long long default_budget() {
    const char* env = std::getenv("DIAMFORGE_BUDGET");
    if (!env || !*env) return kDefaultBudget;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw CLI::ValidationError("DIAMFORGE_BUDGET", "must be a non-negative integer");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum-diameter simplicial 2-complexes and Hamilton cycle square packings", "diamforge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", dfg_version());
    long long seed = 0;
    app.add_option("--seed", seed, "Reserved; every construction is deterministic");

    int n = 0;
    std::string format = "json";
    auto* construct = app.add_subcommand("construct", "Build an optimal complex on n vertices");
    construct->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(3, 100000));
    construct->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::string input;
    bool circular_ok = false;
    auto* verify = app.add_subcommand("verify", "Certify a (labels, layout) pair read from JSON");
    verify->add_option("--input", input, "JSON file, or - for stdin")->required();
    verify->add_flag("--circular-ok", circular_ok, "Accept circular pairs");

    std::string missing = "none";
    auto* gen = app.add_subcommand("genseq", "Emit and verify a generating sequence for n = 4k+1");
    gen->add_option("--n", n, "Modulus 4k+1")->required();
    gen->add_option("--missing", missing, "Residues left uncovered")->check(CLI::IsMember({"none", "12", "1248"}));

    int p = 0, builtin = 0;
    auto* dec = app.add_subcommand("decompose", "Partition K_n into squares of Hamilton cycles");
    auto* opt_p = dec->add_option("--p", p, "Prime with ord_p(2) divisible by 4");
    auto* opt_b = dec->add_option("--builtin", builtin, "Built-in data set (105)");
    auto* opt_i = dec->add_option("--input", input, "Decomposition JSON file, or - for stdin");
    opt_p->excludes(opt_b)->excludes(opt_i);
    opt_b->excludes(opt_i);
    dec->require_option(1);

    unsigned long long budget = 0;
    int jobs = 1;
    auto* search = app.add_subcommand("search", "Exhaustive search for the maximum diameter");
    search->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(3, 64));
    auto* opt_budget = search->add_option("--budget", budget, "Node limit (0 = unlimited)");
    search->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

    auto* table = app.add_subcommand("table", "Show the stored optimal pair for a small n");
    table->add_option("--n", n, "Number of vertices")->required();

    try {
        app.parse(argc, argv);
        if (construct->parsed()) return cmd_construct(n, format);
        if (verify->parsed()) return cmd_verify(input, circular_ok);
        if (gen->parsed()) return cmd_genseq(n, missing);
        if (dec->parsed()) return cmd_decompose(p, builtin, input);
        if (search->parsed()) return cmd_search(n, opt_budget->count() ? budget : default_budget(), jobs);
        if (table->parsed()) return cmd_table(n);
    } catch (const CLI::ParseError& e) {
        // Help and version requests exit 0; everything else is a usage error.
        return app.exit(e) == 0 ? kOk : kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
