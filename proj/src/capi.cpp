#include "diamforge/diamforge.h"

#include <cstring>
#include <new>
#include <string>

#include "serialize.hpp"

using namespace dfg;

struct dfg_complex {
    core::LabelsLayout pair;
    core::TriangleSeq seq;
    core::Certificate cert;
};

struct dfg_genseq {
    genseq::GeneratingSequence gs;
    genseq::VerifyResult verdict;
};

struct dfg_decomposition {
    hampack::Decomposition d;
    hampack::PartitionReport report;
};

struct dfg_search_result {
    oracle::SearchResult r;
};

namespace {

thread_local std::string g_error;

dfg_status code_of(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return DFG_ERR_INVALID_ARGUMENT;
        case ErrorKind::Degenerate: return DFG_ERR_DEGENERATE;
        case ErrorKind::NotGood: return DFG_ERR_NOT_GOOD;
        case ErrorKind::Precondition: return DFG_ERR_PRECONDITION;
        case ErrorKind::Construction: return DFG_ERR_CONSTRUCTION;
    }
    return DFG_ERR_INTERNAL;
}

dfg_status fail(dfg_status s, const std::string& msg) {
    g_error = msg;
    return s;
}

template <class F>
dfg_status guard(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        return fail(code_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(DFG_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(DFG_ERR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

dfg_complex* from_seq(core::TriangleSeq seq, int n) {
    auto* c = new dfg_complex;
    c->pair = core::encode_triples(seq, n);
    c->seq = std::move(seq);
    c->cert = core::certify(c->seq, n);
    return c;
}

dfg_complex* from_pair(core::LabelsLayout pair) {
    auto* c = new dfg_complex;
    c->seq = core::expand_pair(pair);
    c->cert = core::certify(c->seq, pair.n);
    c->pair = std::move(pair);
    return c;
}

#define DFG_REQUIRE(cond) \
    if (!(cond)) return fail(DFG_ERR_INVALID_ARGUMENT, "null argument: " #cond)

}  // namespace

extern "C" {

const char* dfg_version(void) { return "1.0.0"; }

const char* dfg_last_error(void) { return g_error.c_str(); }

void dfg_string_free(char* s) { delete[] s; }

dfg_status dfg_hs_max_diameter(int n, int* out) {
    DFG_REQUIRE(out);
    return guard([&] {
        *out = core::hs_max_diameter(n);
        return DFG_OK;
    });
}

dfg_status dfg_construct(int n, dfg_complex** out) {
    DFG_REQUIRE(out);
    return guard([&] {
        auto built = assembly::construct_optimal(n);
        auto* c = new dfg_complex;
        c->pair = core::encode_triples(built.seq, n);
        c->seq = std::move(built.seq);
        c->cert = std::move(built.cert);
        *out = c;
        return DFG_OK;
    });
}

dfg_status dfg_construct_general(int n, dfg_complex** out) {
    DFG_REQUIRE(out);
    return guard([&] {
        *out = from_seq(assembly::construct_general(n), n);
        return DFG_OK;
    });
}

dfg_status dfg_small_table(int n, dfg_complex** out) {
    DFG_REQUIRE(out);
    return guard([&] {
        auto entry = assembly::small_table(n);
        if (!entry) return fail(DFG_ERR_NOT_FOUND, "no table entry for n=" + std::to_string(n));
        *out = from_pair(entry->pair);
        return DFG_OK;
    });
}

dfg_status dfg_complex_from_pair(int n, const int* labels, size_t label_count, const unsigned char* layout,
                                 size_t layout_count, dfg_complex** out) {
    DFG_REQUIRE(out);
    DFG_REQUIRE(labels || label_count == 0);
    DFG_REQUIRE(layout || layout_count == 0);
    return guard([&] {
        core::LabelsLayout pair;
        pair.n = n;
        pair.labels.assign(labels, labels + label_count);
        pair.layout.assign(layout, layout + layout_count);
        *out = from_pair(std::move(pair));
        return DFG_OK;
    });
}

dfg_status dfg_complex_from_json(const char* json, dfg_complex** out) {
    DFG_REQUIRE(json);
    DFG_REQUIRE(out);
    return guard([&] {
        *out = from_pair(serialize::parse_pair(json));
        return DFG_OK;
    });
}

dfg_status dfg_complex_triangle_count(const dfg_complex* c, size_t* out) {
    DFG_REQUIRE(c);
    DFG_REQUIRE(out);
    *out = c->seq.triangles.size();
    return DFG_OK;
}

dfg_status dfg_complex_triangle(const dfg_complex* c, size_t index, int out[3]) {
    DFG_REQUIRE(c);
    DFG_REQUIRE(out);
    if (index >= c->seq.triangles.size()) return fail(DFG_ERR_INVALID_ARGUMENT, "triangle index out of range");
    for (int i = 0; i < 3; ++i) out[i] = c->seq.triangles[index].v[i];
    return DFG_OK;
}

dfg_status dfg_complex_certificate(const dfg_complex* c, dfg_certificate* out) {
    DFG_REQUIRE(c);
    DFG_REQUIRE(out);
    out->good = c->cert.good;
    out->circular = c->cert.circular;
    out->covered_edges = c->cert.covered_edges;
    out->has_diameter = c->cert.diameter.has_value();
    out->diameter = c->cert.diameter.value_or(-1);
    out->optimum = c->cert.optimum;
    out->matches_optimum = c->cert.matches_optimum;
    out->uncovered_count = c->cert.uncovered_edges.size();
    return DFG_OK;
}

dfg_status dfg_complex_to_json(const dfg_complex* c, char** out) {
    DFG_REQUIRE(c);
    DFG_REQUIRE(out);
    return guard([&] {
        auto j = serialize::pair_json(c->pair);
        j["certificate"] = serialize::certificate_json(c->cert);
        *out = copy_string(serialize::dump(j));
        return DFG_OK;
    });
}

void dfg_complex_free(dfg_complex* c) { delete c; }

dfg_status dfg_genseq_family(int n, dfg_family family, dfg_genseq** out) {
    DFG_REQUIRE(out);
    return guard([&] {
        if (n < 13 || n % 4 != 1) return fail(DFG_ERR_INVALID_ARGUMENT, "n must be 4k+1 with k >= 3");
        genseq::Family f;
        switch (family) {
            case DFG_FAMILY_FULL: f = genseq::Family::Full; break;
            case DFG_FAMILY_MISSING_12: f = genseq::Family::Missing12; break;
            case DFG_FAMILY_MISSING_1248: f = genseq::Family::Missing1248; break;
            default: return fail(DFG_ERR_INVALID_ARGUMENT, "unknown family");
        }
        auto* g = new dfg_genseq;
        g->gs = genseq::family(f, (n - 1) / 4);
        g->verdict = genseq::verify_generating_sequence(g->gs);
        *out = g;
        return DFG_OK;
    });
}

dfg_status dfg_genseq_create(int n, const int* terms, size_t term_count, const int* turns, size_t turn_count,
                             dfg_genseq** out) {
    DFG_REQUIRE(out);
    DFG_REQUIRE(terms || term_count == 0);
    DFG_REQUIRE(turns || turn_count == 0);
    return guard([&] {
        if (n < 1) return fail(DFG_ERR_INVALID_ARGUMENT, "n must be positive");
        auto* g = new dfg_genseq;
        g->gs.n = n;
        for (size_t i = 0; i < term_count; ++i) g->gs.terms.push_back(genseq::mod(terms[i], n));
        g->gs.turns.assign(turns, turns + turn_count);
        g->verdict = genseq::verify_generating_sequence(g->gs);
        *out = g;
        return DFG_OK;
    });
}

dfg_status dfg_genseq_valid(const dfg_genseq* g, int* valid) {
    DFG_REQUIRE(g);
    DFG_REQUIRE(valid);
    *valid = g->verdict.valid;
    return DFG_OK;
}

dfg_status dfg_genseq_expand(const dfg_genseq* g, dfg_complex** out) {
    DFG_REQUIRE(g);
    DFG_REQUIRE(out);
    return guard([&] {
        *out = from_pair(genseq::expand_to_circular(g->gs));
        return DFG_OK;
    });
}

dfg_status dfg_genseq_to_json(const dfg_genseq* g, char** out) {
    DFG_REQUIRE(g);
    DFG_REQUIRE(out);
    return guard([&] {
        *out = copy_string(serialize::dump(serialize::genseq_json(g->gs, g->verdict)));
        return DFG_OK;
    });
}

void dfg_genseq_free(dfg_genseq* g) { delete g; }

namespace {

dfg_decomposition* wrap(hampack::Decomposition d) {
    auto* out = new dfg_decomposition;
    out->report = hampack::verify_partition(d);
    out->d = std::move(d);
    return out;
}

}  // namespace

dfg_status dfg_decompose_prime(int p, dfg_decomposition** out) {
    DFG_REQUIRE(out);
    return guard([&] {
        *out = wrap(hampack::decompose_prime(p));
        return DFG_OK;
    });
}

dfg_status dfg_decompose_builtin(int n, dfg_decomposition** out) {
    DFG_REQUIRE(out);
    return guard([&] {
        if (n != 105) return fail(DFG_ERR_NOT_FOUND, "no builtin data for n=" + std::to_string(n));
        *out = wrap(hampack::decompose_builtin_105());
        return DFG_OK;
    });
}

dfg_status dfg_decomposition_from_json(const char* json, dfg_decomposition** out) {
    DFG_REQUIRE(json);
    DFG_REQUIRE(out);
    return guard([&] {
        *out = wrap(serialize::parse_decomposition(json));
        return DFG_OK;
    });
}

dfg_status dfg_decomposition_cycle_count(const dfg_decomposition* d, size_t* out) {
    DFG_REQUIRE(d);
    DFG_REQUIRE(out);
    *out = d->d.cycles.size();
    return DFG_OK;
}

dfg_status dfg_decomposition_verify(const dfg_decomposition* d, int* success) {
    DFG_REQUIRE(d);
    DFG_REQUIRE(success);
    *success = d->report.success;
    return DFG_OK;
}

dfg_status dfg_decomposition_to_json(const dfg_decomposition* d, char** out) {
    DFG_REQUIRE(d);
    DFG_REQUIRE(out);
    return guard([&] {
        auto j = serialize::decomposition_json(d->d);
        j["report"] = serialize::report_json(d->report);
        *out = copy_string(serialize::dump(j));
        return DFG_OK;
    });
}

void dfg_decomposition_free(dfg_decomposition* d) { delete d; }

dfg_status dfg_search(int n, unsigned long long budget, int jobs, dfg_search_result** out) {
    DFG_REQUIRE(out);
    return guard([&] {
        if (jobs < 1) return fail(DFG_ERR_INVALID_ARGUMENT, "jobs must be at least 1");
        oracle::SearchOptions opts;
        opts.budget = budget;
        opts.jobs = jobs;
        *out = new dfg_search_result{oracle::search_max_diameter(n, opts)};
        return DFG_OK;
    });
}

dfg_status dfg_search_summary(const dfg_search_result* r, int* best_diameter, int* exhaustive,
                              unsigned long long* nodes) {
    DFG_REQUIRE(r);
    if (best_diameter) *best_diameter = r->r.best_diameter;
    if (exhaustive) *exhaustive = r->r.exhaustive;
    if (nodes) *nodes = r->r.nodes_explored;
    return DFG_OK;
}

dfg_status dfg_search_to_json(const dfg_search_result* r, char** out) {
    DFG_REQUIRE(r);
    DFG_REQUIRE(out);
    return guard([&] {
        *out = copy_string(serialize::dump(serialize::search_json(r->r)));
        return DFG_OK;
    });
}

void dfg_search_free(dfg_search_result* r) { delete r; }

}  // extern "C"
