#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nfam/nfam.hpp"

/* Exit codes: 0 success / property holds, 1 property violated or
 * conjecture mismatch, 2 usage or validation error, 3 exact-search
 * guard exceeded.  Reports go to stdout as JSON with fixed key order:
 * {"command", "params", "result", "elapsed_ms"}.  Sizes that may
 * overflow doubles are serialized as decimal strings.
 */
namespace {

using nfam::BigInt;
using nfam::Json;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    long long ms() const {
        const auto dt = std::chrono::steady_clock::now() - start;
        return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
    }
};

Json to_json_rows(const std::vector<nfam::IntSeq>& rows) {
    Json arr = Json::array();
    for (const nfam::IntSeq& x : rows) arr.push_back(x);
    return arr;
}

void print_report(const std::string& command, Json params, Json result, long long elapsed_ms) {
    Json rep;
    rep["command"] = command;
    rep["params"] = std::move(params);
    rep["result"] = std::move(result);
    rep["elapsed_ms"] = elapsed_ms;
    std::cout << rep.dump(2) << '\n';
}

Json breakdown_json(const nfam::SizeBreakdown& b) {
    Json j;
    j["base"] = b.base_term.str();
    Json layers = Json::array();
    for (const BigInt& t : b.layer_terms) layers.push_back(t.str());
    j["layers"] = std::move(layers);
    j["total"] = b.total.str();
    return j;
}

Json violation_json(const nfam::UnionViolation& v) {
    Json j;
    j["multiset"] = to_json_rows(v.multiset);
    j["join"] = v.join_value;
    j["weight"] = v.join_weight;
    return j;
}

Json profile_json(const nfam::ProfileResult& pr) {
    Json j;
    j["status"] = nfam::to_string(pr.status);
    if (!pr.detail.empty()) j["detail"] = pr.detail;
    if (pr.profile) {
        j["maxima"] = pr.profile->maxima;
        j["radius"] = pr.profile->radius;
        j["center"] = pr.profile->center;
        j["peaks"] = to_json_rows(pr.profile->peaks);
        j["assumption_holds"] = pr.profile->assumption_holds;
    }
    return j;
}

Json search_result_json(const nfam::SearchReport& rep) {
    Json res;
    res["universe_size"] = rep.universe_size;
    res["search_max"] = rep.search_max;
    res["optima_complete"] = rep.optima_complete;
    Json optima = Json::array();
    for (const nfam::Antichain& ac : rep.optima) optima.push_back(to_json_rows(ac.members()));
    res["optima"] = std::move(optima);
    if (rep.conjectured) {
        Json cj;
        cj["size"] = rep.conjectured->size.str();
        Json choices = Json::array();
        for (const nfam::BalancedChoice& c : rep.conjectured->optima) {
            Json ch;
            ch["radius"] = c.radius;
            ch["center"] = c.center;
            choices.push_back(std::move(ch));
        }
        cj["choices"] = std::move(choices);
        res["conjectured"] = std::move(cj);
        res["match"] = rep.match;
        res["unique_strict"] = rep.unique_strict;
        res["unique_up_to_permutation"] = rep.unique_up_to_permutation;
    } else {
        res["conjectured"] = nullptr;  // no candidate family exists when n < r
        res["match"] = nullptr;
    }
    return res;
}

int run_construct(int r, int n, const std::vector<int>& a, int d, const std::string& emit,
                  const std::string& format, const std::string& out_path) {
    const nfam::Params params = nfam::Params::make(r, n, a, d);
    const Timer timer;
    const nfam::Family K = nfam::candidate_family(params);
    const long long ms = timer.ms();
    Json p;
    p["r"] = r;
    p["n"] = n;
    p["a"] = a;
    p["d"] = d;
    if (emit == "count") {
        Json res;
        res["s"] = params.s;
        res["size"] = K.size();
        print_report("construct", std::move(p), std::move(res), ms);
        return 0;
    }
    if (format == "csv") {
        const std::string csv = nfam::family_to_csv(K);
        if (out_path.empty()) {
            std::cout << csv;
        } else {
            std::ofstream f(out_path);
            if (!f) throw std::invalid_argument("cannot write " + out_path);
            f << csv;
        }
        return 0;
    }
    Json res;
    res["s"] = params.s;
    res["size"] = K.size();
    if (out_path.empty()) {
        res["family"] = nfam::family_to_json(K);
    } else {
        nfam::save_family(K, out_path);
        res["file"] = out_path;
    }
    print_report("construct", std::move(p), std::move(res), ms);
    return 0;
}

int run_count(int r, int n, const std::vector<int>& a, int d) {
    const nfam::Params params = nfam::Params::make(r, n, a, d);
    const Timer timer;
    const nfam::SizeBreakdown breakdown = nfam::closed_form_size(params);
    const nfam::Family K = nfam::candidate_family(params);
    const long long ms = timer.ms();
    const bool agree = breakdown.total == BigInt(K.size());
    Json p;
    p["r"] = r;
    p["n"] = n;
    p["a"] = a;
    p["d"] = d;
    Json res;
    res["s"] = params.s;
    res["closed_form"] = breakdown_json(breakdown);
    res["enumerated"] = K.size();
    res["agree"] = agree;
    print_report("count", std::move(p), std::move(res), ms);
    return agree ? 0 : 1;
}

int run_verify(const std::string& family_path, int r, int s, bool check_downset,
               bool want_profile) {
    const nfam::Family A = nfam::load_family(family_path);
    const Timer timer;
    const std::optional<nfam::UnionViolation> violation = nfam::find_union_violation(A, r, s);
    Json res;
    res["r_wise_s_union"] = !violation.has_value();
    res["violation"] = violation ? violation_json(*violation) : Json(nullptr);
    bool failed = violation.has_value();
    if (check_downset) {
        const bool ds = nfam::is_downset(A);
        res["downset"] = ds;
        failed = failed || !ds;
    }
    if (want_profile) {
        if (A.empty()) throw std::invalid_argument("profile of an empty family is undefined");
        res["profile"] = profile_json(nfam::derive_profile(A, r, s));
    }
    const long long ms = timer.ms();
    Json p;
    p["family"] = family_path;
    p["r"] = r;
    p["s"] = s;
    p["downset"] = check_downset;
    p["profile"] = want_profile;
    print_report("verify", std::move(p), std::move(res), ms);
    return failed ? 1 : 0;
}

int run_search(bool conjecture_mode, int n, int r, int s, const nfam::SearchOptions& opts) {
    const Timer timer;
    const nfam::SearchReport rep = conjecture_mode ? nfam::check_conjecture(n, r, s, opts)
                                                   : nfam::max_family_search(n, r, s, opts);
    const long long ms = timer.ms();
    Json p;
    p["n"] = n;
    p["r"] = r;
    p["s"] = s;
    p["all_optima"] = rep.optima_complete;
    p["max_universe"] = opts.max_universe;
    p["threads"] = opts.threads;
    print_report(conjecture_mode ? "conjecture" : "search", std::move(p), search_result_json(rep),
                 ms);
    return (conjecture_mode && !rep.match) ? 1 : 0;
}

int run_refsize(int n, int r, int s) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (r < 2) throw std::invalid_argument("r must be at least 2");
    if (s < 0) throw std::invalid_argument("s must be non-negative");
    const int p = s % r;
    const int d = s / r;
    if (n < p) throw std::invalid_argument("reference family needs n >= s mod r");
    const Timer timer;
    const BigInt size = nfam::reference_size(n, p, d);
    const long long ms = timer.ms();
    Json pj;
    pj["n"] = n;
    pj["r"] = r;
    pj["s"] = s;
    Json res;
    res["p"] = p;
    res["radius"] = d;
    res["size"] = size.str();
    print_report("refsize", std::move(pj), std::move(res), ms);
    return 0;
}

long long resolve_universe_cap(bool flag_given, long long flag_value) {
    if (flag_given) {
        if (flag_value < 1) throw std::invalid_argument("--max-universe must be positive");
        return flag_value;
    }
    if (const char* env = std::getenv("NFAM_MAX_UNIVERSE")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) {
            throw std::invalid_argument("NFAM_MAX_UNIVERSE must be a positive integer");
        }
        return v;
    }
    return nfam::SearchOptions{}.max_universe;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction, counting, verification, and maximum search for "
                 "r-wise s-union families of integer vectors"};
    app.require_subcommand(1);

    int r = 2;
    int n = 1;
    int s = 0;
    int d = 0;
    int threads = 1;
    long long max_universe = 0;
    std::vector<int> a;
    std::string emit = "vectors";
    std::string format = "json";
    std::string out_path;
    std::string family_path;
    bool all_optima = false;
    bool check_downset = false;
    bool want_profile = false;

    CLI::App* c_construct = app.add_subcommand("construct", "build the layered candidate family");
    c_construct->add_option("--r", r, "union arity")->required();
    c_construct->add_option("--n", n, "dimension")->required();
    c_construct->add_option("--a", a, "center vector, comma-separated")->required()->delimiter(',');
    c_construct->add_option("--d", d, "radius")->required();
    c_construct->add_option("--emit", emit, "vectors or count")
        ->check(CLI::IsMember({"vectors", "count"}));
    c_construct->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    c_construct->add_option("--out", out_path, "write the family to this file");

    CLI::App* c_count = app.add_subcommand("count", "closed-form size against enumeration");
    c_count->add_option("--r", r, "union arity")->required();
    c_count->add_option("--n", n, "dimension")->required();
    c_count->add_option("--a", a, "center vector, comma-separated")->required()->delimiter(',');
    c_count->add_option("--d", d, "radius")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "check the r-wise s-union property");
    c_verify->add_option("--family", family_path, "family file (JSON)")->required();
    c_verify->add_option("--r", r, "union arity")->required();
    c_verify->add_option("--s", s, "weight budget")->required();
    c_verify->add_flag("--downset", check_downset, "also check down-closure");
    c_verify->add_flag("--profile", want_profile, "also derive the peak profile");

    CLI::App* c_search = app.add_subcommand("search", "exact maximum family size");
    c_search->add_option("--n", n, "dimension")->required();
    c_search->add_option("--r", r, "union arity")->required();
    c_search->add_option("--s", s, "weight budget")->required();
    c_search->add_flag("--all-optima", all_optima, "collect every optimal family");
    c_search->add_option("--max-universe", max_universe, "exact-search cap override");
    c_search->add_option("--threads", threads, "worker count, 1 = sequential")
        ->check(CLI::PositiveNumber);

    CLI::App* c_conjecture =
        app.add_subcommand("conjecture", "search maximum against the best balanced candidate");
    c_conjecture->add_option("--n", n, "dimension")->required();
    c_conjecture->add_option("--r", r, "union arity")->required();
    c_conjecture->add_option("--s", s, "weight budget")->required();
    c_conjecture->add_option("--max-universe", max_universe, "exact-search cap override");
    c_conjecture->add_option("--threads", threads, "worker count, 1 = sequential")
        ->check(CLI::PositiveNumber);

    CLI::App* c_refsize = app.add_subcommand("refsize", "one-shell reference family size");
    c_refsize->add_option("--n", n, "dimension")->required();
    c_refsize->add_option("--r", r, "union arity")->required();
    c_refsize->add_option("--s", s, "weight budget")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_construct) return run_construct(r, n, a, d, emit, format, out_path);
        if (*c_count) return run_count(r, n, a, d);
        if (*c_verify) return run_verify(family_path, r, s, check_downset, want_profile);
        if (*c_search || *c_conjecture) {
            CLI::App* sub = *c_search ? c_search : c_conjecture;
            nfam::SearchOptions opts;
            opts.all_optima = all_optima;
            opts.threads = threads;
            opts.max_universe = resolve_universe_cap(sub->count("--max-universe") > 0, max_universe);
            return run_search(c_conjecture->parsed(), n, r, s, opts);
        }
        if (*c_refsize) return run_refsize(n, r, s);
    } catch (const nfam::guard_error& e) {
        std::cerr << "guard: " << e.what()
                  << "; raise --max-universe or NFAM_MAX_UNIVERSE to proceed" << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
