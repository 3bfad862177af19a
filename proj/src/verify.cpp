#include "satlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "satlab/constructors.hpp"
#include "satlab/formulas.hpp"
#include "satlab/graph6.hpp"
#include "satlab/saturation.hpp"

namespace satlab {

std::string to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::skipped_out_of_range: return "skipped-out-of-range";
    }
    return "?";
}

bool VerificationReport::all_passed() const {
    return std::none_of(cases.begin(), cases.end(),
                        [](const VerifyCase& c) { return c.status == CaseStatus::fail; });
}

namespace {

struct SuiteCtx {
    SearchOptions opts;
    std::map<std::string, SearchResult> memo;

    const SearchResult& search(int n, const PatternSpec& p) {
        std::string key = std::to_string(n) + "|" + to_string(p) + "|" +
                          (opts.use_pruning ? "1" : "0");
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, find_saturation_number(n, p, opts)).first;
        return it->second;
    }
};

void add_case(VerificationReport& r, std::string desc, std::string expected, std::string actual,
              bool ok) {
    r.cases.push_back({std::move(desc), std::move(expected), std::move(actual),
                       ok ? CaseStatus::pass : CaseStatus::fail});
}

void add_skip(VerificationReport& r, std::string desc, std::string reason) {
    r.cases.push_back({std::move(desc), "n/a", std::move(reason),
                       CaseStatus::skipped_out_of_range});
}

std::string key_list(const std::vector<CanonicalKey>& keys) {
    std::string out = "[";
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) out += ",";
        out += keys[i];
    }
    return out + "]";
}

void value_case(VerificationReport& r, SuiteCtx& ctx, int n, const PatternSpec& p,
                const FormulaValue& fv, long long threshold) {
    std::string desc = "sat(" + std::to_string(n) + ", " + to_string(p) + ")";
    if (!fv.valid()) {
        add_skip(r, desc,
                 "n=" + std::to_string(n) + " below validity threshold n>=" +
                     std::to_string(threshold) + " of " + fv.source);
        return;
    }
    const SearchResult& sr = ctx.search(n, p);
    add_case(r, desc, std::to_string(*fv.value),
             std::to_string(sr.sat_number) + " (classes=" + std::to_string(sr.minimal_graphs.size()) +
                 ")",
             sr.sat_number == *fv.value);
}

// Checks that a minimal set splits into join-forms over `lower` plus
// sporadics, and that every join over `lower` is present.
struct Decomposition {
    int joins = 0;
    std::vector<CanonicalKey> sporadics;
    bool classified_ok = true;
    bool covers_lower = true;
};

Decomposition decompose(const std::vector<CanonicalKey>& minimal, int s,
                        const std::vector<CanonicalKey>& lower) {
    Decomposition d;
    for (const CanonicalKey& key : minimal) {
        Graph g = graph6_decode(key);
        bool conical = false;
        for (int v = 0; v < g.order() && !conical; ++v)
            conical = g.degree(v) == g.order() - 1;
        if (!conical) {
            d.sporadics.push_back(key);
            continue;
        }
        if (is_join_form(g, lower)) {
            ++d.joins;
        } else {
            d.classified_ok = false;  // conical strip fell outside the lower minimal set
        }
    }
    for (const CanonicalKey& fkey : lower) {
        Graph f = graph6_decode(fkey);
        CanonicalKey jkey = canonical_key(join(complete_graph(s), f));
        if (std::find(minimal.begin(), minimal.end(), jkey) == minimal.end())
            d.covers_lower = false;
    }
    return d;
}

// ---- suites as data -----------------------------------------------------

// A row of the value grid: one pattern family checked against one formula
// over a range of orders. Adding a theorem is adding a row.
struct ValueGridRow {
    int s;                                   // clique part of the pattern
    std::vector<int> ks;                     // path parts to sweep
    int n_lo, n_hi;                          // order range (n_hi capped by --n-max)
    FormulaValue (*formula)(long long, int);
    int threshold_offset;                    // validity starts at a_k + offset
};

// Expected sporadic (conical-free) classes per (k, n). A row whose orders
// the theorems leave to the search carries a per-k total instead.
struct DecompositionSpec {
    int s;
    std::map<std::pair<int, int>, int> per_order;
    std::map<int, int> totals;
};

const ValueGridRow kTheorem21Rows[] = {
    {0, {3, 4, 5}, 3, 9, sat_path, 0},
    {0, {6}, 10, 10, sat_path, 0},
};
const ValueGridRow kTheorem33Row = {1, {3, 4, 5}, 3, 8, sat_k1_path, 1};
const ValueGridRow kTheorem11Row = {2, {3, 4, 5}, 3, 8, sat_k2_path, 2};

const DecompositionSpec kTheorem33Sporadics = {
    1,
    {{{3, 4}, 1}, {{3, 5}, 2}, {{3, 6}, 0}, {{3, 7}, 0}, {{3, 8}, 0},
     {{4, 5}, 0}, {{4, 6}, 2}, {{4, 7}, 0}, {{4, 8}, 1}},
    {{5, 2}},
};
const DecompositionSpec kTheorem11Sporadics = {
    2,
    {{{3, 5}, 0}, {{3, 6}, 1}, {{3, 7}, 0}, {{3, 8}, 0},
     {{4, 6}, 0}, {{4, 7}, 1}, {{4, 8}, 0},
     {{5, 7}, 0}, {{5, 8}, 0}},
    {},
};

void run_value_grid(SuiteCtx& ctx, int n_max, VerificationReport& r, const ValueGridRow& row) {
    for (int k : row.ks)
        for (int n = row.n_lo; n <= std::min(n_max, row.n_hi); ++n)
            value_case(r, ctx, n, PatternSpec{row.s, k}, row.formula(n, k),
                       a_k(k) + row.threshold_offset);
}

void run_decomposition(SuiteCtx& ctx, int n_max, VerificationReport& r, const ValueGridRow& row,
                       const DecompositionSpec& spec) {
    for (int k : row.ks) {
        int total = 0;
        bool total_tracked = spec.totals.count(k) > 0;
        for (int n = row.n_lo; n <= std::min(n_max, row.n_hi); ++n) {
            PatternSpec p{row.s, k};
            if (!row.formula(n, k).valid()) continue;
            const SearchResult& sr = ctx.search(n, p);
            const SearchResult& lower = ctx.search(n - 1, PatternSpec{row.s - 1, k});
            Decomposition d = decompose(sr.minimal_graphs, 1, lower.minimal_graphs);
            std::string desc = "decompose(" + to_string(p) + ", n=" + std::to_string(n) + ")";
            std::string actual = "set=" + key_list(sr.minimal_graphs) +
                                 " join=" + std::to_string(d.joins) +
                                 " sporadic=" + key_list(d.sporadics);
            auto want = spec.per_order.find({k, n});
            if (want == spec.per_order.end()) {
                total += static_cast<int>(d.sporadics.size());
                add_case(r, desc, "all classes join-form or sporadic", actual,
                         d.classified_ok && d.covers_lower);
            } else {
                add_case(r, desc, "sporadic=" + std::to_string(want->second), actual,
                         d.classified_ok && d.covers_lower &&
                             static_cast<int>(d.sporadics.size()) == want->second);
            }
        }
        if (total_tracked && n_max >= row.n_hi)
            add_case(r,
                     "sporadic candidates (" + to_string(PatternSpec{row.s, k}) + ", n<=" +
                         std::to_string(row.n_hi) + ")",
                     std::to_string(spec.totals.at(k)), std::to_string(total),
                     total == spec.totals.at(k));
    }
}

void suite_theorem_2_1(SuiteCtx& ctx, int n_max, VerificationReport& r) {
    for (const auto& row : kTheorem21Rows) run_value_grid(ctx, n_max, r, row);
}

void suite_theorem_3_3(SuiteCtx& ctx, int n_max, VerificationReport& r) {
    run_value_grid(ctx, n_max, r, kTheorem33Row);
    run_decomposition(ctx, n_max, r, kTheorem33Row, kTheorem33Sporadics);
}

void suite_theorem_1_1(SuiteCtx& ctx, int n_max, VerificationReport& r) {
    run_value_grid(ctx, n_max, r, kTheorem11Row);
    run_decomposition(ctx, n_max, r, kTheorem11Row, kTheorem11Sporadics);
}

void suite_props_5_6_7(SuiteCtx& ctx, int n_max, VerificationReport& r, int k) {
    for (int n = (k == 3 ? 3 : 4); n <= std::min(n_max, 9); ++n) {
        PatternSpec p{0, k};
        FormulaValue fv = sat_path(n, k);
        if (!fv.valid()) {
            add_skip(r, "minimal(" + to_string(p) + ", n=" + std::to_string(n) + ")",
                     "below formula threshold");
            continue;
        }
        const SearchResult& sr = ctx.search(n, p);
        std::vector<CanonicalKey> expect;
        for (const Graph& f : minimal_path_saturated(n, k)) expect.push_back(canonical_key(f));
        std::sort(expect.begin(), expect.end());
        bool ok = sr.sat_number == *fv.value && sr.minimal_graphs == expect;
        add_case(r, "minimal(" + to_string(p) + ", n=" + std::to_string(n) + ")",
                 "m=" + std::to_string(*fv.value) + " classes=" + key_list(expect),
                 "m=" + std::to_string(sr.sat_number) + " classes=" + key_list(sr.minimal_graphs),
                 ok);
    }
}

void suite_lemma_2_3(SuiteCtx& ctx, int n_max, VerificationReport& r) {
    const std::pair<int, int> pats[] = {{0, 3}, {0, 4}, {1, 3}};
    for (auto [s, k] : pats) {
        PatternSpec low{s, k};
        PatternSpec high{s + 1, k};
        for (int n = 3; n <= std::min(n_max, 6); ++n) {
            int exceptions = 0;
            int classes = 0;
            for (int m = 0; m <= n * (n - 1) / 2; ++m)
                enumerate_graphs(n, m, [&](const Graph& h) {
                    ++classes;
                    bool lhs = is_saturated(join(complete_graph(1), h), high).saturated();
                    bool rhs = is_saturated(h, low).saturated();
                    if (lhs != rhs) ++exceptions;
                });
            add_case(r,
                     "join/strip equivalence (" + to_string(low) + " vs " + to_string(high) +
                         ", n=" + std::to_string(n) + ")",
                     "0 exceptions",
                     std::to_string(exceptions) + " exceptions over " + std::to_string(classes) +
                         " classes",
                     exceptions == 0);
        }
    }
    (void)ctx;
}

void suite_lemma_3_4(SuiteCtx& ctx, int n_max, VerificationReport& r) {
    // class counts of 3-regular graphs frozen from the degree-filtered
    // enumeration itself (connected or not)
    const std::map<int, int> cubic_counts = {{6, 2}, {8, 6}, {10, 21}};
    PatternSpec p{1, 4};
    int saturated_total = 0;
    std::vector<int> saturated_orders;
    for (int n : {6, 8, 10}) {
        if (n > n_max) continue;
        std::vector<Graph> cubs = enumerate_regular_graphs(n, 3);
        add_case(r, "3-regular classes on " + std::to_string(n) + " vertices",
                 std::to_string(cubic_counts.at(n)), std::to_string(cubs.size()),
                 static_cast<int>(cubs.size()) == cubic_counts.at(n));
        for (const Graph& g : cubs)
            if (is_saturated(g, p).saturated()) {
                ++saturated_total;
                saturated_orders.push_back(n);
            }
    }
    std::string got = std::to_string(saturated_total) + " at orders [";
    for (std::size_t i = 0; i < saturated_orders.size(); ++i)
        got += (i ? "," : "") + std::to_string(saturated_orders[i]);
    got += "]";
    add_case(r, "K1vP4-saturated 3-regular classes", "exactly 1, of order 6", got,
             saturated_total == 1 && saturated_orders == std::vector<int>{6});
    (void)ctx;
}

void suite_table_1(SuiteCtx& ctx, VerificationReport& r) {
    int mism_book = 0;
    for (long long n = 10; n <= 1000; ++n)
        if (sat_book(n, 2).value != sat_k1_path(n, 3).value) ++mism_book;
    add_case(r, "sat_book(n,2) == sat_k1_path(n,3) for 10 <= n <= 1000", "0 mismatches",
             std::to_string(mism_book) + " mismatches", mism_book == 0);
    int mism_kt = 0;
    for (long long n = 17; n <= 1000; ++n)
        if (sat_kt_minus_p4(n, 5).value != sat_k1_path(n, 4).value) ++mism_kt;
    add_case(r, "sat_kt_minus_p4(n,5) == sat_k1_path(n,4) for 17 <= n <= 1000", "0 mismatches",
             std::to_string(mism_kt) + " mismatches", mism_kt == 0);
    (void)ctx;
}

void suite_conjecture_probe(SuiteCtx& ctx, VerificationReport& r) {
    PatternSpec p{3, 3};
    const SearchResult& sr = ctx.search(8, p);
    std::uint64_t classes = sr.scanned;
    for (int m = sr.sat_number + 1; m <= 28; ++m)
        enumerate_graphs(8, m, [&](const Graph&) { ++classes; });
    add_case(r, "isomorphism classes scanned at n=8", "12346", std::to_string(classes),
             classes == 12346);
    FormulaValue bound = join_upper_bound(8, 3, 3);
    std::string verdict = sr.sat_number == *bound.value
                              ? "match: " + std::to_string(sr.sat_number)
                              : "mismatch: search=" + std::to_string(sr.sat_number) +
                                    " bound=" + std::to_string(*bound.value);
    // equality is only conjectured; a mismatch is flagged, never failed
    add_case(r, "sat(8, K3vP3) vs join upper bound " + std::to_string(*bound.value), "reported",
             verdict, true);
}

long long first_valid(const std::function<FormulaValue(long long)>& f, long long from,
                      long long parity) {
    for (long long n = from; n < from + 4096; ++n) {
        if (parity >= 0 && n % 2 != parity) continue;
        if (f(n).valid()) return n;
    }
    return -1;
}

}  // namespace

std::string table1_tsv() {
    std::ostringstream os;
    os << "\tK1vP3\tK2vP3\tK1vP4\n";
    os << "prior";
    os << "\tfloor((3n-3)/2), n>=" << first_valid([](long long n) { return sat_book(n, 2); }, 1, -1);
    os << "\tfloor((5n-8)/2), n>="
       << first_valid([](long long n) { return sat_generalized_book_b3p2(n); }, 1, -1);
    os << "\t3n/2 even n>=" << first_valid([](long long n) { return sat_kt_minus_p4(n, 5); }, 1, 0)
       << "; (3n-3)/2 odd n>=" << first_valid([](long long n) { return sat_kt_minus_p4(n, 5); }, 1, 1);
    os << "\n";
    os << "this-work";
    os << "\tfloor((3n-3)/2), n>=" << first_valid([](long long n) { return sat_k1_path(n, 3); }, 1, -1);
    os << "\tfloor((5n-8)/2), n>=" << first_valid([](long long n) { return sat_k2_path(n, 3); }, 1, -1);
    os << "\t3n/2 even n>=" << first_valid([](long long n) { return sat_k1_path(n, 4); }, 1, 0)
       << "; (3n-3)/2 odd n>=" << first_valid([](long long n) { return sat_k1_path(n, 4); }, 1, 1);
    os << "\n";
    return os.str();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "theorem-2.1", "theorem-3.3",  "theorem-1.1", "prop-5.6",        "prop-5.7",
        "lemma-2.3",   "lemma-3.4",    "table-1",     "conjecture-probe"};
    return names;
}

VerificationReport run_suite(const std::string& name, int n_max, const SearchOptions& opts) {
    VerificationReport r;
    r.suite = name;
    SuiteCtx ctx{opts, {}};
    auto t0 = std::chrono::steady_clock::now();
    if (name == "theorem-2.1") {
        suite_theorem_2_1(ctx, n_max < 0 ? 10 : n_max, r);
    } else if (name == "theorem-3.3") {
        suite_theorem_3_3(ctx, n_max < 0 ? 8 : n_max, r);
    } else if (name == "theorem-1.1") {
        suite_theorem_1_1(ctx, n_max < 0 ? 8 : n_max, r);
    } else if (name == "prop-5.6") {
        suite_props_5_6_7(ctx, n_max < 0 ? 9 : n_max, r, 3);
    } else if (name == "prop-5.7") {
        suite_props_5_6_7(ctx, n_max < 0 ? 9 : n_max, r, 4);
    } else if (name == "lemma-2.3") {
        suite_lemma_2_3(ctx, n_max < 0 ? 6 : n_max, r);
    } else if (name == "lemma-3.4") {
        suite_lemma_3_4(ctx, n_max < 0 ? 10 : n_max, r);
    } else if (name == "table-1") {
        suite_table_1(ctx, r);
    } else if (name == "conjecture-probe") {
        suite_conjecture_probe(ctx, r);
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::string report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["wall_time"] = r.wall_time;
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"description", c.description},
                         {"expected", c.expected},
                         {"actual", c.actual},
                         {"status", to_string(c.status)}});
    j["cases"] = std::move(cases);
    return j.dump(2);
}

std::string report_to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << "\n";
    int failed = 0;
    for (const auto& c : r.cases) {
        os << "  [" << to_string(c.status) << "] " << c.description;
        if (c.status == CaseStatus::skipped_out_of_range)
            os << ": " << c.actual;
        else
            os << ": expected " << c.expected << ", got " << c.actual;
        os << "\n";
        if (c.status == CaseStatus::fail) ++failed;
    }
    os << (failed ? "FAILED" : "ok") << " (" << r.cases.size() << " cases, " << failed
       << " failed)\n";
    return os.str();
}

}  // namespace satlab
