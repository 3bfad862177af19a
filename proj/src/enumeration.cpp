#include "satlab/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "satlab/graph6.hpp"
#include "satlab/saturation.hpp"

namespace satlab {

namespace {

constexpr int kEnumCap = 12;  // beyond desk scale

void check_enum_args(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative enumeration arguments");
    if (n > kEnumCap)
        throw capacity_error("enumeration capped at " + std::to_string(kEnumCap) + " vertices");
}

int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Recursive lexicographic edge-set extension over the column-major slot
// order (0,1),(0,2),(1,2),(0,3),... with canonical-minimality rejection.
// A labeled graph is kept iff its own labeling is the canonical one, so each
// isomorphism class surfaces exactly once. Whole subtrees die early: if the
// decided induced prefix on vertices 0..j-1 is not self-canonical, no
// completion can be (relabeling the prefix and fixing the tail lowers the
// encoding), which keeps the scan polynomially close to the class counts.
struct Generator {
    int n = 0, m = 0, total = 0;
    int cap = 0;  // max degree; n-1 when unrestricted
    std::pair<int, int> slot[66];
    std::uint32_t rows[kEnumCap] = {};
    int deg[kEnumCap] = {};
    const std::function<void(const Graph&)>* visit = nullptr;

    bool init(const WorkChunk& c, int degree_cap) {
        n = c.n;
        m = c.m;
        cap = degree_cap < 0 ? (n > 0 ? n - 1 : 0) : degree_cap;
        total = n * (n - 1) / 2;
        int t = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) slot[t++] = {i, j};
        int chosen = 0;
        for (int p = 0; p < c.prefix_len; ++p) {
            if (!((c.prefix_bits >> p) & 1u)) continue;
            auto [i, j] = slot[p];
            if (deg[i] >= cap || deg[j] >= cap) return false;
            rows[i] |= 1u << j;
            rows[j] |= 1u << i;
            ++deg[i];
            ++deg[j];
            ++chosen;
        }
        if (chosen > m || m - chosen > total - c.prefix_len) return false;
        // columns fully decided by the chunk prefix are checked once here;
        // column j spans slots [C(j,2), C(j+1,2))
        for (int j = 2; j < n && (j + 1) * j / 2 <= c.prefix_len; ++j)
            if (!detail::is_canonical_rows(rows, j + 1)) return false;
        start = c.prefix_len;
        prefix_chosen = chosen;
        return true;
    }

    int start = 0;
    int prefix_chosen = 0;

    void run() { rec(start, prefix_chosen); }

    void rec(int t, int chosen) {
        if (chosen == m) {
            if (detail::is_canonical_rows(rows, n)) (*visit)(Graph::from_rows(n, rows));
            return;
        }
        if (t >= total || total - t < m - chosen) return;
        auto [i, j] = slot[t];
        if (t > start && i == 0 && j >= 3 && !detail::is_canonical_rows(rows, j)) return;
        rec(t + 1, chosen);
        if (deg[i] < cap && deg[j] < cap) {
            rows[i] |= 1u << j;
            rows[j] |= 1u << i;
            ++deg[i];
            ++deg[j];
            rec(t + 1, chosen + 1);
            rows[i] &= ~(1u << j);
            rows[j] &= ~(1u << i);
            --deg[i];
            --deg[j];
        }
    }
};

void enumerate_chunk_impl(const WorkChunk& c, int degree_cap,
                          const std::function<void(const Graph&)>& visit) {
    check_enum_args(c.n, c.m);
    if (c.prefix_len < 0 || c.prefix_len > 32 || c.prefix_len > c.n * (c.n - 1) / 2)
        throw std::invalid_argument("work chunk prefix exceeds the slot count");
    if (c.m > c.n * (c.n - 1) / 2) return;
    Generator gen;
    gen.visit = &visit;
    if (gen.init(c, degree_cap)) gen.run();
}

}  // namespace

void enumerate_chunk(const WorkChunk& c, const std::function<void(const Graph&)>& visit) {
    enumerate_chunk_impl(c, -1, visit);
}

void enumerate_graphs(int n, int m, const std::function<void(const Graph&)>& visit) {
    enumerate_chunk(WorkChunk{n, m, 0, 0}, visit);
}

std::vector<Graph> enumerate_graphs(int n, int m) {
    std::vector<Graph> out;
    enumerate_graphs(n, m, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> enumerate_regular_graphs(int n, int d) {
    check_enum_args(n, 0);
    if (d < 0 || (n > 0 && d > n - 1)) throw std::invalid_argument("regular degree out of range");
    std::vector<Graph> out;
    if ((n * d) % 2 != 0) return out;
    WorkChunk all{n, n * d / 2, 0, 0};
    enumerate_chunk_impl(all, d, [&](const Graph& g) {
        if (g.min_degree() == d) out.push_back(g);
    });
    return out;
}

std::vector<WorkChunk> split_work(int n, int m, int target_chunks) {
    check_enum_args(n, m);
    if (target_chunks < 1) throw std::invalid_argument("target_chunks must be >= 1");
    int total = n * (n - 1) / 2;
    if (m > total) return {WorkChunk{n, m, 0, 0}};

    auto feasible = [&](int len, std::uint32_t bits) {
        int ones = std::popcount(bits);
        return ones <= m && m - ones <= total - len;
    };
    int len = 0;
    for (; len < std::min(total, 20); ++len) {
        int count = 0;
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits)
            if (feasible(len, bits)) ++count;
        if (count >= target_chunks) break;
    }
    // emit in ascending enumeration order (slot 0 weighs heaviest, 0 before 1)
    std::vector<WorkChunk> chunks;
    struct Rec {
        int len;
        std::vector<WorkChunk>* out;
        int n, m;
        std::function<bool(int, std::uint32_t)> ok;
        void go(int t, std::uint32_t bits) {
            if (!ok(t, bits)) return;
            if (t == len) {
                out->push_back(WorkChunk{n, m, len, bits});
                return;
            }
            go(t + 1, bits);
            go(t + 1, bits | (1u << t));
        }
    } rec{len, &chunks, n, m, feasible};
    rec.go(0, 0);
    return chunks;
}

namespace {

struct LevelResult {
    std::vector<CanonicalKey> keys;
    std::uint64_t scanned = 0;
    std::uint64_t pruned = 0;
};

bool pruning_applies(const PatternSpec& p, bool requested) {
    return requested && p.s >= 1 && p.k >= 3;
}

LevelResult scan_level(int n, const PatternSpec& p, int m, const SearchOptions& opts) {
    bool prune = pruning_applies(p, opts.use_pruning);
    int jobs = resolve_jobs(opts.jobs);
    auto chunks = split_work(n, m, jobs > 1 ? jobs * 8 : 1);
    std::vector<LevelResult> parts(chunks.size());

    auto process = [&](std::size_t idx) {
        LevelResult& lr = parts[idx];
        enumerate_chunk(chunks[idx], [&](const Graph& g) {
            ++lr.scanned;
            if (prune && !g.is_complete()) {
                StructuralReport rep = structural_check(g, p);
                if (!rep.diameter_ok || (p.s >= 2 && !rep.bad_pairs.empty())) {
                    ++lr.pruned;
                    return;
                }
            }
            if (is_saturated(g, p).saturated()) lr.keys.push_back(graph6_encode(g));
        });
    };

    if (jobs <= 1 || chunks.size() <= 1) {
        for (std::size_t i = 0; i < chunks.size(); ++i) process(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= chunks.size()) return;
                process(idx);
            }
        };
        std::vector<std::thread> pool;
        int nw = std::min<int>(jobs, static_cast<int>(chunks.size()));
        pool.reserve(nw);
        for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    LevelResult merged;
    for (auto& part : parts) {
        merged.scanned += part.scanned;
        merged.pruned += part.pruned;
        merged.keys.insert(merged.keys.end(), part.keys.begin(), part.keys.end());
    }
    std::sort(merged.keys.begin(), merged.keys.end());
    return merged;
}

// ---- disk cache ---------------------------------------------------------

std::filesystem::path query_dir(const std::filesystem::path& root, const std::string& id) {
    return root / id;
}

std::optional<LevelResult> cache_load(const std::filesystem::path& root, const std::string& id,
                                      int n, const PatternSpec& p, int m) {
    std::filesystem::path dir = query_dir(root, id);
    std::ifstream meta_in(dir / "meta.json");
    if (!meta_in) return std::nullopt;
    nlohmann::json meta;
    try {
        meta_in >> meta;
    } catch (...) {
        return std::nullopt;
    }
    if (!meta.is_object() || meta.value("n", -1) != n || meta.value("m", -1) != m ||
        meta.value("pattern", std::string()) != to_string(p) ||
        meta.value("version", std::string()) != std::string(kCodeVersion))
        return std::nullopt;

    LevelResult lr;
    lr.scanned = meta.value("scanned", std::uint64_t{0});
    lr.pruned = meta.value("pruned", std::uint64_t{0});
    std::ifstream g6_in(dir / "minimal.g6");
    if (!g6_in) return std::nullopt;
    std::string line;
    while (std::getline(g6_in, line))
        if (!line.empty()) lr.keys.push_back(line);
    if (meta.value("classes", std::uint64_t{0}) != lr.keys.size()) return std::nullopt;

    // cache hits are revalidated by re-checking one random member
    if (!lr.keys.empty()) {
        static thread_local std::mt19937 rng(std::random_device{}());
        std::uniform_int_distribution<std::size_t> pick(0, lr.keys.size() - 1);
        try {
            Graph g = graph6_decode(lr.keys[pick(rng)]);
            if (g.order() != n || g.size() != m || !is_saturated(g, p).saturated())
                return std::nullopt;
        } catch (...) {
            return std::nullopt;
        }
    }
    return lr;
}

void cache_store(const std::filesystem::path& root, const std::string& id, int n,
                 const PatternSpec& p, int m, bool pruning, const LevelResult& lr) {
    std::error_code ec;
    std::filesystem::path dir = query_dir(root, id);
    std::filesystem::create_directories(dir, ec);
    if (ec) return;  // cache is best-effort
    {
        nlohmann::json meta;
        meta["n"] = n;
        meta["pattern"] = to_string(p);
        meta["m"] = m;
        meta["pruning"] = pruning;
        meta["version"] = std::string(kCodeVersion);
        meta["scanned"] = lr.scanned;
        meta["pruned"] = lr.pruned;
        meta["classes"] = lr.keys.size();
        std::ofstream out(dir / "meta.json");
        out << meta.dump(2) << "\n";
    }
    {
        std::ofstream out(dir / "minimal.g6");
        for (const auto& k : lr.keys) out << k << "\n";
    }
}

LevelResult level_results(int n, const PatternSpec& p, int m, const SearchOptions& opts) {
    bool prune = pruning_applies(p, opts.use_pruning);
    if (opts.cache_dir.empty()) return scan_level(n, p, m, opts);
    std::string id = search_query_id(n, p, m, prune);
    if (auto hit = cache_load(opts.cache_dir, id, n, p, m)) return *hit;
    LevelResult lr = scan_level(n, p, m, opts);
    cache_store(opts.cache_dir, id, n, p, m, prune, lr);
    return lr;
}

}  // namespace

std::string search_query_id(int n, const PatternSpec& p, int m, bool pruning) {
    std::ostringstream os;
    os << "n" << n << "_" << to_string(p) << "_m" << m << "_p" << (pruning ? 1 : 0) << "_v"
       << kCodeVersion;
    return os.str();
}

std::filesystem::path default_cache_dir() {
    const char* env = std::getenv("SATLAB_CACHE");
    return env ? std::filesystem::path(env) : std::filesystem::path();
}

SearchResult find_saturation_number(int n, const PatternSpec& p, const SearchOptions& opts) {
    check_enum_args(n, 0);
    if (p.order() < 2)
        throw std::invalid_argument("pattern " + to_string(p) +
                                    " has no saturated graphs (order < 2)");
    SearchResult res;
    res.n = n;
    res.pattern = p;
    res.pruning_enabled = pruning_applies(p, opts.use_pruning);
    int total = n * (n - 1) / 2;
    for (int m = 0; m <= total; ++m) {
        LevelResult lr = level_results(n, p, m, opts);
        res.scanned += lr.scanned;
        res.pruned += lr.pruned;
        if (!lr.keys.empty()) {
            res.sat_number = m;
            res.minimal_graphs = std::move(lr.keys);
            return res;
        }
    }
    throw std::logic_error("no saturated graph found at any edge count");
}

std::vector<CanonicalKey> enumerate_minimal_saturated(int n, const PatternSpec& p, int m,
                                                      const SearchOptions& opts) {
    check_enum_args(n, m);
    return level_results(n, p, m, opts).keys;
}

std::string search_result_to_json(const SearchResult& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["pattern"] = to_string(r.pattern);
    j["sat"] = r.sat_number;
    j["minimal"] = r.minimal_graphs;
    j["scanned"] = r.scanned;
    j["pruned"] = r.pruned;
    j["pruning"] = r.pruning_enabled;
    return j.dump();
}

}  // namespace satlab
