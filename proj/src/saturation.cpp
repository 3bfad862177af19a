#include "satlab/saturation.hpp"

#include <bit>

#include <json.hpp>

namespace satlab {

std::string to_string(SaturationStatus s) {
    switch (s) {
        case SaturationStatus::saturated: return "saturated";
        case SaturationStatus::contains_copy: return "contains-copy";
        case SaturationStatus::misses_nonedge: return "misses-nonedge";
    }
    return "?";
}

SaturationVerdict is_saturated(const Graph& g, const PatternSpec& p, bool want_certificates) {
    SaturationVerdict out{};
    if (auto w = contains_pattern(g, p)) {
        out.status = SaturationStatus::contains_copy;
        out.copy_witness = std::move(*w);
        return out;
    }
    if (want_certificates) out.per_nonedge_witnesses.emplace();
    for (auto [u, v] : g.nonedges()) {
        auto w = contains_pattern(g.with_edge(u, v), p);
        if (!w) {
            out.status = SaturationStatus::misses_nonedge;
            out.failing_nonedge = {u, v};
            out.per_nonedge_witnesses.reset();
            return out;
        }
        if (want_certificates) out.per_nonedge_witnesses->emplace(std::pair{u, v}, std::move(*w));
    }
    out.status = SaturationStatus::saturated;
    return out;
}

std::optional<std::pair<int, Graph>> strip_conical(const Graph& g) {
    if (g.order() < 2) throw std::invalid_argument("strip_conical needs at least 2 vertices");
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) return std::pair{v, g.without_vertex(v)};
    return std::nullopt;
}

StructuralReport structural_check(const Graph& g, const PatternSpec&) {
    StructuralReport r;
    r.diameter_ok = g.order() > 0 && g.diameter() == std::optional<int>(2);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v) && std::popcount(g.neighbors(u) & g.neighbors(v)) < 2)
                r.bad_pairs.emplace_back(u, v);
    return r;
}

std::string verdict_to_json(const Graph& g, const PatternSpec& p, const SaturationVerdict& v) {
    nlohmann::json j;
    j["status"] = to_string(v.status);
    j["n"] = g.order();
    j["pattern"] = to_string(p);
    j["edges"] = g.size();
    if (v.failing_nonedge)
        j["failing_nonedge"] = {v.failing_nonedge->first, v.failing_nonedge->second};
    if (v.per_nonedge_witnesses) {
        nlohmann::json ws = nlohmann::json::object();
        for (const auto& [e, w] : *v.per_nonedge_witnesses) {
            std::string key = std::to_string(e.first) + "-" + std::to_string(e.second);
            ws[key] = {{"center", w.center}, {"path", w.path}};
        }
        j["witnesses"] = std::move(ws);
    }
    return j.dump();
}

}  // namespace satlab
