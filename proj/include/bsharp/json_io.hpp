#ifndef BSHARP_JSON_IO_HPP
#define BSHARP_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "bsharp/hull.hpp"
#include "bsharp/separation.hpp"

// JSON wire formats shared by the CLI: vectors as arrays, the hull schema
// { x, y, breakpoints: [{t, point}], segments: [[i,j],...] } with "inf"
// as the literal for t = +∞, and generated-set inputs
// { orthant: [±1,...], generators: [[...],...] }.

namespace bsharp {

inline nlohmann::json to_json(const Vec& v) { return nlohmann::json(v); }

inline Vec vec_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("expected a nonempty JSON array of numbers");
    }
    Vec out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number()) throw std::invalid_argument("expected a JSON array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

inline nlohmann::json t_to_json(const ExtReal& t) {
    if (t.infinite) return nlohmann::json("inf");
    return nlohmann::json(t.value);
}

/// Hull serialization. Consecutive breakpoints with identical points are
/// merged (the x = y hull collapses to a single point entry).
inline nlohmann::json hull_to_json(const PiecewiseHull& hull) {
    nlohmann::json breakpoints = nlohmann::json::array();
    const Vec* previous = nullptr;
    for (const BreakPoint& bp : hull.sequence.breakpoints) {
        if (previous != nullptr && *previous == bp.point) continue;
        breakpoints.push_back({{"t", t_to_json(bp.t)}, {"point", to_json(bp.point)}});
        previous = &bp.point;
    }
    nlohmann::json segments = nlohmann::json::array();
    for (std::size_t m = 0; m + 1 < breakpoints.size(); ++m) {
        segments.push_back({m, m + 1});
    }
    return {{"x", to_json(hull.x)},
            {"y", to_json(hull.y)},
            {"breakpoints", breakpoints},
            {"segments", segments}};
}

inline GeneratedBSet generated_bset_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("orthant") || !j.contains("generators")) {
        throw std::invalid_argument("expected { \"orthant\": [...], \"generators\": [[...],...] }");
    }
    OrthantSign K;
    for (const auto& e : j.at("orthant")) {
        const int s = e.get<int>();
        if (s != 1 && s != -1) throw std::invalid_argument("orthant entries must be +1 or -1");
        K.push_back(s);
    }
    std::vector<Vec> gens;
    for (const auto& g : j.at("generators")) gens.push_back(vec_from_json(g));
    return GeneratedBSet(std::move(gens), std::move(K));
}

}  // namespace bsharp

#endif
