#include "graphent/measures/report.h"

#include <cmath>

namespace graphent {

using nlohmann::json;

json graph_json(const Graph &g) {
    json edges = json::array();
    for (auto [a, b] : g.edges()) {
        edges.push_back({a + 1, b + 1});
    }
    return edges;
}

json vertices_json(const std::vector<Vertex> &vs) {
    json out = json::array();
    for (Vertex v : vs) {
        out.push_back(v + 1);
    }
    return out;
}

json measure_json(const MeasureValue &v) {
    auto num = [](double x) -> json {
        if (x == std::floor(x)) {
            return static_cast<long long>(x);
        }
        return x;
    };
    if (v.is_point()) {
        return num(v.lower);
    }
    return json::array({num(v.lower), num(v.upper)});
}

json css_json(const SeparableStateDescription &css) {
    json components = json::array();
    for (const auto &c : css.components) {
        components.push_back(c.to_string());
    }
    return {{"method", css.method}, {"components", components}, {"weight", css.weight}};
}

json report_json(const EntanglementReport &r) {
    json decomposition = json::array();
    for (const auto &t : r.decomposition.terms) {
        decomposition.push_back({{"sign", t.sign}, {"state", t.state.to_string()}});
    }
    const BoundsReport &b = r.bounds;
    json out;
    out["graph"] = graph_json(r.graph);
    out["n"] = r.graph.num_vertices();
    out["bounds"] = {
        {"lower", b.lower},
        {"upper", b.upper},
        {"coincide", b.coincide},
        {"classification", std::string(classification_name(b.classification))},
        {"truncated", b.truncated},
        {"orbit_size", b.orbit_size},
        {"alpha_size", b.alpha_size},
        {"representative", graph_json(b.representative)},
    };
    out["measures"] = {
        {"schmidt", measure_json(r.schmidt)},
        {"ree", measure_json(r.relative_entropy)},
        {"geometric", measure_json(r.geometric)},
    };
    out["decomposition"] = decomposition;
    out["normalization"] = r.decomposition.normalization;
    out["alpha"] = vertices_json(r.decomposition.alpha.to_vector());
    out["decomposed_graph"] = graph_json(r.decomposed_graph);
    out["decomposed"] = r.decomposed_input ? "input" : "orbit representative";
    out["css"] = css_json(r.css);
    out["cps"] = r.cps.to_string();
    out["maximally_entangled"] = r.maximally_entangled;
    out["certified"] = r.certified;
    out["lc_path"] = vertices_json(r.lc_path);
    if (!r.note.empty()) {
        out["note"] = r.note;
    }
    return out;
}

}  // namespace graphent
