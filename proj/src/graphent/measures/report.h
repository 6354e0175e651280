#ifndef GRAPHENT_MEASURES_REPORT_H
#define GRAPHENT_MEASURES_REPORT_H

#include <json.hpp>
#include <vector>

#include "graphent/measures/evaluate.h"

namespace graphent {

// JSON forms. All vertex numbers are one-based.

nlohmann::json graph_json(const Graph &g);
nlohmann::json vertices_json(const std::vector<Vertex> &vs);
nlohmann::json measure_json(const MeasureValue &v);
nlohmann::json css_json(const SeparableStateDescription &css);
nlohmann::json report_json(const EntanglementReport &r);

}  // namespace graphent

#endif
