#include "tableau_orbits/report_json.hpp"

namespace tableau_orbits {

Json to_json(const Shape& shape) {
    return Json(shape.rows());
}

Json to_json(const Tableau& t) {
    return Json(t.to_rows());
}

namespace {

Json optional_int(const std::optional<int>& v) {
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json to_json(const OrbitReport& report) {
    Json j;
    j["shape"] = to_json(report.shape);
    j["method"] = std::string(method_name(report.method));
    j["orbit_length"] = report.orbit_length;
    j["N"] = optional_int(report.symmetry_order);
    j["ell"] = optional_int(report.multiplier);
    j["degenerate_to_oracle"] = report.degenerate_to_oracle;
    j["trace"] = Json::array();
    for (const auto& step : report.trace) {
        Json entry;
        entry["component_boundary"] = step.component_boundary;
        entry["k"] = step.k;
        entry["result_grid"] = to_json(step.result_grid);
        j["trace"].push_back(std::move(entry));
    }
    return j;
}

Json to_json(const SsytOrbitReport& report) {
    Json j;
    j["shape"] = to_json(report.shape);
    j["method"] = std::string(ssyt_method_name(report.method));
    j["orbit_length"] = report.orbit_length;
    j["N"] = nullptr;
    j["ell"] = report.multiplier;
    j["degenerate_to_oracle"] = false;
    j["trace"] = Json::array();
    j["R"] = report.period;
    j["sum_e_first_R"] = report.sum_first_period;
    j["syt_orbit_length"] = report.syt_orbit_length;
    j["in_validated_domain"] = report.in_validated_domain;
    return j;
}

Json to_json(const CensusRecord& record) {
    Json j;
    j["shape"] = to_json(record.shape);
    j["method"] = std::string(method_name(record.method));
    j["tableau_count"] = record.tableau_count;
    Json histogram = Json::object();
    for (const auto& [length, orbits] : record.orbit_length_histogram)
        histogram[std::to_string(length)] = orbits;
    j["orbit_length_histogram"] = std::move(histogram);
    j["partition_signature_classes"] = record.partition_signature_classes;
    return j;
}

Json components_json(const MDiagram& m) {
    const auto parts = decompose(m);
    Json j;
    j["n"] = m.boundary_size();
    j["components"] = Json::array();
    for (std::size_t i = 0; i < parts.components.size(); ++i) {
        Json c;
        c["boundary"] = parts.boundary_sets[i];
        c["arcs"] = Json::array();
        for (const auto& arc : parts.components[i])
            c["arcs"].push_back({arc.a, arc.b});
        c["uniform"] = static_cast<bool>(parts.uniform[i]);
        j["components"].push_back(std::move(c));
    }
    j["signature"] = canonical_partition(parts.boundary_sets);
    return j;
}

std::string json_line(const Json& j) {
    return j.dump() + "\n";
}

} // namespace tableau_orbits
