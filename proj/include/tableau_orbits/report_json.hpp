#pragma once

#include "tableau_orbits/enumerate.hpp"
#include "tableau_orbits/mdiagram.hpp"
#include "tableau_orbits/orbit.hpp"
#include "tableau_orbits/ssyt.hpp"

#include <json.hpp>

#include <string>

namespace tableau_orbits {

using Json = nlohmann::ordered_json;

Json to_json(const Shape& shape);
Json to_json(const Tableau& t);
/// {shape, method, orbit_length, N, ell, degenerate_to_oracle, trace}
Json to_json(const OrbitReport& report);
/// Orbit report keys followed by {R, sum_e_first_R, syt_orbit_length, in_validated_domain}.
Json to_json(const SsytOrbitReport& report);
/// {shape, method, tableau_count, orbit_length_histogram, partition_signature_classes}
Json to_json(const CensusRecord& record);
/// {n, components: [{boundary, arcs, uniform}], signature}
Json components_json(const MDiagram& m);

/// Compact dump with exactly one trailing newline.
std::string json_line(const Json& j);

} // namespace tableau_orbits
