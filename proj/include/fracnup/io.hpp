#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fracnup/core.hpp"
#include "fracnup/density.hpp"
#include "fracnup/nup.hpp"
#include "fracnup/ops.hpp"
#include "fracnup/phase.hpp"

namespace fracnup {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// 17 significant digits, enough to round-trip a double.
std::string format_double(double v);

// Header `dim,generator,params,R`, one metadata row, then one point per row.
void write_set_csv(std::ostream& os, const DiscreteSet& set);
DiscreteSet read_set_csv(std::istream& is);

void write_density_csv(std::ostream& os, const DensityEstimate& est);
void write_mesh_csv(std::ostream& os, const MeshAudit& audit);
void write_vanishing_csv(std::ostream& os, const VanishingReport& rep);
void write_phase_csv(std::ostream& os, const PhaseReport& rep);

json multiplier_to_json(const MultiplierSpec& m);
MultiplierSpec multiplier_from_json(const json& j, int d);

json nup_to_json(const NupFunction& nup);
// Rebuilds (and re-certifies) the function from its serialized parameters.
NupFunction nup_from_json(const json& j);

json phase_config_to_json(const PhaseSequence& seq);
PhaseSequence phase_config_from_json(const json& j);

// Parses "a,b;c,d" (rows separated by ';') into a square matrix.
Matrix parse_matrix(const std::string& text);

}  // namespace fracnup
