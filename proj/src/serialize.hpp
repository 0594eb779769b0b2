#pragma once

#include <json.hpp>

#include "curved.hpp"

namespace mfk {

// JSON encodings used by problem files, reports, and the factorization
// round-trip.  All coefficients travel as polynomial literals (strings), so
// serialization is exact; keys are emitted sorted, so output is stable.

nlohmann::json ring_to_json(const RingPtr &ring);
// `path` prefixes error messages with the JSON location ("/ring").
RingPtr ring_from_json(const nlohmann::json &j, const std::string &path);

nlohmann::json mf_to_json(const MatrixFactorization &P);
MatrixFactorization mf_from_json(const nlohmann::json &j,
                                 const std::string &path);

nlohmann::json presentation_to_json(const ModulePresentation &pres);
nlohmann::json qdim_to_json(const QDim &d);

// Schema helpers shared with the problem loader.
const nlohmann::json &require_field(const nlohmann::json &j,
                                    const char *key,
                                    const std::string &path);
std::string require_string(const nlohmann::json &j, const std::string &path);
std::vector<std::vector<std::string>>
require_matrix_literals(const nlohmann::json &j, const std::string &path);

} // namespace mfk
