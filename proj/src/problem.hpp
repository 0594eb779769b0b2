#pragma once

#include <map>
#include <optional>
#include <string>

#include "hochschild.hpp"
#include "serialize.hpp"

namespace mfk {

// A parsed problem file:
//   { "ring": {"vars": [...], "relations": [...], "order": "grevlex"},
//     "W": "<literal>",
//     "cover": ["<literal>", ...],            // optional, default {"1"}
//     "objects": { "<name>": {"p1": [[..]], "p0": [[..]]}
//                          | {"koszul_stab": true}
//                          | {"diagonal": true}, ... },
//     "task_args": { ... } }                  // optional, command-specific
// Objects built with "diagonal" live over the product ring.
struct Problem {
  RingPtr ring;
  Polynomial W;
  CechCover cover;
  std::map<std::string, MatrixFactorization> objects;
  nlohmann::json task_args;
};

Problem parse_problem(const nlohmann::json &j);
Problem load_problem(const std::string &path);

struct Report {
  bool passed = true;
  std::string text;       // aligned human-readable table
  nlohmann::json payload; // machine report; no timestamps, keys sorted
};

// Commands: verify, stabilize, ext, cech-ext, coker, dual, tensor,
// hh, hh-homology, hh-diagonal, hh-compare, cy-check.
Report run_command(const Problem &p, const std::string &command,
                   const GbOptions &opts = {}, bool verbose = false);

} // namespace mfk
