#include "serialize.hpp"

#include <sstream>

#include "errors.hpp"

namespace mfk {

using nlohmann::json;

const json &require_field(const json &j, const char *key,
                          const std::string &path) {
  if (!j.is_object())
    fail(ErrorKind::SchemaError, path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    fail(ErrorKind::SchemaError,
         path + "/" + std::string(key) + ": missing required field");
  return *it;
}

std::string require_string(const json &j, const std::string &path) {
  if (!j.is_string())
    fail(ErrorKind::SchemaError, path + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::vector<std::string>>
require_matrix_literals(const json &j, const std::string &path) {
  if (!j.is_array())
    fail(ErrorKind::SchemaError, path + ": expected an array of rows");
  std::vector<std::vector<std::string>> rows;
  size_t width = 0;
  for (size_t i = 0; i < j.size(); ++i) {
    const json &row = j[i];
    std::string rp = path + "/" + std::to_string(i);
    if (!row.is_array())
      fail(ErrorKind::SchemaError, rp + ": expected an array of literals");
    std::vector<std::string> out;
    for (size_t c = 0; c < row.size(); ++c)
      out.push_back(require_string(row[c], rp + "/" + std::to_string(c)));
    if (i == 0)
      width = out.size();
    else if (out.size() != width)
      fail(ErrorKind::SchemaError,
           rp + ": ragged matrix (row 0 has " + std::to_string(width) +
               " entries, this row has " + std::to_string(out.size()) + ")");
    rows.push_back(std::move(out));
  }
  return rows;
}

json ring_to_json(const RingPtr &ring) {
  json j;
  j["vars"] = ring->vars();
  json rels = json::array();
  for (size_t i = 0; i < ring->relation_count(); ++i)
    rels.push_back(ring_relation(ring, i).to_string());
  j["relations"] = rels;
  j["order"] = ring->order() == MonomialOrder::Lex ? "lex" : "grevlex";
  return j;
}

RingPtr ring_from_json(const json &j, const std::string &path) {
  const json &vars_j = require_field(j, "vars", path);
  if (!vars_j.is_array() || vars_j.empty())
    fail(ErrorKind::SchemaError,
         path + "/vars: expected a non-empty array of variable names");
  std::vector<std::string> vars;
  for (size_t i = 0; i < vars_j.size(); ++i)
    vars.push_back(
        require_string(vars_j[i], path + "/vars/" + std::to_string(i)));

  MonomialOrder order = MonomialOrder::Grevlex;
  if (j.contains("order")) {
    std::string o = require_string(j["order"], path + "/order");
    if (o == "lex")
      order = MonomialOrder::Lex;
    else if (o == "grevlex")
      order = MonomialOrder::Grevlex;
    else
      fail(ErrorKind::SchemaError,
           path + "/order: unknown order \"" + o +
               "\" (expected \"grevlex\" or \"lex\")");
  }

  RingPtr base = Ring::make(vars, order);
  if (!j.contains("relations"))
    return base;
  const json &rels_j = j["relations"];
  if (!rels_j.is_array())
    fail(ErrorKind::SchemaError, path + "/relations: expected an array");
  std::vector<Polynomial> rels;
  for (size_t i = 0; i < rels_j.size(); ++i) {
    std::string lit =
        require_string(rels_j[i], path + "/relations/" + std::to_string(i));
    rels.push_back(parse_polynomial(lit, base));
  }
  return with_relations(base, rels);
}

static json matrix_to_json(const FreeModuleMap &m) {
  json rows = json::array();
  for (auto &row : m.to_literals()) {
    json r = json::array();
    for (auto &lit : row)
      r.push_back(lit);
    rows.push_back(r);
  }
  return rows;
}

static FreeModuleMap matrix_from_json(const RingPtr &ring, const json &j,
                                      const std::string &path) {
  auto lits = require_matrix_literals(j, path);
  if (lits.empty() || lits[0].empty())
    fail(ErrorKind::SchemaError, path + ": matrices must be non-empty");
  try {
    return FreeModuleMap::from_literals(ring, lits);
  } catch (const MfError &e) {
    if (e.kind() == ErrorKind::ParseError)
      fail(ErrorKind::SchemaError, path + ": " + e.what());
    throw;
  }
}

json mf_to_json(const MatrixFactorization &P) {
  json j;
  j["ring"] = ring_to_json(P.ring);
  j["W"] = P.W.to_string();
  j["p1"] = matrix_to_json(P.p1);
  j["p0"] = matrix_to_json(P.p0);
  return j;
}

MatrixFactorization mf_from_json(const json &j, const std::string &path) {
  RingPtr ring = ring_from_json(require_field(j, "ring", path), path + "/ring");
  Polynomial W = parse_polynomial(
      require_string(require_field(j, "W", path), path + "/W"), ring);
  FreeModuleMap p1 =
      matrix_from_json(ring, require_field(j, "p1", path), path + "/p1");
  FreeModuleMap p0 =
      matrix_from_json(ring, require_field(j, "p0", path), path + "/p0");
  return make_mf(ring, W, p1, p0);
}

json presentation_to_json(const ModulePresentation &pres) {
  json j;
  j["generators"] = pres.generators;
  // One array per relation (a column of the relation matrix), entries indexed
  // by generator.
  json rels = json::array();
  for (size_t c = 0; c < pres.relations.cols(); ++c) {
    json entry = json::array();
    for (size_t i = 0; i < pres.relations.rows(); ++i)
      entry.push_back(pres.relations.at(i, c).to_string());
    rels.push_back(entry);
  }
  j["relations"] = rels;
  return j;
}

json qdim_to_json(const QDim &d) {
  if (!d.finite)
    return json("infinite");
  return json(d.dim);
}

} // namespace mfk
