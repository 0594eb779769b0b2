#include "problem.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace mfk {

using nlohmann::json;

Problem parse_problem(const json &j) {
  Problem p;
  p.ring = ring_from_json(require_field(j, "ring", ""), "/ring");
  p.W = parse_polynomial(
      require_string(require_field(j, "W", ""), "/W"), p.ring);

  p.cover.ambient = p.ring;
  if (j.contains("cover")) {
    const json &c = j["cover"];
    if (!c.is_array() || c.empty())
      fail(ErrorKind::SchemaError,
           "/cover: expected a non-empty array of polynomial literals");
    for (size_t i = 0; i < c.size(); ++i)
      p.cover.denominators.push_back(parse_polynomial(
          require_string(c[i], "/cover/" + std::to_string(i)), p.ring));
  } else {
    p.cover.denominators.push_back(Polynomial::constant(p.ring, 1));
  }

  if (j.contains("objects")) {
    const json &objs = j["objects"];
    if (!objs.is_object())
      fail(ErrorKind::SchemaError, "/objects: expected an object");
    for (auto it = objs.begin(); it != objs.end(); ++it) {
      const std::string path = "/objects/" + it.key();
      const json &desc = it.value();
      if (!desc.is_object())
        fail(ErrorKind::SchemaError, path + ": expected an object");
      MatrixFactorization mf;
      if (desc.contains("koszul_stab")) {
        mf = koszul_stab(p.W);
      } else if (desc.contains("diagonal")) {
        mf = diagonal_mf(p.W);
      } else if (desc.contains("p1") && desc.contains("p0")) {
        FreeModuleMap p1 = FreeModuleMap::from_literals(
            p.ring, require_matrix_literals(desc["p1"], path + "/p1"));
        FreeModuleMap p0 = FreeModuleMap::from_literals(
            p.ring, require_matrix_literals(desc["p0"], path + "/p0"));
        mf = make_mf(p.ring, p.W, std::move(p1), std::move(p0));
      } else {
        fail(ErrorKind::SchemaError,
             path + ": expected p1/p0 matrices, koszul_stab, or diagonal");
      }
      p.objects.emplace(it.key(), std::move(mf));
    }
  }

  p.task_args = j.contains("task_args") ? j["task_args"] : json::object();
  if (!p.task_args.is_object())
    fail(ErrorKind::SchemaError, "/task_args: expected an object");
  return p;
}

Problem load_problem(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorKind::ParseError, "cannot open problem file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    fail(ErrorKind::ParseError,
         path + ": invalid JSON (" + std::string(e.what()) + ")");
  }
  return parse_problem(j);
}

namespace {

// two-column aligned table
struct Table {
  std::vector<std::pair<std::string, std::string>> rows;
  void add(const std::string &k, const std::string &v) {
    rows.push_back({k, v});
  }
  std::string str() const {
    size_t w = 0;
    for (auto &r : rows)
      w = std::max(w, r.first.size());
    std::ostringstream os;
    for (auto &r : rows)
      os << r.first << std::string(w - r.first.size() + 2, ' ') << r.second
         << "\n";
    return os.str();
  }
};

std::string dims_str(const QDim &even, const QDim &odd) {
  return "(" + even.to_string() + ", " + odd.to_string() + ")";
}

json dims_json(const QDim &even, const QDim &odd) {
  json j;
  j["even"] = qdim_to_json(even);
  j["odd"] = qdim_to_json(odd);
  return j;
}

const MatrixFactorization &pick_object(const Problem &p, const char *key,
                                       const std::string &cmd) {
  std::string name;
  if (p.task_args.contains(key)) {
    name = require_string(p.task_args[key], "/task_args/" + std::string(key));
  } else if (p.objects.size() == 1) {
    name = p.objects.begin()->first;
  } else {
    fail(ErrorKind::SchemaError,
         cmd + ": /task_args/" + key + " required when the problem has " +
             std::to_string(p.objects.size()) + " objects");
  }
  auto it = p.objects.find(name);
  if (it == p.objects.end())
    fail(ErrorKind::SchemaError,
         cmd + ": no object named \"" + name + "\"");
  return it->second;
}

std::string cover_str(const CechCover &cover) {
  std::string s = "{";
  for (size_t i = 0; i < cover.denominators.size(); ++i) {
    if (i)
      s += ", ";
    s += cover.denominators[i].to_string();
  }
  return s + "}";
}

Report cmd_verify(const Problem &p, const GbOptions &opts) {
  Report r;
  Table t;
  t.add("command", "verify");
  json objs = json::object();
  for (auto &[name, mf] : p.objects) {
    verify(mf, opts);
    t.add("object " + name,
          "ok (ranks " + std::to_string(mf.rank_even()) + "/" +
              std::to_string(mf.rank_odd()) + ", W = " + mf.W.to_string() +
              ")");
    json o;
    o["rank_even"] = mf.rank_even();
    o["rank_odd"] = mf.rank_odd();
    o["W"] = mf.W.to_string();
    o["verified"] = true;
    objs[name] = o;
  }
  if (p.objects.empty())
    fail(ErrorKind::SchemaError, "verify: problem has no objects");
  t.add("result", "PASS");
  r.payload["command"] = "verify";
  r.payload["objects"] = objs;
  r.text = t.str();
  return r;
}

Report cmd_ext(const Problem &p, const GbOptions &opts, bool cech) {
  const MatrixFactorization &P = pick_object(p, "source", "ext");
  const MatrixFactorization &Q = pick_object(p, "target", "ext");
  Report r;
  Table t;
  json pl;
  if (cech) {
    CechResult c = cech_ext(P, Q, p.cover, opts);
    t.add("command", "cech-ext");
    t.add("cover", cover_str(p.cover));
    t.add("dims", dims_str(c.even_dim, c.odd_dim));
    t.add("stabilized at stage", std::to_string(c.stabilized_at));
    pl["command"] = "cech-ext";
    pl["dims"] = dims_json(c.even_dim, c.odd_dim);
    pl["stabilized_at"] = c.stabilized_at;
    pl["even_presentation"] = presentation_to_json(c.even);
    pl["odd_presentation"] = presentation_to_json(c.odd);
  } else {
    ExtResult e = ext(P, Q, opts);
    t.add("command", "ext");
    t.add("dims", dims_str(e.even_dim, e.odd_dim));
    pl["command"] = "ext";
    pl["dims"] = dims_json(e.even_dim, e.odd_dim);
    pl["even_presentation"] = presentation_to_json(e.even);
    pl["odd_presentation"] = presentation_to_json(e.odd);
  }
  r.payload = std::move(pl);
  r.text = t.str();
  return r;
}

Report cmd_stabilize(const Problem &p, const GbOptions &opts) {
  if (!p.task_args.contains("q1"))
    fail(ErrorKind::SchemaError,
         "stabilize: /task_args/q1 (resolution matrix) required");
  FreeModuleMap q1 = FreeModuleMap::from_literals(
      p.ring, require_matrix_literals(p.task_args["q1"], "/task_args/q1"));
  RingPtr B = with_relations(p.ring, {p.W});
  ModulePresentation F;
  F.ring = B;
  F.generators = q1.rows();
  if (p.task_args.contains("module_relations")) {
    F.relations = FreeModuleMap::from_literals(
        B, require_matrix_literals(p.task_args["module_relations"],
                                   "/task_args/module_relations"));
  } else {
    F.relations =
        q1.map_entries(B, [&](const Polynomial &e) { return transport(e, B); });
  }
  MatrixFactorization S = stabilize(F, q1, opts);
  Report r;
  Table t;
  t.add("command", "stabilize");
  t.add("W", S.W.to_string());
  t.add("ranks", std::to_string(S.rank_even()) + "/" +
                     std::to_string(S.rank_odd()));
  t.add("result", "PASS");
  r.payload["command"] = "stabilize";
  r.payload["object"] = mf_to_json(S);
  r.payload["verified"] = true;
  r.text = t.str();
  return r;
}

Report cmd_coker(const Problem &p, const GbOptions &opts) {
  const MatrixFactorization &P = pick_object(p, "object", "coker");
  ModulePresentation pres = minimize_presentation(cokernel(P, opts));
  QDim d = q_dimension(pres, opts);
  QDim d0 = q_dimension_at_origin(pres, opts);
  Report r;
  Table t;
  t.add("command", "coker");
  t.add("generators", std::to_string(pres.generators));
  t.add("relations", std::to_string(pres.relations.cols()));
  t.add("q_dimension", d.to_string());
  t.add("dimension at origin", d0.to_string());
  r.payload["command"] = "coker";
  r.payload["presentation"] = presentation_to_json(pres);
  r.payload["q_dimension"] = qdim_to_json(d);
  r.payload["q_dimension_at_origin"] = qdim_to_json(d0);
  r.text = t.str();
  return r;
}

Report cmd_dual(const Problem &p, const GbOptions &opts) {
  const MatrixFactorization &P = pick_object(p, "object", "dual");
  MatrixFactorization D = dual(P);
  verify(D, opts);
  Report r;
  Table t;
  t.add("command", "dual");
  t.add("W", D.W.to_string());
  t.add("ranks", std::to_string(D.rank_even()) + "/" +
                     std::to_string(D.rank_odd()));
  r.payload["command"] = "dual";
  r.payload["object"] = mf_to_json(D);
  r.text = t.str();
  return r;
}

Report cmd_tensor(const Problem &p, const GbOptions &opts) {
  const MatrixFactorization &L = pick_object(p, "left", "tensor");
  const MatrixFactorization *R = nullptr;
  Problem other;
  if (p.task_args.contains("right_problem")) {
    // the right factor lives in its own file; /task_args/right still names
    // the object inside that file
    other = load_problem(require_string(p.task_args["right_problem"],
                                        "/task_args/right_problem"));
    if (p.task_args.contains("right")) {
      std::string name = require_string(p.task_args["right"],
                                        "/task_args/right");
      auto it = other.objects.find(name);
      if (it == other.objects.end())
        fail(ErrorKind::SchemaError,
             "tensor: right problem has no object named \"" + name + "\"");
      R = &it->second;
    } else {
      R = &pick_object(other, "right", "tensor");
    }
  } else {
    R = &pick_object(p, "right", "tensor");
  }
  MatrixFactorization T = external_tensor(L, *R, opts);
  Report r;
  Table t;
  t.add("command", "tensor");
  t.add("W", T.W.to_string());
  t.add("ring", T.ring->describe());
  t.add("ranks", std::to_string(T.rank_even()) + "/" +
                     std::to_string(T.rank_odd()));
  r.payload["command"] = "tensor";
  r.payload["object"] = mf_to_json(T);
  r.payload["verified"] = true;
  r.text = t.str();
  return r;
}

Report cmd_hh(const Problem &p, const GbOptions &opts, bool homology) {
  CechResult c = homology ? hh_homology(p.W, p.cover, opts)
                          : hh_cohomology(p.W, p.cover, opts);
  const char *name = homology ? "hh-homology" : "hh";
  Report r;
  Table t;
  t.add("command", name);
  t.add("W", p.W.to_string());
  t.add("cover", cover_str(p.cover));
  t.add("dims", dims_str(c.even_dim, c.odd_dim));
  r.payload["command"] = name;
  r.payload["dims"] = dims_json(c.even_dim, c.odd_dim);
  r.payload["stabilized_at"] = c.stabilized_at;
  r.payload["even_presentation"] = presentation_to_json(c.even);
  r.payload["odd_presentation"] = presentation_to_json(c.odd);
  r.text = t.str();
  return r;
}

Report cmd_hh_diagonal(const Problem &p, const GbOptions &opts) {
  ExtResult e = hh_via_diagonal(p.W, opts);
  Report r;
  Table t;
  t.add("command", "hh-diagonal");
  t.add("W", p.W.to_string());
  t.add("dims", dims_str(e.even_dim, e.odd_dim));
  r.payload["command"] = "hh-diagonal";
  r.payload["dims"] = dims_json(e.even_dim, e.odd_dim);
  r.payload["even_presentation"] = presentation_to_json(e.even);
  r.payload["odd_presentation"] = presentation_to_json(e.odd);
  r.text = t.str();
  return r;
}

Report cmd_hh_compare(const Problem &p, const GbOptions &opts) {
  HhComparison c = compare_hh(p.W, p.cover, opts);
  Report r;
  r.passed = c.pass;
  Table t;
  t.add("command", "hh-compare");
  t.add("W", p.W.to_string());
  t.add("polyvector route", dims_str(c.poly_even, c.poly_odd));
  t.add("diagonal route", dims_str(c.diag_even, c.diag_odd));
  t.add("mu (Jacobian ring)", c.mu.to_string());
  t.add("result", c.pass ? "PASS" : "FAIL");
  r.payload["command"] = "hh-compare";
  r.payload["polyvector"] = dims_json(c.poly_even, c.poly_odd);
  r.payload["diagonal"] = dims_json(c.diag_even, c.diag_odd);
  r.payload["mu"] = qdim_to_json(c.mu);
  r.payload["passed"] = c.pass;
  r.text = t.str();
  return r;
}

Report cmd_cy_check(const Problem &p, const GbOptions &opts) {
  const MatrixFactorization &P = pick_object(p, "P", "cy-check");
  const MatrixFactorization &Q = pick_object(p, "Q", "cy-check");
  size_t n = p.ring->arity();
  if (p.task_args.contains("n")) {
    if (!p.task_args["n"].is_number_unsigned())
      fail(ErrorKind::SchemaError,
           "/task_args/n: expected a non-negative integer");
    n = p.task_args["n"].get<size_t>();
  }
  CySymmetryReport c = cy_symmetry_check(P, Q, n, opts);
  Report r;
  r.passed = c.pass;
  Table t;
  t.add("command", "cy-check");
  t.add("n", std::to_string(n));
  t.add("Ext(P, Q)", dims_str(c.pq_even, c.pq_odd));
  t.add("Ext(Q, P)", dims_str(c.qp_even, c.qp_odd));
  t.add("result", c.pass ? "PASS" : "FAIL");
  r.payload["command"] = "cy-check";
  r.payload["n"] = n;
  r.payload["ext_pq"] = dims_json(c.pq_even, c.pq_odd);
  r.payload["ext_qp"] = dims_json(c.qp_even, c.qp_odd);
  r.payload["passed"] = c.pass;
  r.text = t.str();
  return r;
}

} // namespace

Report run_command(const Problem &p, const std::string &command,
                   const GbOptions &opts, bool verbose) {
  auto start = std::chrono::steady_clock::now();
  Report r;
  if (command == "verify")
    r = cmd_verify(p, opts);
  else if (command == "ext")
    r = cmd_ext(p, opts, false);
  else if (command == "cech-ext")
    r = cmd_ext(p, opts, true);
  else if (command == "stabilize")
    r = cmd_stabilize(p, opts);
  else if (command == "coker")
    r = cmd_coker(p, opts);
  else if (command == "dual")
    r = cmd_dual(p, opts);
  else if (command == "tensor")
    r = cmd_tensor(p, opts);
  else if (command == "hh")
    r = cmd_hh(p, opts, false);
  else if (command == "hh-homology")
    r = cmd_hh(p, opts, true);
  else if (command == "hh-diagonal")
    r = cmd_hh_diagonal(p, opts);
  else if (command == "hh-compare")
    r = cmd_hh_compare(p, opts);
  else if (command == "cy-check")
    r = cmd_cy_check(p, opts);
  else
    fail(ErrorKind::Unsupported, "unknown command: " + command);

  if (verbose) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    // elapsed time goes to the human text only; the payload stays
    // deterministic
    r.text += "elapsed_ms  " + std::to_string(ms) + "\n";
  }
  return r;
}

} // namespace mfk
