#include "mfcat.h"

#include "problem.hpp"

#include <memory>
#include <new>
#include <string>

struct mfcat_problem {
  mfk::Problem p;
};

struct mfcat_report {
  mfk::Report r;
  std::string json_dump; // cached so the returned pointer stays stable
};

namespace {

thread_local mfcat_status g_last_status = MFCAT_OK;
thread_local std::string g_last_error;

void clear_error() {
  g_last_status = MFCAT_OK;
  g_last_error.clear();
}

mfcat_status record_error(mfcat_status s, const std::string &msg) {
  g_last_status = s;
  g_last_error = msg;
  return s;
}

mfcat_status status_of(const mfk::MfError &e) {
  return static_cast<mfcat_status>(mfk::error_exit_code(e.kind()));
}

} // namespace

extern "C" {

const char *mfcat_version(void) { return "mfcat 1.0.0"; }

mfcat_problem *mfcat_problem_parse(const char *json_text) {
  clear_error();
  if (!json_text) {
    record_error(MFCAT_INPUT_ERROR, "null json_text");
    return nullptr;
  }
  try {
    nlohmann::json j = nlohmann::json::parse(json_text);
    auto *h = new mfcat_problem{mfk::parse_problem(j)};
    return h;
  } catch (const mfk::MfError &e) {
    record_error(status_of(e), e.what());
  } catch (const nlohmann::json::exception &e) {
    record_error(MFCAT_INPUT_ERROR, std::string("invalid JSON: ") + e.what());
  } catch (const std::exception &e) {
    record_error(MFCAT_MATH_FAIL, e.what());
  }
  return nullptr;
}

mfcat_problem *mfcat_problem_load(const char *path) {
  clear_error();
  if (!path) {
    record_error(MFCAT_INPUT_ERROR, "null path");
    return nullptr;
  }
  try {
    auto *h = new mfcat_problem{mfk::load_problem(path)};
    return h;
  } catch (const mfk::MfError &e) {
    record_error(status_of(e), e.what());
  } catch (const std::exception &e) {
    record_error(MFCAT_MATH_FAIL, e.what());
  }
  return nullptr;
}

void mfcat_problem_free(mfcat_problem *p) { delete p; }

mfcat_status mfcat_run(const mfcat_problem *p, const char *command,
                       size_t budget, int verbose, mfcat_report **out) {
  clear_error();
  if (!p || !command || !out)
    return record_error(MFCAT_INPUT_ERROR, "null argument to mfcat_run");
  try {
    mfk::GbOptions opts;
    if (budget > 0)
      opts.pair_budget = static_cast<long long>(budget);
    auto rep = std::make_unique<mfcat_report>();
    rep->r = mfk::run_command(p->p, command, opts, verbose != 0);
    // sorted keys + fixed indent: payload bytes are reproducible
    rep->json_dump = rep->r.payload.dump(2);
    *out = rep.release();
    return MFCAT_OK;
  } catch (const mfk::MfError &e) {
    return record_error(status_of(e), e.what());
  } catch (const std::bad_alloc &) {
    return record_error(MFCAT_BUDGET_EXCEEDED, "out of memory");
  } catch (const std::exception &e) {
    return record_error(MFCAT_MATH_FAIL, e.what());
  }
}

const char *mfcat_report_text(const mfcat_report *r) {
  return r ? r->r.text.c_str() : "";
}

const char *mfcat_report_json(const mfcat_report *r) {
  return r ? r->json_dump.c_str() : "";
}

int mfcat_report_passed(const mfcat_report *r) {
  return (r && r->r.passed) ? 1 : 0;
}

void mfcat_report_free(mfcat_report *r) { delete r; }

mfcat_status mfcat_last_status(void) { return g_last_status; }

const char *mfcat_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
