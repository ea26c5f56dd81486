#include "cgybe/cli.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <functional>
#include <future>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "cgybe/cg_model.hpp"
#include "cgybe/expr.hpp"
#include "cgybe/identity_oracle.hpp"
#include "cgybe/parallel.hpp"
#include "cgybe/serialize.hpp"
#include "cgybe/verifier.hpp"

namespace cgybe {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OperatorOptions {
  std::string op = "cg";
  int n = 0;
  std::string params;
  std::string alpha;
  std::string beta;
};

struct Config {
  OperatorOptions op;
  std::string format;
  std::string out_path;
  std::string checks = "ybe";
  std::string hecke_q = "q";
  int lo = -3;
  int hi = 4;
  std::string only;
  std::string qval;
  std::string pval;
  bool check_ybe = false;
};

void add_operator_options(CLI::App* cmd, OperatorOptions& o) {
  cmd->add_option("--op", o.op, "operator: cg (alpha P + beta g), cg2 (two-parameter), g, perm")
      ->check(CLI::IsMember({"cg", "cg2", "g", "perm"}))
      ->capture_default_str();
  cmd->add_option("--n", o.n, "rank of V")->required();
  cmd->add_option("--params", o.params, "parameter preset for cg")->check(CLI::IsMember({"hecke"}));
  cmd->add_option("--alpha", o.alpha, "alpha for cg, e.g. q or 2*q^-1 (default q)");
  cmd->add_option("--beta", o.beta, "beta for cg, e.g. 1 or hecke (default q - q^-1)");
}

LaurentQP parse_param(const std::string& text, const char* which) {
  try {
    return parse_laurent(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + which + ": " + e.what());
  }
}

CGParams resolve_params(const OperatorOptions& o) {
  CGParams params = CGParams::hecke(o.n);
  if (!o.alpha.empty()) params.alpha = parse_param(o.alpha, "alpha");
  if (!o.beta.empty()) params.beta = parse_param(o.beta, "beta");
  return params;
}

Endo2<> build_operator(const OperatorOptions& o) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.op == "cg") return cg_op(resolve_params(o));
  if (o.op == "cg2") return cg_twisted_op(o.n);
  if (o.op == "g") return g_op(o.n);
  if (o.op == "perm") return permutation_op(o.n);
  throw UsageError("unknown operator '" + o.op + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

Rational parse_point(const std::string& text, const char* which) {
  Rational value;
  try {
    value = parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + which + ": " + e.what());
  }
  if (value.is_zero()) throw UsageError(std::string("--") + which + " must be nonzero");
  return value;
}

// Runs jobs on worker threads and hands each result to emit in job order as
// soon as it and all earlier ones are done.
template <class Report>
void run_in_order(const std::vector<std::function<Report()>>& jobs, const std::function<void(const Report&)>& emit) {
  std::vector<std::optional<Report>> done(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::vector<bool> finished(jobs.size(), false);
  std::mutex mutex;
  std::condition_variable ready;

  auto worker = std::async(std::launch::async, [&] {
    parallel_for(jobs.size(), [&](std::size_t i) {
      std::optional<Report> result;
      std::exception_ptr error;
      try {
        result = jobs[i]();
      } catch (...) {
        error = std::current_exception();
      }
      std::lock_guard lock(mutex);
      done[i] = std::move(result);
      errors[i] = error;
      finished[i] = true;
      ready.notify_all();
    });
  });

  std::exception_ptr first_error;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return finished[i]; });
    if (errors[i]) {
      if (!first_error) first_error = errors[i];
      continue;
    }
    if (!first_error) emit(*done[i]);
  }
  worker.get();
  if (first_error) std::rethrow_exception(first_error);
}

int cmd_gen(const Config& cfg, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  const Endo2<> op = build_operator(cfg.op);
  if (format == "json") {
    out << op_to_json(op).dump(2) << '\n';
  } else if (format == "latex") {
    out << to_latex(op);
  } else {
    throw UsageError("gen writes symbolic operators as json or latex; use eval for csv");
  }
  return kExitOk;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const Endo2<> op = build_operator(cfg.op);
  const CGParams params = resolve_params(cfg.op);
  const LaurentQP hecke_q = parse_param(cfg.hecke_q, "hecke-q");
  if (!hecke_q.is_unit()) throw UsageError("--hecke-q must be a single term (a unit of the Laurent ring)");

  std::vector<std::string> names = split_list(cfg.checks);
  if (names.empty()) throw UsageError("--checks is empty");
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  std::vector<std::function<CheckReport()>> jobs;
  for (const auto& name : names) {
    if (name == "ybe") {
      jobs.emplace_back([&] { return check_ybe(op); });
    } else if (name == "compat") {
      jobs.emplace_back([&] { return check_compatibility(op); });
    } else if (name == "mixed") {
      jobs.emplace_back([&] { return check_mixed_conditions(permutation_op(op.rank()), op); });
    } else if (name == "hecke") {
      jobs.emplace_back([&] { return check_hecke(op, hecke_q); });
    } else if (name == "gp") {
      jobs.emplace_back([&] { return check_gp_relations(op.rank()); });
    } else if (name == "quadratic") {
      jobs.emplace_back([&] { return check_quadratic(op.rank(), params.alpha, params.beta); });
    } else {
      throw UsageError("unknown check '" + name + "' (expected ybe, compat, mixed, hecke, gp, quadratic)");
    }
  }

  bool all_passed = true;
  run_in_order<CheckReport>(jobs, [&](const CheckReport& r) {
    all_passed = all_passed && r.passed;
    out << report_to_json(r).dump() << std::endl;
  });
  return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_identities(const Config& cfg, std::ostream& out) {
  if (cfg.lo > cfg.hi) throw UsageError("--lo must not exceed --hi");

  std::vector<const OracleEntry*> selected;
  const auto& registry = oracle_registry();
  if (cfg.only.empty()) {
    for (const auto& entry : registry) selected.push_back(&entry);
  } else {
    for (const auto& name : split_list(cfg.only)) {
      const auto it = std::find_if(registry.begin(), registry.end(), [&](const auto& e) { return e.name == name; });
      if (it == registry.end()) throw UsageError("unknown identity '" + name + "'");
      if (std::find(selected.begin(), selected.end(), &*it) == selected.end()) selected.push_back(&*it);
    }
  }
  std::sort(selected.begin(), selected.end(), [](const auto* a, const auto* b) { return a->name < b->name; });

  std::vector<std::function<OracleReport()>> jobs;
  for (const auto* entry : selected) jobs.emplace_back([entry, &cfg] { return entry->run(cfg.lo, cfg.hi); });

  bool all_passed = true;
  run_in_order<OracleReport>(jobs, [&](const OracleReport& r) {
    all_passed = all_passed && r.passed;
    out << report_to_json(r).dump() << std::endl;
  });
  return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_eval(const Config& cfg, std::ostream& out, std::ostream& err) {
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  const Rational qval = parse_point(cfg.qval, "q");
  const Rational pval = parse_point(cfg.pval, "p");
  const Endo2<Rational> numeric = evaluate(build_operator(cfg.op), qval, pval);

  if (format == "csv") {
    out << to_csv(numeric);
  } else if (format == "json") {
    out << numeric_to_json(numeric, qval, pval).dump(2) << '\n';
  } else {
    out << to_latex(numeric);
  }

  if (!cfg.check_ybe) return kExitOk;
  const CheckReport report = check_ybe(numeric, "ybe_numeric");
  err << report_to_json(report).dump() << std::endl;
  return report.passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of Cremmer-Gervais R-matrices", "cgybe"};
  app.require_subcommand(1);
  Config cfg;

  auto* gen = app.add_subcommand("gen", "write an operator symbolically");
  add_operator_options(gen, cfg.op);
  gen->add_option("--format", cfg.format, "json or latex")->check(CLI::IsMember({"json", "csv", "latex"}));
  gen->add_option("--out", cfg.out_path, "output file (default: standard output)");

  auto* verify = app.add_subcommand("verify", "run operator-level checks; one JSON report per line");
  add_operator_options(verify, cfg.op);
  verify->add_option("--checks", cfg.checks, "comma list of ybe, compat, mixed, hecke, gp, quadratic")
      ->capture_default_str();
  verify->add_option("--hecke-q", cfg.hecke_q, "the q in (R - q)(R + q^-1) = 0")->capture_default_str();
  verify->add_option("--out", cfg.out_path, "output file (default: standard output)");

  auto* identities = app.add_subcommand("identities", "exhaustively check the scalar eta/u identities");
  identities->add_option("--lo", cfg.lo, "window lower bound")->capture_default_str();
  identities->add_option("--hi", cfg.hi, "window upper bound")->capture_default_str();
  identities->add_option("--only", cfg.only, "comma list of identity names");
  identities->add_option("--out", cfg.out_path, "output file (default: standard output)");

  auto* eval = app.add_subcommand("eval", "evaluate an operator at rational q, p");
  add_operator_options(eval, cfg.op);
  eval->add_option("--q", cfg.qval, "nonzero rational value of q")->required();
  eval->add_option("--p", cfg.pval, "nonzero rational value of p")->required();
  eval->add_option("--format", cfg.format, "csv, json or latex")->check(CLI::IsMember({"csv", "json", "latex"}));
  eval->add_flag("--check-ybe", cfg.check_ybe, "re-run the YBE check on the numeric matrix (report on stderr)");
  eval->add_option("--out", cfg.out_path, "output file (default: standard output)");

  std::vector<std::string> argv_storage{"cgybe"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
      file.open(cfg.out_path);
      if (!file) throw UsageError("cannot open '" + cfg.out_path + "' for writing");
      sink = &file;
    }
    if (gen->parsed()) return cmd_gen(cfg, *sink);
    if (verify->parsed()) return cmd_verify(cfg, *sink);
    if (identities->parsed()) return cmd_identities(cfg, *sink);
    return cmd_eval(cfg, *sink, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cgybe
