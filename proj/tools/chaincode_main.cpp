// Command-line front end: counting, census, classification, and single-code
// inspection with stable machine-readable output.
//
// Exit status: 0 on success, 1 when the work budget is exceeded (or the audit
// finds a grid mismatch), 2 on usage errors.  All counts are printed as
// decimal strings so arbitrary-precision totals survive the trip through
// JSON.  Output is deterministic byte-for-byte for a fixed command line.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chaincode/additive.hpp"
#include "chaincode/census.hpp"
#include "chaincode/counting.hpp"
#include "chaincode/mixedcode.hpp"

namespace {

using namespace chaincode;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CensusFilter filter_of(const std::string& name) {
  if (name == "all") return CensusFilter::all;
  if (name == "so") return CensusFilter::self_orthogonal;
  if (name == "sd") return CensusFilter::self_dual;
  if (name == "lcd") return CensusFilter::lcd;
  throw UsageError("unknown predicate: " + name);
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

struct CountArgs {
  std::int64_t p = 0;
  int e = 0;
  std::int64_t n1 = -1, n2 = -1;      // mixed-alphabet bundle
  std::int64_t r = -1, k = -1, t = -1, n = -1;  // extension-ring bundle
  bool nonzero = false;
  std::string format = "json";
};

const char* kZeroCodeNote =
    "includes the zero code, which satisfies the predicate by definition; "
    "pass --nonzero for the convention that counts only non-zero codes";
const char* kZeroCodeExcluded = "zero code excluded (--nonzero)";

int run_count(const std::string& predicate, const CountArgs& a) {
  const bool mixed_given = a.n1 >= 0 || a.n2 >= 0;
  const bool additive_given = a.r >= 0 || a.k >= 0 || a.t >= 0 || a.n >= 0;
  if (mixed_given && additive_given)
    throw UsageError("count " + predicate +
                     ": give either --n1/--n2 or --r/--k/--t/--n, not both");

  mpz_class total;
  nlohmann::json out;
  out["predicate"] = predicate;
  bool has_zero_code = true;  // the zero code satisfies every predicate but self-dual

  if (predicate == "acd" || (additive_given && (predicate == "so" || predicate == "sd"))) {
    if (a.r < 0 || a.k < 0 || a.t < 0 || a.n < 0)
      throw UsageError("count " + predicate + ": needs --p --e --r --k --t --n");
    const EisensteinParams par(a.p, a.e, static_cast<int>(a.r), static_cast<int>(a.k),
                               static_cast<int>(a.t));
    const int n = static_cast<int>(a.n);
    if (predicate == "acd")
      total = count_lcd_additive(par, n);
    else if (predicate == "so")
      total = count_so_additive(par, n);
    else {
      total = count_sd_additive(par, n);
      has_zero_code = false;
    }
    out["params"] = nlohmann::json{{"p", a.p}, {"e", a.e}, {"r", a.r},
                                   {"k", a.k}, {"t", a.t}, {"n", a.n}};
  } else {
    if (predicate == "acd")
      throw UsageError("count acd: complementary-dual codes over an extension ring "
                       "need --p --e --r --k --t --n (use `count lcd` for the mixed alphabet)");
    if (a.n1 < 0 || a.n2 < 0)
      throw UsageError("count " + predicate + ": needs --p --e --n1 --n2");
    const int n1 = static_cast<int>(a.n1), n2 = static_cast<int>(a.n2);
    if (predicate == "so")
      total = count_so_total(a.p, a.e, n1, n2);
    else if (predicate == "sd") {
      total = count_sd_total(a.p, a.e, n1, n2);
      has_zero_code = false;
    } else
      total = count_lcd_mixed(a.p, a.e, n1, n2);
    out["ambient"] =
        nlohmann::json{{"p", a.p}, {"e", a.e}, {"n1", a.n1}, {"n2", a.n2}};
  }

  std::string note;
  if (a.nonzero) {
    if (has_zero_code) total -= 1;  // the self-dual classes never contain it
    note = kZeroCodeExcluded;
  } else if (predicate == "lcd" || predicate == "acd") {
    note = kZeroCodeNote;
  }
  out["count"] = total.get_str();
  if (!note.empty()) out["note"] = note;

  if (a.format == "csv") {
    std::cout << "predicate,count,note\n"
              << predicate << "," << total.get_str() << ",\"" << note << "\"\n";
  } else {
    print_json(out);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// census / classify
// ---------------------------------------------------------------------------

struct GridArgs {
  std::int64_t p = 0;
  int e = 0;
  std::int64_t n1 = 0, n2 = 0;
  bool nonzero = false;
  int threads = 1;
  std::uint64_t budget_limit = 0;
  bool budget_given = false;
  std::string format = "json";

  MixedAmbient ambient() const {
    return MixedAmbient(p, e, static_cast<std::size_t>(n1), static_cast<std::size_t>(n2));
  }
  void make_budget(std::optional<CensusBudget>& b) const {
    if (budget_given)
      b.emplace(budget_limit);
    else
      b.emplace();
  }
};

// Remove the zero code (the unique code of the all-zero type) from a report.
void drop_zero_code(CensusReport& rep) {
  const CodeType zero{std::vector<int>(static_cast<std::size_t>(rep.ambient.mu), 0),
                      std::vector<int>(static_cast<std::size_t>(rep.ambient.mu - 1), 0)};
  const auto it = rep.by_type.find(zero);
  if (it == rep.by_type.end()) return;  // e.g. self-dual censuses never hold it
  rep.total -= 1;
  if (--it->second == 0) rep.by_type.erase(it);
}

int run_census(const std::string& predicate, const GridArgs& a) {
  std::optional<CensusBudget> budget;
  a.make_budget(budget);
  CensusReport rep = census_count(a.ambient(), filter_of(predicate), *budget, a.threads);
  if (a.nonzero) drop_zero_code(rep);
  if (a.format == "csv") {
    std::cout << census_report_csv(rep);
  } else {
    nlohmann::json j = census_report_json(rep);
    j.erase("work_used");  // timing and effort are not part of the stable schema
    j.erase("seconds");
    print_json(j);
  }
  return 0;
}

int run_classify(const std::string& predicate, const GridArgs& a) {
  if (a.n1 != a.n2)
    throw UsageError(
        "classify: the equivalence group pairs each high-alphabet column with a "
        "low-alphabet column, so --n1 and --n2 must be equal");
  const MixedAmbient amb = a.ambient();
  const MonomialGroup group(amb, static_cast<std::size_t>(a.n1));
  std::optional<CensusBudget> budget;
  a.make_budget(budget);
  const OrbitReport rep =
      classify(amb, filter_of(predicate), group, *budget, a.nonzero, a.threads);
  if (a.format == "csv")
    std::cout << orbit_report_csv(rep);
  else
    print_json(orbit_report_json(rep));
  return 0;
}

// ---------------------------------------------------------------------------
// code type / code dual
// ---------------------------------------------------------------------------

nlohmann::json load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open code file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

int run_code(const std::string& action, const std::string& path) {
  const nlohmann::json j = load_code_file(path);
  const bool additive = j.contains("r") && j.contains("t") && j.contains("n");
  if (additive) {
    const AdditiveCode C = read_additive_code_json(j);
    if (action == "type")
      print_json(type_json(type_of(C.image())));
    else
      print_json(write_additive_code_json(chi_dual(C)));
  } else {
    const MixedCode C = read_mixed_code_json(j);
    if (action == "type")
      print_json(type_json(type_of(C)));
    else
      print_json(write_mixed_code_json(dual(C)));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

int run_audit(int threads, bool budget_given, std::uint64_t budget_limit,
              const std::string& format) {
  std::optional<CensusBudget> budget;
  if (budget_given)
    budget.emplace(budget_limit);
  else
    budget.emplace();
  const AuditReport rep = audit(*budget, threads);
  if (format == "csv")
    std::cout << audit_report_csv(rep);
  else
    print_json(audit_report_json(rep));
  return rep.all_match ? 0 : 1;
}

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "chaincode: exact enumeration, census, and classification of linear codes\n"
      "over the mixed alphabet Z_{p^e} x Z_{p^{e-1}} and of additive codes over\n"
      "chain-ring extensions.\n"};
  app.require_subcommand(1);
  app.footer(
      "examples:\n"
      "  chaincode count so --p 3 --e 2 --n1 2 --n2 2 --nonzero\n"
      "  chaincode count acd --p 2 --e 2 --r 1 --k 2 --t 1 --n 2\n"
      "  chaincode census sd --p 5 --e 2 --n1 2 --n2 2\n"
      "  chaincode classify so --p 3 --e 2 --n1 2 --n2 2 --nonzero\n"
      "  chaincode code type --in mycode.json\n"
      "  chaincode audit\n"
      "\n"
      "The census work budget defaults to 10^8 work units; override it with\n"
      "--budget or the CHAINCODE_BUDGET environment variable.");

  // ---- count ----
  auto* count_cmd = app.add_subcommand(
      "count", "closed-form code counts (totals include the zero code)");
  count_cmd->require_subcommand(1);
  CountArgs count_args;
  std::string count_predicate;
  for (const char* pred : {"so", "sd", "lcd", "acd"}) {
    auto* c = count_cmd->add_subcommand(
        pred, std::string("count ") +
                  (std::string(pred) == "so"   ? "self-orthogonal codes"
                   : std::string(pred) == "sd" ? "self-dual codes"
                   : std::string(pred) == "lcd"
                       ? "complementary-dual codes over the mixed alphabet"
                       : "complementary-dual additive codes over an extension ring"));
    c->add_option("--p", count_args.p, "prime")->required();
    c->add_option("--e", count_args.e, "chain length (>= 2)")->required();
    c->add_option("--n1", count_args.n1, "high-alphabet block length");
    c->add_option("--n2", count_args.n2, "low-alphabet block length");
    c->add_option("--r", count_args.r, "Galois-ring degree of the extension");
    c->add_option("--k", count_args.k, "extension rank over the Galois ring");
    c->add_option("--t", count_args.t, "splitting index of the extension");
    c->add_option("--n", count_args.n, "code length over the extension ring");
    c->add_flag("--nonzero", count_args.nonzero, "exclude the zero code");
    add_format_flag(c, count_args.format);
    c->callback([pred, &count_predicate] { count_predicate = pred; });
  }

  // ---- census / classify ----
  GridArgs census_args, classify_args;
  std::string census_predicate, classify_predicate;
  const auto add_grid = [](CLI::App* parent, GridArgs& args, std::string& predicate,
                           const char* what) -> CLI::App* {
    parent->require_subcommand(1);
    for (const char* pred : {"all", "so", "sd", "lcd"}) {
      auto* c = parent->add_subcommand(pred, std::string(what) + " (" + pred + ")");
      c->add_option("--p", args.p, "prime")->required();
      c->add_option("--e", args.e, "chain length (>= 2)")->required();
      c->add_option("--n1", args.n1, "high-alphabet block length")->required();
      c->add_option("--n2", args.n2, "low-alphabet block length")->required();
      c->add_flag("--nonzero", args.nonzero, "exclude the zero code");
      c->add_option("--threads", args.threads, "worker threads (results independent of n)")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
      auto* budget_opt = c->add_option(
          "--budget", args.budget_limit, "work-unit budget (default 10^8, or CHAINCODE_BUDGET)");
      add_format_flag(c, args.format);
      c->callback([pred, &predicate, &args, budget_opt] {
        predicate = pred;
        args.budget_given = budget_opt->count() > 0;
      });
    }
    return parent;
  };
  auto* census_cmd =
      add_grid(app.add_subcommand("census", "exhaustive enumeration with per-type tallies"),
               census_args, census_predicate, "enumerate codes");
  auto* classify_cmd = add_grid(
      app.add_subcommand("classify", "orbit representatives under monomial-type equivalence"),
      classify_args, classify_predicate, "classify codes");

  // ---- code ----
  auto* code_cmd = app.add_subcommand("code", "inspect a single code from a file");
  code_cmd->require_subcommand(1);
  std::string code_in, code_action;
  for (const char* act : {"type", "dual"}) {
    auto* c = code_cmd->add_subcommand(
        act, std::string(act) == "type" ? "print the pivot-grade type of a code"
                                        : "print the dual (or character dual) of a code");
    c->add_option("--in", code_in, "code file (JSON)")->required();
    c->callback([act, &code_action] { code_action = act; });
  }

  // ---- audit ----
  auto* audit_cmd = app.add_subcommand(
      "audit", "closed-form counters vs. exhaustive censuses on the reference grid");
  int audit_threads = 1;
  std::uint64_t audit_budget = 0;
  std::string audit_format = "json";
  audit_cmd->add_option("--threads", audit_threads, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* audit_budget_opt = audit_cmd->add_option(
      "--budget", audit_budget, "work-unit budget (default 10^8, or CHAINCODE_BUDGET)");
  add_format_flag(audit_cmd, audit_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count_cmd) return run_count(count_predicate, count_args);
    if (*census_cmd) return run_census(census_predicate, census_args);
    if (*classify_cmd) return run_classify(classify_predicate, classify_args);
    if (*code_cmd) return run_code(code_action, code_in);
    if (*audit_cmd)
      return run_audit(audit_threads, audit_budget_opt->count() > 0, audit_budget,
                       audit_format);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad code file: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
