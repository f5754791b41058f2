#include "zm/cli.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "zm/error.hpp"
#include "zm/report.hpp"
#include "zm/subgroups.hpp"

namespace zm::cli {

namespace {

struct Triple {
  u64 m = 0;
  u64 n = 0;
  i64 r = 0;
};

void add_triple(CLI::App* cmd, Triple& t) {
  cmd->add_option("m", t.m, "order of a")->required();
  cmd->add_option("n", t.n, "order of b")->required();
  cmd->add_option("r", t.r, "b^-1 a b = a^r")->required()->allow_extra_args(false);
}

int cmd_validate(const Triple& t, std::ostream& out) {
  if (auto bad = find_violation(t.m, t.n, t.r)) {
    out << "invalid: " << describe(*bad) << "\n";
    return kInvalidTriple;
  }
  out << "valid, d=" << validate(t.m, t.n, t.r).d() << "\n";
  return kOk;
}

int cmd_info(const Triple& t, const std::string& format, std::ostream& out) {
  const auto p = validate(t.m, t.n, t.r);
  const auto report = build_report(p, budgets_from_env().elements);
  if (format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << to_text(report);
  }
  return kOk;
}

int cmd_classes(const Triple& t, const std::string& format, std::ostream& out) {
  const auto p = validate(t.m, t.n, t.r);
  const auto records = class_records(p, budgets_from_env().elements);
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : records) arr.push_back(to_json(c));
    out << arr.dump(2) << "\n";
    return kOk;
  }
  out << "u,v,class_size,aut_orbit_size,element_order,centralizer_order\n";
  for (const auto& c : records) {
    out << c.representative.u << ',' << c.representative.v << ',' << c.class_size << ','
        << c.aut_orbit_size << ',' << c.element_order << ',' << c.centralizer_order << "\n";
  }
  return kOk;
}

int cmd_subgroups(const Triple& t, const std::string& format, std::ostream& out) {
  const auto p = validate(t.m, t.n, t.r);
  const auto triples = enumerate_L(p);
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& s : triples) {
      arr.push_back({{"m1", s.m1},
                     {"n1", s.n1},
                     {"s", s.s},
                     {"order", subgroup_order(p, s)},
                     {"normal", is_normal(p, s)},
                     {"cyclic", is_cyclic(p, s)}});
    }
    out << arr.dump(2) << "\n";
    return kOk;
  }
  out << "m1,n1,s,order,normal,cyclic\n";
  for (const auto& s : triples) {
    out << s.m1 << ',' << s.n1 << ',' << s.s << ',' << subgroup_order(p, s) << ','
        << (is_normal(p, s) ? "true" : "false") << ',' << (is_cyclic(p, s) ? "true" : "false") << "\n";
  }
  return kOk;
}

int cmd_verify(const Triple& t, std::optional<u64> budget, std::ostream& out) {
  const auto p = validate(t.m, t.n, t.r);
  const u64 cap = budget.value_or(budgets_from_env().automorphisms);
  const auto result = verify(p, cap);
  for (const auto& c : result.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  if (const Check* bad = result.first_failure()) {
    out << "verify ZM(" << p.m() << "," << p.n() << "," << p.r() << "): FAILED at " << bad->name << "\n";
    return kVerifyFailed;
  }
  out << "verify ZM(" << p.m() << "," << p.n() << "," << p.r() << "): all " << result.checks.size()
      << " checks passed\n";
  return kOk;
}

int cmd_table(u64 m_max, u64 n_max, const std::string& path, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) {
      err << "zmtool: cannot write " << path << "\n";
      return kIoError;
    }
  }
  std::ostream& sink = path.empty() ? out : file;
  sink << kTableHeader << "\n";
  for (const auto& row : table_rows(m_max, n_max)) sink << to_csv(row) << "\n";
  sink.flush();
  if (!sink) {
    err << "zmtool: write failed\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy and automorphism classes of ZM-groups ZM(m,n,r)", "zmtool"};
  app.require_subcommand(1);

  Triple t;
  std::string format = "text";
  std::optional<u64> budget;
  u64 m_max = 0;
  u64 n_max = 0;
  std::string out_path;
  std::string table_format = "csv";

  auto* validate_cmd = app.add_subcommand("validate", "check (m,n,r) and print d");
  add_triple(validate_cmd, t);

  auto* info_cmd = app.add_subcommand("info", "invariants and class counts");
  add_triple(info_cmd, t);
  info_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string list_format = "csv";
  auto* classes_cmd = app.add_subcommand("classes", "one row per conjugacy class");
  add_triple(classes_cmd, t);
  classes_cmd->add_option("--format", list_format)->check(CLI::IsMember({"csv", "json"}));

  auto* subgroups_cmd = app.add_subcommand("subgroups", "all subgroup triples (m1,n1,s)");
  add_triple(subgroups_cmd, t);
  subgroups_cmd->add_option("--format", list_format)->check(CLI::IsMember({"csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "check every closed form against brute force");
  add_triple(verify_cmd, t);
  verify_cmd->add_option("--budget", budget, "largest group order to verify");

  auto* table_cmd = app.add_subcommand("table", "CSV of every valid triple in a range");
  table_cmd->add_option("--m-max", m_max)->required();
  table_cmd->add_option("--n-max", n_max)->required();
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"csv"}));
  table_cmd->add_option("--out", out_path, "output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "zmtool: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(t, out);
    if (info_cmd->parsed()) return cmd_info(t, format, out);
    if (classes_cmd->parsed()) return cmd_classes(t, list_format, out);
    if (subgroups_cmd->parsed()) return cmd_subgroups(t, list_format, out);
    if (verify_cmd->parsed()) return cmd_verify(t, budget, out);
    if (table_cmd->parsed()) return cmd_table(m_max, n_max, out_path, out, err);
  } catch (const Error& e) {
    err << "zmtool: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InvalidTriple: return kInvalidTriple;
      case ErrorKind::Capacity: return kBudgetExceeded;
      case ErrorKind::Precondition: return kUsage;
      default: return kVerifyFailed;
    }
  }
  return kUsage;
}

}  // namespace zm::cli
