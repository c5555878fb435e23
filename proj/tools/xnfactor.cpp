// xnfactor: factor x^n - 1 over F_q and cross-check against cyclotomic cosets.
//
//   xnfactor run --n 73 --q 2 [--mode closed|oracle|both] [--format text|json]
//   xnfactor sweep --n-max 200 --q-list 2,3,4 [--format csv|json]
//
// Exit status: 0 ok, 2 a check failed, 1 usage or resource error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "xnf/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

xnf::Nat parse_nat(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw xnf::UsageError(what + " must be a positive integer, got '" + s + "'");
  }
  return xnf::Nat(s);
}

void emit(const std::string& out_path, const std::string& body) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw xnf::ResourceError("cannot open " + out_path);
  f << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factor x^n - 1 over finite fields"};
  app.require_subcommand(1);

  std::string n_arg, q_arg, mode_arg = "both", format = "text", out_path;
  bool no_verify = false, timing = false;
  unsigned budget_bits = 128, threads = 1;
  auto* run = app.add_subcommand("run", "Factor one x^n - 1");
  run->add_option("--n", n_arg, "exponent n")->required();
  run->add_option("--q", q_arg, "field size, a prime power")->required();
  run->add_option("--mode", mode_arg, "closed, oracle or both")->check(CLI::IsMember({"closed", "oracle", "both"}));
  run->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  run->add_flag("--no-verify", no_verify, "skip the product and irreducibility checks");
  run->add_flag("--timing", timing, "include wall-clock timings (output is then not reproducible)");
  run->add_option("--budget", budget_bits, "largest splitting field for the oracle, in bits");
  run->add_option("--threads", threads, "worker threads for the closed form");
  run->add_option("--out", out_path, "write the report to this file");

  std::uint64_t n_max = 0;
  std::string q_list, sweep_mode = "both", sweep_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "Compare closed form and oracle over a range of n");
  sweep->add_option("--n-max", n_max, "largest n")->required();
  sweep->add_option("--q-list", q_list, "comma-separated prime powers")->required();
  sweep->add_option("--mode", sweep_mode, "closed, oracle or both")->check(CLI::IsMember({"closed", "oracle", "both"}));
  sweep->add_option("--format", sweep_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--budget", budget_bits, "largest splitting field for the oracle, in bits");
  sweep->add_option("--out", out_path, "write the table to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    xnf::OracleBudget budget;
    budget.max_bits = budget_bits;
    if (*run) {
      xnf::RunOptions opts;
      opts.n = parse_nat(n_arg, "--n");
      opts.q = parse_nat(q_arg, "--q");
      opts.mode = xnf::parse_mode(mode_arg);
      opts.verify = !no_verify;
      opts.timing = timing;
      opts.threads = std::max(1u, threads);
      opts.budget = budget;
      const xnf::FactorReport report = xnf::run_factorization(opts);
      emit(out_path, format == "json" ? xnf::to_json(report, timing).dump(2) + "\n" : xnf::to_text(report, timing));
      return report.failed() ? kCheckFailed : kOk;
    }
    std::vector<xnf::Nat> qs;
    std::stringstream ss(q_list);
    for (std::string item; std::getline(ss, item, ',');) qs.push_back(parse_nat(item, "--q-list entry"));
    if (qs.empty()) throw xnf::UsageError("--q-list is empty");
    const auto rows = xnf::run_sweep(n_max, qs, xnf::parse_mode(sweep_mode), budget);
    emit(out_path, sweep_format == "json" ? xnf::sweep_json(rows).dump(2) + "\n" : xnf::sweep_csv(rows));
    for (const auto& r : rows) {
      if (!r.agree) return kCheckFailed;
    }
    return kOk;
  } catch (const xnf::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const xnf::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kUsage;
  }
}
