#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "xnf/closedform.hpp"
#include "xnf/oracle.hpp"

namespace xnf {

enum class Mode { Closed, Oracle, Both };
Mode parse_mode(const std::string& s);
std::string to_string(Mode m);

struct RunOptions {
  Nat n;
  Nat q;
  Mode mode = Mode::Both;
  bool verify = true;
  bool timing = false;
  unsigned threads = 1;
  OracleBudget budget;
};

struct ReportFactor {
  Poly poly;
  nlohmann::json form;
};

// Checks hold nullopt when skipped.
struct FactorReport {
  Nat n, q, p;
  unsigned s = 1;
  CaseTag tag;
  std::optional<CaseParams> params;
  std::string source;  // "closed" or "oracle"
  std::vector<ReportFactor> factors;
  std::optional<Nat> count_formula;
  Nat coset_count;
  std::optional<bool> product_ok;
  std::optional<bool> all_irreducible;
  bool count_matches = false;
  std::optional<bool> oracle_agrees;
  std::string oracle_note;
  std::map<std::string, long long> timing_ms;

  bool failed() const;
};

FactorReport run_factorization(const RunOptions& opts);

// Keys are sorted and no floats appear, so equal reports serialize identically.
nlohmann::json to_json(const FactorReport& r, bool timing = false);
std::string to_text(const FactorReport& r, bool timing = false);

struct SweepRow {
  Nat n, q;
  std::string case_name;
  std::optional<Nat> closed_count;
  std::optional<Nat> oracle_count;
  bool agree = true;
};

// All n in [1, n_max] coprime to each q.
std::vector<SweepRow> run_sweep(std::uint64_t n_max, const std::vector<Nat>& qs, Mode mode, const OracleBudget& budget);
std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);

}  // namespace xnf
