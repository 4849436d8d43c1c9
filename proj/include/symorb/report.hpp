// Run reports for the command-line front end: what was computed, which
// checks ran and how they came out, plus JSON and Markdown renderings.

#ifndef SYMORB_REPORT_HPP_
#define SYMORB_REPORT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fujiki.hpp"

namespace symorb {

enum class CheckStatus { pass, fail, skipped, open_question_violation };

std::string to_string(CheckStatus s);

// Every report carries all of these, "skipped" when not run.
const std::vector<std::string>& check_names();

struct RunReport {
  std::string case_label;
  std::optional<FiniteAbelianGroup> pi1;
  std::optional<std::map<unsigned, std::size_t>> census;  // a_k
  std::map<std::string, CheckStatus> checks;
  long elapsed_ms = 0;
  nlohmann::json extra = nlohmann::json::object();  // command-specific fields
  std::vector<std::string> log;                     // diagnostics for --verbose
  std::vector<std::string> failures;                // always shown on failure

  RunReport();
  void set(const std::string& check, CheckStatus status);
  void set(const std::string& check, bool passed) { set(check, passed ? CheckStatus::pass : CheckStatus::fail); }
  bool ok() const;
};

// Expected values used only for pass/fail comparison.
std::optional<IntVector> expected_pi1(const std::string& label);
std::optional<std::map<unsigned, std::size_t>> expected_census(const std::string& label);

struct RunOptions {
  unsigned jobs = 1;
  bool verbose = false;
};

// Thrown for requests outside the model's scope (census of a K3 case).
struct OutOfScope : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

RunReport run_pi1(const FujikiCase& fcase, const RunOptions& opts = {});
RunReport run_census(const FujikiCase& fcase, const RunOptions& opts = {});
// π1 with every check plus the census, as used by the tables command.
RunReport run_full(const FujikiCase& fcase, const RunOptions& opts = {});
std::vector<RunReport> run_tables(const RunOptions& opts = {});
RunReport run_kummer(std::uint16_t mask, const RunOptions& opts = {});
RunReport run_kummer_sweep(const RunOptions& opts = {});

// Keys sorted; elapsed_ms forced to 0 when `timing` is false.
nlohmann::json to_json(const RunReport& report, bool timing = true);
std::string render_md(const RunReport& report);
std::string render_tables_md(const std::vector<RunReport>& reports);

} // namespace symorb

#endif
