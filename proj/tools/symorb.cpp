// symorb: fundamental groups and singularities of Fujiki's symplectic
// orbifolds and of partially blown-up Kummer surfaces.
//
//   symorb pi1 t-Z4
//   symorb census t-Z6 --format json
//   symorb kummer --sigma 0x0003
//   symorb kummer --sweep --jobs 4
//   symorb tables
//
// Exit codes: 0 all checks pass, 1 some verification failed, 2 usage error.

#include <CLI11.hpp>

#include <iostream>

#include "symorb/error.hpp"
#include "symorb/report.hpp"

namespace {

constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct Globals {
  std::string format = "md";
  unsigned jobs = 1;
  bool verbose = false;
  bool timing = true;
};

void print_catalog(std::ostream& os) {
  os << "known cases:";
  for (const auto& label : symorb::catalog_labels())
    os << " " << label;
  os << "\n";
}

int emit(const Globals& g, const std::vector<symorb::RunReport>& reports, bool as_table) {
  if (g.format == "json") {
    nlohmann::json out;
    if (as_table) {
      out = nlohmann::json::array();
      for (const auto& r : reports)
        out.push_back(symorb::to_json(r, g.timing));
    } else {
      out = symorb::to_json(reports.front(), g.timing);
    }
    std::cout << out.dump(2) << "\n";
  } else if (as_table) {
    std::cout << symorb::render_tables_md(reports);
  } else {
    std::cout << symorb::render_md(reports.front());
  }
  bool ok = true;
  for (const auto& r : reports) {
    if (g.verbose)
      for (const auto& line : r.log)
        std::cerr << "[" << r.case_label << "] " << line << "\n";
    if (!r.ok()) {
      ok = false;
      for (const auto& line : r.failures)
        std::cerr << "[" << r.case_label << "] " << line << "\n";
    }
  }
  return ok ? 0 : kVerificationFailure;
}

std::optional<symorb::FujikiCase> lookup(const std::string& label) {
  auto c = symorb::find_case(label);
  if (!c) {
    std::cerr << "unknown case '" << label << "'\n";
    print_catalog(std::cerr);
  }
  return c;
}

std::optional<std::uint16_t> parse_mask(std::string text) {
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0)
    text = text.substr(2);
  if (text.empty() || text.size() > 4 || text.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos)
    return std::nullopt;
  return static_cast<std::uint16_t>(std::stoul(text, nullptr, 16));
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fundamental groups of regular parts of symplectic orbifolds"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"md", "json"}));
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--verbose", g.verbose, "Print intermediate lattices and orbit logs to stderr");
  app.add_flag("--no-timing{false}", g.timing, "Report elapsed_ms as 0 (byte-stable JSON)");

  std::string label;
  auto* pi1 = app.add_subcommand("pi1", "π1(X_reg) of a catalog case, with verification checks");
  pi1->add_option("case", label, "Case label")->required();
  auto* census = app.add_subcommand("census", "Isolated singular points of a torus case");
  census->add_option("case", label, "Case label")->required();
  auto* kummer = app.add_subcommand("kummer", "Partially blown-up Kummer surface");
  std::string sigma;
  bool sweep_all = false;
  auto* sigma_opt = kummer->add_option("--sigma", sigma, "16-bit hex mask of blown-up two-torsion classes");
  auto* sweep_opt = kummer->add_flag("--sweep", sweep_all, "Check all 65,535 nonempty subsets");
  sigma_opt->excludes(sweep_opt);
  kummer->require_option(1);
  app.add_subcommand("tables", "Recompute the π1 and singularity tables of the torus cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  const symorb::RunOptions opts{g.jobs, g.verbose};
  try {
    if (pi1->parsed()) {
      auto c = lookup(label);
      if (!c)
        return kUsageError;
      return emit(g, {symorb::run_pi1(*c, opts)}, false);
    }
    if (census->parsed()) {
      auto c = lookup(label);
      if (!c)
        return kUsageError;
      return emit(g, {symorb::run_census(*c, opts)}, false);
    }
    if (kummer->parsed()) {
      if (sweep_all)
        return emit(g, {symorb::run_kummer_sweep(opts)}, false);
      auto mask = parse_mask(sigma);
      if (!mask) {
        std::cerr << "--sigma expects a 16-bit hex mask, got '" << sigma << "'\n";
        return kUsageError;
      }
      if (*mask == 0) {
        std::cerr << "empty Σ: nothing is blown up, X_reg = (T minus its 16 two-torsion points) / <-1>, "
                     "and π1(X_reg) = Λ ⋊ <τ> with τ = -1 is infinite; no finite quotient to compute\n";
        return kUsageError;
      }
      return emit(g, {symorb::run_kummer(*mask, opts)}, false);
    }
    return emit(g, symorb::run_tables(opts), true);
  } catch (const symorb::OutOfScope& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (const symorb::ClaimViolation& e) {
    std::cerr << e.what() << "\n";
    return kVerificationFailure;
  } catch (const symorb::ModelError& e) {
    std::cerr << "model construction failed: " << e.what() << "\n";
    return kVerificationFailure;
  }
}
