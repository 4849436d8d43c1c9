#include "symorb/report.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include "symorb/census.hpp"
#include "symorb/error.hpp"
#include "symorb/kummer.hpp"
#include "symorb/pi1.hpp"

namespace symorb {

using nlohmann::json;

std::string to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass:
    return "pass";
  case CheckStatus::fail:
    return "fail";
  case CheckStatus::skipped:
    return "skipped";
  case CheckStatus::open_question_violation:
    return "open-question-violation";
  }
  return "fail";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "claim-i",          "claim-ii",           "claim-iii",          "fixed-point-law", "hprime-robustness",
      "k3-coset-generation", "kummer-basepoint", "kummer-monotonicity", "kummer-oracle-match",
      "kummer-paths-agree", "normality",        "oracle-match",       "table2-match",    "table3-match",
  };
  return names;
}

RunReport::RunReport() {
  for (const auto& name : check_names())
    checks[name] = CheckStatus::skipped;
}

void RunReport::set(const std::string& check, CheckStatus status) {
  auto it = checks.find(check);
  if (it == checks.end())
    throw std::logic_error("unknown check name " + check);
  it->second = status;
}

bool RunReport::ok() const {
  for (const auto& [name, status] : checks)
    if (status == CheckStatus::fail || status == CheckStatus::open_question_violation)
      return false;
  return true;
}

std::optional<IntVector> expected_pi1(const std::string& label) {
  static const std::map<std::string, IntVector> table = {
      {"t-Z3", make_int_vector({3, 3})}, {"t-Z3xZ3", make_int_vector({3})}, {"t-Z3^3", {}},
      {"t-Z4", make_int_vector({2, 2})}, {"t-Z2xZ4", make_int_vector({2})}, {"t-Z2^2xZ4", {}},
      {"t-Z6", {}},
  };
  auto it = table.find(label);
  if (it == table.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::map<unsigned, std::size_t>> expected_census(const std::string& label) {
  static const std::map<std::string, std::map<unsigned, std::size_t>> table = {
      {"t-Z3", {{3, 36}}},          {"t-Z3xZ3", {{3, 27}}},         {"t-Z3^3", {}},
      {"t-Z4", {{2, 54}, {4, 6}}},  {"t-Z2xZ4", {{2, 48}, {4, 4}}}, {"t-Z2^2xZ4", {{2, 36}}},
      {"t-Z6", {{2, 36}, {3, 16}}},
  };
  auto it = table.find(label);
  if (it == table.end())
    return std::nullopt;
  return it->second;
}

namespace {

using Clock = std::chrono::steady_clock;

long millis_since(Clock::time_point start) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

std::string lattice_rows(const Lattice& l) {
  std::ostringstream os;
  for (std::size_t i = 0; i < l.rank(); ++i)
    os << "    " << to_string(l.numerators().row(i)) << "\n";
  return os.str();
}

// Runs one claim check, recording pass or fail with the counterexample.
template <class F>
void record_claim(RunReport& r, const std::string& name, F&& check) {
  try {
    check();
    r.set(name, CheckStatus::pass);
  } catch (const ClaimViolation& e) {
    r.set(name, CheckStatus::fail);
    r.failures.push_back(e.what());
  }
}

void torus_pi1(RunReport& r, const TorusModel& model, const RunOptions& opts) {
  const FujikiCase& fcase = model.fcase;
  NUDecomposition nu = decompose(model);
  record_claim(r, "claim-i", [&] { check_witnesses(model, nu); });
  record_claim(r, "claim-ii", [&] { check_direct_sum(model, nu); });
  record_claim(r, "claim-iii", [&] { check_phi(model, nu); });
  record_claim(r, "normality", [&] { check_normality(model, nu); });
  r.pi1 = quotient(Lattice::standard(8), nu.gamma_prime);
  if (opts.verbose) {
    for (unsigned k = 0; k < nu.gamma_k.size(); ++k)
      r.log.push_back("Γ_" + std::to_string(k) + " basis (Γ-coordinates):\n" + lattice_rows(nu.gamma_k[k]));
    r.log.push_back("Γ' basis:\n" + lattice_rows(nu.gamma_prime));
    r.log.push_back(std::to_string(nu.witnesses.size()) + " witnesses t_γ ι̂σ̂^k fixing γ/2");
  }

  OracleResult oracle = nu_oracle(model);
  r.set("oracle-match", oracle.lattice == nu.gamma_prime && oracle.surjects_onto_point_group);
  if (oracle.lattice != nu.gamma_prime)
    r.failures.push_back("stabilizer oracle lattice differs from Γ':\n" + lattice_rows(oracle.lattice));
  if (!oracle.surjects_onto_point_group)
    r.failures.push_back("stabilizer elements do not generate the point group");
  if (opts.verbose)
    r.log.push_back("oracle: " + std::to_string(oracle.points_scanned) + " torsion points scanned, " +
                    std::to_string(oracle.stabilizer_elements) + " ι-type stabilizer elements");

  if (auto expected = expected_pi1(fcase.label)) {
    bool match = r.pi1->invariant_factors() == *expected && r.pi1->free_rank() == 0;
    r.set("table3-match", match);
    if (!match)
      r.failures.push_back("π1 " + r.pi1->str() + " differs from the expected " +
                           FiniteAbelianGroup::from_cyclic_orders(*expected).str());
  }

  if (fcase.translation_rank > 0) {
    bool stable = true;
    std::size_t tried = 0;
    for (const auto& gens : hprime_choices(fcase)) {
      TorusModel alt;
      try {
        alt = build_torus_model(fcase, gens);
      } catch (const ModelError& e) {
        r.log.push_back(std::string("H' choice rejected: ") + e.what());
        continue;
      }
      ++tried;
      FiniteAbelianGroup g = quotient(Lattice::standard(8), decompose(alt).gamma_prime);
      if (g != *r.pi1) {
        stable = false;
        std::string desc;
        for (const auto& v : gens)
          desc += v.str() + " ";
        r.failures.push_back("open question: H' generated by " + desc + "gives π1 " + g.str());
      }
    }
    r.set("hprime-robustness", stable ? CheckStatus::pass : CheckStatus::open_question_violation);
    if (opts.verbose)
      r.log.push_back(std::to_string(tried) + " H' generator choices compared");
  }
}

void k3_pi1(RunReport& r, const FujikiCase& fcase, const RunOptions& opts) {
  AbstractGroup g = build_k3_group(fcase);
  std::vector<std::size_t> sub = coset_generated_subgroup(g);
  bool generates = sub.size() == g.order();
  r.set("k3-coset-generation", generates);
  if (!generates)
    r.failures.push_back("<ιH> has order " + std::to_string(sub.size()) + " in G of order " +
                         std::to_string(g.order()));
  try {
    r.pi1 = pi1_k3(g);
  } catch (const std::logic_error& e) {
    r.set("k3-coset-generation", CheckStatus::fail);
    r.failures.push_back(e.what());
  }
  if (opts.verbose)
    r.log.push_back("|G| = " + std::to_string(g.order()) + ", " + (g.is_abelian() ? "abelian" : "non-abelian"));
}

void torus_census(RunReport& r, const TorusModel& model, const RunOptions& opts) {
  CensusReport c = census(model);
  r.census = c.a;
  bool law = true;
  for (const auto& [k, counts] : c.fixed_point_law)
    if (Integer(static_cast<unsigned long>(counts.first)) != counts.second) {
      law = false;
      r.failures.push_back("σ̂^" + std::to_string(k) + ": " + std::to_string(counts.first) +
                           " fixed points enumerated, |det(σ̂^k - I)| = " + counts.second.get_str());
    }
  r.set("fixed-point-law", law);
  if (auto expected = expected_census(model.fcase.label)) {
    bool match = *expected == c.a;
    r.set("table2-match", match);
    if (!match)
      r.failures.push_back("census differs from the expected table; orbit log:\n" + orbit_log(c));
  }
  if (opts.verbose)
    r.log.push_back(std::to_string(c.rotation_fixed_points) + " rotation-fixed points, " +
                    std::to_string(c.isolated.size()) + " isolated orbits, " + std::to_string(c.excluded.size()) +
                    " on 2-dimensional loci, " + std::to_string(c.g2_points.size()) + " of type G2\n" +
                    orbit_log(c));
}

FujikiCase require_torus(const FujikiCase& fcase) {
  if (fcase.kind != SurfaceKind::torus)
    throw OutOfScope(fcase.label + ": the census needs fixed-point data of symplectic K3 automorphisms, "
                                   "which the abstract group model does not carry");
  return fcase;
}

} // namespace

RunReport run_pi1(const FujikiCase& fcase, const RunOptions& opts) {
  const auto start = Clock::now();
  RunReport r;
  r.case_label = fcase.label;
  if (fcase.kind == SurfaceKind::torus)
    torus_pi1(r, build_torus_model(fcase), opts);
  else
    k3_pi1(r, fcase, opts);
  r.elapsed_ms = millis_since(start);
  return r;
}

RunReport run_census(const FujikiCase& fcase, const RunOptions& opts) {
  const auto start = Clock::now();
  require_torus(fcase);
  RunReport r;
  r.case_label = fcase.label;
  TorusModel model = build_torus_model(fcase);
  r.pi1 = quotient(Lattice::standard(8), decompose(model).gamma_prime);
  torus_census(r, model, opts);
  r.elapsed_ms = millis_since(start);
  return r;
}

RunReport run_full(const FujikiCase& fcase, const RunOptions& opts) {
  const auto start = Clock::now();
  require_torus(fcase);
  RunReport r;
  r.case_label = fcase.label;
  TorusModel model = build_torus_model(fcase);
  torus_pi1(r, model, opts);
  torus_census(r, model, opts);
  r.elapsed_ms = millis_since(start);
  return r;
}

std::vector<RunReport> run_tables(const RunOptions& opts) {
  const std::vector<FujikiCase> cases = torus_table_cases();
  std::vector<RunReport> out(cases.size());
  const unsigned jobs = std::max(1u, opts.jobs);
  for (std::size_t start = 0; start < cases.size(); start += jobs) {
    std::vector<std::future<RunReport>> batch;
    for (std::size_t i = start; i < std::min(cases.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [&, i] { return run_full(cases[i], opts); }));
    for (std::size_t i = 0; i < batch.size(); ++i)
      out[start + i] = batch[i].get();
  }
  return out;
}

namespace {

std::string hex_mask(std::uint16_t mask) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%04x", mask);
  return buf;
}

} // namespace

RunReport run_kummer(std::uint16_t mask, const RunOptions& opts) {
  const auto start = Clock::now();
  BlowupSubset s = BlowupSubset::from_mask(mask);
  RunReport r;
  r.case_label = "kummer-" + hex_mask(mask);
  FiniteAbelianGroup lemma = pi1_via_lemma(s);
  FiniteAbelianGroup formula = pi1_via_formula(s);
  r.pi1 = lemma;
  r.set("kummer-paths-agree", lemma == formula);
  if (lemma != formula)
    r.failures.push_back("lattice path gives " + lemma.str() + ", formula gives " + formula.str());
  r.set("kummer-basepoint", basepoint_independence_check(mask));
  Lattice oracle = kummer_nu_oracle(mask);
  bool oracle_ok = oracle == lemma_lattice(s);
  r.set("kummer-oracle-match", oracle_ok);
  if (!oracle_ok)
    r.failures.push_back("stabilizer oracle lattice:\n" + lattice_rows(oracle));
  r.extra["kummer"] = {{"mask", hex_mask(mask)},
                       {"basepoint", s.basepoint},
                       {"lemma", lemma.str()},
                       {"formula", formula.str()}};
  if (opts.verbose)
    r.log.push_back("Λ' basis:\n" + lattice_rows(lemma_lattice(s)));
  r.elapsed_ms = millis_since(start);
  return r;
}

RunReport run_kummer_sweep(const RunOptions& opts) {
  const auto start = Clock::now();
  SweepResult s = sweep(opts.jobs);
  RunReport r;
  r.case_label = "kummer-sweep";
  r.set("kummer-paths-agree", s.path_disagreements == 0);
  r.set("kummer-basepoint", s.basepoint_failures == 0);
  r.set("kummer-monotonicity", s.monotonicity_failures == 0);
  if (!s.ok())
    r.failures.push_back("first failing mask " + hex_mask(s.first_failure));
  json dist = json::object();
  for (const auto& [order, count] : s.order_distribution)
    dist[std::to_string(order)] = count;
  r.extra["sweep"] = {{"subsets", s.subsets}, {"order_distribution", dist}, {"nested_pairs", s.monotonicity_pairs}};
  r.elapsed_ms = millis_since(start);
  return r;
}

json to_json(const RunReport& r, bool timing) {
  json j = json::object();
  j["case"] = r.case_label;
  if (r.pi1) {
    json factors = json::array();
    for (const Integer& d : r.pi1->invariant_factors())
      factors.push_back(to_long(d));
    j["pi1"] = {{"invariant_factors", factors}, {"free_rank", r.pi1->free_rank()}};
  } else {
    j["pi1"] = nullptr;
  }
  json census = json::object();
  if (r.census)
    for (const auto& [k, count] : *r.census)
      census["a" + std::to_string(k)] = count;
  j["census"] = census;
  json checks = json::object();
  json open = json::array();
  for (const auto& [name, status] : r.checks) {
    // The schema only knows pass/fail/skipped; violations are listed apart.
    checks[name] = status == CheckStatus::open_question_violation ? "fail" : to_string(status);
    if (status == CheckStatus::open_question_violation)
      open.push_back(name);
  }
  j["checks"] = checks;
  if (!open.empty())
    j["open_question_violations"] = open;
  j["elapsed_ms"] = timing ? r.elapsed_ms : 0;
  for (const auto& [key, value] : r.extra.items())
    j[key] = value;
  return j;
}

namespace {

std::string census_str(const std::map<unsigned, std::size_t>& a) {
  static const char* const sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  if (a.empty())
    return "smooth";
  std::string out;
  for (const auto& [k, count] : a) {
    if (!out.empty())
      out += ", ";
    out += "a";
    for (char c : std::to_string(k))
      out += sub[c - '0'];
    out += "=" + std::to_string(count);
  }
  return out;
}

} // namespace

std::string render_md(const RunReport& r) {
  std::ostringstream os;
  os << "## " << r.case_label << "\n\n";
  if (r.pi1)
    os << "- π1(X_reg): " << r.pi1->pretty() << "\n";
  if (r.census)
    os << "- singular points: " << census_str(*r.census) << "\n";
  for (const auto& [key, value] : r.extra.items()) {
    if (value.is_object()) {
      for (const auto& [k, v] : value.items())
        os << "- " << key << "." << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    } else {
      os << "- " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  os << "\n| check | status |\n|---|---|\n";
  for (const auto& [name, status] : r.checks)
    os << "| " << name << " | " << to_string(status) << " |\n";
  os << "\nelapsed: " << r.elapsed_ms << " ms\n";
  return os.str();
}

std::string render_tables_md(const std::vector<RunReport>& reports) {
  std::ostringstream os;
  os << "| case | π1(X_reg) | singular points | checks |\n|---|---|---|---|\n";
  for (const RunReport& r : reports) {
    std::string status = "pass";
    for (const auto& [name, s] : r.checks)
      if (s == CheckStatus::fail || s == CheckStatus::open_question_violation)
        status = (status == "pass" ? "FAIL: " : status + ", ") + name;
    os << "| " << r.case_label << " | " << (r.pi1 ? r.pi1->pretty() : "-") << " | "
       << (r.census ? census_str(*r.census) : "-") << " | " << status << " |\n";
  }
  return os.str();
}

} // namespace symorb
