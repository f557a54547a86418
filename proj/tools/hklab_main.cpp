#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hklab/constructions.hpp"
#include "hklab/errors.hpp"
#include "hklab/formulas.hpp"
#include "hklab/frobenius.hpp"
#include "hklab/parallel.hpp"
#include "hklab/report.hpp"
#include "hklab/specfile.hpp"

using namespace hklab;

namespace {

struct OutputOptions {
  bool csv = false;
  bool json = false;
  bool timings = false;
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_flag("--csv", opts.csv, "emit the sample table as CSV");
  cmd->add_flag("--json", opts.json, "emit the full report as JSON");
  cmd->add_flag("--timings", opts.timings, "show per-sample wall clock (human format only)");
  cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
}

void emit(const Report& report, const OutputOptions& opts) {
  if (opts.csv && opts.json) throw Error(ErrorCode::BadInput, "choose one of --csv and --json");
  const std::string text = opts.csv    ? render_csv(report)
                           : opts.json ? render_json(report)
                                       : render_human(report);
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadInput, "cannot open output file '" + opts.out_path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadInput, "cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Polynomial> maximal_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    gens.push_back(Polynomial::variable(ring->context(), i));
  return gens;
}

// "m" names the irrelevant maximal ideal unless an ideal m over this ring is
// declared; anything else must be a declared ideal over the same ring.
std::vector<Polynomial> resolve_ideal(const SpecDeclarations& decls, const std::string& name,
                                      const std::string& ring_name, const RingPtr& ring) {
  if (name == "m" && !decls.has_name("m")) return maximal_ideal(ring);
  const std::string& owner = decls.ideal_ring(name);
  if (owner != ring_name)
    throw Error(ErrorCode::BadInput,
                "ideal '" + name + "' is declared over ring '" + owner + "', not '" +
                    ring_name + "'");
  return decls.find_ideal(name);
}

struct EstimateBundle {
  std::vector<HKSample> samples;
  HKEstimate estimate;
};

EstimateBundle estimate_ring(const RingPtr& ring, const std::vector<Polynomial>& ideal,
                             unsigned e_max, FitMethod fit, unsigned threads) {
  EstimateBundle b;
  b.samples = hk_function(ring, ideal, e_max, threads);
  b.estimate = hk_estimate(b.samples, fit);
  return b;
}

std::string ring_declaration_text(const std::string& name, const RingPtr& ring) {
  SpecDeclarations only;
  only.rings.emplace_back(name, ring);
  std::string text = pretty_print_spec(only);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

std::vector<std::string> construction_notes(const ConstructionReport& c,
                                            const std::string& result_name) {
  std::vector<std::string> notes;
  notes.push_back("kind: " + c.kind);
  notes.push_back("result: " + ring_declaration_text(result_name, c.result));
  std::string dims = "component dimensions:";
  for (int d : c.component_dimensions) dims += " " + std::to_string(d);
  notes.push_back(dims);
  for (const auto& [var, origin] : c.provenance) {
    if (origin.adjoined)
      notes.push_back(var + " <- adjoined");
    else
      notes.push_back(var + " <- component " + std::to_string(origin.component) + ", " +
                      origin.source);
  }
  if (c.zero_ideal_warning)
    notes.push_back("warning: duplication along the zero ideal; result is the input ring");
  return notes;
}

ReportProvenance make_provenance(const std::string& hash, const std::string& order,
                                 unsigned e_max, const std::string& method) {
  ReportProvenance p;
  p.input_hash = hash;
  p.order = order;
  p.e_max = e_max;
  p.method = method;
  return p;
}

struct SweepRange {
  std::string name;
  long lo = 0;
  long hi = 0;
};

SweepRange parse_sweep_range(const std::string& text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..");
  if (eq == std::string::npos || dots == std::string::npos || dots < eq)
    throw Error(ErrorCode::BadInput, "expected --param NAME=LO..HI, got '" + text + "'");
  SweepRange range;
  range.name = text.substr(0, eq);
  try {
    range.lo = std::stol(text.substr(eq + 1, dots - eq - 1));
    range.hi = std::stol(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadInput, "expected --param NAME=LO..HI, got '" + text + "'");
  }
  if (range.name.empty() || range.lo > range.hi)
    throw Error(ErrorCode::BadInput, "empty sweep range '" + text + "'");
  return range;
}

Rational parse_value_target(const std::string& against) {
  return Rational::from_string(against.substr(std::string("value:").size()));
}

int exit_code_for(const std::vector<FormulaVerdict>& verdicts) {
  for (const auto& v : verdicts)
    if (!v.pass) return 1;
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Hilbert-Kunz multiplicity toolkit"};
  app.require_subcommand(1);

  // Job identity: the mathematical inputs only.  Execution and rendering
  // flags must not perturb the report hash, or equal jobs would not produce
  // byte-identical reports.
  std::string job_line;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--threads" || arg == "--out") {
      ++i;
      continue;
    }
    if (arg.rfind("--threads=", 0) == 0 || arg.rfind("--out=", 0) == 0 || arg == "--csv" ||
        arg == "--json" || arg == "--timings")
      continue;
    if (!job_line.empty()) job_line += " ";
    job_line += arg;
  }

  unsigned threads = default_thread_count();
  app.add_option("--threads", threads, "worker pool size")
      ->check(CLI::PositiveNumber)
      ->envname("HKLAB_THREADS");

  // gb --spec FILE --ring R
  auto* gb_cmd = app.add_subcommand("gb", "reduced Groebner basis of a ring's defining ideal");
  std::string gb_spec, gb_ring;
  OutputOptions gb_out;
  gb_cmd->add_option("--spec", gb_spec, "declaration file")->required();
  gb_cmd->add_option("--ring", gb_ring, "ring name")->required();
  add_output_flags(gb_cmd, gb_out);

  // hk --spec FILE (--ring R | --module M) [--ideal m] [--emax E] [--fit F]
  auto* hk_cmd = app.add_subcommand("hk", "Frobenius sample table and multiplicity estimate");
  std::string hk_spec, hk_ring, hk_module, hk_ideal = "m", hk_fit = "two-point";
  unsigned hk_emax = 3;
  OutputOptions hk_out;
  hk_cmd->add_option("--spec", hk_spec, "declaration file")->required();
  hk_cmd->add_option("--ring", hk_ring, "ring name");
  hk_cmd->add_option("--module", hk_module, "module name (samples its colengths instead)");
  hk_cmd->add_option("--ideal", hk_ideal, "ideal name, or m for all variables");
  hk_cmd->add_option("--emax", hk_emax, "largest Frobenius exponent")->check(CLI::PositiveNumber);
  hk_cmd->add_option("--fit", hk_fit, "estimator: two-point or last");
  add_output_flags(hk_cmd, hk_out);

  // construct --spec FILE KIND NAMES...
  auto* con_cmd = app.add_subcommand("construct", "build a ring construction and print it");
  std::string con_spec, con_kind;
  std::vector<std::string> con_names;
  OutputOptions con_out;
  con_cmd->add_option("--spec", con_spec, "declaration file")->required();
  con_cmd->add_option("kind", con_kind, "fiber | multifiber | dup | ideal")->required();
  con_cmd->add_option("names", con_names, "construction arguments")->required();
  add_output_flags(con_cmd, con_out);

  // verify --spec FILE --against MODE [NAMES...] [--ring R --ideal m] [--emax E] [--tol Q]
  auto* ver_cmd = app.add_subcommand("verify", "compare an estimate against a formula or value");
  std::string ver_spec, ver_against, ver_ring, ver_ideal = "m", ver_fit = "two-point";
  std::vector<std::string> ver_names;
  std::string ver_tol = "1/20";
  unsigned ver_emax = 3;
  OutputOptions ver_out;
  ver_cmd->add_option("--spec", ver_spec, "declaration file")->required();
  ver_cmd->add_option("--against", ver_against, "fiber | dup | ideal | value:Q")->required();
  ver_cmd->add_option("names", ver_names, "construction arguments");
  ver_cmd->add_option("--ring", ver_ring, "ring name (value mode)");
  ver_cmd->add_option("--ideal", ver_ideal, "ideal name, or m for all variables");
  ver_cmd->add_option("--emax", ver_emax, "largest Frobenius exponent")->check(CLI::PositiveNumber);
  ver_cmd->add_option("--fit", ver_fit, "estimator: two-point or last");
  ver_cmd->add_option("--tol", ver_tol, "relative tolerance (rational)");
  add_output_flags(ver_cmd, ver_out);

  // bounds --case C --d D [case-specific numbers]
  auto* bnd_cmd = app.add_subcommand("bounds", "evaluate a multiplicity bound");
  std::string bnd_case;
  int bnd_d = 2, bnd_r = 2, bnd_t = 1;
  long bnd_lambda = 0, bnd_rank = 0;
  std::string bnd_ehkt = "1";
  bool bnd_strict = false;
  OutputOptions bnd_out;
  bnd_cmd->add_option("--case", bnd_case,
                      "ae | both-regular | one-nonregular | both-nonregular | strict-dims | "
                      "multifiber | idealization | idealization-rank | veronese")
      ->required();
  bnd_cmd->add_option("--d", bnd_d, "dimension")->required();
  bnd_cmd->add_option("--r", bnd_r, "number of components (multifiber) or degree (veronese)");
  bnd_cmd->add_option("--t", bnd_t, "number of non-regular components (multifiber)");
  bnd_cmd->add_option("--ehk-t", bnd_ehkt, "multiplicity of the common quotient (multifiber)");
  bnd_cmd->add_flag("--strict", bnd_strict, "strict-dimension case (multifiber)");
  bnd_cmd->add_option("--lambda", bnd_lambda, "length of the module (idealization)");
  bnd_cmd->add_option("--rank", bnd_rank, "rank of the module (idealization-rank)");
  add_output_flags(bnd_cmd, bnd_out);

  // wy --spec FILE --ring R [--d D] [--quadric-ring NAME] [--emax E] [--tol Q]
  auto* wy_cmd = app.add_subcommand("wy", "threshold check against the sharp lower bound series");
  std::string wy_spec, wy_ring, wy_ideal = "m", wy_quadric, wy_fit = "two-point";
  std::string wy_tol = "1/20";
  int wy_d = 0;
  unsigned wy_emax = 3;
  OutputOptions wy_out;
  wy_cmd->add_option("--spec", wy_spec, "declaration file")->required();
  wy_cmd->add_option("--ring", wy_ring, "ring name")->required();
  wy_cmd->add_option("--ideal", wy_ideal, "ideal name, or m for all variables");
  wy_cmd->add_option("--d", wy_d, "threshold dimension (default: ring dimension, at least 2)");
  wy_cmd->add_option("--quadric-ring", wy_quadric, "ring whose estimate must be dominated");
  wy_cmd->add_option("--emax", wy_emax, "largest Frobenius exponent")->check(CLI::PositiveNumber);
  wy_cmd->add_option("--fit", wy_fit, "estimator: two-point or last");
  wy_cmd->add_option("--tol", wy_tol, "relative shortfall tolerance (rational)");
  add_output_flags(wy_cmd, wy_out);

  // sweep --template FILE --param n=LO..HI [--ring R ...] [--against value:Q]
  auto* sw_cmd = app.add_subcommand("sweep", "run the estimator over a parameter grid");
  std::string sw_template, sw_param, sw_ring, sw_ideal = "m", sw_fit = "two-point", sw_against;
  std::string sw_tol = "1/20";
  unsigned sw_emax = 3;
  OutputOptions sw_out;
  sw_cmd->add_option("--template", sw_template, "declaration file with a free parameter")
      ->required();
  sw_cmd->add_option("--param", sw_param, "grid in the form NAME=LO..HI")->required();
  sw_cmd->add_option("--ring", sw_ring, "ring name (default: the only ring in the template)");
  sw_cmd->add_option("--ideal", sw_ideal, "ideal name, or m for all variables");
  sw_cmd->add_option("--emax", sw_emax, "largest Frobenius exponent")->check(CLI::PositiveNumber);
  sw_cmd->add_option("--fit", sw_fit, "estimator: two-point or last");
  sw_cmd->add_option("--against", sw_against, "value:Q to verify every grid point");
  sw_cmd->add_option("--tol", sw_tol, "relative tolerance (rational)");
  add_output_flags(sw_cmd, sw_out);

  for (auto* sub : {gb_cmd, hk_cmd, con_cmd, ver_cmd, bnd_cmd, wy_cmd, sw_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (gb_cmd->parsed()) {
    const std::string text = read_file(gb_spec);
    const auto decls = parse_spec(text);
    const RingPtr& ring = decls.find_ring(gb_ring);
    Report report;
    report.command = "gb";
    report.subject = gb_ring;
    report.provenance =
        make_provenance(input_hash(text + "\n" + job_line), ring->context()->order.name(), 0, "-");
    const GroebnerBasis& basis = ring->groebner();
    if (basis.is_unit_ideal()) {
      report.notes.push_back("unit ideal");
    } else {
      report.notes.push_back("basis (" + std::to_string(basis.elements.size()) + " elements):");
      for (const auto& g : basis.elements) report.notes.push_back("  " + g.str());
    }
    emit(report, gb_out);
    return 0;
  }

  if (hk_cmd->parsed()) {
    if (hk_ring.empty() == hk_module.empty())
      throw Error(ErrorCode::BadInput, "pass exactly one of --ring and --module");
    const std::string text = read_file(hk_spec);
    const auto decls = parse_spec(text);
    const FitMethod fit = fit_method_from_name(hk_fit);
    Report report;
    report.command = "hk";
    if (!hk_module.empty()) {
      const ModulePresentation& mod = decls.find_module(hk_module);
      const std::string& owner = decls.module_ring(hk_module);
      const auto ideal = resolve_ideal(decls, hk_ideal, owner, mod.ring());
      report.samples = hk_module_function(mod, ideal, hk_emax, threads);
      report.subject = hk_module;
      report.provenance = make_provenance(input_hash(text + "\n" + job_line),
                                          mod.ring()->context()->order.name(), hk_emax,
                                          fit_method_name(fit));
    } else {
      const RingPtr& ring = decls.find_ring(hk_ring);
      const auto ideal = resolve_ideal(decls, hk_ideal, hk_ring, ring);
      report.samples = hk_function(ring, ideal, hk_emax, threads);
      report.subject = hk_ring;
      report.provenance =
          make_provenance(input_hash(text + "\n" + job_line), ring->context()->order.name(),
                          hk_emax, fit_method_name(fit));
    }
    report.estimate = hk_estimate(report.samples, fit);
    report.dimension = report.estimate->dimension;
    report.show_timings = hk_out.timings;
    emit(report, hk_out);
    return 0;
  }

  if (con_cmd->parsed()) {
    const std::string text = read_file(con_spec);
    const auto decls = parse_spec(text);
    ConstructionReport c;
    std::string result_name;
    if (con_kind == "fiber" || con_kind == "multifiber") {
      const std::size_t need = con_kind == "fiber" ? 2 : 0;
      if (need != 0 && con_names.size() != need)
        throw Error(ErrorCode::BadInput, "fiber takes exactly two ring names");
      std::vector<RingPtr> factors;
      for (const auto& name : con_names) factors.push_back(decls.find_ring(name));
      c = multi_fiber_product_over_k(factors);
      result_name = "P";
    } else if (con_kind == "dup") {
      if (con_names.size() != 2)
        throw Error(ErrorCode::BadInput, "dup takes a ring name and an ideal name");
      const RingPtr& ring = decls.find_ring(con_names[0]);
      c = amalgamated_duplication(ring,
                                  resolve_ideal(decls, con_names[1], con_names[0], ring));
      result_name = "D";
    } else if (con_kind == "ideal") {
      if (con_names.size() != 2)
        throw Error(ErrorCode::BadInput, "ideal takes a ring name and a module name");
      const RingPtr& ring = decls.find_ring(con_names[0]);
      c = idealization(ring, decls.find_module(con_names[1]));
      result_name = "N";
    } else {
      throw Error(ErrorCode::BadInput,
                  "unknown construction '" + con_kind + "' (fiber, multifiber, dup, ideal)");
    }
    Report report;
    report.command = "construct";
    report.subject = con_kind;
    for (const auto& name : con_names) report.subject += " " + name;
    report.provenance = make_provenance(input_hash(text + "\n" + job_line),
                                        c.result->context()->order.name(), 0, "-");
    report.dimension = c.result->dimension();
    report.notes = construction_notes(c, result_name);
    emit(report, con_out);
    return 0;
  }

  if (ver_cmd->parsed()) {
    const std::string text = read_file(ver_spec);
    const auto decls = parse_spec(text);
    const FitMethod fit = fit_method_from_name(ver_fit);
    const Rational tol = Rational::from_string(ver_tol);
    Report report;
    report.command = "verify";
    report.show_timings = ver_out.timings;

    if (ver_against.rfind("value:", 0) == 0) {
      if (ver_ring.empty())
        throw Error(ErrorCode::BadInput, "--against value:Q needs --ring");
      const RingPtr& ring = decls.find_ring(ver_ring);
      const auto ideal = resolve_ideal(decls, ver_ideal, ver_ring, ring);
      auto bundle = estimate_ring(ring, ideal, ver_emax, fit, threads);
      report.subject = ver_ring;
      report.samples = std::move(bundle.samples);
      report.estimate = bundle.estimate;
      report.verdicts.push_back(verify(parse_value_target(ver_against), bundle.estimate, tol,
                                       "reference value comparison"));
      report.provenance =
          make_provenance(input_hash(text + "\n" + job_line), ring->context()->order.name(),
                          ver_emax, fit_method_name(fit));
    } else if (ver_against == "fiber") {
      if (ver_names.size() < 2)
        throw Error(ErrorCode::BadInput, "--against fiber takes at least two ring names");
      std::vector<RingPtr> factors;
      for (const auto& name : ver_names) factors.push_back(decls.find_ring(name));
      const auto c = multi_fiber_product_over_k(factors);
      std::vector<Rational> values;
      std::vector<int> dims;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto b = estimate_ring(factors[i], maximal_ideal(factors[i]), ver_emax, fit, threads);
        values.push_back(b.estimate.value);
        dims.push_back(b.estimate.dimension);
        report.notes.push_back("component " + ver_names[i] + ": estimate " +
                               b.estimate.value.str() + ", dimension " +
                               std::to_string(b.estimate.dimension));
      }
      const Rational predicted = multi_fiber_formula(values, dims, Rational(1), 0);
      auto bundle = estimate_ring(c.result, maximal_ideal(c.result), ver_emax, fit, threads);
      report.subject = "fiber product of";
      for (const auto& name : ver_names) report.subject += " " + name;
      report.samples = std::move(bundle.samples);
      report.estimate = bundle.estimate;
      report.verdicts.push_back(
          verify(predicted, bundle.estimate, tol, "fiber product formula"));
      report.provenance =
          make_provenance(input_hash(text + "\n" + job_line), c.result->context()->order.name(),
                          ver_emax, fit_method_name(fit));
    } else if (ver_against == "dup") {
      if (ver_names.size() != 2)
        throw Error(ErrorCode::BadInput, "--against dup takes a ring name and an ideal name");
      const RingPtr& ring = decls.find_ring(ver_names[0]);
      const auto ideal = resolve_ideal(decls, ver_names[1], ver_names[0], ring);
      const auto c = amalgamated_duplication(ring, ideal);
      auto base = estimate_ring(ring, maximal_ideal(ring), ver_emax, fit, threads);
      report.notes.push_back("component " + ver_names[0] + ": estimate " +
                             base.estimate.value.str() + ", dimension " +
                             std::to_string(base.estimate.dimension));
      std::vector<Polynomial> quotient_gens = ring->generators();
      quotient_gens.insert(quotient_gens.end(), ideal.begin(), ideal.end());
      const RingPtr quotient = RingPresentation::make(ring->context(), quotient_gens);
      const int dim_quotient = quotient->dimension();
      Rational ehk_quotient;
      if (dim_quotient == base.estimate.dimension) {
        auto qb = estimate_ring(quotient, maximal_ideal(quotient), ver_emax, fit, threads);
        ehk_quotient = qb.estimate.value;
        report.notes.push_back("quotient along the ideal: estimate " + ehk_quotient.str() +
                               ", dimension " + std::to_string(dim_quotient));
      }
      const Rational predicted = duplication_formula(
          base.estimate.value, base.estimate.dimension, ehk_quotient, dim_quotient);
      auto bundle = estimate_ring(c.result, maximal_ideal(c.result), ver_emax, fit, threads);
      report.subject = "duplication of " + ver_names[0] + " along " + ver_names[1];
      report.samples = std::move(bundle.samples);
      report.estimate = bundle.estimate;
      report.verdicts.push_back(verify(predicted, bundle.estimate, tol, "duplication formula"));
      report.provenance =
          make_provenance(input_hash(text + "\n" + job_line), c.result->context()->order.name(),
                          ver_emax, fit_method_name(fit));
    } else if (ver_against == "ideal") {
      if (ver_names.size() != 2)
        throw Error(ErrorCode::BadInput, "--against ideal takes a ring name and a module name");
      const RingPtr& ring = decls.find_ring(ver_names[0]);
      const ModulePresentation& mod = decls.find_module(ver_names[1]);
      const auto c = idealization(ring, mod);
      auto base = estimate_ring(ring, maximal_ideal(ring), ver_emax, fit, threads);
      auto mod_samples = hk_module_function(mod, maximal_ideal(ring), ver_emax, threads);
      const auto mod_estimate = hk_estimate(mod_samples, fit);
      report.notes.push_back("ring part: estimate " + base.estimate.value.str());
      report.notes.push_back("module part: estimate " + mod_estimate.value.str());
      const Rational predicted = idealization_formula(base.estimate.value, mod_estimate.value);
      auto bundle = estimate_ring(c.result, maximal_ideal(c.result), ver_emax, fit, threads);
      report.subject = "idealization of " + ver_names[1] + " over " + ver_names[0];
      report.samples = std::move(bundle.samples);
      report.estimate = bundle.estimate;
      report.verdicts.push_back(verify(predicted, bundle.estimate, tol, "idealization formula"));
      report.provenance =
          make_provenance(input_hash(text + "\n" + job_line), c.result->context()->order.name(),
                          ver_emax, fit_method_name(fit));
    } else {
      throw Error(ErrorCode::BadInput,
                  "unknown --against mode '" + ver_against + "' (fiber, dup, ideal, value:Q)");
    }
    report.dimension = report.estimate->dimension;
    emit(report, ver_out);
    return exit_code_for(report.verdicts);
  }

  if (bnd_cmd->parsed()) {
    Report report;
    report.command = "bounds";
    report.subject = bnd_case;
    report.provenance = make_provenance(input_hash(job_line), "-", 0, "-");
    report.dimension = bnd_d;
    Rational bound;
    if (bnd_case == "ae") {
      bound = aberbach_enescu_bound(bnd_d);
    } else if (bnd_case == "multifiber") {
      bound = multi_fiber_bound(bnd_r, bnd_t, bnd_d, Rational::from_string(bnd_ehkt),
                                bnd_strict ? MultiFiberBoundCase::Strict
                                           : MultiFiberBoundCase::EqualDimT);
    } else if (bnd_case == "idealization") {
      bound = idealization_bound(bnd_lambda, bnd_d);
    } else if (bnd_case == "idealization-rank") {
      bound = idealization_rank_bound(bnd_rank, bnd_d);
    } else if (bnd_case == "veronese") {
      bound = veronese_hk(bnd_r, bnd_d);
    } else {
      bound = fiber_bound(fiber_bound_case_from_name(bnd_case), bnd_d);
    }
    report.notes.push_back("case: " + bnd_case);
    report.notes.push_back("d: " + std::to_string(bnd_d));
    report.notes.push_back("bound: " + bound.str());
    emit(report, bnd_out);
    return 0;
  }

  if (wy_cmd->parsed()) {
    const std::string text = read_file(wy_spec);
    const auto decls = parse_spec(text);
    const FitMethod fit = fit_method_from_name(wy_fit);
    const Rational tol = Rational::from_string(wy_tol);
    const RingPtr& ring = decls.find_ring(wy_ring);
    const auto ideal = resolve_ideal(decls, wy_ideal, wy_ring, ring);
    auto bundle = estimate_ring(ring, ideal, wy_emax, fit, threads);
    const int d = wy_d > 0 ? wy_d : std::max(2, bundle.estimate.dimension);
    std::optional<HKEstimate> quadric;
    if (!wy_quadric.empty()) {
      const RingPtr& qring = decls.find_ring(wy_quadric);
      quadric = estimate_ring(qring, maximal_ideal(qring), wy_emax, fit, threads).estimate;
    }
    Report report;
    report.command = "wy";
    report.subject = wy_ring;
    report.provenance = make_provenance(input_hash(text + "\n" + job_line),
                                        ring->context()->order.name(), wy_emax,
                                        fit_method_name(fit));
    report.samples = std::move(bundle.samples);
    report.estimate = bundle.estimate;
    report.dimension = bundle.estimate.dimension;
    report.notes.push_back("threshold dimension: " + std::to_string(d));
    report.verdicts.push_back(wy_check(bundle.estimate, d, quadric, tol));
    report.show_timings = wy_out.timings;
    emit(report, wy_out);
    return exit_code_for(report.verdicts);
  }

  // sweep
  const std::string template_text = read_file(sw_template);
  const SweepRange range = parse_sweep_range(sw_param);
  const FitMethod fit = fit_method_from_name(sw_fit);
  const bool check_value = !sw_against.empty();
  if (check_value && sw_against.rfind("value:", 0) != 0)
    throw Error(ErrorCode::BadInput, "sweep --against supports only value:Q");
  const Rational target = check_value ? parse_value_target(sw_against) : Rational(0);
  const Rational tol = Rational::from_string(sw_tol);

  struct PointResult {
    std::vector<HKSample> samples;
    HKEstimate estimate;
    std::string label;
  };
  const std::size_t points = static_cast<std::size_t>(range.hi - range.lo + 1);
  std::vector<PointResult> results(points);
  parallel_for(points, threads, [&](std::size_t k) {
    const long value = range.lo + static_cast<long>(k);
    try {
      const auto decls = parse_spec(substitute_parameter(template_text, range.name, value));
      std::string ring_name = sw_ring;
      if (ring_name.empty()) {
        if (decls.rings.size() != 1)
          throw Error(ErrorCode::BadInput,
                      "template declares several rings; pass --ring");
        ring_name = decls.rings.front().first;
      }
      const RingPtr& ring = decls.find_ring(ring_name);
      const auto ideal = resolve_ideal(decls, sw_ideal, ring_name, ring);
      auto& slot = results[k];
      slot.samples = hk_function(ring, ideal, sw_emax, 1);
      slot.estimate = hk_estimate(slot.samples, fit);
      slot.label = range.name + " = " + std::to_string(value);
    } catch (const Error& e) {
      throw Error(e.code(),
                  range.name + " = " + std::to_string(value) + ": " + e.what());
    }
  });

  Report report;
  report.command = "sweep";
  report.subject = range.name + " = " + std::to_string(range.lo) + ".." +
                   std::to_string(range.hi);
  report.provenance = make_provenance(input_hash(template_text + "\n" + job_line), "grevlex",
                                      sw_emax, fit_method_name(fit));
  report.show_timings = sw_out.timings;
  for (auto& point : results) {
    report.notes.push_back(point.label + ": estimate " + point.estimate.value.str() + " (" +
                           fit_method_name(point.estimate.method) + ")");
    report.dimension = point.estimate.dimension;
    report.samples.insert(report.samples.end(), point.samples.begin(), point.samples.end());
    if (check_value)
      report.verdicts.push_back(
          verify(target, point.estimate, tol, point.label + " reference value comparison"));
  }
  emit(report, sw_out);
  return exit_code_for(report.verdicts);
}

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_resource_error(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
