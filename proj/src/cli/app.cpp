#include "elastics/cli/app.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "elastics/parallel.hpp"
#include "elastics/verification.hpp"

#ifndef ELASTICS_VERSION
#define ELASTICS_VERSION "0.0.0"
#endif

namespace elastics::cli {

namespace {

constexpr double kPi = std::numbers::pi;
/// verify demands the rerun reproduce each stored residual this closely.
constexpr double kReproduceTol = 1e-12;

class IoError : public Error {
 public:
  using Error::Error;
};

// ---- formatting ----------------------------------------------------------

std::string number_text(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_cell(const json& v) {
  if (v.is_number_float()) return number_text(v.get<double>());
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

json table_json(const Table& t) {
  json records = json::array();
  for (const auto& row : t.rows) records.push_back(row);
  return {{"columns", t.columns}, {"records", std::move(records)}};
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

// NaN has no JSON spelling; keep it visible as null
json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

// ---- errors --------------------------------------------------------------

const char* error_name(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
  if (dynamic_cast<const NoSolution*>(&e)) return "NoSolution";
  if (dynamic_cast<const NotClosedForm*>(&e)) return "NotClosedForm";
  if (dynamic_cast<const CaseNotCovered*>(&e)) return "CaseNotCovered";
  if (dynamic_cast<const LambdaZeroExcluded*>(&e)) return "LambdaZeroExcluded";
  if (dynamic_cast<const IllConditioned*>(&e)) return "IllConditioned";
  if (dynamic_cast<const IncompatibleEndData*>(&e)) return "IncompatibleEndData";
  if (dynamic_cast<const MissingFreeParameter*>(&e)) return "MissingFreeParameter";
  if (dynamic_cast<const AxisSingularity*>(&e)) return "AxisSingularity";
  if (dynamic_cast<const NotAxisymmetric*>(&e)) return "NotAxisymmetric";
  if (dynamic_cast<const NonIntegerOrder*>(&e)) return "NonIntegerOrder";
  if (dynamic_cast<const DomainTooSmall*>(&e)) return "DomainTooSmall";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const OrderOverflow*>(&e)) return "OrderOverflow";
  if (dynamic_cast<const RangeError*>(&e)) return "RangeError";
  if (dynamic_cast<const KappaZero*>(&e)) return "KappaZero";
  if (dynamic_cast<const KappaZeroNotAllowed*>(&e)) return "KappaZeroNotAllowed";
  if (dynamic_cast<const TauZero*>(&e)) return "TauZero";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  if (dynamic_cast<const IoError*>(&e)) return "IoError";
  return "Error";
}

// ---- config helpers ------------------------------------------------------

json& object_at(json& root, const std::string& key, const std::string& origin) {
  json& node = root[key];
  if (node.is_null()) node = json::object();
  if (!node.is_object()) throw ConfigError(origin, 0, key, "expected a table");
  return node;
}

void expect_kind(const Reader& in, const std::string& kind, const std::string& command) {
  if (!in.has("problem")) return;
  const std::string got = problem_kind(in);
  if (got != kind) in.fail("problem", "'" + got + "' cannot be run by " + command + " (needs '" + kind + "')");
}

Format output_format(const Reader& in) {
  const std::string name = in.string("output.format", "both");
  try {
    return format_from_string(name);
  } catch (const InvalidArgument& err) {
    in.fail("output.format", err.what());
  }
}

verify::SampleSpec sample_spec(const Verification& v) {
  verify::SampleSpec s;
  s.count = v.points;
  s.seed = v.seed;
  s.tolerance = v.tolerance;
  return s;
}

json metadata(const std::string& command, const ConfigDoc& doc) {
  return {{"command", command},
          {"config", doc.data},
          {"library_version", library_version()},
          {"schema_version", kSchemaVersion}};
}

// ---- field grids ---------------------------------------------------------

using PointFn = std::function<std::vector<double>(double, double, double, double)>;

Table evaluate_grid(const GridSpec& g, std::vector<std::string> value_columns, const PointFn& f) {
  Table t;
  t.columns = {"r", "theta", "z", "t"};
  t.columns.insert(t.columns.end(), value_columns.begin(), value_columns.end());
  const auto rs = g.r.values(), ths = g.theta.values(), zs = g.z.values(), ts = g.t.values();
  t.rows.resize(g.size());
  parallel_for(g.size(), [&](std::size_t idx) {
    std::size_t rem = idx;
    const double tt = ts[rem % ts.size()];
    rem /= ts.size();
    const double z = zs[rem % zs.size()];
    rem /= zs.size();
    const double th = ths[rem % ths.size()];
    rem /= ths.size();
    const double r = rs[rem];
    std::vector<json> row{r, th, z, tt};
    for (double v : f(r, th, z, tt)) row.emplace_back(v);
    t.rows[idx] = std::move(row);
  });
  return t;
}

Table family_grid(const SolutionFamily& fam, const GridSpec& g) {
  std::vector<std::string> cols{"u_r", "u_theta", "u_z"};
  const bool axisym = fam.axisymmetric();
  if (axisym) {
    cols.insert(cols.end(), {"sigma_rr", "sigma_thth", "sigma_zz", "sigma_rz", "eps_rr",
                             "eps_thth", "eps_zz", "vol_strain"});
  }
  return evaluate_grid(g, cols, [&fam](double r, double th, double z, double t) {
    const FieldSample s = sample(fam, r, th, z, t);
    std::vector<double> v{s.u.u_r, s.u.u_theta, s.u.u_z};
    if (s.stress && s.strain) {
      v.insert(v.end(), {s.stress->sigma_rr, s.stress->sigma_thth, s.stress->sigma_zz,
                         s.stress->sigma_rz, s.strain->eps_rr, s.strain->eps_thth,
                         s.strain->eps_zz, s.strain->vol_strain});
    }
    return v;
  });
}

json axes_json(const GridSpec& g) {
  return {{"r", g.r.values()}, {"theta", g.theta.values()}, {"z", g.z.values()}, {"t", g.t.values()}};
}

void add_grid_files(RunResult& out, const Table& t, const GridSpec& g, Format fmt, const json& meta,
                    const std::string& stem = "field") {
  if (fmt != Format::Json) out.files.emplace_back(stem + ".csv", to_csv(t));
  if (fmt != Format::Csv) {
    json doc = table_json(t);
    doc["schema_version"] = kSchemaVersion;
    doc["axes"] = axes_json(g);
    doc["axis_order"] = {"r", "theta", "z", "t"};
    doc["metadata"] = meta;
    out.files.emplace_back(stem + ".json", doc.dump() + "\n");
  }
}

// Residual box: the grid's range where it has width, the fallback elsewhere.
verify::SampleDomain domain_from(const GridSpec& g, const verify::SampleDomain& fallback) {
  verify::SampleDomain d = fallback;
  if (g.r.hi > g.r.lo) {
    d.r_min = g.r.lo;
    d.r_max = g.r.hi;
  }
  if (g.z.hi > g.z.lo) {
    d.z_min = g.z.lo;
    d.z_max = g.z.hi;
  }
  if (g.t.hi > g.t.lo) {
    d.t_min = g.t.lo;
    d.t_max = g.t.hi;
  }
  return d;
}

// ---- reports -------------------------------------------------------------

json report_json(const verify::ResidualReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) {
    pts.push_back({{"r", p.point.r},
                   {"theta", p.point.theta},
                   {"z", p.point.z},
                   {"t", p.point.t},
                   {"residual", p.residual},
                   {"normalizer", p.normalizer},
                   {"relative", p.relative}});
  }
  json j{{"check", r.check},
         {"max_rel_residual", r.max_rel_residual},
         {"tolerance", r.tolerance},
         {"pass", r.pass},
         {"stencil", {{"hr", r.stencil.hr}, {"htheta", r.stencil.htheta}, {"hz", r.stencil.hz}, {"ht", r.stencil.ht}}},
         {"points", std::move(pts)}};
  if (r.check == "navier_lame") j["form_mismatch"] = r.form_mismatch;
  return j;
}

json bc_json(const verify::BcReport& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    items.push_back({{"name", i.name}, {"max_abs", i.max_abs}, {"scale", i.scale}, {"relative", i.relative}});
  }
  return {{"check", "boundary"},
          {"max_rel_residual", r.max_rel_residual},
          {"tolerance", r.tolerance},
          {"pass", r.pass},
          {"grid_points", r.grid_points},
          {"items", std::move(items)}};
}

struct Checks {
  json reports = json::object();
  std::vector<std::pair<std::string, double>> maxima;
  bool pass = true;

  void add(const std::string& name, const json& report, double max_rel, bool ok) {
    reports[name] = report;
    maxima.emplace_back(name, max_rel);
    pass = pass && ok;
  }
  void add(const verify::ResidualReport& r) { add(r.check, report_json(r), r.max_rel_residual, r.pass); }
  void add(const verify::BcReport& r) { add("boundary", bc_json(r), r.max_rel_residual, r.pass); }

  json summary() const {
    json s = json::object();
    for (const auto& [name, v] : maxima) s[name] = v;
    return s;
  }
  std::string text() const {
    std::string s;
    for (const auto& [name, v] : maxima) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s %.3g", name.c_str(), v);
      s += (s.empty() ? "" : ", ") + std::string(buf);
    }
    return s + (pass ? " (pass)" : " (FAIL)");
  }
};

void finish(RunResult& out, const Checks& checks, const json& meta) {
  out.files.emplace_back("residuals.json",
                         pretty({{"schema_version", kSchemaVersion}, {"checks", checks.reports}, {"metadata", meta}}));
  out.residuals = checks.maxima;
  out.checks_pass = checks.pass;
}

json family_json(const SolutionFamily& fam) {
  const auto& d = fam.diag();
  return {{"kappa", fam.mode().kappa()},
          {"tau", fam.mode().tau()},
          {"n", fam.mode().n()},
          {"branch", to_string(fam.branch())},
          {"kind1", to_string(d.kind1)},
          {"kind2", to_string(d.kind2)},
          {"alpha1", d.alpha1},
          {"alpha2", d.alpha2},
          {"gamma1", d.gamma1},
          {"gamma2", d.gamma2},
          {"axial", to_string(fam.axial().branch)},
          {"temporal", to_string(fam.temporal().branch)},
          {"finite_at_axis", fam.finite_at_axis()}};
}

// ---- commands ------------------------------------------------------------

RunResult solve_vibration(const ConfigDoc& doc) {
  const Reader in(doc);
  expect_kind(in, "vibration", "solve-vibration");
  const auto prob = vibration_problem(in);
  const auto opts = vibration_options(in);
  const Verification ver = verification(in);
  const Format fmt = output_format(in);
  const double period = 2 * kPi / prob.omega;
  const GridSpec g = grid(in, {{0, prob.R, 11}, {0, 0, 1}, {0, prob.L, 21}, {0, period, 9}});
  const double bc_tol = in.number("verify.bc_tolerance", verify::kBcTol);

  const vibration::VibrationSolution sol = vibration::solve(prob, opts);
  const Table field = family_grid(sol.family, g);
  Checks checks;
  checks.add(verify::nl_residual(sol, prob, sample_spec(ver)));
  checks.add(verify::bc_residual(sol, prob, bc_tol));

  const auto& cc = sol.case_class;
  json meta = metadata("solve-vibration", doc);
  meta["case"] = to_string(cc.tag);
  meta["coefficients"] = {{"a_bar_1", sol.a_bar_1}, {"a_bar_2", sol.a_bar_2},
                          {"C", sol.free_param_C ? json(*sol.free_param_C) : json(nullptr)}};
  json classification{{"case", to_string(cc.tag)},
                      {"wavenumber_sq", cc.wavenumber_sq},
                      {"threshold_p", cc.threshold_p},
                      {"threshold_s", cc.threshold_s},
                      {"ladder_valid", cc.ladder_valid},
                      {"warnings", cc.warnings}};
  if (cc.j1_normalized) classification["j1_normalized"] = *cc.j1_normalized;
  if (cc.j1_zero_index) classification["j1_zero_index"] = *cc.j1_zero_index;
  const auto& dg = sol.diagnostics;
  const json solution{
      {"schema_version", kSchemaVersion},
      {"case", to_string(cc.tag)},
      {"a_bar", {sol.a_bar_1, sol.a_bar_2}},
      {"free_param_C", sol.free_param_C ? json(*sol.free_param_C) : json(nullptr)},
      {"classification", classification},
      {"diagnostics",
       {{"determinant", num(dg.determinant)},
        {"condition_number", num(dg.condition_number)},
        {"residual_rr", num(dg.residual_rr)},
        {"residual_rz", num(dg.residual_rz)},
        {"closed_form_mismatch", num(dg.closed_form_mismatch)},
        {"direct_a_bar", {num(dg.direct_a_bar_1), num(dg.direct_a_bar_2)}}}},
      {"family", family_json(sol.family)},
      {"residuals", checks.summary()},
      {"metadata", meta}};

  RunResult out;
  out.command = "solve-vibration";
  out.files.emplace_back("solution.json", pretty(solution));
  add_grid_files(out, field, g, fmt, meta);
  finish(out, checks, meta);
  out.summary = std::string(to_string(cc.tag)) + " a_bar = [" + number_text(sol.a_bar_1) + ", " +
                number_text(sol.a_bar_2) + "]; " + checks.text();
  return out;
}

json solvability_json(const relaxation::SolvabilityReport& s) {
  return {{"solvable", s.solvable},   {"lhs", s.lhs},
          {"rhs", s.rhs},             {"relative_gap", s.relative_gap},
          {"on_surface", s.on_surface}, {"decay_bound_ok", s.decay_bound_ok},
          {"message", s.message}};
}

json compatibility_json(const relaxation::CompatibilityReport& c) {
  json items = json::array();
  for (const auto& i : c.items) {
    items.push_back({{"name", i.name}, {"expected", i.expected}, {"given", i.given},
                     {"rel_error", i.rel_error}, {"ok", i.ok}});
  }
  return {{"variant", to_string(c.variant)}, {"compatible", c.compatible}, {"items", std::move(items)}};
}

RunResult solve_relaxation(const ConfigDoc& doc) {
  const Reader in(doc);
  expect_kind(in, "relaxation", "solve-relaxation");
  const auto prob = relaxation_problem(in);
  const Verification ver = verification(in);
  const Format fmt = output_format(in);
  const GridSpec g = grid(in, {{0, prob.R, 11}, {0, 0, 1}, {0, prob.L, 21}, {0, 2 * prob.T, 9}});
  const double bc_tol = in.number("verify.bc_tolerance", verify::kBcTol);

  const relaxation::RelaxationSolution sol = relaxation::solve(prob);
  const Table field = family_grid(sol.family, g);
  Checks checks;
  checks.add(verify::nl_residual(sol, prob, sample_spec(ver)));
  checks.add(verify::bc_residual(sol, prob, bc_tol));

  json meta = metadata("solve-relaxation", doc);
  meta["variant"] = to_string(prob.variant);
  meta["coefficients"] = {{"amplitude_T", sol.amplitude_T}, {"amplitude_closed", sol.amplitude_closed}};
  const json solution{{"schema_version", kSchemaVersion},
                      {"solvability", solvability_json(sol.solvability)},
                      {"compatibility", compatibility_json(sol.compatibility)},
                      {"amplitude_T", sol.amplitude_T},
                      {"amplitude_closed", sol.amplitude_closed},
                      {"family", family_json(sol.family)},
                      {"residuals", checks.summary()},
                      {"metadata", meta}};

  RunResult out;
  out.command = "solve-relaxation";
  out.files.emplace_back("solution.json", pretty(solution));
  add_grid_files(out, field, g, fmt, meta);
  finish(out, checks, meta);
  out.summary = std::string("Solvable, ") + to_string(prob.variant) + " compatible; A(T) = " +
                number_text(sol.amplitude_T) + "; " + checks.text();
  return out;
}

RunResult eval_family(const ConfigDoc& doc) {
  const Reader in(doc);
  expect_kind(in, "family", "eval-family");
  const FamilyConfig fc = family(in);
  const Verification ver = verification(in);
  const Format fmt = output_format(in);
  const verify::SampleDomain box = verify::default_domain(fc.family, fc.extent);
  const GridSpec g = grid(in, {{0, fc.extent, 11}, {0, 0, 1}, {box.z_min, box.z_max, 11}, {box.t_min, box.t_max, 5}});

  const Table field = family_grid(fc.family, g);
  verify::SampleSpec spec = sample_spec(ver);
  spec.domain = domain_from(g, box);
  Checks checks;
  checks.add(verify::nl_residual(fc.family, spec, fc.extent));
  checks.add(verify::buchwald_system_residual(fc.family, spec, fc.extent));

  json meta = metadata("eval-family", doc);
  meta["family"] = family_json(fc.family);
  const json solution{{"schema_version", kSchemaVersion},
                      {"family", family_json(fc.family)},
                      {"records", field.rows.size()},
                      {"residuals", checks.summary()},
                      {"metadata", meta}};
  RunResult out;
  out.command = "eval-family";
  out.files.emplace_back("solution.json", pretty(solution));
  add_grid_files(out, field, g, fmt, meta);
  finish(out, checks, meta);
  out.summary = std::to_string(field.rows.size()) + " records; " + checks.text();
  return out;
}

std::string radial_text(const SovChi& chi) {
  if (std::holds_alternative<FrobeniusRadial>(chi.radial())) return "Frobenius";
  return to_string(std::get<RadialFactor>(chi.radial()).kind());
}

RunResult run_sov_chi(const ConfigDoc& doc) {
  const Reader in(doc);
  expect_kind(in, "sov-chi", "sov-chi");
  const SovChiConfig sc = sov_chi(in);
  const Verification ver = verification(in);
  const Format fmt = output_format(in);
  const double E = sc.extent;
  const GridSpec g = grid(in, {{0.1 * E, E, 10}, {0, 0, 1}, {0, E, 11}, {0, E, 5}});

  const Table field = evaluate_grid(g, {"chi"}, [&sc](double r, double th, double z, double t) {
    return std::vector<double>{sc.chi.value(r, th, z, t)};
  });
  verify::SampleSpec spec = sample_spec(ver);
  spec.domain = domain_from(g, {0.0, E, 0.0, E, 0.0, E});
  Checks checks;
  checks.add(verify::chi_residual(sc.chi, spec, E));

  json meta = metadata("sov-chi", doc);
  meta["periodic"] = sc.chi.periodic();
  meta["integer_order"] = sc.chi.integer_order() ? json(*sc.chi.integer_order()) : json(nullptr);
  meta["eta_r"] = sc.chi.eta_r();
  meta["radial"] = radial_text(sc.chi);
  meta["angular"] = to_string(sc.chi.angular().branch);
  meta["axial"] = to_string(sc.chi.axial().branch);
  meta["temporal"] = to_string(sc.chi.temporal().branch);
  if (!sc.chi.periodic()) meta["warnings"] = {"angular part is not 2 pi periodic in theta"};
  const json solution{{"schema_version", kSchemaVersion},
                      {"periodic", sc.chi.periodic()},
                      {"records", field.rows.size()},
                      {"residuals", checks.summary()},
                      {"metadata", meta}};
  RunResult out;
  out.command = "sov-chi";
  out.files.emplace_back("solution.json", pretty(solution));
  add_grid_files(out, field, g, fmt, meta);
  finish(out, checks, meta);
  out.summary = std::string(sc.chi.periodic() ? "periodic" : "non-periodic") + " chi, radial " +
                radial_text(sc.chi) + "; " + checks.text();
  return out;
}

// u_r peaks at z = 0 and u_z at K z = pi / 2; sin(w t) = 1 at w t = pi / 2.
RunResult sweep_vibration(const ConfigDoc& doc, const Reader& in) {
  const auto base = vibration_problem(in);
  const auto opts = vibration_options(in);
  const Format fmt = output_format(in);
  if (!in.has("sweep.omega")) in.fail("sweep.omega", "missing [lo, hi, count]");
  const Axis w = in.axis("sweep.omega", {});
  if (!(w.lo > 0.0)) in.fail("sweep.omega", "frequencies must be positive");
  const std::vector<double> omegas = w.values();

  Table t;
  t.columns = {"omega", "omega_sq", "case", "status", "a_bar_1", "a_bar_2", "amplitude_u_r", "amplitude_u_z"};
  t.rows.resize(omegas.size());
  parallel_for(omegas.size(), [&](std::size_t i) {
    vibration::VibrationProblem p = base;
    p.omega = omegas[i];
    const std::string tag = to_string(vibration::classify(p).tag);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<json> row{p.omega, p.omega * p.omega, tag};
    try {
      const auto sol = vibration::solve(p, opts);
      const double tpk = 0.5 * kPi / p.omega;
      const double ur = displacement(sol.family, p.R, 0.0, 0.0, tpk).u_r;
      const double uz = displacement(sol.family, p.R, 0.0, 0.5 * kPi / p.wavenumber(), tpk).u_z;
      row.insert(row.end(), {"ok", sol.a_bar_1, sol.a_bar_2, std::abs(ur), std::abs(uz)});
    } catch (const Error& err) {
      row.insert(row.end(), {error_name(err), nan, nan, nan, nan});
    }
    t.rows[i] = std::move(row);
  });

  json meta = metadata("sweep", doc);
  meta["sweep"] = "amplitude_vs_frequency";
  const double K2 = base.wavenumber() * base.wavenumber();
  meta["thresholds_omega_sq"] = {{"shear", K2 * base.material.mu() / base.material.rho()},
                                 {"longitudinal", K2 * base.material.p_modulus() / base.material.rho()}};
  RunResult out;
  out.command = "sweep";
  out.files.emplace_back("solution.json", pretty({{"schema_version", kSchemaVersion},
                                                  {"sweep", "amplitude_vs_frequency"},
                                                  {"rows", t.rows.size()},
                                                  {"metadata", meta}}));
  if (fmt != Format::Json) out.files.emplace_back("sweep.csv", to_csv(t));
  if (fmt != Format::Csv) {
    json j = table_json(t);
    j["schema_version"] = kSchemaVersion;
    j["metadata"] = meta;
    out.files.emplace_back("sweep.json", j.dump() + "\n");
  }
  out.summary = std::to_string(t.rows.size()) + " frequencies";
  return out;
}

// Each T gets the k that keeps it on the solvability surface and the end
// data of the closed form.
RunResult sweep_relaxation(const ConfigDoc& doc, const Reader& in) {
  const auto base = relaxation_problem(in);
  const Format fmt = output_format(in);
  if (!in.has("sweep.T")) in.fail("sweep.T", "missing [lo, hi, count]");
  const Axis ax = in.axis("sweep.T", {});
  if (!(ax.lo > 0.0)) in.fail("sweep.T", "relaxation times must be positive");
  const std::vector<double> Ts = ax.values();
  const double spread_tol = in.number("verify.sweep_tolerance", 1e-12);

  Table t;
  t.columns = {"T", "k", "amplitude_T", "amplitude_closed", "amplitude_over_T"};
  t.rows.resize(Ts.size());
  std::vector<double> ratio(Ts.size());
  parallel_for(Ts.size(), [&](std::size_t i) {
    relaxation::RelaxationProblem p = base;
    p.T = Ts[i];
    p.k = std::sqrt(p.material.rho() / p.material.p_modulus()) * p.c * std::log(p.b) * p.L / p.T;
    p.end_data = relaxation::expected_end_data(p);
    const auto sol = relaxation::solve(p);
    ratio[i] = sol.amplitude_T / p.T;
    t.rows[i] = {p.T, p.k, sol.amplitude_T, sol.amplitude_closed, ratio[i]};
  });
  double spread = 0.0;
  for (double r : ratio) spread = std::max(spread, std::abs(r - ratio[0]) / std::abs(ratio[0]));

  json meta = metadata("sweep", doc);
  meta["sweep"] = "amplitude_vs_relaxation_time";
  meta["end_data"] = "closed form at each point";
  RunResult out;
  out.command = "sweep";
  out.files.emplace_back("solution.json", pretty({{"schema_version", kSchemaVersion},
                                                  {"sweep", "amplitude_vs_relaxation_time"},
                                                  {"rows", t.rows.size()},
                                                  {"amplitude_over_T", ratio[0]},
                                                  {"amplitude_over_T_spread", spread},
                                                  {"tolerance", spread_tol},
                                                  {"metadata", meta}}));
  if (fmt != Format::Json) out.files.emplace_back("sweep.csv", to_csv(t));
  if (fmt != Format::Csv) {
    json j = table_json(t);
    j["schema_version"] = kSchemaVersion;
    j["metadata"] = meta;
    out.files.emplace_back("sweep.json", j.dump() + "\n");
  }
  out.residuals = {{"amplitude_over_T_spread", spread}};
  out.checks_pass = spread <= spread_tol;
  out.summary = std::to_string(t.rows.size()) + " relaxation times, A(T)/T = " + number_text(ratio[0]) +
                " (spread " + number_text(spread) + (out.checks_pass ? ", pass)" : ", FAIL)");
  return out;
}

RunResult run_sweep(const ConfigDoc& doc) {
  const Reader in(doc);
  const std::string kind = problem_kind(in);
  if (kind == "vibration") return sweep_vibration(doc, in);
  if (kind == "relaxation") return sweep_relaxation(doc, in);
  in.fail("problem", "sweep needs 'vibration' or 'relaxation', got '" + kind + "'");
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_error(const std::exception& e) {
  std::cerr << "elastics: " << error_name(e) << ": " << e.what() << "\n";
  if (const auto* ns = dynamic_cast<const NoSolution*>(&e)) {
    for (const auto& eq : ns->equations()) std::cerr << "  inconsistent: " << eq << "\n";
  }
  if (const auto* ie = dynamic_cast<const IncompatibleEndData*>(&e)) {
    for (const auto& v : ie->violated()) std::cerr << "  violated: " << v << "\n";
  }
  if (const auto* ic = dynamic_cast<const IllConditioned*>(&e)) {
    std::cerr << "  denominator: " << number_text(ic->denominator()) << "\n";
  }
}

}  // namespace

const char* library_version() { return ELASTICS_VERSION; }

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const MissingFreeParameter*>(&e) ||
      dynamic_cast<const json::exception*>(&e))
    return exit_code::config;
  if (dynamic_cast<const NoSolution*>(&e) || dynamic_cast<const NotClosedForm*>(&e) ||
      dynamic_cast<const CaseNotCovered*>(&e) || dynamic_cast<const LambdaZeroExcluded*>(&e))
    return exit_code::no_solution;
  if (dynamic_cast<const IllConditioned*>(&e)) return exit_code::ill_conditioned;
  if (dynamic_cast<const IncompatibleEndData*>(&e)) return exit_code::incompatible;
  if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const std::filesystem::filesystem_error*>(&e))
    return exit_code::io;
  if (dynamic_cast<const InvalidArgument*>(&e)) return exit_code::config;
  if (dynamic_cast<const Error*>(&e)) return exit_code::domain;
  return exit_code::io;
}

void apply_overrides(ConfigDoc& doc, const Overrides& o) {
  if (o.tolerance) object_at(doc.data, "verify", doc.origin)["tolerance"] = *o.tolerance;
  if (o.seed) object_at(doc.data, "verify", doc.origin)["seed"] = *o.seed;
  if (o.case4_C) object_at(doc.data, "case4", doc.origin)["C"] = *o.case4_C;
  if (o.format) object_at(doc.data, "output", doc.origin)["format"] = to_string(*o.format);
}

RunResult run(const std::string& command, const ConfigDoc& doc) {
  if (command == "solve-vibration") return solve_vibration(doc);
  if (command == "solve-relaxation") return solve_relaxation(doc);
  if (command == "eval-family") return eval_family(doc);
  if (command == "sov-chi") return run_sov_chi(doc);
  if (command == "sweep") return run_sweep(doc);
  throw InvalidArgument("unknown command '" + command + "'");
}

void write_files(const std::filesystem::path& dir, const RunResult& result) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, content] : result.files) {
    const auto target = dir / name;
    const auto tmp = dir / (name + ".tmp");
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw IoError("cannot write " + tmp.string());
      out << content;
      if (!out.flush()) throw IoError("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
  }
}

VerifyOutcome verify_artifact(const std::filesystem::path& artifact) {
  const std::string text = read_file(artifact);
  ConfigDoc stored = parse_json(text, artifact.string());
  const Reader art(stored);
  const std::string command = art.string("metadata.command");
  if (!art.find("metadata.config") || !art.find("metadata.config")->is_object())
    art.fail("metadata.config", "artifact carries no run config");

  ConfigDoc doc;
  doc.data = *art.find("metadata.config");
  doc.origin = artifact.string() + " metadata.config";
  const RunResult rerun = run(command, doc);

  const auto dir = artifact.parent_path().empty() ? std::filesystem::path(".") : artifact.parent_path();
  json files = json::array();
  bool identical = true, saw_artifact = false;
  for (const auto& [name, content] : rerun.files) {
    const auto p = dir / name;
    const bool present = std::filesystem::exists(p);
    const bool same = present && read_file(p) == content;
    if (present) identical = identical && same;
    if (p.filename() == artifact.filename()) saw_artifact = present;
    files.push_back({{"name", name}, {"present", present}, {"identical", same}});
  }
  if (!saw_artifact) identical = false;

  // stored residual: residuals.json first, then the summary in the artifact
  json stored_res;
  const auto res_path = dir / "residuals.json";
  if (std::filesystem::exists(res_path)) stored_res = json::parse(read_file(res_path));
  json residuals = json::array();
  bool reproduced = true;
  for (const auto& [name, value] : rerun.residuals) {
    const json* orig = nullptr;
    if (stored_res.is_object() && stored_res.contains("checks") && stored_res["checks"].contains(name))
      orig = &stored_res["checks"][name]["max_rel_residual"];
    if (!orig) orig = art.find("residuals." + name);
    if (!orig) orig = art.find(name);
    const double o = orig && orig->is_number() ? orig->get<double>() : std::numeric_limits<double>::quiet_NaN();
    const double diff = std::abs(o - value);
    const bool ok = diff <= kReproduceTol;
    reproduced = reproduced && ok;
    residuals.push_back(
        {{"check", name}, {"original", num(o)}, {"reproduced", value}, {"abs_diff", num(diff)}, {"ok", ok}});
  }

  VerifyOutcome out;
  out.pass = identical && reproduced && rerun.checks_pass;
  out.report = {{"schema_version", kSchemaVersion},
                {"artifact", artifact.string()},
                {"command", command},
                {"files", files},
                {"residuals", residuals},
                {"files_identical", identical},
                {"residuals_reproduced", reproduced},
                {"checks_pass", rerun.checks_pass},
                {"pass", out.pass},
                {"library_version", library_version()}};
  out.summary = std::string(out.pass ? "PASS" : "FAIL") + ": " + command + " rerun; files " +
                (identical ? "identical" : "differ") + ", residuals " + (reproduced ? "reproduced" : "differ") +
                ", checks " + (rerun.checks_pass ? "pass" : "fail");
  return out;
}

int main(int argc, char** argv) {
  CLI::App app{"Closed-form elastodynamic fields of a solid cylinder"};
  app.require_subcommand(1);
  app.set_version_flag("--version", library_version());

  std::string config_path;
  std::string out_dir;
  std::string format;
  Overrides ov;
  std::optional<double> tolerance, case4_C;
  std::optional<std::uint64_t> seed;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"solve-vibration", "Forced vibration boundary-value problem"},
      {"solve-relaxation", "Forced relaxation boundary-value problem"},
      {"eval-family", "Displacement grid of an arbitrary solution family"},
      {"sov-chi", "Samples of a separated chi"},
      {"sweep", "Amplitude against frequency or relaxation time"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "TOML or JSON run config")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "Output directory (default: output.dir or elastics_out)");
    sub->add_option("--format", format, "Grid format")->check(CLI::IsMember({"csv", "json", "both"}));
    sub->add_option("--tolerance", tolerance, "Residual tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--case4-C", case4_C, "Free parameter for Case 4(ii)");
    sub->add_option("--seed", seed, "Seed for the verification points");
  }
  CLI::App* ver = app.add_subcommand("verify", "Rerun a written artifact and compare");
  ver->add_option("--config", config_path, "solution.json (or any artifact with metadata)")
      ->required()
      ->check(CLI::ExistingFile);
  ver->add_option("--out", out_dir, "Where verify.json goes (default: next to the artifact)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_code::ok : exit_code::config;
  }

  try {
    if (ver->parsed()) {
      const VerifyOutcome o = verify_artifact(config_path);
      const std::filesystem::path dir =
          out_dir.empty() ? std::filesystem::path(config_path).parent_path() : std::filesystem::path(out_dir);
      RunResult rep;
      rep.files.emplace_back("verify.json", pretty(o.report));
      write_files(dir.empty() ? "." : dir, rep);
      std::cout << "verify: " << o.summary << "\n";
      return o.pass ? exit_code::ok : exit_code::verification;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    ConfigDoc doc = load_config(config_path);
    ov.tolerance = tolerance;
    ov.case4_C = case4_C;
    ov.seed = seed;
    if (!format.empty()) ov.format = format_from_string(format);
    apply_overrides(doc, ov);
    const RunResult result = run(command, doc);
    const std::filesystem::path dir =
        out_dir.empty() ? std::filesystem::path(Reader(doc).string("output.dir", "elastics_out")) : std::filesystem::path(out_dir);
    write_files(dir, result);
    std::cout << command << ": " << result.summary << "\n";
    for (const auto& f : result.files) std::cout << "  wrote " << (dir / f.first).string() << "\n";
    return result.checks_pass ? exit_code::ok : exit_code::verification;
  } catch (const std::exception& e) {
    print_error(e);
    return exit_code_for(e);
  }
}

}  // namespace elastics::cli
