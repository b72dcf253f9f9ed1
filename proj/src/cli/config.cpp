#include "elastics/cli/config.hpp"

#include <cmath>
#include <limits>

namespace elastics::cli {

const char* to_string(Format f) {
  switch (f) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::Both: return "both";
  }
  return "?";
}

Format format_from_string(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "both") return Format::Both;
  throw InvalidArgument("format must be csv, json or both (got '" + name + "')");
}

std::vector<double> Axis::values() const {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        count == 1 ? lo : (i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1));
  }
  return out;
}

std::size_t GridSpec::size() const {
  return static_cast<std::size_t>(r.count) * static_cast<std::size_t>(theta.count) *
         static_cast<std::size_t>(z.count) * static_cast<std::size_t>(t.count);
}

const json* Reader::find(const std::string& path) const {
  const json* node = &doc_.data;
  std::size_t start = 0;
  for (;;) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? dot : dot - start);
    if (!node->is_object()) return nullptr;
    auto it = node->find(key);
    if (it == node->end()) return nullptr;
    node = &*it;
    if (dot == std::string::npos) return node;
    start = dot + 1;
  }
}

void Reader::fail(const std::string& path, const std::string& message) const {
  throw ConfigError(doc_.origin, doc_.line_of(path), path, message);
}

double Reader::number(const std::string& path) const {
  const json* v = find(path);
  if (!v) fail(path, "missing required number");
  if (!v->is_number()) fail(path, "expected a number");
  const double x = v->get<double>();
  if (!std::isfinite(x)) fail(path, "must be finite");
  return x;
}

double Reader::number(const std::string& path, double fallback) const {
  return has(path) ? number(path) : fallback;
}

std::optional<double> Reader::optional_number(const std::string& path) const {
  if (!has(path)) return std::nullopt;
  return number(path);
}

int Reader::integer(const std::string& path) const {
  const json* v = find(path);
  if (!v) fail(path, "missing required integer");
  if (v->is_number_integer()) {
    const auto i = v->get<std::int64_t>();
    if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max())
      fail(path, "integer out of range");
    return static_cast<int>(i);
  }
  if (v->is_number_float()) {
    const double x = v->get<double>();
    if (x == std::floor(x) && std::abs(x) < 1e9) return static_cast<int>(x);
  }
  fail(path, "expected an integer");
}

int Reader::integer(const std::string& path, int fallback) const {
  return has(path) ? integer(path) : fallback;
}

bool Reader::boolean(const std::string& path, bool fallback) const {
  const json* v = find(path);
  if (!v) return fallback;
  if (!v->is_boolean()) fail(path, "expected true or false");
  return v->get<bool>();
}

std::string Reader::string(const std::string& path) const {
  const json* v = find(path);
  if (!v) fail(path, "missing required string");
  if (!v->is_string()) fail(path, "expected a string");
  return v->get<std::string>();
}

std::string Reader::string(const std::string& path, const std::string& fallback) const {
  return has(path) ? string(path) : fallback;
}

Axis Reader::axis(const std::string& path, const Axis& fallback) const {
  const json* v = find(path);
  if (!v) return fallback;
  if (!v->is_array() || v->size() != 3 || !(*v)[0].is_number() || !(*v)[1].is_number() ||
      !(*v)[2].is_number_integer())
    fail(path, "expected [lo, hi, count]");
  Axis a{(*v)[0].get<double>(), (*v)[1].get<double>(), (*v)[2].get<int>()};
  if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) fail(path, "bounds must be finite");
  if (a.count < 1) fail(path, "count must be at least 1");
  if (a.hi < a.lo) fail(path, "hi must not be below lo");
  return a;
}

std::string problem_kind(const Reader& in) { return in.string("problem"); }

Material material(const Reader& in) {
  const double lambda = in.number("material.lambda");
  const double mu = in.number("material.mu");
  const double rho = in.number("material.rho");
  try {
    return Material(lambda, mu, rho);
  } catch (const InvalidArgument& err) {
    in.fail("material", err.what());
  }
}

Verification verification(const Reader& in) {
  Verification v;
  v.tolerance = in.number("verify.tolerance", v.tolerance);
  if (!(v.tolerance > 0.0)) in.fail("verify.tolerance", "must be positive");
  if (in.has("verify.seed")) {
    const json* s = in.find("verify.seed");
    if (!s->is_number_integer() || s->get<std::int64_t>() < 0)
      in.fail("verify.seed", "expected a non-negative integer");
    v.seed = s->get<std::uint64_t>();
  }
  v.points = in.integer("verify.points", v.points);
  if (v.points < 1) in.fail("verify.points", "must be at least 1");
  return v;
}

namespace {

void positive(const Reader& in, const std::string& path, double v) {
  if (!(v > 0.0)) in.fail(path, "must be positive");
}

TermCoefficients term(const Reader& in, const std::string& table) {
  return {in.number(table + ".a", 0.0), in.number(table + ".b", 0.0),
          in.number(table + ".c", 0.0), in.number(table + ".d", 0.0)};
}

}  // namespace

vibration::VibrationProblem vibration_problem(const Reader& in) {
  vibration::VibrationProblem p{.material = material(in)};
  p.L = in.number("geometry.L");
  p.R = in.number("geometry.R");
  positive(in, "geometry.L", p.L);
  positive(in, "geometry.R", p.R);
  p.amplitude = in.number("excitation.amplitude");
  p.k = in.integer("excitation.k");
  p.omega = in.number("excitation.omega");
  p.force_free = in.boolean("excitation.force_free", false);
  try {
    p.validate();
  } catch (const InvalidArgument& err) {
    in.fail("excitation", err.what());
  }
  return p;
}

vibration::SolveOptions vibration_options(const Reader& in) {
  vibration::SolveOptions o;
  o.case4_C = in.optional_number("case4.C");
  o.allow_default_C = in.boolean("case4.allow_default_C", true);
  return o;
}

relaxation::RelaxationProblem relaxation_problem(const Reader& in) {
  relaxation::RelaxationProblem p{.material = material(in)};
  p.L = in.number("geometry.L");
  p.R = in.number("geometry.R");
  positive(in, "geometry.L", p.L);
  positive(in, "geometry.R", p.R);
  p.amplitude = in.number("excitation.amplitude");
  p.k = in.number("excitation.k");
  p.b = in.number("excitation.b");
  p.c = in.number("excitation.c");
  p.T = in.number("excitation.T");
  try {
    p.variant = relaxation::end_variant_from_string(in.string("ends.variant"));
  } catch (const InvalidArgument& err) {
    in.fail("ends.variant", err.what());
  }
  if (in.boolean("ends.closed_form", false)) {
    // end data taken from the closed form itself
    if (in.has("ends.u1") || in.has("ends.p1") || in.has("ends.p2") || in.has("ends.p3"))
      in.fail("ends.closed_form", "cannot be combined with explicit end data");
    p.end_data = relaxation::expected_end_data(p);
  } else {
    p.end_data = {in.optional_number("ends.u1"), in.optional_number("ends.p1"),
                  in.optional_number("ends.p2"), in.optional_number("ends.p3")};
  }
  try {
    p.validate();
  } catch (const InvalidArgument& err) {
    in.fail("excitation", err.what());
  }
  return p;
}

FamilyConfig family(const Reader& in) {
  const Material mat = material(in);
  const double kappa = in.number("family.kappa");
  const double tau = in.number("family.tau");
  const int n = in.integer("family.n", 0);
  if (n < 0) in.fail("family.n", "must be non-negative");
  FamilyCoefficients c;
  c.potentials.phi[0] = term(in, "family.phi1");
  c.potentials.phi[1] = term(in, "family.phi2");
  c.chi.term = term(in, "family.chi");
  c.chi.e = in.number("family.chi.e", 0.0);
  c.chi.f = in.number("family.chi.f", 0.0);
  c.chi.g = in.number("family.chi.g", 0.0);
  c.chi.h = in.number("family.chi.h", 0.0);
  c.e = in.number("family.e", 0.0);
  c.f = in.number("family.f", 0.0);
  c.g = in.number("family.g", 0.0);
  c.h = in.number("family.h", 0.0);
  const double extent = in.number("family.extent", 1.0);
  positive(in, "family.extent", extent);
  return {SolutionFamily(mat, ModeParams(kappa, tau, n), c), extent};
}

SovChiConfig sov_chi(const Reader& in) {
  const Material mat = material(in);
  const SovCoefficients c{in.number("sov_chi.a", 0.0), in.number("sov_chi.b", 0.0),
                          in.number("sov_chi.c", 0.0), in.number("sov_chi.d", 0.0),
                          in.number("sov_chi.e", 0.0), in.number("sov_chi.f", 0.0),
                          in.number("sov_chi.g", 0.0), in.number("sov_chi.h", 0.0)};
  const double extent = in.number("sov_chi.extent", 1.0);
  positive(in, "sov_chi.extent", extent);
  return {elastics::sov_chi(mat, in.number("sov_chi.eta_t"), in.number("sov_chi.eta_z"),
                            in.number("sov_chi.eta_theta"), c,
                            in.boolean("sov_chi.require_periodic", false)),
          extent};
}

GridSpec grid(const Reader& in, const GridSpec& defaults) {
  GridSpec g{in.axis("grid.r", defaults.r), in.axis("grid.theta", defaults.theta),
             in.axis("grid.z", defaults.z), in.axis("grid.t", defaults.t)};
  if (g.r.lo < 0.0) in.fail("grid.r", "radius must be non-negative");
  if (g.size() > 50'000'000) in.fail("grid", "more than 5e7 records");
  return g;
}

}  // namespace elastics::cli
