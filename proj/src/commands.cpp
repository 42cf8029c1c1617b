#include "triscord/commands.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "triscord/entropy.hpp"

namespace triscord::cli {

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TRISCORD_SEED"); env != nullptr && *env != '\0') {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (errno != 0 || *end != '\0' || *env == '-') {
      throw std::invalid_argument(std::string("TRISCORD_SEED is not an unsigned integer: ") + env);
    }
    return v;
  }
  return kDefaultSeed;
}

std::optional<double> parse_real(std::string_view text) {
  const std::string s(text);
  if (s.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (errno != 0 || end != s.c_str() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.9g", v);
  return buf;
}

// ---- report ----

std::string report_json(const CorrelationReport& r) {
  nlohmann::ordered_json j;
  j["a1"] = r.params.a1;
  j["c1"] = r.params.c1;
  j["c2"] = r.params.c2;
  j["s_rho"] = r.s_rho;
  j["s_ab"] = r.s_ab;
  j["s_cond"] = r.s_cond;
  j["branch"] = to_string(r.branch);
  j["d3"] = r.d3;
  j["t3"] = r.t3;
  j["j3"] = r.j3;
  j["n3"] = r.n3;
  return j.dump(2);
}

std::string report_table(const CorrelationReport& r) {
  std::ostringstream os;
  char buf[96];
  auto row = [&](const char* name, double v) {
    std::snprintf(buf, sizeof buf, "%-8s = %.6f\n", name, v);
    os << buf;
  };
  row("a1", r.params.a1);
  row("c1", r.params.c1);
  row("c2", r.params.c2);
  row("S(rho)", r.s_rho);
  row("S(AB)", r.s_ab);
  row("S(A|BC)", r.s_cond);
  std::snprintf(buf, sizeof buf, "%-8s = %s\n", "branch", to_string(r.branch));
  os << buf;
  row("d3", r.d3);
  row("t3", r.t3);
  row("j3", r.j3);
  row("n3", r.n3);
  return os.str();
}

int cmd_report(const XParams& p, bool json, std::ostream& out, std::ostream& err) {
  const ValidationReport v = validate(p);
  if (!v.ok()) {
    err << "error: " << v.describe() << '\n';
    return kExitConstraintViolation;
  }
  const CorrelationReport r = report(p);
  out << (json ? report_json(r) + "\n" : report_table(r));
  return kExitOk;
}

// ---- sweep ----

std::optional<Slice> parse_slice(std::string_view name) {
  if (name == "c1_eq_c2") return Slice::C1EqC2;
  if (name == "a1_zero") return Slice::A1Zero;
  if (name == "c2_zero") return Slice::C2Zero;
  return std::nullopt;
}

std::optional<Quantity> parse_quantity(std::string_view name) {
  if (name == "d3") return Quantity::D3;
  if (name == "n3") return Quantity::N3;
  if (name == "t3") return Quantity::T3;
  if (name == "j3") return Quantity::J3;
  if (name == "s_cond") return Quantity::SCond;
  if (name == "branch") return Quantity::Branch;
  return std::nullopt;
}

const char* to_string(Slice s) noexcept {
  switch (s) {
    case Slice::C1EqC2: return "c1_eq_c2";
    case Slice::A1Zero: return "a1_zero";
    case Slice::C2Zero: return "c2_zero";
  }
  return "?";
}

const char* to_string(Quantity q) noexcept {
  switch (q) {
    case Quantity::D3: return "d3";
    case Quantity::N3: return "n3";
    case Quantity::T3: return "t3";
    case Quantity::J3: return "j3";
    case Quantity::SCond: return "s_cond";
    case Quantity::Branch: return "branch";
  }
  return "?";
}

SliceAxes slice_axes(Slice s) {
  switch (s) {
    // |c| <= min(1 - a1, 1 + a1/3) peaks at a1 = 0.
    case Slice::C1EqC2: return {"a1", "c", -3.0, 1.0, -1.0, 1.0};
    case Slice::A1Zero: return {"c1", "c2", -1.0, 1.0, -1.0, 1.0};
    case Slice::C2Zero: return {"a1", "c1", -3.0, 1.0, -4.0, 4.0};
  }
  throw std::logic_error("slice_axes: unknown slice");
}

XParams slice_point(Slice s, double x, double y) {
  switch (s) {
    case Slice::C1EqC2: return {x, y, y};
    case Slice::A1Zero: return {0.0, x, y};
    case Slice::C2Zero: return {x, y, 0.0};
  }
  throw std::logic_error("slice_point: unknown slice");
}

namespace {

double axis_value(double lo, double hi, int i, int n) {
  if (i == n - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

SweepSummary write_sweep(const SweepSpec& spec, std::ostream& csv) {
  if (spec.n < 2) throw std::invalid_argument("sweep: n must be >= 2");
  const SliceAxes ax = slice_axes(spec.slice);

  csv << ax.x_name << ',' << ax.y_name;
  for (Quantity q : spec.quantities) csv << ',' << to_string(q);
  csv << '\n';

  SweepSummary summary;
  for (int i = 0; i < spec.n; ++i) {
    const double x = axis_value(ax.x_lo, ax.x_hi, i, spec.n);
    for (int k = 0; k < spec.n; ++k) {
      const double y = axis_value(ax.y_lo, ax.y_hi, k, spec.n);
      const XParams p = slice_point(spec.slice, x, y);
      if (!validate(p).ok()) continue;

      const CorrelationReport r = report(p);
      ++summary.rows;
      if (r.d3 > summary.max_d3) {
        summary.max_d3 = r.d3;
        summary.argmax_x = x;
        summary.argmax_y = y;
      }

      csv << format_number(x) << ',' << format_number(y);
      for (Quantity q : spec.quantities) {
        csv << ',';
        switch (q) {
          case Quantity::D3: csv << format_number(r.d3); break;
          case Quantity::N3: csv << format_number(r.n3); break;
          case Quantity::T3: csv << format_number(r.t3); break;
          case Quantity::J3: csv << format_number(r.j3); break;
          case Quantity::SCond: csv << format_number(r.s_cond); break;
          case Quantity::Branch: csv << to_string(r.branch); break;
        }
      }
      csv << '\n';
    }
  }
  return summary;
}

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
  std::ofstream file(spec.output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open " << spec.output << " for writing\n";
    return kExitIoError;
  }
  const SweepSummary s = write_sweep(spec, file);
  file.flush();
  if (!file) {
    err << "error: write to " << spec.output << " failed\n";
    return kExitIoError;
  }
  const SliceAxes ax = slice_axes(spec.slice);
  out << "slice " << to_string(spec.slice) << ": " << s.rows << " rows -> " << spec.output << '\n';
  out << "max d3 = " << format_number(s.max_d3) << " at (" << ax.x_name << ", " << ax.y_name
      << ") = (" << format_number(s.argmax_x) << ", " << format_number(s.argmax_y) << ")\n";
  return kExitOk;
}

// ---- stats ----

double BranchStats::share_percent(Branch b) const noexcept {
  if (samples == 0) return 0.0;
  return 100.0 * static_cast<double>(counts[static_cast<std::size_t>(b)]) / static_cast<double>(samples);
}

BranchStats branch_stats(std::size_t samples, std::uint64_t seed) {
  BranchStats s;
  s.samples = samples;
  s.seed = seed;
  ParamSampler sampler(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    ++s.counts[static_cast<std::size_t>(conditional_entropy(sampler.next()).branch)];
  }
  return s;
}

int cmd_stats(std::size_t samples, std::uint64_t seed, std::ostream& out) {
  const BranchStats s = branch_stats(samples, seed);
  char buf[64];
  out << "samples " << s.samples << '\n' << "seed " << s.seed << '\n';
  for (Branch b : {Branch::S1, Branch::S2, Branch::S3}) {
    std::snprintf(buf, sizeof buf, "%s %6.2f%% (%zu)\n", to_string(b), s.share_percent(b),
                  s.counts[static_cast<std::size_t>(b)]);
    out << buf;
  }
  return kExitOk;
}

// ---- check ----

const std::vector<XParams>& benchmark_states() {
  static const std::vector<XParams> states = {
      {-3.0, 4.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 1.0, -1.0}, {0.0, 1.0, 1.0}, {0.0, 0.5, -0.5},
  };
  return states;
}

CheckSummary run_check(const CheckOptions& opt, const AnalyticCondEntropy& analytic) {
  GridSpec spec;
  spec.n_theta = opt.grid;
  spec.n_phi = opt.grid;
  spec.refine = opt.refine;

  std::vector<XParams> states = benchmark_states();
  ParamSampler sampler(opt.seed);
  for (std::size_t i = 0; i < opt.samples; ++i) states.push_back(sampler.next());

  CheckSummary s;
  s.results.reserve(states.size());
  for (const XParams& p : states) {
    s.results.push_back(cross_validate(p, spec, analytic));
    const ValidationResult& v = s.results.back();
    s.all_pass = s.all_pass && v.pass;
    if (std::abs(v.gap) > std::abs(s.results[s.worst].gap)) s.worst = s.results.size() - 1;
  }
  return s;
}

namespace {

std::string triple(const XParams& p) {
  return "(" + format_number(p.a1) + ", " + format_number(p.c1) + ", " + format_number(p.c2) + ")";
}

}  // namespace

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err,
              const AnalyticCondEntropy& analytic) {
  const CheckSummary s = run_check(opt, analytic);
  std::size_t failures = 0;
  for (const ValidationResult& v : s.results) {
    if (v.pass) continue;
    ++failures;
    err << "FAIL " << triple(v.params) << " analytic " << format_number(v.analytic) << " oracle "
        << format_number(v.oracle) << " gap " << format_number(v.gap) << " grid gap "
        << format_number(v.grid_gap) << " branch " << to_string(v.branch) << '\n';
  }
  const ValidationResult& w = s.results[s.worst];
  out << "checked " << s.results.size() << " states (" << benchmark_states().size() << " benchmarks + "
      << opt.samples << " sampled, seed " << opt.seed << ", grid " << opt.grid << "^4"
      << (opt.refine ? ", refined" : "") << ", kernel "
      << simd::to_string(simd::default_simd_level()) << ")\n";
  out << "worst gap " << format_number(w.gap) << " at " << triple(w.params) << '\n';
  out << (failures == 0 ? "PASS" : "FAIL") << " (" << failures << " failing)\n";
  return failures == 0 ? kExitOk : kExitValidationFailure;
}

}  // namespace triscord::cli
