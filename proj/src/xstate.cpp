#include "triscord/xstate.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "triscord/errors.hpp"

namespace triscord {

namespace {

constexpr double kPatternTol = 1e-12;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void check_interval(std::vector<ConstraintViolation>& out, const char* name, double v, double lo,
                    double hi) {
  if (v < lo - kBoundaryTol) {
    out.push_back({name, v, lo, hi, lo - v});
  } else if (v > hi + kBoundaryTol) {
    out.push_back({name, v, lo, hi, v - hi});
  }
}

}  // namespace

std::string ConstraintViolation::describe() const {
  return parameter + " out of [" + fmt(lower) + ", " + fmt(upper) + "] (value " + fmt(value) +
         ", margin " + fmt(margin) + ")";
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].describe();
  }
  return os.str();
}

ValidationReport validate(const XParams& p) {
  ValidationReport r;
  if (!std::isfinite(p.a1) || !std::isfinite(p.c1) || !std::isfinite(p.c2)) {
    r.violations.push_back({"a1/c1/c2", NAN, -INFINITY, INFINITY, INFINITY});
    return r;
  }
  check_interval(r.violations, "a1", p.a1, -3.0, 1.0);
  // c1/c2 intervals depend on a1; an out-of-range a1 can make them empty, which
  // still reports correctly as a violation.
  check_interval(r.violations, "c1", p.c1, p.a1 - 1.0, 1.0 - p.a1);
  check_interval(r.violations, "c2", p.c2, -1.0 - p.a1 / 3.0, 1.0 + p.a1 / 3.0);
  return r;
}

void require_valid(const XParams& p) {
  const ValidationReport r = validate(p);
  if (!r.ok()) throw DomainError("invalid X-state parameters: " + r.describe());
}

DensityMatrix build_rho(const XParams& p) {
  require_valid(p);
  DensityMatrix rho(8);
  const double corner = (1.0 - p.a1) / 8.0;
  const double inner = (1.0 + p.a1 / 3.0) / 8.0;
  for (std::size_t k = 1; k < 7; ++k) {
    rho(k, k) = inner;
    rho(k, 7 - k) = p.c2 / 8.0;
  }
  rho(0, 0) = corner;
  rho(7, 7) = corner;
  rho(0, 7) = p.c1 / 8.0;
  rho(7, 0) = p.c1 / 8.0;
  return rho;
}

std::array<double, 8> rho_eigenvalues_closed(const XParams& p) {
  require_valid(p);
  const double l1 = (1.0 - p.a1 - p.c1) / 8.0;
  const double l2 = (1.0 - p.a1 + p.c1) / 8.0;
  const double lm = (3.0 + p.a1 - 3.0 * p.c2) / 24.0;
  const double lp = (3.0 + p.a1 + 3.0 * p.c2) / 24.0;
  return {l1, l2, lm, lm, lm, lp, lp, lp};
}

DensityMatrix ghz_component(const GhzLabel& label) {
  if (label.k > 7) throw InvalidInputError("ghz_component: k must be in [0,7]");
  const std::size_t k = label.k;
  const std::size_t kb = label.complement();
  const double s = label.sign == GhzSign::Plus ? 0.5 : -0.5;
  DensityMatrix m(8);
  m(k, k) = 0.5;
  m(kb, kb) = 0.5;
  m(k, kb) = s;
  m(kb, k) = s;
  return m;
}

XParams params_from_matrix(const DensityMatrix& rho) {
  if (rho.dim() != 8) throw InvalidInputError("params_from_matrix: expected an 8x8 matrix");

  const double corner = 0.5 * (rho(0, 0) + rho(7, 7));
  const double c1 = 0.5 * (rho(0, 7) + rho(7, 0));
  double inner = 0.0;
  double c2 = 0.0;
  for (std::size_t k = 1; k < 7; ++k) {
    inner += rho(k, k);
    c2 += rho(k, 7 - k);
  }
  inner /= 6.0;
  c2 /= 6.0;

  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      double expected = 0.0;
      if (i == j) {
        expected = (i == 0 || i == 7) ? corner : inner;
      } else if (i + j == 7) {
        expected = (i == 0 || i == 7) ? c1 : c2;
      }
      if (std::abs(rho(i, j) - expected) > kPatternTol) {
        throw NotSymmetricXStateError("params_from_matrix: entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") = " + fmt(rho(i, j)) +
                                          " breaks the symmetric X pattern (expected " +
                                          fmt(expected) + ")",
                                      i, j);
      }
    }
  }

  // Corners and inner diagonal are tied together by unit trace.
  const double a1 = 1.0 - 8.0 * corner;
  const double inner_expected = (1.0 + a1 / 3.0) / 8.0;
  if (std::abs(inner - inner_expected) > kPatternTol) {
    throw NotSymmetricXStateError("params_from_matrix: inner diagonal " + fmt(inner) +
                                      " inconsistent with unit trace (expected " +
                                      fmt(inner_expected) + ")",
                                  1, 1);
  }

  return {a1, 8.0 * c1, 8.0 * c2};
}

double ParamSampler::uniform(double lo, double hi) {
  // 53 random bits -> [0,1); independent of the standard library's distributions.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

XParams ParamSampler::next() {
  XParams p;
  p.a1 = uniform(-3.0, 1.0);
  p.c1 = uniform(p.a1 - 1.0, 1.0 - p.a1);
  p.c2 = uniform(-1.0 - p.a1 / 3.0, 1.0 + p.a1 / 3.0);
  return p;
}

XParams sample_params(std::uint64_t seed) { return ParamSampler(seed).next(); }

}  // namespace triscord
