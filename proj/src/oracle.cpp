#include "triscord/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>
#include <tuple>
#include <vector>

#include "triscord/entropy.hpp"
#include "triscord/errors.hpp"

namespace triscord {

namespace {

using cplx = std::complex<double>;

// Qubit basis parametrised by (theta, phi); index 0 is |x1>, 1 is |x2>.
std::array<Qubit, 2> qubit_basis(double theta, double phi) {
  const cplx phase = std::polar(1.0, phi);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {Qubit{cplx(c, 0.0), phase * s}, Qubit{cplx(s, 0.0), -phase * c}};
}

// Contract rho over qubit B with <b| . |b>; result indexed by 2*bit_A + bit_C.
simd::ProjectedBlock project_b(const DensityMatrix& rho, const Qubit& b) {
  simd::ProjectedBlock m;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t c = 0; c < 2; ++c) {
      for (std::size_t a2 = 0; a2 < 2; ++a2) {
        for (std::size_t c2 = 0; c2 < 2; ++c2) {
          cplx acc = 0.0;
          for (std::size_t bb = 0; bb < 2; ++bb) {
            for (std::size_t bb2 = 0; bb2 < 2; ++bb2) {
              acc += std::conj(b[bb]) * rho(4 * a + 2 * bb + c, 4 * a2 + 2 * bb2 + c2) * b[bb2];
            }
          }
          const std::size_t idx = (2 * a + c) * 4 + (2 * a2 + c2);
          m.re[idx] = acc.real();
          m.im[idx] = acc.imag();
        }
      }
    }
  }
  return m;
}

struct Candidate {
  double value = INFINITY;
  std::array<int, 4> key{};  // (i_theta1, i_theta2, i_phi1, i_phi2)
};

// Every grid point within kGridTieTolerance of the running minimum. Anything
// that can still tie with the final minimum survives the pruning.
struct NearMinimum {
  double min = INFINITY;
  std::vector<Candidate> points;

  void offer(const Candidate& c) {
    if (c.value > min + kGridTieTolerance) return;
    if (c.value < min) {
      min = c.value;
      std::erase_if(points, [&](const Candidate& p) { return p.value > min + kGridTieTolerance; });
    }
    points.push_back(c);
  }
};

double golden_section(const std::function<double(double)>& f, double lo, double hi, double& x_best) {
  constexpr double kInvPhi = 0.6180339887498949;
  constexpr double kTol = 1e-10;
  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && (b - a) > kTol; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  if (f1 <= f2) {
    x_best = x1;
    return f1;
  }
  x_best = x2;
  return f2;
}

}  // namespace

double tolerance(const GridSpec& spec) noexcept {
  return spec.refine ? kRefinedTolerance : kGridTolerance;
}

PvmPair pvm_pair(const MeasurementAngles& raw) {
  const MeasurementAngles r = raw.reduced();
  return {qubit_basis(r.theta1, r.phi1), qubit_basis(r.theta2, r.phi2), r};
}

std::array<MeasurementOutcome, 4> measure(const DensityMatrix& rho, const PvmPair& pvm) {
  if (rho.dim() != 8) throw InvalidInputError("measure: expected an 8x8 state");
  std::array<MeasurementOutcome, 4> out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      std::array<cplx, 4> v;  // index 2*bit_B + bit_C
      for (std::size_t b = 0; b < 2; ++b) {
        for (std::size_t c = 0; c < 2; ++c) v[2 * b + c] = pvm.basis_b[i][b] * pvm.basis_c[j][c];
      }
      std::array<std::array<cplx, 2>, 2> t{};
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t a2 = 0; a2 < 2; ++a2) {
          cplx acc = 0.0;
          for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t r2 = 0; r2 < 4; ++r2) {
              acc += std::conj(v[r]) * rho(4 * a + r, 4 * a2 + r2) * v[r2];
            }
          }
          t[a][a2] = acc;
        }
      }
      MeasurementOutcome& o = out[2 * i + j];
      o.p = t[0][0].real() + t[1][1].real();
      if (o.p < simd::kZeroProbability) {
        o.zero_probability = true;
        continue;
      }
      o.conditional = {t[0][0].real() / o.p, t[1][1].real() / o.p, t[0][1] / o.p};
    }
  }
  return out;
}

double measured_entropy(const DensityMatrix& rho, const PvmPair& pvm) {
  double s = 0.0;
  for (const MeasurementOutcome& o : measure(rho, pvm)) {
    if (o.zero_probability) continue;
    const auto [lo, hi] = hermitian2_eigenvalues(o.conditional);
    s -= o.p * (xlog2(std::clamp(lo, 0.0, 1.0)) + xlog2(std::clamp(hi, 0.0, 1.0)));
  }
  return s;
}

GridResult grid_minimize(const DensityMatrix& rho, const GridSpec& spec) {
  if (rho.dim() != 8) throw InvalidInputError("grid_minimize: expected an 8x8 state");
  if (spec.n_theta < 2 || spec.n_phi < 2) throw InvalidInputError("grid_minimize: grid needs >= 2 steps per axis");

  const simd::SimdLevel level = spec.simd.value_or(simd::default_simd_level());
  const simd::EntropyRowFn kernel = simd::kernel_for(level);
  const std::size_t nt = static_cast<std::size_t>(spec.n_theta);
  const std::size_t np = static_cast<std::size_t>(spec.n_phi);
  const double dtheta = kPi / static_cast<double>(nt);
  const double dphi = 2.0 * kPi / static_cast<double>(np);

  simd::CBasisTable table;
  for (auto* v : {&table.cos_theta, &table.sin_theta, &table.cos_phi, &table.sin_phi}) v->resize(nt * np);
  for (std::size_t it = 0; it < nt; ++it) {
    for (std::size_t ip = 0; ip < np; ++ip) {
      const std::size_t k = it * np + ip;
      table.cos_theta[k] = std::cos(it * dtheta);
      table.sin_theta[k] = std::sin(it * dtheta);
      table.cos_phi[k] = std::cos(ip * dphi);
      table.sin_phi[k] = std::sin(ip * dphi);
    }
  }

  const std::size_t n_b = nt * np;
  unsigned workers = spec.workers != 0 ? spec.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_b));
  std::vector<NearMinimum> partial(workers);

  auto sweep = [&](unsigned w) {
    std::vector<double> row(nt * np);
    NearMinimum& best = partial[w];
    const std::size_t begin = n_b * w / workers;
    const std::size_t end = n_b * (w + 1) / workers;
    for (std::size_t kb = begin; kb < end; ++kb) {
      const std::size_t it1 = kb / np;
      const std::size_t ip1 = kb % np;
      const auto basis = qubit_basis(it1 * dtheta, ip1 * dphi);
      kernel(project_b(rho, basis[0]), project_b(rho, basis[1]), table, row);
      for (std::size_t kc = 0; kc < row.size(); ++kc) {
        if (row[kc] > best.min + kGridTieTolerance) continue;
        best.offer({row[kc], {static_cast<int>(it1), static_cast<int>(kc / np), static_cast<int>(ip1),
                              static_cast<int>(kc % np)}});
      }
    }
  };

  if (workers == 1) {
    sweep(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(sweep, w);
  }

  // Smallest key among the points tied with the global minimum, independent of
  // how the grid was split between workers.
  double global_min = INFINITY;
  for (const NearMinimum& part : partial) global_min = std::min(global_min, part.min);
  Candidate best;
  best.key.fill(std::numeric_limits<int>::max());
  for (const NearMinimum& part : partial) {
    for (const Candidate& c : part.points) {
      if (c.value <= global_min + kGridTieTolerance && c.key < best.key) best = c;
    }
  }

  GridResult r;
  r.simd = kernel == &simd::entropy_row_scalar ? simd::SimdLevel::Scalar : level;
  r.evaluations = n_b * nt * np;
  r.grid_min = best.value;
  r.grid_argmin = {best.key[0] * dtheta, best.key[1] * dtheta, best.key[2] * dphi, best.key[3] * dphi};
  r.min = r.grid_min;
  r.argmin = r.grid_argmin;
  if (!spec.refine) return r;

  // Cyclic coordinate descent over (theta1, theta2, phiB - phiC, phiB + phiC).
  // The minima sit in valleys along the phase sum and difference, which raw
  // phiB/phiC steps only follow in a zigzag. Each coordinate is bracketed by
  // the extent of one grid cell around the current point.
  std::array<double, 4> x = {r.argmin.theta1, r.argmin.theta2, r.argmin.phi1 - r.argmin.phi2,
                             r.argmin.phi1 + r.argmin.phi2};
  const std::array<double, 4> step = {dtheta, dtheta, 2.0 * dphi, 2.0 * dphi};
  auto raw_of = [](const std::array<double, 4>& y) {
    return MeasurementAngles{y[0], y[1], 0.5 * (y[3] + y[2]), 0.5 * (y[3] - y[2])};
  };
  auto eval = [&](const std::array<double, 4>& y) {
    ++r.evaluations;
    return measured_entropy(rho, pvm_pair(raw_of(y)));
  };
  double fx = eval(x);
  for (int cycle = 0; cycle < spec.refine_cycles; ++cycle) {
    for (std::size_t d = 0; d < 4; ++d) {
      std::array<double, 4> y = x;
      auto along = [&](double t) {
        y[d] = t;
        return eval(y);
      };
      double t_best = x[d];
      const double f_best = golden_section(along, x[d] - step[d], x[d] + step[d], t_best);
      if (f_best < fx) {
        fx = f_best;
        x[d] = t_best;
      }
    }
  }
  if (fx < r.min) {
    r.min = fx;
    r.argmin = raw_of(x).reduced();
  }
  return r;
}

ValidationResult cross_validate(const XParams& p, const GridSpec& spec, const AnalyticCondEntropy& analytic) {
  const CondEntropyResult a = analytic(p);
  const GridResult g = grid_minimize(build_rho(p), spec);

  ValidationResult v;
  v.params = p;
  v.analytic = a.value;
  v.branch = a.branch;
  v.oracle = g.min;
  v.grid_oracle = g.grid_min;
  v.oracle_argmin = g.argmin;
  v.gap = v.oracle - v.analytic;
  v.grid_gap = v.grid_oracle - v.analytic;
  v.pass = std::abs(v.gap) <= tolerance(spec) && v.oracle >= v.analytic - kUndershootTolerance;
  return v;
}

}  // namespace triscord
