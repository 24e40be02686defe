#include "phycnn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "phycnn/rng.hpp"

namespace phycnn {

namespace {

bool finite(double v) { return std::isfinite(v); }

constexpr double kPi = 3.14159265358979323846;
constexpr double kGravity = 9.80665;  // m/s^2 per g

}  // namespace

void SystemParams::validate() const {
  if (!(mass > 0.0) || !finite(mass)) throw DomainError("SystemParams: mass must be positive");
  if (!(damping >= 0.0) || !finite(damping))
    throw DomainError("SystemParams: damping must be non-negative");
  if (!(k1 > 0.0) || !finite(k1)) throw DomainError("SystemParams: k1 must be positive");
  if (!finite(k2) || !finite(gamma)) throw DomainError("SystemParams: non-finite coefficient");
}

void GroundMotion::validate() const {
  if (!(dt > 0.0) || !finite(dt)) throw DomainError("GroundMotion: dt must be positive");
  if (accel.size() < 2) throw DomainError("GroundMotion: need at least 2 samples");
  for (double v : accel)
    if (!finite(v)) throw DomainError("GroundMotion: non-finite sample");
}

double GroundMotion::pga_g() const {
  double peak = 0.0;
  for (double v : accel) peak = std::max(peak, std::abs(v));
  return peak / kGravity;
}

double Trajectory::peak_displacement() const {
  double peak = 0.0;
  for (double v : x) peak = std::max(peak, std::abs(v));
  return peak;
}

std::vector<std::string> output_labels(OutputSelection sel) {
  switch (sel) {
    case OutputSelection::kFullState:
      return {"x_m", "v_mps", "g_mps2"};
    case OutputSelection::kAcceleration:
      return {"a_mps2"};
    case OutputSelection::kDisplacement:
      return {"x_m"};
  }
  throw ConfigError("unknown output selection");
}

double restoring_force(const SystemParams& params, double x, double v) {
  params.validate();
  if (!finite(x) || !finite(v)) throw DomainError("restoring_force: non-finite state");
  return (params.damping * v + params.k1 * x + params.k2 * x * x * x) / params.mass;
}

Trajectory simulate_sdof(const SystemParams& params, const GroundMotion& gm, double x0, double v0,
                         double blow_up_bound) {
  params.validate();
  gm.validate();
  if (!finite(x0) || !finite(v0)) throw DomainError("simulate_sdof: non-finite initial state");

  const std::size_t n = gm.size();
  const double dt = gm.dt;
  const double m = params.mass, c = params.damping, k1 = params.k1, k2 = params.k2;
  const double gamma = params.gamma;

  auto deriv_v = [&](double x, double v, double ug) {
    return -(c * v + k1 * x + k2 * x * x * x) / m - gamma * ug;
  };

  Trajectory traj;
  traj.dt = dt;
  traj.x.resize(n);
  traj.v.resize(n);
  traj.a.resize(n);
  traj.g.resize(n);

  double x = x0, v = v0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(x) > blow_up_bound || std::abs(v) > blow_up_bound || !finite(x) || !finite(v))
      throw SimulationError("simulate_sdof: state blow-up", i);
    traj.x[i] = x;
    traj.v[i] = v;
    double g = (c * v + k1 * x + k2 * x * x * x) / m;
    traj.g[i] = g;
    traj.a[i] = -g - gamma * gm.accel[i];
    if (i + 1 == n) break;

    const double u0 = gm.accel[i];
    const double u1 = gm.accel[i + 1];
    const double um = 0.5 * (u0 + u1);

    const double k1x = v;
    const double k1v = deriv_v(x, v, u0);
    const double k2x = v + 0.5 * dt * k1v;
    const double k2v = deriv_v(x + 0.5 * dt * k1x, v + 0.5 * dt * k1v, um);
    const double k3x = v + 0.5 * dt * k2v;
    const double k3v = deriv_v(x + 0.5 * dt * k2x, v + 0.5 * dt * k2v, um);
    const double k4x = v + dt * k3v;
    const double k4v = deriv_v(x + dt * k3x, v + dt * k3v, u1);

    x += dt / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  return traj;
}

std::vector<double> infer_restoring(const std::vector<double>& accel, const GroundMotion& gm,
                                    double gamma) {
  if (accel.size() != gm.size())
    throw ShapeError("infer_restoring: length mismatch " + std::to_string(accel.size()) + " vs " +
                     std::to_string(gm.size()));
  std::vector<double> g(accel.size());
  for (std::size_t i = 0; i < accel.size(); ++i) g[i] = -accel[i] - gamma * gm.accel[i];
  return g;
}

GroundMotion synth_ground_motion(std::uint64_t seed, double duration, double dt, double corner_lo,
                                 double corner_hi, double amplitude, double taper_fraction) {
  if (!(duration > 0.0) || !(dt > 0.0)) throw DomainError("synth_ground_motion: bad duration/dt");
  const double nyquist = 0.5 / dt;
  if (!(corner_lo >= 0.0) || !(corner_hi > corner_lo) || corner_hi > nyquist)
    throw DomainError("synth_ground_motion: invalid frequency band");
  if (!(amplitude > 0.0)) throw DomainError("synth_ground_motion: amplitude must be positive");
  if (!(taper_fraction > 0.0) || taper_fraction > 0.5)
    throw DomainError("synth_ground_motion: taper fraction must be in (0, 0.5]");

  const std::size_t n = static_cast<std::size_t>(std::llround(duration / dt)) + 1;
  if (n < 8) throw DomainError("synth_ground_motion: record too short");

  Rng rng(seed);
  std::vector<double> noise(n);
  for (double& v : noise) v = rng.normal();

  // Band-limit in the frequency domain. n is small at desk scale, so a direct
  // transform is adequate.
  const std::size_t nbins = n / 2 + 1;
  std::vector<std::complex<double>> spec(nbins, 0.0);
  for (std::size_t kbin = 0; kbin < nbins; ++kbin) {
    const double f = static_cast<double>(kbin) / (static_cast<double>(n) * dt);
    if (f < corner_lo || f > corner_hi) continue;
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
      const double ang = -2.0 * kPi * static_cast<double>(kbin) * static_cast<double>(t) /
                         static_cast<double>(n);
      acc += noise[t] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    spec[kbin] = acc;
  }

  std::vector<double> s(n, 0.0);
  for (std::size_t t = 0; t < n; ++t) {
    double acc = spec[0].real();
    for (std::size_t kbin = 1; kbin < nbins; ++kbin) {
      if (spec[kbin] == std::complex<double>(0.0, 0.0)) continue;
      const double ang = 2.0 * kPi * static_cast<double>(kbin) * static_cast<double>(t) /
                         static_cast<double>(n);
      const bool self_conjugate = (n % 2 == 0) && (kbin == nbins - 1);
      const double w = self_conjugate ? 1.0 : 2.0;
      acc += w * (spec[kbin].real() * std::cos(ang) - spec[kbin].imag() * std::sin(ang));
    }
    s[t] = acc / static_cast<double>(n);
  }

  // Cosine (Tukey) taper at both ends.
  for (std::size_t t = 0; t < n; ++t) {
    const double u = static_cast<double>(t) / static_cast<double>(n - 1);
    double env = 1.0;
    if (u < taper_fraction)
      env = 0.5 * (1.0 + std::cos(kPi * (u / taper_fraction - 1.0)));
    else if (u > 1.0 - taper_fraction)
      env = 0.5 * (1.0 + std::cos(kPi * (u - 1.0 + taper_fraction) / taper_fraction));
    s[t] *= env;
  }

  double mean = 0.0;
  for (double v : s) mean += v;
  mean /= static_cast<double>(n);
  for (double& v : s) v -= mean;

  double peak = 0.0;
  for (double v : s) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) throw DomainError("synth_ground_motion: degenerate all-zero signal");
  const double scale = amplitude / peak;
  for (double& v : s) v *= scale;

  GroundMotion gm;
  gm.accel = std::move(s);
  gm.dt = dt;
  gm.label = "synth-" + std::to_string(seed);
  return gm;
}

Dataset generate_dataset(const SystemParams& params, const std::vector<GroundMotion>& motions,
                         OutputSelection selection) {
  if (motions.empty()) throw ShapeError("generate_dataset: empty motion list");
  const std::size_t n = motions.front().size();
  const double dt = motions.front().dt;
  for (const auto& gm : motions) {
    gm.validate();
    if (gm.size() != n || gm.dt != dt)
      throw ShapeError("generate_dataset: heterogeneous record lengths or sample steps");
  }

  const auto labels = output_labels(selection);
  const std::size_t f_out = labels.size();
  const std::size_t s_count = motions.size();

  Dataset ds;
  ds.dt = dt;
  ds.inputs = Tensor3(s_count, n, 1);
  ds.targets = Tensor3(s_count, n, f_out);
  ds.input_labels = {"ag_mps2"};
  ds.target_labels = labels;
  ds.input_max_abs.assign(1, 0.0);
  ds.target_max_abs.assign(f_out, 0.0);

  for (std::size_t s = 0; s < s_count; ++s) {
    const auto& gm = motions[s];
    ds.record_ids.push_back(gm.label.empty() ? "record-" + std::to_string(s) : gm.label);
    Trajectory traj = simulate_sdof(params, gm);
    for (std::size_t t = 0; t < n; ++t) {
      ds.inputs.at(s, t, 0) = gm.accel[t];
      ds.input_max_abs[0] = std::max(ds.input_max_abs[0], std::abs(gm.accel[t]));
      switch (selection) {
        case OutputSelection::kFullState:
          ds.targets.at(s, t, 0) = traj.x[t];
          ds.targets.at(s, t, 1) = traj.v[t];
          ds.targets.at(s, t, 2) = traj.g[t];
          break;
        case OutputSelection::kAcceleration:
          ds.targets.at(s, t, 0) = traj.a[t];
          break;
        case OutputSelection::kDisplacement:
          ds.targets.at(s, t, 0) = traj.x[t];
          break;
      }
      for (std::size_t f = 0; f < f_out; ++f)
        ds.target_max_abs[f] = std::max(ds.target_max_abs[f], std::abs(ds.targets.at(s, t, f)));
    }
  }
  return ds;
}

}  // namespace phycnn
