#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phycnn/tensor.hpp"

namespace phycnn {

/// Single-DOF nonlinear oscillator:  m*a + c*v + k1*x + k2*x^3 = -m*Gamma*ug.
struct SystemParams {
  double mass = 1.0;       // kg
  double damping = 1.0;    // N*s/m
  double k1 = 20.0;        // N/m
  double k2 = 200.0;       // N/m^3
  double gamma = 1.0;      // influence factor

  void validate() const;
};

/// Uniformly sampled ground-acceleration record.
struct GroundMotion {
  std::vector<double> accel;  // m/s^2
  double dt = 0.0;            // s
  std::string label;

  std::size_t size() const { return accel.size(); }
  void validate() const;
  /// Peak ground acceleration in g.
  double pga_g() const;
};

/// State histories of one simulated record. All series share one length;
/// a + g + Gamma*ug = 0 holds at every step by construction.
struct Trajectory {
  std::vector<double> x;  // relative displacement, m
  std::vector<double> v;  // relative velocity, m/s
  std::vector<double> a;  // relative acceleration, m/s^2
  std::vector<double> g;  // mass-normalized restoring force, m/s^2
  double dt = 0.0;

  std::size_t size() const { return x.size(); }
  double peak_displacement() const;
};

/// Which response features a dataset's target tensor carries.
enum class OutputSelection {
  kFullState,     // x, v, g          (F = 3)
  kAcceleration,  // relative accel   (F = 1)
  kDisplacement,  // x                (F = 1)
};

std::vector<std::string> output_labels(OutputSelection sel);

/// Network-ready input/target tensors plus per-feature metadata.
struct Dataset {
  Tensor3 inputs;   // [S x n x 1] ground accelerations
  Tensor3 targets;  // [S x n x F]
  std::vector<std::string> input_labels;
  std::vector<std::string> target_labels;
  std::vector<std::string> record_ids;
  std::vector<double> input_max_abs;   // per input feature, over all samples
  std::vector<double> target_max_abs;  // per target feature, over all samples
  double dt = 0.0;
};

/// Mass-normalized restoring force g = (c*v + k1*x + k2*x^3)/m.
double restoring_force(const SystemParams& params, double x, double v);

/// Integrate the oscillator under ground excitation with classical RK4 at the
/// record's sample step; excitation at half steps is linearly interpolated.
/// Output acceleration is closed algebraically as a = -g - Gamma*ug.
Trajectory simulate_sdof(const SystemParams& params, const GroundMotion& gm, double x0 = 0.0,
                         double v0 = 0.0, double blow_up_bound = 1e6);

/// Recover the restoring force from measured relative acceleration:
/// g = -accel - Gamma*ug.
std::vector<double> infer_restoring(const std::vector<double>& accel, const GroundMotion& gm,
                                    double gamma);

/// Band-limited filtered Gaussian noise with a cosine-taper envelope, zero
/// mean, peak absolute value scaled to `amplitude`. Deterministic per seed.
GroundMotion synth_ground_motion(std::uint64_t seed, double duration, double dt, double corner_lo,
                                 double corner_hi, double amplitude, double taper_fraction = 0.1);

/// Simulate every motion and pack inputs/targets into rank-3 tensors.
Dataset generate_dataset(const SystemParams& params, const std::vector<GroundMotion>& motions,
                         OutputSelection selection);

}  // namespace phycnn
