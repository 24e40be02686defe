#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "phycnn/errors.hpp"

namespace phycnn {

/// Rank-3 array [samples x timesteps x features], row-major doubles.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t samples, std::size_t steps, std::size_t features)
      : samples_(samples), steps_(steps), features_(features),
        data_(samples * steps * features, 0.0) {}

  std::size_t samples() const { return samples_; }
  std::size_t steps() const { return steps_; }
  std::size_t features() const { return features_; }
  std::size_t size() const { return data_.size(); }

  double& at(std::size_t s, std::size_t t, std::size_t f) {
    return data_[(s * steps_ + t) * features_ + f];
  }
  double at(std::size_t s, std::size_t t, std::size_t f) const {
    return data_[(s * steps_ + t) * features_ + f];
  }

  /// Pointer to the contiguous feature row at (s, t).
  double* row(std::size_t s, std::size_t t) { return data_.data() + (s * steps_ + t) * features_; }
  const double* row(std::size_t s, std::size_t t) const {
    return data_.data() + (s * steps_ + t) * features_;
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Tensor3& other) const {
    return samples_ == other.samples_ && steps_ == other.steps_ && features_ == other.features_;
  }

  std::string shape_str() const {
    return "[" + std::to_string(samples_) + "," + std::to_string(steps_) + "," +
           std::to_string(features_) + "]";
  }

  /// Copy of one feature column of one sample as a flat sequence.
  std::vector<double> feature_series(std::size_t s, std::size_t f) const {
    std::vector<double> out(steps_);
    for (std::size_t t = 0; t < steps_; ++t) out[t] = at(s, t, f);
    return out;
  }

  bool all_finite() const;

 private:
  std::size_t samples_ = 0, steps_ = 0, features_ = 0;
  std::vector<double> data_;
};

inline void require_same_shape(const Tensor3& a, const Tensor3& b, const char* where) {
  if (!a.same_shape(b))
    throw ShapeError(std::string(where) + ": shape mismatch " + a.shape_str() + " vs " +
                     b.shape_str());
}

}  // namespace phycnn
