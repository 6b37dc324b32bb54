#pragma once

#include <memory>

#include "depseq/rng.hpp"

namespace depseq {

/// Pluggable real-valued distribution used to draw structural counts.
class Sampler {
 public:
  virtual ~Sampler() = default;
  virtual double draw(Rng& rng) const = 0;
};

/// Skew-normal with the given shape (alpha), location and scale.
class SkewNormalSampler final : public Sampler {
 public:
  SkewNormalSampler(double shape, double location, double scale);
  double draw(Rng& rng) const override;

  double shape() const noexcept { return shape_; }
  double location() const noexcept { return location_; }
  double scale() const noexcept { return scale_; }

 private:
  double shape_;
  double location_;
  double scale_;
  double delta_;
};

class UniformSampler final : public Sampler {
 public:
  UniformSampler(double low, double high);
  double draw(Rng& rng) const override;

 private:
  double low_;
  double high_;
};

class NormalSampler final : public Sampler {
 public:
  NormalSampler(double mean, double stddev);
  double draw(Rng& rng) const override;

 private:
  double mean_;
  double stddev_;
};

/// Bounded integer recipe: min, max, skewness of the default skew-normal, or
/// a custom sampler that replaces it (skewness is then ignored).
struct SamplerSpec {
  int min = 1;
  int max = 1;
  double skewness = 0.0;
  std::shared_ptr<const Sampler> custom = nullptr;

  bool operator==(const SamplerSpec&) const = default;
};

/// The default sampler for a spec: location at the midpoint, scale = range/6
/// (1 for a degenerate range).
SkewNormalSampler default_sampler(const SamplerSpec& spec);

/// Draws one value, rounds half-to-even and clamps into [min, max].
int sample_count(const SamplerSpec& spec, Rng& rng);

/// Round-then-clamp step of sample_count, exposed for testing.
int round_and_clamp(double value, int min, int max);

}  // namespace depseq
