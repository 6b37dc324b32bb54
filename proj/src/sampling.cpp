#include "depseq/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "depseq/error.hpp"

namespace depseq {
namespace {

double skew_delta(double shape) {
  if (std::isinf(shape)) return shape > 0 ? 1.0 : -1.0;
  return shape / std::sqrt(1.0 + shape * shape);
}

}  // namespace

SkewNormalSampler::SkewNormalSampler(double shape, double location, double scale)
    : shape_(shape), location_(location), scale_(scale), delta_(skew_delta(shape)) {
  if (std::isnan(shape)) throw InvalidSpec("skew-normal shape must not be NaN");
  if (!(scale > 0.0)) throw InvalidSpec("skew-normal scale must be positive");
}

double SkewNormalSampler::draw(Rng& rng) const {
  const double u0 = rng.standard_normal();
  const double u1 = rng.standard_normal();
  const double z = delta_ * std::abs(u0) + std::sqrt(1.0 - delta_ * delta_) * u1;
  return location_ + scale_ * z;
}

UniformSampler::UniformSampler(double low, double high) : low_(low), high_(high) {
  if (!(low <= high)) throw InvalidSpec("uniform sampler needs low <= high");
}

double UniformSampler::draw(Rng& rng) const {
  return low_ + (high_ - low_) * rng.uniform01();
}

NormalSampler::NormalSampler(double mean, double stddev) : mean_(mean), stddev_(stddev) {
  if (!(stddev > 0.0)) throw InvalidSpec("normal sampler needs a positive stddev");
}

double NormalSampler::draw(Rng& rng) const { return mean_ + stddev_ * rng.standard_normal(); }

SkewNormalSampler default_sampler(const SamplerSpec& spec) {
  const double location = 0.5 * (static_cast<double>(spec.min) + spec.max);
  const double scale = spec.min == spec.max ? 1.0 : (static_cast<double>(spec.max) - spec.min) / 6.0;
  return SkewNormalSampler(spec.skewness, location, scale);
}

int round_and_clamp(double value, int min, int max) {
  if (std::isnan(value)) throw InvalidSpec("sampler produced NaN");
  const double rounded = std::nearbyint(value);
  return static_cast<int>(std::clamp(rounded, static_cast<double>(min), static_cast<double>(max)));
}

int sample_count(const SamplerSpec& spec, Rng& rng) {
  if (spec.min > spec.max) {
    throw InvalidSpec("sampler min " + std::to_string(spec.min) + " exceeds max " +
                      std::to_string(spec.max));
  }
  const double value = spec.custom ? spec.custom->draw(rng) : default_sampler(spec).draw(rng);
  return round_and_clamp(value, spec.min, spec.max);
}

}  // namespace depseq
