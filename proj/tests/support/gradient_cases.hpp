#pragma once

#include <cstdint>

#include "oracles.hpp"
#include "quakebrief/classify/linear.hpp"

namespace qbtest {

// Randomized 2-example finite-difference checks, one per trainable model.
// Each returns the worst relative error over sampled coordinates.

GradientCheck linear_gradient_case(qb::LinearKind kind, std::uint64_t seed);
GradientCheck cnn_gradient_case(std::uint64_t seed);
GradientCheck gan_discriminator_gradient_case(std::uint64_t seed);
GradientCheck gan_generator_gradient_case(std::uint64_t seed);

inline constexpr double kGradientTolerance = 1e-4;

}  // namespace qbtest
