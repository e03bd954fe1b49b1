#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Core>

#include "gsv/norms.hpp"

namespace gsv {

// Stateless seed derivation for independent deterministic streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// Standard normal draw built from the engine's standardized bit output, so
// sequences are identical across standard library implementations.
double gaussian(std::mt19937_64& engine);

// Uniformly random direction on the euclidean sphere.
Eigen::VectorXd random_l2_direction(std::mt19937_64& engine, int dim);

// Random vector of unit `norm` (gaussian direction, rescaled).
Eigen::VectorXd random_unit_vector(std::mt19937_64& engine, const Norm& norm, int dim);

}  // namespace gsv
