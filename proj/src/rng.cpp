#include "gsv/rng.hpp"

#include <cmath>
#include <numbers>

namespace gsv {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  // splitmix64 finalizer over the combined words.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace {

double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace

double gaussian(std::mt19937_64& engine) {
  // Box-Muller; u1 shifted away from zero so the log is finite.
  const double u1 = 1.0 - uniform01(engine);
  const double u2 = uniform01(engine);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Eigen::VectorXd random_l2_direction(std::mt19937_64& engine, int dim) {
  Eigen::VectorXd v(dim);
  double nrm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i) = gaussian(engine);
    nrm = v.norm();
  } while (nrm < 1e-12);
  return v / nrm;
}

Eigen::VectorXd random_unit_vector(std::mt19937_64& engine, const Norm& norm, int dim) {
  Eigen::VectorXd v(dim);
  double nrm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v(i) = gaussian(engine);
    nrm = norm_eval(v, norm);
  } while (nrm < 1e-12);
  return v / nrm;
}

}  // namespace gsv
