#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "foliage/foliation_model.hpp"

namespace foliage {

struct RandomFormSpec {
  std::uint64_t seed = 0;
  int bandwidth = 1;
  // Weight per bidegree (r,s); missing entries weigh 1, weight 0 drops the bidegree.
  std::map<std::pair<int, int>, double> bidegree_weights;
  double amplitude = 1.0;
  bool real = false;  // conjugate-symmetrize the result
};

BasicForm random_form(const FoliationModel& model, const RandomFormSpec& spec);
VectorField random_field(const FoliationModel& model, const RandomFormSpec& spec);
// Real trigonometric polynomial with zero mean, for leafwise deformations.
FourierScalar random_real_scalar(int dims, std::uint64_t seed, int bandwidth, double amplitude);

// Stable seed mixing (splitmix64) so derived streams do not depend on scheduling.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace foliage
