#include "foliage/random_forms.hpp"

#include <random>

#include "foliage/assembly.hpp"

namespace foliage {

namespace {

// Uniform on [-1, 1) from raw engine bits; identical on every platform.
double uniform(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-52 - 1.0; }

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

BasicForm random_form(const FoliationModel& model, const RandomFormSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  BasicForm out(model.n(), model.dims());
  const auto modes = truncated_modes(model.dims(), spec.bandwidth);
  for (const CoframeWord& w : fiber_words(model.n())) {
    auto it = spec.bidegree_weights.find({w.holo_degree(), w.anti_degree()});
    const double weight = it == spec.bidegree_weights.end() ? 1.0 : it->second;
    for (const ModeVector& m : modes) {
      const double re = uniform(rng);
      const double im = uniform(rng);
      if (weight != 0.0) out.add(w, m, spec.amplitude * weight * Complex(re, im));
    }
  }
  if (spec.real) out = (out + out.conjugate()) * Complex(0.5);
  return out;
}

VectorField random_field(const FoliationModel& model, const RandomFormSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  VectorField v(model.n(), model.dims());
  const auto modes = truncated_modes(model.dims(), spec.bandwidth);
  for (int g = 0; g < 2 * model.n(); ++g) {
    FourierScalar f(model.dims());
    for (const ModeVector& m : modes) {
      const double re = uniform(rng);
      const double im = uniform(rng);
      f.add_term(m, spec.amplitude * Complex(re, im));
    }
    v.set_component(g, f);
  }
  if (spec.real) v = Complex(0.5) * (v + v.conjugate());
  return v;
}

FourierScalar random_real_scalar(int dims, std::uint64_t seed, int bandwidth, double amplitude) {
  std::mt19937_64 rng(seed);
  FourierScalar f(dims);
  for (const ModeVector& m : truncated_modes(dims, bandwidth)) {
    if (m == ModeVector{}) continue;
    const double re = uniform(rng);
    const double im = uniform(rng);
    f.add_term(m, amplitude * Complex(re, im));
  }
  return (f + f.conjugate()) * Complex(0.5);
}

}  // namespace foliage
