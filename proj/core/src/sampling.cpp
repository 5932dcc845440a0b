#include "triform/sampling.hpp"

#include <algorithm>
#include <numbers>

namespace triform {

Triangle TriangleSampler::operator()(Rng& rng) const {
  std::uniform_real_distribution<double> coord(-extent, extent);
  for (;;) {
    const Triangle t({coord(rng), coord(rng)}, {coord(rng), coord(rng)}, {coord(rng), coord(rng)});
    if (is_degenerate(t)) continue;
    const auto a = interior_angles(t);
    if (*std::min_element(a.begin(), a.end()) >= min_angle) return t;
  }
}

Instance random_instance(Rng& rng, const TriangleSampler& sampler) {
  Instance inst;
  inst.robots = sampler(rng);
  inst.pattern = sampler(rng);
  return inst;
}

Triangle random_similar_copy(const Triangle& t, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 5);
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> log_scale(std::log(0.1), std::log(10.0));
  std::uniform_real_distribution<double> shift(-10.0, 10.0);

  Triangle out = t.permuted(Permutation3::all()[pick(rng)]);
  if (coin(rng)) out = out.mirrored();
  const double theta = angle(rng);
  const double k = std::exp(log_scale(rng));
  const Point offset{shift(rng), shift(rng)};
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (std::size_t i = 0; i < 3; ++i) {
    const Point p = out[i];
    out[i] = Point{k * (c * p.x - s * p.y), k * (s * p.x + c * p.y)} + offset;
  }
  return out;
}

}  // namespace triform
