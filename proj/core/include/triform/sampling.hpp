#pragma once

#include <cstdint>
#include <random>

#include "triform/geometry.hpp"

namespace triform {

using Rng = std::mt19937_64;

struct TriangleSampler {
  /// Vertices are drawn uniformly from [-extent, extent]^2.
  double extent = 10.0;
  /// Triangles with a smaller interior angle (radians) are redrawn.
  double min_angle = 0.02;

  Triangle operator()(Rng& rng) const;
};

struct Instance {
  Triangle robots;
  Triangle pattern;
};

Instance random_instance(Rng& rng, const TriangleSampler& sampler = {});

/// Random composition of relabelling, optional reflection, rotation,
/// uniform scaling in [0.1, 10] and translation.
Triangle random_similar_copy(const Triangle& t, Rng& rng);

}  // namespace triform
