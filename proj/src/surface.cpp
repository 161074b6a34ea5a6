#include "surface_census/surface.hpp"

#include <numeric>
#include <string>

#include "surface_census/errors.hpp"

namespace surface_census {

SurfaceParams validate_params(int n, int k) {
  if (k < 3)
    throw InvalidParams("k must be at least 3, got " + std::to_string(k));
  const int needed = std::lcm(2, k);
  if (n < needed || n % needed != 0)
    throw InvalidParams("n must be a positive multiple of lcm(2,k) = " +
                        std::to_string(needed) + ", got n = " + std::to_string(n));
  SurfaceParams params;
  params.n = n;
  params.k = k;
  params.faces = n / k;
  params.edges_after = n / 2;
  params.gamburd_regime = n % (2 * needed) == 0;
  return params;
}

SurfaceInvariants invariants_from_cycles(const SurfaceParams& params, int vertices) {
  if (vertices < 1)
    throw InvalidParams("vertex count must be positive, got " +
                        std::to_string(vertices));
  const int chi = vertices - params.edges_after + params.faces;
  if (chi % 2 != 0)
    throw InconsistentInvariants(
        "vertex count " + std::to_string(vertices) + " gives odd chi = " +
        std::to_string(chi) + ", impossible for any orientable glueing");
  if (chi > 2)
    throw InconsistentInvariants(
        "vertex count " + std::to_string(vertices) + " gives chi = " +
        std::to_string(chi) +
        " > 2: the pattern is disconnected and has no single genus");
  SurfaceInvariants inv;
  inv.vertices = vertices;
  inv.euler_characteristic = chi;
  inv.genus = (2 - chi) / 2;
  return inv;
}

}  // namespace surface_census
