#ifndef SURFACE_CENSUS_SURFACE_HPP
#define SURFACE_CENSUS_SURFACE_HPP

namespace surface_census {

// Model parameters: n edges of n/k filled k-gons, identified in pairs.
struct SurfaceParams {
  int n = 0;
  int k = 0;
  int faces = 0;        // n/k
  int edges_after = 0;  // n/2
  // True iff 2*lcm(2,k) | n; then the glued permutation is even and its law
  // is supported on A_n rather than the odd coset.
  bool gamburd_regime = false;
};

struct SurfaceInvariants {
  int vertices = 0;
  int euler_characteristic = 0;
  int genus = 0;
};

// Requires k >= 3 and lcm(2,k) | n; throws InvalidParams otherwise.
SurfaceParams validate_params(int n, int k);

// chi = v - n/2 + n/k, genus = (2 - chi)/2, reading the pattern as a single
// connected surface. Throws InconsistentInvariants when chi is odd (impossible
// outright: chi has the parity of n) or exceeds 2 (the pattern glued into
// more than one surface, so no single genus exists).
SurfaceInvariants invariants_from_cycles(const SurfaceParams& params, int vertices);

}  // namespace surface_census

#endif
