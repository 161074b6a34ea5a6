#ifndef SURFACE_CENSUS_PERMUTATION_HPP
#define SURFACE_CENSUS_PERMUTATION_HPP

#include <compare>
#include <vector>

#include "surface_census/rng.hpp"

namespace surface_census {

// Permutation of {1..n} in one-line notation: image()[i-1] = pi(i).
// Immutable after construction; safe to share between threads.
class Permutation {
 public:
  // Validates that image is a bijection on {1..n}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  // Skips validation; caller guarantees a bijection. For hot sampler paths.
  static Permutation unchecked(std::vector<int> image);

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i - 1]; }
  const std::vector<int>& image() const { return image_; }

  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> image) : image_(std::move(image)) {}

  std::vector<int> image_;
};

// Cycle type: partition of n in descending order; count() = number of cycles.
struct CycleType {
  std::vector<int> parts;

  int count() const { return static_cast<int>(parts.size()); }
  int n() const;

  auto operator<=>(const CycleType&) const = default;
};

// The fixed permutation with cycles (1 2 .. k)(k+1 .. 2k)...; requires
// k >= 3 and k | n.
Permutation make_beta(int n, int k);

// Uniform fixed-point-free involution on {1..n}, n even. Sequentially pairs
// the lowest unpaired label with a uniform choice among the remaining ones,
// so all (n-1)!! matchings are equally likely.
Permutation sample_matching(int n, Rng& rng);

// Uniform element of S_n (Fisher-Yates).
Permutation random_permutation(int n, Rng& rng);

// i -> q(p(i)): first p, then q.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// by . p . by^{-1}
Permutation conjugate(const Permutation& p, const Permutation& by);

CycleType cycle_census(const Permutation& p);

// Cycle count without materializing the partition.
int cycle_count(const Permutation& p);

// (-1)^(n - cycle count); multiplicative under compose.
int sign(const Permutation& p);

}  // namespace surface_census

#endif
