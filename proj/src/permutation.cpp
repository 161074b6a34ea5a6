#include "surface_census/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "surface_census/errors.hpp"

namespace surface_census {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v])
      throw InvalidParams("permutation image is not a bijection on {1.." +
                          std::to_string(n) + "}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(Unchecked{}, std::move(image));
}

Permutation Permutation::unchecked(std::vector<int> image) {
  return Permutation(Unchecked{}, std::move(image));
}

int CycleType::n() const {
  int total = 0;
  for (int part : parts) total += part;
  return total;
}

Permutation make_beta(int n, int k) {
  if (k < 3)
    throw InvalidParams("make_beta: k must be at least 3, got " + std::to_string(k));
  if (n < 1 || n % k != 0)
    throw InvalidParams("make_beta: k = " + std::to_string(k) +
                        " must divide n = " + std::to_string(n));
  std::vector<int> image(n);
  for (int i = 1; i <= n; ++i) {
    image[i - 1] = (i % k == 0) ? i - k + 1 : i + 1;
  }
  return Permutation::unchecked(std::move(image));
}

Permutation sample_matching(int n, Rng& rng) {
  if (n < 2 || n % 2 != 0)
    throw InvalidParams("sample_matching: n must be even and positive, got " +
                        std::to_string(n));
  std::vector<int> image(n, 0);
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[pool[i]] = i;

  auto remove_at = [&](int index) {
    const int last = pool.back();
    pool[index] = last;
    pos[last] = index;
    pool.pop_back();
  };

  for (int low = 1; low <= n; ++low) {
    if (image[low - 1] != 0) continue;
    remove_at(pos[low]);
    const auto pick = static_cast<std::size_t>(rng.below(pool.size()));
    const int partner = pool[pick];
    remove_at(static_cast<int>(pick));
    image[low - 1] = partner;
    image[partner - 1] = low;
  }
  return Permutation::unchecked(std::move(image));
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
    std::swap(image[i], image[j]);
  }
  return Permutation::unchecked(std::move(image));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n())
    throw InvalidParams("compose: size mismatch, " + std::to_string(p.n()) +
                        " vs " + std::to_string(q.n()));
  const int n = p.n();
  std::vector<int> image(n);
  for (int i = 1; i <= n; ++i) image[i - 1] = q(p(i));
  return Permutation::unchecked(std::move(image));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> image(p.n());
  for (int i = 1; i <= p.n(); ++i) image[p(i) - 1] = i;
  return Permutation::unchecked(std::move(image));
}

Permutation conjugate(const Permutation& p, const Permutation& by) {
  if (p.n() != by.n()) throw InvalidParams("conjugate: size mismatch");
  std::vector<int> image(p.n());
  for (int i = 1; i <= p.n(); ++i) image[by(i) - 1] = by(p(i));
  return Permutation::unchecked(std::move(image));
}

CycleType cycle_census(const Permutation& p) {
  const int n = p.n();
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(n) + 1, 0);
  CycleType type;
  for (int i = 1; i <= n; ++i) {
    if (visited[i]) continue;
    int length = 0;
    for (int j = i; !visited[j]; j = p(j)) {
      visited[j] = 1;
      ++length;
    }
    type.parts.push_back(length);
  }
  std::sort(type.parts.begin(), type.parts.end(), std::greater<>());
  return type;
}

int cycle_count(const Permutation& p) {
  const int n = p.n();
  std::vector<std::uint8_t> visited(static_cast<std::size_t>(n) + 1, 0);
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (visited[i]) continue;
    ++count;
    for (int j = i; !visited[j]; j = p(j)) visited[j] = 1;
  }
  return count;
}

int sign(const Permutation& p) {
  return (p.n() - cycle_count(p)) % 2 == 0 ? 1 : -1;
}

}  // namespace surface_census
