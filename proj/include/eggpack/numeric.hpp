#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace eggpack {

/// x^n for non-negative integer n, by repeated squaring.
inline double ipow(double x, int n) {
  double r = 1.0;
  double base = x;
  for (int k = n; k > 0; k >>= 1) {
    if (k & 1) r *= base;
    base *= base;
  }
  return r;
}

struct QuadNode {
  double x;  // abscissa in [-1, 1]
  double w;  // weight
};

/// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
const std::vector<QuadNode>& gauss_legendre(int order);

/// Golden-section minimization of f on [lo, hi]; returns the abscissa of the
/// minimum. Assumes f is unimodal on the bracket.
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  int iters = 90);

/// Deterministic uniform sampler. Doubles are derived from the top 53 bits of
/// the mt19937_64 stream so sequences do not depend on the standard library's
/// distribution implementation.
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {
    // splitmix64 warm-up decorrelates small consecutive seeds
    for (int i = 0; i < 4; ++i) next();
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t state_;
};

}  // namespace eggpack
