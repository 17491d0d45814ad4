#pragma once

#include <random>
#include <string>
#include <vector>

#include "geomlab/registry.hpp"

namespace geomlab::testing {

inline Rational q(long p, long d = 1) { return Rational(p, d); }

inline RatVector vec(std::initializer_list<Rational> xs) { return RatVector(xs); }

// Small random rationals with numerators in [-5,5] and denominators in [1,4].
class RandomRationals {
 public:
  explicit RandomRationals(unsigned seed) : gen_(seed) {}

  Rational next() {
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    return Rational(num(gen_), den(gen_));
  }

  RatVector vector(std::size_t n) {
    RatVector v(n);
    for (auto& x : v) x = next();
    return v;
  }

  RatMatrix matrix(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = next();
    return m;
  }

  RatMatrix invertible(std::size_t n) {
    while (true) {
      auto m = matrix(n);
      if (!determinant(m).is_zero()) return m;
    }
  }

 private:
  std::mt19937 gen_;
};

inline std::vector<MetricLieAlgebra> all_fixtures() {
  std::vector<MetricLieAlgebra> out;
  for (const auto& name : builtin_names()) out.push_back(builtin(name).space);
  return out;
}

inline LoadedModel oscillator() { return builtin("oscillator"); }
inline LoadedModel oscillator_frame() { return builtin("oscillator-frame"); }
inline LoadedModel heisenberg() { return builtin("heisenberg3"); }

}  // namespace geomlab::testing
