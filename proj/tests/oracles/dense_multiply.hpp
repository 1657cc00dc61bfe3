#pragma once

// Dense exponent-array polynomial multiplication (test oracle).

#include <array>
#include <vector>

#include "annibounds/polynomial.hpp"

namespace oracle {

/// Coefficient table for polynomials in 3 variables with exponents < kSide.
template <int kSide> struct Dense3 {
  std::vector<annibounds::Scalar> c = std::vector<annibounds::Scalar>(kSide * kSide * kSide);
  annibounds::Scalar& at(int a, int b, int d) { return c[(a * kSide + b) * kSide + d]; }
  const annibounds::Scalar& at(int a, int b, int d) const { return c[(a * kSide + b) * kSide + d]; }
};

template <int kSide> Dense3<kSide> to_dense(const annibounds::Polynomial& f) {
  Dense3<kSide> out;
  for (const auto& t : f.terms()) out.at(t.mono.exp[0], t.mono.exp[1], t.mono.exp[2]) = t.coeff;
  return out;
}

template <int kSide> Dense3<kSide> convolve(const Dense3<kSide>& f, const Dense3<kSide>& g) {
  Dense3<kSide> out;
  for (int a = 0; a < kSide; ++a)
    for (int b = 0; b < kSide; ++b)
      for (int d = 0; d < kSide; ++d) {
        if (sgn(f.at(a, b, d)) == 0) continue;
        for (int x = 0; x + a < kSide; ++x)
          for (int y = 0; y + b < kSide; ++y)
            for (int z = 0; z + d < kSide; ++z)
              if (sgn(g.at(x, y, z)) != 0) out.at(a + x, b + y, d + z) += f.at(a, b, d) * g.at(x, y, z);
      }
  return out;
}

} // namespace oracle
