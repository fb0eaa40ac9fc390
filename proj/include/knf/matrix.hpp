#pragma once

#include <cstddef>
#include <vector>

#include "knf/rational.hpp"

namespace knf {

using IntMatrix = std::vector<std::vector<int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix identity_matrix(std::size_t n);
RatMatrix to_rational(const IntMatrix& m);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& a);

/// Exact Gauss-Jordan inverse. Throws knf::Error if singular.
RatMatrix inverse(const RatMatrix& a);

/// Solves a·x = b for square nonsingular a.
std::vector<Rational> solve(const RatMatrix& a, const std::vector<Rational>& b);

}  // namespace knf
