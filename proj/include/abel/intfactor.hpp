#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "abel/rational.hpp"

namespace abel {

// Complete factorization of |n| (n != 0) into prime powers.
// Trial division for small primes, then Miller-Rabin + Brent-Pollard rho.
std::map<Int, unsigned> factorize(const Int& n);

// All positive divisors of |n|, unsorted. Throws resource_error past cap.
std::vector<Int> positive_divisors(const Int& n, std::size_t cap = 200000);

// n = s^2 * m with m squarefree (sign of m = sign of n). n may be negative.
// Returns {s, m}, s > 0. Requires n != 0.
std::pair<Int, Int> squarefree_split(const Int& n);

} // namespace abel
