#pragma once

#include <optional>
#include <vector>

#include "abel/invariant.hpp"
#include "abel/linalg.hpp"

namespace abel {

// Cofactor of an invariant curve: K(t,x) = quad*x^2 + lin*x.
// For 1 + p x = 0 this is (A, p'); for the curve x = 0 it is (A, B).
struct Cofactor {
    Poly quad;
    QPoly lin;
};

Cofactor cofactor(const AbelEquation& eq, const QPoly& curve);
Cofactor cofactor_x_zero(const AbelEquation& eq);

// f = x^alpha0 * prod (1 + p_i x)^alpha_i with alpha0 = -sum alpha_i and
// sum alpha_i * A/p_i == 0 as an exact polynomial identity (checked on
// construction by re-multiplying, not trusted from elimination).
class DarbouxIntegral {
  public:
    DarbouxIntegral(std::vector<QuadExt> alphas, std::vector<QPoly> curves, const AbelEquation& eq);

    const std::vector<QuadExt>& alphas() const { return alphas_; }
    const QuadExt& alpha0() const { return alpha0_; }
    const std::vector<QPoly>& curves() const { return curves_; }
    std::size_t support_size() const;

  private:
    std::vector<QuadExt> alphas_;
    QuadExt alpha0_;
    std::vector<QPoly> curves_;
};

// Basis of the exact nullspace of { r_i = A/p_i } in the monomial basis,
// via fraction-free elimination; empty when the cofactors are independent.
// Curves over Q(sqrt(D)) are handled by splitting each alpha into a
// rational pair (column doubling); more than one distinct radical among the
// curves is not representable and throws.
std::vector<DarbouxIntegral> darboux_exponents(const AbelEquation& eq, const std::vector<QPoly>& curves);

// True iff alpha0*K0 + sum alpha_i*K_i == 0 identically in (t, x).
bool verify_first_integral(const AbelEquation& eq, const DarbouxIntegral& integral);

// Theorem A bound: 2 when n is even or degB > (n-1)/2, else C(n,(n+1)/2)+1.
// Pass degB < 0 for the zero polynomial.
Int max_curve_bound(int n, int degB);

// Theorem C: more than (n+1)/2 curves forces a Darboux first integral.
// Returns true iff count <= (n+1)/2 or some integral exists; false would
// witness a bug.
bool theorem_c_check(const AbelEquation& eq, std::size_t curve_count, bool has_integral);

// Display choice: the integral of smallest support; ties broken by the
// lexicographically smallest integer-scaled alpha vector. Rational curve
// sets only (quad sets fall back to the first basis element).
std::optional<DarbouxIntegral> smallest_support_integral(const AbelEquation& eq,
                                                         const std::vector<QPoly>& curves);

} // namespace abel
