#include "abel/intfactor.hpp"

#include <algorithm>

#include "abel/errors.hpp"

namespace abel {

namespace {

Int pollard_brent(const Int& n)
{
    // Brent's cycle variant of Pollard rho. n odd composite, not a prime power
    // caller responsibility is only "composite"; we retry with a new offset
    // until a proper factor shows up.
    for (unsigned long c = 1;; ++c) {
        Int y = 2, m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int d = x - y;
                    if (sgn(d) < 0) d = -d;
                    q = q * d % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                Int d = x - ys;
                if (sgn(d) < 0) d = -d;
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
}

void factor_rec(Int n, std::map<Int, unsigned>& out)
{
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

std::map<Int, unsigned> factorize(const Int& n)
{
    if (sgn(n) == 0) throw input_error("factorize(0)");
    Int m = abs(n);
    std::map<Int, unsigned> out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out[Int(long(p))] += 1;
            m /= p;
        }
    }
    for (unsigned long d = 17; d <= 10000 && m > 1; d += 2) {
        if (Int(d) * d > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            out[Int(long(d))] += 1;
            m /= d;
        }
    }
    if (m > 1) factor_rec(m, out);
    return out;
}

std::vector<Int> positive_divisors(const Int& n, std::size_t cap)
{
    auto f = factorize(n);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : f) {
        std::size_t base = divs.size();
        if (base * (e + 1) > cap) throw resource_error("divisor enumeration cap exceeded");
        Int pe = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pe *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pe);
        }
    }
    return divs;
}

std::pair<Int, Int> squarefree_split(const Int& n)
{
    if (sgn(n) == 0) throw input_error("squarefree_split(0)");
    auto f = factorize(n);
    Int s = 1, m = sgn(n) < 0 ? -1 : 1;
    for (const auto& [p, e] : f) {
        for (unsigned k = 0; k < e / 2; ++k) s *= p;
        if (e % 2) m *= p;
    }
    return {s, m};
}

} // namespace abel
