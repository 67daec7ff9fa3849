#include "abel/poly.hpp"

namespace abel {

int compare_polys(const QPoly& a, const QPoly& b)
{
    if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size() ? -1 : 1;
    for (std::size_t i = a.coeffs().size(); i--;) {
        int c = QuadExt::cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c != 0) return c;
    }
    return 0;
}

int compare_polys(const Poly& a, const Poly& b)
{
    if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size() ? -1 : 1;
    for (std::size_t i = a.coeffs().size(); i--;) {
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i] ? -1 : 1;
    }
    return 0;
}

} // namespace abel
