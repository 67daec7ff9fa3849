#include "abel/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace abel {

namespace {

struct IntMatrix {
    std::vector<std::vector<Int>> a;
    std::size_t rows() const { return a.size(); }
    std::size_t cols() const { return a.empty() ? 0 : a[0].size(); }
};

IntMatrix clear_denominators(const QMatrix& m)
{
    IntMatrix out;
    out.a.reserve(m.size());
    for (const auto& row : m) {
        Int lcm = 1;
        for (const auto& x : row) {
            Int d = x.den(), g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
            lcm = lcm / g * d;
        }
        std::vector<Int> r;
        r.reserve(row.size());
        for (const auto& x : row) r.push_back(x.num() * (lcm / x.den()));
        out.a.push_back(std::move(r));
    }
    return out;
}

// Bareiss forward elimination with column pivot search. Returns pivot
// columns (in order) and leaves `m` in echelon form; `det_sign` tracks row
// swaps for determinant use.
std::vector<std::size_t> bareiss(IntMatrix& m, int& det_sign)
{
    std::vector<std::size_t> pivots;
    det_sign = 1;
    if (m.rows() == 0) return pivots;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && sgn(m.a[pr][c]) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r) {
            std::swap(m.a[pr], m.a[r]);
            det_sign = -det_sign;
        }
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                Int num = m.a[i][j] * m.a[r][c] - m.a[i][c] * m.a[r][j];
                // Bareiss: division by the previous pivot is exact
                assert(prev == 1 || mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()));
                m.a[i][j] = num / prev;
            }
            m.a[i][c] = 0;
        }
        prev = m.a[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t matrix_rank(QMatrix m)
{
    IntMatrix im = clear_denominators(m);
    int sign = 0;
    return bareiss(im, sign).size();
}

Rational matrix_det(QMatrix m)
{
    if (m.empty()) return Rational(1);
    assert(m.size() == m[0].size());
    // scale rows to integers, remember the scaling
    Rational scale(1);
    IntMatrix im;
    im.a.reserve(m.size());
    for (const auto& row : m) {
        Int lcm = 1;
        for (const auto& x : row) {
            Int d = x.den(), g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
            lcm = lcm / g * d;
        }
        scale *= Rational(Int(1), lcm);
        std::vector<Int> r;
        for (const auto& x : row) r.push_back(x.num() * (lcm / x.den()));
        im.a.push_back(std::move(r));
    }
    int sign = 1;
    auto pivots = bareiss(im, sign);
    if (pivots.size() < m.size()) return Rational(0);
    // after full-rank Bareiss the last pivot is the determinant of the
    // integer matrix
    Int det = im.a[m.size() - 1][pivots.back()];
    return Rational(det) * scale * Rational(long(sign));
}

std::vector<std::vector<Rational>> left_nullspace(const QMatrix& rows)
{
    // transpose, then kernel of the resulting column system
    if (rows.empty()) return {};
    std::size_t n = rows.size(), cols = rows[0].size();
    QMatrix t(cols, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        assert(rows[i].size() == cols);
        for (std::size_t j = 0; j < cols; ++j) t[j][i] = rows[i][j];
    }

    IntMatrix im = clear_denominators(t);
    int sign;
    std::vector<std::size_t> pivots = bareiss(im, sign);

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(n, Rational(0));
        x[free] = Rational(1);
        // back-substitute through the echelon rows (row r has pivot pivots[r])
        for (std::size_t r = pivots.size(); r--;) {
            std::size_t pc = pivots[r];
            if (pc > free) continue;
            Rational acc(0);
            for (std::size_t j = pc + 1; j < n; ++j)
                if (!x[j].is_zero()) acc += Rational(im.a[r][j]) * x[j];
            x[pc] = -acc / Rational(im.a[r][pc]);
        }
        // integer-primitive scaling, first nonzero positive
        Int lcm = 1;
        for (const auto& v : x) {
            Int d = v.den(), g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
            lcm = lcm / g * d;
        }
        Int content = 0;
        std::vector<Int> xi;
        for (const auto& v : x) {
            Int w = v.num() * (lcm / v.den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w.get_mpz_t());
            xi.push_back(w);
        }
        int lead_sign = 0;
        for (const auto& w : xi)
            if (sgn(w) != 0) {
                lead_sign = sgn(w);
                break;
            }
        if (lead_sign == 0) continue; // cannot happen: x[free] = 1
        for (std::size_t j = 0; j < n; ++j) x[j] = Rational(xi[j] * lead_sign, content);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace abel
