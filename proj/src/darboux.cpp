#include "abel/darboux.hpp"

#include <algorithm>

namespace abel {

Cofactor cofactor(const AbelEquation& eq, const QPoly& curve)
{
    if (!is_invariant(eq, curve)) throw input_error("cofactor of a non-invariant curve");
    return Cofactor{eq.A, curve.derivative()};
}

Cofactor cofactor_x_zero(const AbelEquation& eq) { return Cofactor{eq.A, to_qpoly(eq.B)}; }

DarbouxIntegral::DarbouxIntegral(std::vector<QuadExt> alphas, std::vector<QPoly> curves,
                                 const AbelEquation& eq)
    : alphas_(std::move(alphas)), curves_(std::move(curves))
{
    if (alphas_.size() != curves_.size()) throw input_error("alpha/curve count mismatch");
    bool all_zero = true;
    for (const auto& a : alphas_) all_zero = all_zero && a.is_zero();
    if (all_zero) throw input_error("all exponents zero");

    QuadExt sum(0);
    QPoly combo;
    QPoly A = to_qpoly(eq.A);
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        sum += alphas_[i];
        combo += A.exact_div(curves_[i]) * alphas_[i];
    }
    if (!combo.is_zero()) throw structure_error("exponents do not annihilate the cofactor system");
    alpha0_ = -sum;
}

std::size_t DarbouxIntegral::support_size() const
{
    std::size_t s = 0;
    for (const auto& a : alphas_)
        if (!a.is_zero()) ++s;
    return s;
}

namespace {

struct SplitCurves {
    std::vector<Poly> re, im; // r_i = re + im*sqrt(D)
    Int d = 1;
};

SplitCurves split_ratios(const AbelEquation& eq, const std::vector<QPoly>& curves)
{
    SplitCurves out;
    QPoly A = to_qpoly(eq.A);
    for (const auto& p : curves) {
        if (p.is_zero()) throw input_error("zero curve polynomial");
        QPoly r = A.exact_div(p);
        std::vector<Rational> re, im;
        for (const auto& c : r.coeffs()) {
            re.push_back(c.rational_part());
            im.push_back(c.radical_part());
            if (!c.is_rational()) {
                if (out.d != 1 && out.d != c.radicand())
                    throw unrepresentable_error("curve set spans two distinct radicals");
                out.d = c.radicand();
            }
        }
        out.re.emplace_back(std::move(re));
        out.im.emplace_back(std::move(im));
    }
    // alphas may themselves need sqrt(D) even when every ratio is rational,
    // but only if the curves do; pick up a radical from the curves too.
    for (const auto& p : curves)
        for (const auto& c : p.coeffs())
            if (!c.is_rational()) {
                if (out.d != 1 && out.d != c.radicand())
                    throw unrepresentable_error("curve set spans two distinct radicals");
                out.d = c.radicand();
            }
    return out;
}

} // namespace

std::vector<DarbouxIntegral> darboux_exponents(const AbelEquation& eq, const std::vector<QPoly>& curves)
{
    if (curves.empty()) throw input_error("darboux_exponents needs at least one curve");
    for (const auto& p : curves)
        if (!is_invariant(eq, p)) throw input_error("non-invariant curve passed to darboux_exponents");

    SplitCurves sc = split_ratios(eq, curves);
    std::size_t cols = 0;
    for (const auto& r : sc.re) cols = std::max(cols, r.coeffs().size());
    for (const auto& r : sc.im) cols = std::max(cols, r.coeffs().size());

    const std::size_t r = curves.size();
    std::vector<DarbouxIntegral> out;

    if (sc.d == 1) {
        QMatrix rows(r, std::vector<Rational>(cols, Rational(0)));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < sc.re[i].coeffs().size(); ++j) rows[i][j] = sc.re[i].coeffs()[j];
        for (auto& alpha : left_nullspace(rows)) {
            std::vector<QuadExt> a(alpha.begin(), alpha.end());
            out.emplace_back(std::move(a), std::vector<QPoly>(curves), eq);
        }
        return out;
    }

    // columns doubled: alpha_i = u_i + v_i sqrt(D); rows ordered u_1..u_r,
    // v_1..v_r; each equation split into rational and radical parts
    Rational D = Rational(sc.d);
    QMatrix rows(2 * r, std::vector<Rational>(2 * cols, Rational(0)));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            Rational aij = sc.re[i].coeff(j), bij = sc.im[i].coeff(j);
            rows[i][j] = aij;                    // u_i * re part
            rows[i][cols + j] = bij;             // u_i * im part
            rows[r + i][j] = D * bij;            // v_i * re part
            rows[r + i][cols + j] = aij;         // v_i * im part
        }
    }
    for (auto& vec : left_nullspace(rows)) {
        std::vector<QuadExt> a;
        a.reserve(r);
        for (std::size_t i = 0; i < r; ++i) a.emplace_back(vec[i], vec[r + i], sc.d);
        bool all_zero = true;
        for (const auto& x : a) all_zero = all_zero && x.is_zero();
        if (all_zero) continue;
        out.emplace_back(std::move(a), std::vector<QPoly>(curves), eq);
    }
    return out;
}

bool verify_first_integral(const AbelEquation& eq, const DarbouxIntegral& integral)
{
    // x^2 coefficient: (alpha0 + sum alpha_i) A
    QuadExt sum = integral.alpha0();
    for (const auto& a : integral.alphas()) sum += a;
    if (!sum.is_zero()) return false;
    // x coefficient: alpha0 B + sum alpha_i p_i'
    QPoly lin = to_qpoly(eq.B) * integral.alpha0();
    for (std::size_t i = 0; i < integral.alphas().size(); ++i)
        lin += integral.curves()[i].derivative() * integral.alphas()[i];
    return lin.is_zero();
}

Int max_curve_bound(int n, int degB)
{
    if (n < 0) throw input_error("n must be nonnegative");
    if (n % 2 == 0) return 2;
    if (2 * degB > n - 1) return 2;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>((n + 1) / 2));
    return b + 1;
}

bool theorem_c_check(const AbelEquation& eq, std::size_t curve_count, bool has_integral)
{
    return 2 * curve_count <= std::size_t(eq.n() + 1) || has_integral;
}

std::optional<DarbouxIntegral> smallest_support_integral(const AbelEquation& eq,
                                                         const std::vector<QPoly>& curves)
{
    auto basis = darboux_exponents(eq, curves);
    if (basis.empty()) return std::nullopt;

    const std::size_t r = curves.size();
    bool rational = true;
    for (const auto& p : curves)
        if (!to_rational_poly(p)) rational = false;
    if (!rational || r > 16) return basis.front();

    QPoly A = to_qpoly(eq.A);
    std::vector<std::vector<Rational>> rrows;
    std::size_t cols = 0;
    for (const auto& p : curves) {
        auto rp = to_rational_poly(A.exact_div(p));
        rrows.push_back(rp->coeffs());
        cols = std::max(cols, rp->coeffs().size());
    }

    for (std::size_t size = 2; size <= r; ++size) {
        std::optional<std::vector<Rational>> best;
        // all supports of this size, via prev_permutation on a descending mask
        std::vector<bool> mask(r, false);
        std::fill(mask.begin(), mask.begin() + long(size), true);
        do {
            QMatrix sub;
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < r; ++i)
                if (mask[i]) {
                    idx.push_back(i);
                    std::vector<Rational> row(cols, Rational(0));
                    for (std::size_t j = 0; j < rrows[i].size(); ++j) row[j] = rrows[i][j];
                    sub.push_back(std::move(row));
                }
            auto null = left_nullspace(sub);
            for (const auto& v : null) {
                bool full = true; // require support exactly == size
                for (const auto& x : v) full = full && !x.is_zero();
                if (!full) continue;
                std::vector<Rational> alpha(r, Rational(0));
                for (std::size_t k = 0; k < idx.size(); ++k) alpha[idx[k]] = v[k];
                if (!best || std::lexicographical_compare(alpha.begin(), alpha.end(), best->begin(), best->end()))
                    best = alpha;
            }
        } while (std::prev_permutation(mask.begin(), mask.end()));
        if (best) {
            std::vector<QuadExt> a(best->begin(), best->end());
            return DarbouxIntegral(std::move(a), std::vector<QPoly>(curves), eq);
        }
    }
    return basis.front();
}

} // namespace abel
