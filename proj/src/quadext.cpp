#include "abel/quadext.hpp"

#include "abel/errors.hpp"
#include "abel/intfactor.hpp"

namespace abel {

QuadExt::QuadExt(Rational a, Rational b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d))
{
    if (sgn(d_) == 0) throw input_error("radicand must be nonzero");
    if (b_.is_zero()) {
        d_ = 1;
        return;
    }
    if (d_ == 1) { // sqrt(1) = 1
        a_ += b_;
        b_ = 0;
        return;
    }
    auto [s, m] = squarefree_split(d_);
    if (s != 1) {
        b_ *= Rational(s);
        d_ = m;
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
        }
    }
}

Int common_radicand(const QuadExt& x, const QuadExt& y)
{
    if (x.is_rational()) return y.radicand();
    if (y.is_rational()) return x.radicand();
    if (x.radicand() != y.radicand())
        throw unrepresentable_error("mixed radicals sqrt(" + x.radicand().get_str() + ") and sqrt(" +
                                    y.radicand().get_str() + ")");
    return x.radicand();
}

QuadExt operator+(const QuadExt& x, const QuadExt& y)
{
    Int d = common_radicand(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y)
{
    Int d = common_radicand(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y)
{
    Int d = common_radicand(x, y);
    return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt QuadExt::inverse() const
{
    if (is_zero()) throw input_error("inverse of zero");
    Rational n = norm(); // nonzero: sqrt(d) is irrational for d != 1
    return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

int QuadExt::cmp(const QuadExt& x, const QuadExt& y)
{
    if (x == y) return 0;
    // shared real radicand: exact numeric comparison of a1-a2 + (b1-b2) sqrt(d).
    Int d = 1;
    bool comparable = true;
    try {
        d = common_radicand(x, y);
    } catch (const unrepresentable_error&) {
        comparable = false;
    }
    if (comparable && sgn(d) > 0) {
        Rational da = x.a_ - y.a_;
        Rational db = x.b_ - y.b_;
        if (db.is_zero()) return da.sign();
        if (da.is_zero()) return db.sign();
        if (da.sign() == db.sign()) return da.sign();
        // sign(da + db sqrt(d)) with da, db opposite: compare da^2 vs db^2 d.
        int s = (da * da - db * db * Rational(d)).sign();
        return s == 0 ? 0 : s * da.sign();
    }
    // representation order: radicand, then (a, b)
    if (x.d_ != y.d_) return x.d_ < y.d_ ? -1 : 1;
    if (x.a_ != y.a_) return x.a_ < y.a_ ? -1 : 1;
    return x.b_ < y.b_ ? -1 : 1;
}

QuadExt QuadExt::sqrt_rational(const Rational& x)
{
    if (x.is_zero()) return QuadExt(0);
    // sqrt(n/d) = sqrt(n d)/d = (s/d) sqrt(m) with n d = s^2 m, m squarefree
    auto [s, m] = squarefree_split(x.num() * x.den());
    if (m == 1) return QuadExt(Rational(s, x.den()));
    return QuadExt(Rational(0), Rational(s, x.den()), m);
}

std::optional<QuadExt> QuadExt::sqrt() const
{
    if (is_rational()) {
        return sqrt_rational(a_);
    }
    // Want (u + v sqrt(d))^2 = a + b sqrt(d): u^2 + v^2 d = a, 2uv = b.
    // Then u^2 = (a +- w)/2 with w = sqrt(a^2 - b^2 d) rational.
    QuadExt w2 = sqrt_rational(norm());
    if (!w2.is_rational()) return std::nullopt;
    Rational w = w2.rational_part().abs();
    for (int sign : {1, -1}) {
        Rational usq = (a_ + (sign > 0 ? w : -w)) / Rational(2);
        if (usq.sign() < 0) continue;
        QuadExt u = sqrt_rational(usq);
        if (!u.is_rational() || u.is_zero()) continue;
        Rational uu = u.rational_part();
        return QuadExt(uu, b_ / (Rational(2) * uu), d_);
    }
    return std::nullopt;
}

std::string QuadExt::to_string() const
{
    if (is_rational()) return a_.to_string();
    std::string rad = "sqrt(" + d_.get_str() + ")";
    std::string bs;
    if (b_.is_one())
        bs = rad;
    else if (b_ == Rational(-1))
        bs = "-" + rad;
    else
        bs = b_.to_string() + "*" + rad;
    if (a_.is_zero()) return bs;
    if (b_.sign() > 0) return a_.to_string() + " + " + (b_.is_one() ? rad : b_.to_string() + "*" + rad);
    Rational nb = -b_;
    return a_.to_string() + " - " + (nb.is_one() ? rad : nb.to_string() + "*" + rad);
}

std::vector<QuadExt> quad_roots(const Rational& a, const Rational& b, const Rational& c)
{
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw input_error("degenerate quadratic: all coefficients zero");
    if (a.is_zero()) {
        if (b.is_zero()) return {}; // c != 0: no root
        return {QuadExt(-c / b)};
    }
    Rational disc = b * b - Rational(4) * a * c;
    QuadExt sq = QuadExt::sqrt_rational(disc);
    QuadExt den = QuadExt(Rational(2) * a);
    QuadExt r1 = (QuadExt(-b) + sq) / den;
    QuadExt r2 = (QuadExt(-b) - sq) / den;
    if (r1 == r2) return {r1};
    return {r1, r2};
}

std::optional<std::vector<QuadExt>> quad_roots_ext(const QuadExt& a, const QuadExt& b, const QuadExt& c)
{
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw input_error("degenerate quadratic: all coefficients zero");
    if (a.is_zero()) {
        if (b.is_zero()) return std::vector<QuadExt>{};
        return std::vector<QuadExt>{-c / b};
    }
    QuadExt disc = b * b - QuadExt(4) * a * c;
    auto sq = disc.sqrt();
    if (!sq) return std::nullopt;
    QuadExt den = QuadExt(2) * a;
    QuadExt r1 = (-b + *sq) / den;
    QuadExt r2 = (-b - *sq) / den;
    if (r1 == r2) return std::vector<QuadExt>{r1};
    return std::vector<QuadExt>{r1, r2};
}

} // namespace abel
