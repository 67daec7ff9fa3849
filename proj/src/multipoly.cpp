#include "abel/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "abel/errors.hpp"

namespace abel {

Mono mono_mul(const Mono& a, const Mono& b)
{
    Mono m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
    return m;
}

Mono mono_lcm(const Mono& a, const Mono& b)
{
    Mono m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

bool mono_divides(const Mono& a, const Mono& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mono mono_div(const Mono& b, const Mono& a)
{
    Mono m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) m[i] = b[i] - a[i];
    return m;
}

bool mono_coprime(const Mono& a, const Mono& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

void MultiPoly::add_term(const Mono& m, const Rational& c)
{
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly operator+(const MultiPoly& f, const MultiPoly& g)
{
    MultiPoly out = f;
    for (const auto& [m, c] : g.terms_) out.add_term(m, c);
    return out;
}

MultiPoly operator-(const MultiPoly& f, const MultiPoly& g)
{
    MultiPoly out = f;
    for (const auto& [m, c] : g.terms_) out.add_term(m, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& f, const MultiPoly& g)
{
    MultiPoly out(f.nvars_);
    for (const auto& [mf, cf] : f.terms_)
        for (const auto& [mg, cg] : g.terms_) out.add_term(mono_mul(mf, mg), cf * cg);
    return out;
}

MultiPoly MultiPoly::term_times(const Mono& m, const Rational& c) const
{
    MultiPoly out(nvars_);
    for (const auto& [mm, cc] : terms_) out.terms_.emplace(mono_mul(mm, m), cc * c);
    return out;
}

MultiPoly MultiPoly::monic() const
{
    if (is_zero()) return *this;
    Rational inv = lead_coeff().inverse();
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * inv);
    return out;
}

int MultiPoly::max_var() const
{
    int mv = -1;
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) mv = std::max(mv, int(i));
    return mv;
}

QPoly MultiPoly::eval_prefix(const std::vector<QuadExt>& values, int var) const
{
    std::vector<QuadExt> acc;
    for (const auto& [m, c] : terms_) {
        QuadExt v(c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (int(i) == var) continue;
            if (i >= values.size())
                throw structure_error("eval_prefix: term involves an unsubstituted variable");
            QuadExt base = values[i];
            for (unsigned e = 0; e < m[i]; ++e) v *= base;
        }
        unsigned deg = var >= 0 && std::size_t(var) < m.size() ? m[std::size_t(var)] : 0;
        if (acc.size() <= deg) acc.resize(deg + 1, QuadExt(0));
        acc[deg] += v;
    }
    return QPoly(std::move(acc));
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? "-" : "+");
        }
        Rational mag = c.abs();
        bool has_var = false;
        for (unsigned e : m) has_var = has_var || e > 0;
        if (!has_var) {
            os << mag.to_string();
            continue;
        }
        bool printed = false;
        if (!mag.is_one()) {
            os << mag.to_string();
            printed = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (printed) os << "*";
            os << "x" << i;
            if (m[i] > 1) os << "^" << m[i];
            printed = true;
        }
    }
    return os.str();
}

} // namespace abel
