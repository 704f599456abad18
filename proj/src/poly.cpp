#include "coincide/poly.hpp"

#include <stdexcept>

namespace coincide {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs))
{
    trim();
}

Poly Poly::monomial(const Rat& c, int k)
{
    if (c.is_zero())
        return Poly();
    std::vector<Rat> v(static_cast<size_t>(k) + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rat Poly::coeff(int k) const
{
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return Rat(0);
    return c_[k];
}

Rat Poly::eval(const Rat& x) const
{
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const
{
    if (c_.size() <= 1)
        return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return Poly(std::move(d));
}

Poly Poly::monic() const
{
    if (is_zero())
        return *this;
    Poly r = *this;
    r *= lead().inv();
    return r;
}

Poly Poly::compose(const Poly& inner) const
{
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s)
{
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly pow(const Poly& p, int e)
{
    Poly r = Poly::constant(Rat(1));
    for (int k = 0; k < e; ++k)
        r = r * p;
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0)
        return {Poly(), a};
    std::vector<Rat> q(static_cast<size_t>(dq) + 1);
    Rat lb = b.lead().inv();
    for (int k = dq; k >= 0; --k) {
        Rat f = rem[k + db] * lb;
        q[k] = f;
        if (f.is_zero())
            continue;
        for (int j = 0; j <= db; ++j)
            rem[k + j] -= f * b.coeffs()[j];
    }
    rem.resize(static_cast<size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

Poly squarefree_part(const Poly& p)
{
    if (p.degree() <= 0)
        return p.monic();
    Poly g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

std::vector<mpz_class> integer_normalize(const Poly& p)
{
    std::vector<mpz_class> out;
    if (p.is_zero())
        return out;
    mpz_class l(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    mpz_class g(0);
    for (const auto& c : p.coeffs()) {
        mpz_class v = c.num() * (l / c.den());
        out.push_back(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (out.back() < 0)
        g = -g;
    for (auto& v : out)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
}

}  // namespace coincide
