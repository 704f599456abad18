#include "coincide/rat.hpp"

#include <cmath>
#include <stdexcept>

namespace coincide {

Rat::Rat(long num, long den) : q_(num, den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    q_.canonicalize();
}

Rat::Rat(mpq_class q) : q_(std::move(q))
{
    q_.canonicalize();
}

Rat Rat::parse(std::string_view s)
{
    std::string t(s);
    size_t b = t.find_first_not_of(" \t");
    size_t e = t.find_last_not_of(" \t");
    if (b == std::string::npos)
        throw std::invalid_argument("empty rational");
    t = t.substr(b, e - b + 1);
    if (t[0] == '+')
        t.erase(0, 1);

    auto digits_ok = [](const std::string& p, bool allow_sign) {
        size_t i = 0;
        if (allow_sign && !p.empty() && p[0] == '-')
            i = 1;
        if (i >= p.size())
            return false;
        for (; i < p.size(); ++i)
            if (p[i] < '0' || p[i] > '9')
                return false;
        return true;
    };

    size_t slash = t.find('/');
    mpz_class num, den(1);
    if (slash == std::string::npos) {
        if (!digits_ok(t, true))
            throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
        num = mpz_class(t);
    } else {
        std::string a = t.substr(0, slash), c = t.substr(slash + 1);
        if (!digits_ok(a, true) || !digits_ok(c, false))
            throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
        num = mpz_class(a);
        den = mpz_class(c);
        if (den == 0)
            throw std::invalid_argument("zero denominator: '" + std::string(s) + "'");
    }
    return Rat(mpq_class(num, den));
}

double Rat::to_double() const
{
    // mpq_get_d truncates toward zero; pick the nearer of it and its outward neighbour
    double d = q_.get_d();
    if (!std::isfinite(d) || is_zero())
        return d;
    double away = std::nextafter(d, sign() > 0 ? HUGE_VAL : -HUGE_VAL);
    if (!std::isfinite(away))
        return d;
    mpq_class ed = ::abs(q_ - mpq_class(d));
    mpq_class ea = ::abs(q_ - mpq_class(away));
    int c = cmp(ea, ed);
    if (c < 0)
        return away;
    if (c == 0) {
        // tie: even mantissa
        int exp;
        double m = std::frexp(away, &exp);
        double scaled = std::ldexp(m, 53);
        if (std::fmod(scaled, 2.0) == 0.0)
            return away;
    }
    return d;
}

Rat Rat::inv() const
{
    if (is_zero())
        throw std::domain_error("division by zero");
    return Rat(mpq_class(1 / q_));
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rat pow(const Rat& x, int e)
{
    if (e < 0)
        return pow(x.inv(), -e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.mpq().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.mpq().get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(mpq_class(n, d));
}

Rat binom(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return Rat(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(r);
}

std::ostream& operator<<(std::ostream& os, const Rat& r)
{
    return os << r.str();
}

}  // namespace coincide
