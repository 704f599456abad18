#pragma once

#include "coincide/rat.hpp"

#include <utility>
#include <vector>

namespace coincide {

// Dense univariate polynomial, coefficients in ascending order.
// The zero polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& c) { return Poly({c}); }
    static Poly monomial(const Rat& c, int k);
    static Poly x() { return monomial(Rat(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const;
    Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const { return eval(x).sign(); }
    Poly derivative() const;
    Poly monic() const;
    Poly compose(const Poly& inner) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rat> c_;
};

Poly pow(const Poly& p, int e);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);  // throws on b == 0
Poly gcd(Poly a, Poly b);                                   // monic, or zero
Poly squarefree_part(const Poly& p);                        // monic

// Scale to coprime integer coefficients with positive leading coefficient.
std::vector<mpz_class> integer_normalize(const Poly& p);

}  // namespace coincide
