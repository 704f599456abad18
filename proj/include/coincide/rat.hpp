#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace coincide {

// Exact rational scalar. Thin value wrapper over mpq_class that keeps the
// canonical form invariant (lowest terms, positive denominator).
class Rat {
public:
    Rat() = default;
    template <std::integral T>
    Rat(T v) : q_(static_cast<long>(v)) {}
    Rat(long num, long den);
    explicit Rat(const mpz_class& z) : q_(z) {}
    explicit Rat(mpq_class q);

    // Accepts "p", "p/q", optionally signed. Throws std::invalid_argument.
    static Rat parse(std::string_view s);

    std::string str() const { return q_.get_str(); }
    double to_double() const;  // round to nearest

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    Rat inv() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

Rat pow(const Rat& x, int e);  // e may be negative for x != 0
Rat binom(int n, int k);       // zero outside 0 <= k <= n

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace coincide
