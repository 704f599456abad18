#pragma once

#include "coincide/poly.hpp"
#include "coincide/rat.hpp"

#include <memory>
#include <string>
#include <vector>

namespace coincide {

struct RootLocation {
    enum class Kind { Exact, Isolated };
    Kind kind = Kind::Exact;
    Rat value;   // Exact
    Rat lo, hi;  // Isolated: the root lies in the open interval (lo, hi)
    std::shared_ptr<const Poly> poly;  // square-free polynomial the root belongs to

    bool exact() const { return kind == Kind::Exact; }
    std::string str() const;
};

// Distinct real roots in increasing order. Rational roots come back Exact.
// coeffs are ascending; throws std::invalid_argument("identically zero").
std::vector<RootLocation> isolate_real_roots(const std::vector<Rat>& coeffs);
std::vector<RootLocation> isolate_real_roots(const Poly& p);

// Shrink an Isolated interval to width <= w (may turn into Exact if a
// bisection point hits the root).
RootLocation refine(const RootLocation& r, const Rat& width);

// Number of distinct real roots of p in (a, b], by Sturm's theorem.
int sturm_count(const Poly& p, const Rat& a, const Rat& b);
int sturm_count_all(const Poly& p);

// Simplest fraction (smallest denominator) in the closed interval [lo, hi].
Rat simplest_between(const Rat& lo, const Rat& hi);

}  // namespace coincide
