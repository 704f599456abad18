#pragma once

#include "coincide/bezier.hpp"
#include "coincide/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coincide {

struct IrreducibilityReport {
    bool elevated = false;
    bool composed = false;
    std::string witness;  // e.g. "reduces to degree 2", "inner degree 2"

    bool irreducible() const { return !elevated && !composed; }
};

bool is_degree_elevated(const BezierCurve3& c);
bool is_composed(const BezierCurve3& c);
// If c = q(h(t)) with h monic, h(0) = 0 and deg h >= 2, returns such an h of
// smallest degree.
std::optional<Poly> inner_polynomial(const BezierCurve3& c);
IrreducibilityReport analyze_curve(const BezierCurve3& c);

// Power-basis coordinate polynomials of a curve.
std::array<Poly, 3> curve_polys(const BezierCurve3& c);

struct SurfaceReport {
    bool irreducible = true;
    std::vector<std::string> failures;  // "row curve j elevated", "column curve i composed (...)"
};

SurfaceReport analyze_surface(const ControlNet& net);
bool surface_irreducible(const ControlNet& net);

}  // namespace coincide
