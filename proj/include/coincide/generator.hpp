#pragma once

#include "coincide/blossom.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <variant>

namespace coincide {

// Deterministic across standard libraries: plain modulo reduction of
// mt19937_64 output instead of std::uniform_*_distribution.
class Rng {
public:
    explicit Rng(uint64_t seed) : g_(seed) {}
    long integer(long lo, long hi);                 // inclusive
    Rat rational(long lo, long hi, long max_den);   // in [lo, hi], denominator <= max_den
    uint64_t raw() { return g_(); }

private:
    std::mt19937_64 g_;
};

enum class GenKind { SameDegree, CrossDegree, Mixed };

struct GenPair {
    ControlNet base, other;
    std::variant<AffineReparam, BilinearReparam> planted;
};

// Random net with small rational coordinates that passes surface_irreducible.
// rank2 makes the x coordinate affine in (u, v), which forces rank(M) = 2
// whenever n + m >= 3. Throws after max_tries failures.
ControlNet random_irreducible_net(int n, int m, Rng& rng, bool rank2 = false, int max_tries = 64);

AffineReparam random_window(Rng& rng);
BilinearReparam random_convex_quad(Rng& rng);
BilinearReparam random_trapezoid(Rng& rng);  // u affine in s: D.u = A.u, C.u = B.u

// Plants phi / psi on a random base net. For the mixed kind the second net
// has degree (n+m, m). The bilinear kinds throw invalid_argument when the
// image net is reducible, which happens e.g. when a quad edge is parallel to
// an axis; callers draw a new map.
GenPair gen_same_degree(int n, int m, const AffineReparam& phi, Rng& rng);
GenPair gen_cross_degree(int n, int m, const BilinearReparam& psi, Rng& rng, bool rank2 = false);
GenPair gen_mixed(int n, int m, const BilinearReparam& trapezoid, Rng& rng);

// Random planted map, redrawn until the pair is valid.
GenPair draw_cross_degree(int n, int m, Rng& rng, bool rank2 = false, int max_tries = 256);
GenPair draw_mixed(int n, int m, Rng& rng, int max_tries = 256);

}  // namespace coincide
