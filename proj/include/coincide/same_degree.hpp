#pragma once

#include "coincide/bezier.hpp"
#include "coincide/blossom.hpp"
#include "coincide/linalg.hpp"
#include "coincide/result.hpp"

#include <optional>

namespace coincide {

struct SameDegreeSystem {
    FDSet fd1, fd2;
    Rat kappa;
    RatMatrix sys_ab, sys_cd;  // columns (a, b) and (c, d)
    std::vector<Rat> rhs_ab, rhs_cd;
};

// kappa with rho2 = kappa rho1 when both coplanarity conditions hold too.
std::optional<Rat> same_degree_filter(const FDSet& fd1, const FDSet& fd2);

SameDegreeSystem assemble_same_degree(const FDSet& fd1, const FDSet& fd2, const Rat& kappa);

// Solves both 3x2 systems and checks (b-a)^n (d-c)^m = kappa.
std::optional<AffineReparam> solve_affine(const FDSet& fd1, const FDSet& fd2, const Rat& kappa, int n, int m);

CoincidenceResult test_same_degree(const ControlNet& s1, const ControlNet& s2);

}  // namespace coincide
