#pragma once

#include "coincide/bezier.hpp"
#include "coincide/blossom.hpp"
#include "coincide/linalg.hpp"
#include "coincide/result.hpp"
#include "coincide/roots.hpp"

#include <array>
#include <optional>
#include <utility>

namespace coincide {

struct CrossDegreeSystem {
    int n = 0, m = 0;  // degree of the base net
    FDSet fd;
    BoundaryFD bfd;
    std::array<Rat, 4> kappas;
    RatMatrix m_matrix;  // 3 x 4: n rho10, m rho01, n rho, m rho
    int m_rank = 0;
};

// alpha x + beta y = C x y after eliminating the base point (rank-2 case)
struct ReducedEdgeEquation {
    Rat alpha, beta, cc;
};

struct EdgeSolutionSet {
    std::vector<std::pair<Rat, Rat>> pairs;  // rational (x, y), each with x^n y^m = kappa
    std::vector<RootLocation> irrational;    // irrational roots in the eliminated variable
    int real_count() const { return static_cast<int>(pairs.size() + irrational.size()); }
};

std::optional<std::array<Rat, 4>> boundary_filter(const FDSet& fd, const BoundaryFD& bfd);

// nullopt unless rho and all four deltas are collinear. s2 must be of degree (n+m, n+m).
std::optional<CrossDegreeSystem> make_cross_system(const ControlNet& s1, const ControlNet& s2);

// Edge equation  kappa (n y rho10 + m x rho01 + w rho) = x y delta1  for a
// single boundary curve of degree n+m, solved for (x, y). Edges are 1..4.
EdgeSolutionSet solve_edge(const FDSet& fd, int n, int m, int rank_m, const Rat& kappa, const Vec3& delta1);
EdgeSolutionSet solve_edge_equation(const CrossDegreeSystem& sys, int edge);
ReducedEdgeEquation reduce_edge_equation(const FDSet& fd, int n, int m, const Rat& kappa, const Vec3& delta1);

// Edge k runs A->B, A->D, D->C, B->C for k = 1..4; picks[k-1] = (x_k, y_k).
std::optional<BilinearReparam> assemble_bilinear(const CrossDegreeSystem& sys,
                                                 const std::array<std::pair<Rat, Rat>, 4>& picks);
// All four edge vector equations and the kappa equations hold exactly.
bool satisfies_vertex_system(const CrossDegreeSystem& sys, const BilinearReparam& psi);

// Candidate bilinear maps without the final control-net comparison.
std::vector<BilinearReparam> cross_candidates(const CrossDegreeSystem& sys, std::vector<std::string>* diagnostics = nullptr);

CoincidenceResult test_cross_degree(const ControlNet& s1, const ControlNet& s2);
CoincidenceResult test_mixed_degree(const ControlNet& s1, const ControlNet& s2);
CoincidenceResult dispatch(const ControlNet& s1, const ControlNet& s2);

}  // namespace coincide
