#pragma once

#include <array>
#include <string>
#include <vector>

#include "weyl/hopf/coefficient.hpp"

namespace weyl::hopf {

/// Poincare generators in the order M1 M2 M3 N1 N2 N3 p0 p1 p2 p3.
inline constexpr int kLieDim = 10;
int lie_m(int i);   ///< i = 1..3
int lie_n(int i);   ///< i = 1..3
int lie_p(int mu);  ///< mu = 0..3

/// [G_a, G_b] = sum_c f[a][b][c] G_c.
struct LieStructure {
    std::array<std::array<std::array<GaussianRational, kLieDim>, kLieDim>, kLieDim> f{};

    /// [M_i,M_j] = i e_ijk M_k, [M_i,N_j] = i e_ijk N_k, [N_i,N_j] = -i e_ijk M_k, [M_i,p_j] = i e_ijk p_k,
    /// [M_i,p0] = 0, [N_i,p_j] = i d_ij p0, [N_i,p0] = i p_i, [p,p] = 0.
    static LieStructure poincare();
    /// Same table with [N_i, p0] = -i p0 taken literally.
    static LieStructure poincare_literal();

    static const std::array<std::string, kLieDim>& names();
};

struct LieReport {
    bool antisymmetric = false;
    bool jacobi = false;
    std::vector<std::string> jacobi_failures;
    /// Whether the literal [N_i, p0] = -i p0 table satisfies Jacobi, with an example failure.
    bool literal_jacobi = false;
    std::string literal_failure;
    /// max |f - i G^T| over the translation sector, G from central differences of the 4x4 matrices.
    double boost_fd_error = 0.0;
    double rotation_fd_error = 0.0;
    bool matches_matrices = false;
};

/// Jacobi defects of a structure, as "(a, b, c)" name triples.
std::vector<std::string> jacobi_failures(const LieStructure& s);
bool is_antisymmetric(const LieStructure& s);

LieReport lie_checks(double fd_step = 1e-6, double tolerance = 1e-6);

}  // namespace weyl::hopf
