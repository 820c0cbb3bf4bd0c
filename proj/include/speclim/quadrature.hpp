//
// Project     : speclim
// File        : quadrature.hpp
// Description : Gauss-Legendre panel rules, orthogonal-polynomial zeros
//               (Golub-Welsch), and periodic trapezoid rules; the shared
//               integration plumbing for every norm in the library
//
// SPDX-License-Identifier: BSD-3-Clause
//

#pragma once

#include <speclim/errors.hpp>

#include <Eigen/Core>

#include <numbers>
#include <vector>

namespace speclim {

namespace quad {

/// Nodes and weights of an N-point Gauss-Legendre rule on [-1, 1].
struct Rule1D {
    Eigen::ArrayXd nodes;
    Eigen::ArrayXd weights;
};

/// Cached Gauss-Legendre rule; thread-safe, exact for polynomials of
/// degree 2*count - 1.
const Rule1D& gauss_legendre(int count);

/// Ascending zeros of the Jacobi polynomial P_degree^(alpha, beta) in
/// (-1, 1), computed as eigenvalues of the associated symmetric
/// tridiagonal matrix.  Empty for degree zero.
Eigen::ArrayXd jacobi_zeros(int degree, double alpha, double beta);

/// Ascending zeros of the generalized Laguerre polynomial L_degree^alpha
/// on (0, inf); same construction.
Eigen::ArrayXd laguerre_zeros(int degree, double alpha);

} // namespace quad

/// Tolerance of the refinement-doubling consistency guard applied by
/// every quadrature-backed norm and inner product.
inline constexpr double resolution_tolerance = 1e-8;

/// Throws resolution_error when a value and its refined recomputation
/// disagree by more than resolution_tolerance relative to `scale`.
void require_resolved(double base, double refined, double scale, const char* what);

/// A product rule: Gauss-Legendre panels on a radial interval (panel
/// boundaries typically placed at integrand kinks such as polynomial
/// zeros) times a uniform midpoint rule on the periodic variable
/// t in [-pi, pi].  The midpoint rule integrates e^(i f t) exactly for
/// every integer frequency f not divisible by t_count.
struct QuadratureGrid {
    std::vector<double> cuts;          ///< ascending panel boundaries, size >= 2
    int                 per_panel = 0; ///< Gauss-Legendre nodes per panel
    int                 t_count   = 0; ///< midpoint nodes on [-pi, pi]
    Eigen::ArrayXd      rho_nodes;     ///< assembled radial nodes
    Eigen::ArrayXd      rho_weights;   ///< matching positive weights

    /// j-th periodic node, j in [0, t_count).
    double t_node(int j) const
    {
        return -std::numbers::pi + (j + 0.5) * (2.0 * std::numbers::pi / t_count);
    }

    /// Weight of every periodic node.
    double t_weight() const { return 2.0 * std::numbers::pi / t_count; }

    /// The same panels with doubled radial counts and an incommensurate
    /// (2x+1) periodic count; used for the consistency guard.
    QuadratureGrid refined() const;
};

/// Build a grid.  Requires at least two strictly ascending cuts,
/// per_panel >= 2, t_count >= 1; throws domain_error otherwise.
QuadratureGrid make_grid(std::vector<double> cuts, int per_panel, int t_count);

/// Sum of w_i * f(rho_i) over the radial rule.
template <typename F>
auto integrate_radial(const QuadratureGrid& grid, F&& f)
{
    using Value = decltype(f(0.0));
    Value accumulated{};
    for (Eigen::Index i = 0; i < grid.rho_nodes.size(); ++i)
        accumulated += grid.rho_weights[i] * f(grid.rho_nodes[i]);
    return accumulated;
}

/// Sum of w_i * w_j * f(rho_i, t_j) over the product rule.
template <typename F>
auto integrate_product(const QuadratureGrid& grid, F&& f)
{
    using Value = decltype(f(0.0, 0.0));
    Value accumulated{};
    for (int j = 0; j < grid.t_count; ++j) {
        const double t = grid.t_node(j);
        Value        slice{};
        for (Eigen::Index i = 0; i < grid.rho_nodes.size(); ++i)
            slice += grid.rho_weights[i] * f(grid.rho_nodes[i], t);
        accumulated += grid.t_weight() * slice;
    }
    return accumulated;
}

} // namespace speclim
