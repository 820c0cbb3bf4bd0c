//
// Project     : speclim
// File        : quadrature.cpp
// Description : Gauss-Legendre rules, Golub-Welsch zero computation,
//               panel assembly, refinement guard
//
// SPDX-License-Identifier: BSD-3-Clause
//

#include <speclim/quadrature.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>

namespace speclim {

namespace quad {

namespace {

// Eigenvalues of the symmetric tridiagonal matrix with the given
// diagonal and subdiagonal, in ascending order.
Eigen::ArrayXd tridiagonal_eigenvalues(const Eigen::VectorXd& diag,
                                       const Eigen::VectorXd& subdiag,
                                       bool                   want_vectors,
                                       Eigen::MatrixXd*       vectors)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, subdiag,
                                  want_vectors ? Eigen::ComputeEigenvectors
                                               : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw precision_error("tridiagonal eigenvalue computation failed");
    if (want_vectors)
        *vectors = solver.eigenvectors();
    return solver.eigenvalues().array();
}

Rule1D build_gauss_legendre(int count)
{
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(count);
    Eigen::VectorXd sub(count > 1 ? count - 1 : 0);
    for (int k = 1; k < count; ++k)
        sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);

    Eigen::MatrixXd vectors;
    Rule1D          rule;
    rule.nodes   = tridiagonal_eigenvalues(diag, sub, true, &vectors);
    rule.weights = 2.0 * vectors.row(0).array().square();
    return rule;
}

} // namespace

const Rule1D& gauss_legendre(int count)
{
    if (count < 1)
        throw domain_error("gauss_legendre: node count must be >= 1");

    static std::mutex              guard;
    static std::map<int, Rule1D>   cache;
    std::lock_guard<std::mutex>    lock(guard);

    auto found = cache.find(count);
    if (found == cache.end())
        found = cache.emplace(count, build_gauss_legendre(count)).first;
    return found->second;
}

Eigen::ArrayXd jacobi_zeros(int degree, double alpha, double beta)
{
    if (degree < 0)
        throw domain_error("jacobi_zeros: degree must be non-negative");
    if (!(alpha > -1.0) || !(beta > -1.0))
        throw domain_error("jacobi_zeros: parameters must exceed -1");
    if (degree == 0)
        return Eigen::ArrayXd();

    const double ab = alpha + beta;

    Eigen::VectorXd diag(degree);
    diag[0] = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < degree; ++k)
        diag[k] = (beta * beta - alpha * alpha)
                  / ((2.0 * k + ab) * (2.0 * k + ab + 2.0));

    Eigen::VectorXd sub(degree > 1 ? degree - 1 : 0);
    if (degree > 1)
        sub[0] = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta)
                           / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
    for (int k = 2; k < degree; ++k) {
        const double a = 2.0 * k + ab;
        sub[k - 1]     = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab)
                                   / (a * a * (a + 1.0) * (a - 1.0)));
    }

    return tridiagonal_eigenvalues(diag, sub, false, nullptr);
}

Eigen::ArrayXd laguerre_zeros(int degree, double alpha)
{
    if (degree < 0)
        throw domain_error("laguerre_zeros: degree must be non-negative");
    if (!(alpha > -1.0))
        throw domain_error("laguerre_zeros: parameter must exceed -1");
    if (degree == 0)
        return Eigen::ArrayXd();

    Eigen::VectorXd diag(degree);
    for (int k = 0; k < degree; ++k)
        diag[k] = 2.0 * k + alpha + 1.0;

    Eigen::VectorXd sub(degree > 1 ? degree - 1 : 0);
    for (int k = 1; k < degree; ++k)
        sub[k - 1] = std::sqrt(k * (k + alpha));

    return tridiagonal_eigenvalues(diag, sub, false, nullptr);
}

} // namespace quad

void require_resolved(double base, double refined, double scale, const char* what)
{
    const double floor = std::max(std::fabs(scale), 1e-300);
    if (std::fabs(base - refined) > resolution_tolerance * floor) {
        std::ostringstream message;
        message << what << ": grid and refined grid disagree by "
                << std::fabs(base - refined) / floor
                << " relative; increase the node counts";
        throw resolution_error(message.str());
    }
}

QuadratureGrid make_grid(std::vector<double> cuts, int per_panel, int t_count)
{
    if (cuts.size() < 2 || !std::is_sorted(cuts.begin(), cuts.end())
        || std::adjacent_find(cuts.begin(), cuts.end()) != cuts.end())
        throw domain_error("make_grid: need at least two strictly ascending cuts");
    if (per_panel < 2)
        throw domain_error("make_grid: need at least two nodes per panel");
    if (t_count < 1)
        throw domain_error("make_grid: need at least one periodic node");

    const quad::Rule1D& base = quad::gauss_legendre(per_panel);

    QuadratureGrid grid;
    grid.cuts      = std::move(cuts);
    grid.per_panel = per_panel;
    grid.t_count   = t_count;

    const int panels = static_cast<int>(grid.cuts.size()) - 1;
    grid.rho_nodes.resize(static_cast<Eigen::Index>(panels) * per_panel);
    grid.rho_weights.resize(grid.rho_nodes.size());

    for (int p = 0; p < panels; ++p) {
        const double a      = grid.cuts[p];
        const double b      = grid.cuts[p + 1];
        const double center = (a + b) / 2.0;
        const double half   = (b - a) / 2.0;
        for (int i = 0; i < per_panel; ++i) {
            grid.rho_nodes[p * per_panel + i]   = center + half * base.nodes[i];
            grid.rho_weights[p * per_panel + i] = half * base.weights[i];
        }
    }
    return grid;
}

QuadratureGrid QuadratureGrid::refined() const
{
    return make_grid(cuts, 2 * per_panel, 2 * t_count + 1);
}

} // namespace speclim
