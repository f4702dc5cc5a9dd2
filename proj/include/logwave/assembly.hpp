#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "logwave/geometry.hpp"
#include "logwave/mesh.hpp"
#include "logwave/tridiag.hpp"

namespace logwave::fem {

// Mass and stiffness matrices of the interior hat basis. Both m x m,
// symmetric, bandwidth 1; M is positive definite, K positive semidefinite.
struct AssembledSystem {
    Mesh1D mesh;
    SymTridiag mass;        // M_ij = \int w_i w_j dx
    SymTridiag stiffness;   // K_ij = \int w_i' w_j' dx
};

AssembledSystem assemble(const Mesh1D& mesh);

// Penalty mass matrix Mchi(t)_ij = \int chi(.,t) w_i w_j dx, integrated
// exactly over the overlap pieces of each element. The 1/epsilon factor is
// applied by the integrator, not here.
SymTridiag assemble_penalty(const Mesh1D& mesh,
                            const geometry::MovingDomainFamily& fam, double t);

enum class Projection { Interpolate, L2 };

// Coefficients of the zero-extended initial data (u0, u1). Interpolation
// leaves every node outside Omega_0 exactly zero; the L2 variant projects the
// zero extension onto the basis.
std::pair<std::vector<double>, std::vector<double>> project_initial(
    const std::function<double(double)>& u0,
    const std::function<double(double)>& u1, const Mesh1D& mesh,
    const geometry::MovingDomainFamily& fam,
    Projection projection = Projection::Interpolate);

}  // namespace logwave::fem
