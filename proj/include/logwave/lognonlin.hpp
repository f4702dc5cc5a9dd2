#pragma once

#include <vector>

#include "logwave/mesh.hpp"
#include "logwave/tridiag.hpp"

// The logarithmic source term f(u) = u ln|u|^gamma and the stationary
// variational quantities built from it: the Nehari functional I1, the
// potential J1, the fibering root lambda*, and the explicit lower bound on
// the well depth d.

namespace logwave::nonlin {

// Piecewise-linear function vanishing at the ambient endpoints, described by
// its m interior nodal values.
struct GridFunction {
    fem::Mesh1D mesh;
    std::vector<double> coeffs;   // size mesh.m

    bool is_zero() const;
    // nodal values including the two boundary zeros (size m+2)
    std::vector<double> nodal_values() const;
};

struct WellStatus {
    double I1 = 0.0;
    double J1 = 0.0;
    double d_bound = 0.0;
    bool in_well = false;
};

// gamma * u * ln|u|, continuously extended by 0 at u = 0; odd in u.
double f_log(double u, double gamma);

// \int u^2 ln|u|^gamma dx of the interpolant, 5-point Gauss per element.
double log_integral(const GridFunction& u, double gamma);

// \int u^2 (ln|u| - shift) dx; log_integral == gamma * log_shifted(u, 0).
double log_shifted_integral(const GridFunction& u, double shift);

// Load vector N_j = \int f_log(u) w_j dx against the interior hat basis.
std::vector<double> nonlinear_load(const GridFunction& u, double gamma);

// Antiderivative potential Phi with grad Phi = N:
// Phi = 1/2 \int u^2 ln|u|^gamma dx - (gamma/4) ||u||^2.
double log_potential(const GridFunction& u, double gamma,
                     const fem::SymTridiag& mass);

// I1(u) = ||grad u||^2 - \int u^2 ln|u|^gamma dx
double nehari_I1(const GridFunction& u, const fem::SymTridiag& stiffness,
                 double gamma);

// J1(u) = 1/2 ||grad u||^2 - 1/2 \int u^2 ln|u|^gamma dx + (gamma/4) ||u||^2
double potential_J1(const GridFunction& u, const fem::SymTridiag& stiffness,
                    const fem::SymTridiag& mass, double gamma);

// ln lambda* = I1(u) / (gamma ||u||^2): the unique root of I1(lambda u) in
// lambda > 0. Requires ||grad u|| != 0.
double lambda_star_log(const GridFunction& u, const fem::SymTridiag& stiffness,
                       const fem::SymTridiag& mass, double gamma);

// lambda* itself, cross-checked against a bisection root of the directly
// evaluated I1(lambda u). Throws std::domain_error when the gradient
// precondition fails or when lambda* is too large for the scaled function to
// be representable in doubles (the closed-form log is still available via
// lambda_star_log); throws std::runtime_error when closed form and bisection
// disagree by 1e-6 relative.
double lambda_star(const GridFunction& u, const fem::SymTridiag& stiffness,
                   const fem::SymTridiag& mass, double gamma);

// Explicit lower bound (e/4) sqrt(2 pi / gamma) on the well depth. Pure
// formula; the admissible range of gamma is enforced by the configuration
// layer.
double depth_lower_bound(double gamma);

WellStatus well_status(const GridFunction& u, const fem::SymTridiag& stiffness,
                       const fem::SymTridiag& mass, double gamma);

}  // namespace logwave::nonlin
