#include "logwave/lognonlin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "logwave/kernels.hpp"

namespace logwave::nonlin {

bool GridFunction::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](double c) { return c == 0.0; });
}

std::vector<double> GridFunction::nodal_values() const {
    std::vector<double> vals(mesh.n_nodes(), 0.0);
    std::copy(coeffs.begin(), coeffs.end(), vals.begin() + 1);
    return vals;
}

double f_log(double u, double gamma) {
    if (u == 0.0) return 0.0;
    return gamma * u * std::log(std::fabs(u));
}

double log_shifted_integral(const GridFunction& u, double shift) {
    const std::vector<double> vals = u.nodal_values();
    return kernels::active().log_quad(vals.data(), u.mesh.n_elems(),
                                      u.mesh.h(), shift);
}

double log_integral(const GridFunction& u, double gamma) {
    return gamma * log_shifted_integral(u, 0.0);
}

std::vector<double> nonlinear_load(const GridFunction& u, double gamma) {
    const std::vector<double> vals = u.nodal_values();
    std::vector<double> by_node(u.mesh.n_nodes(), 0.0);
    kernels::active().log_load(vals.data(), u.mesh.n_elems(), u.mesh.h(),
                               gamma, by_node.data());
    return {by_node.begin() + 1, by_node.end() - 1};
}

double log_potential(const GridFunction& u, double gamma,
                     const fem::SymTridiag& mass) {
    return 0.5 * log_integral(u, gamma) -
           0.25 * gamma * mass.quadform(u.coeffs);
}

double nehari_I1(const GridFunction& u, const fem::SymTridiag& stiffness,
                 double gamma) {
    return stiffness.quadform(u.coeffs) - log_integral(u, gamma);
}

double potential_J1(const GridFunction& u, const fem::SymTridiag& stiffness,
                    const fem::SymTridiag& mass, double gamma) {
    return 0.5 * stiffness.quadform(u.coeffs) - 0.5 * log_integral(u, gamma) +
           0.25 * gamma * mass.quadform(u.coeffs);
}

double lambda_star_log(const GridFunction& u, const fem::SymTridiag& stiffness,
                       const fem::SymTridiag& mass, double gamma) {
    const double grad2 = stiffness.quadform(u.coeffs);
    if (!(grad2 > 0.0))
        throw std::domain_error("lambda_star: ||grad u|| must be nonzero");
    const double norm2 = mass.quadform(u.coeffs);
    return (grad2 - log_integral(u, gamma)) / (gamma * norm2);
}

namespace {

double i1_scaled(const GridFunction& u, const fem::SymTridiag& stiffness,
                 double gamma, double lambda) {
    GridFunction s = u;
    for (double& c : s.coeffs) c *= lambda;
    return nehari_I1(s, stiffness, gamma);
}

}  // namespace

double lambda_star(const GridFunction& u, const fem::SymTridiag& stiffness,
                   const fem::SymTridiag& mass, double gamma) {
    const double log_ls = lambda_star_log(u, stiffness, mass, gamma);

    double max_abs = 0.0;
    for (double c : u.coeffs) max_abs = std::max(max_abs, std::fabs(c));
    // The bisection materializes lambda*u and evaluates I1 on it; keep the
    // scaled values (and their squares) representable with margin.
    if (log_ls + std::log(std::max(max_abs, 1e-300)) > 340.0)
        throw std::domain_error(
            "lambda_star: scaled function exceeds double range; use "
            "lambda_star_log");

    const double closed = std::exp(log_ls);

    // Independent root: bisection on ln(lambda) of the directly evaluated
    // I1(lambda u), bracketed around the closed form.
    double lo = log_ls - 2.0;
    double hi = log_ls + 2.0;
    while (!(i1_scaled(u, stiffness, gamma, std::exp(lo)) > 0.0) && lo > -700.0)
        lo -= 2.0;
    while (!(i1_scaled(u, stiffness, gamma, std::exp(hi)) < 0.0) && hi < 700.0)
        hi += 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (i1_scaled(u, stiffness, gamma, std::exp(mid)) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    const double bisected = std::exp(0.5 * (lo + hi));

    if (std::fabs(bisected - closed) > 1e-6 * closed)
        throw std::runtime_error(
            "lambda_star: closed form and bisection disagree beyond 1e-6");
    return closed;
}

double depth_lower_bound(double gamma) {
    return 0.25 * std::exp(1.0) * std::sqrt(2.0 * M_PI / gamma);
}

WellStatus well_status(const GridFunction& u, const fem::SymTridiag& stiffness,
                       const fem::SymTridiag& mass, double gamma) {
    WellStatus ws;
    ws.I1 = nehari_I1(u, stiffness, gamma);
    ws.J1 = potential_J1(u, stiffness, mass, gamma);
    ws.d_bound = depth_lower_bound(gamma);
    ws.in_well = u.is_zero() || (ws.J1 < ws.d_bound && ws.I1 > 0.0);
    return ws;
}

}  // namespace logwave::nonlin
