#pragma once

#include <cstddef>

#include "logwave/assembly.hpp"
#include "logwave/lognonlin.hpp"

namespace logwave::analysis {

// Per-snapshot energy decomposition. E is the continuous energy of the
// problem, E_pen adds the penalty term, E_plus removes the sign-indefinite
// logarithmic part:
//   E      = kinetic + dirichlet + mass - log_term + gamma_term
//   E_pen  = E + penalty
//   E_plus = E_pen + log_term
struct EnergyReport {
    double t = 0.0;
    double kinetic = 0.0;      // 1/2 ||u'||^2
    double dirichlet = 0.0;    // 1/2 ||grad u||^2
    double mass = 0.0;         // (b/2) ||u||^2
    double log_term = 0.0;     // 1/2 \int u^2 ln|u|^gamma dx
    double gamma_term = 0.0;   // (gamma/4) ||u||^2
    double penalty = 0.0;      // 1/(2 eps) ||chi u||^2
    double E = 0.0;
    double E_pen = 0.0;
    double E_plus = 0.0;
    double I1 = 0.0;
    double J1 = 0.0;
    bool in_well = false;
    double penalty_l2sq = 0.0;   // ||chi u||^2 itself, without the 1/eps
};

struct EnergyParams {
    double b = 1.0;
    double gamma = 0.5;
    double epsilon = 1e-3;
};

EnergyReport energy_report(const std::vector<double>& g,
                           const std::vector<double>& v, double t,
                           const fem::AssembledSystem& sys,
                           const fem::SymTridiag& mchi_t,
                           const EnergyParams& par);

}  // namespace logwave::analysis
