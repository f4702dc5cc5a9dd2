#include "logwave/energy.hpp"

namespace logwave::analysis {

EnergyReport energy_report(const std::vector<double>& g,
                           const std::vector<double>& v, double t,
                           const fem::AssembledSystem& sys,
                           const fem::SymTridiag& mchi_t,
                           const EnergyParams& par) {
    EnergyReport r;
    r.t = t;
    const nonlin::GridFunction u{sys.mesh, g};
    const double norm2 = sys.mass.quadform(g);
    const double grad2 = sys.stiffness.quadform(g);
    const double logint = nonlin::log_integral(u, par.gamma);

    r.kinetic = 0.5 * sys.mass.quadform(v);
    r.dirichlet = 0.5 * grad2;
    r.mass = 0.5 * par.b * norm2;
    r.log_term = 0.5 * logint;
    r.gamma_term = 0.25 * par.gamma * norm2;
    r.penalty_l2sq = mchi_t.quadform(g);
    r.penalty = 0.5 / par.epsilon * r.penalty_l2sq;

    r.E = r.kinetic + r.dirichlet + r.mass - r.log_term + r.gamma_term;
    r.E_pen = r.E + r.penalty;
    r.E_plus = r.E_pen + r.log_term;

    r.I1 = grad2 - logint;
    r.J1 = 0.5 * grad2 - 0.5 * logint + 0.25 * par.gamma * norm2;
    r.in_well = u.is_zero() ||
                (r.J1 < nonlin::depth_lower_bound(par.gamma) && r.I1 > 0.0);
    return r;
}

}  // namespace logwave::analysis
