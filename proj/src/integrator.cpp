#include "logwave/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "logwave/kernels.hpp"

namespace logwave::integrator {

namespace {

constexpr double pi = 3.14159265358979323846;

bool all_finite(const std::vector<double>& x) {
    return std::all_of(x.begin(), x.end(),
                       [](double c) { return std::isfinite(c); });
}

double norm2(const std::vector<double>& x) {
    if (x.empty()) return 0.0;
    return kernels::active().dot(x.data(), x.data(), x.size());
}

}  // namespace

geometry::MovingDomainFamily DomainSpec::make_family(double horizon) const {
    const geometry::Interval amb{x_lo, x_hi};
    switch (kind) {
        case geometry::FamilyKind::Constant:
            return geometry::MovingDomainFamily::constant(amb, horizon, left0,
                                                          right0);
        case geometry::FamilyKind::Linear:
            return geometry::MovingDomainFamily::linear(
                amb, horizon, left0, right0, left_rate, right_rate);
        case geometry::FamilyKind::Saturating:
            return geometry::MovingDomainFamily::saturating(
                amb, horizon, left0, left_inf, right0, right_inf, rate);
        case geometry::FamilyKind::Custom:
            return geometry::MovingDomainFamily(amb, horizon, left_fn,
                                                right_fn);
    }
    throw std::invalid_argument("domain.kind: unknown family kind");
}

std::function<double(double)> InitialSpec::make(double l0, double r0) const {
    switch (kind) {
        case Kind::Zero:
            return [](double) { return 0.0; };
        case Kind::Sine: {
            const double amp_ = amp;
            const double k = static_cast<double>(mode) * pi / (r0 - l0);
            return [amp_, k, l0](double x) {
                return amp_ * std::sin(k * (x - l0));
            };
        }
        case Kind::Custom:
            return fn;
    }
    throw std::invalid_argument("initial: unknown kind");
}

void SimConfig::validate() const {
    auto fail = [](const std::string& field, const std::string& why) {
        throw std::invalid_argument(field + ": " + why);
    };
    if (!(a > 0.0)) fail("a", "must be > 0");
    if (!(b > 0.0)) fail("b", "must be > 0");
    if (!(gamma > 0.0 && gamma < 1.0)) fail("gamma", "must satisfy 0 < gamma < 1");
    if (!(epsilon > 0.0)) fail("epsilon", "must be > 0");
    if (m < 1) fail("m", "must be >= 1");
    if (!(T > 0.0)) fail("T", "must be > 0");
    if (dt < 0.0) fail("dt", "must be >= 0 (0 selects the default)");
    if (dt > T) fail("dt", "must satisfy dt <= T");
    if (picard_iters < 1) fail("picard_iters", "must be >= 1");
    if (!(picard_tol > 0.0)) fail("picard_tol", "must be > 0");
    if (!(domain.x_lo < domain.x_hi)) fail("domain", "x_lo < x_hi required");
}

double SimConfig::requested_dt() const {
    if (dt > 0.0) return dt;
    return std::min(0.5 * mesh_h(), T / 2000.0);
}

StepResult step(const SimState& state, const fem::AssembledSystem& sys,
                const fem::SymTridiag& mchi_mid, const SimConfig& cfg) {
    const std::size_t n = state.g.size();
    const double dt = cfg.dt > 0.0 ? cfg.dt : cfg.requested_dt();
    const double gamma = cfg.gamma;

    // A_mid = K + b M + (1/eps) Mchi(t_mid)
    fem::SymTridiag a_mid = sys.stiffness;
    a_mid.add_scaled(sys.mass, cfg.b);
    a_mid.add_scaled(mchi_mid, 1.0 / cfg.epsilon);

    // B = (1 + a dt/2) M + (dt^2/4) A_mid
    fem::SymTridiag b_op = sys.mass;
    b_op.scale(1.0 + 0.5 * cfg.a * dt);
    b_op.add_scaled(a_mid, 0.25 * dt * dt);
    const fem::TridiagLDLT factor(b_op);

    // rhs_base = M v_n - (dt/2) A_mid g_n
    std::vector<double> rhs_base;
    sys.mass.matvec(state.v, rhs_base);
    std::vector<double> tmp;
    a_mid.matvec(state.g, tmp);
    for (std::size_t i = 0; i < n; ++i) rhs_base[i] -= 0.5 * dt * tmp[i];

    const bool use_dg =
        cfg.log_source_enabled &&
        cfg.nonlinear_update == NonlinearUpdate::DiscreteGradient;
    const double phi_n =
        use_dg ? nonlin::log_potential({sys.mesh, state.g}, gamma, sys.mass)
               : 0.0;

    // midpoint predictor
    std::vector<double> g_mid(n);
    for (std::size_t i = 0; i < n; ++i)
        g_mid[i] = state.g[i] + 0.5 * dt * state.v[i];

    std::vector<double> v_mid(n, 0.0);
    std::vector<double> load(n, 0.0);
    std::vector<double> g1(n), dg(n), rhs(n), g_mid_new;
    double rel = 0.0;
    int iters = 0;

    for (int k = 0; k < cfg.picard_iters; ++k) {
        ++iters;
        if (cfg.log_source_enabled) {
            load = nonlin::nonlinear_load({sys.mesh, g_mid}, gamma);
            if (use_dg) {
                for (std::size_t i = 0; i < n; ++i) {
                    g1[i] = 2.0 * g_mid[i] - state.g[i];
                    dg[i] = g1[i] - state.g[i];
                }
                const double den = norm2(dg);
                if (den > 0.0) {
                    const double phi1 =
                        nonlin::log_potential({sys.mesh, g1}, gamma, sys.mass);
                    const double alpha =
                        (phi1 - phi_n -
                         kernels::active().dot(dg.data(), load.data(), n)) /
                        den;
                    for (std::size_t i = 0; i < n; ++i)
                        load[i] += alpha * dg[i];
                }
            }
        }
        rhs = rhs_base;
        for (std::size_t i = 0; i < n; ++i) rhs[i] += 0.5 * dt * load[i];
        factor.solve(rhs, v_mid);

        g_mid_new.resize(n);
        double diff2 = 0.0;
        double size2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            g_mid_new[i] = state.g[i] + 0.5 * dt * v_mid[i];
            const double d = g_mid_new[i] - g_mid[i];
            diff2 += d * d;
            size2 += g_mid_new[i] * g_mid_new[i];
        }
        g_mid.swap(g_mid_new);
        rel = size2 > 0.0 ? std::sqrt(diff2 / size2) : std::sqrt(diff2);
        if (rel <= cfg.picard_tol) break;
        if (!cfg.log_source_enabled) break;   // linear step needs one solve
    }

    if (cfg.log_source_enabled && rel > 10.0 * cfg.picard_tol) {
        std::ostringstream os;
        os << "Picard did not converge at t=" << state.t << ": residual "
           << rel << " after " << iters << " iterations";
        throw StepError(state.t, rel, os.str());
    }

    StepResult out;
    out.next.t = state.t + dt;
    out.next.g.resize(n);
    out.next.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.next.g[i] = state.g[i] + dt * v_mid[i];
        out.next.v[i] = 2.0 * v_mid[i] - state.v[i];
    }
    out.v_mid_M2 = sys.mass.quadform(v_mid);
    out.iters = iters;
    out.residual = rel;

    if (!all_finite(out.next.g) || !all_finite(out.next.v)) {
        std::ostringstream os;
        os << "non-finite coefficients after step from t=" << state.t;
        throw DivergenceError(state.t, os.str());
    }
    return out;
}

Trajectory simulate(const SimConfig& cfg) {
    cfg.validate();
    const geometry::MovingDomainFamily fam = cfg.domain.make_family(cfg.T);
    if (fam.kind() == geometry::FamilyKind::Custom) {
        std::vector<double> samples(513);
        for (std::size_t i = 0; i < samples.size(); ++i)
            samples[i] = cfg.T * double(i) / double(samples.size() - 1);
        const auto rep = geometry::verify_monotone(fam, samples);
        if (!rep.ok)
            throw std::invalid_argument("domain: custom family fails H1: " +
                                        rep.what);
        for (double t : samples) {
            const auto iv = fam.domain_at(t);
            if (!(cfg.x_lo() <= iv.lo && iv.lo < iv.hi && iv.hi <= cfg.x_hi()))
                throw std::invalid_argument(
                    "domain: custom family leaves the ambient interval");
        }
    }

    const fem::Mesh1D mesh = fem::build_mesh({cfg.x_lo(), cfg.x_hi()}, cfg.m);
    const fem::AssembledSystem sys = fem::assemble(mesh);

    const double l0 = fam.left(0.0);
    const double r0 = fam.right(0.0);
    auto [g0, v0] = fem::project_initial(cfg.u0.make(l0, r0),
                                         cfg.u1.make(l0, r0), mesh, fam,
                                         cfg.projection);

    const double req = cfg.requested_dt();
    const auto n_steps =
        static_cast<std::size_t>(std::ceil(cfg.T / req - 1e-9));
    const double dt = cfg.T / static_cast<double>(n_steps);

    SimConfig step_cfg = cfg;
    step_cfg.dt = dt;

    Trajectory traj;
    traj.config = cfg;
    traj.dt = dt;
    traj.steps.reserve(n_steps + 1);

    const analysis::EnergyParams epar{cfg.b, cfg.gamma, cfg.epsilon};

    auto record = [&](SimState&& st, double v_mid_m2, int iters, double resid,
                      double diss_accum) {
        TrajStep ts;
        const fem::SymTridiag mchi =
            fem::assemble_penalty(mesh, fam, st.t);
        ts.report = analysis::energy_report(st.g, st.v, st.t, sys, mchi, epar);
        ts.v_mid_M2 = v_mid_m2;
        ts.diss_accum = diss_accum;
        ts.picard_iters = iters;
        ts.picard_residual = resid;
        ts.apriori = 2.0 * ts.report.kinetic + 2.0 * ts.report.dirichlet +
                     sys.mass.quadform(st.g) +
                     ts.report.penalty_l2sq / cfg.epsilon + diss_accum;
        ts.state = std::move(st);
        traj.steps.push_back(std::move(ts));
        traj.apriori_max = std::max(traj.apriori_max, ts.apriori);
        traj.max_penalty_l2sq =
            std::max(traj.max_penalty_l2sq, traj.steps.back().report.penalty_l2sq);
    };

    record(SimState{0.0, std::move(g0), std::move(v0)}, 0.0, 0, 0.0, 0.0);

    double diss_accum = 0.0;
    for (std::size_t k = 0; k < n_steps; ++k) {
        const SimState& cur = traj.steps.back().state;
        const double t_mid = (static_cast<double>(k) + 0.5) * dt;
        const fem::SymTridiag mchi_mid = fem::assemble_penalty(mesh, fam, t_mid);
        try {
            StepResult sr = step(cur, sys, mchi_mid, step_cfg);
            sr.next.t = static_cast<double>(k + 1) * dt;
            diss_accum += 2.0 * cfg.a * dt * sr.v_mid_M2;
            record(std::move(sr.next), sr.v_mid_M2, sr.iters, sr.residual,
                   diss_accum);
        } catch (const StepError& e) {
            traj.status = RunStatus::StepFailed;
            traj.fail_time = e.time;
            traj.fail_reason = e.what();
            return traj;
        } catch (const DivergenceError& e) {
            traj.status = RunStatus::Diverged;
            traj.fail_time = e.time;
            traj.fail_reason = e.what();
            return traj;
        }
    }
    return traj;
}

}  // namespace logwave::integrator
