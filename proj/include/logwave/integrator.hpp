#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logwave/assembly.hpp"
#include "logwave/energy.hpp"
#include "logwave/geometry.hpp"

// Time integration of the penalized Galerkin system
//   M g'' + a M g' + (K + b M + (1/eps) Mchi(t)) g = N(g),
// one implicit-midpoint step at a time, penalty matrix evaluated at the
// midpoint time and treated fully implicitly so the 1/eps stiffness never
// restricts dt.

namespace logwave::integrator {

struct DomainSpec {
    geometry::FamilyKind kind = geometry::FamilyKind::Constant;
    double x_lo = 0.0;
    double x_hi = 1.0;
    double left0 = 0.0;
    double right0 = 1.0;
    double left_rate = 0.0;    // linear
    double right_rate = 0.0;   // linear
    double left_inf = 0.0;     // saturating
    double right_inf = 1.0;    // saturating
    double rate = 0.0;         // saturating
    std::function<double(double)> left_fn;    // custom
    std::function<double(double)> right_fn;   // custom

    geometry::MovingDomainFamily make_family(double horizon) const;
};

struct InitialSpec {
    enum class Kind { Zero, Sine, Custom };
    Kind kind = Kind::Zero;
    double amp = 0.0;
    int mode = 1;
    std::function<double(double)> fn;

    // The pointwise function on Omega_0 = (l0, r0); sine modes vanish at
    // both endpoints so the zero extension stays continuous.
    std::function<double(double)> make(double l0, double r0) const;
};

// How the logarithmic load enters the midpoint step. Midpoint evaluates
// N(g_mid) directly; DiscreteGradient adds the Gonzalez rank-one correction
// along g_{n+1}-g_n so the discrete energy identity holds to roundoff
// instead of O(dt^3) per step.
enum class NonlinearUpdate { Midpoint, DiscreteGradient };

struct SimConfig {
    double a = 1.0;
    double b = 1.0;
    double gamma = 0.5;
    double epsilon = 1e-3;
    std::size_t m = 100;
    double dt = 0.0;   // 0 = default min(h/2, T/2000)
    double T = 10.0;
    DomainSpec domain;
    InitialSpec u0;
    InitialSpec u1;
    fem::Projection projection = fem::Projection::Interpolate;
    int picard_iters = 8;
    double picard_tol = 1e-10;
    NonlinearUpdate nonlinear_update = NonlinearUpdate::DiscreteGradient;
    bool log_source_enabled = true;   // in-process switch for linear studies

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    double mesh_h() const { return (x_hi() - x_lo()) / double(m + 1); }
    double x_lo() const { return domain.x_lo; }
    double x_hi() const { return domain.x_hi; }
    double requested_dt() const;
};

struct SimState {
    double t = 0.0;
    std::vector<double> g;
    std::vector<double> v;
};

struct StepResult {
    SimState next;
    double v_mid_M2 = 0.0;       // ||v_mid||_M^2, the dissipation density
    int iters = 0;
    double residual = 0.0;       // last relative midpoint increment
};

// Picard failed to reach 10x picard_tol within picard_iters.
class StepError : public std::runtime_error {
public:
    StepError(double time, double residual, const std::string& what)
        : std::runtime_error(what), time(time), residual(residual) {}
    double time;
    double residual;
};

// A non-finite coefficient appeared; the last finite snapshot is preserved
// in the trajectory.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(double time, const std::string& what)
        : std::runtime_error(what), time(time) {}
    double time;
};

StepResult step(const SimState& state, const fem::AssembledSystem& sys,
                const fem::SymTridiag& mchi_mid, const SimConfig& cfg);

enum class RunStatus { Ok, StepFailed, Diverged };

struct TrajStep {
    SimState state;
    analysis::EnergyReport report;
    double v_mid_M2 = 0.0;     // of the step that produced this state
    double diss_accum = 0.0;   // 2a * sum dt ||v_mid||_M^2 up to this state
    double apriori = 0.0;      // (1.12)-style sum at this state
    int picard_iters = 0;
    double picard_residual = 0.0;
};

struct Trajectory {
    SimConfig config;
    double dt = 0.0;
    std::vector<TrajStep> steps;   // uniform grid t_k = k dt
    RunStatus status = RunStatus::Ok;
    double fail_time = 0.0;
    std::string fail_reason;

    double apriori_max = 0.0;
    double max_penalty_l2sq = 0.0;   // max_t ||chi u||^2

    double t_end() const { return steps.empty() ? 0.0 : steps.back().state.t; }
};

// Full run: mesh + assembly + initial projection + stepping with one
// EnergyReport per step. Deterministic given cfg. Step failures and
// divergence truncate the trajectory and set `status`; configuration
// problems throw.
Trajectory simulate(const SimConfig& cfg);

}  // namespace logwave::integrator
