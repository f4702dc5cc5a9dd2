#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

// The ambient cylinder Omega x (0,T), the expanding family {Omega_t} and the
// indicator of the penalized complement. All value types; everything here is
// side-effect free and safe to share across sweep workers.

namespace logwave::geometry {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool empty() const { return hi <= lo; }
};

enum class FamilyKind { Constant, Linear, Saturating, Custom };

// Time-parametrized interval family Omega_t = (left(t), right(t)) inside a
// fixed ambient interval. The parametric kinds are monotone (expanding) by
// construction; Custom families must pass verify_monotone before being used
// in a simulation.
class MovingDomainFamily {
public:
    MovingDomainFamily(Interval ambient, double horizon,
                       std::function<double(double)> left,
                       std::function<double(double)> right,
                       FamilyKind kind = FamilyKind::Custom);

    static MovingDomainFamily constant(Interval ambient, double horizon,
                                       double left0, double right0);
    // left(t) = max(x_lo, left0 - left_rate t), right(t) = min(x_hi, right0 + right_rate t)
    static MovingDomainFamily linear(Interval ambient, double horizon,
                                     double left0, double right0,
                                     double left_rate, double right_rate);
    // right(t) = right_inf - (right_inf - right0) e^{-rate t}, left mirrored
    static MovingDomainFamily saturating(Interval ambient, double horizon,
                                         double left0, double left_inf,
                                         double right0, double right_inf,
                                         double rate);

    const Interval& ambient() const { return ambient_; }
    double horizon() const { return horizon_; }
    FamilyKind kind() const { return kind_; }

    double left(double t) const { return left_(t); }
    double right(double t) const { return right_(t); }
    Interval domain_at(double t) const { return {left_(t), right_(t)}; }

private:
    Interval ambient_;
    double horizon_;
    std::function<double(double)> left_;
    std::function<double(double)> right_;
    FamilyKind kind_;
};

// chi(x,t): 1 outside Omega_t (boundary points included), 0 strictly inside.
// Throws std::domain_error when x is outside the ambient interval or t is
// outside [0, horizon].
int indicator(double x, double t, const MovingDomainFamily& fam);

struct MonotoneReport {
    bool ok = true;
    // violating consecutive sample pair when !ok
    double t1 = 0.0;
    double t2 = 0.0;
    std::string what;
};

// Checks hypothesis (H1) on a sorted sample grid: left non-increasing and
// right non-decreasing. Throws std::invalid_argument on an empty grid.
MonotoneReport verify_monotone(const MovingDomainFamily& fam,
                               const std::vector<double>& samples);

struct Overlap {
    std::array<Interval, 2> piece{};
    int count = 0;

    double total_length() const {
        double s = 0.0;
        for (int i = 0; i < count; ++i) s += piece[i].length();
        return s;
    }
};

// The portion of `cell` lying outside Omega_t (where chi = 1), as exact
// interval endpoints: zero, one or two pieces.
Overlap overlap(const MovingDomainFamily& fam, double t, Interval cell);

}  // namespace logwave::geometry
