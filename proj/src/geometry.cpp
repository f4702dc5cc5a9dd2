#include "logwave/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace logwave::geometry {

namespace {

void check_interval(const Interval& iv, const char* what) {
    if (!(iv.lo < iv.hi))
        throw std::invalid_argument(std::string(what) +
                                    ": interval must satisfy lo < hi");
}

}  // namespace

MovingDomainFamily::MovingDomainFamily(Interval ambient, double horizon,
                                       std::function<double(double)> left,
                                       std::function<double(double)> right,
                                       FamilyKind kind)
    : ambient_(ambient),
      horizon_(horizon),
      left_(std::move(left)),
      right_(std::move(right)),
      kind_(kind) {
    check_interval(ambient_, "ambient");
    if (!(horizon_ > 0.0))
        throw std::invalid_argument("horizon must be positive");
    if (!left_ || !right_)
        throw std::invalid_argument("left/right functions must be callable");
}

MovingDomainFamily MovingDomainFamily::constant(Interval ambient,
                                                double horizon, double left0,
                                                double right0) {
    if (!(ambient.lo <= left0 && left0 < right0 && right0 <= ambient.hi))
        throw std::invalid_argument(
            "constant family: need x_lo <= left0 < right0 <= x_hi");
    return MovingDomainFamily(
        ambient, horizon, [left0](double) { return left0; },
        [right0](double) { return right0; }, FamilyKind::Constant);
}

MovingDomainFamily MovingDomainFamily::linear(Interval ambient, double horizon,
                                              double left0, double right0,
                                              double left_rate,
                                              double right_rate) {
    if (!(ambient.lo <= left0 && left0 < right0 && right0 <= ambient.hi))
        throw std::invalid_argument(
            "linear family: need x_lo <= left0 < right0 <= x_hi");
    if (left_rate < 0.0 || right_rate < 0.0)
        throw std::invalid_argument(
            "linear family: rates must be >= 0 (H1 expansion)");
    const double lo = ambient.lo;
    const double hi = ambient.hi;
    return MovingDomainFamily(
        ambient, horizon,
        [left0, left_rate, lo](double t) {
            return std::max(lo, left0 - left_rate * t);
        },
        [right0, right_rate, hi](double t) {
            return std::min(hi, right0 + right_rate * t);
        },
        FamilyKind::Linear);
}

MovingDomainFamily MovingDomainFamily::saturating(Interval ambient,
                                                  double horizon, double left0,
                                                  double left_inf,
                                                  double right0,
                                                  double right_inf,
                                                  double rate) {
    if (!(ambient.lo <= left_inf && left_inf <= left0 && left0 < right0 &&
          right0 <= right_inf && right_inf <= ambient.hi))
        throw std::invalid_argument(
            "saturating family: need x_lo <= left_inf <= left0 < right0 <= "
            "right_inf <= x_hi");
    if (rate < 0.0)
        throw std::invalid_argument("saturating family: rate must be >= 0");
    return MovingDomainFamily(
        ambient, horizon,
        [left0, left_inf, rate](double t) {
            return left_inf + (left0 - left_inf) * std::exp(-rate * t);
        },
        [right0, right_inf, rate](double t) {
            return right_inf - (right_inf - right0) * std::exp(-rate * t);
        },
        FamilyKind::Saturating);
}

int indicator(double x, double t, const MovingDomainFamily& fam) {
    const Interval& amb = fam.ambient();
    if (!(x >= amb.lo && x <= amb.hi)) {
        std::ostringstream os;
        os << "indicator: x=" << x << " outside ambient [" << amb.lo << ","
           << amb.hi << "]";
        throw std::domain_error(os.str());
    }
    if (!(t >= 0.0 && t <= fam.horizon())) {
        std::ostringstream os;
        os << "indicator: t=" << t << " outside [0," << fam.horizon() << "]";
        throw std::domain_error(os.str());
    }
    return (fam.left(t) < x && x < fam.right(t)) ? 0 : 1;
}

MonotoneReport verify_monotone(const MovingDomainFamily& fam,
                               const std::vector<double>& samples) {
    if (samples.empty())
        throw std::invalid_argument("verify_monotone: empty sample list");
    MonotoneReport rep;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const double t1 = samples[i];
        const double t2 = samples[i + 1];
        const double l1 = fam.left(t1), l2 = fam.left(t2);
        const double r1 = fam.right(t1), r2 = fam.right(t2);
        if (l2 > l1 || r2 < r1) {
            rep.ok = false;
            rep.t1 = t1;
            rep.t2 = t2;
            std::ostringstream os;
            os << "H1 violated between t=" << t1 << " and t=" << t2
               << ": left " << l1 << "->" << l2 << ", right " << r1 << "->"
               << r2;
            rep.what = os.str();
            return rep;
        }
    }
    return rep;
}

Overlap overlap(const MovingDomainFamily& fam, double t, Interval cell) {
    const Interval& amb = fam.ambient();
    if (!(cell.lo >= amb.lo && cell.hi <= amb.hi && cell.lo <= cell.hi))
        throw std::domain_error("overlap: cell not contained in ambient");
    Overlap out;
    const double l = fam.left(t);
    const double r = fam.right(t);
    const Interval left_piece{cell.lo, std::min(cell.hi, l)};
    if (!left_piece.empty()) out.piece[out.count++] = left_piece;
    const Interval right_piece{std::max(cell.lo, r), cell.hi};
    if (!right_piece.empty()) out.piece[out.count++] = right_piece;
    return out;
}

}  // namespace logwave::geometry
