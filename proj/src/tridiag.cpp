#include "logwave/tridiag.hpp"

#include <cassert>
#include <stdexcept>

#include "logwave/kernels.hpp"

namespace logwave::fem {

double SymTridiag::quadform(const std::vector<double>& v) const {
    assert(v.size() == size());
    if (size() == 0) return 0.0;
    return kernels::active().tridiag_quad(diag.data(), off.data(), v.data(),
                                          size());
}

void SymTridiag::matvec(const std::vector<double>& v,
                        std::vector<double>& y) const {
    assert(v.size() == size());
    y.resize(size());
    if (size() == 0) return;
    kernels::active().tridiag_matvec(diag.data(), off.data(), v.data(), size(),
                                     y.data());
}

void SymTridiag::add_scaled(const SymTridiag& other, double c) {
    assert(other.size() == size());
    for (std::size_t i = 0; i < diag.size(); ++i) diag[i] += c * other.diag[i];
    for (std::size_t i = 0; i < off.size(); ++i) off[i] += c * other.off[i];
}

void SymTridiag::scale(double c) {
    for (double& x : diag) x *= c;
    for (double& x : off) x *= c;
}

SymTridiag operator+(const SymTridiag& a, const SymTridiag& b) {
    SymTridiag r = a;
    r.add_scaled(b, 1.0);
    return r;
}

TridiagLDLT::TridiagLDLT(const SymTridiag& a)
    : d_(a.diag), l_(a.off.size(), 0.0) {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(d_[i] > 0.0))
            throw std::runtime_error(
                "TridiagLDLT: matrix is not positive definite");
        l_[i] = a.off[i] / d_[i];
        d_[i + 1] -= l_[i] * a.off[i];
    }
    if (n > 0 && !(d_[n - 1] > 0.0))
        throw std::runtime_error(
            "TridiagLDLT: matrix is not positive definite");
}

void TridiagLDLT::solve(const std::vector<double>& rhs,
                        std::vector<double>& x) const {
    const std::size_t n = d_.size();
    assert(rhs.size() == n);
    x = rhs;
    for (std::size_t i = 1; i < n; ++i) x[i] -= l_[i - 1] * x[i - 1];
    for (std::size_t i = 0; i < n; ++i) x[i] /= d_[i];
    for (std::size_t i = n; i-- > 1;) x[i - 1] -= l_[i - 1] * x[i];
}

}  // namespace logwave::fem
