#include "logwave/kernels.hpp"

#include <cmath>

// Reference implementations. Plain loops, libm log. These are the ground
// truth the vector backends are tested against.

namespace logwave::kernels {

namespace {

// 5-point Gauss-Legendre on [0,1].
constexpr double kNode[5] = {
    0.5 - 0.5 * 0.906179845938663993,
    0.5 - 0.5 * 0.538469310105683091,
    0.5,
    0.5 + 0.5 * 0.538469310105683091,
    0.5 + 0.5 * 0.906179845938663993,
};
constexpr double kWeight[5] = {
    0.5 * 0.236926885056189088,
    0.5 * 0.478628670499366468,
    0.5 * 0.568888888888888889,
    0.5 * 0.478628670499366468,
    0.5 * 0.236926885056189088,
};

double log_quad_scalar(const double* values, std::size_t n_elems, double h,
                       double shift) {
    double acc = 0.0;
    for (std::size_t e = 0; e < n_elems; ++e) {
        const double a = values[e];
        const double b = values[e + 1];
        double elem = 0.0;
        for (std::size_t q = 0; q < gauss_points; ++q) {
            const double u = a + (b - a) * kNode[q];
            if (u == 0.0) continue;   // continuous extension of u^2 ln|u|
            elem += kWeight[q] * u * u * (std::log(std::fabs(u)) - shift);
        }
        acc += h * elem;
    }
    return acc;
}

void log_load_scalar(const double* values, std::size_t n_elems, double h,
                     double gamma, double* out) {
    for (std::size_t e = 0; e < n_elems; ++e) {
        const double a = values[e];
        const double b = values[e + 1];
        double left = 0.0;
        double right = 0.0;
        for (std::size_t q = 0; q < gauss_points; ++q) {
            const double s = kNode[q];
            const double u = a + (b - a) * s;
            if (u == 0.0) continue;
            const double f = kWeight[q] * u * std::log(std::fabs(u));
            left += f * (1.0 - s);
            right += f * s;
        }
        out[e] += h * gamma * left;
        out[e + 1] += h * gamma * right;
    }
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

double tridiag_quad_scalar(const double* d, const double* o, const double* v,
                           std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += d[i] * v[i] * v[i];
    double cross = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) cross += o[i] * v[i] * v[i + 1];
    return acc + 2.0 * cross;
}

void tridiag_matvec_scalar(const double* d, const double* o, const double* v,
                           std::size_t n, double* y) {
    if (n == 0) return;
    if (n == 1) {
        y[0] = d[0] * v[0];
        return;
    }
    y[0] = d[0] * v[0] + o[0] * v[1];
    for (std::size_t i = 1; i + 1 < n; ++i)
        y[i] = o[i - 1] * v[i - 1] + d[i] * v[i] + o[i] * v[i + 1];
    y[n - 1] = o[n - 2] * v[n - 2] + d[n - 1] * v[n - 1];
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend b{"scalar",        log_quad_scalar,
                           log_load_scalar, dot_scalar,
                           tridiag_quad_scalar, tridiag_matvec_scalar};
    return b;
}

}  // namespace logwave::kernels
