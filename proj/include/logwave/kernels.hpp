#pragma once

#include <cstddef>
#include <string_view>

// Inner-loop kernels shared by the assembly, nonlinearity and analysis code.
//
// Every kernel exists in a scalar reference form and, on x86-64 with AVX2,
// in a vectorized form. The active backend is picked once at startup from
// CPUID and can be overridden with the environment variable
// LOGWAVE_SIMD=scalar|avx2. Both backends are equivalence-tested against
// each other; results differ only at the reassociation/ulp level.
//
// Array conventions: `values` holds the nodal values of a piecewise-linear
// function on a uniform mesh, boundary nodes included, so an array of
// n_elems+1 entries describes n_elems elements of width h.

namespace logwave::kernels {

inline constexpr std::size_t gauss_points = 5;

struct Backend {
    const char* name;

    // sum over elements of \int u(x)^2 (ln|u(x)| - shift) dx with 5-point
    // Gauss-Legendre per element; points where u==0 contribute 0.
    double (*log_quad)(const double* values, std::size_t n_elems, double h,
                       double shift);

    // Accumulates the hat-basis load N_j = gamma * \int u ln|u| w_j dx into
    // out[0..n_elems], indexed by node. Boundary entries are written but
    // belong to no basis function; callers read out[1..n_elems-1].
    void (*log_load)(const double* values, std::size_t n_elems, double h,
                     double gamma, double* out);

    double (*dot)(const double* x, const double* y, std::size_t n);

    // v^T A v for a symmetric tridiagonal A with diagonal d[0..n) and
    // off-diagonal o[0..n-1).
    double (*tridiag_quad)(const double* d, const double* o, const double* v,
                           std::size_t n);

    // y = A v, same matrix layout.
    void (*tridiag_matvec)(const double* d, const double* o, const double* v,
                           std::size_t n, double* y);
};

const Backend& scalar_backend();

// Null when the binary was built without AVX2 support or the CPU lacks it.
const Backend* avx2_backend();

const Backend& active();
void set_active(const Backend& b);   // test hook

// Name of the backend `active()` would pick from scratch (honours the env
// override); useful for logging.
std::string_view default_backend_name();

}  // namespace logwave::kernels
