#pragma once

#include <cstddef>
#include <vector>

// Symmetric tridiagonal matrices: the only matrix structure produced by the
// hat-function discretization. Quadratic forms and matvecs route through the
// kernel backends; the LDL^T factorization is inherently sequential and stays
// scalar.

namespace logwave::fem {

struct SymTridiag {
    std::vector<double> diag;   // n entries
    std::vector<double> off;    // n-1 entries

    SymTridiag() = default;
    explicit SymTridiag(std::size_t n) : diag(n, 0.0), off(n ? n - 1 : 0, 0.0) {}

    std::size_t size() const { return diag.size(); }

    double quadform(const std::vector<double>& v) const;
    void matvec(const std::vector<double>& v, std::vector<double>& y) const;

    // this += c * other (same size)
    void add_scaled(const SymTridiag& other, double c);
    void scale(double c);
};

SymTridiag operator+(const SymTridiag& a, const SymTridiag& b);

// LDL^T factorization of a symmetric positive definite tridiagonal matrix.
class TridiagLDLT {
public:
    explicit TridiagLDLT(const SymTridiag& a);

    void solve(const std::vector<double>& rhs, std::vector<double>& x) const;

    // Pivots d_i of the factorization; all positive iff the matrix is
    // positive definite (used by the Loewner-order checks).
    const std::vector<double>& pivots() const { return d_; }

private:
    std::vector<double> d_;   // pivots
    std::vector<double> l_;   // subdiagonal multipliers
};

}  // namespace logwave::fem
