#pragma once

#include <cstddef>
#include <vector>

#include "logwave/geometry.hpp"

namespace logwave::fem {

// Uniform mesh of the ambient interval with m interior nodes. The Galerkin
// basis is the m interior hat functions; the two boundary nodes carry the
// homogeneous Dirichlet condition.
struct Mesh1D {
    double x_lo = 0.0;
    double x_hi = 1.0;
    std::size_t m = 1;   // interior nodes = Galerkin dimension

    double h() const { return (x_hi - x_lo) / static_cast<double>(m + 1); }
    std::size_t n_nodes() const { return m + 2; }
    std::size_t n_elems() const { return m + 1; }
    double node(std::size_t i) const {
        return x_lo + static_cast<double>(i) * h();
    }
    std::vector<double> nodes() const;

    geometry::Interval element(std::size_t e) const {
        return {node(e), node(e + 1)};
    }

    // Piecewise-linear evaluation from a full nodal-value array
    // (n_nodes entries, boundary values included).
    double eval(const std::vector<double>& nodal, double x) const;
};

// Throws std::invalid_argument when m == 0 or the interval is degenerate.
Mesh1D build_mesh(geometry::Interval ambient, std::size_t m);

}  // namespace logwave::fem
