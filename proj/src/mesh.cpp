#include "logwave/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logwave::fem {

std::vector<double> Mesh1D::nodes() const {
    std::vector<double> xs(n_nodes());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = node(i);
    xs.front() = x_lo;
    xs.back() = x_hi;
    return xs;
}

double Mesh1D::eval(const std::vector<double>& nodal, double x) const {
    const double spacing = h();
    auto idx = static_cast<std::ptrdiff_t>(std::floor((x - x_lo) / spacing));
    idx = std::clamp<std::ptrdiff_t>(idx, 0,
                                     static_cast<std::ptrdiff_t>(n_elems()) - 1);
    const auto e = static_cast<std::size_t>(idx);
    const double s = (x - node(e)) / spacing;
    return nodal[e] + (nodal[e + 1] - nodal[e]) * s;
}

Mesh1D build_mesh(geometry::Interval ambient, std::size_t m) {
    if (m == 0) throw std::invalid_argument("build_mesh: m must be >= 1");
    if (!(ambient.lo < ambient.hi))
        throw std::invalid_argument("build_mesh: ambient must satisfy lo < hi");
    return Mesh1D{ambient.lo, ambient.hi, m};
}

}  // namespace logwave::fem
