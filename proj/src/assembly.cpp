#include "logwave/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logwave::fem {

namespace {

// Antiderivatives of the local hat products on an element, in the local
// coordinate s in [0,1]: left hat = 1-s, right hat = s.
double anti_ll(double s) { return s - s * s + s * s * s / 3.0; }
double anti_lr(double s) { return s * s / 2.0 - s * s * s / 3.0; }
double anti_rr(double s) { return s * s * s / 3.0; }

struct ElementMass {
    double ll = 0.0;
    double lr = 0.0;
    double rr = 0.0;
};

// \int over the local sub-interval [s1,s2] of the hat products, times h.
ElementMass partial_mass(double h, double s1, double s2) {
    ElementMass em;
    em.ll = h * (anti_ll(s2) - anti_ll(s1));
    em.lr = h * (anti_lr(s2) - anti_lr(s1));
    em.rr = h * (anti_rr(s2) - anti_rr(s1));
    return em;
}

// Adds the element-local contributions into the global interior-basis
// matrix. Element e has left node e and right node e+1; interior basis
// nodes are 1..m, mapped to rows 0..m-1.
void scatter(SymTridiag& a, std::size_t e, std::size_t m,
             const ElementMass& em) {
    const bool left_in = e >= 1;
    const bool right_in = e + 1 <= m;
    if (left_in) a.diag[e - 1] += em.ll;
    if (right_in) a.diag[e] += em.rr;
    if (left_in && right_in) a.off[e - 1] += em.lr;
}

}  // namespace

AssembledSystem assemble(const Mesh1D& mesh) {
    const std::size_t m = mesh.m;
    const double h = mesh.h();
    AssembledSystem sys{mesh, SymTridiag(m), SymTridiag(m)};
    for (std::size_t e = 0; e < mesh.n_elems(); ++e) {
        scatter(sys.mass, e, m, partial_mass(h, 0.0, 1.0));
        // derivative products are constant on the element
        ElementMass ek{1.0 / h, -1.0 / h, 1.0 / h};
        scatter(sys.stiffness, e, m, ek);
    }
    return sys;
}

SymTridiag assemble_penalty(const Mesh1D& mesh,
                            const geometry::MovingDomainFamily& fam,
                            double t) {
    const std::size_t m = mesh.m;
    const double h = mesh.h();
    SymTridiag mchi(m);
    for (std::size_t e = 0; e < mesh.n_elems(); ++e) {
        const geometry::Interval cell = mesh.element(e);
        const geometry::Overlap ov = geometry::overlap(fam, t, cell);
        for (int p = 0; p < ov.count; ++p) {
            const double s1 = (ov.piece[p].lo - cell.lo) / h;
            const double s2 = (ov.piece[p].hi - cell.lo) / h;
            scatter(mchi, e, m, partial_mass(h, s1, s2));
        }
    }
    return mchi;
}

std::pair<std::vector<double>, std::vector<double>> project_initial(
    const std::function<double(double)>& u0,
    const std::function<double(double)>& u1, const Mesh1D& mesh,
    const geometry::MovingDomainFamily& fam, Projection projection) {
    const std::size_t m = mesh.m;
    const double l0 = fam.left(0.0);
    const double r0 = fam.right(0.0);

    auto interpolate = [&](const std::function<double(double)>& f) {
        std::vector<double> c(m, 0.0);
        for (std::size_t j = 1; j <= m; ++j) {
            const double x = mesh.node(j);
            if (l0 < x && x < r0) c[j - 1] = f(x);
        }
        return c;
    };

    if (projection == Projection::Interpolate)
        return {interpolate(u0), interpolate(u1)};

    // L2 projection of the zero extension: M c = b with
    // b_j = \int_{Omega_0} f w_j dx, element pieces clipped to Omega_0 and
    // integrated with 5-point Gauss (exact enough for smooth data).
    static const double xi[5] = {-0.906179845938663993, -0.538469310105683091,
                                 0.0, 0.538469310105683091,
                                 0.906179845938663993};
    static const double wq[5] = {0.236926885056189088, 0.478628670499366468,
                                 0.568888888888888889, 0.478628670499366468,
                                 0.236926885056189088};
    const double h = mesh.h();
    auto l2_project = [&](const std::function<double(double)>& f) {
        std::vector<double> b(m, 0.0);
        for (std::size_t e = 0; e < mesh.n_elems(); ++e) {
            const geometry::Interval cell = mesh.element(e);
            const double lo = std::max(cell.lo, l0);
            const double hi = std::min(cell.hi, r0);
            if (hi <= lo) continue;
            const double mid = 0.5 * (lo + hi);
            const double half = 0.5 * (hi - lo);
            for (int q = 0; q < 5; ++q) {
                const double x = mid + half * xi[q];
                const double s = (x - cell.lo) / h;
                const double fw = wq[q] * half * f(x);
                if (e >= 1) b[e - 1] += fw * (1.0 - s);
                if (e + 1 <= m) b[e] += fw * s;
            }
        }
        AssembledSystem sys = assemble(mesh);
        TridiagLDLT fac(sys.mass);
        std::vector<double> c;
        fac.solve(b, c);
        return c;
    };

    return {l2_project(u0), l2_project(u1)};
}

}  // namespace logwave::fem
