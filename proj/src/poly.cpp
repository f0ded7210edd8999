#include "bergman/poly.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace bergman {

Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), cplx(0.0, 0.0));
    for (size_t m = 0; m < a.c.size(); ++m) r.c[m] += a.c[m];
    for (size_t m = 0; m < b.c.size(); ++m) r.c[m] += b.c[m];
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), cplx(0.0, 0.0));
    for (size_t m = 0; m < a.c.size(); ++m) r.c[m] += a.c[m];
    for (size_t m = 0; m < b.c.size(); ++m) r.c[m] -= b.c[m];
    return r;
}

Poly operator*(const Poly& a, cplx s) {
    Poly r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

Poly k_transform(const Poly& k) {
    Poly r = k;
    for (size_t j = 0; j < r.c.size(); ++j) r.c[j] /= double(j + 1);
    return r;
}

Poly zk_transform(const Poly& k) {
    Poly r;
    r.c.assign(k.c.size() + 1, cplx(0.0, 0.0));
    for (size_t j = 0; j < k.c.size(); ++j) r.c[j + 1] = k.c[j] / double(j + 1);
    return r;
}

Poly dilate(const Poly& f, double rho) {
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("dilate: rho must lie in [0,1], got " + std::to_string(rho));
    Poly r = f;
    double pw = 1.0;
    for (size_t m = 0; m < r.c.size(); ++m) {
        r.c[m] *= pw;
        pw *= rho;
    }
    return r;
}

Poly truncate(const Poly& f, int n) {
    Poly r = f;
    if (static_cast<int>(r.c.size()) > n + 1) r.c.resize(static_cast<size_t>(n + 1));
    return r;
}

std::vector<cplx> poly_roots(const Poly& f) {
    int deg = f.degree();
    std::vector<cplx> roots;
    if (deg <= 0) return roots;

    // Strip exact zeros at the origin first; they are roots with multiplicity.
    size_t lo = 0;
    while (lo < static_cast<size_t>(deg) && f.c[lo] == cplx(0.0, 0.0)) ++lo;
    for (size_t i = 0; i < lo; ++i) roots.emplace_back(0.0, 0.0);

    const int n = deg - static_cast<int>(lo);
    if (n == 0) return roots;

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    const cplx lead = f.c[static_cast<size_t>(deg)];
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -f.c[lo + static_cast<size_t>(i)] / lead;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
    for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

}  // namespace bergman
