#pragma once

#include <complex>
#include <vector>

namespace bergman {

using cplx = std::complex<double>;

// Polynomial in the monomial basis: c[m] multiplies z^m. Empty vector is the
// zero polynomial. Trailing zero coefficients are allowed and ignored by
// degree().
struct Poly {
    std::vector<cplx> c;

    Poly() = default;
    explicit Poly(std::vector<cplx> coeffs) : c(std::move(coeffs)) {}

    // Highest index with a nonzero coefficient; -1 for the zero polynomial.
    int degree() const {
        for (int m = static_cast<int>(c.size()) - 1; m >= 0; --m)
            if (c[static_cast<size_t>(m)] != cplx(0.0, 0.0)) return m;
        return -1;
    }

    bool is_zero() const { return degree() < 0; }

    cplx eval(cplx z) const {
        cplx r(0.0, 0.0);
        for (size_t m = c.size(); m-- > 0;) r = r * z + c[m];
        return r;
    }

    Poly derivative() const {
        Poly d;
        if (c.size() <= 1) return d;
        d.c.resize(c.size() - 1);
        for (size_t m = 1; m < c.size(); ++m) d.c[m - 1] = double(m) * c[m];
        return d;
    }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, cplx s);

// a_j -> a_j/(j+1); the coefficient action of K(z) = (1/z) \int_0^z k.
Poly k_transform(const Poly& k);

// z*K(z): shifts k_transform coefficients up one degree.
Poly zk_transform(const Poly& k);

// Dilation f_rho(z) = f(rho z): a_m -> a_m rho^m. Requires 0 <= rho <= 1.
Poly dilate(const Poly& f, double rho);

// Keep coefficients of degree <= n.
Poly truncate(const Poly& f, int n);

// All roots (with multiplicity) of f, computed from the companion matrix of
// the trimmed polynomial. Exact zeros at the origin are returned as 0.
// The zero polynomial and constants have no roots.
std::vector<cplx> poly_roots(const Poly& f);

}  // namespace bergman
