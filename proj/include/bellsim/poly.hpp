// Truncated bivariate series in the detector-imperfection variables
// (deta = 1 - eta, nu).  All probability and fidelity expansions in the
// library are carried as these polynomials; terms beyond the stored order
// are discarded, never rounded into kept coefficients.

#pragma once

#include <complex>
#include <vector>

namespace bellsim {

using Complex = std::complex<double>;

struct ExpansionOrder {
    int max_deta = 4;
    int max_nu = 1;

    bool operator==(const ExpansionOrder&) const = default;
};

class BivariatePoly {
public:
    explicit BivariatePoly(ExpansionOrder order = {});

    static BivariatePoly constant(ExpansionOrder order, Complex value);
    static BivariatePoly monomial(ExpansionOrder order, int deg_deta, int deg_nu,
                                  Complex coeff = Complex(1.0, 0.0));

    ExpansionOrder order() const { return order_; }

    // Coefficient of deta^a nu^b; zero outside the stored order.
    Complex coeff(int a, int b) const;
    void set_coeff(int a, int b, Complex value);
    void add_coeff(int a, int b, Complex value);

    Complex eval(double deta, double nu) const;

    BivariatePoly& operator+=(const BivariatePoly& rhs);
    BivariatePoly& operator-=(const BivariatePoly& rhs);
    BivariatePoly& operator*=(Complex scale);

    friend BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs);
    friend BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs);
    friend BivariatePoly operator*(BivariatePoly lhs, Complex scale);
    friend BivariatePoly operator*(Complex scale, BivariatePoly rhs);

    double max_abs_coeff() const;

private:
    ExpansionOrder order_;
    std::vector<Complex> coeffs_;  // dense, index a * (max_nu + 1) + b

    friend BivariatePoly poly_mul(const BivariatePoly&, const BivariatePoly&);
    friend BivariatePoly poly_div(const BivariatePoly&, const BivariatePoly&);
};

// Product truncated to the common order.  Throws std::invalid_argument on
// order mismatch.
BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);

// Series division: the unique q with poly_mul(q, den) == num up to the
// stored order.  Throws std::domain_error when |den(0,0)| <= 1e-12.
BivariatePoly poly_div(const BivariatePoly& num, const BivariatePoly& den);

Complex poly_eval(const BivariatePoly& p, double deta, double nu);

}  // namespace bellsim
