#include "bellsim/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace bellsim {

namespace {

constexpr double kDivTolerance = 1e-12;

void check_order(const ExpansionOrder& order) {
    if (order.max_deta < 0 || order.max_nu < 0) {
        throw std::invalid_argument("expansion order must be nonnegative");
    }
}

}  // namespace

BivariatePoly::BivariatePoly(ExpansionOrder order)
    : order_(order),
      coeffs_(static_cast<size_t>(order.max_deta + 1) * (order.max_nu + 1)) {
    check_order(order);
}

BivariatePoly BivariatePoly::constant(ExpansionOrder order, Complex value) {
    BivariatePoly p(order);
    p.coeffs_[0] = value;
    return p;
}

BivariatePoly BivariatePoly::monomial(ExpansionOrder order, int deg_deta, int deg_nu,
                                      Complex coeff) {
    BivariatePoly p(order);
    p.set_coeff(deg_deta, deg_nu, coeff);
    return p;
}

Complex BivariatePoly::coeff(int a, int b) const {
    if (a < 0 || b < 0 || a > order_.max_deta || b > order_.max_nu) return {};
    return coeffs_[static_cast<size_t>(a) * (order_.max_nu + 1) + b];
}

void BivariatePoly::set_coeff(int a, int b, Complex value) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative monomial degree");
    if (a > order_.max_deta || b > order_.max_nu) return;  // beyond order: discarded
    coeffs_[static_cast<size_t>(a) * (order_.max_nu + 1) + b] = value;
}

void BivariatePoly::add_coeff(int a, int b, Complex value) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative monomial degree");
    if (a > order_.max_deta || b > order_.max_nu) return;
    coeffs_[static_cast<size_t>(a) * (order_.max_nu + 1) + b] += value;
}

Complex BivariatePoly::eval(double deta, double nu) const {
    // Horner in deta, inner Horner in nu.
    Complex acc{};
    for (int a = order_.max_deta; a >= 0; --a) {
        Complex row{};
        for (int b = order_.max_nu; b >= 0; --b) {
            row = row * nu + coeff(a, b);
        }
        acc = acc * deta + row;
    }
    return acc;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
    if (!(order_ == rhs.order_)) throw std::invalid_argument("expansion order mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
    if (!(order_ == rhs.order_)) throw std::invalid_argument("expansion order mismatch");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(Complex scale) {
    for (auto& c : coeffs_) c *= scale;
    return *this;
}

BivariatePoly operator+(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs += rhs; }
BivariatePoly operator-(BivariatePoly lhs, const BivariatePoly& rhs) { return lhs -= rhs; }
BivariatePoly operator*(BivariatePoly lhs, Complex scale) { return lhs *= scale; }
BivariatePoly operator*(Complex scale, BivariatePoly rhs) { return rhs *= scale; }

double BivariatePoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

BivariatePoly poly_mul(const BivariatePoly& a, const BivariatePoly& b) {
    if (!(a.order_ == b.order_)) throw std::invalid_argument("expansion order mismatch");
    const int da = a.order_.max_deta, db = a.order_.max_nu;
    BivariatePoly out(a.order_);
    for (int a1 = 0; a1 <= da; ++a1) {
        for (int b1 = 0; b1 <= db; ++b1) {
            const Complex c1 = a.coeff(a1, b1);
            if (c1 == Complex{}) continue;
            for (int a2 = 0; a1 + a2 <= da; ++a2) {
                for (int b2 = 0; b1 + b2 <= db; ++b2) {
                    const Complex c2 = b.coeff(a2, b2);
                    if (c2 == Complex{}) continue;
                    out.add_coeff(a1 + a2, b1 + b2, c1 * c2);
                }
            }
        }
    }
    return out;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    return poly_mul(a, b);
}

BivariatePoly poly_div(const BivariatePoly& num, const BivariatePoly& den) {
    if (!(num.order_ == den.order_)) throw std::invalid_argument("expansion order mismatch");
    const Complex lead = den.coeff(0, 0);
    if (std::abs(lead) <= kDivTolerance) {
        throw std::domain_error("series division singular: denominator constant term vanishes");
    }
    const int da = num.order_.max_deta, db = num.order_.max_nu;
    BivariatePoly q(num.order_);
    // Graded coefficient recursion: q[A][B] determined by lower-order terms.
    for (int total = 0; total <= da + db; ++total) {
        for (int A = 0; A <= da; ++A) {
            const int B = total - A;
            if (B < 0 || B > db) continue;
            Complex acc = num.coeff(A, B);
            for (int a = 0; a <= A; ++a) {
                for (int b = 0; b <= B; ++b) {
                    if (a == A && b == B) continue;
                    acc -= q.coeff(a, b) * den.coeff(A - a, B - b);
                }
            }
            q.set_coeff(A, B, acc / lead);
        }
    }
    return q;
}

Complex poly_eval(const BivariatePoly& p, double deta, double nu) {
    return p.eval(deta, nu);
}

}  // namespace bellsim
