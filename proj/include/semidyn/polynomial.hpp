#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace semidyn {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Complex-coefficient polynomial, ascending degree order, leading
// coefficient nonzero, degree >= 1. Immutable after construction.
class Polynomial {
public:
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs)
        : Polynomial(std::vector<Complex>(coeffs)) {}

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex leading() const { return coeffs_.back(); }

    Complex operator()(Complex z) const { return eval(z); }
    Complex eval(Complex z) const;
    Complex eval_derivative(Complex z) const;

    Polynomial derivative() const;

    // p(z) - w as a polynomial in z.
    Polynomial minus_constant(Complex w) const;

    // outer(inner(z)). Throws DegreeOverflow beyond `degree_cap`; word
    // dynamics past the cap must be evaluated pointwise instead.
    static Polynomial compose(const Polynomial& outer, const Polynomial& inner,
                              int degree_cap = kDefaultComposeCap);

    // n-th iterate p∘...∘p, same cap rules.
    static Polynomial iterate(const Polynomial& p, int n,
                              int degree_cap = kDefaultComposeCap);

    // R = max(1, 2(1 + sum_{k<d} |a_k|)/|a_d|); |z| >= R implies |p(z)| >= 2|z|.
    double escape_radius() const;

    // Radius r* with K(p) ⊆ D(0, r*): smallest radius beyond which
    // |p(z)| > |z| + 1 is guaranteed by the coefficient bound. Much tighter
    // than escape_radius() for small leading coefficients.
    double filled_set_radius_bound() const;

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    static constexpr int kDefaultComposeCap = 4096;

private:
    std::vector<Complex> coeffs_;
};

}  // namespace semidyn
