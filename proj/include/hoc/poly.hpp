#pragma once

#include <vector>

#include "hoc/rational.hpp"

namespace hoc {

/// Dense univariate polynomial over Rational. coeffs[i] is the x^i
/// coefficient; trailing zeros are trimmed, the zero polynomial is the
/// empty list.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(Rational c);
    /// x - r
    static Poly linear_root(const Rational& r);

    bool is_zero() const { return coeffs_.empty(); }
    /// degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const;
    Rational coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;

    Poly derivative() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

    /// Quotient and remainder of exact polynomial division.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    /// Monic gcd.
    static Poly gcd(Poly a, Poly b);
    /// p / gcd(p, p'), same real roots with multiplicity one.
    Poly squarefree_part() const;

    std::string str() const;

  private:
    std::vector<Rational> coeffs_;
    void trim();
};

/// Exact Horner evaluation (module-level spelling of Poly::eval).
inline Rational poly_eval(const Poly& p, const Rational& x) { return p.eval(x); }

}  // namespace hoc
