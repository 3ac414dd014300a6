#include "hoc/poly.hpp"

#include <sstream>

namespace hoc {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rational c) { return Poly({std::move(c)}); }

Poly Poly::linear_root(const Rational& r) { return Poly({-r, Rational(1)}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("Poly::leading on zero polynomial");
    return coeffs_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Poly Poly::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(c));
}

Poly Poly::operator*(const Rational& k) const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * k;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
    std::vector<Rational> rem = num.coeffs_;
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {Poly(), num};
    std::vector<Rational> quo(dn - dd + 1, Rational(0));
    for (int i = dn; i >= dd; --i) {
        if (rem[i] == 0) continue;
        Rational q = rem[i] / den.leading();
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coeffs_[j];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // normalize to monic
    return a * (Rational(1) / a.leading());
}

Poly Poly::squarefree_part() const {
    if (is_zero()) throw std::invalid_argument("squarefree_part of zero polynomial");
    if (degree() == 0) return *this;
    Poly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    return divmod(*this, g).first;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int i = degree(); i >= 0; --i) {
        if (coeffs_[i] == 0) continue;
        if (os.tellp() > 0) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) os << "-";
        Rational a = abs(coeffs_[i]);
        if (a != 1 || i == 0) os << rational_str(a);
        if (i > 0) os << (a != 1 ? "*x" : "x");
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace hoc
