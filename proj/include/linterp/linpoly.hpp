// The noncommutative ring L[x] of linearized polynomials over GF(q^m).
// An element is sum_i a_i x^[i] where x^[i] denotes x^(q^i); multiplication
// is composition, l1 (x) l2 = l1(l2(x)).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linterp/field.hpp"

namespace linterp {

class LinPoly {
public:
    explicit LinPoly(const Field* f) : f_(f) {}
    LinPoly(const Field* f, std::vector<uint32_t> coeffs)
        : f_(f), c_(std::move(coeffs)) { trim(); }

    static LinPoly zero(const Field* f) { return LinPoly(f); }
    static LinPoly identity(const Field* f) { return monomial(f, 0); }  // x = x^[0]
    static LinPoly monomial(const Field* f, size_t i, FieldElement coeff);
    static LinPoly monomial(const Field* f, size_t i) {
        return monomial(f, i, fe_one(f));
    }

    const Field* field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    int q_degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    FieldElement coeff(size_t i) const {
        return {f_, i < c_.size() ? c_[i] : 0};
    }
    FieldElement leading() const { return coeff(c_.size() - 1); }

    LinPoly operator+(const LinPoly& o) const;
    LinPoly operator-(const LinPoly& o) const;
    LinPoly scaled(const FieldElement& c) const;

    // Composition product: (*this)(o(x)). q-degrees add for nonzero factors.
    LinPoly compose(const LinPoly& o) const;
    FieldElement eval(const FieldElement& beta) const;

    // x^[1] o l: coefficients to the q-th power, indices shifted up by one.
    LinPoly frobenius_shift() const;

    // Scalar-normalize to leading coefficient 1.
    LinPoly monic() const;

    bool operator==(const LinPoly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const LinPoly& o) const { return !(*this == o); }

    // "a^4*x^[2] + x^[1] + a^29*x^[0]", zero terms omitted; "0" for zero.
    std::string str() const;
    static LinPoly parse(const Field* f, const std::string& text);

private:
    const Field* f_;
    std::vector<uint32_t> c_;  // c_[i] multiplies x^[i]; trailing zeros trimmed

    void trim();
};

// Solve n = v (x) f + rem with deg_q(rem) < deg_q(v). Throws on v = 0.
std::pair<LinPoly, LinPoly> lp_right_divide(const LinPoly& n, const LinPoly& v);

// Monic linearized polynomial of q-degree rank(points) vanishing on the
// GF(q)-span of the given points.
LinPoly lp_annihilator(const Field* f, const std::vector<FieldElement>& points);

}  // namespace linterp
