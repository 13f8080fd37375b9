#include "linterp/linpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace linterp {

void LinPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

LinPoly LinPoly::monomial(const Field* f, size_t i, FieldElement coeff) {
    if (coeff.is_zero()) return LinPoly(f);
    std::vector<uint32_t> c(i + 1, 0);
    c[i] = coeff.value();
    return {f, std::move(c)};
}

LinPoly LinPoly::operator+(const LinPoly& o) const {
    std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = f_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return {f_, std::move(c)};
}

LinPoly LinPoly::operator-(const LinPoly& o) const {
    std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = f_->sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return {f_, std::move(c)};
}

LinPoly LinPoly::scaled(const FieldElement& c) const {
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], c.value());
    return {f_, std::move(r)};
}

LinPoly LinPoly::compose(const LinPoly& o) const {
    if (is_zero() || o.is_zero()) return LinPoly(f_);
    std::vector<uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            // a_i * (b_j)^(q^i) lands on x^[i+j]
            uint32_t term = f_->mul(c_[i], f_->frobenius_k(o.c_[j], static_cast<int64_t>(i)));
            r[i + j] = f_->add(r[i + j], term);
        }
    }
    return {f_, std::move(r)};
}

FieldElement LinPoly::eval(const FieldElement& beta) const {
    FieldElement acc = fe_zero(f_);
    FieldElement p = beta;  // beta^(q^i)
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i]) acc = acc + FieldElement(f_, c_[i]) * p;
        p = p.frobenius();
    }
    return acc;
}

LinPoly LinPoly::frobenius_shift() const {
    if (is_zero()) return *this;
    std::vector<uint32_t> r(c_.size() + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i + 1] = f_->frobenius(c_[i]);
    return {f_, std::move(r)};
}

LinPoly LinPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inv());
}

std::string LinPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = q_degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (c_[i] != 1) out << f_->render(c_[i]) << "*";
        out << "x^[" << i << "]";
    }
    return out.str();
}

LinPoly LinPoly::parse(const Field* f, const std::string& text) {
    if (text == "0") return LinPoly(f);
    std::vector<uint32_t> c;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, '+')) {
        // strip whitespace
        size_t a = token.find_first_not_of(" \t");
        size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("linpoly: empty term");
        token = token.substr(a, b - a + 1);
        uint32_t coeff = 1;
        size_t star = token.find('*');
        std::string mono = token;
        if (star != std::string::npos) {
            coeff = f->parse(token.substr(0, star));
            mono = token.substr(star + 1);
        }
        if (mono.rfind("x^[", 0) != 0 || mono.back() != ']')
            throw std::invalid_argument("linpoly: bad monomial '" + mono + "'");
        size_t idx = std::stoul(mono.substr(3, mono.size() - 4));
        if (c.size() <= idx) c.resize(idx + 1, 0);
        c[idx] = f->add(c[idx], coeff);
    }
    return {f, std::move(c)};
}

std::pair<LinPoly, LinPoly> lp_right_divide(const LinPoly& n, const LinPoly& v) {
    if (v.is_zero()) throw std::domain_error("linpoly: division by zero");
    const Field* f = n.field();
    int dv = v.q_degree();
    LinPoly rem = n;
    LinPoly quot = LinPoly::zero(f);
    while (rem.q_degree() >= dv) {
        int d = rem.q_degree() - dv;
        // v composed with c x^[d] has leading coefficient v_lead * c^(q^dv):
        // solve for c with the inverse Frobenius.
        FieldElement c = (rem.leading() * v.leading().inv()).frobenius_k(-dv);
        LinPoly term = LinPoly::monomial(f, static_cast<size_t>(d), c);
        quot = quot + term;
        rem = rem - v.compose(term);
    }
    return {quot, rem};
}

LinPoly lp_annihilator(const Field* f, const std::vector<FieldElement>& points) {
    LinPoly p = LinPoly::identity(f);
    for (const auto& beta : points) {
        FieldElement v = p.eval(beta);
        if (v.is_zero()) continue;  // beta already in the span killed so far
        // p <- x^[1] o p - v^(q-1) * p
        p = p.frobenius_shift() - p.scaled(v.pow(f->q() - 1));
    }
    return p;
}

}  // namespace linterp
