#include "linterp/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace linterp {
namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomial over GF(q), coefficients c[0..deg].
using Poly = std::vector<uint8_t>;

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i]) return i;
    return -1;
}

Poly poly_mod(Poly a, const Poly& mod, uint32_t q) {
    int dm = degree(mod);
    // mod is monic
    for (int i = degree(a); i >= dm; --i) {
        uint8_t c = a[i];
        if (!c) continue;
        for (int j = 0; j <= dm; ++j) {
            uint32_t t = a[i - dm + j] + static_cast<uint32_t>(q - 1) * c % q * mod[j];
            a[i - dm + j] = static_cast<uint8_t>(t % q);
        }
    }
    a.resize(dm);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t q) {
    if (degree(a) < 0 || degree(b) < 0) return {};
    Poly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint8_t>((r[i + j] + a[i] * b[j]) % q);
    }
    return r;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool poly_irreducible(const Poly& p, uint32_t q) {
    int d = degree(p);
    if (d < 1) return false;
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= q;
        for (uint64_t idx = 0; idx < count; ++idx) {
            Poly div(dd + 1, 0);
            uint64_t t = idx;
            for (int i = 0; i < dd; ++i) { div[i] = static_cast<uint8_t>(t % q); t /= q; }
            div[dd] = 1;
            Poly rem = poly_mod(p, div, q);
            if (degree(rem) < 0) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(uint32_t q, uint32_t m, std::vector<uint8_t> modulus)
    : q_(q), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(q_)) throw std::invalid_argument("field: q must be prime");
    if (m_ == 0) throw std::invalid_argument("field: m must be positive");
    if (modulus_.size() != m_ + 1 || modulus_[m_] != 1)
        throw std::invalid_argument("field: modulus must be monic of degree m");
    for (uint8_t c : modulus_)
        if (c >= q_) throw std::invalid_argument("field: modulus coefficient out of range");
    if (!poly_irreducible(modulus_, q_))
        throw std::invalid_argument("field: modulus is reducible over GF(q)");

    size_ = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        size_ *= q_;
        if (size_ > (1u << 20))
            throw std::invalid_argument("field: q^m too large for table representation");
    }

    // Find a primitive element: try the modulus root x first, then scan.
    uint64_t group = size_ - 1;
    auto mult_order = [&](uint32_t a) {
        uint32_t v = a;
        uint64_t ord = 1;
        while (v != 1) { v = poly_mul_mod(v, a); ++ord; }
        return ord;
    };
    gen_ = 0;
    if (size_ == 2) {
        gen_ = 1;  // GF(2): trivial multiplicative group
    } else if (m_ > 1 && mult_order(q_) == group) {
        gen_ = q_;  // the modulus root x itself
    } else {
        for (uint32_t cand = 2; cand < size_; ++cand)
            if (mult_order(cand) == group) { gen_ = cand; break; }
    }
    if (gen_ == 0) throw std::runtime_error("field: no primitive element found");

    exp_.resize(group);
    log_.assign(size_, 0);
    uint32_t v = 1;
    for (uint64_t k = 0; k < group; ++k) {
        exp_[k] = v;
        log_[v] = static_cast<uint32_t>(k);
        v = poly_mul_mod(v, gen_);
    }
}

std::vector<uint8_t> Field::find_irreducible(uint32_t q, uint32_t m) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= q;
    for (uint64_t idx = 0; idx < count; ++idx) {
        Poly p(m + 1, 0);
        uint64_t t = idx;
        for (uint32_t i = 0; i < m; ++i) { p[i] = static_cast<uint8_t>(t % q); t /= q; }
        p[m] = 1;
        if (poly_irreducible(p, q)) return p;
    }
    throw std::runtime_error("field: no irreducible polynomial found");
}

std::shared_ptr<const Field> Field::make(uint32_t q, uint32_t m,
                                         std::vector<uint8_t> modulus) {
    return std::make_shared<const Field>(q, m, std::move(modulus));
}

std::shared_ptr<const Field> Field::make(uint32_t q, uint32_t m) {
    return make(q, m, find_irreducible(q, m));
}

uint32_t Field::poly_mul_mod(uint32_t a, uint32_t b) const {
    Poly pa = coords(a), pb = coords(b);
    Poly pr = poly_mod(poly_mul(pa, pb, q_), modulus_, q_);
    pr.resize(m_, 0);
    return from_coords(pr);
}

uint32_t Field::add(uint32_t a, uint32_t b) const {
    if (q_ == 2) return a ^ b;
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        r += (a % q_ + b % q_) % q_ * mult;
        a /= q_; b /= q_; mult *= q_;
    }
    return r;
}

uint32_t Field::neg(uint32_t a) const {
    if (q_ == 2) return a;
    uint32_t r = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        r += (q_ - a % q_) % q_ * mult;
        a /= q_; mult *= q_;
    }
    return r;
}

uint32_t Field::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint64_t k = (static_cast<uint64_t>(log_[a]) + log_[b]) % (size_ - 1);
    return exp_[k];
}

uint32_t Field::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("field: inverse of zero");
    return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

uint32_t Field::pow(uint32_t a, uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    uint64_t k = static_cast<uint64_t>(log_[a]) % (size_ - 1);
    return exp_[k * (e % (size_ - 1)) % (size_ - 1)];
}

uint32_t Field::frobenius_k(uint32_t a, int64_t k) const {
    int64_t kk = k % static_cast<int64_t>(m_);
    if (kk < 0) kk += m_;
    uint64_t e = 1;
    for (int64_t i = 0; i < kk; ++i) e = e * q_ % (size_ - 1);
    return pow(a, e == 0 ? size_ - 1 : e);
}

uint64_t Field::log(uint32_t a) const {
    if (a == 0) throw std::domain_error("field: log of zero");
    return log_[a];
}

uint32_t Field::alpha_pow(uint64_t k) const { return exp_[k % (size_ - 1)]; }

std::vector<uint8_t> Field::coords(uint32_t a) const {
    std::vector<uint8_t> c(m_);
    for (uint32_t i = 0; i < m_; ++i) { c[i] = static_cast<uint8_t>(a % q_); a /= q_; }
    return c;
}

uint32_t Field::from_coords(const std::vector<uint8_t>& c) const {
    uint32_t v = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint8_t d = i < c.size() ? c[i] : 0;
        if (d >= q_) throw std::invalid_argument("field: coordinate out of range");
        v += d * mult; mult *= q_;
    }
    return v;
}

std::string Field::render(uint32_t a) const {
    if (a == 0) return "0";
    if (a == 1) return "1";
    return "a^" + std::to_string(log_[a]);
}

uint32_t Field::parse(const std::string& token) const {
    if (token == "0") return 0;
    if (token.rfind("a^", 0) == 0) {
        uint64_t k = std::stoull(token.substr(2));
        return alpha_pow(k);
    }
    if (token.rfind("poly:", 0) == 0) {
        std::vector<uint8_t> c;
        std::stringstream ss(token.substr(5));
        std::string part;
        while (std::getline(ss, part, ','))
            c.push_back(static_cast<uint8_t>(std::stoul(part)));
        if (c.size() != m_) throw std::invalid_argument("field: wrong coordinate count");
        return from_coords(c);
    }
    if (token == "1") return 1;
    throw std::invalid_argument("field: unparseable element '" + token + "'");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return {f_, f_->add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    return {f_, f_->sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    return {f_, f_->mul(v_, o.v_)};
}

}  // namespace linterp
