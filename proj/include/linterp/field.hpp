// Finite field arithmetic for GF(q^m), q prime, with GF(q)-linear algebra
// support used throughout the decoders.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace linterp {

// GF(q^m) built as GF(q)[x] modulo a monic irreducible polynomial.
// Elements are stored as integer indices packing the polynomial-basis
// coordinates base q: v = c0 + c1*q + ... + c(m-1)*q^(m-1).
// Multiplicative structure runs through exp/log tables in the generator.
class Field {
public:
    // modulus is c0..cm with cm = 1. Throws std::invalid_argument if q is
    // not prime or the modulus is reducible over GF(q).
    Field(uint32_t q, uint32_t m, std::vector<uint8_t> modulus);

    // Convenience: first monic irreducible of degree m (lexicographic scan).
    static std::vector<uint8_t> find_irreducible(uint32_t q, uint32_t m);
    static std::shared_ptr<const Field> make(uint32_t q, uint32_t m,
                                             std::vector<uint8_t> modulus);
    static std::shared_ptr<const Field> make(uint32_t q, uint32_t m);

    uint32_t q() const { return q_; }
    uint32_t m() const { return m_; }
    uint64_t size() const { return size_; }
    const std::vector<uint8_t>& modulus() const { return modulus_; }
    uint32_t generator_value() const { return gen_; }

    // Arithmetic on packed element values.
    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;  // throws on a == 0
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t frobenius(uint32_t a) const { return pow(a, q_); }
    // a^(q^k); k is reduced mod m since Frobenius has order m.
    uint32_t frobenius_k(uint32_t a, int64_t k) const;

    uint64_t log(uint32_t a) const;         // a != 0
    uint32_t alpha_pow(uint64_t k) const;   // generator^k

    std::vector<uint8_t> coords(uint32_t a) const;       // length m, base-q digits
    uint32_t from_coords(const std::vector<uint8_t>& c) const;

    // Text format: "0", "a^k", or "poly:c0,c1,...,c(m-1)".
    std::string render(uint32_t a) const;
    uint32_t parse(const std::string& token) const;

private:
    uint32_t q_, m_;
    uint64_t size_;
    std::vector<uint8_t> modulus_;
    uint32_t gen_;
    std::vector<uint32_t> exp_;   // exp_[k] = generator^k, k in [0, size-1)
    std::vector<uint32_t> log_;   // log_[v] for v != 0

    uint32_t poly_mul_mod(uint32_t a, uint32_t b) const;
};

// Value-semantic element handle. All binary operations require both sides to
// live in the same Field instance.
class FieldElement {
public:
    FieldElement() : f_(nullptr), v_(0) {}
    FieldElement(const Field* f, uint32_t v) : f_(f), v_(v) {}

    const Field* field() const { return f_; }
    uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const { return {f_, f_->neg(v_)}; }
    FieldElement inv() const { return {f_, f_->inv(v_)}; }
    FieldElement pow(uint64_t e) const { return {f_, f_->pow(v_, e)}; }
    FieldElement frobenius() const { return {f_, f_->frobenius(v_)}; }
    FieldElement frobenius_k(int64_t k) const { return {f_, f_->frobenius_k(v_, k)}; }

    bool operator==(const FieldElement& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const { return f_->render(v_); }

private:
    const Field* f_;
    uint32_t v_;
};

inline FieldElement fe_zero(const Field* f) { return {f, 0}; }
inline FieldElement fe_one(const Field* f) { return {f, 1}; }
inline FieldElement fe_alpha(const Field* f) { return {f, f->generator_value()}; }
inline FieldElement fe_alpha_pow(const Field* f, uint64_t k) { return {f, f->alpha_pow(k)}; }

}  // namespace linterp
