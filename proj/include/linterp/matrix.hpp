// GF(q) matrices, row reduction, and canonical subspace bases.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "linterp/field.hpp"

namespace linterp {

// Deterministic RNG used by every stochastic operation in the library.
using Rng = std::mt19937_64;

// Dense matrix over the prime field GF(q).
class QMatrix {
public:
    QMatrix(uint32_t q, size_t rows, size_t cols)
        : q_(q), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    uint32_t q() const { return q_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint8_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    uint8_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    // In-place reduced row echelon form; returns the rank.
    size_t rref();
    size_t rank() const;

    void append_row(const std::vector<uint8_t>& row);
    std::vector<uint8_t> row(size_t r) const;

    bool operator==(const QMatrix& o) const = default;

private:
    uint32_t q_;
    size_t rows_, cols_;
    std::vector<uint8_t> a_;
};

// Subspace of GF(q)^ambient in canonical form: nonzero RREF rows.
// Equal subspaces compare equal.
class SubspaceBasis {
public:
    SubspaceBasis(uint32_t q, size_t ambient) : q_(q), ambient_(ambient) {}
    static SubspaceBasis span(uint32_t q, size_t ambient,
                              const std::vector<std::vector<uint8_t>>& vectors);

    uint32_t q() const { return q_; }
    size_t ambient() const { return ambient_; }
    size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<uint8_t>>& rows() const { return rows_; }

    bool contains(const std::vector<uint8_t>& v) const;
    bool contains(const SubspaceBasis& other) const;

    SubspaceBasis sum(const SubspaceBasis& other) const;
    SubspaceBasis intersect(const SubspaceBasis& other) const;  // Zassenhaus

    bool operator==(const SubspaceBasis& o) const = default;

private:
    uint32_t q_;
    size_t ambient_;
    std::vector<std::vector<uint8_t>> rows_;
};

inline size_t subspace_distance(const SubspaceBasis& u, const SubspaceBasis& v) {
    return u.sum(v).dim() - u.intersect(v).dim();
}

// Expand a tuple over GF(q^m) into its m x n coordinate matrix and return the
// GF(q)-rank.
size_t rank_of_vector(const std::vector<FieldElement>& v, const Field& field);

// Error vector of exact GF(q)-rank t: product of a random m x t rank-t
// coordinate matrix and a random t x n rank-t combination matrix.
std::vector<FieldElement> random_rank_t_error(const Field& field, size_t n,
                                              size_t t, uint64_t seed);

// Uniform nonzero / unconstrained helpers for tests and channels.
std::vector<uint8_t> random_gfq_vector(uint32_t q, size_t len, Rng& rng);
QMatrix random_full_rank_matrix(uint32_t q, size_t rows, size_t cols, Rng& rng);

}  // namespace linterp
