#include "linterp/matrix.hpp"

#include <stdexcept>

namespace linterp {
namespace {

uint8_t mod_inv(uint32_t a, uint32_t q) {
    for (uint32_t x = 1; x < q; ++x)
        if (a * x % q == 1) return static_cast<uint8_t>(x);
    throw std::domain_error("matrix: not invertible mod q");
}

}  // namespace

size_t QMatrix::rref() {
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        size_t sel = pivot_row;
        while (sel < rows_ && at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row)
            for (size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(pivot_row, c));
        uint8_t piv_inv = mod_inv(at(pivot_row, col), q_);
        for (size_t c = 0; c < cols_; ++c)
            at(pivot_row, c) = static_cast<uint8_t>(at(pivot_row, c) * piv_inv % q_);
        for (size_t r = 0; r < rows_; ++r) {
            if (r == pivot_row || at(r, col) == 0) continue;
            uint32_t factor = at(r, col);
            for (size_t c = 0; c < cols_; ++c) {
                uint32_t t = at(r, c) + (q_ - 1) * factor % q_ * at(pivot_row, c);
                at(r, c) = static_cast<uint8_t>(t % q_);
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

size_t QMatrix::rank() const {
    QMatrix copy = *this;
    return copy.rref();
}

void QMatrix::append_row(const std::vector<uint8_t>& row) {
    if (row.size() != cols_) throw std::invalid_argument("matrix: row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<uint8_t> QMatrix::row(size_t r) const {
    return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_};
}

SubspaceBasis SubspaceBasis::span(uint32_t q, size_t ambient,
                                  const std::vector<std::vector<uint8_t>>& vectors) {
    QMatrix mat(q, 0, ambient);
    for (const auto& v : vectors) mat.append_row(v);
    size_t r = mat.rref();
    SubspaceBasis s(q, ambient);
    for (size_t i = 0; i < r; ++i) s.rows_.push_back(mat.row(i));
    return s;
}

bool SubspaceBasis::contains(const std::vector<uint8_t>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
    std::vector<uint8_t> w = v;
    for (const auto& row : rows_) {
        size_t lead = 0;
        while (lead < ambient_ && row[lead] == 0) ++lead;
        if (lead == ambient_ || w[lead] == 0) continue;
        uint32_t factor = w[lead];  // row has pivot 1
        for (size_t c = 0; c < ambient_; ++c)
            w[c] = static_cast<uint8_t>((w[c] + (q_ - 1) * factor % q_ * row[c]) % q_);
    }
    for (uint8_t x : w)
        if (x) return false;
    return true;
}

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& other) const {
    if (ambient_ != other.ambient_ || q_ != other.q_)
        throw std::invalid_argument("subspace: ambient mismatch");
    std::vector<std::vector<uint8_t>> all = rows_;
    all.insert(all.end(), other.rows_.begin(), other.rows_.end());
    return span(q_, ambient_, all);
}

SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& other) const {
    if (ambient_ != other.ambient_ || q_ != other.q_)
        throw std::invalid_argument("subspace: ambient mismatch");
    // Zassenhaus: reduce [U | U; V | 0], rows with zero left block carry the
    // intersection in their right block.
    QMatrix mat(q_, 0, 2 * ambient_);
    for (const auto& u : rows_) {
        std::vector<uint8_t> row(2 * ambient_, 0);
        for (size_t c = 0; c < ambient_; ++c) { row[c] = u[c]; row[ambient_ + c] = u[c]; }
        mat.append_row(row);
    }
    for (const auto& v : other.rows_) {
        std::vector<uint8_t> row(2 * ambient_, 0);
        for (size_t c = 0; c < ambient_; ++c) row[c] = v[c];
        mat.append_row(row);
    }
    size_t r = mat.rref();
    std::vector<std::vector<uint8_t>> inter;
    for (size_t i = 0; i < r; ++i) {
        auto row = mat.row(i);
        bool left_zero = true;
        for (size_t c = 0; c < ambient_; ++c)
            if (row[c]) { left_zero = false; break; }
        if (left_zero)
            inter.emplace_back(row.begin() + ambient_, row.end());
    }
    return span(q_, ambient_, inter);
}

size_t rank_of_vector(const std::vector<FieldElement>& v, const Field& field) {
    QMatrix mat(field.q(), 0, v.size());
    std::vector<std::vector<uint8_t>> cols;
    for (const auto& e : v) cols.push_back(field.coords(e.value()));
    for (uint32_t r = 0; r < field.m(); ++r) {
        std::vector<uint8_t> row(v.size());
        for (size_t c = 0; c < v.size(); ++c) row[c] = cols[c][r];
        mat.append_row(row);
    }
    return mat.rank();
}

std::vector<uint8_t> random_gfq_vector(uint32_t q, size_t len, Rng& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, q - 1);
    std::vector<uint8_t> v(len);
    for (auto& x : v) x = static_cast<uint8_t>(dist(rng));
    return v;
}

QMatrix random_full_rank_matrix(uint32_t q, size_t rows, size_t cols, Rng& rng) {
    size_t want = std::min(rows, cols);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        QMatrix mat(q, 0, cols);
        for (size_t r = 0; r < rows; ++r) mat.append_row(random_gfq_vector(q, cols, rng));
        if (mat.rank() == want) return mat;
    }
    throw std::runtime_error("matrix: full-rank sampling failed");
}

std::vector<FieldElement> random_rank_t_error(const Field& field, size_t n,
                                              size_t t, uint64_t seed) {
    if (t > n || t > field.m())
        throw std::invalid_argument("error: rank t out of range");
    std::vector<FieldElement> e(n, fe_zero(&field));
    if (t == 0) return e;
    Rng rng(seed);
    // t field elements with GF(q)-independent coordinates, times a rank-t
    // combination matrix: the product has rank exactly t.
    QMatrix coeffs = random_full_rank_matrix(field.q(), t, field.m(), rng);
    QMatrix comb = random_full_rank_matrix(field.q(), t, n, rng);
    std::vector<FieldElement> a;
    for (size_t i = 0; i < t; ++i)
        a.emplace_back(&field, field.from_coords(coeffs.row(i)));
    for (size_t j = 0; j < n; ++j) {
        FieldElement s = fe_zero(&field);
        for (size_t i = 0; i < t; ++i) {
            FieldElement scalar(&field, comb.at(i, j) % field.q());
            s = s + scalar * a[i];
        }
        e[j] = s;
    }
    return e;
}

}  // namespace linterp
