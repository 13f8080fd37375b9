// Mahdavifar-Vardy subspace codes over GF(q^(ml)): construction from a
// normal element and the l-th roots of unity, encoding, receiver-side point
// extraction, and the interpolation step of list decoding.
#pragma once

#include <map>
#include <memory>
#include <vector>

#include "linterp/interp.hpp"
#include "linterp/matrix.hpp"

namespace linterp {

class MVCode {
public:
    // l must divide q - 1 and ml - L(k-1) - 1 must be nonnegative. gamma is
    // found by seeded random search over normal elements.
    MVCode(uint32_t q, int m, int l, int k, int list_size, uint64_t seed);
    // Rebuild from an explicit big-field modulus and gamma (descriptor files).
    MVCode(uint32_t q, int m, int l, int k, int list_size,
           std::vector<uint8_t> modulus, uint32_t gamma_value);

    uint32_t q() const { return q_; }
    int m() const { return m_; }
    int l() const { return l_; }
    int k() const { return k_; }
    int list_size() const { return L_; }
    const Field* big_field() const { return big_.get(); }
    std::shared_ptr<const Field> big_field_ptr() const { return big_; }
    FieldElement gamma() const { return gamma_; }
    const std::vector<FieldElement>& roots_of_unity() const { return e_; }
    const std::vector<FieldElement>& alphas() const { return alpha_; }

    // The ambient splits into l blocks, one per alpha_i: a block holds one
    // GF(q) coordinate for the <alpha_i> component followed by m coordinates
    // for each of the L subfield components. Keeping the blocks disjoint is
    // what lets the receiver split U into the U_i by plain intersection.
    size_t block_size() const { return 1 + static_cast<size_t>(L_) * m_; }
    size_t ambient() const { return static_cast<size_t>(l_) * block_size(); }

    bool in_subfield(const FieldElement& x) const;  // x in GF(q^m)
    std::vector<uint8_t> subfield_coords(const FieldElement& x) const;
    FieldElement from_subfield_coords(const std::vector<uint8_t>& c) const;

    // Message coefficients are GF(q) digits.
    SubspaceBasis encode(const std::vector<uint8_t>& u) const;
    LinPoly message_poly(const std::vector<uint8_t>& u) const;

private:
    void validate_params() const;
    void init_roots();
    // Build alphas from a gamma candidate; false if the conjugate set fails
    // the basis check.
    bool try_gamma(uint32_t gamma_value);
    void init_subfield();

    uint32_t q_;
    int m_, l_, k_, L_;
    std::shared_ptr<const Field> big_;
    FieldElement gamma_;
    std::vector<FieldElement> e_;
    std::vector<FieldElement> alpha_;
    std::vector<FieldElement> subfield_basis_;           // m elements
    std::map<uint32_t, std::vector<uint8_t>> subfield_map_;  // element -> coords
};

// Error injection: U contains V, dim(U) = l + t. Each extra dimension is a
// fresh vector inside one (randomly chosen) alpha block, outside V;
// deterministic per seed.
SubspaceBasis mv_channel(const MVCode& code, const SubspaceBasis& v, int t,
                         uint64_t seed);

struct MVExtraction {
    std::vector<EvalFunctional> functionals;  // grouped by (i, j, h), h fastest
    std::vector<size_t> r;  // dim of each U_i; the r values sum to dim(U)
};
MVExtraction mv_extract_points(const MVCode& code, const SubspaceBasis& u);

struct MVInterpResult {
    ModulePoly minimum;
    bool degree_bounds_ok;  // deg_q(Q_s) <= ml - s(k-1) - 1 for all s
    InterpResult interp;
};
MVInterpResult mv_interpolate(const MVCode& code,
                              const std::vector<EvalFunctional>& functionals);

}  // namespace linterp
