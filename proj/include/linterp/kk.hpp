// Koetter-Kschischang subspace codes: lifting construction, operator-channel
// simulation, and list-1 decoding via the interpolation engine.
#pragma once

#include <memory>
#include <vector>

#include "linterp/gabidulin.hpp"
#include "linterp/interp.hpp"
#include "linterp/matrix.hpp"

namespace linterp {

// Codewords live in W = <alpha_0..alpha_(l-1)> (+) GF(q^m), laid out over
// GF(q) as l coordinates in the alpha basis followed by the m coordinates of
// the second component.
class KKCode {
public:
    KKCode(std::shared_ptr<const Field> field, int l, int k,
           std::vector<FieldElement> alphas);
    KKCode(std::shared_ptr<const Field> field, int l, int k);  // alphas = basis prefix

    const Field* field() const { return field_.get(); }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    int l() const { return l_; }
    int k() const { return k_; }
    size_t ambient() const { return static_cast<size_t>(l_) + field_->m(); }
    const std::vector<FieldElement>& alphas() const { return alphas_; }

    SubspaceBasis encode(const std::vector<FieldElement>& u) const;

    // Pack / unpack ambient coordinates. alpha_coords is the representation of
    // the first component in the alpha basis.
    std::vector<uint8_t> pack(const std::vector<uint8_t>& alpha_coords,
                              const FieldElement& beta) const;
    std::pair<FieldElement, FieldElement> unpack(const std::vector<uint8_t>& row) const;

private:
    std::shared_ptr<const Field> field_;
    int l_, k_;
    std::vector<FieldElement> alphas_;
};

// Operator channel: returns U with dim(U) = l - rho + t and
// dim(U intersect V) = l - rho, by rejection sampling; deterministic per seed.
SubspaceBasis kk_channel(const KKCode& code, const SubspaceBasis& v, int rho,
                         int t, uint64_t seed);

struct KKDecodeResult {
    DecodeStatus status;
    std::vector<FieldElement> message;
    InterpResult interp;
};

KKDecodeResult kk_decode(const KKCode& code, const SubspaceBasis& u);

}  // namespace linterp
