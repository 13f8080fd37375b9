// Gabidulin rank-metric codes: evaluation encoding and bounded-distance
// decoding through bivariate linearized interpolation.
#pragma once

#include <memory>
#include <vector>

#include "linterp/interp.hpp"
#include "linterp/matrix.hpp"

namespace linterp {

class GabidulinCode {
public:
    // g must have GF(q)-rank n; defaults to the first n polynomial-basis
    // elements 1, alpha, alpha^2, ...
    GabidulinCode(std::shared_ptr<const Field> field, int n, int k,
                  std::vector<FieldElement> g);
    GabidulinCode(std::shared_ptr<const Field> field, int n, int k);

    const Field* field() const { return field_.get(); }
    std::shared_ptr<const Field> field_ptr() const { return field_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int radius() const { return (n_ - k_) / 2; }  // tau
    const std::vector<FieldElement>& eval_points() const { return g_; }

    std::vector<FieldElement> encode(const std::vector<FieldElement>& u) const;

private:
    std::shared_ptr<const Field> field_;
    int n_, k_;
    std::vector<FieldElement> g_;
};

enum class DecodeStatus {
    ok,
    nonzero_remainder,   // right division did not come out exact
    degree_violation,    // recovered polynomial exceeds q-degree k-1
    zero_divisor,        // the y-component of the minimum vanished
};

const char* decode_status_name(DecodeStatus s);

struct GabidulinDecodeResult {
    DecodeStatus status;
    std::vector<FieldElement> message;  // valid when status == ok
    InterpResult interp;                // trace of the interpolation run
};

GabidulinDecodeResult gab_decode(const GabidulinCode& code,
                                 const std::vector<FieldElement>& y,
                                 bool rescaled_order_increase = false);

// Shared factorization step: split the interpolation minimum as
// Q0(x) + Q1(y), solve -Q0 = Q1 (x) f, accept when the remainder vanishes and
// deg_q(f) <= k - 1.
struct FactorResult {
    DecodeStatus status;
    LinPoly f;
};
FactorResult factor_minimum(const ModulePoly& minimum, int k);

}  // namespace linterp
