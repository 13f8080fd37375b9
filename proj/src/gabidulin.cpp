#include "linterp/gabidulin.hpp"

#include <stdexcept>

namespace linterp {

GabidulinCode::GabidulinCode(std::shared_ptr<const Field> field, int n, int k,
                             std::vector<FieldElement> g)
    : field_(std::move(field)), n_(n), k_(k), g_(std::move(g)) {
    if (n_ <= 0 || k_ <= 0 || k_ > n_ || n_ > static_cast<int>(field_->m()))
        throw std::invalid_argument("gabidulin: need 0 < k <= n <= m");
    if (static_cast<int>(g_.size()) != n_)
        throw std::invalid_argument("gabidulin: wrong number of evaluation points");
    if (rank_of_vector(g_, *field_) != static_cast<size_t>(n_))
        throw std::invalid_argument("gabidulin: evaluation points not GF(q)-independent");
}

GabidulinCode::GabidulinCode(std::shared_ptr<const Field> field, int n, int k)
    : GabidulinCode(field, n, k, [&] {
          std::vector<FieldElement> g;
          for (int i = 0; i < n; ++i) {
              std::vector<uint8_t> c(field->m(), 0);
              c[i] = 1;
              g.emplace_back(field.get(), field->from_coords(c));
          }
          return g;
      }()) {}

std::vector<FieldElement> GabidulinCode::encode(
    const std::vector<FieldElement>& u) const {
    if (static_cast<int>(u.size()) != k_)
        throw std::invalid_argument("gabidulin: message length mismatch");
    std::vector<uint32_t> coeffs;
    for (const auto& c : u) coeffs.push_back(c.value());
    LinPoly f(field_.get(), std::move(coeffs));
    std::vector<FieldElement> x;
    for (const auto& gi : g_) x.push_back(f.eval(gi));
    return x;
}

const char* decode_status_name(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::ok: return "ok";
        case DecodeStatus::nonzero_remainder: return "nonzero_remainder";
        case DecodeStatus::degree_violation: return "degree_violation";
        case DecodeStatus::zero_divisor: return "zero_divisor";
    }
    return "?";
}

FactorResult factor_minimum(const ModulePoly& minimum, int k) {
    const Field* f = minimum.field();
    const LinPoly& q0 = minimum.component(0);
    const LinPoly& q1 = minimum.component(1);
    if (q1.is_zero()) return {DecodeStatus::zero_divisor, LinPoly::zero(f)};
    auto [quot, rem] = lp_right_divide(LinPoly::zero(f) - q0, q1);
    if (!rem.is_zero()) return {DecodeStatus::nonzero_remainder, LinPoly::zero(f)};
    if (quot.q_degree() > k - 1) return {DecodeStatus::degree_violation, LinPoly::zero(f)};
    return {DecodeStatus::ok, quot};
}

GabidulinDecodeResult gab_decode(const GabidulinCode& code,
                                 const std::vector<FieldElement>& y,
                                 bool rescaled_order_increase) {
    if (static_cast<int>(y.size()) != code.n())
        throw std::invalid_argument("gabidulin: received length mismatch");
    const Field* f = code.field();
    std::vector<EvalFunctional> funcs;
    for (int i = 0; i < code.n(); ++i)
        funcs.push_back({{code.eval_points()[i], y[i]}});

    MonomialOrder ord = MonomialOrder::bivariate(code.k());
    InterpResult interp =
        interpolate(funcs, ord, 1, f, rescaled_order_increase);

    FactorResult fac = factor_minimum(interp.minimum, code.k());
    GabidulinDecodeResult result{fac.status, {}, std::move(interp)};
    if (fac.status == DecodeStatus::ok) {
        for (int i = 0; i < code.k(); ++i) result.message.push_back(fac.f.coeff(i));
    }
    return result;
}

}  // namespace linterp
