#include "linterp/kk.hpp"

#include <stdexcept>

namespace linterp {

KKCode::KKCode(std::shared_ptr<const Field> field, int l, int k,
               std::vector<FieldElement> alphas)
    : field_(std::move(field)), l_(l), k_(k), alphas_(std::move(alphas)) {
    if (k_ <= 0 || k_ > l_ || l_ > static_cast<int>(field_->m()))
        throw std::invalid_argument("kk: need 0 < k <= l <= m");
    if (static_cast<int>(alphas_.size()) != l_)
        throw std::invalid_argument("kk: wrong number of alphas");
    if (rank_of_vector(alphas_, *field_) != static_cast<size_t>(l_))
        throw std::invalid_argument("kk: alphas not GF(q)-independent");
}

KKCode::KKCode(std::shared_ptr<const Field> field, int l, int k)
    : KKCode(field, l, k, [&] {
          std::vector<FieldElement> a;
          for (int i = 0; i < l; ++i) {
              std::vector<uint8_t> c(field->m(), 0);
              c[i] = 1;
              a.emplace_back(field.get(), field->from_coords(c));
          }
          return a;
      }()) {}

std::vector<uint8_t> KKCode::pack(const std::vector<uint8_t>& alpha_coords,
                                  const FieldElement& beta) const {
    std::vector<uint8_t> row(ambient(), 0);
    for (int i = 0; i < l_; ++i) row[i] = alpha_coords[i];
    auto bc = field_->coords(beta.value());
    for (uint32_t i = 0; i < field_->m(); ++i) row[l_ + i] = bc[i];
    return row;
}

std::pair<FieldElement, FieldElement> KKCode::unpack(
    const std::vector<uint8_t>& row) const {
    FieldElement x = fe_zero(field_.get());
    for (int i = 0; i < l_; ++i)
        x = x + FieldElement(field_.get(), row[i] % field_->q()) * alphas_[i];
    std::vector<uint8_t> bc(row.begin() + l_, row.end());
    FieldElement y(field_.get(), field_->from_coords(bc));
    return {x, y};
}

SubspaceBasis KKCode::encode(const std::vector<FieldElement>& u) const {
    if (static_cast<int>(u.size()) != k_)
        throw std::invalid_argument("kk: message length mismatch");
    std::vector<uint32_t> coeffs;
    for (const auto& c : u) coeffs.push_back(c.value());
    LinPoly poly(field_.get(), std::move(coeffs));
    std::vector<std::vector<uint8_t>> rows;
    for (int i = 0; i < l_; ++i) {
        std::vector<uint8_t> ac(l_, 0);
        ac[i] = 1;
        rows.push_back(pack(ac, poly.eval(alphas_[i])));
    }
    SubspaceBasis v = SubspaceBasis::span(field_->q(), ambient(), rows);
    if (static_cast<int>(v.dim()) != l_)
        throw std::runtime_error("kk: encoded subspace dropped dimension");
    return v;
}

SubspaceBasis kk_channel(const KKCode& code, const SubspaceBasis& v, int rho,
                         int t, uint64_t seed) {
    const uint32_t q = code.field()->q();
    const size_t ambient = code.ambient();
    const int l = code.l();
    if (rho < 0 || rho > l || t < 0 ||
        static_cast<size_t>(l + t) > ambient)
        throw std::invalid_argument("kk: infeasible channel parameters");
    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        // (l - rho)-dimensional piece of V
        QMatrix mix = random_full_rank_matrix(q, l - rho, l, rng);
        std::vector<std::vector<uint8_t>> rows;
        for (int r = 0; r < l - rho; ++r) {
            std::vector<uint8_t> row(ambient, 0);
            for (int i = 0; i < l; ++i) {
                uint8_t c = mix.at(r, i);
                if (!c) continue;
                for (size_t j = 0; j < ambient; ++j)
                    row[j] = static_cast<uint8_t>((row[j] + c * v.rows()[i][j]) % q);
            }
            rows.push_back(row);
        }
        for (int i = 0; i < t; ++i) rows.push_back(random_gfq_vector(q, ambient, rng));
        SubspaceBasis u = SubspaceBasis::span(q, ambient, rows);
        if (static_cast<int>(u.dim()) == l - rho + t &&
            static_cast<int>(u.intersect(v).dim()) == l - rho)
            return u;
    }
    throw std::runtime_error("kk: channel sampling failed");
}

KKDecodeResult kk_decode(const KKCode& code, const SubspaceBasis& u) {
    const Field* f = code.field();
    std::vector<EvalFunctional> funcs;
    for (const auto& row : u.rows()) {
        auto [x, y] = code.unpack(row);
        funcs.push_back({{x, y}});
    }
    if (funcs.empty())
        return {DecodeStatus::zero_divisor, {}, InterpResult{ModulePoly(f, 1), {}}};

    MonomialOrder ord = MonomialOrder::bivariate(code.k());
    InterpResult interp = interpolate(funcs, ord, 1, f);
    FactorResult fac = factor_minimum(interp.minimum, code.k());
    KKDecodeResult result{fac.status, {}, std::move(interp)};
    if (fac.status == DecodeStatus::ok)
        for (int i = 0; i < code.k(); ++i) result.message.push_back(fac.f.coeff(i));
    return result;
}

}  // namespace linterp
