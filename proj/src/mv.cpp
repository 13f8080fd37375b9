#include "linterp/mv.hpp"

#include <stdexcept>

namespace linterp {
namespace {

// {gamma^[0], ..., gamma^[ml-1]} linearly independent over GF(q)?
bool is_normal(const Field& big, uint32_t gamma) {
    const int n = static_cast<int>(big.m());
    std::vector<FieldElement> conj;
    uint32_t v = gamma;
    for (int i = 0; i < n; ++i) {
        conj.emplace_back(&big, v);
        v = big.frobenius(v);
    }
    return rank_of_vector(conj, big) == static_cast<size_t>(n);
}

}  // namespace

void MVCode::validate_params() const {
    if (l_ < 1 || (q_ - 1) % l_ != 0)
        throw std::invalid_argument("mv: l must divide q - 1");
    if (k_ < 1 || L_ < 1) throw std::invalid_argument("mv: need k >= 1 and L >= 1");
    if (static_cast<long>(m_) * l_ - static_cast<long>(L_) * (k_ - 1) - 1 < 0)
        throw std::invalid_argument("mv: q-degree budget for Q_L is negative");
}

void MVCode::init_roots() {
    const Field* f = big_.get();
    // Roots of x^l - 1 over GF(q); the scan starts at x = 1, so e_1 = 1.
    for (uint32_t x = 1; x < q_; ++x) {
        uint64_t p = 1;
        for (int i = 0; i < l_; ++i) p = p * x % q_;
        if (p == 1) e_.emplace_back(f, x);
    }
    if (static_cast<int>(e_.size()) != l_)
        throw std::runtime_error("mv: wrong number of roots of unity");
}

bool MVCode::try_gamma(uint32_t gamma_value) {
    const Field* f = big_.get();
    if (gamma_value == 0 || !is_normal(*f, gamma_value)) return false;
    FieldElement g(f, gamma_value);
    std::vector<FieldElement> alphas;
    for (int i = 0; i < l_; ++i) {
        FieldElement a = fe_zero(f);
        FieldElement es = fe_one(f);
        for (int s = 0; s < l_; ++s) {
            a = a + es * g.frobenius_k(static_cast<int64_t>(m_) * s);
            es = es * e_[i];
        }
        alphas.push_back(a);
    }
    std::vector<FieldElement> conjugates;
    for (int i = 0; i < l_; ++i)
        for (int j = 0; j < m_; ++j) conjugates.push_back(alphas[i].frobenius_k(j));
    if (rank_of_vector(conjugates, *f) != static_cast<size_t>(m_) * l_) return false;
    gamma_ = g;
    alpha_ = std::move(alphas);
    return true;
}

MVCode::MVCode(uint32_t q, int m, int l, int k, int list_size, uint64_t seed)
    : q_(q), m_(m), l_(l), k_(k), L_(list_size) {
    validate_params();
    big_ = Field::make(q_, static_cast<uint32_t>(m_) * l_);
    init_roots();
    Rng rng(seed);
    std::uniform_int_distribution<uint64_t> dist(1, big_->size() - 1);
    bool found = false;
    for (int attempt = 0; attempt < 1000 && !found; ++attempt)
        found = try_gamma(static_cast<uint32_t>(dist(rng)));
    if (!found) throw std::runtime_error("mv: no suitable normal element found");
    init_subfield();
}

MVCode::MVCode(uint32_t q, int m, int l, int k, int list_size,
               std::vector<uint8_t> modulus, uint32_t gamma_value)
    : q_(q), m_(m), l_(l), k_(k), L_(list_size) {
    validate_params();
    big_ = Field::make(q_, static_cast<uint32_t>(m_) * l_, std::move(modulus));
    init_roots();
    if (!try_gamma(gamma_value))
        throw std::invalid_argument("mv: gamma is not a usable normal element");
    init_subfield();
}

void MVCode::init_subfield() {
    const Field* f = big_.get();
    // GF(q^m) inside GF(q^(ml)) is the fixed field of the m-fold Frobenius.
    std::vector<FieldElement> subfield;
    for (uint32_t v = 0; v < f->size(); ++v)
        if (f->frobenius_k(v, m_) == v) subfield.emplace_back(f, v);
    QMatrix mat(q_, 0, f->m());
    for (const auto& s : subfield) mat.append_row(f->coords(s.value()));
    size_t rank = mat.rref();
    if (rank != static_cast<size_t>(m_))
        throw std::runtime_error("mv: unexpected subfield dimension");
    for (size_t i = 0; i < rank; ++i)
        subfield_basis_.emplace_back(f, f->from_coords(mat.row(i)));
    // Enumerate all q^m combinations once; the lookup inverts coordinates.
    uint64_t combos = 1;
    for (int i = 0; i < m_; ++i) combos *= q_;
    for (uint64_t idx = 0; idx < combos; ++idx) {
        std::vector<uint8_t> c(m_);
        uint64_t t = idx;
        for (int i = 0; i < m_; ++i) { c[i] = static_cast<uint8_t>(t % q_); t /= q_; }
        subfield_map_[from_subfield_coords(c).value()] = c;
    }
}

bool MVCode::in_subfield(const FieldElement& x) const {
    return subfield_map_.count(x.value()) > 0;
}

std::vector<uint8_t> MVCode::subfield_coords(const FieldElement& x) const {
    auto it = subfield_map_.find(x.value());
    if (it == subfield_map_.end())
        throw std::invalid_argument("mv: element not in GF(q^m)");
    return it->second;
}

FieldElement MVCode::from_subfield_coords(const std::vector<uint8_t>& c) const {
    const Field* f = big_.get();
    FieldElement acc = fe_zero(f);
    for (int i = 0; i < m_; ++i)
        acc = acc + FieldElement(f, c[i] % q_) * subfield_basis_[i];
    return acc;
}

LinPoly MVCode::message_poly(const std::vector<uint8_t>& u) const {
    if (static_cast<int>(u.size()) != k_)
        throw std::invalid_argument("mv: message length mismatch");
    std::vector<uint32_t> coeffs;
    for (uint8_t d : u) {
        if (d >= q_) throw std::invalid_argument("mv: message digit outside GF(q)");
        coeffs.push_back(d);
    }
    return {big_.get(), std::move(coeffs)};
}

SubspaceBasis MVCode::encode(const std::vector<uint8_t>& u) const {
    LinPoly poly = message_poly(u);

    // Iterated compositions u^(x)j, j = 0..L.
    std::vector<LinPoly> upow{LinPoly::identity(big_.get())};
    for (int j = 1; j <= L_; ++j) upow.push_back(poly.compose(upow.back()));

    std::vector<std::vector<uint8_t>> rows;
    for (int i = 0; i < l_; ++i) {
        std::vector<uint8_t> row(ambient(), 0);
        size_t off = i * block_size();
        row[off] = 1;  // alpha component is alpha_(i+1) itself
        for (int j = 1; j <= L_; ++j) {
            FieldElement y = upow[j].eval(alpha_[i]);
            if (i > 0) y = y * alpha_[i].inv();
            auto c = subfield_coords(y);  // throws if not in GF(q^m)
            for (int s = 0; s < m_; ++s) row[off + 1 + (j - 1) * m_ + s] = c[s];
        }
        rows.push_back(row);
    }
    SubspaceBasis v = SubspaceBasis::span(q_, ambient(), rows);
    if (static_cast<int>(v.dim()) != l_)
        throw std::runtime_error("mv: codeword subspace dropped dimension");
    return v;
}

SubspaceBasis mv_channel(const MVCode& code, const SubspaceBasis& v, int t,
                         uint64_t seed) {
    if (t < 0 || v.dim() + t > code.ambient())
        throw std::invalid_argument("mv: infeasible error dimension");
    Rng rng(seed);
    std::uniform_int_distribution<int> pick_block(0, code.l() - 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::vector<uint8_t>> rows = v.rows();
        for (int i = 0; i < t; ++i) {
            // An error dimension corrupts a single alpha block.
            std::vector<uint8_t> row(code.ambient(), 0);
            size_t off = pick_block(rng) * code.block_size();
            auto block = random_gfq_vector(code.q(), code.block_size(), rng);
            std::copy(block.begin(), block.end(), row.begin() + off);
            rows.push_back(std::move(row));
        }
        SubspaceBasis u = SubspaceBasis::span(code.q(), code.ambient(), rows);
        if (u.dim() == v.dim() + t) return u;
    }
    throw std::runtime_error("mv: channel sampling failed");
}

MVExtraction mv_extract_points(const MVCode& code, const SubspaceBasis& u) {
    const Field* f = code.big_field();
    const int l = code.l(), m = code.m(), L = code.list_size();
    MVExtraction out;
    const size_t bs = code.block_size();
    for (int i = 0; i < l; ++i) {
        // U_i is the part of U living in the i-th alpha block.
        std::vector<std::vector<uint8_t>> block;
        for (size_t c = i * bs; c < (i + 1) * bs; ++c) {
            std::vector<uint8_t> row(code.ambient(), 0);
            row[c] = 1;
            block.push_back(row);
        }
        SubspaceBasis ui =
            u.intersect(SubspaceBasis::span(code.q(), code.ambient(), block));
        out.r.push_back(ui.dim());

        const size_t off = i * bs;
        for (const auto& row : ui.rows()) {
            std::vector<FieldElement> tuple;
            FieldElement x =
                FieldElement(f, row[off] % code.q()) * code.alphas()[i];
            tuple.push_back(x);
            for (int j = 1; j <= L; ++j) {
                std::vector<uint8_t> c(row.begin() + off + 1 + (j - 1) * m,
                                       row.begin() + off + 1 + j * m);
                FieldElement y = code.from_subfield_coords(c);
                if (i > 0) y = y * code.alphas()[i];  // rescale U_i to U'_i
                tuple.push_back(y);
            }
            for (int h = 0; h < m; ++h) {
                std::vector<FieldElement> pts;
                for (const auto& p : tuple) pts.push_back(p.frobenius_k(h));
                out.functionals.push_back({std::move(pts)});
            }
        }
    }
    return out;
}

MVInterpResult mv_interpolate(const MVCode& code,
                              const std::vector<EvalFunctional>& functionals) {
    const Field* f = code.big_field();
    const int L = code.list_size();
    MonomialOrder ord = MonomialOrder::multivariate(L, code.k());
    InterpResult interp = interpolate(functionals, ord, L, f);
    bool ok = true;
    for (int s = 0; s <= L; ++s) {
        long bound = static_cast<long>(code.m()) * code.l() -
                     static_cast<long>(s) * (code.k() - 1) - 1;
        if (interp.minimum.component(s).q_degree() > bound) ok = false;
    }
    return {interp.minimum, ok, std::move(interp)};
}

}  // namespace linterp
