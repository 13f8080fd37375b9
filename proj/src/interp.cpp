#include "linterp/interp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace linterp {

MonomialOrder::MonomialOrder(std::vector<long> weights) : w_(std::move(weights)) {
    if (w_.empty() || w_[0] != 0)
        throw std::invalid_argument("order: weights must start with w_0 = 0");
    for (long w : w_)
        if (w < 0) throw std::invalid_argument("order: negative weight");
}

MonomialOrder MonomialOrder::multivariate(int L, long k) {
    std::vector<long> w(static_cast<size_t>(L) + 1);
    for (int j = 0; j <= L; ++j) w[j] = j * (k - 1);
    return MonomialOrder(std::move(w));
}

std::vector<Monomial> MonomialOrder::first_monomials(size_t n) const {
    long max_w = *std::max_element(w_.begin(), w_.end());
    std::vector<Monomial> monos;
    for (int j = 0; j < arity(); ++j)
        for (long i = 0; i <= static_cast<long>(n) + max_w; ++i)
            monos.push_back({static_cast<int>(i), j});
    std::sort(monos.begin(), monos.end(), [this](const Monomial& a, const Monomial& b) {
        return key(a) < key(b);
    });
    monos.resize(std::min(n, monos.size()));
    return monos;
}

bool ModulePoly::is_zero() const {
    for (const auto& l : comp_)
        if (!l.is_zero()) return false;
    return true;
}

ModulePoly ModulePoly::operator+(const ModulePoly& o) const {
    ModulePoly r = *this;
    for (size_t j = 0; j < comp_.size(); ++j) r.comp_[j] = comp_[j] + o.comp_[j];
    return r;
}

ModulePoly ModulePoly::operator-(const ModulePoly& o) const {
    ModulePoly r = *this;
    for (size_t j = 0; j < comp_.size(); ++j) r.comp_[j] = comp_[j] - o.comp_[j];
    return r;
}

ModulePoly ModulePoly::scaled(const FieldElement& c) const {
    ModulePoly r = *this;
    for (auto& l : r.comp_) l = l.scaled(c);
    return r;
}

ModulePoly ModulePoly::frobenius_shift() const {
    ModulePoly r = *this;
    for (auto& l : r.comp_) l = l.frobenius_shift();
    return r;
}

ModulePoly ModulePoly::compose_left(const LinPoly& l) const {
    ModulePoly r = *this;
    for (auto& c : r.comp_) c = l.compose(c);
    return r;
}

Monomial ModulePoly::leading_monomial(const MonomialOrder& ord) const {
    bool found = false;
    Monomial best{0, 0};
    for (int j = 0; j < static_cast<int>(comp_.size()); ++j) {
        if (comp_[j].is_zero()) continue;
        Monomial cand{comp_[j].q_degree(), j};
        if (!found || ord.key(best) < ord.key(cand)) { best = cand; found = true; }
    }
    if (!found) throw std::domain_error("module: zero polynomial has no order");
    return best;
}

OrderKey ModulePoly::order(const MonomialOrder& ord) const {
    return ord.key(leading_monomial(ord));
}

ModulePoly ModulePoly::normalized(const MonomialOrder& ord) const {
    if (is_zero()) return *this;
    return scaled(coeff(leading_monomial(ord)).inv());
}

std::string ModulePoly::str() const {
    std::ostringstream out;
    for (size_t j = 0; j < comp_.size(); ++j) {
        if (j) out << " | ";
        out << comp_[j].str();
    }
    return out.str();
}

FieldElement EvalFunctional::apply(const ModulePoly& q) const {
    if (static_cast<int>(points.size()) != q.upper_index() + 1)
        throw std::invalid_argument("functional: arity mismatch");
    FieldElement acc = fe_zero(q.field());
    for (size_t j = 0; j < points.size(); ++j)
        acc = acc + q.component(static_cast<int>(j)).eval(points[j]);
    return acc;
}

InterpResult interpolate(const std::vector<EvalFunctional>& functionals,
                         const MonomialOrder& ord, int L, const Field* f,
                         bool rescaled_order_increase) {
    if (functionals.empty())
        throw std::invalid_argument("interpolate: no functionals");
    if (ord.arity() != L + 1)
        throw std::invalid_argument("interpolate: order arity mismatch");

    std::vector<ModulePoly> g;
    for (int j = 0; j <= L; ++j) g.push_back(ModulePoly::basis(f, L, j));

    InterpResult result{g[0], {}};
    for (const auto& d : functionals) {
        InterpIteration it;
        for (int j = 0; j <= L; ++j) it.deltas.push_back(d.apply(g[j]));

        std::vector<int> nonzero;
        for (int j = 0; j <= L; ++j)
            if (!it.deltas[j].is_zero()) nonzero.push_back(j);

        if (!nonzero.empty()) {
            int jstar = nonzero[0];
            for (int j : nonzero)
                if (g[j].order(ord) < g[jstar].order(ord)) jstar = j;
            it.pivot = jstar;

            ModulePoly pivot_old = g[jstar];
            FieldElement delta_star = it.deltas[jstar];
            for (int j : nonzero) {
                if (j == jstar) continue;
                // cross-term update: order of g_j is preserved
                g[j] = g[j].scaled(delta_star) - pivot_old.scaled(it.deltas[j]);
            }
            ModulePoly shifted = pivot_old.frobenius_shift();
            if (rescaled_order_increase) {
                // g^q - Delta^(q-1) g, a scalar multiple of the literal form
                g[jstar] = shifted - pivot_old.scaled(delta_star.pow(f->q() - 1));
            } else {
                g[jstar] = shifted.scaled(delta_star) - pivot_old.scaled(d.apply(shifted));
            }
        }
        it.candidates = g;
        result.trace.push_back(std::move(it));
    }

    int best = 0;
    for (int j = 1; j <= L; ++j)
        if (g[j].order(ord) < g[best].order(ord)) best = j;
    result.minimum = g[best];
    return result;
}

EliminationResult interpolate_by_elimination(
    const std::vector<EvalFunctional>& functionals, const MonomialOrder& ord,
    int L, const Field* f, std::optional<size_t> monomial_count) {
    const size_t c_rows = functionals.size();
    const size_t n_cols = monomial_count.value_or(c_rows + 1);
    std::vector<Monomial> monos = ord.first_monomials(n_cols);

    // Constraint matrix over GF(q^m): row r, column c holds D_r(x^[i] o b_j).
    std::vector<std::vector<uint32_t>> mat(c_rows, std::vector<uint32_t>(monos.size(), 0));
    for (size_t r = 0; r < c_rows; ++r)
        for (size_t c = 0; c < monos.size(); ++c) {
            const auto& mono = monos[c];
            uint32_t p = functionals[r].points[mono.j].value();
            mat[r][c] = f->frobenius_k(p, mono.i);
        }

    // Row reduce, track pivot columns.
    std::vector<int> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < monos.size() && row < c_rows; ++col) {
        size_t sel = row;
        while (sel < c_rows && mat[sel][col] == 0) ++sel;
        if (sel == c_rows) continue;
        std::swap(mat[sel], mat[row]);
        uint32_t piv_inv = f->inv(mat[row][col]);
        for (auto& x : mat[row]) x = f->mul(x, piv_inv);
        for (size_t r = 0; r < c_rows; ++r) {
            if (r == row || mat[r][col] == 0) continue;
            uint32_t factor = mat[r][col];
            for (size_t c = 0; c < monos.size(); ++c)
                mat[r][c] = f->sub(mat[r][c], f->mul(factor, mat[row][c]));
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }

    std::vector<int> free_cols;
    for (size_t c = 0; c < monos.size(); ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(c)) ==
            pivot_col.end())
            free_cols.push_back(static_cast<int>(c));
    if (free_cols.empty())
        throw std::runtime_error("elimination: empty nullspace within monomial bound");

    // The nullspace vector attached to free column c has its last nonzero
    // coordinate exactly at c, so the smallest free column is the minimum.
    int cmin = free_cols[0];
    size_t multiplicity = 0;
    for (int c : free_cols)
        if (c <= cmin) ++multiplicity;

    ModulePoly minimum(f, L);
    {
        std::vector<uint32_t> x(monos.size(), 0);
        x[cmin] = 1;
        for (size_t r = 0; r < pivot_col.size(); ++r)
            x[pivot_col[r]] = f->neg(mat[r][cmin]);
        for (size_t c = 0; c < monos.size(); ++c) {
            if (!x[c]) continue;
            const auto& mono = monos[c];
            LinPoly comp = minimum.component(mono.j) +
                           LinPoly::monomial(f, mono.i, FieldElement(f, x[c]));
            minimum.set_component(mono.j, std::move(comp));
        }
    }
    return {minimum, multiplicity};
}

}  // namespace linterp
