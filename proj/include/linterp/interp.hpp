// Free L[x]-module elements, weighted monomial ordering, and the iterative
// module-minimization interpolation engine with its Gaussian-elimination
// counterpart.
#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "linterp/linpoly.hpp"

namespace linterp {

struct Monomial {
    int i;  // q-degree of the x part
    int j;  // module-basis index
    bool operator==(const Monomial&) const = default;
};

struct OrderKey {
    long weight;
    int index;
    auto operator<=>(const OrderKey&) const = default;
};

// Weighted total order on monomials x^[i] o b_j: key (i + w_j, j), compared
// lexicographically. w_0 = 0; the bivariate decoder uses w_1 = k-1, the
// multivariate one w_j = j(k-1).
class MonomialOrder {
public:
    explicit MonomialOrder(std::vector<long> weights);
    static MonomialOrder bivariate(long k) { return MonomialOrder({0, k - 1}); }
    static MonomialOrder multivariate(int L, long k);

    int arity() const { return static_cast<int>(w_.size()); }  // L + 1
    long weight(int j) const { return w_[j]; }
    OrderKey key(const Monomial& mono) const {
        return {mono.i + w_[mono.j], mono.j};
    }
    // Ascending list of the n smallest monomials.
    std::vector<Monomial> first_monomials(size_t n) const;

private:
    std::vector<long> w_;
};

// Q = sum_j l_j(x) o b_j.
class ModulePoly {
public:
    ModulePoly(const Field* f, int L)
        : f_(f), comp_(static_cast<size_t>(L) + 1, LinPoly::zero(f)) {}
    static ModulePoly basis(const Field* f, int L, int j) {
        ModulePoly p(f, L);
        p.comp_[j] = LinPoly::identity(f);
        return p;
    }

    const Field* field() const { return f_; }
    int upper_index() const { return static_cast<int>(comp_.size()) - 1; }  // L
    const LinPoly& component(int j) const { return comp_[j]; }
    void set_component(int j, LinPoly l) { comp_[j] = std::move(l); }
    bool is_zero() const;

    ModulePoly operator+(const ModulePoly& o) const;
    ModulePoly operator-(const ModulePoly& o) const;
    ModulePoly scaled(const FieldElement& c) const;
    ModulePoly frobenius_shift() const;          // x^[1] o Q, componentwise
    ModulePoly compose_left(const LinPoly& l) const;  // l o Q

    // Leading monomial under the given order. Throws on the zero polynomial.
    Monomial leading_monomial(const MonomialOrder& ord) const;
    OrderKey order(const MonomialOrder& ord) const;
    int ind_y(const MonomialOrder& ord) const { return leading_monomial(ord).j; }
    FieldElement coeff(const Monomial& mono) const { return comp_[mono.j].coeff(mono.i); }

    // Scalar-normalize to a monic leading coefficient.
    ModulePoly normalized(const MonomialOrder& ord) const;

    bool operator==(const ModulePoly& o) const = default;
    std::string str() const;  // components joined as Q0 | Q1 | ...

private:
    const Field* f_;
    std::vector<LinPoly> comp_;
};

// Linear functional D(Q) = sum_j l_j(p_j).
struct EvalFunctional {
    std::vector<FieldElement> points;  // arity L + 1
    FieldElement apply(const ModulePoly& q) const;
};

struct InterpIteration {
    std::vector<FieldElement> deltas;     // Delta_{i+1,j}, pre-update
    std::vector<ModulePoly> candidates;   // g_{i+1,j}, post-update
    std::optional<int> pivot;             // j*, absent when all deltas vanish
};

struct InterpResult {
    ModulePoly minimum;
    std::vector<InterpIteration> trace;   // one entry per functional
};

// Iterative interpolation: returns a nonzero minimum of the intersection of
// the functional kernels under the given order, together with the full
// candidate/discrepancy trace. With rescaled_order_increase the pivot update
// uses g^q - Delta^(q-1) g instead of the literal two-term form; the two
// differ by a nonzero scalar only.
InterpResult interpolate(const std::vector<EvalFunctional>& functionals,
                         const MonomialOrder& ord, int L, const Field* f,
                         bool rescaled_order_increase = false);

// Independent route: Gaussian elimination over the smallest monomials. Finds
// the minimal nullspace element of the functional constraint matrix, and
// reports the dimension of the nullspace slice at the minimal order key.
struct EliminationResult {
    ModulePoly minimum;
    size_t minimal_order_multiplicity;  // 1 iff the minimum is unique up to scalar
};
EliminationResult interpolate_by_elimination(
    const std::vector<EvalFunctional>& functionals, const MonomialOrder& ord,
    int L, const Field* f, std::optional<size_t> monomial_count = std::nullopt);

}  // namespace linterp
