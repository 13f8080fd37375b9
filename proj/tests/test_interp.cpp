#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linterp/interp.hpp"
#include "linterp/matrix.hpp"

using namespace linterp;

namespace {

std::shared_ptr<const Field> gf64() { return Field::make(2, 6, {1, 1, 0, 0, 0, 0, 1}); }
std::shared_ptr<const Field> gf8() { return Field::make(2, 3, {1, 1, 0, 1}); }

FieldElement random_elem(const Field* f, Rng& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, static_cast<uint32_t>(f->size() - 1));
    return {f, dist(rng)};
}

std::vector<EvalFunctional> random_functionals(const Field* f, int arity,
                                               size_t count, Rng& rng) {
    std::vector<EvalFunctional> out;
    for (size_t i = 0; i < count; ++i) {
        std::vector<FieldElement> pts;
        for (int j = 0; j < arity; ++j) pts.push_back(random_elem(f, rng));
        out.push_back({std::move(pts)});
    }
    return out;
}

ModulePoly random_module_poly(const Field* f, int L, int max_deg, Rng& rng) {
    ModulePoly q(f, L);
    std::uniform_int_distribution<int> ddist(0, max_deg);
    std::uniform_int_distribution<uint32_t> dist(0, static_cast<uint32_t>(f->size() - 1));
    for (int j = 0; j <= L; ++j) {
        std::vector<uint32_t> c(ddist(rng) + 1);
        for (auto& x : c) x = dist(rng);
        q.set_component(j, LinPoly(f, std::move(c)));
    }
    return q;
}

}  // namespace

TEST_CASE("monomial order keys and leading monomials") {
    auto f = gf64();
    MonomialOrder ord = MonomialOrder::bivariate(2);  // w = (0, 1)

    ModulePoly y = ModulePoly::basis(f.get(), 1, 1);
    CHECK(y.order(ord) == OrderKey{1, 1});
    CHECK(y.leading_monomial(ord) == Monomial{0, 1});

    // x^[1] + y: equal weight, the higher basis index is the greater monomial
    ModulePoly q(f.get(), 1);
    q.set_component(0, LinPoly::monomial(f.get(), 1));
    q.set_component(1, LinPoly::identity(f.get()));
    CHECK(q.leading_monomial(ord) == Monomial{0, 1});
    CHECK(q.ind_y(ord) == 1);

    // the worked final minimum: leading monomial y^[2]
    auto a = [&](uint64_t k) { return fe_alpha_pow(f.get(), k); };
    ModulePoly final_min(f.get(), 1);
    final_min.set_component(0, LinPoly(f.get(), {a(29).value(), 1, a(4).value()}));
    final_min.set_component(1, LinPoly(f.get(), {a(29).value(), 1, a(4).value()}));
    CHECK(final_min.leading_monomial(ord) == Monomial{2, 1});
    CHECK(final_min.ind_y(ord) == 1);

    ModulePoly zero(f.get(), 1);
    CHECK_THROWS_AS(zero.order(ord), std::domain_error);
}

TEST_CASE("functional application") {
    auto f = gf64();
    auto a = [&](uint64_t k) { return fe_alpha_pow(f.get(), k); };

    // row i = 2 candidate g_0 evaluated at (x_2, y_2) gives Delta_0 = a^7
    ModulePoly g0(f.get(), 1);
    g0.set_component(0, LinPoly(f.get(), {a(31).value(), a(5).value(), 1}));
    EvalFunctional d{{a(32), a(19)}};
    CHECK(d.apply(g0) == a(7));

    CHECK(d.apply(ModulePoly(f.get(), 1)).is_zero());

    // a functional whose y point is zero kills b_1
    EvalFunctional dx{{a(3), fe_zero(f.get())}};
    CHECK(dx.apply(ModulePoly::basis(f.get(), 1, 1)).is_zero());
}

TEST_CASE("frobenius shift raises the order key by one weight step") {
    auto f = gf8();
    MonomialOrder ord = MonomialOrder::bivariate(3);
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        ModulePoly q = random_module_poly(f.get(), 1, 3, rng);
        if (q.is_zero()) continue;
        OrderKey before = q.order(ord);
        OrderKey after = q.frobenius_shift().order(ord);
        CHECK(after.weight == before.weight + 1);
        CHECK(after.index == before.index);
    }
    CHECK(ModulePoly(f.get(), 1).frobenius_shift().is_zero());
}

TEST_CASE("single functional with zero y point") {
    // With points (beta, 0) the y basis element lies in the kernel, but the
    // x-sector kernel element x^[1] - beta^(q-1) x has the strictly smaller
    // key (1, 0) under the (0, k-1) weighting, so it is the minimum.
    auto f = gf8();
    MonomialOrder ord = MonomialOrder::bivariate(2);
    FieldElement beta = fe_alpha(f.get());
    std::vector<EvalFunctional> funcs{{{beta, fe_zero(f.get())}}};
    InterpResult r = interpolate(funcs, ord, 1, f.get());

    ModulePoly expect(f.get(), 1);
    expect.set_component(0, lp_annihilator(f.get(), {beta}));
    CHECK(r.minimum.normalized(ord) == expect);

    // y survives untouched as the sector-1 candidate
    CHECK(r.trace.back().candidates[1] == ModulePoly::basis(f.get(), 1, 1));
}

TEST_CASE("interpolation output lies in every kernel and stays sectored") {
    auto f = gf8();
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int L = 1 + trial % 2;
        long k = 1 + trial % 3;
        MonomialOrder ord = MonomialOrder::multivariate(L, k);
        auto funcs = random_functionals(f.get(), L + 1, 2 + trial % 4, rng);
        InterpResult r = interpolate(funcs, ord, L, f.get());

        REQUIRE_FALSE(r.minimum.is_zero());
        for (const auto& d : funcs) CHECK(d.apply(r.minimum).is_zero());

        // trace invariants
        for (size_t i = 0; i < r.trace.size(); ++i) {
            const auto& it = r.trace[i];
            for (int j = 0; j <= L; ++j) {
                const ModulePoly& g = it.candidates[j];
                REQUIRE_FALSE(g.is_zero());
                CHECK(g.ind_y(ord) == j);  // sector discipline
                for (size_t p = 0; p <= i; ++p)
                    CHECK(funcs[p].apply(g).is_zero());  // kernel membership
                if (i > 0) {
                    OrderKey prev = r.trace[i - 1].candidates[j].order(ord);
                    OrderKey cur = g.order(ord);
                    CHECK(prev <= cur);
                    if (it.pivot && *it.pivot == j) CHECK(prev < cur);
                    if (it.pivot && *it.pivot != j) CHECK(prev == cur);
                }
            }
            // candidates keep pairwise distinct orders, so the argmin is unique
            for (int j1 = 0; j1 <= L; ++j1)
                for (int j2 = j1 + 1; j2 <= L; ++j2)
                    CHECK(it.candidates[j1].order(ord) != it.candidates[j2].order(ord));
        }
    }
}

TEST_CASE("agrees with the elimination route on random small instances") {
    Rng rng(29);
    auto f8 = gf8();
    auto f16 = Field::make(2, 4, {1, 1, 0, 0, 1});
    for (int trial = 0; trial < 60; ++trial) {
        const Field* f = trial % 2 ? f16.get() : f8.get();
        int L = 1 + trial % 2;
        long k = 1 + trial % 3;
        MonomialOrder ord = MonomialOrder::multivariate(L, k);
        auto funcs = random_functionals(f, L + 1, 1 + trial % 5, rng);

        InterpResult iterative = interpolate(funcs, ord, L, f);
        EliminationResult direct = interpolate_by_elimination(funcs, ord, L, f);

        CHECK(iterative.minimum.normalized(ord) == direct.minimum.normalized(ord));
        CHECK(direct.minimal_order_multiplicity == 1);
    }
}

TEST_CASE("two functionals over GF(8) with unweighted order match the oracle") {
    auto f = gf8();
    MonomialOrder ord({0, 0});
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto funcs = random_functionals(f.get(), 2, 2, rng);
        InterpResult r = interpolate(funcs, ord, 1, f.get());
        EliminationResult e = interpolate_by_elimination(funcs, ord, 1, f.get());
        CHECK(r.minimum.normalized(ord) == e.minimum.normalized(ord));
    }
}

TEST_CASE("rescaled order-increase differs only by scalars") {
    auto f = gf64();
    Rng rng(37);
    MonomialOrder ord = MonomialOrder::bivariate(2);
    for (int trial = 0; trial < 20; ++trial) {
        auto funcs = random_functionals(f.get(), 2, 5, rng);
        InterpResult lit = interpolate(funcs, ord, 1, f.get(), false);
        InterpResult res = interpolate(funcs, ord, 1, f.get(), true);
        CHECK(lit.minimum.normalized(ord) == res.minimum.normalized(ord));
    }
}

TEST_CASE("kernels are closed under left composition") {
    auto f = gf8();
    Rng rng(41);
    std::uniform_int_distribution<uint32_t> dist(0, 7);
    for (int trial = 0; trial < 200; ++trial) {
        int L = 1 + trial % 2;
        EvalFunctional d{{}};
        for (int j = 0; j <= L; ++j) d.points.push_back(random_elem(f.get(), rng));

        // manufacture Q with D(Q) = 0 from two random module elements
        ModulePoly q1 = random_module_poly(f.get(), L, 3, rng);
        ModulePoly q2 = random_module_poly(f.get(), L, 3, rng);
        FieldElement d1 = d.apply(q1), d2 = d.apply(q2);
        ModulePoly q = q1.scaled(d2) - q2.scaled(d1);
        REQUIRE(d.apply(q).is_zero());

        std::vector<uint32_t> c(1 + trial % 3 + 1);
        for (auto& x : c) x = dist(rng);
        LinPoly l(f.get(), std::move(c));
        CHECK(d.apply(q.compose_left(l)).is_zero());
    }
}
