#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linterp/kk.hpp"

using namespace linterp;

namespace {

std::shared_ptr<const Field> gf32() { return Field::make(2, 5, {1, 0, 1, 0, 0, 1}); }

std::vector<FieldElement> random_message(const Field* f, int k, Rng& rng) {
    std::uniform_int_distribution<uint32_t> dist(0, static_cast<uint32_t>(f->size() - 1));
    std::vector<FieldElement> u;
    for (int i = 0; i < k; ++i) u.emplace_back(f, dist(rng));
    return u;
}

}  // namespace

TEST_CASE("construction and packing") {
    auto f = gf32();
    KKCode code(f, 4, 2);
    CHECK(code.ambient() == 9);
    CHECK(code.alphas().size() == 4);

    // pack then unpack is the identity on (alpha-combination, beta) pairs
    Rng rng(3);
    std::uniform_int_distribution<uint32_t> bit(0, 1);
    std::uniform_int_distribution<uint32_t> el(0, 31);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<uint8_t> ac(4);
        for (auto& c : ac) c = static_cast<uint8_t>(bit(rng));
        FieldElement beta(f.get(), el(rng));
        auto row = code.pack(ac, beta);
        REQUIRE(row.size() == code.ambient());
        auto [a_comb, b] = code.unpack(row);
        FieldElement expect = fe_zero(f.get());
        for (int i = 0; i < 4; ++i)
            if (ac[i]) expect = expect + code.alphas()[i];
        CHECK(a_comb == expect);
        CHECK(b == beta);
    }

    // dependent alphas are rejected
    auto a = [&](uint64_t k) { return fe_alpha_pow(f.get(), k); };
    CHECK_THROWS_AS(KKCode(f, 3, 1, {a(1), a(2), a(1) + a(2)}), std::invalid_argument);
}

TEST_CASE("codewords are l-dimensional graphs of the message map") {
    auto f = gf32();
    KKCode code(f, 4, 2);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto u = random_message(f.get(), 2, rng);
        SubspaceBasis v = code.encode(u);
        CHECK(v.dim() == 4);
    }

    // for k = 1 the message polynomial is u0 * x; every spanned vector is
    // (gamma, u0 * gamma) for gamma in <alphas>
    KKCode c1(f, 4, 1);
    auto u = random_message(f.get(), 1, rng);
    SubspaceBasis v = c1.encode(u);
    for (uint32_t mask = 0; mask < 16; ++mask) {
        FieldElement gamma = fe_zero(f.get());
        std::vector<uint8_t> ac(4);
        for (int i = 0; i < 4; ++i)
            if (mask >> i & 1) {
                ac[i] = 1;
                gamma = gamma + c1.alphas()[i];
            }
        CHECK(v.contains(c1.pack(ac, u[0] * gamma)));
    }
}

TEST_CASE("operator channel dimension equations") {
    auto f = gf32();
    KKCode code(f, 4, 2);
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        auto u = random_message(f.get(), 2, rng);
        SubspaceBasis v = code.encode(u);
        int rho = trial % 3, t = (trial / 3) % 3;
        SubspaceBasis out = kk_channel(code, v, rho, t, 100 + trial);
        CHECK(out.dim() == static_cast<size_t>(4 - rho + t));
        CHECK(out.intersect(v).dim() == static_cast<size_t>(4 - rho));
        CHECK(subspace_distance(out, v) == static_cast<size_t>(rho + t));
    }

    // identity channel returns V itself; pure erasure stays inside V
    auto u = random_message(f.get(), 2, rng);
    SubspaceBasis v = code.encode(u);
    CHECK(kk_channel(code, v, 0, 0, 1) == v);
    SubspaceBasis sub = kk_channel(code, v, 1, 0, 2);
    CHECK(sub.dim() == 3);
    CHECK(sub.sum(v) == v);
    // determinism per seed
    CHECK(kk_channel(code, v, 1, 1, 9) == kk_channel(code, v, 1, 1, 9));
}

TEST_CASE("decoding succeeds across the guaranteed region") {
    auto f = gf32();
    Rng rng(11);
    for (auto [l, k] : {std::pair{4, 1}, std::pair{5, 2}}) {
        KKCode code(f, l, k);
        for (int rho = 0; rho < l - k + 1; ++rho)
            for (int t = 0; rho + t < l - k + 1; ++t)
                for (int rep = 0; rep < 10; ++rep) {
                    auto u = random_message(f.get(), k, rng);
                    SubspaceBasis v = code.encode(u);
                    SubspaceBasis recv =
                        kk_channel(code, v, rho, t, 1000 * rho + 100 * t + rep);
                    auto result = kk_decode(code, recv);
                    REQUIRE(result.status == DecodeStatus::ok);
                    CHECK(result.message == u);
                }
    }
}

TEST_CASE("interpolation degrees stay within the design bounds") {
    auto f = gf32();
    KKCode code(f, 5, 2);
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int rho = trial % 2, t = trial / 10;
        if (rho + t >= 4) continue;
        auto u = random_message(f.get(), 2, rng);
        SubspaceBasis recv =
            kk_channel(code, code.encode(u), rho, t, 77 + trial);
        auto result = kk_decode(code, recv);
        REQUIRE(result.status == DecodeStatus::ok);
        // r functionals raise the weighted order at most r times, capping the
        // component degrees under the (0, k-1) weighting
        long r = static_cast<long>(recv.dim());
        CHECK(result.interp.minimum.component(0).q_degree() <= r);
        CHECK(result.interp.minimum.component(1).q_degree() <= r - code.k() + 1);
    }
}

TEST_CASE("boundary and hostile inputs do not crash") {
    auto f = gf32();
    KKCode code(f, 4, 2);
    Rng rng(17);
    auto u = random_message(f.get(), 2, rng);
    SubspaceBasis v = code.encode(u);

    // at the boundary rho + t = l - k + 1 the decoder may fail but must be
    // deterministic and safe
    for (int rep = 0; rep < 20; ++rep) {
        SubspaceBasis recv = kk_channel(code, v, 2, 1, 500 + rep);
        auto r1 = kk_decode(code, recv);
        auto r2 = kk_decode(code, recv);
        CHECK(r1.status == r2.status);
        CHECK(r1.message == r2.message);
        if (r1.status == DecodeStatus::ok) {
            // any claimed answer must be a codeword at plausible distance
            SubspaceBasis cw = code.encode(r1.message);
            CHECK(subspace_distance(cw, recv) <= 9);
        }
    }

    // the zero subspace fails cleanly
    SubspaceBasis empty(f->q(), code.ambient());
    auto r = kk_decode(code, empty);
    CHECK(r.status != DecodeStatus::ok);
}
