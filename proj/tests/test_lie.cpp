#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mihopf/lie.hpp"

#include <vector>

using namespace mihopf;

static Params P14() { return Params{.alpha = Rat(1, 4)}; }

namespace {

// A small pool of multi-indices touching every letter shape.
std::vector<MultiIndex> index_pool() {
    return {
        MultiIndex{},
        ek(0),
        ek(1),
        ek(0, 2),
        ek(2),
        ek(0) + ek(1),
        en({1, 0}),
        en({0, 1}),
        ek(1) + en({1, 0}),
        ek(2) + en({1, 0}) + en({0, 1}),
        ek(0) + en({2, 0}),
    };
}

std::vector<Generator> generator_pool() {
    std::vector<Generator> g{Generator::Del(1), Generator::Del(2)};
    for (const auto& gamma : index_pool())
        for (N2 n : {N2{0, 0}, N2{1, 0}, N2{0, 1}}) g.push_back(Generator::ZD(gamma, n));
    return g;
}

} // namespace

TEST_CASE("derivations on monomials") {
    Params p = P14();
    Series z0 = Series::monomial(ek(0));
    CHECK(apply_generator(Generator::ZD({}, {0, 0}), z0, p) == Series::monomial(ek(1)));
    // Leibniz on a product monomial: D^(0)(z0 z1) = z1^2 + 2 z0 z2
    Series z0z1 = Series::monomial(ek(0) + ek(1));
    Series expect = Series::monomial(ek(1, 2)) + Series::monomial(ek(0) + ek(2), 2);
    CHECK(apply_generator(Generator::ZD({}, {0, 0}), z0z1, p) == expect);
    // del_1 moves polynomial letters up and seeds z_(1,0) z_{k+1} from z_k
    CHECK(apply_generator(Generator::Del(1), Series::monomial(en({0, 1})), p) ==
          Series::monomial(en({1, 1})));
    CHECK(apply_generator(Generator::Del(1), z0, p) ==
          Series::monomial(en({1, 0}) + ek(1)));
}

TEST_CASE("matrix entries") {
    Params p = P14();
    CHECK(matrix_entry(Generator::ZD({}, {0, 0}), ek(0), ek(1), p) == 1);
    CHECK(matrix_entry(Generator::ZD(ek(0), {0, 0}), ek(0), ek(0) + ek(1), p) == 1);
    // (D^((1,0)))_beta^{beta + e_(1,0)} = (beta + e_(1,0))((1,0))
    for (const auto& beta : index_pool()) {
        MultiIndex g = beta + en({1, 0});
        CHECK(matrix_entry(Generator::ZD({}, {1, 0}), g, beta, p) ==
              Rat(g.at(Letter::Nn({1, 0}))));
    }
}

TEST_CASE("pre-Lie product") {
    Params p = P14();
    auto d0 = [](MultiIndex g) { return Generator::ZD(std::move(g), {0, 0}); };
    CHECK(pre_lie(d0(ek(0)), d0(ek(0)), p) == LieElement::single(d0(ek(0) + ek(1))));
    CHECK(pre_lie(Generator::ZD(ek(0) + ek(1), {1, 0}), Generator::Del(1), p) ==
          LieElement::single(d0(ek(0) + ek(1))));
    CHECK(pre_lie(Generator::Del(1), d0(ek(0)), p) ==
          LieElement::single(d0(ek(1) + en({1, 0}))));
    CHECK(pre_lie(d0(ek(0)), Generator::Del(2), p).is_zero());
    CHECK_THROWS_AS(pre_lie(Generator::Del(1), Generator::Del(2), p), UndefinedPreLie);
}

TEST_CASE("Lie brackets") {
    Params p = P14();
    LieElement del1 = LieElement::single(Generator::Del(1));
    LieElement del2 = LieElement::single(Generator::Del(2));
    CHECK(lie_bracket(del1, del2, p).is_zero());

    LieElement a = LieElement::single(Generator::ZD(ek(0), {1, 0}));
    LieElement expect = LieElement::single(Generator::ZD(ek(0), {0, 0})) -
                        LieElement::single(Generator::ZD(ek(1) + en({1, 0}), {1, 0}));
    CHECK(lie_bracket(a, del1, p) == expect);

    LieElement d0e0 = LieElement::single(Generator::ZD(ek(0), {0, 0}));
    CHECK(lie_bracket(d0e0, d0e0, p).is_zero());
}

TEST_CASE("commutators of the plain derivations") {
    Params p = P14();
    for (int a1 = 0; a1 <= 4; ++a1)
        for (int b1 = 0; a1 + 2 * b1 <= 4; ++b1) {
            N2 n{a1, b1};
            LieElement dn = LieElement::single(Generator::ZD({}, n));
            for (int a2 = 0; a2 <= 4; ++a2)
                for (int b2 = 0; a2 + 2 * b2 <= 4; ++b2) {
                    LieElement dm = LieElement::single(Generator::ZD({}, N2{a2, b2}));
                    CHECK(lie_bracket(dn, dm, p).is_zero());
                }
            // [D^(n), del_1] = n_1 D^(n - (1,0))
            LieElement del1 = LieElement::single(Generator::Del(1));
            LieElement expect;
            if (n.a > 0)
                expect = LieElement::single(Generator::ZD({}, N2{n.a - 1, n.b}), Rat(n.a));
            CHECK(lie_bracket(dn, del1, p) == expect);
            // [D^(n), del_2] = n_2 D^(n - (0,1))
            LieElement del2 = LieElement::single(Generator::Del(2));
            LieElement expect2;
            if (n.b > 0)
                expect2 = LieElement::single(Generator::ZD({}, N2{n.a, n.b - 1}), Rat(n.b));
            CHECK(lie_bracket(dn, del2, p) == expect2);
        }
}

TEST_CASE("membership in the Lie algebra") {
    Params p = P14();
    CHECK(in_lie_algebra(MultiIndex{}, {0, 0}, Mode::FULL, p));
    // |e_1 + e_(1,0)| = alpha + 1 <= |(2,0)| = 2 at alpha = 1/4
    CHECK_FALSE(in_lie_algebra(ek(1) + en({1, 0}), {2, 0}, Mode::FULL, p));
    CHECK(in_lie_algebra(ek(1) + en({1, 0}), {1, 0}, Mode::FULL, p));
    CHECK_FALSE(in_lie_algebra(en({1, 0}, 2), {0, 0}, Mode::FULL, p)); // [gamma] < 0
    CHECK(in_lie_algebra(ek(0), {0, 0}, Mode::RP, p));
    CHECK_FALSE(in_lie_algebra(ek(0, 2), {0, 0}, Mode::RP, p));
    CHECK_FALSE(in_lie_algebra(ek(0), {1, 0}, Mode::RP, p));
    CHECK(in_lie_algebra(ec(0, 2) + ec(1, 0, 2), {0, 0}, Mode::RP2, p));
    CHECK_FALSE(in_lie_algebra(ec(0, 1) + ec(1, 2), {0, 0}, Mode::RP2, p));
}

TEST_CASE("triangularity of matrix entries") {
    Params p = P14();
    auto pool = index_pool();
    for (const auto& g : generator_pool()) {
        if (!g.is_del && !in_lie_algebra(g.gamma, g.n, Mode::FULL, p)) continue;
        for (const auto& gamma : pool) {
            Series img = apply_generator(g, Series::monomial(gamma), p);
            for (const auto& [beta, c] : img.terms()) {
                CHECK(c != 0);
                CHECK(p.lt(homogeneity(gamma, p), homogeneity(beta, p)));
            }
        }
    }
}

TEST_CASE("bigrade additivity under the pre-Lie product") {
    Params p = P14();
    auto gens = generator_pool();
    for (const auto& g1 : gens)
        for (const auto& g2 : gens) {
            if (g1.is_del && g2.is_del) continue;
            Bigrade want = bigrade(g1, p) + bigrade(g2, p);
            for (const auto& [g, c] : pre_lie(g1, g2, p).t) {
                (void)c;
                CHECK(bigrade(g, p) == want);
            }
        }
}

TEST_CASE("transposed derivations preserve the polynomial sector") {
    Params p = P14();
    // matrix_entry(g, gamma, e_n) = 0 unless gamma is itself a unit polynomial index
    std::vector<N2> ns{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    for (const auto& g : generator_pool())
        for (const auto& gamma : index_pool()) {
            if (gamma.length() == 1 && gamma.entries().front().first.kind == Letter::ZN) continue;
            for (N2 n : ns) CHECK(matrix_entry(g, gamma, en(n), p) == 0);
        }
}

TEST_CASE("generators act as derivations") {
    Params p = P14();
    Series a = Series::monomial(ek(0)) + Series::monomial(en({1, 0}), Rat(2));
    Series b = Series::monomial(ek(1) + en({0, 1})) + Series::monomial(ek(2), Rat(1, 3));
    for (const auto& g : generator_pool()) {
        Series lhs = apply_generator(g, a * b, p);
        Series rhs = apply_generator(g, a, p) * b + a * apply_generator(g, b, p);
        CHECK(lhs == rhs);
    }
}
