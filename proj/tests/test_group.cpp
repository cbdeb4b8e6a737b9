#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mihopf/group.hpp"

#include <set>
#include <vector>

using namespace mihopf;

static Params P14() { return Params{.alpha = Rat(1, 4)}; }

namespace {

std::vector<MultiIndex> model_pool() {
    return {MultiIndex{}, ek(0),      ek(1),      ek(0, 2),           ek(0, 2) + ek(1),
            en({1, 0}),   en({0, 1}), en({2, 0}), ek(1) + en({1, 0}), ek(0) + ek(1, 2)};
}

Character char_f(const Params& p) {
    return Character{Rat(1, 2),
                     Rat(-1, 3),
                     {{{MultiIndex{}, {0, 0}}, Rat(1, 3)},
                      {{ek(0), {0, 0}}, Rat(-1, 2)},
                      {{ek(1) + en({1, 0}), {1, 0}}, Rat(2, 5)}},
                     p};
}

Character char_g(const Params& p) {
    return Character{Rat(-1),
                     Rat(1, 4),
                     {{{MultiIndex{}, {0, 0}}, Rat(1, 5)},
                      {{ek(0), {0, 0}}, Rat(1, 2)},
                      {{ek(0, 2), {0, 0}}, Rat(1)}},
                     p};
}

Series gamma_series(const Functional& f, const Series& s, const Params& p) {
    Series out;
    for (const auto& [g, c] : s.terms()) out = out + gamma(f, g, p).scaled(c);
    return out;
}

Series gamma_series(const Character& f, const Series& s, const Params& p) {
    return gamma_series(as_functional(f), s, p);
}

} // namespace

TEST_CASE("tilt admissibility is enforced") {
    Params p = P14();
    CHECK_NOTHROW(Character(Rat(0), Rat(0), {{{ek(1) + en({1, 0}), {1, 0}}, Rat(1)}}, p));
    // |e_0| = 1/2 < 1 = |(1,0)|: not a Lie pair at alpha = 1/4
    CHECK_THROWS_AS(Character(Rat(0), Rat(0), {{{ek(0), {1, 0}}, Rat(1)}}, p),
                    InadmissibleInsert);
    CHECK_THROWS_AS(Character(Rat(0), Rat(0), {{{en({1, 0}), {0, 0}}, Rat(1)}}, p),
                    InadmissibleInsert);
}

TEST_CASE("character evaluation on monomials") {
    Params p = P14();
    Character f = char_f(p);
    CHECK(char_eval(f, EnvIndex{}) == 1);
    CHECK(char_eval(f, EnvIndex::shift({2, 1})) == Rat(1, 4) * Rat(-1, 3));
    CHECK(char_eval(f, EnvIndex::unit({ek(0), {0, 0}}, 2)) == Rat(1, 4));
    // an index outside the tilt support evaluates to zero
    CHECK(char_eval(f, EnvIndex::unit({ek(1), {0, 0}})) == 0);
    EnvIndex mixed = EnvIndex::unit({MultiIndex{}, {0, 0}}) + EnvIndex::shift({1, 0});
    CHECK(char_eval(f, mixed) == Rat(1, 3) * Rat(1, 2));
}

TEST_CASE("action on a polynomial variable") {
    Params p = P14();
    Character f = char_f(p);
    Series got = gamma(f, en({2, 0}), p);
    Series expect = Series::monomial(en({2, 0})) + Series::monomial(en({1, 0})).scaled(2 * f.h1);
    CHECK(got == expect);
}

TEST_CASE("action on the four-term index") {
    Params p = P14();
    std::map<LiePair, Rat> tilt{{{MultiIndex{}, {0, 0}}, Rat(7)},
                                {{ek(0), {0, 0}}, Rat(-2)},
                                {{ek(0, 2), {0, 0}}, Rat(1, 3)}};
    Character f{Rat(0), Rat(0), tilt, p};
    Series got = gamma(f, ek(0, 2) + ek(1), p);
    Series expect = Series::monomial(ek(0, 2) + ek(1)) +
                    Series::monomial(ek(0, 3)).scaled(Rat(3) * Rat(7)) +
                    Series::monomial(ek(0, 2)).scaled(Rat(2) * Rat(-2)) +
                    Series::monomial(ek(0)).scaled(Rat(1, 3));
    CHECK(got == expect);
}

TEST_CASE("triangularity of the action") {
    Params p = P14();
    Character f = char_f(p);
    for (const auto& beta : model_pool()) {
        Series s = gamma(f, beta, p);
        CHECK(s.coeff(beta) == 1);
        for (const auto& [g, c] : s.terms()) {
            (void)c;
            if (g == beta) continue;
            CHECK(p.lt(homogeneity(g, p), homogeneity(beta, p)));
        }
    }
}

TEST_CASE("group law") {
    Params p = P14();
    Character f = char_f(p), g = char_g(p);
    Functional fg = convolve_fn(as_functional(f), as_functional(g), p);
    for (const auto& beta : model_pool()) {
        Series lhs = gamma(fg, beta, p);
        // the coaction composes contravariantly: Gamma_{f*g} = Gamma_g Gamma_f
        Series rhs = gamma_series(g, gamma(f, beta, p), p);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("inverse through the antipode") {
    Params p = P14();
    Character f = char_f(p);
    Functional finv = antipode_fn(as_functional(f), p);
    for (const auto& beta : model_pool()) {
        CHECK(gamma_series(as_functional(f), gamma(finv, beta, p), p) == Series::monomial(beta));
        CHECK(gamma_series(finv, gamma(f, beta, p), p) == Series::monomial(beta));
    }
    // and as functionals on a few indices
    Functional e = convolve_fn(as_functional(f), finv, p);
    for (const auto& idx : {EnvIndex{}, EnvIndex::shift({1, 0}), EnvIndex::unit({ek(0), {0, 0}}),
                            EnvIndex::unit({MultiIndex{}, {0, 0}}, 2)})
        CHECK(e(idx) == (idx.is_one() ? Rat(1) : Rat(0)));
}

TEST_CASE("materialized convolution") {
    Params p = P14();
    Character f = char_f(p), g = char_g(p);
    std::vector<LiePair> window{{MultiIndex{}, {0, 0}},
                                {ek(0), {0, 0}},
                                {ek(0, 2), {0, 0}},
                                {ek(1) + en({1, 0}), {1, 0}}};
    Character fg = convolve(f, g, window, p);
    CHECK(fg.h1 == f.h1 + g.h1);
    CHECK(fg.h2 == f.h2 + g.h2);
    for (const auto& l : window)
        CHECK(char_eval(fg, EnvIndex::unit(l)) == conv_eval(f, g, EnvIndex::unit(l), p));

    // pure shifts form a subgroup: no tilt is generated
    Character s1{Rat(2), Rat(-1, 2), {}, p}, s2{Rat(1, 3), Rat(5), {}, p};
    Character s12 = convolve(s1, s2, window, p);
    CHECK(s12.tilt.empty());
    CHECK(s12.h1 == Rat(7, 3));
    CHECK(s12.h2 == Rat(9, 2));
}

TEST_CASE("dual action on coordinates") {
    Params p = P14();
    // a pure constant tilt: pi^(0) = c
    Character f{Rat(0), Rat(0), {{{MultiIndex{}, {0, 0}}, Rat(1, 2)}}, p};
    Series act0 = gamma_star(f, Series::monomial(ek(0)), p);
    // sum_l c^l z_l up to the homogeneity cutoff alpha(l+1) <= 4
    for (int l = 0; l <= 15; ++l) CHECK(act0.coeff(ek(l)) == Rat(Int(1), Int(1) << l));
    CHECK(act0.coeff(ek(16)) == 0);

    Series act1 = gamma_star(f, Series::monomial(ek(1)), p);
    for (int l = 0; l + 1 <= 15; ++l)
        CHECK(act1.coeff(ek(1 + l)) == Rat(binomial(1 + l, 1)) * Rat(Int(1), Int(1) << l));

    // a polynomial variable picks up exactly its tilt series
    Character g = char_f(p);
    Series actn = gamma_star(g, Series::monomial(en({1, 0})), p);
    CHECK(actn == (Series::monomial(en({1, 0})) + pi_series(g, {1, 0}, p)).truncated(p));
}

TEST_CASE("shift part of the tilt series") {
    Params p = P14();
    Character f{Rat(1, 2), Rat(-1, 3), {}, p};
    Series pi0 = pi_series(f, {0, 0}, p);
    CHECK(pi0.coeff(en({1, 0})) == Rat(1, 2));
    CHECK(pi0.coeff(en({0, 1})) == Rat(-1, 3));
    CHECK(pi0.coeff(en({2, 0})) == Rat(1, 4));
    CHECK(pi0.coeff(en({1, 1})) == Rat(-1, 6));
    Series pi10 = pi_series(f, {1, 0}, p);
    CHECK(pi10.coeff(en({1, 0})) == 0);
    CHECK(pi10.coeff(en({2, 0})) == Rat(2) * Rat(1, 2));
    CHECK(pi10.coeff(en({1, 1})) == Rat(-1, 3));
}

TEST_CASE("exponential formula matches the dual action") {
    Params p = P14();
    p.cutoff_hom = Rat(3, 2);
    p.cutoff_len = 6;
    std::vector<Character> chars{char_f(p), char_g(p), Character{Rat(1, 2), Rat(-1, 3), {}, p},
                                 Character{Rat(1), Rat(0),
                                           {{{ek(0), {0, 0}}, Rat(1, 3)},
                                            {{ek(1) + en({1, 0}), {1, 0}}, Rat(-1)}},
                                           p}};
    std::vector<Series> inputs{Series::monomial(ek(0)), Series::monomial(ek(1)),
                               Series::monomial(en({1, 0})), Series::monomial(en({0, 1})),
                               Series::monomial(ek(0) + ek(1)),
                               Series::monomial(ek(1) + en({1, 0}))};
    for (const auto& f : chars)
        for (const auto& s : inputs) CHECK(exp_formula(f, s, p) == gamma_star(f, s, p));
}

TEST_CASE("composition of dual actions") {
    Params p = P14();
    p.cutoff_hom = Rat(2);
    p.cutoff_len = 6;
    Character f = char_f(p), g = char_g(p);

    // read the composed tilt off pibar^(n) = pi^(n) + Gamma* pi'^(n)
    Rat hb1 = f.h1 + g.h1, hb2 = f.h2 + g.h2;
    std::map<LiePair, Rat> tilt;
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n1 + 2 * n2 <= 2; ++n2) {
            N2 n{n1, n2};
            Series pibar = pi_series(f, n, p) + gamma_star(f, pi_series(g, n, p), p);
            for (const auto& [gm, c] : pibar.terms()) {
                if (noise_homogeneity(gm) >= 0) {
                    CHECK(in_lie_algebra(gm, n, Mode::FULL, p));
                    tilt[{gm, n}] += c;
                } else {
                    // polynomial part must reproduce the composed shift
                    REQUIRE(gm.entries().size() == 1);
                    REQUIRE(gm.entries()[0].second == 1);
                    N2 m = gm.entries()[0].first.n();
                    Rat hpow(1);
                    for (int i = 0; i < m.a - n.a; ++i) hpow *= hb1;
                    for (int i = 0; i < m.b - n.b; ++i) hpow *= hb2;
                    CHECK(c == Rat(n2_binomial(m, n)) * hpow);
                }
            }
        }
    std::erase_if(tilt, [](const auto& e) { return e.second == 0; });
    Character fbar{hb1, hb2, tilt, p};

    for (const auto& s :
         {Series::monomial(ek(0)), Series::monomial(ek(1)), Series::monomial(en({1, 0})),
          Series::monomial(ek(0) + en({1, 0}))})
        CHECK(gamma_star(fbar, s, p) == gamma_star(f, gamma_star(g, s, p), p));
}

TEST_CASE("concrete evaluation") {
    Params p = P14();
    UPoly a{Rat(1), Rat(1, 2), Rat(-1, 3), Rat(2)};
    BPoly bp{{{1, 0}, Rat(3)}, {{0, 1}, Rat(1, 2)}, {{2, 0}, Rat(-1)}, {{1, 1}, Rat(1, 5)}};
    CHECK(eval_on_ap(Series::monomial(ek(1)), a, bp) == Rat(1, 2));
    CHECK(eval_on_ap(Series::monomial(en({1, 0})), a, bp) == Rat(3));
    CHECK(eval_on_ap(Series::monomial(ek(1) + en({2, 0}), Rat(2)), a, bp) == Rat(-1));
    CHECK(eval_on_ap(Series::monomial(ek(5)), a, bp) == 0);
}

TEST_CASE("evaluation intertwines the action with reparameterization") {
    Params p = P14();
    UPoly a{Rat(1), Rat(1, 2), Rat(-1, 3), Rat(2)};
    BPoly bp{{{1, 0}, Rat(3)}, {{0, 1}, Rat(1, 2)}, {{2, 0}, Rat(-1)}, {{1, 1}, Rat(1, 5)}};
    std::vector<Series> inputs{Series::monomial(ek(0)),
                               Series::monomial(ek(2)),
                               Series::monomial(en({1, 0})),
                               Series::monomial(en({0, 1})),
                               Series::monomial(ek(1) + en({1, 0})),
                               Series::monomial(ek(0, 2) + en({1, 1}))};
    for (const auto& f : {char_f(p), char_g(p), Character{Rat(1, 3), Rat(-2), {}, p}}) {
        Rat v0 = pi_eval(f, {0, 0}, a, bp, p);
        UPoly a_shift = poly_shift(a, v0);
        // reparameterized polynomial: p_n + pi^(n)[a, p] for n != 0
        std::set<N2> ns;
        for (const auto& [l, c] : f.tilt) { (void)c; ns.insert(l.n); }
        for (const auto& [m, v] : bp) {
            (void)v;
            for (int i = 0; i <= m.a; ++i)
                for (int j = 0; j <= m.b; ++j) ns.insert({i, j});
        }
        BPoly bp_new = bp;
        for (const auto& n : ns) {
            if (n.is_zero()) continue;
            bp_new[n] += pi_eval(f, n, a, bp, p);
        }
        std::erase_if(bp_new, [](const auto& e) { return e.second == 0; });
        for (const auto& s : inputs)
            CHECK(gamma_star_eval(f, s, a, bp, p) == eval_on_ap(s, a_shift, bp_new));
    }
}
