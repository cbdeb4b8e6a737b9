#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mihopf/envelope.hpp"

#include <functional>
#include <vector>

using namespace mihopf;

static Params P14() { return Params{.alpha = Rat(1, 4)}; }

namespace {

EnvIndex d0_word() { return EnvIndex::unit({MultiIndex{}, {0, 0}}); }

// small pool of admissible basis words at alpha = 1/4
std::vector<EnvIndex> word_pool() {
    return {
        EnvIndex{},
        d0_word(),
        EnvIndex::unit({ek(0), {0, 0}}),
        EnvIndex::shift({1, 0}),
        EnvIndex::shift({0, 1}),
        EnvIndex::shift({1, 1}),
        d0_word() + EnvIndex::unit({ek(0), {0, 0}}),
        EnvIndex::unit({ek(1) + en({1, 0}), {1, 0}}),
    };
}

// legwise product of two sparse tensors
EnvTensor tensor_product(const EnvTensor& x, const EnvTensor& y, const Params& p) {
    EnvTensor r;
    for (const auto& [ab, c1] : x)
        for (const auto& [cd, c2] : y) {
            EnvElement left = envelope_product(EnvElement::basis(ab.first),
                                               EnvElement::basis(cd.first), p);
            EnvElement right = envelope_product(EnvElement::basis(ab.second),
                                                EnvElement::basis(cd.second), p);
            for (const auto& [il, cl] : left.terms())
                for (const auto& [ir, cr] : right.terms()) {
                    Rat c = c1 * c2 * cl * cr;
                    auto [it, ins] = r.try_emplace({il, ir}, c);
                    if (!ins) it->second += c;
                }
        }
    std::erase_if(r, [](const auto& e) { return e.second == 0; });
    return r;
}

} // namespace

TEST_CASE("insertion into basis words") {
    Params p = P14();
    CHECK(insert(ek(0), EnvElement::one(), {0, 0}, p) ==
          EnvElement::basis(EnvIndex::unit({ek(0), {0, 0}})));
    EnvElement d = EnvElement::basis(EnvIndex::unit({ek(0), {0, 0}}));
    CHECK(insert(ek(0), d, {0, 0}, p) ==
          EnvElement::basis(EnvIndex::unit({ek(0), {0, 0}}, 2), Rat(2)));
    // re-insertions with different anchors commute
    EnvElement u = EnvElement::basis(d0_word());
    EnvElement ab = insert(MultiIndex{}, insert(ek(0), u, {0, 0}, p), {0, 0}, p);
    EnvElement ba = insert(ek(0), insert(MultiIndex{}, u, {0, 0}, p), {0, 0}, p);
    CHECK(ab == ba);
    // |e_0| = alpha < |(1,0)| = 1: not a Lie index
    CHECK_THROWS_AS(insert(ek(0), u, {1, 0}, p), InadmissibleInsert);
}

TEST_CASE("coproduct splits") {
    EnvTensor c1 = cop(EnvElement::one());
    CHECK(c1.size() == 1);
    CHECK(c1.at({EnvIndex{}, EnvIndex{}}) == 1);

    EnvIndex d = d0_word();
    EnvTensor cd = cop(EnvElement::basis(d));
    CHECK(cd.size() == 2);
    CHECK(cd.at({d, EnvIndex{}}) == 1);
    CHECK(cd.at({EnvIndex{}, d}) == 1);

    EnvTensor cm = cop(EnvElement::basis(EnvIndex::shift({1, 1})));
    CHECK(cm.size() == 4);
    CHECK(cm.at({EnvIndex::shift({1, 0}), EnvIndex::shift({0, 1})}) == 1);
    CHECK(cm.at({EnvIndex::shift({1, 1}), EnvIndex{}}) == 1);
}

TEST_CASE("the representation rho") {
    Params p = P14();
    Series s = Series::monomial(ek(0)) + Series::monomial(en({0, 1}), Rat(5));
    CHECK(rho_apply(EnvElement::one(), s, p) == s);
    CHECK(rho_apply(EnvElement::basis(EnvIndex::unit({ek(0), {0, 0}})),
                    Series::monomial(ek(0)), p) == Series::monomial(ek(0) + ek(1)));
    CHECK(rho_apply(EnvElement::basis(EnvIndex::shift({1, 0})),
                    Series::monomial(en({0, 1})), p) == Series::monomial(en({1, 1})));
}

TEST_CASE("iota and epsilon") {
    EnvElement d = EnvElement::basis(EnvIndex::unit({ek(0), {0, 0}}));
    CHECK(iota({0, 0}, d) == Series::monomial(ek(0)));
    CHECK(iota({0, 0}, EnvElement::one()).is_zero());
    CHECK(iota({1, 0}, EnvElement::basis(EnvIndex::shift({1, 0}))).is_zero());
    CHECK(epsilon({0, 0}, EnvElement::one()) == 1);
    CHECK(epsilon({1, 0}, EnvElement::basis(EnvIndex::shift({1, 0}))) == 1);
    CHECK(epsilon({0, 0}, d) == 0);
}

TEST_CASE("products in the D-basis") {
    Params p = P14();
    EnvElement d0 = EnvElement::basis(d0_word());
    CHECK(envelope_product(d0, d0, p) ==
          EnvElement::basis(EnvIndex::unit({MultiIndex{}, {0, 0}}, 2), Rat(2)));

    EnvElement del1 = EnvElement::basis(EnvIndex::shift({1, 0}));
    CHECK(envelope_product(del1, del1, p) ==
          EnvElement::basis(EnvIndex::shift({2, 0}), Rat(2)));

    EnvElement de0 = EnvElement::basis(EnvIndex::unit({ek(0), {0, 0}}));
    EnvElement expect = EnvElement::basis(d0_word() + EnvIndex::unit({ek(0), {0, 0}})) +
                        EnvElement::basis(EnvIndex::unit({ek(1), {0, 0}}));
    CHECK(envelope_product(d0, de0, p) == expect);
}

TEST_CASE("word grades") {
    Params p = P14();
    CHECK(bigrade_word(EnvIndex::shift({1, 0}), p) == Bigrade{0, 1});
    CHECK(grade_word(EnvIndex::shift({1, 0}), p).eval(p.alpha) == 1);
    EnvIndex w = EnvIndex::unit({ek(0), {0, 0}});
    CHECK(bigrade_word(w, p) == Bigrade{1, 0});
    CHECK(grade_word(w, p).eval(p.alpha) == Rat(1, 4));
    EnvIndex v = EnvIndex::unit({ek(1) + en({1, 0}), {1, 0}});
    CHECK(bigrade_word(v, p) == Bigrade{1, 0});
    CHECK(grade_word(v, p).eval(p.alpha) == Rat(1, 4));
    // positivity: grade > 0 unless the word is trivial
    for (const auto& idx : word_pool()) {
        if (idx.is_one()) CHECK(grade_word(idx, p).eval(p.alpha) == 0);
        else CHECK(grade_word(idx, p).eval(p.alpha) > 0);
    }
}

TEST_CASE("cop is coassociative and cocommutative") {
    for (const auto& idx : word_pool()) {
        EnvTensor c = cop(EnvElement::basis(idx));
        // cocommutativity
        for (const auto& [ab, v] : c) CHECK(c.at({ab.second, ab.first}) == v);
        // coassociativity via triple splits
        std::map<std::tuple<EnvIndex, EnvIndex, EnvIndex>, Rat> left, right;
        for (const auto& [ab, v] : c) {
            for (const auto& [cd, w] : cop(EnvElement::basis(ab.first)))
                left[{cd.first, cd.second, ab.second}] += v * w;
            for (const auto& [cd, w] : cop(EnvElement::basis(ab.second)))
                right[{ab.first, cd.first, cd.second}] += v * w;
        }
        std::erase_if(left, [](const auto& e) { return e.second == 0; });
        std::erase_if(right, [](const auto& e) { return e.second == 0; });
        CHECK(left == right);
    }
}

TEST_CASE("cop is multiplicative") {
    Params p = P14();
    auto pool = word_pool();
    for (const auto& a : pool)
        for (const auto& b : pool) {
            if (a.length() + b.length() > 3) continue;
            EnvElement prod = envelope_product(EnvElement::basis(a), EnvElement::basis(b), p);
            CHECK(cop(prod) == tensor_product(cop(EnvElement::basis(a)),
                                              cop(EnvElement::basis(b)), p));
        }
}

TEST_CASE("rho is an algebra morphism") {
    Params p = P14();
    Series s = Series::monomial(ek(0)) + Series::monomial(en({1, 0}), Rat(3)) +
               Series::monomial(ek(0, 2) + ek(1));
    auto pool = word_pool();
    for (const auto& a : pool)
        for (const auto& b : pool) {
            if (a.length() + b.length() > 3) continue;
            EnvElement ab = envelope_product(EnvElement::basis(a), EnvElement::basis(b), p);
            CHECK(rho_apply(ab, s, p) ==
                  rho_apply(EnvElement::basis(a),
                            rho_apply(EnvElement::basis(b), s, p), p));
        }
}

TEST_CASE("the iota identity") {
    Params p = P14();
    std::vector<N2> ns{{0, 0}, {1, 0}, {0, 1}};
    std::vector<N2> ms{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}};
    auto pool = word_pool();
    for (const auto& a : pool)
        for (const auto& b : pool) {
            if (a.length() + b.length() > 3) continue;
            EnvElement u1 = EnvElement::basis(a), u2 = EnvElement::basis(b);
            EnvElement prod = envelope_product(u1, u2, p);
            for (N2 n : ns) {
                Series lhs = iota(n, prod);
                Series rhs = rho_apply(u1, iota(n, u2), p);
                for (N2 m : ms) {
                    Rat em = epsilon(m, u2);
                    if (em == 0) continue;
                    rhs = rhs + iota(n + m, u1).scaled(Rat(n2_binomial(n + m, m)) * em);
                }
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("grade bookkeeping of rho images") {
    Params p = P14();
    std::vector<MultiIndex> gammas{MultiIndex{}, ek(0), ek(1), ek(0, 2) + ek(1), en({1, 0}),
                                   ek(2) + en({0, 1})};
    for (const auto& idx : word_pool()) {
        Hom g = grade_word(idx, p);
        for (const auto& gamma : gammas) {
            Series img = rho_apply(EnvElement::basis(idx), Series::monomial(gamma), p);
            for (const auto& [beta, c] : img.terms()) {
                (void)c;
                Hom hb = homogeneity(beta, p), hg = homogeneity(gamma, p);
                CHECK(hb.ac == hg.ac + g.ac);
                CHECK(hb.ip == hg.ip + g.ip);
            }
        }
    }
}

TEST_CASE("extended chain rule") {
    Params p = P14();
    // (1/m!) del^m (l! z_l) = sum_k (1/k!)(l+k)! z_{k+l}
    //                          sum_{m_1+...+m_k=m, m_j != 0} z_{m_1}...z_{m_k}
    for (int l = 0; l <= 2; ++l)
        for (int m1 = 0; m1 <= 3; ++m1)
            for (int m2 = 0; m1 + 2 * m2 <= 3; ++m2) {
                N2 m{m1, m2};
                Series lhs = rho_apply(EnvElement::basis(EnvIndex::shift(m)),
                                       Series::monomial(ek(l), Rat(factorial(l))), p);
                // enumerate ordered compositions of m into nonzero parts
                Series rhs;
                std::function<void(N2, int, Series)> rec = [&](N2 rest, int k, Series acc) {
                    if (rest.is_zero()) {
                        Rat c = Rat(factorial(l + k)) / Rat(factorial(k));
                        rhs = rhs + (acc * Series::monomial(ek(l + k))).scaled(c);
                    }
                    for (int a = 0; a <= rest.a; ++a)
                        for (int b = 0; b <= rest.b; ++b) {
                            if (a == 0 && b == 0) continue;
                            rec(rest - N2{a, b}, k + 1,
                                acc * Series::monomial(en({a, b})));
                        }
                };
                rec(m, 0, Series::one());
                CHECK(lhs == rhs);
            }
}

TEST_CASE("associativity of the product") {
    Params p = P14();
    std::vector<EnvIndex> gens{d0_word(), EnvIndex::unit({ek(0), {0, 0}}),
                               EnvIndex::shift({1, 0}),
                               EnvIndex::unit({ek(1) + en({1, 0}), {1, 0}})};
    for (const auto& a : gens)
        for (const auto& b : gens)
            for (const auto& c : gens) {
                EnvElement ea = EnvElement::basis(a), eb = EnvElement::basis(b),
                           ec_ = EnvElement::basis(c);
                CHECK(envelope_product(envelope_product(ea, eb, p), ec_, p) ==
                      envelope_product(ea, envelope_product(eb, ec_, p), p));
            }
}
