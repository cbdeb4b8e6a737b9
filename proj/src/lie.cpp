#include "mihopf/lie.hpp"

#include <sstream>

namespace mihopf {

std::string Generator::str() const {
    if (is_del) return "del" + std::to_string(del_i);
    return "z^{" + gamma.str() + "}D^" + n2_str(n);
}

LieElement LieElement::single(const Generator& g, const Rat& c) {
    LieElement e;
    if (c != 0) e.t[g] = c;
    return e;
}

void LieElement::add(const Generator& g, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = t.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t.erase(it);
    }
}

LieElement LieElement::operator+(const LieElement& o) const {
    LieElement r = *this;
    for (const auto& [g, c] : o.t) r.add(g, c);
    return r;
}

LieElement LieElement::operator-(const LieElement& o) const {
    LieElement r = *this;
    for (const auto& [g, c] : o.t) r.add(g, -c);
    return r;
}

LieElement LieElement::scaled(const Rat& c) const {
    LieElement r;
    if (c == 0) return r;
    for (const auto& [g, x] : t) r.t[g] = x * c;
    return r;
}

std::string LieElement::str() const {
    if (t.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : t) {
        if (!first) out << " + ";
        first = false;
        out << rat_str(c) << "*" << g.str();
    }
    return out.str();
}

namespace {

// D^(0) z^g = sum_k (k+1) g(k) z^{g - e_k + e_{k+1}}; the colored letters of
// the two-nonlinearity alphabet shift the same way (the tilt by a constant
// shifts both a_0 and a_1).
Series d0_monomial(const MultiIndex& g) {
    Series r;
    for (const auto& [l, m] : g.entries()) {
        if (l.kind == Letter::ZK) {
            int k = l.a;
            r.add_term(g.plus(Letter::K(k), -1).plus(Letter::K(k + 1), 1), Rat((k + 1)) * m);
        } else if (l.kind == Letter::ZC) {
            int k = l.b;
            r.add_term(g.plus(Letter::C(l.a, k), -1).plus(Letter::C(l.a, k + 1), 1),
                       Rat((k + 1)) * m);
        }
    }
    return r;
}

// D^(n) z^g = g(n) z^{g - e_n}, n != 0
Series dn_monomial(const MultiIndex& g, const N2& n) {
    int m = g.at(Letter::Nn(n));
    Series r;
    if (m > 0) r.add_term(g.plus(Letter::Nn(n), -1), Rat(m));
    return r;
}

// del_i = sum_n (n_i + 1) z_{n + e_i} D^(n), including the n = 0 term
Series del_monomial(int i, const MultiIndex& g) {
    N2 ei = (i == 1) ? N2{1, 0} : N2{0, 1};
    Series r;
    // n = 0 piece: z_{e_i} D^(0)
    Series d0 = d0_monomial(g);
    for (const auto& [gm, c] : d0.terms()) r.add_term(gm.plus(Letter::Nn(ei), 1), c);
    // n != 0 pieces
    for (const auto& [l, m] : g.entries()) {
        if (l.kind != Letter::ZN) continue;
        N2 n = l.n();
        int ni = (i == 1) ? n.a : n.b;
        r.add_term(g.plus(Letter::Nn(n), -1).plus(Letter::Nn(n + ei), 1), Rat(ni + 1) * m);
    }
    return r;
}

Series apply_monomial(const Generator& g, const MultiIndex& mono) {
    if (g.is_del) return del_monomial(g.del_i, mono);
    Series base = g.n.is_zero() ? d0_monomial(mono) : dn_monomial(mono, g.n);
    Series r;
    for (const auto& [gm, c] : base.terms()) r.add_term(gm + g.gamma, c);
    return r;
}

} // namespace

Series apply_generator(const Generator& g, const Series& s, const Params&) {
    Series r;
    for (const auto& [mono, c] : s.terms()) {
        Series img = apply_monomial(g, mono);
        for (const auto& [gm, x] : img.terms()) r.add_term(gm, c * x);
    }
    return r;
}

Rat matrix_entry(const Generator& g, const MultiIndex& gamma, const MultiIndex& beta,
                 const Params&) {
    return apply_monomial(g, gamma).coeff(beta);
}

LieElement pre_lie(const Generator& g1, const Generator& g2, const Params& p) {
    if (g2.is_del) {
        if (g1.is_del) throw UndefinedPreLie{};
        // z^g D^(n) ◁ del_i = n_i z^g D^(n - e_i)
        int ni = (g2.del_i == 1) ? g1.n.a : g1.n.b;
        if (ni == 0) return {};
        N2 ei = (g2.del_i == 1) ? N2{1, 0} : N2{0, 1};
        return LieElement::single(Generator::ZD(g1.gamma, g1.n - ei), Rat(ni));
    }
    // D ◁ z^g D^(n) = (D z^g) D^(n)
    LieElement r;
    Series dg = apply_generator(g1, Series::monomial(g2.gamma), p);
    for (const auto& [beta, c] : dg.terms()) r.add(Generator::ZD(beta, g2.n), c);
    return r;
}

LieElement lie_bracket(const LieElement& a, const LieElement& b, const Params& p) {
    LieElement r;
    for (const auto& [g1, c1] : a.t)
        for (const auto& [g2, c2] : b.t) {
            if (g1.is_del && g2.is_del) continue; // [del_1, del_2] = 0
            Rat c = c1 * c2;
            LieElement fwd = pre_lie(g1, g2, p);
            for (const auto& [g, x] : fwd.t) r.add(g, c * x);
            LieElement bwd = pre_lie(g2, g1, p);
            for (const auto& [g, x] : bwd.t) r.add(g, -c * x);
        }
    return r;
}

bool in_lie_algebra(const MultiIndex& gamma, const N2& n, Mode mode, const Params& p) {
    switch (mode) {
        case Mode::FULL:
        case Mode::GPAM: {
            if (!alphabet_matches(gamma, Mode::FULL)) return false;
            if (noise_homogeneity(gamma) < 0) return false;
            Hom nw{0, p.nweight(n)};
            return p.lt(nw, homogeneity(gamma, p));
        }
        case Mode::RP:
            return n.is_zero() && alphabet_matches(gamma, Mode::RP) &&
                   is_populated(gamma, Mode::RP);
        case Mode::RP2:
            return n.is_zero() && alphabet_matches(gamma, Mode::RP2) &&
                   is_populated(gamma, Mode::RP2);
    }
    return false;
}

Bigrade bigrade(const Generator& g, const Params& p) {
    if (g.is_del) return {0, g.del_i == 1 ? p.w1 : p.w2};
    long long poly = 0;
    for (const auto& [l, m] : g.gamma.entries())
        if (l.kind == Letter::ZN) poly += static_cast<long long>(p.nweight(l.n())) * m;
    return {1 + noise_homogeneity(g.gamma), poly - p.nweight(g.n)};
}

} // namespace mihopf
