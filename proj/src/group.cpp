#include "mihopf/group.hpp"

#include <utility>

namespace mihopf {

namespace {

Rat rat_pow(const Rat& x, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

Rat shift_pow(const Character& f, N2 m) { return rat_pow(f.h1, m.a) * rat_pow(f.h2, m.b); }

Rat eval_monomial(const MultiIndex& g, const UPoly& a, const BPoly& bp) {
    Rat r(1);
    for (const auto& [l, mult] : g.entries()) {
        Rat v(0);
        if (l.kind == Letter::ZK) {
            if (l.a < static_cast<int>(a.size())) v = a[l.a];
        } else if (l.kind == Letter::ZN) {
            auto it = bp.find(l.n());
            if (it != bp.end()) v = it->second;
        } else {
            throw std::domain_error("colored coordinates have no (a, p) evaluation");
        }
        if (v == 0) return Rat(0);
        r *= rat_pow(v, mult);
    }
    return r;
}

// all n in N_0^2 whose weight stays within the homogeneity cutoff
std::vector<N2> n_window(const Params& p) {
    std::vector<N2> out;
    for (int n1 = 0; Rat(n1 * p.w1) <= p.cutoff_hom; ++n1)
        for (int n2 = 0; Rat(n1 * p.w1 + n2 * p.w2) <= p.cutoff_hom; ++n2)
            out.push_back({n1, n2});
    return out;
}

} // namespace

Character::Character(Rat h1_, Rat h2_, std::map<LiePair, Rat> tilt_, const Params& p)
    : h1(std::move(h1_)), h2(std::move(h2_)), tilt(std::move(tilt_)) {
    for (const auto& [l, c] : tilt)
        if (c != 0 && !in_lie_algebra(l.gamma, l.n, Mode::FULL, p)) throw InadmissibleInsert{};
    std::erase_if(tilt, [](const auto& e) { return e.second == 0; });
}

Rat char_eval(const Character& f, const EnvIndex& idx) {
    Rat r = shift_pow(f, idx.m);
    for (const auto& [l, mult] : idx.J()) {
        auto it = f.tilt.find(l);
        if (it == f.tilt.end()) return Rat(0);
        r *= rat_pow(it->second, mult);
    }
    return r;
}

Rat char_eval(const Character& f, const PlusElement& x) {
    Rat r(0);
    for (const auto& [idx, c] : x.terms()) r += c * char_eval(f, idx);
    return r;
}

Functional as_functional(const Character& f) {
    return [f](const EnvIndex& idx) { return char_eval(f, idx); };
}

Functional convolve_fn(Functional f, Functional g, const Params& p) {
    return [f = std::move(f), g = std::move(g), p](const EnvIndex& idx) {
        Rat r(0);
        for (const auto& [pair, c] : delta_plus(idx, p)) r += c * f(pair.first) * g(pair.second);
        return r;
    };
}

Functional antipode_fn(Functional f, const Params& p) {
    return [f = std::move(f), p](const EnvIndex& idx) {
        Rat r(0);
        PlusElement s = antipode(PlusElement::monomial(idx), p);
        for (const auto& [j, c] : s.terms()) r += c * f(j);
        return r;
    };
}

Rat conv_eval(const Character& f, const Character& g, const EnvIndex& idx, const Params& p) {
    Rat r(0);
    for (const auto& [pair, c] : delta_plus(idx, p))
        r += c * char_eval(f, pair.first) * char_eval(g, pair.second);
    return r;
}

Rat inv_eval(const Character& f, const EnvIndex& idx, const Params& p) {
    return char_eval(f, antipode(PlusElement::monomial(idx), p));
}

Character convolve(const Character& f, const Character& g, const std::vector<LiePair>& window,
                   const Params& p) {
    std::map<LiePair, Rat> tilt;
    for (const auto& l : window) {
        Rat v = conv_eval(f, g, EnvIndex::unit(l), p);
        if (v != 0) tilt[l] = v;
    }
    return Character{f.h1 + g.h1, f.h2 + g.h2, std::move(tilt), p};
}

Series gamma(const Character& f, const MultiIndex& beta, const Params& p) {
    Series out;
    for (const auto& [pair, c] : delta(beta, p)) {
        Rat v = c * char_eval(f, pair.first);
        if (v != 0) out.add_term(pair.second, v);
    }
    return out;
}

Series gamma(const Functional& f, const MultiIndex& beta, const Params& p) {
    Series out;
    for (const auto& [pair, c] : delta(beta, p)) {
        Rat v = c * f(pair.first);
        if (v != 0) out.add_term(pair.second, v);
    }
    return out;
}

Series pi_series(const Character& f, N2 n, const Params& p) {
    Series out;
    for (const auto& [l, c] : f.tilt)
        if (l.n == n) out.add_term(l.gamma, c);
    if (f.h1 != 0 || f.h2 != 0) {
        for (N2 m : n_window(p)) {
            if (!n.leq(m) || m == n) continue;
            Rat c = Rat(n2_binomial(m, n)) * shift_pow(f, m - n);
            if (c != 0) out.add_term(en(m), c);
        }
    }
    return out.truncated(p);
}

namespace {

Series gamma_star_letter(const Character& f, const Letter& l, const Params& p) {
    if (l.kind == Letter::ZN) return Series::monomial(en(l.n())) + pi_series(f, l.n(), p);
    if (l.kind != Letter::ZK)
        throw std::domain_error("the dual action is defined on the plain alphabet only");
    int k = l.a;
    Series pi0 = pi_series(f, {0, 0}, p);
    Series out, pw = Series::one();
    for (int lvl = 0;; ++lvl) {
        if (Rat(k + lvl + 1) * p.alpha > p.cutoff_hom) break;
        if (lvl > 0) {
            pw = (pw * pi0).truncated(p);
            if (pw.is_zero()) break;
        }
        out = out + (pw * Series::monomial(ek(k + lvl))).scaled(Rat(binomial(k + lvl, k)));
    }
    return out.truncated(p);
}

} // namespace

Series gamma_star(const Character& f, const Series& s, const Params& p) {
    Series out;
    for (const auto& [g, c] : s.terms()) {
        Series term = Series::one().scaled(c);
        for (const auto& [l, mult] : g.entries()) {
            Series act = gamma_star_letter(f, l, p);
            for (int i = 0; i < mult; ++i) term = (term * act).truncated(p);
        }
        out = out + term;
    }
    return out.truncated(p);
}

Series exp_formula(const Character& f, const Series& s, const Params& p) {
    // collect the derivation directions with a nonzero tilt series
    std::vector<std::pair<N2, Series>> dirs;
    for (N2 n : n_window(p)) {
        Series pi = pi_series(f, n, p);
        if (!pi.is_zero()) dirs.push_back({n, pi});
    }

    Series acc;
    // recurse over the directions, choosing a multiplicity for each; the
    // divided powers pi^c / c! are built incrementally
    auto rec = [&](auto&& self, std::size_t i, const Series& deriv, const Series& mult) -> void {
        if (deriv.is_zero() || mult.is_zero()) return;
        if (i == dirs.size()) {
            acc = acc + (mult * deriv).truncated(p);
            return;
        }
        Series d = deriv, m = mult;
        for (int c = 0; c <= 64; ++c) {
            if (c > 0) {
                d = apply_generator(Generator::ZD(MultiIndex{}, dirs[i].first), d, p);
                m = (m * dirs[i].second).truncated(p).scaled(Rat(1, c));
                if (d.is_zero() || m.is_zero()) break;
            }
            self(self, i + 1, d, m);
        }
    };
    rec(rec, 0, s, Series::one());
    return acc.truncated(p);
}

Rat eval_on_ap(const Series& s, const UPoly& a, const BPoly& bp) {
    Rat r(0);
    for (const auto& [g, c] : s.terms()) r += c * eval_monomial(g, a, bp);
    return r;
}

Rat pi_eval(const Character& f, N2 n, const UPoly& a, const BPoly& bp, const Params& p) {
    (void)p;
    Rat r(0);
    for (const auto& [l, c] : f.tilt)
        if (l.n == n) r += c * eval_monomial(l.gamma, a, bp);
    for (const auto& [m, v] : bp) {
        if (!n.leq(m) || m == n) continue;
        r += Rat(n2_binomial(m, n)) * shift_pow(f, m - n) * v;
    }
    return r;
}

Rat gamma_star_eval(const Character& f, const Series& s, const UPoly& a, const BPoly& bp,
                    const Params& p) {
    Rat v0 = pi_eval(f, {0, 0}, a, bp, p);
    Rat r(0);
    for (const auto& [g, c] : s.terms()) {
        Rat term = c;
        for (const auto& [l, mult] : g.entries()) {
            Rat lv(0);
            if (l.kind == Letter::ZK) {
                int k = l.a;
                for (int lvl = 0; k + lvl < static_cast<int>(a.size()); ++lvl)
                    lv += Rat(binomial(k + lvl, k)) * rat_pow(v0, lvl) * a[k + lvl];
            } else if (l.kind == Letter::ZN) {
                auto it = bp.find(l.n());
                lv = (it != bp.end() ? it->second : Rat(0)) + pi_eval(f, l.n(), a, bp, p);
            } else {
                throw std::domain_error("the dual action is defined on the plain alphabet only");
            }
            if (lv == 0) { term = 0; break; }
            term *= rat_pow(lv, mult);
        }
        r += term;
    }
    return r;
}

UPoly poly_shift(const UPoly& a, const Rat& v) {
    UPoly out(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            out[j] += Rat(binomial(static_cast<long>(i), static_cast<long>(j))) * a[i] *
                      rat_pow(v, static_cast<int>(i - j));
    return out;
}

} // namespace mihopf
