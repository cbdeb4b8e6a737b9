#include "mihopf/tree.hpp"

#include <stdexcept>

namespace mihopf {

Tree q_contract(const Tree& t) {
    if (t.kind == Tree::Poly) return t;
    if (t.kind == Tree::Planted) return Tree::planted(q_contract(t.children[0]));
    N2 x = t.x;
    for (const auto& [n, mult] : t.polys)
        for (int i = 0; i < mult; ++i) x = x + n;
    std::vector<Tree> ch;
    ch.reserve(t.children.size());
    for (const auto& c : t.children) ch.push_back(q_contract(c));
    return Tree::make(std::move(ch), t.kind, x);
}

Hom hom_H(const Tree& t, const Params& p) {
    if (t.kind == Tree::Poly) return Hom{0, p.nweight(t.x)};
    if (t.kind == Tree::Planted) return hom_H(t.children[0], p) + Hom{0, 2};
    Hom h{1, -2 + p.nweight(t.x)};
    for (const auto& [n, mult] : t.polys) h = h + Hom{0, static_cast<long long>(p.nweight(n)) * mult};
    for (const auto& c : t.children) h = h + hom_H(c, p) + Hom{0, 2};
    return h;
}

HMono HMono::operator+(const HMono& o) const {
    HMono r = *this;
    r.m = r.m + o.m;
    for (const auto& [k, v] : o.js) r.js[k] += v;
    return r;
}

std::string HMono::str() const {
    if (is_one()) return "1";
    std::string s;
    auto app = [&](const std::string& piece) {
        if (!s.empty()) s += "*";
        s += piece;
    };
    if (!m.is_zero()) app("X" + n2_str(m));
    for (const auto& [k, mult] : js) {
        std::string piece = "J" + n2_str(k.first) + "[" + k.second.str() + "]";
        for (int i = 0; i < mult; ++i) app(piece);
    }
    return s;
}

int hmono_cmp(const HMono& a, const HMono& b) {
    if (a.m != b.m) return a.m < b.m ? -1 : 1;
    auto it = a.js.begin(), jt = b.js.begin();
    for (; it != a.js.end() && jt != b.js.end(); ++it, ++jt) {
        if (it->first.first != jt->first.first)
            return it->first.first < jt->first.first ? -1 : 1;
        if (int c = tree_cmp(it->first.second, jt->first.second); c != 0) return c;
        if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
    }
    if (it != a.js.end()) return 1;
    if (jt != b.js.end()) return -1;
    return 0;
}

Hom hom_H(const HMono& x, const Params& p) {
    Hom h{0, p.nweight(x.m)};
    for (const auto& [k, mult] : x.js) {
        Hom one = hom_H(k.second, p) + Hom{0, 2 - p.nweight(k.first)};
        h = h + Hom{one.ac * mult, one.ip * mult};
    }
    return h;
}

HCombo j_h(N2 n, const Tree& t, const Params& p) {
    HCombo out;
    if (t.kind == Tree::Poly) return out;
    if (!p.lt(Hom{0, p.nweight(n)}, hom_H(t, p) + Hom{0, 2})) return out;
    HMono x;
    x.js[{n, t}] = 1;
    out[x] = 1;
    return out;
}

namespace {

// all n in N_0^2 with |n| < |t|_H + 2, i.e. with j_h(n, t) nonzero
std::vector<N2> j_window(const Tree& t, const Params& p) {
    std::vector<N2> out;
    if (t.kind == Tree::Poly) return out;
    Hom bound = hom_H(t, p) + Hom{0, 2};
    for (int n1 = 0; p.lt(Hom{0, n1 * p.w1}, bound); ++n1)
        for (int n2 = 0; p.lt(Hom{0, n1 * p.w1 + n2 * p.w2}, bound); ++n2)
            out.push_back({n1, n2});
    return out;
}

} // namespace

HTensorT delta_h(const Tree& t0, const Params& p) {
    const Tree t = q_contract(t0);
    HTensorT out;
    if (t.kind == Tree::Poly) {
        for (int a = 0; a <= t.x.a; ++a)
            for (int b = 0; b <= t.x.b; ++b) {
                N2 np{a, b};
                HMono left;
                left.m = np;
                out[{left, Tree::poly(t.x - np)}] += Rat(n2_binomial(t.x, np));
            }
        return out;
    }
    if (t.kind == Tree::Planted) {
        const Tree& sub = t.children[0];
        for (const auto& [pr, c] : delta_h(sub, p))
            out[{pr.first, Tree::planted(pr.second)}] += c;
        for (N2 n : j_window(sub, p)) {
            HMono left;
            left.js[{n, sub}] = 1;
            out[{left, Tree::poly(n)}] += Rat(1, n2_factorial(n));
        }
        return out;
    }

    // noise node: multiplicative over the decoration and the planted children;
    // accumulator holds (left monomial, decoration collected on the right,
    // children collected on the right)
    struct Acc {
        HMono left;
        N2 xacc;
        std::vector<Tree> childacc;
        Rat coeff;
    };
    std::vector<Acc> accs{{HMono{}, {0, 0}, {}, Rat(1)}};

    // split the decoration binomially
    {
        std::vector<Acc> next;
        for (const auto& acc : accs)
            for (int a = 0; a <= t.x.a; ++a)
                for (int b = 0; b <= t.x.b; ++b) {
                    N2 np{a, b};
                    Acc na = acc;
                    na.left.m = na.left.m + np;
                    na.xacc = na.xacc + (t.x - np);
                    na.coeff *= Rat(n2_binomial(t.x, np));
                    next.push_back(std::move(na));
                }
        accs = std::move(next);
    }

    for (const auto& sub : t.children) {
        HTensorT dsub = delta_h(sub, p);
        std::vector<N2> js = j_window(sub, p);
        std::vector<Acc> next;
        for (const auto& acc : accs) {
            for (const auto& [pr, cc] : dsub) {
                Acc na = acc;
                na.left = na.left + pr.first;
                na.childacc.push_back(pr.second);
                na.coeff *= cc;
                next.push_back(std::move(na));
            }
            for (N2 n : js) {
                Acc na = acc;
                HMono j;
                j.js[{n, sub}] = 1;
                na.left = na.left + j;
                na.xacc = na.xacc + n;
                na.coeff *= Rat(1, n2_factorial(n));
                next.push_back(std::move(na));
            }
        }
        accs = std::move(next);
    }

    for (auto& acc : accs)
        out[{acc.left, Tree::make(std::move(acc.childacc), t.kind, acc.xacc)}] += acc.coeff;
    return out;
}

namespace {

HTensorP tensorp_convolve(const HTensorP& a, const HTensorP& b) {
    HTensorP out;
    for (const auto& [x, c1] : a)
        for (const auto& [y, c2] : b) {
            Rat c = c1 * c2;
            out[{x.first + y.first, x.second + y.second}] += c;
        }
    return out;
}

HTensorP delta_h_plus_j(N2 n, const Tree& t, const Params& p) {
    HTensorP out;
    for (const auto& [pr, c] : delta_h(t, p)) {
        HCombo right = j_h(n, pr.second, p);
        for (const auto& [r, cr] : right) out[{pr.first, r}] += c * cr;
    }
    Hom bound = hom_H(t, p) + Hom{0, 2};
    for (int m1 = 0; p.lt(Hom{0, m1 * p.w1 + n.a * p.w1 + n.b * p.w2}, bound); ++m1)
        for (int m2 = 0;
             p.lt(Hom{0, (m1 + n.a) * p.w1 + (m2 + n.b) * p.w2}, bound); ++m2) {
            N2 m{m1, m2};
            HMono left;
            left.js[{n + m, t}] = 1;
            HMono right;
            right.m = m;
            out[{left, right}] += Rat(1, n2_factorial(m));
        }
    return out;
}

} // namespace

HTensorP delta_h_plus(const HMono& x, const Params& p) {
    HTensorP acc;
    acc[{HMono{}, HMono{}}] = 1;
    if (!x.m.is_zero()) {
        HTensorP dx;
        for (int a = 0; a <= x.m.a; ++a)
            for (int b = 0; b <= x.m.b; ++b) {
                N2 np{a, b};
                HMono l, r;
                l.m = np;
                r.m = x.m - np;
                dx[{l, r}] += Rat(n2_binomial(x.m, np));
            }
        acc = tensorp_convolve(acc, dx);
    }
    for (const auto& [k, mult] : x.js) {
        HTensorP dj = delta_h_plus_j(k.first, k.second, p);
        for (int i = 0; i < mult; ++i) acc = tensorp_convolve(acc, dj);
    }
    return acc;
}

} // namespace mihopf
