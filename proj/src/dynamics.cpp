#include "mihopf/dynamics.hpp"

#include "mihopf/lie.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace mihopf {

namespace {

Params generous(const Params& p) {
    Params q = p;
    q.cutoff_hom = Rat(1000000);
    q.cutoff_len = 1000000;
    return q;
}

std::vector<MultiIndex> nonempty_divisors(const MultiIndex& g) {
    std::vector<MultiIndex> out{MultiIndex{}};
    for (const auto& [l, mult] : g.entries()) {
        std::vector<MultiIndex> next;
        for (const auto& base : out)
            for (int m = 0; m <= mult; ++m)
                next.push_back(m == 0 ? base : base + MultiIndex::unit(l, m));
        out = std::move(next);
    }
    std::erase_if(out, [](const MultiIndex& d) { return d.empty(); });
    return out;
}

// ordered tuples of k nonempty parts summing to rest
void ordered_splits(const MultiIndex& rest, int k, std::vector<MultiIndex>& cur,
                    std::vector<std::vector<MultiIndex>>& out) {
    if (k == 0) {
        if (rest.empty()) out.push_back(cur);
        return;
    }
    for (const MultiIndex& d : nonempty_divisors(rest)) {
        cur.push_back(d);
        ordered_splits(*rest.minus(d), k - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

Path sample(const Driver& xi, const Grid& g) {
    Path out(static_cast<std::size_t>(g.N) + 1);
    for (int j = 0; j <= g.N; ++j) out[static_cast<std::size_t>(j)] = xi(g.x(j));
    return out;
}

Path cumulative_integral(const Path& f, const Grid& g, Quad q) {
    if (f.size() != static_cast<std::size_t>(g.N) + 1)
        throw std::invalid_argument("path not sampled on this grid");
    const double h = g.h();
    Path I(f.size(), 0.0);
    if (q == Quad::Trapezoid) {
        for (int j = 1; j <= g.N; ++j) I[j] = I[j - 1] + h * 0.5 * (f[j - 1] + f[j]);
        return I;
    }
    for (int j = 1; j <= g.N; ++j) {
        if (j % 2 == 0)
            I[j] = I[j - 2] + h / 3.0 * (f[j - 2] + 4.0 * f[j - 1] + f[j]);
        else if (j < g.N)
            I[j] = I[j - 1] + h / 12.0 * (5.0 * f[j - 1] + 8.0 * f[j] - f[j + 1]);
        else
            I[j] = I[j - 1] + h / 12.0 * (-f[j - 2] + 8.0 * f[j - 1] + 5.0 * f[j]);
    }
    return I;
}

Path lift_tree(const Tree& t, const Path& xi, const Grid& g, Quad q) {
    Path rhs = xi;
    for (const auto& c : t.children) {
        Path pc = lift_tree(c, xi, g, q);
        for (std::size_t j = 0; j < rhs.size(); ++j) rhs[j] *= pc[j];
    }
    return cumulative_integral(rhs, g, q);
}

Path model_mi(const MultiIndex& beta, const Path& xi, const Grid& g, Quad q, Mode mode) {
    std::map<MultiIndex, Path> memo;
    std::function<const Path&(const MultiIndex&)> pi = [&](const MultiIndex& b) -> const Path& {
        if (auto it = memo.find(b); it != memo.end()) return it->second;
        Path rhs(static_cast<std::size_t>(g.N) + 1, 0.0);
        for (const auto& [root, rmult] : b.entries()) {
            (void)rmult;
            int k;
            bool noise;
            if (mode == Mode::RP2) {
                if (root.kind != Letter::ZC) continue;
                k = root.b;
                noise = root.a == 1;
            } else {
                if (root.kind != Letter::ZK) continue;
                k = root.a;
                noise = true;
            }
            std::vector<std::vector<MultiIndex>> splits;
            std::vector<MultiIndex> cur;
            ordered_splits(*b.minus(MultiIndex::unit(root)), k, cur, splits);
            for (const auto& sp : splits) {
                Path prod(rhs.size(), 1.0);
                for (const auto& part : sp) {
                    const Path& pp = pi(part);
                    for (std::size_t j = 0; j < prod.size(); ++j) prod[j] *= pp[j];
                }
                for (std::size_t j = 0; j < prod.size(); ++j)
                    rhs[j] += noise ? prod[j] * xi[j] : prod[j];
            }
        }
        return memo[b] = cumulative_integral(rhs, g, q);
    };
    return pi(beta);
}

double lemma_rp_defect(const MultiIndex& beta, const Path& xi, const Grid& g, Quad q) {
    Path m = model_mi(beta, xi, g, q, Mode::RP);
    Path s(m.size(), 0.0);
    for (const Tree& t : enumerate_trees(beta, Mode::RP)) {
        double w = rat_double(Rat(sigma_mi(beta)) / Rat(sigma(t)));
        Path lt = lift_tree(t, xi, g, q);
        for (std::size_t j = 0; j < s.size(); ++j) s[j] += w * lt[j];
    }
    double d = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) d = std::max(d, std::fabs(m[j] - s[j]));
    return d;
}

double verify_lemma_rp(const Path& xi, int max_edges, const Grid& g, Quad q) {
    double d = 0.0;
    for (const MultiIndex& beta : populated_rp_pool(max_edges + 1))
        d = std::max(d, lemma_rp_defect(beta, xi, g, q));
    return d;
}

std::vector<MultiIndex> populated_rp2_pool(int max_len) {
    std::vector<Letter> letters;
    for (int color = 0; color <= 1; ++color)
        for (int k = 0; k <= max_len; ++k) letters.push_back(Letter::C(color, k));
    std::vector<MultiIndex> out;
    std::function<void(std::size_t, const MultiIndex&)> go = [&](std::size_t i,
                                                                 const MultiIndex& cur) {
        if (i == letters.size()) {
            if (!cur.empty() && is_populated(cur, Mode::RP2)) out.push_back(cur);
            return;
        }
        for (int m = 0; cur.length() + m <= max_len; ++m)
            go(i + 1, m == 0 ? cur : cur + MultiIndex::unit(letters[i], m));
    };
    go(0, MultiIndex{});
    std::sort(out.begin(), out.end());
    return out;
}

TranslationMap::TranslationMap(Series c_) : c(std::move(c_)) {
    for (const auto& [g, coef] : c.terms()) {
        if (coef == 0) continue;
        if (g.empty())
            throw std::invalid_argument("translation series must vanish at the empty index");
        for (const auto& [l, m] : g.entries()) {
            (void)m;
            if (l.kind != Letter::ZC || l.a != 1)
                throw std::invalid_argument("translation series must depend on the z^1 letters only");
        }
        if (!is_populated(g, Mode::RP2))
            throw std::invalid_argument("translation series must have populated support");
    }
}

Series translate(const TranslationMap& mc, const MultiIndex& gamma, const Params& p) {
    Params q = generous(p);
    Generator d0 = Generator::ZD(MultiIndex{}, {0, 0});
    Series r = Series::one();
    for (const auto& [l, mult] : gamma.entries()) {
        Series f = Series::monomial(MultiIndex::unit(l));
        if (l.kind == Letter::ZC && l.a == 0) {
            Series d = mc.c;
            for (int i = 0; i < l.b; ++i) d = apply_generator(d0, d, q);
            f = f + d.scaled(Rat(1, factorial(l.b)));
        }
        for (int i = 0; i < mult; ++i) r = r * f;
    }
    return r;
}

Series translate(const TranslationMap& mc, const Series& s, const Params& p) {
    Series out;
    for (const auto& [g, c] : s.terms()) out = out + translate(mc, g, p).scaled(c);
    return out;
}

namespace {

TreeCombo bcfp_rec(const TreeCombo& v, const Tree& t, std::map<Tree, TreeCombo, TreeLess>& memo) {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    TreeCombo r;
    if (t.children.empty()) {
        r[t] += 1;
        if (t.kind == Tree::Noise)
            for (const auto& [s, c] : v) r[s] += c;
    } else {
        // peel the first branch; t itself is the root attachment, and every
        // other re-attachment has strictly larger depth sum, so the recursion
        // below terminates
        Tree branch = t.children[0];
        std::vector<Tree> rest(t.children.begin() + 1, t.children.end());
        Tree trunk = Tree::make(std::move(rest), t.kind, t.x, t.polys);
        TreeCombo mb = bcfp_rec(v, branch, memo), mt = bcfp_rec(v, trunk, memo);
        for (const auto& [t1, c1] : mb)
            for (const auto& [t2, c2] : mt)
                for (const auto& [s, c] : gl_product(t1, t2)) {
                    Rat cc = c1 * c2 * c;
                    r[s] += cc;
                }
        Rat ct(0);
        for (const auto& [s, c] : gl_product(branch, trunk)) {
            if (s == t) {
                ct = c;
                continue;
            }
            for (const auto& [u, cu] : bcfp_rec(v, s, memo)) {
                Rat cc = c * cu;
                r[u] -= cc;
            }
        }
        for (auto& [u, cu] : r) cu /= ct;
    }
    for (auto it = r.begin(); it != r.end();) it = (it->second == 0) ? r.erase(it) : std::next(it);
    return memo[t] = r;
}

} // namespace

TreeCombo bcfp_translate(const TreeCombo& v, const Tree& t) {
    std::map<Tree, TreeCombo, TreeLess> memo;
    return bcfp_rec(v, t, memo);
}

std::vector<Tree> colored_tree_pool(int max_nodes) {
    std::set<Tree, TreeLess> all{Tree::leaf(Tree::Noise), Tree::leaf(Tree::Noise1)};
    std::set<Tree, TreeLess> prev = all;
    for (int n = 2; n <= max_nodes; ++n) {
        std::set<Tree, TreeLess> cur;
        for (const Tree& t : prev)
            for (int kind : {Tree::Noise, Tree::Noise1})
                for (const auto& [s, c] : graft(Tree::leaf(kind), t)) {
                    (void)c;
                    cur.insert(s);
                }
        all.insert(cur.begin(), cur.end());
        prev = std::move(cur);
    }
    return {all.begin(), all.end()};
}

std::vector<std::string> verify_tra08(const TreeCombo& v, int max_nodes, const Params& p) {
    Series c;
    for (const auto& [t, ct] : v) c = c + phi_dagger(t, Mode::RP2).scaled(ct);
    TranslationMap mc(c);
    std::vector<std::string> bad;
    for (const Tree& t : colored_tree_pool(max_nodes)) {
        Series lhs;
        for (const auto& [s, cs] : bcfp_translate(v, t))
            lhs = lhs + phi_dagger(s, Mode::RP2).scaled(cs);
        Series rhs = translate(mc, phi_dagger(t, Mode::RP2), p);
        Series diff = lhs - rhs;
        bool ok = true;
        for (const auto& [g, cc] : diff.terms())
            if (cc != 0) ok = false;
        if (!ok) bad.push_back(t.str());
    }
    return bad;
}

double translation_defect(const MultiIndex& beta, const TranslationMap& mc, const Path& xi,
                          const Grid& g, Quad q, const Params& p) {
    const int L = beta.length();
    std::vector<MultiIndex> all = populated_rp2_pool(L);
    std::map<MultiIndex, Path> pi;
    for (const MultiIndex& b : all) pi[b] = model_mi(b, xi, g, q, Mode::RP2);

    std::map<MultiIndex, Path> cache;
    std::function<const Path&(const MultiIndex&)> tilde =
        [&](const MultiIndex& gamma) -> const Path& {
        if (auto it = cache.find(gamma); it != cache.end()) return it->second;
        Path r(static_cast<std::size_t>(g.N) + 1, 0.0);
        for (const MultiIndex& b : all) {
            if (b.length() > gamma.length()) continue;
            Rat co = translate(mc, b, p).coeff(gamma);
            if (co == 0) continue;
            double w = rat_double(co);
            const Path& pb = pi.at(b);
            for (std::size_t j = 0; j < r.size(); ++j) r[j] += w * pb[j];
        }
        return cache[gamma] = r;
    };

    Path rhs(static_cast<std::size_t>(g.N) + 1, 0.0);
    for (const auto& [root, rmult] : beta.entries()) {
        (void)rmult;
        if (root.kind != Letter::ZC) continue;
        int k = root.b;
        bool noise = root.a == 1;
        std::vector<std::vector<MultiIndex>> splits;
        std::vector<MultiIndex> cur;
        ordered_splits(*beta.minus(MultiIndex::unit(root)), k, cur, splits);
        for (const auto& sp : splits) {
            Path prod(rhs.size(), 1.0);
            for (const auto& part : sp) {
                const Path& pp = tilde(part);
                for (std::size_t j = 0; j < prod.size(); ++j) prod[j] *= pp[j];
            }
            for (std::size_t j = 0; j < prod.size(); ++j)
                rhs[j] += noise ? prod[j] * xi[j] : prod[j];
        }
    }
    // counter-term: sum_k (1/k!) ((D^(0))^k c) Pi~^k
    Params gen = generous(p);
    Generator d0 = Generator::ZD(MultiIndex{}, {0, 0});
    Series ck = mc.c;
    for (int k = 0; k <= L; ++k) {
        Series scaled = ck.scaled(Rat(1, factorial(k)));
        for (const auto& [gc, w] : scaled.terms()) {
            if (!beta.contains(gc)) continue;
            std::vector<std::vector<MultiIndex>> splits;
            std::vector<MultiIndex> cur;
            ordered_splits(*beta.minus(gc), k, cur, splits);
            double wd = rat_double(w);
            for (const auto& sp : splits) {
                Path prod(rhs.size(), 1.0);
                for (const auto& part : sp) {
                    const Path& pp = tilde(part);
                    for (std::size_t j = 0; j < prod.size(); ++j) prod[j] *= pp[j];
                }
                for (std::size_t j = 0; j < prod.size(); ++j) rhs[j] += wd * prod[j];
            }
        }
        ck = apply_generator(d0, ck, gen);
    }

    Path want = cumulative_integral(rhs, g, q);
    const Path& got = tilde(beta);
    double d = 0.0;
    for (std::size_t j = 0; j < want.size(); ++j) d = std::max(d, std::fabs(got[j] - want[j]));
    return d;
}

} // namespace mihopf
