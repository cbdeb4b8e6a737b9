#include "mihopf/dict.hpp"

#include "mihopf/lie.hpp"

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

template <class M>
void prune_zeros(M& m) {
    for (auto it = m.begin(); it != m.end();)
        it = (it->second == 0) ? m.erase(it) : std::next(it);
}

bool series_equal(const Series& a, const Series& b) {
    Series d = a - b;
    for (const auto& [g, c] : d.terms())
        if (c != 0) return false;
    return true;
}

// all nonzero componentwise sub-multi-indices
std::vector<MultiIndex> proper_divisors(const MultiIndex& g) {
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

} // namespace

std::vector<Tree> enumerate_trees(const MultiIndex& beta, Mode mode) {
    static std::map<std::pair<int, MultiIndex>, std::vector<Tree>> memo;
    auto key = std::make_pair(static_cast<int>(mode), beta);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::set<Tree, TreeLess> out;
    for (const auto& [root, rmult] : beta.entries()) {
        (void)rmult;
        int k, kind;
        if (mode == Mode::RP2) {
            if (root.kind != Letter::ZC) continue;
            k = root.b;
            kind = root.a == 1 ? Tree::Noise1 : Tree::Noise;
        } else {
            if (root.kind != Letter::ZK) continue;
            k = root.a;
            kind = Tree::Noise;
        }
        MultiIndex rest = *beta.minus(MultiIndex::unit(root));

        std::vector<Tree> ch;
        std::map<N2, int> polys;
        std::function<void(const MultiIndex&, int)> go = [&](const MultiIndex& rem, int slots) {
            if (slots == 0) {
                if (rem.empty()) out.insert(Tree::make(ch, kind, {0, 0}, polys));
                return;
            }
            for (const MultiIndex& d : proper_divisors(rem)) {
                MultiIndex r2 = *rem.minus(d);
                if (mode == Mode::GPAM && d.length() == 1 &&
                    d.entries()[0].first.kind == Letter::ZN) {
                    N2 n = d.entries()[0].first.n();
                    ++polys[n];
                    go(r2, slots - 1);
                    if (--polys[n] == 0) polys.erase(n);
                }
                for (const Tree& t : enumerate_trees(d, mode)) {
                    ch.push_back(t);
                    go(r2, slots - 1);
                    ch.pop_back();
                }
            }
        };
        go(rest, k);
    }
    return memo[key] = std::vector<Tree>(out.begin(), out.end());
}

MultiIndex beta_of_tree(const Tree& t, Mode mode) {
    if (t.kind != Tree::Noise && t.kind != Tree::Noise1)
        throw std::domain_error("beta_of_tree expects a noise-rooted tree");
    if (!t.x.is_zero())
        throw std::domain_error("beta_of_tree expects an expanded (uncontracted) tree");
    int k = static_cast<int>(t.children.size());
    MultiIndex b;
    for (const auto& [n, mult] : t.polys) {
        k += mult;
        b = b + en(n, mult);
    }
    b = b + (mode == Mode::RP2 ? ec(t.kind == Tree::Noise1 ? 1 : 0, k) : ek(k));
    for (const auto& c : t.children) b = b + beta_of_tree(c, mode);
    return b;
}

TreeCombo phi_expanded(const MultiIndex& beta, Mode mode) {
    TreeCombo out;
    Rat num(sigma_mi(beta));
    for (const Tree& t : enumerate_trees(beta, mode)) {
        Rat c = num / Rat(sigma(t));
        out[t] += c;
    }
    return out;
}

Series phi_dagger(const Tree& t, Mode mode) {
    MultiIndex beta = beta_of_tree(t, mode);
    return Series::monomial(beta, Rat(sigma_mi(beta)) / Rat(sigma(t)));
}

TreeCombo phi_minus(const MultiIndex& beta) {
    TreeCombo out;
    for (const auto& [t, c] : phi_expanded(beta, Mode::GPAM)) out[q_contract(t)] += c;
    prune_zeros(out);
    return out;
}

TreeCombo phi_map(const MultiIndex& beta) {
    if (beta.length() == 1 && beta.entries()[0].first.kind == Letter::ZN)
        return TreeCombo{{Tree::poly(beta.entries()[0].first.n()), Rat(1)}};
    TreeCombo out;
    for (const auto& [t, c] : phi_minus(beta)) out[Tree::planted(t)] += c;
    return out;
}

namespace {

HCombo hconvolve(const HCombo& a, const HCombo& b) {
    HCombo out;
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) {
            Rat c = cx * cy;
            out[x + y] += c;
        }
    return out;
}

} // namespace

HCombo phi_plus(const EnvIndex& idx, const Params& p) {
    HCombo acc;
    {
        HMono xm;
        xm.m = idx.m;
        acc[xm] = 1;
    }
    for (const auto& [lp, mult] : idx.J()) {
        HCombo single;
        Rat nf(n2_factorial(lp.n));
        for (const auto& [t, c] : phi_minus(lp.gamma))
            for (const auto& [mono, cj] : j_h(lp.n, t, p)) {
                Rat cc = c * cj / nf;
                single[mono] += cc;
            }
        prune_zeros(single);
        for (int i = 0; i < mult; ++i) acc = hconvolve(acc, single);
    }
    prune_zeros(acc);
    return acc;
}

bool rp_plus_index(const EnvIndex& idx) {
    if (!idx.m.is_zero()) return false;
    for (const auto& [lp, mult] : idx.J()) {
        (void)mult;
        if (!lp.n.is_zero()) return false;
        for (const auto& [l, m2] : lp.gamma.entries()) {
            (void)m2;
            if (l.kind != Letter::ZK) return false;
        }
    }
    return true;
}

FCombo phi_plus_rp(const EnvIndex& idx) {
    if (!rp_plus_index(idx))
        throw std::domain_error("index lies outside the rough-path plus algebra");
    FCombo acc;
    acc[Forest{}] = 1;
    for (const auto& [lp, mult] : idx.J()) {
        FCombo single;
        Rat num(sigma_mi(lp.gamma));
        for (const Tree& t : enumerate_trees(lp.gamma, Mode::RP)) {
            Rat c = num / Rat(sigma(t));
            single[Forest{{t, 1}}] += c;
        }
        for (int i = 0; i < mult; ++i) {
            FCombo next;
            for (const auto& [f, cf] : acc)
                for (const auto& [g, cg] : single) {
                    Forest u = f;
                    for (const auto& [t, m] : g) u[t] += m;
                    Rat c = cf * cg;
                    next[std::move(u)] += c;
                }
            acc = std::move(next);
        }
    }
    prune_zeros(acc);
    return acc;
}

TensorPP delta_plus_rp(const MultiIndex& beta, const Params& p) {
    EnvIndex idx = EnvIndex::unit(LiePair{beta, {0, 0}});
    TensorPP out;
    for (const auto& [pr, c] : delta_plus(idx, p))
        if (rp_plus_index(pr.first) && rp_plus_index(pr.second)) out[pr] += c;
    prune_zeros(out);
    return out;
}

std::vector<MultiIndex> populated_rp_pool(int max_len) {
    std::vector<MultiIndex> out;
    std::function<void(int, const MultiIndex&)> go = [&](int k, const MultiIndex& cur) {
        if (k < 0) {
            if (!cur.empty() && is_populated(cur, Mode::RP)) out.push_back(cur);
            return;
        }
        for (int m = 0; cur.length() + m <= max_len; ++m)
            go(k - 1, m == 0 ? cur : cur + ek(k, m));
    };
    go(max_len, MultiIndex{});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MultiIndex> populated_gpam_pool(int max_len, int max_nweight) {
    Params p;
    std::vector<Letter> letters;
    for (int k = 0; k <= max_len; ++k) letters.push_back(Letter::K(k));
    for (int n1 = 0; n1 <= max_nweight; ++n1)
        for (int n2 = 0; N2{n1, n2}.weight(p.w1, p.w2) <= max_nweight; ++n2)
            if (!(n1 == 0 && n2 == 0)) letters.push_back(Letter::Nn({n1, n2}));

    std::vector<MultiIndex> out;
    std::function<void(std::size_t, const MultiIndex&)> go = [&](std::size_t i,
                                                                 const MultiIndex& cur) {
        if (i == letters.size()) {
            if (!cur.empty() && is_populated(cur, Mode::GPAM)) out.push_back(cur);
            return;
        }
        for (int m = 0; cur.length() + m <= max_len; ++m)
            go(i + 1, m == 0 ? cur : cur + MultiIndex::unit(letters[i], m));
    };
    go(0, MultiIndex{});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Tree> rp_tree_pool(int max_edges) {
    std::set<Tree, TreeLess> out;
    for (const auto& b : populated_rp_pool(max_edges + 1))
        for (const Tree& t : enumerate_trees(b, Mode::RP)) out.insert(t);
    return {out.begin(), out.end()};
}

std::vector<Tree> gpam_tree_pool(int max_len, int max_nweight) {
    std::set<Tree, TreeLess> out;
    for (const auto& b : populated_gpam_pool(max_len, max_nweight))
        for (const Tree& t : enumerate_trees(b, Mode::GPAM)) out.insert(t);
    return {out.begin(), out.end()};
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Rat c = a[i] * b[j];
            r[i + j] += c;
        }
    return r;
}

UPoly upoly_deriv(const UPoly& a) {
    UPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(Rat(static_cast<long>(i)) * a[i]);
    return r;
}

Rat upoly_eval(const UPoly& a, const Rat& u) {
    Rat r(0);
    for (std::size_t i = a.size(); i-- > 0;) {
        Rat t = r * u + a[i];
        r = t;
    }
    return r;
}

Rat upsilon_rp(const Tree& t, const UPoly& a, const Rat& u) {
    MultiIndex beta = beta_of_tree(t, Mode::RP);
    UPoly as = poly_shift(a, u);
    Rat r(sigma_mi(beta));
    for (const auto& [l, mult] : beta.entries()) {
        Rat ak = static_cast<std::size_t>(l.a) < as.size() ? as[static_cast<std::size_t>(l.a)]
                                                           : Rat(0);
        for (int i = 0; i < mult; ++i) r *= ak;
    }
    return r;
}

UPoly upsilon_rp_poly(const Tree& t, const UPoly& a) {
    MultiIndex beta = beta_of_tree(t, Mode::RP);
    UPoly r{Rat(sigma_mi(beta))};
    for (const auto& [l, mult] : beta.entries())
        for (int i = 0; i < mult; ++i) {
            UPoly ak; // a_k(u) = sum_{j >= k} C(j, k) a_j u^{j-k}
            for (std::size_t j = static_cast<std::size_t>(l.a); j < a.size(); ++j)
                ak.push_back(Rat(binomial(static_cast<long>(j), l.a)) * a[j]);
            r = upoly_mul(r, ak);
        }
    return r;
}

BPoly bpoly_shift(const BPoly& u, const Rat& y1, const Rat& y2) {
    auto rpow = [](const Rat& y, int e) {
        Rat r(1);
        for (int i = 0; i < e; ++i) r *= y;
        return r;
    };
    BPoly out;
    for (const auto& [n, c] : u)
        for (int a = 0; a <= n.a; ++a)
            for (int b = 0; b <= n.b; ++b) {
                Rat term = c * Rat(binomial(n.a, a) * binomial(n.b, b)) * rpow(y1, n.a - a) *
                           rpow(y2, n.b - b);
                out[{a, b}] += term;
            }
    prune_zeros(out);
    return out;
}

Rat upsilon_gpam(const Tree& t, const UPoly& a, const BPoly& u, const Rat& y1, const Rat& y2) {
    MultiIndex beta = beta_of_tree(t, Mode::GPAM);
    BPoly sh = bpoly_shift(u, y1, y2);
    Rat v(0);
    if (auto it = sh.find(N2{0, 0}); it != sh.end()) {
        v = it->second;
        sh.erase(it);
    }
    UPoly ap = poly_shift(a, v);
    Series s = Series::monomial(beta, Rat(n_factor(t)) * Rat(sigma_mi(beta)));
    return eval_on_ap(s, ap, sh);
}

std::vector<std::string> verify_prelie_rp(int max_edges) {
    Params q = generous(Params{});
    Generator d0 = Generator::ZD(MultiIndex{}, {0, 0});
    std::vector<std::string> bad;
    std::vector<Tree> pool = rp_tree_pool(max_edges - 1);
    for (const Tree& t1 : pool)
        for (const Tree& t2 : pool) {
            if (t1.edges() + t2.edges() + 1 > max_edges) continue;
            Series lhs;
            for (const auto& [t, c] : gl_product(t1, t2))
                lhs = lhs + phi_dagger(t, Mode::RP).scaled(c);
            Series rhs =
                phi_dagger(t1, Mode::RP) * apply_generator(d0, phi_dagger(t2, Mode::RP), q);
            if (!series_equal(lhs, rhs)) bad.push_back(t1.str() + " * " + t2.str());
        }
    return bad;
}

std::vector<std::string> verify_kernel_rp(int max_edges) {
    std::vector<std::string> bad;
    for (const MultiIndex& beta : populated_rp_pool(max_edges + 1)) {
        // phi^dagger(sigma(tau) Z_tau) = sigma(beta) z^beta for every tau in
        // T_beta: the differences span the kernel constraint, and any
        // combination violating it maps to a nonzero multiple of z^beta.
        Rat target(sigma_mi(beta));
        for (const Tree& t : enumerate_trees(beta, Mode::RP)) {
            if (beta_of_tree(t, Mode::RP) != beta) {
                bad.push_back("index mismatch for " + t.str());
                continue;
            }
            Series s = phi_dagger(t, Mode::RP).scaled(Rat(sigma(t)));
            bool ok = s.coeff(beta) == target;
            for (const auto& [g, c] : s.terms())
                if (!(g == beta) && c != 0) ok = false;
            if (!ok) bad.push_back("image of " + t.str());
        }
    }
    return bad;
}

std::vector<std::string> verify_hopf_rp(int max_edges, const Params& p) {
    std::vector<std::string> bad;
    for (const MultiIndex& beta : populated_rp_pool(max_edges + 1)) {
        BTensor lhs, rhs;
        for (const auto& [pr, c] : delta_plus_rp(beta, p)) {
            FCombo fl = phi_plus_rp(pr.first), fr = phi_plus_rp(pr.second);
            for (const auto& [f1, c1] : fl)
                for (const auto& [f2, c2] : fr) {
                    Rat cc = c * c1 * c2;
                    lhs[{f1, f2}] += cc;
                }
        }
        for (const auto& [f, cf] : phi_plus_rp(EnvIndex::unit(LiePair{beta, {0, 0}})))
            for (const auto& [pr, c] : butcher_coproduct(f)) {
                Rat cc = cf * c;
                rhs[pr] += cc;
            }
        prune_zeros(lhs);
        prune_zeros(rhs);
        if (lhs != rhs) bad.push_back(beta.str());
    }
    return bad;
}

std::vector<std::string> verify_prelie_gpam(int max_nweight, int max_edges) {
    Params q = generous(Params{});
    std::vector<std::string> bad;
    std::vector<N2> dirs{{0, 0}};
    for (int n1 = 0; n1 <= max_nweight; ++n1)
        for (int n2 = 0; N2{n1, n2}.weight(q.w1, q.w2) <= max_nweight; ++n2)
            if (!(n1 == 0 && n2 == 0)) dirs.push_back({n1, n2});

    std::vector<Tree> pool = gpam_tree_pool(max_edges + 1, max_nweight);
    for (const Tree& t1 : pool)
        for (const Tree& t2 : pool) {
            if (t1.edges() + t2.edges() + 1 > max_edges) continue;
            for (N2 n : dirs) {
                Series lhs;
                for (const auto& [t, c] : star_n(n, t1, t2))
                    lhs = lhs + phi_dagger(t, Mode::GPAM).scaled(c);
                Series rhs = phi_dagger(t1, Mode::GPAM) *
                             apply_generator(Generator::ZD(MultiIndex{}, n),
                                             phi_dagger(t2, Mode::GPAM), q);
                if (!series_equal(lhs, rhs))
                    bad.push_back(t1.str() + " *_" + n2_str(n) + " " + t2.str());
            }
        }
    return bad;
}

std::vector<std::string> verify_sharp(int max_edges) {
    Params q = generous(Params{});
    std::vector<std::string> bad;
    for (const Tree& t : gpam_tree_pool(max_edges + 3, 2)) {
        if (t.edges() > max_edges) continue;
        for (int i = 1; i <= 2; ++i) {
            Series lhs;
            for (const auto& [s, c] : sharp(i, t)) lhs = lhs + phi_dagger(s, Mode::GPAM).scaled(c);
            Series rhs = apply_generator(Generator::Del(i), phi_dagger(t, Mode::GPAM), q);
            if (!series_equal(lhs, rhs))
                bad.push_back("sharp_" + std::to_string(i) + " " + t.str());
        }
    }
    return bad;
}

std::vector<std::string> verify_fw01(int max_len, const Params& p) {
    std::vector<std::string> bad;
    std::vector<MultiIndex> pool = populated_gpam_pool(max_len, 2);
    pool.push_back(MultiIndex{});
    pool.push_back(en({1, 0}));
    pool.push_back(en({0, 1}));
    pool.push_back(en({2, 0}));
    for (const MultiIndex& beta : pool) {
        HTensorT lhs, rhs;
        for (const auto& [t, c] : phi_minus(beta))
            for (const auto& [pr, cc] : delta_h(t, p)) {
                Rat v = c * cc;
                lhs[pr] += v;
            }
        for (const auto& [pr, c] : delta(beta, p)) {
            HCombo left = phi_plus(pr.first, p);
            TreeCombo right = phi_minus(pr.second);
            for (const auto& [hm, ch] : left)
                for (const auto& [tr, ct] : right) {
                    Rat v = c * ch * ct;
                    rhs[{hm, tr}] += v;
                }
        }
        prune_zeros(lhs);
        prune_zeros(rhs);
        if (lhs != rhs) bad.push_back(beta.str());
    }
    return bad;
}

std::vector<std::string> verify_gp03(int max_len, const Params& p) {
    std::vector<std::string> bad;
    std::vector<EnvIndex> pool{EnvIndex::shift({1, 0}), EnvIndex::shift({0, 1})};
    for (const MultiIndex& beta : populated_gpam_pool(max_len, 2)) {
        Hom hb = homogeneity(beta, p);
        for (int n1 = 0; p.lt(Hom{0, n1 * p.w1}, hb); ++n1)
            for (int n2 = 0; p.lt(Hom{0, n1 * p.w1 + n2 * p.w2}, hb); ++n2)
                pool.push_back(EnvIndex::unit(LiePair{beta, {n1, n2}}));
    }
    // a few products, to exercise multiplicativity of both sides
    std::size_t base = pool.size();
    for (std::size_t i = 0; i + 1 < std::min<std::size_t>(base, 4); ++i)
        pool.push_back(pool[i] + pool[i + 1]);

    for (const EnvIndex& idx : pool) {
        HTensorP lhs, rhs;
        for (const auto& [hm, c] : phi_plus(idx, p))
            for (const auto& [pr, cc] : delta_h_plus(hm, p)) {
                Rat v = c * cc;
                lhs[pr] += v;
            }
        for (const auto& [pr, c] : delta_plus(idx, p)) {
            HCombo left = phi_plus(pr.first, p), right = phi_plus(pr.second, p);
            for (const auto& [x, cx] : left)
                for (const auto& [y, cy] : right) {
                    Rat v = c * cx * cy;
                    rhs[{x, y}] += v;
                }
        }
        prune_zeros(lhs);
        prune_zeros(rhs);
        if (lhs != rhs) bad.push_back(idx.str());
    }
    return bad;
}

std::vector<std::string> verify_faa_di_bruno(int max_l, int max_mweight, const Params& p) {
    Params q = generous(p);
    std::vector<std::string> bad;
    for (int l = 0; l <= max_l; ++l)
        for (int m1 = 0; m1 <= max_mweight; ++m1)
            for (int m2 = 0; N2{m1, m2}.weight(q.w1, q.w2) <= max_mweight; ++m2) {
                N2 m{m1, m2};
                Series lhs = Series::monomial(ek(l), Rat(factorial(l)));
                for (int i = 0; i < m1; ++i) lhs = apply_generator(Generator::Del(1), lhs, q);
                for (int i = 0; i < m2; ++i) lhs = apply_generator(Generator::Del(2), lhs, q);
                lhs = lhs.scaled(Rat(1, n2_factorial(m)));

                Series rhs;
                std::function<void(N2, int, const MultiIndex&)> go =
                    [&](N2 rem, int k, const MultiIndex& acc) {
                        if (rem.is_zero()) {
                            rhs.add_term(ek(l + k) + acc, Rat(factorial(l + k), factorial(k)));
                            return;
                        }
                        for (int a = 0; a <= rem.a; ++a)
                            for (int b = 0; b <= rem.b; ++b)
                                if (!(a == 0 && b == 0))
                                    go(rem - N2{a, b}, k + 1, acc + en({a, b}));
                    };
                go(m, 0, MultiIndex{});
                if (!series_equal(lhs, rhs)) bad.push_back("l=" + std::to_string(l) + " m=" + n2_str(m));
            }
    return bad;
}

} // namespace mihopf
