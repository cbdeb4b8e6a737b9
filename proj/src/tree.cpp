#include "mihopf/tree.hpp"

#include <algorithm>

namespace mihopf {

Tree Tree::leaf(int kind) {
    Tree t;
    t.kind = kind;
    return t;
}

Tree Tree::make(std::vector<Tree> children, int kind, N2 x, std::map<N2, int> polys) {
    Tree t;
    t.kind = kind;
    t.x = x;
    std::erase_if(polys, [](const auto& e) { return e.second == 0; });
    t.polys = std::move(polys);
    std::sort(children.begin(), children.end(),
              [](const Tree& a, const Tree& b) { return tree_cmp(a, b) < 0; });
    t.children = std::move(children);
    return t;
}

Tree Tree::poly(N2 n) {
    Tree t;
    t.kind = Poly;
    t.x = n;
    return t;
}

Tree Tree::planted(Tree sub) {
    Tree t;
    t.kind = Planted;
    t.children.push_back(std::move(sub));
    return t;
}

int tree_cmp(const Tree& a, const Tree& b) {
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (a.x != b.x) return a.x < b.x ? -1 : 1;
    if (a.polys != b.polys) return a.polys < b.polys ? -1 : 1;
    if (a.children.size() != b.children.size())
        return a.children.size() < b.children.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (int c = tree_cmp(a.children[i], b.children[i]); c != 0) return c;
    return 0;
}

bool Tree::operator==(const Tree& o) const { return tree_cmp(*this, o) == 0; }

int Tree::nodes() const {
    int n = (kind == Noise || kind == Noise1) ? 1 : 0;
    for (const auto& c : children) n += c.nodes();
    return n;
}

int Tree::edges() const {
    int n = 0;
    for (const auto& c : children) n += 1 + c.edges();
    return n;
}

std::string Tree::str() const {
    if (kind == Poly) return "X" + n2_str(x);
    if (kind == Planted) return "I[" + children[0].str() + "]";
    std::string s = kind == Noise1 ? "o1" : "o";
    std::vector<std::string> entries;
    if (!x.is_zero()) entries.push_back("X" + n2_str(x));
    for (const auto& [n, mult] : polys)
        for (int i = 0; i < mult; ++i) entries.push_back("X" + n2_str(n));
    for (const auto& c : children) entries.push_back("I[" + c.str() + "]");
    if (entries.empty()) return s;
    s += "[";
    for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + entries[i];
    return s + "]";
}

int forest_cmp(const Forest& a, const Forest& b) {
    auto it = a.begin(), jt = b.begin();
    for (; it != a.end() && jt != b.end(); ++it, ++jt) {
        if (int c = tree_cmp(it->first, jt->first); c != 0) return c;
        if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
    }
    if (it != a.end()) return 1;
    if (jt != b.end()) return -1;
    return 0;
}

Int sigma(const Tree& t) {
    if (t.kind == Tree::Poly) return 1;
    Int r = 1;
    for (const auto& [n, mult] : t.polys) {
        (void)n;
        r *= factorial(mult);
    }
    // children are sorted, so equal subtrees form runs
    std::size_t i = 0;
    while (i < t.children.size()) {
        std::size_t j = i;
        while (j < t.children.size() && tree_cmp(t.children[i], t.children[j]) == 0) ++j;
        r *= factorial(static_cast<long>(j - i));
        i = j;
    }
    for (const auto& c : t.children) r *= sigma(c);
    return r;
}

Int sigma_mi(const MultiIndex& beta) {
    Int r = 1;
    for (const auto& [l, mult] : beta.entries()) {
        if (l.kind == Letter::ZK)
            for (int i = 0; i < mult; ++i) r *= factorial(l.a);
        else if (l.kind == Letter::ZC)
            for (int i = 0; i < mult; ++i) r *= factorial(l.b);
    }
    return r;
}

Int n_factor(const Tree& t) {
    Int r = 1;
    if (t.kind == Tree::Poly) return n2_factorial(t.x);
    for (const auto& [n, mult] : t.polys)
        for (int i = 0; i < mult; ++i) r *= n2_factorial(n);
    for (const auto& c : t.children) r *= n_factor(c);
    return r;
}

Tree b_plus(const std::vector<Tree>& forest, int kind) { return Tree::make(forest, kind); }

namespace {

Tree with_children(const Tree& t, std::vector<Tree> ch) {
    return Tree::make(std::move(ch), t.kind, t.x, t.polys);
}

} // namespace

TreeCombo graft(const Tree& t1, const Tree& t2) {
    TreeCombo out;
    if (t2.kind == Tree::Noise || t2.kind == Tree::Noise1) {
        auto ch = t2.children;
        ch.push_back(t1);
        out[with_children(t2, std::move(ch))] += 1;
    }
    for (std::size_t i = 0; i < t2.children.size(); ++i) {
        TreeCombo sub = graft(t1, t2.children[i]);
        for (const auto& [s, c] : sub) {
            auto ch = t2.children;
            ch[i] = s;
            out[with_children(t2, std::move(ch))] += c;
        }
    }
    return out;
}

TreeCombo graft_n(N2 n, const Tree& t1, const Tree& t2) {
    if (n.is_zero()) return graft(t1, t2);
    TreeCombo out;
    if (auto it = t2.polys.find(n); it != t2.polys.end()) {
        auto polys = t2.polys;
        if (--polys[n] == 0) polys.erase(n);
        auto ch = t2.children;
        ch.push_back(t1);
        out[Tree::make(std::move(ch), t2.kind, t2.x, std::move(polys))] += it->second;
    }
    for (std::size_t i = 0; i < t2.children.size(); ++i) {
        TreeCombo sub = graft_n(n, t1, t2.children[i]);
        for (const auto& [s, c] : sub) {
            auto ch = t2.children;
            ch[i] = s;
            out[with_children(t2, std::move(ch))] += c;
        }
    }
    return out;
}

namespace {

TreeCombo sigma_route(const TreeCombo& grafted, const Tree& t1, const Tree& t2) {
    Rat denom = Rat(sigma(t1) * sigma(t2));
    TreeCombo out;
    for (const auto& [t, m] : grafted) {
        Rat c = m * Rat(sigma(t)) / denom;
        out[t] += c;
    }
    return out;
}

} // namespace

TreeCombo gl_product(const Tree& t1, const Tree& t2) { return sigma_route(graft(t1, t2), t1, t2); }

TreeCombo star_n(N2 n, const Tree& t1, const Tree& t2) {
    return sigma_route(graft_n(n, t1, t2), t1, t2);
}

CutCount single_cuts(const Tree& t) {
    CutCount out;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        auto ch = t.children;
        ch.erase(ch.begin() + static_cast<long>(i));
        out[{t.children[i], with_children(t, std::move(ch))}] += 1;
        for (const auto& [pr, c] : single_cuts(t.children[i])) {
            auto ch2 = t.children;
            ch2[i] = pr.second;
            out[{pr.first, with_children(t, std::move(ch2))}] += c;
        }
    }
    return out;
}

CutCount single_cuts_n(N2 n, const Tree& t) {
    if (n.is_zero()) return single_cuts(t);
    CutCount out;
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        auto ch = t.children;
        ch.erase(ch.begin() + static_cast<long>(i));
        auto polys = t.polys;
        ++polys[n];
        out[{t.children[i], Tree::make(std::move(ch), t.kind, t.x, std::move(polys))}] += 1;
        for (const auto& [pr, c] : single_cuts_n(n, t.children[i])) {
            auto ch2 = t.children;
            ch2[i] = pr.second;
            out[{pr.first, with_children(t, std::move(ch2))}] += c;
        }
    }
    return out;
}

namespace {

// uparrow restricted to the direction-i decoration increase at this node
TreeCombo uparrow_here(int i, const Tree& t) {
    TreeCombo out;
    if (t.kind != Tree::Noise && t.kind != Tree::Noise1) return out;
    N2 ei = i == 1 ? N2{1, 0} : N2{0, 1};
    auto polys = t.polys;
    ++polys[ei];
    out[Tree::make(t.children, t.kind, t.x, std::move(polys))] += 1;
    for (const auto& [n, mult] : t.polys) {
        auto ps = t.polys;
        if (--ps[n] == 0) ps.erase(n);
        ++ps[n + ei];
        out[Tree::make(t.children, t.kind, t.x, std::move(ps))] += mult;
    }
    return out;
}

} // namespace

TreeCombo uparrow(int i, const Tree& t) {
    TreeCombo out = uparrow_here(i, t);
    for (std::size_t j = 0; j < t.children.size(); ++j) {
        for (const auto& [s, c] : uparrow(i, t.children[j])) {
            auto ch = t.children;
            ch[j] = s;
            out[with_children(t, std::move(ch))] += c;
        }
    }
    return out;
}

TreeCombo sharp(int i, const Tree& t) {
    Rat denom = Rat(sigma(t) * n_factor(t));
    TreeCombo out;
    for (const auto& [s, m] : uparrow(i, t)) {
        Rat c = m * Rat(sigma(s) * n_factor(s)) / denom;
        out[s] += c;
    }
    return out;
}

namespace {

BTensor delta_b_forest(const Forest& f);

BTensor tensor_convolve(const BTensor& a, const BTensor& b) {
    BTensor out;
    for (const auto& [x, c1] : a)
        for (const auto& [y, c2] : b) {
            Forest l = x.first, r = x.second;
            for (const auto& [t, m] : y.first) l[t] += m;
            for (const auto& [t, m] : y.second) r[t] += m;
            Rat c = c1 * c2;
            out[{std::move(l), std::move(r)}] += c;
        }
    return out;
}

} // namespace

BTensor butcher_coproduct(const Tree& t) {
    // cut-off branches on the left leg: Delta B+(f) = B+(f) (x) 1 + (id (x) B+) Delta f
    BTensor out;
    out[{Forest{{t, 1}}, Forest{}}] += 1;
    Forest childf;
    for (const auto& c : t.children) ++childf[c];
    for (const auto& [x, c] : delta_b_forest(childf)) {
        std::vector<Tree> ch;
        for (const auto& [s, m] : x.second)
            for (int i = 0; i < m; ++i) ch.push_back(s);
        out[{x.first, Forest{{Tree::make(std::move(ch), t.kind, t.x, t.polys), 1}}}] += c;
    }
    return out;
}

namespace {

BTensor delta_b_forest(const Forest& f) {
    BTensor acc;
    acc[{Forest{}, Forest{}}] = 1;
    for (const auto& [t, mult] : f) {
        BTensor dt = butcher_coproduct(t);
        for (int i = 0; i < mult; ++i) acc = tensor_convolve(acc, dt);
    }
    return acc;
}

} // namespace

BTensor butcher_coproduct(const Forest& f) { return delta_b_forest(f); }

} // namespace mihopf
