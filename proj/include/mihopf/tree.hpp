#pragma once

#include "mihopf/params.hpp"
#include "mihopf/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mihopf {

// Rooted trees in canonical form, covering all flavors used here:
//  - Noise/Noise1: a noise node (Noise1 is the second color in the two-
//    nonlinearity setting), with integration-edge children and, in the
//    expanded description, a multiset of polynomial decorations sIX^n (n != 0);
//    in the contracted description the single decoration X^x is held in x.
//  - Poly: a pure polynomial basis element X^x (no noise, no children).
//  - Planted: an integrated tree I(tau), tau being the single child.
struct Tree {
    enum Kind : int { Noise = 0, Noise1 = 1, Poly = -1, Planted = -2 };

    int kind = Noise;
    N2 x{0, 0};
    std::map<N2, int> polys;
    std::vector<Tree> children;

    static Tree leaf(int kind = Noise);
    static Tree make(std::vector<Tree> children, int kind = Noise, N2 x = {0, 0},
                     std::map<N2, int> polys = {});
    static Tree poly(N2 n);
    static Tree planted(Tree t);

    bool operator==(const Tree& o) const;
    int nodes() const;  // noise nodes
    int edges() const;  // integration edges
    std::string str() const;
};

int tree_cmp(const Tree& a, const Tree& b);
struct TreeLess {
    bool operator()(const Tree& a, const Tree& b) const { return tree_cmp(a, b) < 0; }
};

using TreeCombo = std::map<Tree, Rat, TreeLess>;
using Forest = std::map<Tree, int, TreeLess>;  // commutative monomial in trees

int forest_cmp(const Forest& a, const Forest& b);
struct ForestLess {
    bool operator()(const Forest& a, const Forest& b) const { return forest_cmp(a, b) < 0; }
};
struct CutLess {
    bool operator()(const std::pair<Tree, Tree>& a, const std::pair<Tree, Tree>& b) const {
        int c = tree_cmp(a.first, b.first);
        return c != 0 ? c < 0 : tree_cmp(a.second, b.second) < 0;
    }
};
struct BTensorLess {
    bool operator()(const std::pair<Forest, Forest>& a, const std::pair<Forest, Forest>& b) const {
        int c = forest_cmp(a.first, b.first);
        return c != 0 ? c < 0 : forest_cmp(a.second, b.second) < 0;
    }
};

using CutCount = std::map<std::pair<Tree, Tree>, int, CutLess>;
using BTensor = std::map<std::pair<Forest, Forest>, Rat, BTensorLess>;

// symmetry factors and decoration factorials
Int sigma(const Tree& t);
Int sigma_mi(const MultiIndex& beta);
Int n_factor(const Tree& t);

Tree b_plus(const std::vector<Tree>& forest, int kind = Tree::Noise);

// grafting tau1 onto every node of tau2 (n = 0), or substituting I(tau1) for a
// decoration sIX^n (n != 0); coefficients are the attachment counts m_n.
TreeCombo graft(const Tree& t1, const Tree& t2);
TreeCombo graft_n(N2 n, const Tree& t1, const Tree& t2);

// Grossman-Larson products in the Z-basis, through the sigma-weighted route.
TreeCombo gl_product(const Tree& t1, const Tree& t2);
TreeCombo star_n(N2 n, const Tree& t1, const Tree& t2);

// brute-force single-cut counts n_n(tau1, tau2; tau): key is (branch, trunk)
CutCount single_cuts(const Tree& t);
CutCount single_cuts_n(N2 n, const Tree& t);

// decoration-raising operator and its weighted dual (direction i in {1,2})
TreeCombo uparrow(int i, const Tree& t);
TreeCombo sharp(int i, const Tree& t);

// admissible-cut coproduct with the pruned branches on the left leg
BTensor butcher_coproduct(const Tree& t);
BTensor butcher_coproduct(const Forest& f);

// expanded -> contracted: merge the polynomial decorations of each node
Tree q_contract(const Tree& t);

Hom hom_H(const Tree& t, const Params& p);

// Basis monomial X^m prod_i J^H_{n_i} tau_i of the tree-side coproduct space.
struct JKeyLess {
    bool operator()(const std::pair<N2, Tree>& a, const std::pair<N2, Tree>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return tree_cmp(a.second, b.second) < 0;
    }
};

struct HMono {
    N2 m{0, 0};
    std::map<std::pair<N2, Tree>, int, JKeyLess> js;

    bool is_one() const { return m.is_zero() && js.empty(); }
    bool operator==(const HMono& o) const { return m == o.m && js == o.js; }
    HMono operator+(const HMono& o) const;  // product of monomials
    std::string str() const;
};
int hmono_cmp(const HMono& a, const HMono& b);
struct HMonoLess {
    bool operator()(const HMono& a, const HMono& b) const { return hmono_cmp(a, b) < 0; }
};
struct HTensorTLess {
    bool operator()(const std::pair<HMono, Tree>& a, const std::pair<HMono, Tree>& b) const {
        int c = hmono_cmp(a.first, b.first);
        return c != 0 ? c < 0 : tree_cmp(a.second, b.second) < 0;
    }
};
struct HTensorPLess {
    bool operator()(const std::pair<HMono, HMono>& a, const std::pair<HMono, HMono>& b) const {
        int c = hmono_cmp(a.first, b.first);
        return c != 0 ? c < 0 : hmono_cmp(a.second, b.second) < 0;
    }
};

using HCombo = std::map<HMono, Rat, HMonoLess>;
using HTensorT = std::map<std::pair<HMono, Tree>, Rat, HTensorTLess>;
using HTensorP = std::map<std::pair<HMono, HMono>, Rat, HTensorPLess>;

Hom hom_H(const HMono& x, const Params& p);

// J^H_n tau, respecting the vanishing rules (tau purely polynomial, or
// |n| >= |tau|_H + 2)
HCombo j_h(N2 n, const Tree& t, const Params& p);

// the tree-side comodule and coproduct
HTensorT delta_h(const Tree& t, const Params& p);
HTensorP delta_h_plus(const HMono& x, const Params& p);

} // namespace mihopf
