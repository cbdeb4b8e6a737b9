#pragma once

#include "mihopf/dict.hpp"

#include <functional>

namespace mihopf {

// Uniform grid on [0, T] with N intervals; paths are sampled at the N+1 nodes.
struct Grid {
    double T = 1.0;
    int N = 2000;

    double h() const { return T / N; }
    double x(int j) const { return T * j / N; }
};

enum class Quad { Trapezoid, Simpson };

using Path = std::vector<double>;
using Driver = std::function<double(double)>;

Path sample(const Driver& xi, const Grid& g);

// running integral from 0, by the composite rule; deterministic given grid
Path cumulative_integral(const Path& f, const Grid& g, Quad q);

// branched lift: dX_tau = X_tau1 ... X_tauk dxi, X_tau(0) = 0
Path lift_tree(const Tree& t, const Path& xi, const Grid& g, Quad q);

// multi-index model with zero initial data; over the colored alphabet the
// color-0 letters drive without xi and the color-1 letters with it
Path model_mi(const MultiIndex& beta, const Path& xi, const Grid& g, Quad q, Mode mode);

// max_j |Pi_beta - sum_tau sigma(beta)/sigma(tau) X_tau|, and its maximum over
// all populated beta with <= max_edges edges
double lemma_rp_defect(const MultiIndex& beta, const Path& xi, const Grid& g, Quad q);
double verify_lemma_rp(const Path& xi, int max_edges, const Grid& g, Quad q);

std::vector<MultiIndex> populated_rp2_pool(int max_len);

// Exact translation by a series c in the z^1 letters: M_c z_k^0 = z_k^0 +
// (1/k!) (D^(0))^k c, M_c z_k^1 = z_k^1, extended as an algebra morphism.
struct TranslationMap {
    Series c;
    explicit TranslationMap(Series c_); // rejects constant terms, z^0 letters,
                                        // and unpopulated support
};

Series translate(const TranslationMap& mc, const MultiIndex& gamma, const Params& p);
Series translate(const TranslationMap& mc, const Series& s, const Params& p);

// Tree-side translation: the unique pre-Lie morphism with M Z_dot0 = Z_dot0 + v
// and M Z_dot1 = Z_dot1.
TreeCombo bcfp_translate(const TreeCombo& v, const Tree& t);

// all {0,1}-colored rooted trees with <= max_nodes nodes
std::vector<Tree> colored_tree_pool(int max_nodes);

// phi^dagger M_v = M_{phi^dagger v} phi^dagger, exhaustively on the pool
std::vector<std::string> verify_tra08(const TreeCombo& v, int max_nodes, const Params& p);

// defect of the translated model against the counter-term equation
double translation_defect(const MultiIndex& beta, const TranslationMap& mc, const Path& xi,
                          const Grid& g, Quad q, const Params& p);

} // namespace mihopf
