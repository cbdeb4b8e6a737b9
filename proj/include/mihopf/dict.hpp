#pragma once

#include "mihopf/group.hpp"
#include "mihopf/tree.hpp"

#include <string>
#include <vector>

namespace mihopf {

using FCombo = std::map<Forest, Rat, ForestLess>;

// The set T_beta of trees encoded by beta: beta(k) nodes with k children
// (polynomial decorations count as children over the full alphabet, and the
// colored letters of the two-nonlinearity alphabet pick the node color).
std::vector<Tree> enumerate_trees(const MultiIndex& beta, Mode mode);
MultiIndex beta_of_tree(const Tree& t, Mode mode);

// phi z_beta = sum_{tau in T_beta} sigma(beta)/sigma(tau) z_tau, in the
// expanded description; phi_dagger is its transpose on the Z_tau basis,
// valued in series (the D^(0) factor of the target Lie algebra is implicit).
TreeCombo phi_expanded(const MultiIndex& beta, Mode mode);
Series phi_dagger(const Tree& t, Mode mode);

// The contracted dictionary: phi_minus = Q phi_expanded (with the polynomial
// sector projected out), and phi placing X^n / planting an integration.
TreeCombo phi_minus(const MultiIndex& beta);
TreeCombo phi_map(const MultiIndex& beta);

// Phi on the plus side: multiplicative, shift letters to X_i, and
// Phi J_n z_beta = J^H_n phi_minus z_beta.
HCombo phi_plus(const EnvIndex& idx, const Params& p);

// The rough-path plus side mapped into the polynomial algebra of forests.
bool rp_plus_index(const EnvIndex& idx);
FCombo phi_plus_rp(const EnvIndex& idx);

// Delta^+_RP on Z^{(e_(beta,0),0)}: the restriction of the full coproduct to
// the rough-path alphabet.
TensorPP delta_plus_rp(const MultiIndex& beta, const Params& p);

// all populated pure-z_k multi-indices of length <= max_len (= edges + 1),
// and the analogous pool over the full alphabet with decorations |n| bounded
std::vector<MultiIndex> populated_rp_pool(int max_len);
std::vector<MultiIndex> populated_gpam_pool(int max_len, int max_nweight);

// all trees arising from the pools above
std::vector<Tree> rp_tree_pool(int max_edges);
std::vector<Tree> gpam_tree_pool(int max_len, int max_nweight);

// Upsilon^a[tau](u) = phi^dagger sigma(tau) Z_tau [a(. + u)], as a value and
// as a polynomial in the shift u.
Rat upsilon_rp(const Tree& t, const UPoly& a, const Rat& u);
UPoly upsilon_rp_poly(const Tree& t, const UPoly& a);

UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_deriv(const UPoly& a);
Rat upoly_eval(const UPoly& a, const Rat& u);

// Upsilon-ring^a[tau](u, y) = phi-ring_-^dagger N(tau) sigma(tau) Z_tau
// [a(. + u(y)), u(. + y) - u(y)], with u given by its plain coefficients.
BPoly bpoly_shift(const BPoly& u, const Rat& y1, const Rat& y2);
Rat upsilon_gpam(const Tree& t, const UPoly& a, const BPoly& u, const Rat& y1, const Rat& y2);

// Exhaustive identity checks; each returned string describes one counterexample.
std::vector<std::string> verify_prelie_rp(int max_edges);
std::vector<std::string> verify_kernel_rp(int max_edges);
std::vector<std::string> verify_hopf_rp(int max_edges, const Params& p);
std::vector<std::string> verify_prelie_gpam(int max_nweight, int max_edges);
std::vector<std::string> verify_sharp(int max_edges);
std::vector<std::string> verify_fw01(int max_len, const Params& p);
std::vector<std::string> verify_gp03(int max_len, const Params& p);
std::vector<std::string> verify_faa_di_bruno(int max_l, int max_mweight, const Params& p);

} // namespace mihopf
