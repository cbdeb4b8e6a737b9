#pragma once

#include "mihopf/hopf.hpp"

#include <functional>

namespace mihopf {

// A character of T^+ is determined by the shift h in R^2 and the finitely
// supported tilt values pi_gamma^{(n)} on Lie pairs; evaluation on a monomial
// Z^{(J,m)} is h^m prod (pi_gamma^{(n)})^{J}.
struct Character {
    Rat h1, h2;
    std::map<LiePair, Rat> tilt;

    Character() : h1(0), h2(0) {}
    Character(Rat h1_, Rat h2_, std::map<LiePair, Rat> tilt_, const Params& p);
    static Character counit() { return Character{}; }
};

Rat char_eval(const Character& f, const EnvIndex& idx);
Rat char_eval(const Character& f, const PlusElement& x);

// Linear functionals on T^+ presented by their values on monomials; used so
// that convolution products and inverses stay exact without materializing an
// infinite tilt table.
using Functional = std::function<Rat(const EnvIndex&)>;

Functional as_functional(const Character& f);
Functional convolve_fn(Functional f, Functional g, const Params& p);
Functional antipode_fn(Functional f, const Params& p);

// (f tensor g) Delta^+ Z^{(J,m)} and f(S Z^{(J,m)}) on a single index.
Rat conv_eval(const Character& f, const Character& g, const EnvIndex& idx, const Params& p);
Rat inv_eval(const Character& f, const EnvIndex& idx, const Params& p);

// Materialized convolution: the shift adds exactly; tilt entries are read off
// on an explicit window of Lie pairs (the full convolved tilt need not be
// finitely supported when a shift is present).
Character convolve(const Character& f, const Character& g, const std::vector<LiePair>& window,
                   const Params& p);

// Gamma_f z_beta = (f tensor id) Delta z_beta.
Series gamma(const Character& f, const MultiIndex& beta, const Params& p);
Series gamma(const Functional& f, const MultiIndex& beta, const Params& p);

// The tilt series pi^{(n)}, including the shift-determined polynomial part,
// truncated by the cutoffs in p.
Series pi_series(const Character& f, N2 n, const Params& p);

// Dual action Gamma_f^* on series over the model alphabet, multiplicative
// from the coordinate actions; output truncated by the cutoffs in p.
Series gamma_star(const Character& f, const Series& s, const Params& p);

// Same action evaluated through the exponential of the tilted derivations.
Series exp_formula(const Character& f, const Series& s, const Params& p);

// Concrete coordinates: a univariate polynomial (nonlinearity germ) and a
// bivariate polynomial with p(0) = 0 (parameterization of the solution).
using UPoly = std::vector<Rat>;
using BPoly = std::map<N2, Rat>;

Rat eval_on_ap(const Series& s, const UPoly& a, const BPoly& bp);

// pi^{(n)} evaluated on (a, p): exact, no truncation needed since only
// finitely many coordinates of (a, p) are nonzero.
Rat pi_eval(const Character& f, N2 n, const UPoly& a, const BPoly& bp, const Params& p);

// (Gamma_f^* s)[a, p], summed exactly.
Rat gamma_star_eval(const Character& f, const Series& s, const UPoly& a, const BPoly& bp,
                    const Params& p);

UPoly poly_shift(const UPoly& a, const Rat& v); // a(. + v)

} // namespace mihopf
