#pragma once

#include "mihopf/multi_index.hpp"
#include "mihopf/rational.hpp"

namespace mihopf {

// Homogeneities live in alpha*Z + Z.  Keeping the two components separate
// documents where the alpha multiples come from; comparisons substitute the
// exact rational alpha.
struct Hom {
    long long ac = 0; // multiplier of alpha
    long long ip = 0; // integer part

    Hom operator+(const Hom& o) const { return {ac + o.ac, ip + o.ip}; }
    Hom operator-(const Hom& o) const { return {ac - o.ac, ip - o.ip}; }
    auto operator<=>(const Hom&) const = default;

    Rat eval(const Rat& alpha) const { return Rat(ac) * alpha + Rat(ip); }
};

struct Params {
    Rat alpha = Rat(1, 4);
    int w1 = 1, w2 = 2; // weights |(1,0)|, |(0,1)|
    Rat cutoff_hom = Rat(4);
    int cutoff_len = 8;

    int nweight(const N2& n) const { return n.weight(w1, w2); }

    // exact comparisons after substituting alpha
    int cmp(const Hom& x, const Hom& y) const {
        Rat d = (x - y).eval(alpha);
        return d < 0 ? -1 : (d > 0 ? 1 : 0);
    }
    bool lt(const Hom& x, const Hom& y) const { return cmp(x, y) < 0; }
    bool leq(const Hom& x, const Hom& y) const { return cmp(x, y) <= 0; }
};

enum class Mode { FULL, RP, RP2, GPAM };

// [gamma] = sum_k k*gamma(k) - sum_{n != 0} gamma(n); colored letters count by
// their k like the plain ones.
long long noise_homogeneity(const MultiIndex& g);

// |gamma| = alpha([gamma]+1) + sum |n| gamma(n)
Hom homogeneity(const MultiIndex& g, const Params& p);

// membership of z_gamma in the model space T: [gamma] >= 0 or gamma = e_n
bool is_model_index(const MultiIndex& g);

// the mode's linear population identity
bool is_populated(const MultiIndex& g, Mode mode);

// alphabet sanity for a mode (RP: ZK only; RP2: ZC only; FULL/GPAM: ZK+ZN)
bool alphabet_matches(const MultiIndex& g, Mode mode);

} // namespace mihopf
