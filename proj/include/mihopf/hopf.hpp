#pragma once

#include "mihopf/envelope.hpp"

namespace mihopf {

// Element of T^+, the commutative polynomial algebra on the variables
// Z^{(J,m)}; a monomial is stored as the summed exponent EnvIndex, and the
// product of monomials adds indices (no combinatorial factors).
class PlusElement {
public:
    using Terms = std::map<EnvIndex, Rat>;

    PlusElement() = default;
    static PlusElement monomial(const EnvIndex& idx, const Rat& c = Rat(1));
    static PlusElement one() { return monomial(EnvIndex{}); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rat coeff(const EnvIndex& idx) const;
    void add_term(const EnvIndex& idx, const Rat& c);

    PlusElement operator+(const PlusElement& o) const;
    PlusElement operator-(const PlusElement& o) const;
    PlusElement operator*(const PlusElement& o) const;
    PlusElement scaled(const Rat& c) const;
    bool operator==(const PlusElement& o) const { return t_ == o.t_; }

    Rat counit() const { return coeff(EnvIndex{}); }
    std::string str() const;

private:
    Terms t_;
};

// Sparse tensors T^+ (x) T and T^+ (x) T^+.
using TensorPM = std::map<std::pair<EnvIndex, MultiIndex>, Rat>;
using TensorPP = std::map<std::pair<EnvIndex, EnvIndex>, Rat>;

// The Lie letters (gamma, n) that can contribute to Delta z_beta: gamma a
// componentwise divisor of beta with [gamma] >= 0, |n| < |gamma| exactly.
std::vector<LiePair> delta_letter_pool(const MultiIndex& beta, const Params& p);

// Delta z_beta = sum (D_(J,m))_beta^gamma Z^{(J,m)} (x) z_gamma, computed by
// transposing the basis word against z_beta.
TensorPM delta(const MultiIndex& beta, const Params& p);

// J_n z_beta = n! Z^{(e_(beta,n),0)} when (beta, n) is a Lie index, else 0.
PlusElement j_map(N2 n, const MultiIndex& beta, const Params& p);

// Coproduct of T^+, multiplicative over the length-one variables.
TensorPP delta_plus(const EnvIndex& idx, const Params& p);
TensorPP delta_plus(const PlusElement& x, const Params& p);

PlusElement antipode(const PlusElement& x, const Params& p);

} // namespace mihopf
