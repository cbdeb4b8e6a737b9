#pragma once

#include "mihopf/lie.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mihopf {

// Index (gamma, n) of a Lie-algebra basis element z^gamma D^(n).
struct LiePair {
    MultiIndex gamma;
    N2 n;

    auto operator<=>(const LiePair&) const = default;
    std::string str() const;
};

// Index (J, m) of a canonical basis word D_(J,m) of the enveloping algebra:
// J a finitely supported multiplicity map on Lie pairs, m the power of the
// shift derivations.  The word has all multiplications z^gamma outermost,
// del_1^{m_1} del_2^{m_2} in the middle and the D^(n)'s innermost, normalized
// by 1/(J! m!).
struct EnvIndex {
    using Entry = std::pair<LiePair, int>;

    EnvIndex() = default;
    EnvIndex(std::vector<Entry> entries, N2 m);

    static EnvIndex unit(LiePair l, int mult = 1);
    static EnvIndex shift(N2 m);

    int J_at(const LiePair& l) const;
    int J_length() const; // sum of J multiplicities
    int length() const { return J_length() + m.a + m.b; }
    bool is_one() const { return J_.empty() && m.is_zero(); }
    const std::vector<Entry>& J() const { return J_; }

    EnvIndex plus(const LiePair& l, int delta) const;
    EnvIndex plus_m(N2 dm) const;
    EnvIndex operator+(const EnvIndex& o) const; // componentwise sum of (J,m)

    auto operator<=>(const EnvIndex&) const = default;
    std::string str() const;

    N2 m;

private:
    std::vector<Entry> J_;
};

// Finitely supported rational combination of basis words.
class EnvElement {
public:
    using Terms = std::map<EnvIndex, Rat>;

    EnvElement() = default;
    static EnvElement basis(const EnvIndex& idx, const Rat& c = Rat(1));
    static EnvElement one() { return basis(EnvIndex{}); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rat coeff(const EnvIndex& idx) const;
    void add_term(const EnvIndex& idx, const Rat& c);

    EnvElement operator+(const EnvElement& o) const;
    EnvElement operator-(const EnvElement& o) const;
    EnvElement scaled(const Rat& c) const;
    bool operator==(const EnvElement& o) const { return t_ == o.t_; }

    std::string str() const;

private:
    Terms t_;
};

// Tensor square of the enveloping algebra, sparse.
using EnvTensor = std::map<std::pair<EnvIndex, EnvIndex>, Rat>;

struct InadmissibleInsert : std::domain_error {
    InadmissibleInsert()
        : std::domain_error("insertion index (gamma, n) is not admissible in the Lie algebra") {}
};

// z^gamma U D^(n); on a basis word this is (J(gamma,n)+1) D_(J+e,m).
EnvElement insert(const MultiIndex& gamma, const EnvElement& U, N2 n, const Params& p);

// cop D_(J,m) = sum over all componentwise splits of (J,m); divided-power
// normalization absorbs the binomials.
EnvTensor cop(const EnvElement& U);

// The representation on the formal series algebra.
Series rho_apply(const EnvElement& U, const Series& s, const Params& p);

// iota_n projects onto single-letter words with that n; epsilon_n reads the
// coefficient of the pure shift word D_(0,n).
Series iota(N2 n, const EnvElement& U);
Rat epsilon(N2 n, const EnvElement& U);

// Concatenation product expanded in the D-basis (right factor peeled).
EnvElement envelope_product(const EnvElement& U1, const EnvElement& U2, const Params& p);

Bigrade bigrade_word(const EnvIndex& idx, const Params& p);
Hom grade_word(const EnvIndex& idx, const Params& p);

} // namespace mihopf
