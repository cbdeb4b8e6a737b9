#pragma once

#include "mihopf/multi_index.hpp"
#include "mihopf/params.hpp"
#include "mihopf/rational.hpp"

#include <map>
#include <string>

namespace mihopf {

// Finitely supported rational linear combination of monomials z^gamma.
class Series {
public:
    using Terms = std::map<MultiIndex, Rat>;

    Series() = default;
    static Series monomial(const MultiIndex& g, const Rat& c = Rat(1));
    static Series one() { return monomial(MultiIndex{}); }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rat coeff(const MultiIndex& g) const;

    void add_term(const MultiIndex& g, const Rat& c); // in-place accumulate
    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const; // Cauchy product
    Series scaled(const Rat& c) const;

    bool operator==(const Series& o) const { return t_ == o.t_; }

    // drop terms with homogeneity > cutoff_hom or length > cutoff_len
    Series truncated(const Params& p) const;

    std::string str() const;

private:
    Terms t_;
};

} // namespace mihopf
