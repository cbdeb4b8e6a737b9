#pragma once

#include "mihopf/params.hpp"
#include "mihopf/series.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace mihopf {

// One of the paper's derivations: the shifts del_1, del_2 or a variable tilt
// z^gamma D^(n) (n = 0 meaning the u-shift generator D^(0)).
struct Generator {
    bool is_del = false;
    int del_i = 1;      // 1 or 2 when is_del
    MultiIndex gamma;   // ZD payload
    N2 n;

    auto operator<=>(const Generator&) const = default;

    static Generator Del(int i) {
        Generator g;
        g.is_del = true;
        g.del_i = i;
        return g;
    }
    static Generator ZD(MultiIndex gamma, N2 n = {}) {
        Generator g;
        g.gamma = std::move(gamma);
        g.n = n;
        return g;
    }

    std::string str() const;
};

struct LieElement {
    std::map<Generator, Rat> t;

    static LieElement single(const Generator& g, const Rat& c = Rat(1));
    void add(const Generator& g, const Rat& c);
    LieElement operator+(const LieElement& o) const;
    LieElement operator-(const LieElement& o) const;
    LieElement scaled(const Rat& c) const;
    bool is_zero() const { return t.empty(); }
    bool operator==(const LieElement& o) const { return t == o.t; }
    std::string str() const;
};

// del_i ◁ del_j is not a finite combination of basis derivations; the paper
// treats it as undefined, and so do we (typed error, never a silent zero).
struct UndefinedPreLie : std::domain_error {
    UndefinedPreLie() : std::domain_error("del_i ◁ del_j is undefined in this family") {}
};

struct Bigrade {
    long long first = 0, second = 0;
    auto operator<=>(const Bigrade&) const = default;
    Bigrade operator+(const Bigrade& o) const { return {first + o.first, second + o.second}; }
};

Series apply_generator(const Generator& g, const Series& s, const Params& p);
Rat matrix_entry(const Generator& g, const MultiIndex& gamma, const MultiIndex& beta,
                 const Params& p);
LieElement pre_lie(const Generator& g1, const Generator& g2, const Params& p);
LieElement lie_bracket(const LieElement& a, const LieElement& b, const Params& p);
bool in_lie_algebra(const MultiIndex& gamma, const N2& n, Mode mode, const Params& p);
Bigrade bigrade(const Generator& g, const Params& p);

} // namespace mihopf
