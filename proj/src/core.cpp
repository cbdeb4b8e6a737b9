#include "mihopf/params.hpp"
#include "mihopf/series.hpp"

#include <sstream>

namespace mihopf {

long long noise_homogeneity(const MultiIndex& g) {
    long long s = 0;
    for (const auto& [l, m] : g.entries()) {
        switch (l.kind) {
            case Letter::ZK: s += static_cast<long long>(l.a) * m; break;
            case Letter::ZN: s -= m; break;
            case Letter::ZC: s += static_cast<long long>(l.b) * m; break;
        }
    }
    return s;
}

Hom homogeneity(const MultiIndex& g, const Params& p) {
    Hom h{noise_homogeneity(g) + 1, 0};
    for (const auto& [l, m] : g.entries())
        if (l.kind == Letter::ZN) h.ip += static_cast<long long>(p.nweight(l.n())) * m;
    return h;
}

bool is_model_index(const MultiIndex& g) {
    if (noise_homogeneity(g) >= 0) return true;
    // or gamma = e_n for a single polynomial letter
    return g.length() == 1 && g.entries().front().first.kind == Letter::ZN;
}

bool is_populated(const MultiIndex& g, Mode mode) {
    long long s = 0;
    switch (mode) {
        case Mode::RP:
            for (const auto& [l, m] : g.entries()) s += static_cast<long long>(l.a - 1) * m;
            return s == -1;
        case Mode::RP2:
            // The paper's display prints (k+1) here, which no nonnegative
            // multi-index can satisfy; the derivation is identical to the
            // single-letter case and gives (k-1).  See the ledger.
            for (const auto& [l, m] : g.entries()) s += static_cast<long long>(l.b - 1) * m;
            return s == -1;
        case Mode::GPAM:
        case Mode::FULL:
            for (const auto& [l, m] : g.entries()) {
                if (l.kind == Letter::ZK) s += static_cast<long long>(l.a - 1) * m;
                else s -= m;
            }
            return s == -1;
    }
    return false;
}

bool alphabet_matches(const MultiIndex& g, Mode mode) {
    for (const auto& [l, m] : g.entries()) {
        (void)m;
        switch (mode) {
            case Mode::RP:
                if (l.kind != Letter::ZK) return false;
                break;
            case Mode::RP2:
                if (l.kind != Letter::ZC) return false;
                break;
            case Mode::FULL:
            case Mode::GPAM:
                if (l.kind == Letter::ZC) return false;
                break;
        }
    }
    return true;
}

Series Series::monomial(const MultiIndex& g, const Rat& c) {
    Series s;
    if (c != 0) s.t_[g] = c;
    return s;
}

Rat Series::coeff(const MultiIndex& g) const {
    auto it = t_.find(g);
    return it == t_.end() ? Rat(0) : it->second;
}

void Series::add_term(const MultiIndex& g, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Series Series::operator+(const Series& o) const {
    Series r = *this;
    for (const auto& [g, c] : o.t_) r.add_term(g, c);
    return r;
}

Series Series::operator-(const Series& o) const {
    Series r = *this;
    for (const auto& [g, c] : o.t_) r.add_term(g, -c);
    return r;
}

Series Series::operator*(const Series& o) const {
    Series r;
    for (const auto& [g1, c1] : t_)
        for (const auto& [g2, c2] : o.t_) r.add_term(g1 + g2, c1 * c2);
    return r;
}

Series Series::scaled(const Rat& c) const {
    Series r;
    if (c == 0) return r;
    for (const auto& [g, x] : t_) r.t_[g] = x * c;
    return r;
}

Series Series::truncated(const Params& p) const {
    Series r;
    for (const auto& [g, c] : t_) {
        if (g.length() > p.cutoff_len) continue;
        if (homogeneity(g, p).eval(p.alpha) > p.cutoff_hom) continue;
        r.t_[g] = c;
    }
    return r;
}

std::string Series::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : t_) {
        if (!first) out << " + ";
        first = false;
        out << rat_str(c) << "*z^{" << g.str() << "}";
    }
    return out.str();
}

} // namespace mihopf
