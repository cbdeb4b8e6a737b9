#include "mihopf/hopf.hpp"

#include <functional>
#include <sstream>

namespace mihopf {

PlusElement PlusElement::monomial(const EnvIndex& idx, const Rat& c) {
    PlusElement e;
    if (c != 0) e.t_[idx] = c;
    return e;
}

Rat PlusElement::coeff(const EnvIndex& idx) const {
    auto it = t_.find(idx);
    return it == t_.end() ? Rat(0) : it->second;
}

void PlusElement::add_term(const EnvIndex& idx, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

PlusElement PlusElement::operator+(const PlusElement& o) const {
    PlusElement r = *this;
    for (const auto& [i, c] : o.t_) r.add_term(i, c);
    return r;
}

PlusElement PlusElement::operator-(const PlusElement& o) const {
    PlusElement r = *this;
    for (const auto& [i, c] : o.t_) r.add_term(i, -c);
    return r;
}

PlusElement PlusElement::operator*(const PlusElement& o) const {
    PlusElement r;
    for (const auto& [i1, c1] : t_)
        for (const auto& [i2, c2] : o.t_) r.add_term(i1 + i2, c1 * c2);
    return r;
}

PlusElement PlusElement::scaled(const Rat& c) const {
    PlusElement r;
    if (c == 0) return r;
    for (const auto& [i, x] : t_) r.t_[i] = x * c;
    return r;
}

std::string PlusElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : t_) {
        if (!first) out << " + ";
        first = false;
        out << rat_str(c) << "*Z^" << i.str();
    }
    return out.str();
}

namespace {

// Transposed derivations acting on the dual monomial basis.

// (D^(n))^dagger z_delta = (delta(n)+1) z_{delta+e_n} for n != 0; the n = 0
// shift derivation transposes to moving one z_{k+1} letter down to z_k.
Series dn_dagger(N2 n, const Series& s) {
    Series r;
    for (const auto& [d, c] : s.terms()) {
        if (!n.is_zero()) {
            r.add_term(d.plus(Letter::Nn(n), 1), c * Rat(d.at(Letter::Nn(n)) + 1));
            continue;
        }
        for (const auto& [l, mult] : d.entries()) {
            if (l.kind != Letter::ZK || l.a == 0) continue;
            int k = l.a - 1;
            MultiIndex g = d.plus(Letter::K(k + 1), -1).plus(Letter::K(k), 1);
            r.add_term(g, c * Rat(k + 1) * Rat(g.at(Letter::K(k))));
        }
    }
    return r;
}

// Transpose of del_i: undo one z_{n+e_i} letter (polynomial branch) or one
// z_{k+1} z_{e_i} pair (n = 0 branch).
Series del_dagger(int i, const Series& s) {
    N2 ei = (i == 1) ? N2{1, 0} : N2{0, 1};
    Series r;
    for (const auto& [d, c] : s.terms()) {
        for (const auto& [l, mult] : d.entries()) {
            if (l.kind == Letter::ZK) {
                if (l.a == 0 || d.at(Letter::Nn(ei)) == 0) continue;
                int k = l.a - 1;
                MultiIndex g = d.plus(Letter::K(k + 1), -1)
                                   .plus(Letter::K(k), 1)
                                   .plus(Letter::Nn(ei), -1);
                r.add_term(g, c * Rat(k + 1) * Rat(g.at(Letter::K(k))));
            } else if (l.kind == Letter::ZN) {
                // letter n+e_i present; predecessor letter is n (n != 0)
                N2 npl = l.n();
                int ni = (i == 1) ? npl.a : npl.b;
                if (ni == 0) continue;
                N2 n = npl - ei;
                if (n.is_zero()) continue;
                MultiIndex g = d.plus(Letter::Nn(npl), -1).plus(Letter::Nn(n), 1);
                r.add_term(g, c * Rat((i == 1 ? n.a : n.b) + 1) * Rat(g.at(Letter::Nn(n))));
            }
        }
    }
    return r;
}

long long zk_weight(const MultiIndex& b) {
    long long s = 0;
    for (const auto& [l, m] : b.entries())
        if (l.kind == Letter::ZK) s += static_cast<long long>(l.a) * m;
    return s;
}

long long poly_weight(const MultiIndex& b, const Params& p) {
    long long s = 0;
    for (const auto& [l, m] : b.entries())
        if (l.kind == Letter::ZN) s += static_cast<long long>(p.nweight(l.n())) * m;
    return s;
}

// all componentwise divisors of beta
std::vector<MultiIndex> divisors(const MultiIndex& beta) {
    std::vector<MultiIndex> r{MultiIndex{}};
    for (const auto& [l, m] : beta.entries()) {
        std::vector<MultiIndex> next;
        for (const auto& g : r)
            for (int j = 0; j <= m; ++j) next.push_back(j ? g.plus(l, j) : g);
        r = std::move(next);
    }
    return r;
}

// the transposed word (rho D_(J,m))^dagger applied to z_beta
Series transpose_word(const EnvIndex& idx, const MultiIndex& beta, const Params& p) {
    MultiIndex total;
    Rat norm(1);
    for (const auto& [l, k] : idx.J()) {
        for (int j = 0; j < k; ++j) total = total + l.gamma;
        norm /= Rat(factorial(k));
    }
    auto rem = beta.minus(total);
    if (!rem) return {};
    norm /= Rat(n2_factorial(idx.m));
    Series s = Series::monomial(*rem);
    for (int j = 0; j < idx.m.a && !s.is_zero(); ++j) s = del_dagger(1, s);
    for (int j = 0; j < idx.m.b && !s.is_zero(); ++j) s = del_dagger(2, s);
    for (const auto& [l, k] : idx.J())
        for (int j = 0; j < k && !s.is_zero(); ++j) s = dn_dagger(l.n, s);
    return s.scaled(norm);
}

} // namespace

std::vector<LiePair> delta_letter_pool(const MultiIndex& beta, const Params& p) {
    std::vector<LiePair> pool;
    for (const auto& g : divisors(beta)) {
        if (noise_homogeneity(g) < 0) continue;
        Hom h = homogeneity(g, p);
        for (int nb = 0;; ++nb) {
            if (!p.lt(Hom{0, static_cast<long long>(nb) * p.w2}, h)) break;
            for (int na = 0;; ++na) {
                Hom nw{0, static_cast<long long>(na) * p.w1 + static_cast<long long>(nb) * p.w2};
                if (!p.lt(nw, h)) break;
                pool.push_back({g, {na, nb}});
            }
        }
    }
    return pool;
}

TensorPM delta(const MultiIndex& beta, const Params& p) {
    if (!is_model_index(beta)) throw std::invalid_argument("delta: not a model index");
    std::vector<LiePair> pool = delta_letter_pool(beta, p);
    long long empty_budget = noise_homogeneity(beta) + 1;
    long long pw = poly_weight(beta, p);

    TensorPM out;
    // enumerate J over the pool, then m within the residual polynomial weight
    std::function<void(size_t, EnvIndex, MultiIndex, long long)> rec =
        [&](size_t i, EnvIndex J, MultiIndex used, long long eb) {
            if (i == pool.size()) {
                long long budget = pw - poly_weight(used, p);
                for (int m2 = 0; static_cast<long long>(m2) * p.w2 <= budget; ++m2)
                    for (int m1 = 0;
                         static_cast<long long>(m1) * p.w1 + static_cast<long long>(m2) * p.w2 <=
                         budget;
                         ++m1) {
                        EnvIndex idx = J.plus_m({m1, m2});
                        Series img = transpose_word(idx, beta, p);
                        for (const auto& [g, c] : img.terms())
                            if (is_model_index(g)) {
                                auto [it, ins] = out.try_emplace({idx, g}, c);
                                if (!ins) it->second += c;
                            }
                    }
                return;
            }
            const LiePair& l = pool[i];
            rec(i + 1, J, used, eb);
            if (l.gamma.empty()) {
                EnvIndex J2 = J;
                for (long long j = 1; j <= eb; ++j) {
                    J2 = J2.plus(l, 1);
                    rec(i + 1, J2, used, eb - j);
                }
            } else {
                EnvIndex J2 = J;
                MultiIndex u2 = used;
                for (int j = 1;; ++j) {
                    u2 = u2 + l.gamma;
                    if (!beta.contains(u2)) break;
                    J2 = J2.plus(l, 1);
                    rec(i + 1, J2, u2, eb);
                }
            }
        };
    // the empty-gamma letters also consume noise homogeneity via their daggers
    long long d0_budget = std::max(empty_budget, zk_weight(beta));
    rec(0, EnvIndex{}, MultiIndex{}, d0_budget);
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

PlusElement j_map(N2 n, const MultiIndex& beta, const Params& p) {
    if (!in_lie_algebra(beta, n, Mode::FULL, p)) return {};
    return PlusElement::monomial(EnvIndex::unit({beta, n}), Rat(n2_factorial(n)));
}

namespace {

TensorPP tensor_mul(const TensorPP& x, const TensorPP& y) {
    TensorPP r;
    for (const auto& [ab, c1] : x)
        for (const auto& [cd, c2] : y) {
            Rat c = c1 * c2;
            auto [it, ins] = r.try_emplace({ab.first + cd.first, ab.second + cd.second}, c);
            if (!ins) it->second += c;
        }
    std::erase_if(r, [](const auto& e) { return e.second == 0; });
    return r;
}

// coproduct of one variable Z^{(e_(gamma,n),0)} via the J-intertwining
TensorPP delta_plus_letter(const LiePair& l, const Params& p) {
    TensorPP r;
    Rat nfac(n2_factorial(l.n));
    for (const auto& [pair, c] : delta(l.gamma, p)) {
        PlusElement jm = j_map(l.n, pair.second, p);
        for (const auto& [idx, x] : jm.terms()) {
            Rat v = c * x / nfac;
            auto [it, ins] = r.try_emplace({pair.first, idx}, v);
            if (!ins) it->second += v;
        }
    }
    // polynomial corrections: J_{m+n} z_gamma (x) Z^(0,m), m >= 0
    Hom h = homogeneity(l.gamma, p);
    for (int m2 = 0;; ++m2) {
        N2 base = l.n + N2{0, m2};
        if (!p.lt(Hom{0, p.nweight(base)}, h)) break;
        for (int m1 = 0;; ++m1) {
            N2 m{m1, m2};
            N2 mn = l.n + m;
            if (!p.lt(Hom{0, p.nweight(mn)}, h)) break;
            Rat coeff = Rat(n2_factorial(mn)) / (nfac * Rat(n2_factorial(m)));
            r[{EnvIndex::unit({l.gamma, mn}), EnvIndex::shift(m)}] += coeff;
        }
    }
    std::erase_if(r, [](const auto& e) { return e.second == 0; });
    return r;
}

} // namespace

TensorPP delta_plus(const EnvIndex& idx, const Params& p) {
    static std::map<std::pair<Rat, EnvIndex>, TensorPP> cache;
    auto key = std::make_pair(p.alpha, idx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    TensorPP r{{{EnvIndex{}, EnvIndex{}}, Rat(1)}};
    for (const auto& [l, k] : idx.J()) {
        TensorPP f = delta_plus_letter(l, p);
        for (int j = 0; j < k; ++j) r = tensor_mul(r, f);
    }
    // shift variables are primitive
    for (int i = 0; i < idx.m.a + idx.m.b; ++i) {
        N2 ei = (i < idx.m.a) ? N2{1, 0} : N2{0, 1};
        TensorPP f{{{EnvIndex::shift(ei), EnvIndex{}}, Rat(1)},
                   {{EnvIndex{}, EnvIndex::shift(ei)}, Rat(1)}};
        r = tensor_mul(r, f);
    }
    cache[key] = r;
    return r;
}

TensorPP delta_plus(const PlusElement& x, const Params& p) {
    TensorPP r;
    for (const auto& [idx, c] : x.terms())
        for (const auto& [pair, v] : delta_plus(idx, p)) {
            Rat cv = c * v;
            auto [it, ins] = r.try_emplace(pair, cv);
            if (!ins) it->second += cv;
        }
    std::erase_if(r, [](const auto& e) { return e.second == 0; });
    return r;
}

namespace {

PlusElement antipode_mono(const EnvIndex& idx, const Params& p) {
    static std::map<std::pair<Rat, EnvIndex>, PlusElement> cache;
    if (idx.is_one()) return PlusElement::one();
    auto key = std::make_pair(p.alpha, idx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    // S(x) = - sum_{x_(1) != x} S(x_(1)) x_(2); the 1 (x) x term gives -x
    PlusElement r;
    for (const auto& [pair, c] : delta_plus(idx, p)) {
        if (pair.first == idx) continue;
        r = r - (antipode_mono(pair.first, p) * PlusElement::monomial(pair.second)).scaled(c);
    }
    cache[key] = r;
    return r;
}

} // namespace

PlusElement antipode(const PlusElement& x, const Params& p) {
    PlusElement r;
    for (const auto& [idx, c] : x.terms()) r = r + antipode_mono(idx, p).scaled(c);
    return r;
}

} // namespace mihopf
