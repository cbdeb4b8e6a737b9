#include "mihopf/envelope.hpp"

#include <algorithm>
#include <sstream>

namespace mihopf {

std::string LiePair::str() const { return "(" + gamma.str() + "," + n2_str(n) + ")"; }

EnvIndex::EnvIndex(std::vector<Entry> entries, N2 mm) : m(mm), J_(std::move(entries)) {
    std::sort(J_.begin(), J_.end());
    std::vector<Entry> merged;
    for (const auto& [l, k] : J_) {
        if (!merged.empty() && merged.back().first == l) merged.back().second += k;
        else merged.push_back({l, k});
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
    for (const auto& [l, k] : merged)
        if (k < 0) throw std::invalid_argument("negative multiplicity in envelope index");
    J_ = std::move(merged);
}

EnvIndex EnvIndex::unit(LiePair l, int mult) { return EnvIndex({{std::move(l), mult}}, {0, 0}); }

EnvIndex EnvIndex::shift(N2 m) { return EnvIndex({}, m); }

int EnvIndex::J_at(const LiePair& l) const {
    for (const auto& [x, k] : J_)
        if (x == l) return k;
    return 0;
}

int EnvIndex::J_length() const {
    int n = 0;
    for (const auto& [l, k] : J_) n += k;
    return n;
}

EnvIndex EnvIndex::plus(const LiePair& l, int delta) const {
    std::vector<Entry> w = J_;
    bool found = false;
    for (auto& e : w)
        if (e.first == l) { e.second += delta; found = true; break; }
    if (!found) w.push_back({l, delta});
    return EnvIndex(std::move(w), m);
}

EnvIndex EnvIndex::plus_m(N2 dm) const { return EnvIndex(J_, m + dm); }

EnvIndex EnvIndex::operator+(const EnvIndex& o) const {
    std::vector<Entry> w = J_;
    w.insert(w.end(), o.J_.begin(), o.J_.end());
    return EnvIndex(std::move(w), m + o.m);
}

std::string EnvIndex::str() const {
    if (is_one()) return "1";
    std::ostringstream out;
    out << "D(";
    bool first = true;
    for (const auto& [l, k] : J_) {
        if (!first) out << "+";
        first = false;
        if (k != 1) out << k;
        out << "e" << l.str();
    }
    if (J_.empty()) out << "0";
    out << ";" << n2_str(m) << ")";
    return out.str();
}

EnvElement EnvElement::basis(const EnvIndex& idx, const Rat& c) {
    EnvElement e;
    if (c != 0) e.t_[idx] = c;
    return e;
}

Rat EnvElement::coeff(const EnvIndex& idx) const {
    auto it = t_.find(idx);
    return it == t_.end() ? Rat(0) : it->second;
}

void EnvElement::add_term(const EnvIndex& idx, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

EnvElement EnvElement::operator+(const EnvElement& o) const {
    EnvElement r = *this;
    for (const auto& [i, c] : o.t_) r.add_term(i, c);
    return r;
}

EnvElement EnvElement::operator-(const EnvElement& o) const {
    EnvElement r = *this;
    for (const auto& [i, c] : o.t_) r.add_term(i, -c);
    return r;
}

EnvElement EnvElement::scaled(const Rat& c) const {
    EnvElement r;
    if (c == 0) return r;
    for (const auto& [i, x] : t_) r.t_[i] = x * c;
    return r;
}

std::string EnvElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : t_) {
        if (!first) out << " + ";
        first = false;
        out << rat_str(c) << "*" << i.str();
    }
    return out.str();
}

namespace {

// Basis-level insertion without the admissibility check; the product
// algorithm only ever inserts pairs whose admissibility is inherited.
EnvElement insert_basis(const MultiIndex& gamma, const EnvElement& U, N2 n) {
    EnvElement r;
    LiePair l{gamma, n};
    for (const auto& [idx, c] : U.terms())
        r.add_term(idx.plus(l, 1), c * Rat(idx.J_at(l) + 1));
    return r;
}

} // namespace

EnvElement insert(const MultiIndex& gamma, const EnvElement& U, N2 n, const Params& p) {
    if (!in_lie_algebra(gamma, n, Mode::FULL, p)) throw InadmissibleInsert{};
    return insert_basis(gamma, U, n);
}

EnvTensor cop(const EnvElement& U) {
    EnvTensor r;
    for (const auto& [idx, c] : U.terms()) {
        // enumerate all componentwise splits of J, then of m
        std::vector<std::pair<EnvIndex, EnvIndex>> splits{{EnvIndex{}, EnvIndex{}}};
        for (const auto& [l, k] : idx.J()) {
            std::vector<std::pair<EnvIndex, EnvIndex>> next;
            for (const auto& [a, b] : splits)
                for (int j = 0; j <= k; ++j)
                    next.push_back({j ? a.plus(l, j) : a, (k - j) ? b.plus(l, k - j) : b});
            splits = std::move(next);
        }
        for (const auto& [a, b] : splits)
            for (int m1 = 0; m1 <= idx.m.a; ++m1)
                for (int m2 = 0; m2 <= idx.m.b; ++m2) {
                    EnvIndex left = a.plus_m({m1, m2});
                    EnvIndex right = b.plus_m({idx.m.a - m1, idx.m.b - m2});
                    auto [it, inserted] = r.try_emplace({left, right}, c);
                    if (!inserted) it->second += c;
                }
    }
    std::erase_if(r, [](const auto& e) { return e.second == 0; });
    return r;
}

Series rho_apply(const EnvElement& U, const Series& s, const Params& p) {
    Series out;
    for (const auto& [idx, c] : U.terms()) {
        // innermost: all the D^(n) factors (they commute among themselves)
        Series cur = s;
        Rat norm = c;
        MultiIndex mult_part;
        for (const auto& [l, k] : idx.J()) {
            Generator dn = Generator::ZD({}, l.n);
            for (int j = 0; j < k; ++j) {
                cur = apply_generator(dn, cur, p);
                mult_part = mult_part + l.gamma;
            }
            norm /= Rat(factorial(k));
        }
        // middle: (1/m!) del_1^{m1} del_2^{m2}
        for (int j = 0; j < idx.m.a; ++j) cur = apply_generator(Generator::Del(1), cur, p);
        for (int j = 0; j < idx.m.b; ++j) cur = apply_generator(Generator::Del(2), cur, p);
        norm /= Rat(n2_factorial(idx.m));
        // outermost: the multiplications
        out = out + (cur * Series::monomial(mult_part)).scaled(norm);
    }
    return out;
}

Series iota(N2 n, const EnvElement& U) {
    Series r;
    for (const auto& [idx, c] : U.terms()) {
        if (!idx.m.is_zero() || idx.J_length() != 1) continue;
        const auto& [l, k] = idx.J().front();
        (void)k;
        if (l.n == n) r.add_term(l.gamma, c);
    }
    return r;
}

Rat epsilon(N2 n, const EnvElement& U) { return U.coeff(EnvIndex::shift(n)); }

namespace {

// U * (z^gamma D^(n)) in the basis: move the multiplication out through U
// with the coproduct, U mult(z^gamma) = sum mult(rho(U_(1)) z^gamma) U_(2).
EnvElement rmul_zd(const EnvElement& U, const LiePair& l, const Params& p) {
    EnvElement r;
    for (const auto& [pair, c] : cop(U)) {
        Series img = rho_apply(EnvElement::basis(pair.first), Series::monomial(l.gamma), p);
        for (const auto& [beta, x] : img.terms())
            r = r + insert_basis(beta, EnvElement::basis(pair.second), l.n).scaled(c * x);
    }
    return r;
}

// D_(J,m) * del_i: commute del_i leftward through the innermost D^(n)'s.
EnvElement rmul_del(const EnvIndex& idx, int i, const Params&) {
    N2 ei = (i == 1) ? N2{1, 0} : N2{0, 1};
    EnvElement r = EnvElement::basis(idx.plus_m(ei), Rat((i == 1 ? idx.m.a : idx.m.b) + 1));
    for (const auto& [l, k] : idx.J()) {
        int ni = (i == 1) ? l.n.a : l.n.b;
        if (ni == 0) continue;
        // [D^(n), del_i] = n_i D^(n - e_i) on one of the k identical factors
        LiePair lowered{l.gamma, l.n - ei};
        EnvIndex moved = idx.plus(l, -1).plus(lowered, 1);
        r.add_term(moved, Rat(ni) * Rat(moved.J_at(lowered)));
    }
    return r;
}

EnvElement product_basis(const EnvIndex& a, const EnvIndex& b, const Params& p);

EnvElement product(const EnvElement& A, const EnvElement& B, const Params& p) {
    EnvElement r;
    for (const auto& [ia, ca] : A.terms())
        for (const auto& [ib, cb] : B.terms())
            r = r + product_basis(ia, ib, p).scaled(ca * cb);
    return r;
}

// Right-peeling recursion; terminates because every recursive call strictly
// shortens the right factor's word length.
EnvElement product_basis(const EnvIndex& a, const EnvIndex& b, const Params& p) {
    static std::map<std::pair<EnvIndex, EnvIndex>, EnvElement> cache;
    if (b.is_one()) return EnvElement::basis(a);
    if (a.is_one()) return EnvElement::basis(b);
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;

    EnvElement result;
    if (b.J().empty()) {
        // pure shift word: peel one del_i via the binomial product rule
        int i = b.m.a > 0 ? 1 : 2;
        N2 ei = (i == 1) ? N2{1, 0} : N2{0, 1};
        int mi = (i == 1) ? b.m.a : b.m.b;
        EnvElement shorter = product_basis(a, EnvIndex::shift(b.m - ei), p);
        for (const auto& [idx, c] : shorter.terms())
            result = result + rmul_del(idx, i, p).scaled(c / Rat(mi));
    } else {
        // peel a Lie letter l: with V = D_(J - e_l, m),
        //   J(l) D_(J,m) = V (z^gamma D^(n)) - C,   C supported on shorter words
        LiePair l = b.J().front().first;
        int jl = b.J().front().second;
        EnvIndex v = b.plus(l, -1);
        EnvElement correction = rmul_zd(EnvElement::basis(v), l, p);
        correction.add_term(b, -Rat(jl));
        EnvElement av = product_basis(a, v, p);
        result = (rmul_zd(av, l, p) - product(EnvElement::basis(a), correction, p))
                     .scaled(Rat(1) / Rat(jl));
    }
    cache[{a, b}] = result;
    return result;
}

} // namespace

EnvElement envelope_product(const EnvElement& U1, const EnvElement& U2, const Params& p) {
    return product(U1, U2, p);
}

Bigrade bigrade_word(const EnvIndex& idx, const Params& p) {
    Bigrade r{0, static_cast<long long>(p.nweight(idx.m))};
    for (const auto& [l, k] : idx.J()) {
        Bigrade g = bigrade(Generator::ZD(l.gamma, l.n), p);
        r.first += g.first * k;
        r.second += g.second * k;
    }
    return r;
}

Hom grade_word(const EnvIndex& idx, const Params& p) {
    Hom r{0, static_cast<long long>(p.nweight(idx.m))};
    for (const auto& [l, k] : idx.J()) {
        Hom h = homogeneity(l.gamma, p);
        r.ac += h.ac * k;
        r.ip += (h.ip - p.nweight(l.n)) * k;
    }
    return r;
}

} // namespace mihopf
