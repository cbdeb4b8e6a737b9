#include "mihopf/dynamics.hpp"
#include "mihopf/group.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <set>

using namespace mihopf;
using nlohmann::json;

namespace {

struct Config {
    std::string alpha = "1/4";
    int w1 = 1, w2 = 2;
    std::string cutoff_hom = "4";
    int cutoff_len = 8;

    Params params() const {
        Params p;
        p.alpha = parse_rat(alpha);
        p.w1 = w1;
        p.w2 = w2;
        p.cutoff_hom = parse_rat(cutoff_hom);
        p.cutoff_len = cutoff_len;
        return p;
    }

    json echo() const {
        return json{{"alpha", alpha},
                    {"weights", {w1, w2}},
                    {"cutoff_hom", cutoff_hom},
                    {"cutoff_len", cutoff_len}};
    }
};

N2 parse_n2(const std::string& s) {
    int a = 0, b = 0;
    if (std::sscanf(s.c_str(), "(%d,%d)", &a, &b) != 2 || a < 0 || b < 0)
        throw std::invalid_argument("bad derivative index: " + s);
    return {a, b};
}

// product of factors "1", "X^(m1,m2)", "Z[beta]", "Z[beta;(n1,n2)]", joined by '*'
EnvIndex parse_env_index(const std::string& s) {
    EnvIndex idx;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('*', pos);
        std::string f = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (f.empty() || f == "1") continue;
        if (f.rfind("X^", 0) == 0) {
            idx = idx.plus_m(parse_n2(f.substr(2)));
        } else if (f.rfind("Z[", 0) == 0 && f.back() == ']') {
            std::string body = f.substr(2, f.size() - 3);
            std::size_t semi = body.find(';');
            MultiIndex beta = parse_multi_index(semi == std::string::npos ? body : body.substr(0, semi));
            N2 n = semi == std::string::npos ? N2{0, 0} : parse_n2(body.substr(semi + 1));
            idx = idx.plus({beta, n}, 1);
        } else {
            throw std::invalid_argument("bad plus-algebra factor: " + f);
        }
    }
    return idx;
}

Path make_driver(const std::string& name, const Grid& g) {
    if (name == "const") return sample([](double) { return 1.0; }, g);
    if (name == "cos") return sample([](double x) { return std::cos(x); }, g);
    if (name == "poly") return sample([](double x) { return 1.0 + x * (1.0 - 0.5 * x); }, g);
    throw std::invalid_argument("unknown driver: " + name);
}

std::vector<MultiIndex> model_pool(int max_len) {
    std::vector<Letter> letters;
    for (int k = 0; k <= max_len; ++k) letters.push_back(Letter::K(k));
    for (N2 n : {N2{1, 0}, N2{2, 0}, N2{0, 1}}) letters.push_back(Letter::Nn(n));
    std::vector<MultiIndex> out;
    std::function<void(std::size_t, const MultiIndex&)> go = [&](std::size_t i,
                                                                 const MultiIndex& cur) {
        if (i == letters.size()) {
            if (is_model_index(cur)) out.push_back(cur);
            return;
        }
        for (int m = 0; cur.length() + m <= max_len; ++m)
            go(i + 1, m == 0 ? cur : cur + MultiIndex::unit(letters[i], m));
    };
    go(0, MultiIndex{});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EnvIndex> plus_pool(int max_len, const Params& p) {
    std::vector<EnvIndex> pool{EnvIndex{}, EnvIndex::shift({1, 0}), EnvIndex::shift({0, 1})};
    for (const MultiIndex& beta : model_pool(max_len)) {
        if (!(noise_homogeneity(beta) >= 0)) continue;
        Hom hb = homogeneity(beta, p);
        for (int n1 = 0; p.lt(Hom{0, n1 * p.w1}, hb); ++n1)
            for (int n2 = 0; p.lt(Hom{0, n1 * p.w1 + n2 * p.w2}, hb); ++n2)
                pool.push_back(EnvIndex::unit({beta, {n1, n2}}));
    }
    std::size_t singles = pool.size();
    for (std::size_t i = 1; i + 1 < std::min<std::size_t>(singles, 5); ++i)
        pool.push_back(pool[i] + pool[i + 1]);
    return pool;
}

template <class M>
void prune(M& m) {
    std::erase_if(m, [](const auto& e) { return e.second == 0; });
}

bool series_zero(const Series& s) {
    for (const auto& [g, c] : s.terms())
        if (c != 0) return false;
    return true;
}

struct Report {
    std::string pool;
    long checked = 0;
    std::vector<std::string> counterexamples;
};

Report check_comodule(int max_len, const Params& p) {
    Report r;
    r.pool = "model indices, length <= " + std::to_string(max_len);
    for (const auto& beta : model_pool(max_len)) {
        ++r.checked;
        std::map<std::tuple<EnvIndex, EnvIndex, MultiIndex>, Rat> lhs, rhs;
        for (const auto& [pair, c] : delta(beta, p)) {
            for (const auto& [pair2, c2] : delta(pair.second, p)) {
                Rat v = c * c2;
                lhs[{pair.first, pair2.first, pair2.second}] += v;
            }
            for (const auto& [pp, c2] : delta_plus(pair.first, p)) {
                Rat v = c * c2;
                rhs[{pp.first, pp.second, pair.second}] += v;
            }
        }
        prune(lhs);
        prune(rhs);
        if (lhs != rhs) r.counterexamples.push_back(beta.str());
    }
    return r;
}

Report check_coassoc(int max_len, const Params& p) {
    Report r;
    r.pool = "plus-algebra indexes over model indices of length <= " + std::to_string(max_len);
    for (const auto& idx : plus_pool(max_len, p)) {
        ++r.checked;
        std::map<std::tuple<EnvIndex, EnvIndex, EnvIndex>, Rat> lhs, rhs;
        for (const auto& [pair, c] : delta_plus(idx, p)) {
            for (const auto& [q, c2] : delta_plus(pair.first, p)) {
                Rat v = c * c2;
                lhs[{q.first, q.second, pair.second}] += v;
            }
            for (const auto& [q, c2] : delta_plus(pair.second, p)) {
                Rat v = c * c2;
                rhs[{pair.first, q.first, q.second}] += v;
            }
        }
        prune(lhs);
        prune(rhs);
        if (lhs != rhs) r.counterexamples.push_back(idx.str());
    }
    return r;
}

Report check_antipode(int max_len, const Params& p) {
    Report r;
    r.pool = "plus-algebra indexes over model indices of length <= " + std::to_string(max_len);
    for (const auto& idx : plus_pool(max_len, p)) {
        ++r.checked;
        PlusElement left, right;
        for (const auto& [pair, c] : delta_plus(idx, p)) {
            left = left + (antipode(PlusElement::monomial(pair.first), p) *
                           PlusElement::monomial(pair.second))
                              .scaled(c);
            right = right + (PlusElement::monomial(pair.first) *
                             antipode(PlusElement::monomial(pair.second), p))
                                .scaled(c);
        }
        PlusElement want = idx.is_one() ? PlusElement::one() : PlusElement{};
        if (!(left == want) || !(right == want)) r.counterexamples.push_back(idx.str());
    }
    return r;
}

Report check_intertwine_j(int max_len, const Params& p) {
    Report r;
    r.pool = "Lie pairs over model indices of length <= " + std::to_string(max_len);
    for (const auto& beta : model_pool(max_len)) {
        if (!(noise_homogeneity(beta) >= 0)) continue;
        Hom hb = homogeneity(beta, p);
        for (int n1 = 0; p.lt(Hom{0, n1 * p.w1}, hb); ++n1)
            for (int n2 = 0; p.lt(Hom{0, n1 * p.w1 + n2 * p.w2}, hb); ++n2) {
                N2 n{n1, n2};
                ++r.checked;
                TensorPP lhs = delta_plus(EnvIndex::unit({beta, n}), p);
                TensorPP rhs;
                for (const auto& [pair, c] : delta(beta, p)) {
                    PlusElement jn = j_map(n, pair.second, p).scaled(Rat(1, n2_factorial(n)));
                    for (const auto& [t, ct] : jn.terms()) {
                        Rat v = c * ct;
                        rhs[{pair.first, t}] += v;
                    }
                }
                for (int m1 = 0;; ++m1) {
                    bool row = false;
                    for (int m2 = 0;
                         p.lt(Hom{0, (n1 + m1) * p.w1 + (n2 + m2) * p.w2}, hb); ++m2) {
                        row = true;
                        N2 m{m1, m2};
                        Rat v = Rat(n2_factorial(n + m)) /
                                (Rat(n2_factorial(n)) * Rat(n2_factorial(m)));
                        rhs[{EnvIndex::unit({beta, n + m}), EnvIndex::shift(m)}] += v;
                    }
                    if (!row) break;
                }
                prune(lhs);
                prune(rhs);
                if (lhs != rhs) r.counterexamples.push_back(beta.str() + ";" + n2_str(n));
            }
    }
    return r;
}

Character cli_char_f(const Params& p) {
    return Character{Rat(1, 2),
                     Rat(-1, 3),
                     {{{MultiIndex{}, {0, 0}}, Rat(1, 3)},
                      {{ek(0), {0, 0}}, Rat(-1, 2)},
                      {{ek(1) + en({1, 0}), {1, 0}}, Rat(2, 5)}},
                     p};
}

Character cli_char_g(const Params& p) {
    return Character{Rat(-1),
                     Rat(1, 4),
                     {{{MultiIndex{}, {0, 0}}, Rat(1, 5)},
                      {{ek(0), {0, 0}}, Rat(1, 2)},
                      {{ek(0, 2), {0, 0}}, Rat(1)}},
                     p};
}

Series gamma_series(const Functional& f, const Series& s, const Params& p) {
    Series out;
    for (const auto& [g, c] : s.terms()) out = out + gamma(f, g, p).scaled(c);
    return out;
}

Report check_group_laws(int max_len, const Params& p) {
    Report r;
    r.pool = "two fixed characters on model indices of length <= " + std::to_string(max_len);
    Character f = cli_char_f(p), g = cli_char_g(p);
    Functional fg = convolve_fn(as_functional(f), as_functional(g), p);
    Functional finv = antipode_fn(as_functional(f), p);
    for (const auto& beta : model_pool(max_len)) {
        ++r.checked;
        Series lhs = gamma(fg, beta, p);
        // the coaction composes contravariantly: Gamma_{f*g} = Gamma_g Gamma_f
        Series rhs = gamma_series(as_functional(g), gamma(as_functional(f), beta, p), p);
        bool ok = series_zero(lhs - rhs);
        Series round = gamma_series(finv, gamma(as_functional(f), beta, p), p);
        if (!series_zero(round - Series::monomial(beta))) ok = false;
        if (!ok) r.counterexamples.push_back(beta.str());
    }
    return r;
}

Report check_composition(const Params& p0) {
    Params p = p0;
    p.cutoff_hom = Rat(2);
    p.cutoff_len = 6;
    Report r;
    r.pool = "two fixed characters, composed tilt read off pi-series";
    Character f = cli_char_f(p), g = cli_char_g(p);
    Rat hb1 = f.h1 + g.h1, hb2 = f.h2 + g.h2;
    std::map<LiePair, Rat> tilt;
    for (int n1 = 0; n1 <= 2; ++n1)
        for (int n2 = 0; n1 + 2 * n2 <= 2; ++n2) {
            N2 n{n1, n2};
            Series pibar = pi_series(f, n, p) + gamma_star(f, pi_series(g, n, p), p);
            for (const auto& [gm, c] : pibar.terms())
                if (noise_homogeneity(gm) >= 0) tilt[{gm, n}] += c;
        }
    prune(tilt);
    Character fbar{hb1, hb2, tilt, p};
    for (const auto& s :
         {Series::monomial(ek(0)), Series::monomial(ek(1)), Series::monomial(en({1, 0})),
          Series::monomial(ek(0) + en({1, 0}))}) {
        ++r.checked;
        Series lhs = gamma_star(fbar, s, p);
        Series rhs = gamma_star(f, gamma_star(g, s, p), p);
        if (!series_zero(lhs - rhs)) r.counterexamples.push_back(s.str());
    }
    return r;
}

Report check_exp_formula(const Params& p0) {
    Params p = p0;
    p.cutoff_hom = Rat(3, 2);
    p.cutoff_len = 6;
    Report r;
    r.pool = "three fixed characters on coordinate monomials";
    std::vector<Character> chars{cli_char_f(p), cli_char_g(p),
                                 Character{Rat(1, 2), Rat(-1, 3), {}, p}};
    std::vector<Series> inputs{Series::monomial(ek(0)),           Series::monomial(ek(1)),
                               Series::monomial(en({1, 0})),      Series::monomial(en({0, 1})),
                               Series::monomial(ek(0) + ek(1)),   Series::monomial(ek(1) + en({1, 0}))};
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (const auto& s : inputs) {
            ++r.checked;
            if (!series_zero(exp_formula(chars[i], s, p) - gamma_star(chars[i], s, p)))
                r.counterexamples.push_back("character " + std::to_string(i) + " on " + s.str());
        }
    return r;
}

Report check_translate(const Params& p) {
    Params q = p;
    q.cutoff_hom = Rat(1000000);
    q.cutoff_len = 1000000;
    Report r;
    r.pool = "random populated translation series of length <= 3";
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 4);
    std::vector<MultiIndex> cpool, spool = populated_rp2_pool(3);
    for (const auto& b : spool) {
        bool z1 = true;
        for (const auto& [l, m] : b.entries()) {
            (void)m;
            if (l.a != 1) z1 = false;
        }
        if (z1) cpool.push_back(b);
    }
    auto rnd = [&](const std::vector<MultiIndex>& pool) {
        Series s;
        for (const auto& g : pool) s.add_term(g, Rat(num(rng), den(rng)));
        return s;
    };
    Generator d0 = Generator::ZD(MultiIndex{}, {0, 0});
    for (int trial = 0; trial < 5; ++trial) {
        ++r.checked;
        TranslationMap c1(rnd(cpool)), c2(rnd(cpool));
        Series s1 = rnd(spool), s2 = rnd(spool);
        bool ok = series_zero(translate(c1, s1 * apply_generator(d0, s2, q), p) -
                              translate(c1, s1, p) * apply_generator(d0, translate(c1, s2, p), q));
        TranslationMap csum(c1.c + c2.c);
        if (!series_zero(translate(c1, translate(c2, s1, p), p) - translate(csum, s1, p)))
            ok = false;
        if (!ok) r.counterexamples.push_back("trial " + std::to_string(trial));
    }
    return r;
}

Report check_tra08(int max_nodes, const Params& p) {
    Report r;
    r.pool = "colored trees with <= " + std::to_string(max_nodes) + " nodes";
    const Tree dot1 = Tree::leaf(Tree::Noise1);
    TreeCombo v{{dot1, Rat(1, 2)}, {Tree::make({dot1}, Tree::Noise1), Rat(1, 3)}};
    r.counterexamples = verify_tra08(v, max_nodes, p);
    r.checked = static_cast<long>(colored_tree_pool(max_nodes).size());
    return r;
}

Report check_lemma_rp(const std::string& driver, double T, int N, const std::string& rule,
                      int max_edges, double tol) {
    Report r;
    r.pool = "populated indices with <= " + std::to_string(max_edges) + " edges, driver " + driver;
    Grid g{T, N};
    Quad q = rule == "trapezoid" ? Quad::Trapezoid : Quad::Simpson;
    Path xi = make_driver(driver, g);
    for (const MultiIndex& beta : populated_rp_pool(max_edges + 1)) {
        ++r.checked;
        double d = lemma_rp_defect(beta, xi, g, q);
        if (d > tol)
            r.counterexamples.push_back(beta.str() + " defect " + std::to_string(d));
    }
    return r;
}

json tensor_json(const std::string& op, const std::string& input, const Config& cfg,
                 const std::vector<std::tuple<std::string, std::string, std::string>>& terms) {
    json jt = json::array();
    for (const auto& [l, rgt, c] : terms) jt.push_back({{"left", l}, {"right", rgt}, {"coeff", c}});
    return json{{"op", op}, {"input", input}, {"config", cfg.echo()}, {"terms", jt}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-index Hopf-algebra kernel"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--alpha", cfg.alpha, "noise regularity, as a rational string");
    app.add_option("--w1", cfg.w1, "weight of the first direction");
    app.add_option("--w2", cfg.w2, "weight of the second direction");
    app.add_option("--cutoff-hom", cfg.cutoff_hom, "homogeneity cutoff for truncations");
    app.add_option("--cutoff-len", cfg.cutoff_len, "length cutoff for truncations");

    std::string arg_index, identity, driver = "cos", rule = "simpson", out_path;
    std::string h1 = "0", h2 = "0";
    std::vector<std::string> tilt_args;
    int max_len = 3, max_edges = 3, max_nodes = 3, max_nweight = 2, grid_n = 2000;
    double grid_t = 1.0, tol = 1e-10;

    auto* cd = app.add_subcommand("delta", "comodule map on a multi-index");
    cd->add_option("beta", arg_index, "multi-index, e.g. \"2e0+e1\"")->required();

    auto* cdp = app.add_subcommand("delta-plus", "coproduct on a plus-algebra monomial");
    cdp->add_option("index", arg_index, "e.g. \"Z[2e0+e1;(0,0)]*X^(1,0)\"")->required();

    auto* ca = app.add_subcommand("antipode", "antipode on a plus-algebra monomial");
    ca->add_option("index", arg_index, "plus-algebra monomial")->required();

    auto* cg = app.add_subcommand("gamma", "group action of a character on a multi-index");
    cg->add_option("beta", arg_index, "multi-index")->required();
    cg->add_option("--h1", h1, "shift, first component");
    cg->add_option("--h2", h2, "shift, second component");
    cg->add_option("--tilt", tilt_args, "tilt entry \"gamma;(n1,n2);value\"");

    auto* cv = app.add_subcommand("verify", "check an identity over a pool");
    cv->add_option("identity", identity, "identity name")->required();
    cv->add_option("--max-len", max_len, "multi-index length bound");
    cv->add_option("--max-edges", max_edges, "tree edge bound");
    cv->add_option("--max-nodes", max_nodes, "tree node bound");
    cv->add_option("--max-nweight", max_nweight, "decoration weight bound");
    cv->add_option("--driver", driver, "driver: const, cos, poly");
    cv->add_option("--T", grid_t, "time horizon");
    cv->add_option("--N", grid_n, "grid intervals");
    cv->add_option("--rule", rule, "quadrature: trapezoid, simpson");
    cv->add_option("--tol", tol, "numerical tolerance");

    auto* cm = app.add_subcommand("model", "sample the multi-index model to CSV");
    cm->add_option("--driver", driver, "driver: const, cos, poly");
    cm->add_option("--T", grid_t, "time horizon");
    cm->add_option("--N", grid_n, "grid intervals");
    cm->add_option("--rule", rule, "quadrature: trapezoid, simpson");
    cm->add_option("--max-edges", max_edges, "tree edge bound");
    cm->add_option("--out", out_path, "CSV output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        Params p = cfg.params();

        if (cd->parsed()) {
            MultiIndex beta = parse_multi_index(arg_index);
            std::vector<std::tuple<std::string, std::string, std::string>> terms;
            for (const auto& [pair, c] : delta(beta, p))
                terms.push_back({pair.first.str(), pair.second.str(), rat_str(c)});
            std::cout << tensor_json("delta", beta.str(), cfg, terms).dump(2) << "\n";
            return 0;
        }
        if (cdp->parsed()) {
            EnvIndex idx = parse_env_index(arg_index);
            std::vector<std::tuple<std::string, std::string, std::string>> terms;
            for (const auto& [pair, c] : delta_plus(idx, p))
                terms.push_back({pair.first.str(), pair.second.str(), rat_str(c)});
            std::cout << tensor_json("delta-plus", idx.str(), cfg, terms).dump(2) << "\n";
            return 0;
        }
        if (ca->parsed()) {
            EnvIndex idx = parse_env_index(arg_index);
            PlusElement s = antipode(PlusElement::monomial(idx), p);
            json jt = json::array();
            for (const auto& [i, c] : s.terms()) jt.push_back({{"index", i.str()}, {"coeff", rat_str(c)}});
            std::cout << json{{"op", "antipode"}, {"input", idx.str()}, {"config", cfg.echo()},
                              {"terms", jt}}
                             .dump(2)
                      << "\n";
            return 0;
        }
        if (cg->parsed()) {
            MultiIndex beta = parse_multi_index(arg_index);
            std::map<LiePair, Rat> tilt;
            for (const auto& t : tilt_args) {
                std::size_t s1 = t.find(';');
                std::size_t s2 = t.find(';', s1 == std::string::npos ? s1 : s1 + 1);
                if (s1 == std::string::npos || s2 == std::string::npos)
                    throw std::invalid_argument("bad tilt entry: " + t);
                MultiIndex g = parse_multi_index(t.substr(0, s1));
                N2 n = parse_n2(t.substr(s1 + 1, s2 - s1 - 1));
                tilt[{g, n}] += parse_rat(t.substr(s2 + 1));
            }
            Character f{parse_rat(h1), parse_rat(h2), tilt, p};
            Series s = gamma(f, beta, p);
            json jt = json::array();
            for (const auto& [g, c] : s.terms())
                jt.push_back({{"index", g.str()}, {"coeff", rat_str(c)}});
            std::cout << json{{"op", "gamma"}, {"input", beta.str()}, {"config", cfg.echo()},
                              {"terms", jt}}
                             .dump(2)
                      << "\n";
            return 0;
        }
        if (cm->parsed()) {
            Grid g{grid_t, grid_n};
            Quad q = rule == "trapezoid" ? Quad::Trapezoid : Quad::Simpson;
            Path xi = make_driver(driver, g);
            std::vector<MultiIndex> pool = populated_rp_pool(max_edges + 1);
            std::vector<Path> paths;
            double defect = 0.0;
            for (const auto& beta : pool) {
                paths.push_back(model_mi(beta, xi, g, q, Mode::RP));
                defect = std::max(defect, lemma_rp_defect(beta, xi, g, q));
            }
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) throw std::invalid_argument("cannot open " + out_path);
                os = &file;
            }
            *os << "x";
            for (const auto& beta : pool) *os << "," << beta.str();
            *os << "\n";
            char buf[64];
            for (int j = 0; j <= g.N; ++j) {
                std::snprintf(buf, sizeof buf, "%.12g", g.x(j));
                *os << buf;
                for (const auto& path : paths) {
                    std::snprintf(buf, sizeof buf, ",%.12g", path[static_cast<std::size_t>(j)]);
                    *os << buf;
                }
                *os << "\n";
            }
            if (!out_path.empty())
                std::cout << json{{"op", "model"},         {"driver", driver},
                                  {"T", grid_t},           {"N", grid_n},
                                  {"rule", rule},          {"max_edges", max_edges},
                                  {"config", cfg.echo()},  {"max_defect", defect},
                                  {"paths", out_path}}
                                 .dump(2)
                          << "\n";
            return 0;
        }

        // verify
        Report r;
        if (identity == "comodule") r = check_comodule(max_len, p);
        else if (identity == "coassoc") r = check_coassoc(max_len, p);
        else if (identity == "antipode") r = check_antipode(max_len, p);
        else if (identity == "intertwine-J") r = check_intertwine_j(max_len, p);
        else if (identity == "group-laws") r = check_group_laws(max_len, p);
        else if (identity == "composition") r = check_composition(p);
        else if (identity == "exp-formula") r = check_exp_formula(p);
        else if (identity == "prelie-rp") {
            r.pool = "tree pairs with <= " + std::to_string(max_edges) + " edges";
            r.counterexamples = verify_prelie_rp(max_edges);
            auto n = rp_tree_pool(max_edges - 1).size();
            r.checked = static_cast<long>(n * n);
        } else if (identity == "hopf-rp") {
            r.pool = "populated indices with <= " + std::to_string(max_edges) + " edges";
            r.counterexamples = verify_hopf_rp(max_edges, p);
            r.checked = static_cast<long>(populated_rp_pool(max_edges + 1).size());
        } else if (identity == "prelie-gpam") {
            r.pool = "decorated tree pairs with <= " + std::to_string(max_edges) + " edges";
            r.counterexamples = verify_prelie_gpam(max_nweight, max_edges);
            r.checked = static_cast<long>(gpam_tree_pool(max_edges + 1, max_nweight).size());
        } else if (identity == "sharp") {
            r.pool = "decorated trees with <= " + std::to_string(max_edges) + " edges";
            r.counterexamples = verify_sharp(max_edges);
            r.checked = static_cast<long>(gpam_tree_pool(max_edges + 3, 2).size());
        } else if (identity == "gpam-fw01") {
            r.pool = "model indices of length <= " + std::to_string(max_len);
            r.counterexamples = verify_fw01(max_len, p);
            r.checked = static_cast<long>(populated_gpam_pool(max_len, 2).size()) + 4;
        } else if (identity == "gpam-gp03") {
            r.pool = "plus letters over model indices of length <= " + std::to_string(max_len);
            r.counterexamples = verify_gp03(max_len, p);
            r.checked = static_cast<long>(populated_gpam_pool(max_len, 2).size());
        } else if (identity == "faa-di-bruno") {
            r.pool = "l <= 2, |m| <= " + std::to_string(max_nweight + 1);
            r.counterexamples = verify_faa_di_bruno(2, max_nweight + 1, p);
            r.checked = 3 * (max_nweight + 2);
        } else if (identity == "translate") r = check_translate(p);
        else if (identity == "tra08") r = check_tra08(max_nodes, p);
        else if (identity == "lemma-rp-numeric")
            r = check_lemma_rp(driver, grid_t, grid_n, rule, max_edges, tol);
        else {
            std::cerr << "unknown identity: " << identity << "\n";
            return 2;
        }

        json jc = json::array();
        for (const auto& c : r.counterexamples) jc.push_back(c);
        std::cout << json{{"identity", identity},  {"pool", r.pool},
                          {"checked", r.checked},  {"config", cfg.echo()},
                          {"counterexamples", jc}}
                         .dump(2)
                  << "\n";
        return r.counterexamples.empty() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
