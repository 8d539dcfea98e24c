#include "greenring/hopf.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace greenring {

// ---------------------------------------------------------------- elements

Vec HopfAlgebra::basis_vector(std::size_t i) const {
    Vec v(dim);
    v.at(i) = 1;
    return v;
}

Vec HopfAlgebra::multiply(const Vec& a, const Vec& b) const {
    Vec r(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Rational c = a[i] * b[j];
            for (const auto& [k, v] : mult[i * dim + j]) r[k].add_mul(c, v);
        }
    }
    return r;
}

Vec HopfAlgebra::apply_antipode(const Vec& a) const {
    Vec r(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        if (a[j].is_zero()) continue;
        for (std::size_t i = 0; i < dim; ++i)
            if (!antipode(i, j).is_zero()) r[i].add_mul(a[j], antipode(i, j));
    }
    return r;
}

Rational HopfAlgebra::apply_counit(const Vec& a) const {
    Rational r;
    for (std::size_t i = 0; i < dim; ++i)
        if (!a[i].is_zero()) r.add_mul(a[i], counit[i]);
    return r;
}

Vec HopfAlgebra::coproduct(const Vec& a) const {
    Vec r(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& t : comult[i]) r[t.left * dim + t.right].add_mul(a[i], t.coef);
    }
    return r;
}

Vec HopfAlgebra::word_element(const Word& w) const {
    Vec r = unit;
    for (std::size_t g : w) r = multiply(r, basis_vector(generator_basis.at(g)));
    return r;
}

std::size_t HopfAlgebra::generator_id(const std::string& g) const {
    for (std::size_t k = 0; k < generators.size(); ++k)
        if (generators[k] == g) return k;
    throw std::invalid_argument("unknown generator " + g + " in " + name);
}

Vec HopfAlgebra::element(const std::string& word) const {
    Word w;
    for (char ch : word) w.push_back(generator_id(std::string(1, ch)));
    return word_element(w);
}

Matrix HopfAlgebra::left_mult(const Vec& a) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec c = multiply(a, basis_vector(j));
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = c[i];
    }
    return m;
}

Matrix HopfAlgebra::right_mult(const Vec& a) const {
    Matrix m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec c = multiply(basis_vector(j), a);
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = c[i];
    }
    return m;
}

std::string HopfAlgebra::format(const Vec& a) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        Rational c = a[i];
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        if (c.sign() < 0) c = -c;
        if (!c.is_one()) os << c << "*";
        os << basis_labels[i];
        first = false;
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------- rewriting

Combination normal_form(const Presentation& p, Combination c) {
    std::map<Word, Rational> done;
    std::vector<std::pair<Rational, Word>> work(c.begin(), c.end());
    while (!work.empty()) {
        auto [coef, w] = std::move(work.back());
        work.pop_back();
        if (coef.is_zero()) continue;
        std::size_t pos = w.size();
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k] >= w[k + 1]) {
                pos = k;
                break;
            }
        if (pos == w.size()) {
            done[w] += coef;
            continue;
        }
        auto it = p.rules.find({w[pos], w[pos + 1]});
        if (it == p.rules.end())
            throw std::logic_error("no rewrite rule for pair in " + p.name);
        for (const auto& [rc, rw] : it->second) {
            Word nw(w.begin(), w.begin() + std::ptrdiff_t(pos));
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + std::ptrdiff_t(pos + 2), w.end());
            work.emplace_back(coef * rc, std::move(nw));
        }
    }
    Combination out;
    for (auto& [w, v] : done)
        if (!v.is_zero()) out.emplace_back(v, w);
    return out;
}

namespace {

std::string word_string(const std::vector<std::string>& gens, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t g : w) s += gens[g];
    return s;
}

std::string combination_string(const std::vector<std::string>& gens, const Combination& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [coef, w] : c) {
        Rational v = coef;
        if (!first) os << (v.sign() < 0 ? "-" : "+");
        else if (v.sign() < 0) os << "-";
        if (v.sign() < 0) v = -v;
        if (!v.is_one()) os << v;
        if (!v.is_one() && w.empty()) continue;
        os << word_string(gens, w);
        first = false;
    }
    return os.str();
}

Combination term(const Rational& c, Word w) { return Combination{{c, std::move(w)}}; }

// Shared shape of the three 16-dimensional algebras: generators x, g, y, h.
Presentation sixteen(const std::string& name) {
    enum { X = 0, G = 1, Y = 2, H = 3 };
    Presentation p;
    p.name = name;
    p.generators = {"x", "g", "y", "h"};
    p.grouplike = {false, true, false, true};
    p.rules[{X, X}] = {};
    p.rules[{Y, Y}] = {};
    p.rules[{G, G}] = term(1, {});
    p.rules[{H, H}] = term(1, {});
    p.rules[{H, G}] = term(1, {G, H});
    p.rules[{G, X}] = term(-1, {X, G});
    p.rules[{H, Y}] = term(-1, {Y, H});
    if (name == "mabar") {
        p.rules[{Y, X}] = term(-1, {X, Y});
        p.rules[{Y, G}] = term(-1, {G, Y});
        p.rules[{H, X}] = term(-1, {X, H});
    } else if (name == "HH") {
        p.rules[{Y, X}] = term(1, {X, Y});
        p.rules[{Y, G}] = term(1, {G, Y});
        p.rules[{H, X}] = term(1, {X, H});
    } else if (name == "DH4") {
        p.rules[{Y, X}] = Combination{{-1, {X, Y}}, {1, {}}, {-1, {G, H}}};
        p.rules[{Y, G}] = term(-1, {G, Y});
        p.rules[{H, X}] = term(-1, {X, H});
    } else {
        throw std::invalid_argument("unknown algebra " + name);
    }
    p.coproduct = {
        {{1, {X}, {}}, {1, {G}, {X}}},
        {{1, {G}, {G}}},
        {{1, {Y}, {}}, {1, {H}, {Y}}},
        {{1, {H}, {H}}},
    };
    p.counit = {0, 1, 0, 1};
    p.antipode = {term(-1, {G, X}), term(1, {G}), term(-1, {H, Y}), term(1, {H})};
    return p;
}

}  // namespace

Presentation presentation(const std::string& name) {
    if (name == "mabar" || name == "HH" || name == "DH4") return sixteen(name);
    if (name == "H4") {
        enum { B = 0, A = 1 };
        Presentation p;
        p.name = "H4";
        p.generators = {"b", "a"};
        p.grouplike = {false, true};
        p.rules[{A, A}] = term(1, {});
        p.rules[{B, B}] = {};
        p.rules[{A, B}] = term(-1, {B, A});
        p.coproduct = {{{1, {B}, {}}, {1, {A}, {B}}}, {{1, {A}, {A}}}};
        p.counit = {0, 1};
        // S(b) = -ab = ba
        p.antipode = {term(-1, {A, B}), term(1, {A})};
        return p;
    }
    if (name == "Z2") {
        Presentation p;
        p.name = "Z2";
        p.generators = {"g"};
        p.grouplike = {true};
        p.rules[{0, 0}] = term(1, {});
        p.coproduct = {{{1, {0}, {0}}}};
        p.counit = {1};
        p.antipode = {term(1, {0})};
        return p;
    }
    throw std::invalid_argument("unknown algebra " + name);
}

AlgebraPtr build_from_presentation(const Presentation& p) {
    auto h = std::make_shared<HopfAlgebra>();
    const std::size_t n = p.generators.size();
    h->name = p.name;
    h->dim = std::size_t(1) << n;
    h->generators = p.generators;
    h->grouplike = p.grouplike;
    const std::size_t dim = h->dim;

    auto index_of = [n](const Word& w) {
        std::size_t idx = 0;
        for (std::size_t g : w) idx |= std::size_t(1) << (n - 1 - g);
        return idx;
    };
    h->basis_words.resize(dim);
    h->basis_labels.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Word w;
        for (std::size_t g = 0; g < n; ++g)
            if (i & (std::size_t(1) << (n - 1 - g))) w.push_back(g);
        h->basis_labels[i] = word_string(p.generators, w);
        h->basis_words[i] = std::move(w);
    }
    for (std::size_t g = 0; g < n; ++g) h->generator_basis.push_back(index_of({g}));

    auto to_vec = [&](const Combination& c) {
        Vec v(dim);
        for (const auto& [coef, w] : c) v[index_of(w)] += coef;
        return v;
    };

    h->mult.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Word w = h->basis_words[i];
            w.insert(w.end(), h->basis_words[j].begin(), h->basis_words[j].end());
            SparseVec sv;
            for (const auto& [coef, nw] : normal_form(p, term(1, w))) sv.emplace_back(index_of(nw), coef);
            std::sort(sv.begin(), sv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            h->mult[i * dim + j] = std::move(sv);
        }
    h->unit = h->basis_vector(0);

    for (const auto& [rule, rhs] : p.rules) {
        Relation r;
        r.lhs = {rule.first, rule.second};
        r.rhs = rhs;
        r.name = word_string(p.generators, r.lhs) + "=" + combination_string(p.generators, rhs);
        h->relations.push_back(std::move(r));
    }

    // generator coproducts as (dim*dim) vectors
    std::vector<Vec> gen_delta(n, Vec(dim * dim));
    for (std::size_t g = 0; g < n; ++g)
        for (const auto& [coef, l, r] : p.coproduct[g]) {
            Vec lv = to_vec(normal_form(p, term(1, l)));
            Vec rv = to_vec(normal_form(p, term(1, r)));
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t b = 0; b < dim; ++b)
                    if (!lv[a].is_zero() && !rv[b].is_zero()) gen_delta[g][a * dim + b].add_mul(coef, lv[a] * rv[b]);
        }
    auto tensor_mul = [&](const Vec& u, const Vec& v) {
        Vec r(dim * dim);
        for (std::size_t a = 0; a < dim * dim; ++a) {
            if (u[a].is_zero()) continue;
            for (std::size_t b = 0; b < dim * dim; ++b) {
                if (v[b].is_zero()) continue;
                Rational c = u[a] * v[b];
                for (const auto& [k1, c1] : h->mult[(a / dim) * dim + b / dim])
                    for (const auto& [k2, c2] : h->mult[(a % dim) * dim + b % dim]) r[k1 * dim + k2].add_mul(c, c1 * c2);
            }
        }
        return r;
    };
    h->comult.resize(dim);
    h->counit.resize(dim);
    h->antipode = Matrix(dim, dim);
    std::vector<Vec> gen_s(n);
    for (std::size_t g = 0; g < n; ++g) gen_s[g] = to_vec(normal_form(p, p.antipode[g]));
    for (std::size_t i = 0; i < dim; ++i) {
        Vec d(dim * dim);
        d[0] = 1;
        Rational e = 1;
        Vec s = h->unit;
        for (std::size_t g : h->basis_words[i]) {
            d = tensor_mul(d, gen_delta[g]);
            e *= p.counit[g];
            s = h->multiply(gen_s[g], s);
        }
        for (std::size_t k = 0; k < dim * dim; ++k)
            if (!d[k].is_zero()) h->comult[i].push_back({k / dim, k % dim, d[k]});
        h->counit[i] = e;
        for (std::size_t k = 0; k < dim; ++k) h->antipode(k, i) = s[k];
    }
    return h;
}

AlgebraPtr build_algebra(const std::string& name) {
    if (name == "H4xH4") {
        auto h4 = build_algebra("H4");
        return tensor_algebra(h4, h4, "H4xH4");
    }
    return build_from_presentation(presentation(name));
}

AlgebraPtr tensor_algebra(const AlgebraPtr& A, const AlgebraPtr& B, const std::string& name) {
    auto h = std::make_shared<HopfAlgebra>();
    const std::size_t dA = A->dim, dB = B->dim, nA = A->generators.size();
    h->name = name.empty() ? A->name + "x" + B->name : name;
    h->dim = dA * dB;
    const std::size_t dim = h->dim;
    bool clash = false;
    for (const auto& a : A->generators)
        for (const auto& b : B->generators) clash |= a == b;
    for (const auto& g : A->generators) h->generators.push_back(clash ? g + "1" : g);
    for (const auto& g : B->generators) h->generators.push_back(clash ? g + "2" : g);
    h->grouplike = A->grouplike;
    h->grouplike.insert(h->grouplike.end(), B->grouplike.begin(), B->grouplike.end());
    h->words_valid = A->words_valid && B->words_valid;
    h->basis_labels.resize(dim);
    h->basis_words.resize(dim);
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t j = 0; j < dB; ++j) {
            h->basis_labels[i * dB + j] = A->basis_labels[i] + "⊗" + B->basis_labels[j];
            Word w = A->basis_words[i];
            for (std::size_t g : B->basis_words[j]) w.push_back(g + nA);
            h->basis_words[i * dB + j] = std::move(w);
        }
    for (std::size_t g : A->generator_basis) h->generator_basis.push_back(g * dB);
    for (std::size_t g : B->generator_basis) h->generator_basis.push_back(g);

    h->mult.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            SparseVec sv;
            for (const auto& [ka, ca] : A->mult[(i / dB) * dA + j / dB])
                for (const auto& [kb, cb] : B->mult[(i % dB) * dB + j % dB]) sv.emplace_back(ka * dB + kb, ca * cb);
            std::sort(sv.begin(), sv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            h->mult[i * dim + j] = std::move(sv);
        }
    h->unit = h->basis_vector(0);
    h->comult.resize(dim);
    h->counit.resize(dim);
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t j = 0; j < dB; ++j) {
            for (const auto& ta : A->comult[i])
                for (const auto& tb : B->comult[j])
                    h->comult[i * dB + j].push_back({ta.left * dB + tb.left, ta.right * dB + tb.right, ta.coef * tb.coef});
            h->counit[i * dB + j] = A->counit[i] * B->counit[j];
        }
    h->antipode = kronecker(A->antipode, B->antipode);

    auto shift = [nA](Combination c) {
        for (auto& [coef, w] : c)
            for (auto& g : w) g += nA;
        return c;
    };
    for (const auto& r : A->relations) h->relations.push_back(r);
    for (const auto& r : B->relations) {
        Relation s = r;
        for (auto& g : s.lhs) g += nA;
        s.rhs = shift(s.rhs);
        h->relations.push_back(s);
    }
    for (auto& r : h->relations)
        r.name = word_string(h->generators, r.lhs) + "=" + combination_string(h->generators, r.rhs);
    for (std::size_t a = 0; a < nA; ++a)
        for (std::size_t b = 0; b < B->generators.size(); ++b) {
            Relation r;
            r.lhs = {b + nA, a};
            r.rhs = term(1, {a, b + nA});
            r.name = word_string(h->generators, r.lhs) + "=" + combination_string(h->generators, r.rhs);
            h->relations.push_back(std::move(r));
        }
    return h;
}

AlgebraPtr with_antipode(const AlgebraPtr& h, const Matrix& s) {
    auto c = std::make_shared<HopfAlgebra>(*h);
    c->antipode = s;
    return c;
}

// ---------------------------------------------------------------- axioms

bool CheckReport::all() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

bool CheckReport::passed(const std::string& name) const {
    for (const auto& c : items)
        if (c.name == name) return c.pass;
    return false;
}

namespace {

Vec tensor_product_mul(const HopfAlgebra& h, const Vec& u, const Vec& v) {
    const std::size_t dim = h.dim;
    Vec r(dim * dim);
    for (std::size_t a = 0; a < dim * dim; ++a) {
        if (u[a].is_zero()) continue;
        for (std::size_t b = 0; b < dim * dim; ++b) {
            if (v[b].is_zero()) continue;
            Rational c = u[a] * v[b];
            for (const auto& [k1, c1] : h.mult[(a / dim) * dim + b / dim])
                for (const auto& [k2, c2] : h.mult[(a % dim) * dim + b % dim]) r[k1 * dim + k2].add_mul(c, c1 * c2);
        }
    }
    return r;
}

Vec sparse_to_vec(const SparseVec& s, std::size_t dim) {
    Vec v(dim);
    for (const auto& [k, c] : s) v[k] = c;
    return v;
}

struct Triple {
    std::size_t a, b, c;
    Rational coef;
};

std::vector<Triple> double_coproduct(const HopfAlgebra& h, std::size_t i) {
    std::vector<Triple> out;
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> acc;
    for (const auto& t : h.comult[i])
        for (const auto& u : h.comult[t.right]) acc[{t.left, u.left, u.right}] += t.coef * u.coef;
    for (auto& [k, v] : acc)
        if (!v.is_zero()) out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), v});
    return out;
}

}  // namespace

CheckReport check_hopf_axioms(const HopfAlgebra& h) {
    CheckReport rep;
    const std::size_t dim = h.dim;
    std::vector<Vec> mult(dim * dim);
    for (std::size_t k = 0; k < dim * dim; ++k) mult[k] = sparse_to_vec(h.mult[k], dim);

    bool unit_ok = true;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec b = h.basis_vector(i);
        unit_ok &= h.multiply(h.unit, b) == b && h.multiply(b, h.unit) == b;
    }
    rep.add("unit", unit_ok);

    bool assoc = true;
    std::string assoc_detail;
    for (std::size_t i = 0; i < dim && assoc; ++i)
        for (std::size_t j = 0; j < dim && assoc; ++j)
            for (std::size_t k = 0; k < dim && assoc; ++k) {
                Vec l = h.multiply(mult[i * dim + j], h.basis_vector(k));
                Vec r = h.multiply(h.basis_vector(i), mult[j * dim + k]);
                if (l != r) {
                    assoc = false;
                    assoc_detail = h.basis_labels[i] + "," + h.basis_labels[j] + "," + h.basis_labels[k];
                }
            }
    rep.add("associativity", assoc, assoc_detail);

    bool coassoc = true;
    for (std::size_t i = 0; i < dim && coassoc; ++i) {
        std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rational> l, r;
        for (const auto& t : h.comult[i]) {
            for (const auto& u : h.comult[t.left]) l[{u.left, u.right, t.right}] += t.coef * u.coef;
            for (const auto& u : h.comult[t.right]) r[{t.left, u.left, u.right}] += t.coef * u.coef;
        }
        std::erase_if(l, [](const auto& e) { return e.second.is_zero(); });
        std::erase_if(r, [](const auto& e) { return e.second.is_zero(); });
        coassoc = l == r;
    }
    rep.add("coassociativity", coassoc);

    bool counit_ok = true;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec l(dim), r(dim);
        for (const auto& t : h.comult[i]) {
            l[t.right].add_mul(t.coef, h.counit[t.left]);
            r[t.left].add_mul(t.coef, h.counit[t.right]);
        }
        counit_ok &= l == h.basis_vector(i) && r == h.basis_vector(i);
    }
    rep.add("counit", counit_ok);

    bool delta_mult = h.coproduct(h.unit) == [&] {
        Vec v(dim * dim);
        v[0] = 1;
        return v;
    }();
    std::vector<Vec> deltas(dim);
    for (std::size_t i = 0; i < dim; ++i) deltas[i] = h.coproduct(h.basis_vector(i));
    for (std::size_t i = 0; i < dim && delta_mult; ++i)
        for (std::size_t j = 0; j < dim && delta_mult; ++j)
            delta_mult = h.coproduct(mult[i * dim + j]) == tensor_product_mul(h, deltas[i], deltas[j]);
    rep.add("comultiplication is an algebra map", delta_mult);

    bool eps_mult = h.apply_counit(h.unit).is_one();
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) eps_mult &= h.apply_counit(mult[i * dim + j]) == h.counit[i] * h.counit[j];
    rep.add("counit is an algebra map", eps_mult);

    bool sl = true, sr = true;
    for (std::size_t i = 0; i < dim; ++i) {
        Vec l(dim), r(dim);
        for (const auto& t : h.comult[i]) {
            Vec s1 = h.apply_antipode(h.basis_vector(t.left));
            Vec s2 = h.apply_antipode(h.basis_vector(t.right));
            Vec a = h.multiply(s1, h.basis_vector(t.right));
            Vec b = h.multiply(h.basis_vector(t.left), s2);
            for (std::size_t k = 0; k < dim; ++k) {
                l[k].add_mul(t.coef, a[k]);
                r[k].add_mul(t.coef, b[k]);
            }
        }
        Vec e = h.unit;
        for (auto& v : e) v *= h.counit[i];
        sl &= l == e;
        sr &= r == e;
    }
    rep.add("antipode m(S⊗id)Δ = uε", sl);
    rep.add("antipode m(id⊗S)Δ = uε", sr);
    return rep;
}

// ---------------------------------------------------------------- cocycles

std::optional<Matrix> convolution_inverse(const HopfAlgebra& h, const Matrix& form) {
    const std::size_t dim = h.dim, N = dim * dim;
    Matrix E(N, N), rhs(N, 1);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            const std::size_t row = a * dim + b;
            rhs(row, 0) = h.counit[a] * h.counit[b];
            for (const auto& ta : h.comult[a])
                for (const auto& tb : h.comult[b]) {
                    const Rational& s = form(ta.left, tb.left);
                    if (s.is_zero()) continue;
                    E(row, ta.right * dim + tb.right).add_mul(ta.coef * tb.coef, s);
                }
        }
    auto x = solve(E, rhs);
    if (!x) return std::nullopt;
    Matrix inv(dim, dim);
    for (std::size_t k = 0; k < N; ++k) inv(k / dim, k % dim) = (*x)(k, 0);
    // other side
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            Rational v;
            for (const auto& ta : h.comult[a])
                for (const auto& tb : h.comult[b]) v.add_mul(ta.coef * tb.coef, inv(ta.left, tb.left) * form(ta.right, tb.right));
            if (v != h.counit[a] * h.counit[b]) return std::nullopt;
        }
    return inv;
}

TwoCocycle make_cocycle(const AlgebraPtr& h, const Matrix& form) {
    TwoCocycle s{h, form, Matrix()};
    if (auto inv = convolution_inverse(*h, form)) s.inverse_form = *inv;
    return s;
}

CheckReport cocycle_report(const HopfAlgebra& h, const TwoCocycle& s) {
    CheckReport rep;
    const std::size_t dim = h.dim;
    bool norm = true;
    for (std::size_t a = 0; a < dim; ++a) norm &= s.form(a, 0) == h.counit[a] && s.form(0, a) == h.counit[a];
    rep.add("normalization", norm);
    Matrix inv = s.inverse_form;
    if (inv.empty()) {
        auto c = convolution_inverse(h, s.form);
        if (c) inv = *c;
    }
    rep.add("convolution invertible", !inv.empty());

    // T(a,b) = sum sigma(a1,b1) a2 b2 ; U likewise
    Matrix T(dim * dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b)
            for (const auto& ta : h.comult[a])
                for (const auto& tb : h.comult[b]) {
                    const Rational& sv = s.form(ta.left, tb.left);
                    if (sv.is_zero()) continue;
                    Rational c = ta.coef * tb.coef * sv;
                    for (const auto& [k, m] : h.mult[ta.right * dim + tb.right]) T(a * dim + b, k).add_mul(c, m);
                }
    Matrix L = T * s.form;  // L[(a,b), c]
    Matrix R = s.form * T.transpose();  // R[a, (b,c)]
    bool ident = true;
    std::string detail;
    for (std::size_t a = 0; a < dim && ident; ++a)
        for (std::size_t b = 0; b < dim && ident; ++b)
            for (std::size_t c = 0; c < dim && ident; ++c)
                if (L(a * dim + b, c) != R(a, b * dim + c)) {
                    ident = false;
                    detail = h.basis_labels[a] + "," + h.basis_labels[b] + "," + h.basis_labels[c];
                }
    rep.add("cocycle identity", ident, detail);
    return rep;
}

bool verify_cocycle(const HopfAlgebra& h, const TwoCocycle& s) { return cocycle_report(h, s).all(); }

AlgebraPtr cocycle_twist(const AlgebraPtr& hp, const TwoCocycle& s) {
    const HopfAlgebra& h = *hp;
    if (!verify_cocycle(h, s)) throw std::invalid_argument("cocycle verification failed");
    Matrix inv = s.inverse_form.empty() ? *convolution_inverse(h, s.form) : s.inverse_form;
    const std::size_t dim = h.dim;
    auto t = std::make_shared<HopfAlgebra>(h);
    t->name = h.name + "^sigma";
    t->words_valid = false;
    t->relations.clear();
    std::vector<std::vector<Triple>> d2(dim);
    for (std::size_t i = 0; i < dim; ++i) d2[i] = double_coproduct(h, i);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            Vec r(dim);
            for (const auto& x : d2[a])
                for (const auto& y : d2[b]) {
                    const Rational& s1 = s.form(x.a, y.a);
                    if (s1.is_zero()) continue;
                    const Rational& s3 = inv(x.c, y.c);
                    if (s3.is_zero()) continue;
                    Rational w = x.coef * y.coef * s1 * s3;
                    for (const auto& [k, m] : h.mult[x.b * dim + y.b]) r[k].add_mul(w, m);
                }
            SparseVec sv;
            for (std::size_t k = 0; k < dim; ++k)
                if (!r[k].is_zero()) sv.emplace_back(k, r[k]);
            t->mult[a * dim + b] = std::move(sv);
        }
    // u(a) = sigma(a1, S a2), u^-1(a) = sigma^-1(S a1, a2)
    Vec u(dim), uinv(dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (const auto& tm : h.comult[a]) {
            for (std::size_t k = 0; k < dim; ++k) {
                const Rational& s2 = h.antipode(k, tm.right);
                if (!s2.is_zero()) u[a].add_mul(tm.coef * s2, s.form(tm.left, k));
                const Rational& s1 = h.antipode(k, tm.left);
                if (!s1.is_zero()) uinv[a].add_mul(tm.coef * s1, inv(k, tm.right));
            }
        }
    Matrix S(dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (const auto& x : d2[a]) {
            Rational w = x.coef * u[x.a] * uinv[x.c];
            if (w.is_zero()) continue;
            for (std::size_t k = 0; k < dim; ++k)
                if (!h.antipode(k, x.b).is_zero()) S(k, a).add_mul(w, h.antipode(k, x.b));
        }
    t->antipode = S;
    return t;
}

TwoCocycle trivial_cocycle(const AlgebraPtr& h) {
    Matrix f(h->dim, h->dim);
    for (std::size_t a = 0; a < h->dim; ++a)
        for (std::size_t b = 0; b < h->dim; ++b) f(a, b) = h->counit[a] * h->counit[b];
    return make_cocycle(h, f);
}

TwoCocycle sigma1(const AlgebraPtr& mabar) {
    const std::size_t g = mabar->generator_id("g"), hh = mabar->generator_id("h");
    Matrix f(mabar->dim, mabar->dim);
    // basis elements g^a1 h^a2
    for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int b2 = 0; b2 < 2; ++b2) {
                    std::size_t u = (a1 ? mabar->generator_basis[g] : 0) | (a2 ? mabar->generator_basis[hh] : 0);
                    std::size_t v = (b1 ? mabar->generator_basis[g] : 0) | (b2 ? mabar->generator_basis[hh] : 0);
                    f(u, v) = (a1 * b2) % 2 ? -1 : 1;
                }
    return make_cocycle(mabar, f);
}

TwoCocycle sigma_alpha(const AlgebraPtr& h4, const Rational& alpha) {
    // table over (1, a, b, ab); our basis is (1, a, b, ba) with ba = -ab
    const Rational t[4][4] = {{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, alpha, alpha}, {0, 0, -alpha, alpha}};
    const int sg[4] = {1, 1, 1, -1};
    Matrix f(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) f(std::size_t(i), std::size_t(j)) = Rational(sg[i] * sg[j]) * t[i][j];
    return make_cocycle(h4, f);
}

// ---------------------------------------------------------------- pairings

SkewPairing extend_pairing(const AlgebraPtr& left, const AlgebraPtr& right,
                           const std::map<std::pair<std::string, std::string>, Rational>& generator_values) {
    const std::size_t dl = left->dim, dr = right->dim;
    std::vector<std::vector<std::optional<Rational>>> memo(dl, std::vector<std::optional<Rational>>(dr));
    auto word_basis = [](const HopfAlgebra& h, const Word& w) {
        for (std::size_t i = 0; i < h.dim; ++i)
            if (h.basis_words[i] == w) return i;
        throw std::logic_error("word is not a basis word");
    };
    std::function<Rational(std::size_t, std::size_t)> pair = [&](std::size_t b, std::size_t a) -> Rational {
        if (memo[b][a]) return *memo[b][a];
        Rational v;
        const Word& wb = left->basis_words[b];
        const Word& wa = right->basis_words[a];
        if (wb.empty()) {
            v = right->counit[a];
        } else if (wa.empty()) {
            v = left->counit[b];
        } else if (wb.size() >= 2) {
            // <b b', a> = <b, a1><b', a2>
            std::size_t first = left->generator_basis[wb.front()];
            std::size_t rest = word_basis(*left, Word(wb.begin() + 1, wb.end()));
            for (const auto& t : right->comult[a]) v += t.coef * pair(first, t.left) * pair(rest, t.right);
        } else if (wa.size() >= 2) {
            // <b, a a'> = <b2, a><b1, a'>
            std::size_t first = right->generator_basis[wa.front()];
            std::size_t rest = word_basis(*right, Word(wa.begin() + 1, wa.end()));
            for (const auto& t : left->comult[b]) v += t.coef * pair(t.right, first) * pair(t.left, rest);
        } else {
            auto it = generator_values.find({left->generators[wb.front()], right->generators[wa.front()]});
            if (it != generator_values.end()) v = it->second;
        }
        memo[b][a] = v;
        return v;
    };
    Matrix m(dl, dr);
    for (std::size_t b = 0; b < dl; ++b)
        for (std::size_t a = 0; a < dr; ++a) m(b, a) = pair(b, a);
    return {left, right, m};
}

SkewPairing standard_pairing(const AlgebraPtr& h4, const Rational& aa, const Rational& bb) {
    return extend_pairing(h4, h4, {{{"a", "a"}, aa}, {{"b", "b"}, bb}, {{"a", "b"}, 0}, {{"b", "a"}, 0}});
}

SkewPairing counit_pairing(const AlgebraPtr& left, const AlgebraPtr& right) {
    Matrix m(left->dim, right->dim);
    for (std::size_t b = 0; b < left->dim; ++b)
        for (std::size_t a = 0; a < right->dim; ++a) m(b, a) = left->counit[b] * right->counit[a];
    return {left, right, m};
}

CheckReport check_skew_pairing(const SkewPairing& p) {
    const HopfAlgebra& B = *p.left_algebra;
    const HopfAlgebra& A = *p.right_algebra;
    const Matrix& P = p.values;
    auto pv = [&](const Vec& b, std::size_t a) {
        Rational r;
        for (std::size_t i = 0; i < B.dim; ++i)
            if (!b[i].is_zero()) r.add_mul(b[i], P(i, a));
        return r;
    };
    auto pa = [&](std::size_t b, const Vec& a) {
        Rational r;
        for (std::size_t i = 0; i < A.dim; ++i)
            if (!a[i].is_zero()) r.add_mul(a[i], P(b, i));
        return r;
    };
    CheckReport rep;
    bool left_ok = true;
    std::string ld;
    for (std::size_t b = 0; b < B.dim; ++b)
        for (std::size_t b2 = 0; b2 < B.dim; ++b2)
            for (std::size_t a = 0; a < A.dim; ++a) {
                Rational lhs = pv(B.multiply(B.basis_vector(b), B.basis_vector(b2)), a);
                Rational rhs;
                for (const auto& t : A.comult[a]) rhs += t.coef * P(b, t.left) * P(b2, t.right);
                if (lhs != rhs && left_ok) {
                    left_ok = false;
                    ld = "<" + B.basis_labels[b] + "·" + B.basis_labels[b2] + ", " + A.basis_labels[a] + ">";
                }
            }
    rep.add("<bb',a> = <b⊗b',Δa>", left_ok, ld);
    bool right_ok = true;
    std::string rd;
    for (std::size_t b = 0; b < B.dim; ++b)
        for (std::size_t a = 0; a < A.dim; ++a)
            for (std::size_t a2 = 0; a2 < A.dim; ++a2) {
                Rational lhs = pa(b, A.multiply(A.basis_vector(a), A.basis_vector(a2)));
                Rational rhs;
                for (const auto& t : B.comult[b]) rhs += t.coef * P(t.right, a) * P(t.left, a2);
                if (lhs != rhs && right_ok) {
                    right_ok = false;
                    rd = "<" + B.basis_labels[b] + ", " + A.basis_labels[a] + "·" + A.basis_labels[a2] + ">";
                }
            }
    rep.add("<b,aa'> = <Δop b,a⊗a'>", right_ok, rd);
    bool u1 = true, u2 = true;
    for (std::size_t a = 0; a < A.dim; ++a) u1 &= pv(B.unit, a) == A.counit[a];
    for (std::size_t b = 0; b < B.dim; ++b) u2 &= pa(b, A.unit) == B.counit[b];
    rep.add("<1,a> = ε(a)", u1);
    rep.add("<b,1> = ε(b)", u2);
    return rep;
}

TwoCocycle pairing_to_cocycle(const SkewPairing& p, const AlgebraPtr& tensor) {
    auto rep = check_skew_pairing(p);
    if (!rep.all()) {
        std::string why;
        for (const auto& c : rep.items)
            if (!c.pass) why += c.name + (c.detail.empty() ? "" : " at " + c.detail) + "; ";
        throw std::invalid_argument("skew pairing axioms fail: " + why);
    }
    const AlgebraPtr& A = p.right_algebra;
    const AlgebraPtr& B = p.left_algebra;
    AlgebraPtr T = tensor ? tensor : tensor_algebra(B, A);
    const std::size_t dA = A->dim, dB = B->dim;
    Matrix f(T->dim, T->dim);
    // sigma(b⊗a, b'⊗a') = ε(b)<b',a>ε(a')
    for (std::size_t b = 0; b < dB; ++b)
        for (std::size_t a = 0; a < dA; ++a)
            for (std::size_t b2 = 0; b2 < dB; ++b2)
                for (std::size_t a2 = 0; a2 < dA; ++a2) {
                    Rational v = B->counit[b] * p.values(b2, a) * A->counit[a2];
                    if (!v.is_zero()) f(b * dA + a, b2 * dA + a2) = v;
                }
    return make_cocycle(T, f);
}

// ---------------------------------------------------------------- Hopf maps

CheckReport check_hopf_map(const HopfAlgebra& h1, const HopfAlgebra& h2, const Matrix& phi) {
    CheckReport rep;
    const std::size_t n = h1.dim, m = h2.dim;
    if (phi.rows() != m || phi.cols() != n) throw std::invalid_argument("map has wrong shape");
    auto image = [&](const Vec& v) {
        Vec r(m);
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < m; ++i)
                if (!phi(i, j).is_zero()) r[i].add_mul(v[j], phi(i, j));
        }
        return r;
    };
    std::vector<Vec> img(n);
    for (std::size_t j = 0; j < n; ++j) img[j] = phi.column_values(j);
    rep.add("bijective", n == m && rank(phi) == n);
    rep.add("unit", image(h1.unit) == h2.unit);
    bool mul = true;
    std::string md;
    for (std::size_t i = 0; i < n && mul; ++i)
        for (std::size_t j = 0; j < n && mul; ++j)
            if (image(sparse_to_vec(h1.mult[i * n + j], n)) != h2.multiply(img[i], img[j])) {
                mul = false;
                md = h1.basis_labels[i] + "," + h1.basis_labels[j];
            }
    rep.add("multiplicative", mul, md);
    bool com = true;
    for (std::size_t i = 0; i < n && com; ++i) {
        Vec l(m * m);
        for (const auto& t : h1.comult[i])
            for (std::size_t p = 0; p < m; ++p) {
                if (phi(p, t.left).is_zero()) continue;
                for (std::size_t q = 0; q < m; ++q)
                    if (!phi(q, t.right).is_zero()) l[p * m + q].add_mul(t.coef, phi(p, t.left) * phi(q, t.right));
            }
        com = l == h2.coproduct(img[i]);
    }
    rep.add("comultiplicative", com);
    bool eps = true;
    for (std::size_t i = 0; i < n; ++i) eps &= h2.apply_counit(img[i]) == h1.counit[i];
    rep.add("counit", eps);
    rep.add("antipode", phi * h1.antipode == h2.antipode * phi);
    return rep;
}

std::optional<Matrix> induced_map(const HopfAlgebra& h1, const HopfAlgebra& h2, const std::vector<Vec>& images) {
    if (images.size() != h1.generators.size()) throw std::invalid_argument("one image per generator required");
    for (const auto& v : images)
        if (v.size() != h2.dim) throw std::invalid_argument("image has wrong dimension");
    std::vector<Vec> srcs{h1.unit}, dsts{h2.unit};
    std::vector<std::pair<Vec, Vec>> all;
    Matrix span = Matrix::column_vector(h1.unit);
    std::size_t r = 1;
    for (std::size_t k = 0; k < srcs.size() && r < h1.dim; ++k)
        for (std::size_t g = 0; g < images.size(); ++g) {
            Vec v = h1.multiply(srcs[k], h1.basis_vector(h1.generator_basis[g]));
            Vec w = h2.multiply(dsts[k], images[g]);
            Matrix ext = hstack({span, Matrix::column_vector(v)});
            std::size_t nr = rank(ext);
            if (nr > r) {
                span = std::move(ext);
                r = nr;
                srcs.push_back(v);
                dsts.push_back(w);
            } else {
                all.emplace_back(std::move(v), std::move(w));
            }
        }
    if (r < h1.dim) return std::nullopt;
    Matrix V(h1.dim, h1.dim), W(h2.dim, h1.dim);
    for (std::size_t j = 0; j < h1.dim; ++j)
        for (std::size_t i = 0; i < h1.dim; ++i) V(i, j) = srcs[j][i];
    for (std::size_t j = 0; j < h1.dim; ++j)
        for (std::size_t i = 0; i < h2.dim; ++i) W(i, j) = dsts[j][i];
    auto Vi = inverse(V);
    if (!Vi) return std::nullopt;
    Matrix phi = W * *Vi;
    for (const auto& [v, w] : all)
        if (phi * Matrix::column_vector(v) != Matrix::column_vector(w)) return std::nullopt;
    return phi;
}

bool hopf_isomorphism_check(const HopfAlgebra& h1, const HopfAlgebra& h2, const std::vector<Vec>& images) {
    if (h1.dim != h2.dim) return false;
    auto phi = induced_map(h1, h2, images);
    if (!phi) return false;
    return check_hopf_map(h1, h2, *phi).all();
}

std::optional<std::vector<Vec>> search_generator_assignment(const HopfAlgebra& h1, const HopfAlgebra& h2) {
    if (h1.dim != h2.dim) return std::nullopt;
    const std::size_t n = h1.generators.size(), dim = h2.dim;
    std::vector<std::size_t> grouplike2;
    for (std::size_t i = 1; i < dim; ++i) {
        const auto& c = h2.comult[i];
        if (c.size() == 1 && c[0].left == i && c[0].right == i && c[0].coef.is_one()) grouplike2.push_back(i);
    }
    std::vector<std::size_t> gl, sp;
    for (std::size_t g = 0; g < n; ++g) (h1.grouplike[g] ? gl : sp).push_back(g);
    std::vector<Vec> images(n);
    std::optional<std::vector<Vec>> found;

    std::function<void(std::size_t)> assign_sp = [&](std::size_t k) {
        if (found) return;
        if (k == sp.size()) {
            if (hopf_isomorphism_check(h1, h2, images)) found = images;
            return;
        }
        std::size_t g = sp[k];
        // coproduct of the generator transported through the partial assignment
        const auto& d1 = h1.comult[h1.generator_basis[g]];
        for (std::size_t b = 1; b < dim; ++b)
            for (int sgn : {1, -1}) {
                Vec cand(dim);
                cand[b] = sgn;
                Vec expect(dim * dim);
                bool ok = true;
                for (const auto& t : d1) {
                    auto img_of = [&](std::size_t i) -> std::optional<Vec> {
                        if (i == 0) return h2.unit;
                        if (i == h1.generator_basis[g]) return cand;
                        for (std::size_t q = 0; q < n; ++q)
                            if (h1.grouplike[q] && h1.generator_basis[q] == i) return images[q];
                        return std::nullopt;
                    };
                    auto l = img_of(t.left), r = img_of(t.right);
                    if (!l || !r) {
                        ok = false;
                        break;
                    }
                    for (std::size_t p = 0; p < dim; ++p)
                        for (std::size_t q = 0; q < dim; ++q)
                            if (!(*l)[p].is_zero() && !(*r)[q].is_zero()) expect[p * dim + q].add_mul(t.coef, (*l)[p] * (*r)[q]);
                }
                if (!ok || h2.coproduct(cand) != expect) continue;
                images[g] = cand;
                assign_sp(k + 1);
                if (found) return;
            }
    };
    std::function<void(std::size_t)> assign_gl = [&](std::size_t k) {
        if (found) return;
        if (k == gl.size()) {
            assign_sp(0);
            return;
        }
        for (std::size_t b : grouplike2) {
            images[gl[k]] = h2.basis_vector(b);
            assign_gl(k + 1);
            if (found) return;
        }
    };
    assign_gl(0);
    return found;
}

Matrix phi_matrix(const HopfAlgebra& src, const HopfAlgebra& dst) {
    // generator k of src goes to generator k of dst, basis words correspond
    if (src.dim != dst.dim || src.generators.size() != dst.generators.size())
        throw std::invalid_argument("phi needs algebras of matching shape");
    Matrix m(dst.dim, src.dim);
    for (std::size_t i = 0; i < src.dim; ++i) {
        const Word& w = src.basis_words[i];
        for (std::size_t j = 0; j < dst.dim; ++j)
            if (dst.basis_words[j] == w) m(j, i) = 1;
    }
    return m;
}

std::string algebra_json(const HopfAlgebra& h, int indent) {
    using nlohmann::ordered_json;
    auto strs = [](const Vec& v) {
        std::vector<std::string> out;
        for (const auto& c : v) out.push_back(c.str());
        return out;
    };
    ordered_json j;
    j["name"] = h.name;
    j["dim"] = h.dim;
    j["generators"] = h.generators;
    j["basis"] = h.basis_labels;
    j["unit"] = strs(h.unit);
    j["counit"] = strs(h.counit);
    ordered_json mult = ordered_json::array();
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t k = 0; k < h.dim; ++k)
            for (const auto& [idx, c] : h.mult[i * h.dim + k]) mult.push_back({i, k, idx, c.str()});
    j["mult"] = mult;
    ordered_json comult = ordered_json::array();
    for (std::size_t i = 0; i < h.dim; ++i)
        for (const auto& t : h.comult[i]) comult.push_back({i, t.left, t.right, t.coef.str()});
    j["comult"] = comult;
    ordered_json s = ordered_json::array();
    for (std::size_t c = 0; c < h.antipode.cols(); ++c)
        for (std::size_t r = 0; r < h.antipode.rows(); ++r)
            if (!h.antipode(r, c).is_zero()) s.push_back({r, c, h.antipode(r, c).str()});
    j["antipode"] = s;
    return j.dump(indent);
}

}  // namespace greenring
