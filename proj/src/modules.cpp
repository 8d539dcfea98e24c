#include "greenring/modules.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace greenring {

const Matrix& ModuleRep::action(const std::string& generator) const {
    return actions.at(algebra->generator_id(generator));
}

Matrix ModuleRep::word_action(const Word& w) const {
    Matrix out = Matrix::identity(dim());
    for (std::size_t g : w) out = out * actions[g];
    return out;
}

Matrix ModuleRep::basis_action(std::size_t i) const {
    if (!algebra->words_valid) throw std::logic_error("basis words unavailable for " + algebra->name);
    return word_action(algebra->basis_words[i]);
}

Matrix ModuleRep::element_action(const Vec& a) const {
    Matrix out(dim(), dim());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) out.add_scaled(basis_action(i), a[i]);
    return out;
}

namespace {

struct Vertex {
    std::string name;
    Signs weight;
};

struct Arrow {
    std::size_t from, to;
    Rational weight = 1;
};

void require_sixteen(const HopfAlgebra& h) {
    if (h.name != "mabar" && h.name != "DH4" && h.name != "HH")
        throw std::invalid_argument("no canonical modules over " + h.name);
}

ModuleRep from_diagram(const AlgebraPtr& h, const std::vector<Vertex>& vs, const std::vector<Arrow>& xs,
                       const std::vector<Arrow>& ys) {
    const std::size_t n = vs.size();
    ModuleRep m;
    m.algebra = h;
    m.actions.assign(h->generators.size(), Matrix(n, n));
    Matrix& g = m.actions[h->generator_id("g")];
    Matrix& hh = m.actions[h->generator_id("h")];
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = vs[i].weight.first;
        hh(i, i) = vs[i].weight.second;
        m.basis_names.push_back(vs[i].name);
    }
    for (const auto& a : xs) m.actions[h->generator_id("x")](a.to, a.from) = a.weight;
    for (const auto& a : ys) m.actions[h->generator_id("y")](a.to, a.from) = a.weight;
    return m;
}

Signs mul(Signs a, Signs b) { return {a.first * b.first, a.second * b.second}; }

// index of u_i (1-based) and v_i (1-based) when u1..un precede v1..vm
struct UV {
    std::size_t nu;
    std::size_t u(std::size_t i) const { return i - 1; }
    std::size_t v(std::size_t i) const { return nu + i - 1; }
};

std::vector<Vertex> uv_vertices(std::size_t nu, std::size_t nv, auto u_weight, auto v_weight) {
    std::vector<Vertex> vs;
    for (std::size_t i = 1; i <= nu; ++i) vs.push_back({"u" + std::to_string(i), u_weight(i)});
    for (std::size_t i = 1; i <= nv; ++i) vs.push_back({"v" + std::to_string(i), v_weight(i)});
    return vs;
}

ModuleRep mabar_string(const AlgebraPtr& h, Family f, std::size_t r) {
    const Signs pp{1, 1}, mm{-1, -1};
    auto up = [&](std::size_t) { return pp; };
    auto down = [&](std::size_t) { return mm; };
    std::vector<Arrow> xs, ys;
    switch (f) {
        case Family::M: {
            UV b{r};
            for (std::size_t i = 1; i <= r; ++i) {
                xs.push_back({b.u(i), b.v(i)});
                ys.push_back({b.u(i), b.v(i + 1)});
            }
            return from_diagram(h, uv_vertices(r, r + 1, up, down), xs, ys);
        }
        case Family::W: {
            UV b{r + 1};
            for (std::size_t i = 1; i <= r + 1; ++i) {
                if (i <= r) xs.push_back({b.u(i), b.v(i)});
                if (i >= 2) ys.push_back({b.u(i), b.v(i - 1)});
            }
            return from_diagram(h, uv_vertices(r + 1, r, up, down), xs, ys);
        }
        case Family::N: {
            UV b{r};
            for (std::size_t i = 1; i <= r; ++i) {
                xs.push_back({b.u(i), b.v(i)});
                if (i >= 2) ys.push_back({b.u(i), b.v(i - 1)});
            }
            return from_diagram(h, uv_vertices(r, r, up, down), xs, ys);
        }
        case Family::Nprime: {
            UV b{r};
            for (std::size_t i = 1; i <= r; ++i) {
                ys.push_back({b.u(i), b.v(i)});
                if (i >= 2) xs.push_back({b.u(i), b.v(i - 1)});
            }
            return from_diagram(h, uv_vertices(r, r, up, down), xs, ys);
        }
        default: break;
    }
    throw std::invalid_argument("not a string family: " + family_name(f));
}

ModuleRep mabar_band(const AlgebraPtr& h, std::size_t r, const Rational& eta) {
    UV b{r};
    std::vector<Arrow> xs, ys;
    for (std::size_t i = 1; i <= r; ++i) {
        xs.push_back({b.u(i), b.v(i)});
        ys.push_back({b.u(i), b.v(i), eta});
        if (i >= 2) ys.push_back({b.u(i), b.v(i - 1)});
    }
    return from_diagram(
        h, uv_vertices(r, r, [](std::size_t) { return Signs{1, 1}; }, [](std::size_t) { return Signs{-1, -1}; }), xs,
        ys);
}

// Over HH x flips the g-sign, y flips the h-sign.
const Signs kXflip{-1, 1}, kYflip{1, -1};

Signs alternating(std::size_t i, Signs first) { return i % 2 == 1 ? first : mul(first, {-1, -1}); }

ModuleRep hh_string(const AlgebraPtr& h, Family f, std::size_t r) {
    const Signs pp{1, 1};
    auto uw = [&](std::size_t i) { return alternating(i, pp); };
    std::vector<Arrow> xs, ys;
    if (f == Family::M || f == Family::N) {
        std::size_t nv = f == Family::M ? r + 1 : r;
        UV b{r};
        for (std::size_t i = 1; i <= r; ++i) {
            xs.push_back({b.u(i), b.v(i)});
            if (i + 1 <= nv) ys.push_back({b.u(i), b.v(i + 1)});
        }
        // v_i = x u_i, and y u_{i-1} lands on the same vertex
        auto vw = [&](std::size_t i) { return mul(uw(i), kXflip); };
        return from_diagram(h, uv_vertices(r, nv, uw, vw), xs, ys);
    }
    if (f == Family::W || f == Family::Nprime) {
        std::size_t nu = f == Family::W ? r + 1 : r;
        UV b{nu};
        for (std::size_t i = 1; i <= nu; ++i) {
            if (i <= r) ys.push_back({b.u(i), b.v(i)});
            if (i >= 2) xs.push_back({b.u(i), b.v(i - 1)});
        }
        auto vw = [&](std::size_t i) { return mul(uw(i), kYflip); };
        return from_diagram(h, uv_vertices(nu, r, uw, vw), xs, ys);
    }
    throw std::invalid_argument("not a string family: " + family_name(f));
}

ModuleRep hh_band(const AlgebraPtr& h, std::size_t r, const Rational& eta) {
    const std::size_t n = 2 * r;
    UV b{n};
    std::vector<Arrow> xs, ys;
    for (std::size_t j = 1; j <= n; ++j) xs.push_back({b.u(j), b.v(j)});
    for (std::size_t i = 1; i <= r; ++i) {
        ys.push_back({b.u(2 * i - 1), b.v(2 * i), eta});
        if (i >= 2) ys.push_back({b.u(2 * i - 1), b.v(2 * i - 2)});
        ys.push_back({b.u(2 * i), b.v(2 * i - 1)});
    }
    auto uw = [](std::size_t j) { return alternating(j, {-1, -1}); };
    auto vw = [&](std::size_t j) { return mul(uw(j), kXflip); };
    return from_diagram(h, uv_vertices(n, n, uw, vw), xs, ys);
}

}  // namespace

ModuleRep simple(const AlgebraPtr& h, Signs s) {
    require_sixteen(*h);
    if (h->name == "DH4" && s.first != s.second)
        throw std::invalid_argument("DH4 has no one-dimensional module with mixed signs");
    return from_diagram(h, {{"u1", s}}, {}, {});
}

Vec primitive_idempotent(const HopfAlgebra& h, Signs s) {
    const auto [s1, s2] = s;
    Vec g = h.element("g"), hv = h.element("h"), gh = h.element("gh"), one = h.one();
    auto combo = [&](const Rational& c0, const Rational& c1, const Rational& c2, const Rational& c3) {
        Vec out(h.dim);
        for (std::size_t i = 0; i < h.dim; ++i) out[i] = c0 * one[i] + c1 * g[i] + c2 * hv[i] + c3 * gh[i];
        return out;
    };
    if (h.name == "DH4" && s1 != s2) {
        // (1 + s1 g + s2 h + s1 s2 gh)/8 premultiplied by xy
        Vec k = combo(1, s1, s2, s1 * s2);
        Vec e = h.multiply(h.element("xy"), k);
        for (auto& c : e) c *= Rational(1, 8);
        return e;
    }
    Rational q(1, 4);
    return combo(q, q * s1, q * s2, q * (s1 * s2));
}

ModuleRep projective(const AlgebraPtr& h, Signs s) {
    require_sixteen(*h);
    Vec e = primitive_idempotent(*h, s);
    std::vector<std::pair<std::string, Vec>> candidates = {
        {"e", e},
        {"xe", h->multiply(h->element("x"), e)},
        {"ye", h->multiply(h->element("y"), e)},
        {"xye", h->multiply(h->element("xy"), e)},
    };
    ModuleRep m;
    m.algebra = h;
    std::vector<Vec> basis;
    for (auto& [name, v] : candidates) {
        Matrix trial(h->dim, basis.size() + 1);
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < h->dim; ++i) trial(i, j) = basis[j][i];
        for (std::size_t i = 0; i < h->dim; ++i) trial(i, basis.size()) = v[i];
        if (rank(trial) == basis.size() + 1) {
            basis.push_back(v);
            m.basis_names.push_back(name);
        }
    }
    const std::size_t n = basis.size();
    m.ideal_basis = Matrix(h->dim, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < h->dim; ++i) m.ideal_basis(i, j) = basis[j][i];
    for (std::size_t gen = 0; gen < h->generators.size(); ++gen) {
        Vec gv = h->basis_vector(h->generator_basis[gen]);
        Matrix images(h->dim, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vec p = h->multiply(gv, basis[j]);
            for (std::size_t i = 0; i < h->dim; ++i) images(i, j) = p[i];
        }
        auto a = solve(m.ideal_basis, images);
        if (!a) throw std::logic_error("left ideal not closed under " + h->generators[gen]);
        m.actions.push_back(std::move(*a));
    }
    return m;
}

ModuleRep string_module(const AlgebraPtr& h, Family family, int r) {
    require_sixteen(*h);
    if (r < 1) throw std::invalid_argument("rank must be positive");
    if (h->name == "HH") return hh_string(h, family, std::size_t(r));
    return mabar_string(h, family, std::size_t(r));
}

ModuleRep band_module(const AlgebraPtr& h, int r, const Rational& eta) {
    require_sixteen(*h);
    if (r < 1) throw std::invalid_argument("rank must be positive");
    if (eta.is_zero()) throw std::invalid_argument("band parameter must be nonzero");
    if (h->name == "HH") return hh_band(h, std::size_t(r), eta);
    return mabar_band(h, std::size_t(r), eta);
}

ModuleRep sign_twist(const ModuleRep& m, Signs s) {
    if (s == Signs{1, 1}) return m;
    ModuleRep out = tensor(m, simple(m.algebra, s));
    out.basis_names = m.basis_names;
    return out;
}

ModuleRep tensor(const ModuleRep& m, const ModuleRep& n) {
    if (m.algebra.get() != n.algebra.get() && m.algebra->name != n.algebra->name)
        throw std::invalid_argument("tensor of modules over different algebras");
    const auto& h = *m.algebra;
    ModuleRep out;
    out.algebra = m.algebra;
    std::vector<std::optional<Matrix>> cm(h.dim), cn(h.dim);
    auto am = [&](std::size_t i) -> const Matrix& {
        if (!cm[i]) cm[i] = m.basis_action(i);
        return *cm[i];
    };
    auto an = [&](std::size_t i) -> const Matrix& {
        if (!cn[i]) cn[i] = n.basis_action(i);
        return *cn[i];
    };
    for (std::size_t g = 0; g < h.generators.size(); ++g) {
        Matrix a(m.dim() * n.dim(), m.dim() * n.dim());
        for (const auto& t : h.comult[h.generator_basis[g]]) a.add_scaled(kronecker(am(t.left), an(t.right)), t.coef);
        out.actions.push_back(std::move(a));
    }
    if (!m.basis_names.empty() && !n.basis_names.empty())
        for (const auto& a : m.basis_names)
            for (const auto& b : n.basis_names) out.basis_names.push_back(a + "⊗" + b);
    return out;
}

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
    ModuleRep out;
    out.algebra = m.algebra;
    for (std::size_t g = 0; g < m.actions.size(); ++g)
        out.actions.push_back(greenring::direct_sum(m.actions[g], n.actions[g]));
    if (m.basis_names.size() == m.dim() && n.basis_names.size() == n.dim()) {
        out.basis_names = m.basis_names;
        for (const auto& b : n.basis_names) out.basis_names.push_back(b + "'");
    }
    return out;
}

ModuleRep make_module(const AlgebraPtr& h, const IndecLabel& l) {
    switch (l.family) {
        case Family::S: return simple(h, {l.s1, l.s2});
        case Family::P: return projective(h, {l.s1, l.s2});
        case Family::C: return sign_twist(band_module(h, l.rank, l.eta), {l.s1, l.s2});
        default: return sign_twist(string_module(h, l.family, l.rank), {l.s1, l.s2});
    }
}

CheckReport validate_module(const ModuleRep& m) {
    CheckReport rep;
    const auto& h = *m.algebra;
    const std::size_t n = m.dim();
    bool shapes = m.actions.size() == h.generators.size();
    for (const auto& a : m.actions) shapes = shapes && a.rows() == n && a.cols() == n;
    rep.add("action shapes", shapes);
    if (!shapes) return rep;
    for (const auto& r : h.relations) {
        Matrix rhs(n, n);
        for (const auto& [c, w] : r.rhs) rhs.add_scaled(m.word_action(w), c);
        rep.add(r.name, m.word_action(r.lhs) == rhs);
    }
    if (h.words_valid) rep.add("unit acts as identity", m.element_action(h.unit).is_identity());
    if (!m.ideal_basis.empty()) {
        bool closed = m.ideal_basis.cols() == n;
        for (std::size_t g = 0; closed && g < h.generators.size(); ++g) {
            Vec gv = h.basis_vector(h.generator_basis[g]);
            Matrix expect = m.ideal_basis * m.actions[g];
            for (std::size_t j = 0; closed && j < n; ++j) {
                Vec p = h.multiply(gv, m.ideal_basis.column_values(j));
                for (std::size_t i = 0; i < h.dim; ++i) closed = closed && p[i] == expect(i, j);
            }
        }
        rep.add("left ideal closure", closed);
    }
    return rep;
}

std::string module_dot(const ModuleRep& m) {
    std::ostringstream os;
    auto name = [&](std::size_t i) { return i < m.basis_names.size() ? m.basis_names[i] : "b" + std::to_string(i + 1); };
    os << "digraph module {\n";
    const auto& h = *m.algebra;
    auto sign_of = [&](std::size_t g, std::size_t i) -> char {
        const Matrix& a = m.actions[g];
        for (std::size_t k = 0; k < a.rows(); ++k)
            if (k != i && !a(k, i).is_zero()) return '?';
        return a(i, i).is_one() ? '+' : (a(i, i) == Rational(-1) ? '-' : '?');
    };
    for (std::size_t i = 0; i < m.dim(); ++i) {
        os << "  \"" << name(i) << "\"";
        if (h.generators.size() == 4 && h.grouplike[1] && h.grouplike[3])
            os << " [label=\"" << name(i) << " (" << sign_of(1, i) << "," << sign_of(3, i) << ")\"]";
        os << ";\n";
    }
    for (std::size_t g = 0; g < h.generators.size(); ++g) {
        if (h.grouplike[g]) continue;
        const char* style = h.generators[g] == "x" ? "solid" : "dashed";
        const Matrix& a = m.actions[g];
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t i = 0; i < a.rows(); ++i) {
                if (a(i, j).is_zero()) continue;
                os << "  \"" << name(j) << "\" -> \"" << name(i) << "\" [style=" << style;
                if (!a(i, j).is_one()) os << ", label=\"" << a(i, j).str() << "\"";
                os << "];\n";
            }
    }
    os << "}\n";
    return os.str();
}

std::string module_json(const ModuleRep& m) {
    nlohmann::ordered_json j;
    j["algebra"] = m.algebra->name;
    j["dim"] = m.dim();
    if (!m.basis_names.empty()) j["basis"] = m.basis_names;
    nlohmann::ordered_json gens = nlohmann::ordered_json::object();
    for (std::size_t g = 0; g < m.actions.size(); ++g) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t i = 0; i < m.actions[g].rows(); ++i) {
            std::vector<std::string> row;
            for (std::size_t k = 0; k < m.actions[g].cols(); ++k) row.push_back(m.actions[g](i, k).str());
            rows.push_back(std::move(row));
        }
        gens[m.algebra->generators[g]] = rows;
    }
    j["generators"] = gens;
    return j.dump(2);
}

}  // namespace greenring
