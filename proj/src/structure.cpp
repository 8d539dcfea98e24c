#include "greenring/structure.hpp"

#include "json.hpp"
#include <numeric>
#include <sstream>

namespace greenring {

namespace {

Vec lin(const std::vector<std::pair<Rational, Vec>>& terms, std::size_t n) {
    Vec out(n);
    for (const auto& [c, v] : terms)
        for (std::size_t i = 0; i < n; ++i) out[i] += c * v[i];
    return out;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Matrix as_column(const Vec& v) { return Matrix::column_vector(v); }

Matrix cols_of(const std::vector<Vec>& vs, std::size_t n) {
    Matrix m(n, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
    return m;
}

Vec column(const Matrix& m, std::size_t j) { return m.column_values(j); }

// dim of e_j X e_i for a subspace X given by columns
std::size_t corner_dim(const HopfAlgebra& h, const Matrix& x, const Vec& ej, const Vec& ei) {
    std::vector<Vec> vs;
    for (std::size_t k = 0; k < x.cols(); ++k) vs.push_back(h.multiply(h.multiply(ej, column(x, k)), ei));
    return vs.empty() ? 0 : rank(cols_of(vs, h.dim));
}

// group-like idempotent (1 + s1 g + s2 h + s1 s2 gh)/4
Vec sign_idem(const HopfAlgebra& h, int s1, int s2, const Rational& scale = Rational(1, 4)) {
    return lin({{scale, h.one()}, {scale * s1, h.element("g")}, {scale * s2, h.element("h")}, {scale * (s1 * s2), h.element("gh")}},
               h.dim);
}

void split_idempotent(const AlgebraPtr& h, const Vec& e, std::uint64_t seed, std::vector<Vec>& out) {
    ModuleRep m = left_ideal_module(h, e);
    auto split = find_splitting_idempotent(m, seed);
    if (split.local()) {
        out.push_back(e);
        return;
    }
    // End(Ae) acts by right multiplication with eAe; read off u = phi(e)
    auto ce = solve(m.ideal_basis, as_column(e));
    Vec u = column(m.ideal_basis * (*split.idempotent * *ce), 0);
    Vec rest = lin({{1, e}, {-1, u}}, h->dim);
    split_idempotent(h, u, seed + 1, out);
    split_idempotent(h, rest, seed + 2, out);
}

void split_central(const HopfAlgebra& h, const std::vector<Vec>& zs, const Vec& e, std::uint64_t seed, std::vector<Vec>& out) {
    Matrix V = column_basis(h.left_mult(e));
    std::vector<Vec> ez;
    std::vector<Matrix> mats;
    std::vector<Vec> flat;
    for (const auto& z : zs) {
        Vec w = h.multiply(e, z);
        if (is_zero_vec(w)) continue;
        Matrix r = *solve(V, h.left_mult(w) * V);
        Vec f(r.data().begin(), r.data().end());
        flat.push_back(f);
        if (rank(cols_of(flat, f.size())) < flat.size()) {
            flat.pop_back();
            continue;
        }
        ez.push_back(w);
        mats.push_back(std::move(r));
    }
    auto E = split_algebra(mats, seed);
    if (!E) {
        out.push_back(e);
        return;
    }
    Vec target(E->data().begin(), E->data().end());
    auto c = solve(cols_of(flat, target.size()), as_column(target));
    if (!c) throw std::logic_error("central idempotent outside the center");
    Vec f(h.dim);
    for (std::size_t k = 0; k < ez.size(); ++k)
        for (std::size_t i = 0; i < h.dim; ++i) f[i] += (*c)(k, 0) * ez[k][i];
    split_central(h, zs, f, seed + 1, out);
    split_central(h, zs, lin({{1, e}, {-1, f}}, h.dim), seed + 2, out);
}

std::string sys_name(const std::string& base, std::size_t i) { return base + std::to_string(i + 1); }

}  // namespace

IdempotentSystem named_idempotents(const AlgebraPtr& hp, const std::string& which) {
    const auto& h = *hp;
    IdempotentSystem sys;
    sys.algebra = hp;
    if (which == "e" && (h.name == "mabar" || h.name == "HH")) {
        sys.elements = {sign_idem(h, 1, 1), sign_idem(h, 1, -1), sign_idem(h, -1, 1), sign_idem(h, -1, -1)};
    } else if (which == "e" && h.name == "DH4") {
        Vec xy = h.element("xy"), two = lin({{2, h.one()}, {-1, xy}}, h.dim);
        Vec k3 = sign_idem(h, 1, -1, Rational(1, 8)), k5 = sign_idem(h, -1, 1, Rational(1, 8));
        sys.elements = {sign_idem(h, 1, 1),          sign_idem(h, -1, -1),       h.multiply(xy, k3),
                        h.multiply(two, k3), h.multiply(xy, k5), h.multiply(two, k5)};
    } else if (which == "f" && h.name == "mabar") {
        Vec gh = h.element("gh");
        sys.elements = {lin({{Rational(1, 2), h.one()}, {Rational(1, 2), gh}}, h.dim),
                        lin({{Rational(1, 2), h.one()}, {Rational(-1, 2), gh}}, h.dim)};
        sys.central = true;
    } else {
        throw std::invalid_argument("no idempotent system '" + which + "' for " + h.name);
    }
    for (std::size_t i = 0; i < sys.elements.size(); ++i) sys.names.push_back(sys_name(which, i));
    return sys;
}

ModuleRep left_ideal_module(const AlgebraPtr& h, const Vec& e) {
    ModuleRep m;
    m.algebra = h;
    m.ideal_basis = column_basis(h->right_mult(e));
    const std::size_t n = m.ideal_basis.cols();
    for (std::size_t j = 0; j < n; ++j) m.basis_names.push_back("v" + std::to_string(j + 1));
    for (std::size_t gen = 0; gen < h->generators.size(); ++gen) {
        Matrix images = h->left_mult(h->basis_vector(h->generator_basis[gen])) * m.ideal_basis;
        auto a = solve(m.ideal_basis, images);
        if (!a) throw std::logic_error("left ideal not closed under " + h->generators[gen]);
        m.actions.push_back(std::move(*a));
    }
    return m;
}

IdempotentSystem primitive_idempotents(const AlgebraPtr& h, std::uint64_t seed) {
    IdempotentSystem sys;
    sys.algebra = h;
    split_idempotent(h, h->one(), seed, sys.elements);
    for (std::size_t i = 0; i < sys.elements.size(); ++i) sys.names.push_back(sys_name("p", i));
    return sys;
}

Matrix center_basis(const HopfAlgebra& h) {
    std::vector<Matrix> blocks;
    for (std::size_t gen = 0; gen < h.generators.size(); ++gen) {
        Vec g = h.basis_vector(h.generator_basis[gen]);
        // z g - g z as a linear function of z
        blocks.push_back(h.right_mult(g) - h.left_mult(g));
    }
    return nullspace(vstack(blocks));
}

Matrix jacobson_radical(const HopfAlgebra& h) {
    std::vector<Matrix> L;
    for (std::size_t i = 0; i < h.dim; ++i) L.push_back(h.left_mult(h.basis_vector(i)));
    Matrix T(h.dim, h.dim);
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t j = i; j < h.dim; ++j) T(i, j) = T(j, i) = trace(L[i] * L[j]);
    return nullspace(T);
}

IdempotentSystem central_idempotents(const AlgebraPtr& h, std::uint64_t seed) {
    Matrix Z = center_basis(*h);
    std::vector<Vec> zs;
    for (std::size_t j = 0; j < Z.cols(); ++j) zs.push_back(column(Z, j));
    IdempotentSystem sys;
    sys.algebra = h;
    sys.central = true;
    split_central(*h, zs, h->one(), seed, sys.elements);
    for (std::size_t i = 0; i < sys.elements.size(); ++i) sys.names.push_back(sys_name("c", i));
    return sys;
}

VerificationReport verify_idempotent_system(const IdempotentSystem& sys, bool require_primitive) {
    const auto& h = *sys.algebra;
    VerificationReport rep;
    rep.suite = "idempotents(" + h.name + ")";
    const auto& E = sys.elements;
    Vec total(h.dim);
    for (std::size_t i = 0; i < E.size(); ++i) {
        rep.add_check("nonzero: " + sys.names[i], !is_zero_vec(E[i]));
        rep.add_check("idempotent: " + sys.names[i], h.multiply(E[i], E[i]) == E[i]);
        for (std::size_t j = 0; j < E.size(); ++j)
            if (i != j) rep.add_check("orthogonal: " + sys.names[i] + "·" + sys.names[j], is_zero_vec(h.multiply(E[i], E[j])));
        total = lin({{1, total}, {1, E[i]}}, h.dim);
    }
    rep.add_check("complete: sum = 1", total == h.one());
    if (sys.central) {
        Matrix Z = center_basis(h);
        for (std::size_t i = 0; i < E.size(); ++i) rep.add_check("central: " + sys.names[i], rank(hstack({Z, as_column(E[i])})) == Z.cols());
    }
    if (require_primitive) {
        if (sys.central) {
            auto blocks = central_idempotents(sys.algebra);
            for (std::size_t i = 0; i < E.size(); ++i) {
                // primitive central: e times each block idempotent is 0 or e
                std::size_t hits = 0;
                for (const auto& c : blocks.elements) {
                    Vec p = h.multiply(E[i], c);
                    if (p == E[i]) ++hits;
                    else if (!is_zero_vec(p)) hits += 2;
                }
                rep.add_check("centrally primitive: " + sys.names[i], hits == 1);
            }
        } else {
            for (std::size_t i = 0; i < E.size(); ++i) {
                bool local = find_splitting_idempotent(left_ideal_module(sys.algebra, E[i])).local();
                rep.add("primitive: " + sys.names[i], "End(Ae) local", local ? "End(Ae) local" : "End(Ae) splits", local);
            }
        }
    }
    return rep;
}

std::size_t Quiver::arrow_count() const {
    std::size_t n = 0;
    for (const auto& row : arrows) n = std::accumulate(row.begin(), row.end(), n);
    return n;
}

std::string Quiver::dot() const {
    std::ostringstream os;
    os << "digraph \"" << algebra << "\" {\n";
    for (const auto& v : vertices) os << "  \"" << v << "\";\n";
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            for (std::size_t k = 0; k < arrows[i][j]; ++k) os << "  \"" << vertices[i] << "\" -> \"" << vertices[j] << "\";\n";
    os << "}\n";
    return os.str();
}

std::string Quiver::json(int indent) const {
    nlohmann::ordered_json j;
    j["algebra"] = algebra;
    j["vertices"] = vertices;
    j["arrows"] = arrows;
    j["members"] = members;
    return j.dump(indent);
}

Quiver ext_quiver(const IdempotentSystem& sys) {
    const auto& h = *sys.algebra;
    Quiver q;
    q.algebra = h.name;
    Matrix J = jacobson_radical(h);
    std::vector<Vec> sq;
    for (std::size_t a = 0; a < J.cols(); ++a)
        for (std::size_t b = 0; b < J.cols(); ++b) sq.push_back(h.multiply(column(J, a), column(J, b)));
    Matrix J2 = sq.empty() ? Matrix(h.dim, 0) : column_basis(cols_of(sq, h.dim));

    // e_i, e_j give the same vertex iff e_i A e_j is not inside J
    Matrix A = Matrix::identity(h.dim);
    std::vector<std::size_t> rep_of;
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < sys.elements.size(); ++i) {
        std::size_t found = SIZE_MAX;
        for (std::size_t r = 0; r < reps.size() && found == SIZE_MAX; ++r) {
            const Vec &ei = sys.elements[i], &er = sys.elements[reps[r]];
            if (corner_dim(h, A, ei, er) > corner_dim(h, J, ei, er)) found = r;
        }
        if (found == SIZE_MAX) {
            found = reps.size();
            reps.push_back(i);
            q.vertices.push_back(sys.names[i]);
            q.members.push_back({});
        }
        q.members[found].push_back(sys.names[i]);
        rep_of.push_back(found);
    }
    const std::size_t n = reps.size();
    q.arrows.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec &ei = sys.elements[reps[i]], &ej = sys.elements[reps[j]];
            q.arrows[i][j] = corner_dim(h, J, ej, ei) - corner_dim(h, J2, ej, ei);
        }
    return q;
}

Quiver ext_quiver(const AlgebraPtr& h) {
    if (h->name == "mabar" || h->name == "HH" || h->name == "DH4") return ext_quiver(named_idempotents(h, "e"));
    return ext_quiver(primitive_idempotents(h));
}

}  // namespace greenring
