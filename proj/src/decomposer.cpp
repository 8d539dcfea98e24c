#include "greenring/decomposer.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "greenring/polynomial.hpp"
#include "json.hpp"

namespace greenring {

namespace {

using Rng = std::mt19937_64;

Rational random_coef(Rng& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    return d(rng);
}

const std::vector<Signs> kAllSigns = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};


bool is_diagonal(const Matrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j && !a(i, j).is_zero()) return false;
    return true;
}

bool has_weights(const HopfAlgebra& h) {
    return std::count(h.generators.begin(), h.generators.end(), "g") &&
           std::count(h.generators.begin(), h.generators.end(), "h");
}

// Module rewritten in a basis where g and h are diagonal.
struct WeightView {
    ModuleRep mod;
    std::vector<Signs> w;
    Matrix q, qinv;  // original = q * new
    bool trivial = true;
};

WeightView weight_view(const ModuleRep& m) {
    WeightView v;
    const Matrix& g = m.action("g");
    const Matrix& h = m.action("h");
    const std::size_t n = m.dim();
    if (is_diagonal(g) && is_diagonal(h)) {
        v.mod = m;
        for (std::size_t i = 0; i < n; ++i) v.w.push_back({g(i, i).sign(), h(i, i).sign()});
        return v;
    }
    std::vector<Matrix> parts;
    Matrix id = Matrix::identity(n);
    for (Signs s : kAllSigns) {
        Matrix p = (id + g * Rational(s.first)) * (id + h * Rational(s.second));
        Matrix cb = column_basis(p);
        for (std::size_t j = 0; j < cb.cols(); ++j) v.w.push_back(s);
        if (cb.cols()) parts.push_back(cb);
    }
    v.q = hstack(parts);
    auto inv = inverse(v.q);
    if (!inv) throw std::logic_error("g and h do not act diagonalizably");
    v.qinv = std::move(*inv);
    v.trivial = false;
    v.mod = m;
    for (auto& a : v.mod.actions) a = v.qinv * a * v.q;
    v.mod.basis_names.clear();
    v.mod.ideal_basis = Matrix();
    return v;
}

Matrix to_original(const WeightView& v, const Matrix& phi_new_cols, const WeightView* src) {
    // phi : src-new -> v-new ; returns phi : src-original -> v-original
    Matrix out = v.trivial ? phi_new_cols : v.q * phi_new_cols;
    if (src && !src->trivial) out = out * src->qinv;
    return out;
}

std::optional<Matrix> try_split(const Matrix& phi) {
    const std::size_t n = phi.rows();
    Polynomial p = char_poly(phi).monic();
    auto fs = squarefree_split(p);
    if (fs.size() < 2) return std::nullopt;
    Polynomial f = pow(fs[0].poly, fs[0].multiplicity);
    Polynomial g = divmod(p, f).first;
    auto eg = extended_gcd(f, g);
    Polynomial proj = divmod(eg.t * g, p).second;
    Matrix e = proj.eval(phi);
    if (!(e * e == e) || e.is_zero() || e == Matrix::identity(n)) return std::nullopt;
    return e;
}

Matrix random_combination(const std::vector<Matrix>& basis, Rng& rng) {
    Matrix out(basis[0].rows(), basis[0].cols());
    for (const auto& b : basis) out.add_scaled(b, random_coef(rng));
    return out;
}

// ---------- projective stripping ----------

struct ProjectiveData {
    Signs s;
    Vec e, z;
    std::size_t dim;
    std::size_t z_rank;  // rank of z on its own projective
};

const std::vector<ProjectiveData>& projective_data(const AlgebraPtr& h) {
    static std::mutex mu;
    static std::map<std::string, std::vector<ProjectiveData>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(h->name);
    if (it != cache.end()) return it->second;
    std::vector<ProjectiveData> out;
    for (Signs s : kAllSigns) {
        ProjectiveData d;
        d.s = s;
        d.e = primitive_idempotent(*h, s);
        bool simple_projective = h->name == "DH4" && s.first != s.second;
        d.z = simple_projective ? d.e : h->multiply(h->element("xy"), d.e);
        auto p = projective(h, s);
        d.dim = p.dim();
        d.z_rank = rank(p.element_action(d.z));
        out.push_back(std::move(d));
    }
    return cache.emplace(h->name, std::move(out)).first->second;
}

struct Stripped {
    std::vector<IndecLabel> projectives;
    ModuleRep rest;  // weight basis
    std::vector<Signs> w;
};

Stripped strip_projectives(const ModuleRep& mw, const std::vector<Signs>& w) {
    Stripped out;
    const auto& h = mw.algebra;
    const std::size_t n = mw.dim();
    std::vector<Matrix> gens;
    std::size_t expect = 0;
    for (const auto& d : projective_data(h)) {
        Matrix z = mw.element_action(d.z);
        std::size_t rz = rank(z);
        if (rz == 0) continue;
        if (rz % d.z_rank) throw IdentificationFailure("socle rank not a multiple of the projective's");
        std::size_t k = rz / d.z_rank;
        for (std::size_t i = 0; i < k; ++i) out.projectives.push_back(IndecLabel::projective(d.s.first, d.s.second));
        expect += k * d.dim;
        Matrix e = mw.element_action(d.e);
        for (std::size_t c : pivot_columns(z)) gens.push_back(e.column(c));
    }
    if (gens.empty()) {
        out.rest = mw;
        out.w = w;
        return out;
    }
    std::vector<Matrix> cols;
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < h->dim; ++b) actions.push_back(mw.basis_action(b));
    for (const auto& v : gens)
        for (const auto& a : actions) cols.push_back(a * v);
    Matrix sub = column_basis(hstack(cols));
    if (sub.cols() != expect) throw IdentificationFailure("projective summands do not span the expected dimension");
    auto comp = complement_indices(sub);
    Matrix full = hstack({sub, Matrix::identity(n).select_columns(comp)});
    std::vector<Matrix> rhs;
    for (const auto& a : mw.actions) rhs.push_back(a.select_columns(comp));
    auto coords = solve(full, hstack(rhs));
    if (!coords) throw std::logic_error("quotient basis is not a basis");
    std::vector<std::size_t> lower(comp.size()), cols_range(comp.size());
    std::iota(lower.begin(), lower.end(), sub.cols());
    out.rest.algebra = h;
    for (std::size_t g = 0; g < mw.actions.size(); ++g) {
        std::iota(cols_range.begin(), cols_range.end(), g * comp.size());
        out.rest.actions.push_back(coords->submatrix(lower, cols_range));
    }
    for (std::size_t c : comp) out.w.push_back(w[c]);
    return out;
}

// ---------- radical-square-zero part as a bipartite quiver representation ----------

struct QuiverRep {
    std::vector<Signs> tw, bw;  // top and bottom weights
    Matrix x, y;                // bottom x top
    std::size_t t() const { return tw.size(); }
    std::size_t b() const { return bw.size(); }
};

QuiverRep to_quiver(const ModuleRep& m, const std::vector<Signs>& w) {
    const Matrix& X = m.action("x");
    const Matrix& Y = m.action("y");
    if (!(X * Y).is_zero() || !(Y * X).is_zero())
        throw IdentificationFailure("non-projective part has Loewy length above 2");
    const std::size_t n = m.dim();
    Matrix im = hstack({X, Y});
    std::vector<Matrix> bottom;
    std::vector<std::size_t> top;
    QuiverRep q;
    for (Signs s : kAllSigns) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] == s) rows.push_back(i);
        if (rows.empty()) continue;
        Matrix bw = column_basis(im.select_rows(rows));
        for (std::size_t j = 0; j < bw.cols(); ++j) {
            Matrix v(n, 1);
            for (std::size_t k = 0; k < rows.size(); ++k) v(rows[k], 0) = bw(k, j);
            bottom.push_back(v);
            q.bw.push_back(s);
        }
        for (std::size_t k : complement_indices(bw)) {
            top.push_back(rows[k]);
            q.tw.push_back(s);
        }
    }
    Matrix bfull = bottom.empty() ? Matrix(n, 0) : hstack(bottom);
    Matrix et = Matrix::identity(n).select_columns(top);
    if (bottom.empty()) {
        q.x = Matrix(0, top.size());
        q.y = Matrix(0, top.size());
        return q;
    }
    auto c = solve(bfull, hstack({X * et, Y * et}));
    if (!c) throw std::logic_error("radical basis does not span the image");
    std::vector<std::size_t> rows(bottom.size()), left(top.size()), right(top.size());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), top.size());
    q.x = c->submatrix(rows, left);
    q.y = c->submatrix(rows, right);
    return q;
}

ModuleRep quiver_module(const AlgebraPtr& h, const QuiverRep& q) {
    const std::size_t t = q.t(), n = q.t() + q.b();
    ModuleRep m;
    m.algebra = h;
    m.actions.assign(h->generators.size(), Matrix(n, n));
    for (std::size_t i = 0; i < n; ++i) {
        Signs s = i < t ? q.tw[i] : q.bw[i - t];
        m.actions[h->generator_id("g")](i, i) = s.first;
        m.actions[h->generator_id("h")](i, i) = s.second;
    }
    Matrix& X = m.actions[h->generator_id("x")];
    Matrix& Y = m.actions[h->generator_id("y")];
    for (std::size_t i = 0; i < q.b(); ++i)
        for (std::size_t j = 0; j < t; ++j) {
            X(t + i, j) = q.x(i, j);
            Y(t + i, j) = q.y(i, j);
        }
    return m;
}

QuiverRep sub_rep(const QuiverRep& q, const std::vector<std::size_t>& top, const std::vector<std::size_t>& bot) {
    QuiverRep s;
    for (auto i : top) s.tw.push_back(q.tw[i]);
    for (auto i : bot) s.bw.push_back(q.bw[i]);
    s.x = q.x.submatrix(bot, top);
    s.y = q.y.submatrix(bot, top);
    return s;
}

// Subrepresentation on the column spaces of (et, eb), given in the rep's coordinates.
QuiverRep image_rep(const QuiverRep& q, const Matrix& et, const Matrix& eb) {
    QuiverRep s;
    auto tp = pivot_columns(et);
    auto bp = pivot_columns(eb);
    Matrix tb = et.select_columns(tp), bb = eb.select_columns(bp);
    for (auto i : tp) s.tw.push_back(q.tw[i]);
    for (auto i : bp) s.bw.push_back(q.bw[i]);
    if (bp.empty()) {
        s.x = Matrix(0, tp.size());
        s.y = Matrix(0, tp.size());
        return s;
    }
    if (tp.empty()) {
        s.x = Matrix(bp.size(), 0);
        s.y = Matrix(bp.size(), 0);
        return s;
    }
    auto c = solve(bb, hstack({q.x * tb, q.y * tb}));
    if (!c) throw std::logic_error("idempotent image is not a subrepresentation");
    std::vector<std::size_t> rows(bp.size()), left(tp.size()), right(tp.size());
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), tp.size());
    s.x = c->submatrix(rows, left);
    s.y = c->submatrix(rows, right);
    return s;
}

std::vector<Matrix> rep_endomorphisms(const QuiverRep& q) {
    const std::size_t t = q.t(), b = q.b(), n = t + b;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;  // over block-diagonal n x n
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            bool top_i = i < t, top_j = j < t;
            if (top_i != top_j) continue;
            Signs wi = top_i ? q.tw[i] : q.bw[i - t];
            Signs wj = top_j ? q.tw[j] : q.bw[j - t];
            if (wi != wj) continue;
            var[{i, j}] = pos.size();
            pos.push_back({i, j});
        }
    std::vector<SparseRow> rows;
    for (const Matrix* a : {&q.x, &q.y}) {
        // phi_B a - a phi_T = 0
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                std::map<std::size_t, Rational> row;
                for (std::size_t k = 0; k < b; ++k) {
                    if ((*a)(k, j).is_zero()) continue;
                    auto it = var.find({t + i, t + k});
                    if (it != var.end()) row[it->second] += (*a)(k, j);
                }
                for (std::size_t k = 0; k < t; ++k) {
                    if ((*a)(i, k).is_zero()) continue;
                    auto it = var.find({k, j});
                    if (it != var.end()) row[it->second] -= (*a)(i, k);
                }
                SparseRow r;
                for (auto& [k, v] : row)
                    if (!v.is_zero()) r.emplace_back(k, v);
                if (!r.empty()) rows.push_back(std::move(r));
            }
    }
    Matrix ns = sparse_nullspace(std::move(rows), pos.size());
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < ns.cols(); ++c) {
        Matrix phi(n, n);
        for (std::size_t k = 0; k < pos.size(); ++k) phi(pos[k].first, pos[k].second) = ns(k, c);
        out.push_back(std::move(phi));
    }
    return out;
}

bool nilpotent(const Matrix& a) {
    Polynomial p = char_poly(a);
    return p == Polynomial::monomial(1, a.rows());
}

// eta with char_poly(a) = (t - eta)^n, if any
std::optional<Rational> single_eigenvalue(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return std::nullopt;
    Rational eta = trace(a) / Rational(std::int64_t(n));
    if (char_poly(a) == pow(Polynomial::linear(eta), unsigned(n))) return eta;
    return std::nullopt;
}

std::map<Signs, std::size_t> weight_counts(const std::vector<Signs>& w) {
    std::map<Signs, std::size_t> c;
    for (auto s : w) c[s]++;
    return c;
}

std::map<Signs, std::size_t> module_weight_counts(const ModuleRep& m) { return weight_counts(weight_view(m).w); }

struct Shape {
    Family family;
    int rank;
    Rational eta;
};

Shape rep_shape(const QuiverRep& q, bool hh) {
    const std::size_t t = q.t(), b = q.b();
    if (b == 0 && t == 1) return {Family::S, 0, {}};
    if (b == t + 1) return {Family::M, int(t), {}};
    if (t == b + 1) return {Family::W, int(b), {}};
    if (t == b && t > 0) {
        auto xi = inverse(q.x);
        if (xi) {
            Matrix k = *xi * q.y;
            if (nilpotent(k)) return {Family::N, int(t), {}};
            Matrix kk = hh ? k * k : k;
            auto eta = single_eigenvalue(kk);
            if (eta && !eta->is_zero() && (!hh || t % 2 == 0)) return {Family::C, int(hh ? t / 2 : t), *eta};
        }
        auto yi = inverse(q.y);
        if (yi && nilpotent(*yi * q.x)) return {Family::Nprime, int(t), {}};
    }
    throw IdentificationFailure("no canonical family matches a summand with top " + std::to_string(t) + ", radical " +
                                std::to_string(b));
}

IndecLabel identify_rep(const AlgebraPtr& h, const QuiverRep& q, const DecomposeOptions& opt) {
    const bool hh = h->name == "HH";
    Shape sh = rep_shape(q, hh);
    std::vector<IndecLabel> candidates;
    for (Signs s : kAllSigns) {
        IndecLabel l{sh.family, sh.rank, s.first, s.second, sh.eta};
        l = canonicalize(l, h->name);
        if (std::find(candidates.begin(), candidates.end(), l) == candidates.end()) candidates.push_back(l);
    }
    ModuleRep mine = quiver_module(h, q);
    auto mine_w = module_weight_counts(mine);
    std::vector<std::pair<IndecLabel, ModuleRep>> viable;
    for (const auto& l : candidates) {
        ModuleRep c;
        try {
            c = make_module(h, l);
        } catch (const std::invalid_argument&) {
            continue;
        }
        if (module_weight_counts(c) == mine_w) viable.emplace_back(l, std::move(c));
    }
    if (viable.size() == 1 && !opt.certify) return viable[0].first;
    for (const auto& [l, c] : viable)
        if (iso_check(mine, c, opt.seed)) return l;
    throw IdentificationFailure("summand of family " + family_name(sh.family) + " matches no sign twist");
}

void split_rep(const AlgebraPtr& h, const QuiverRep& q, const DecomposeOptions& opt, Rng& rng,
               std::vector<IndecLabel>& out);

// Simple-top summands, then support components, then idempotents.
void decompose_rep(const AlgebraPtr& h, const QuiverRep& q, const DecomposeOptions& opt, Rng& rng,
                   std::vector<IndecLabel>& out) {
    if (q.t() + q.b() == 0) return;
    // top vectors killed by x and y split off as simples
    std::vector<std::size_t> keep_top;
    Matrix both = vstack({q.x, q.y});
    for (Signs s : kAllSigns) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < q.t(); ++i)
            if (q.tw[i] == s) idx.push_back(i);
        if (idx.empty()) continue;
        Matrix ker = nullspace(both.select_columns(idx));
        for (std::size_t k = 0; k < ker.cols(); ++k) out.push_back(IndecLabel::simple(s.first, s.second));
        for (std::size_t k : complement_indices(ker)) keep_top.push_back(idx[k]);
    }
    std::sort(keep_top.begin(), keep_top.end());
    std::vector<std::size_t> all_bot(q.b());
    std::iota(all_bot.begin(), all_bot.end(), 0);
    QuiverRep r = keep_top.size() == q.t() ? q : sub_rep(q, keep_top, all_bot);
    if (r.t() == 0) {
        if (r.b()) throw std::logic_error("radical without top");
        return;
    }

    // connected components of the support graph
    const std::size_t t = r.t(), n = r.t() + r.b();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t i = 0; i < r.b(); ++i)
        for (std::size_t j = 0; j < t; ++j)
            if (!r.x(i, j).is_zero() || !r.y(i, j).is_zero()) parent[find(t + i)] = find(j);
    std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> comps;
    for (std::size_t i = 0; i < n; ++i) {
        auto& c = comps[find(i)];
        (i < t ? c.first : c.second).push_back(i < t ? i : i - t);
    }
    if (comps.size() == 1) {
        split_rep(h, r, opt, rng, out);
        return;
    }
    for (const auto& [root, c] : comps) split_rep(h, sub_rep(r, c.first, c.second), opt, rng, out);
}

void split_rep(const AlgebraPtr& h, const QuiverRep& q, const DecomposeOptions& opt, Rng& rng,
               std::vector<IndecLabel>& out) {
    if (q.b() == 0 && q.t() == 1) {
        out.push_back(IndecLabel::simple(q.tw[0].first, q.tw[0].second));
        return;
    }
    auto basis = rep_endomorphisms(q);
    auto e = split_algebra(basis, rng());
    if (!e) {
        out.push_back(identify_rep(h, q, opt));
        return;
    }
    const std::size_t t = q.t(), n = q.t() + q.b();
    std::vector<std::size_t> ti(t), bi(q.b());
    std::iota(ti.begin(), ti.end(), 0);
    std::iota(bi.begin(), bi.end(), t);
    Matrix et = e->submatrix(ti, ti), eb = e->submatrix(bi, bi);
    Matrix ft = Matrix::identity(t) - et, fb = Matrix::identity(n - t) - eb;
    decompose_rep(h, image_rep(q, et, eb), opt, rng, out);
    decompose_rep(h, image_rep(q, ft, fb), opt, rng, out);
}

void decompose_generic(const ModuleRep& m, const DecomposeOptions& opt, Rng& rng, std::vector<IndecLabel>& out) {
    if (m.dim() == 0) return;
    auto basis = endomorphism_basis(m);
    auto e = split_algebra(basis, rng());
    if (!e) {
        out.push_back(identify(m, true));
        return;
    }
    decompose_generic(restrict_module(m, column_basis(*e)), opt, rng, out);
    decompose_generic(restrict_module(m, column_basis(Matrix::identity(m.dim()) - *e)), opt, rng, out);
}

}  // namespace

std::optional<Matrix> split_algebra(const std::vector<Matrix>& basis, std::uint64_t seed, unsigned retries) {
    if (basis.empty()) return std::nullopt;
    const std::size_t k = basis.size(), n = basis[0].rows();
    if (n <= 1) return std::nullopt;
    for (const auto& b : basis)
        if (auto e = try_split(b)) return e;
    if (k <= 24)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (auto e = try_split(basis[i] + basis[j])) return e;
    Rng rng(seed);
    for (unsigned r = 0; r < retries; ++r)
        if (auto e = try_split(random_combination(basis, rng))) return e;

    // radical of the algebra = kernel of the trace form (characteristic 0)
    std::vector<std::vector<Matrix>> prod(k, std::vector<Matrix>(k));
    Matrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            prod[i][j] = basis[i] * basis[j];
            gram(i, j) = trace(prod[i][j]);
        }
    if (rank(gram) <= 1) return std::nullopt;
    // a singular element outside the radical times a partner with nonzero trace is
    // neither nilpotent nor invertible
    for (std::size_t i = 0; i < k; ++i) {
        if (rank(basis[i]) == n) continue;
        for (std::size_t j = 0; j < k; ++j)
            if (!gram(i, j).is_zero())
                if (auto e = try_split(prod[i][j])) return e;
    }
    for (std::size_t i = 0; i < k; ++i) {
        auto inv = inverse(basis[i]);
        if (!inv) continue;
        for (std::size_t j = 0; j < k; ++j)
            if (auto e = try_split(*inv * basis[j])) return e;
    }
    throw NonSplitEndo("semisimple quotient of End has dimension " + std::to_string(rank(gram)) +
                       " but no rational idempotent was found");
}

std::vector<Matrix> hom_basis(const ModuleRep& m, const ModuleRep& n) {
    const auto& h = *m.algebra;
    const std::size_t dm = m.dim(), dn = n.dim();
    if (dm == 0 || dn == 0) return {};
    const bool weighted = has_weights(h);
    WeightView vm, vn;
    if (weighted) {
        vm = weight_view(m);
        vn = weight_view(n);
    } else {
        vm.mod = m;
        vn.mod = n;
        vm.w.assign(dm, {1, 1});
        vn.w.assign(dn, {1, 1});
    }
    std::vector<std::vector<std::size_t>> var(dn, std::vector<std::size_t>(dm, SIZE_MAX));
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = 0; i < dn; ++i)
        for (std::size_t j = 0; j < dm; ++j)
            if (vn.w[i] == vm.w[j]) {
                var[i][j] = pos.size();
                pos.push_back({i, j});
            }
    std::vector<SparseRow> rows;
    for (std::size_t g = 0; g < h.generators.size(); ++g) {
        if (weighted && (h.generators[g] == "g" || h.generators[g] == "h")) continue;
        const Matrix& an = vn.mod.actions[g];
        const Matrix& am = vm.mod.actions[g];
        std::vector<std::vector<std::pair<std::size_t, Rational>>> an_rows(dn), am_cols(dm);
        for (std::size_t i = 0; i < dn; ++i)
            for (std::size_t k = 0; k < dn; ++k)
                if (!an(i, k).is_zero()) an_rows[i].emplace_back(k, an(i, k));
        for (std::size_t k = 0; k < dm; ++k)
            for (std::size_t j = 0; j < dm; ++j)
                if (!am(k, j).is_zero()) am_cols[j].emplace_back(k, am(k, j));
        for (std::size_t i = 0; i < dn; ++i)
            for (std::size_t j = 0; j < dm; ++j) {
                SparseRow r;
                for (const auto& [k, v] : an_rows[i])
                    if (var[k][j] != SIZE_MAX) r.emplace_back(var[k][j], v);
                for (const auto& [k, v] : am_cols[j])
                    if (var[i][k] != SIZE_MAX) r.emplace_back(var[i][k], -v);
                if (r.empty()) continue;
                std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                SparseRow merged;
                for (auto& [c, v] : r) {
                    if (!merged.empty() && merged.back().first == c)
                        merged.back().second += v;
                    else
                        merged.emplace_back(c, v);
                }
                std::erase_if(merged, [](const auto& p) { return p.second.is_zero(); });
                if (!merged.empty()) rows.push_back(std::move(merged));
            }
    }
    Matrix ns = sparse_nullspace(std::move(rows), pos.size());
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < ns.cols(); ++c) {
        Matrix phi(dn, dm);
        for (std::size_t k = 0; k < pos.size(); ++k)
            if (!ns(k, c).is_zero()) phi(pos[k].first, pos[k].second) = ns(k, c);
        out.push_back(weighted ? to_original(vn, phi, &vm) : phi);
    }
    return out;
}

std::vector<Matrix> endomorphism_basis(const ModuleRep& m) { return hom_basis(m, m); }

SplitResult find_splitting_idempotent(const ModuleRep& m, std::uint64_t seed) {
    return {split_algebra(endomorphism_basis(m), seed)};
}

ModuleRep restrict_module(const ModuleRep& m, const Matrix& basis) {
    ModuleRep out;
    out.algebra = m.algebra;
    if (basis.cols() == 0) {
        out.actions.assign(m.actions.size(), Matrix());
        return out;
    }
    for (const auto& a : m.actions) {
        auto c = solve(basis, a * basis);
        if (!c) throw std::invalid_argument("subspace is not a submodule");
        out.actions.push_back(std::move(*c));
    }
    return out;
}

std::map<Signs, std::size_t> projective_multiplicities(const ModuleRep& m) {
    std::map<Signs, std::size_t> out;
    for (const auto& d : projective_data(m.algebra)) {
        std::size_t r = rank(m.element_action(d.z));
        if (r) out[d.s] = r / d.z_rank;
    }
    return out;
}

Decomposition decompose(const ModuleRep& m, const DecomposeOptions& opt) {
    Decomposition d;
    d.input_dim = m.dim();
    d.seed = opt.seed;
    Rng rng(opt.seed);
    if (m.dim() == 0) return d;
    if (!opt.strip_projectives) {
        decompose_generic(m, opt, rng, d.summands);
    } else {
        WeightView v = weight_view(m);
        Stripped s = strip_projectives(v.mod, v.w);
        d.summands = s.projectives;
        if (s.rest.dim()) decompose_rep(m.algebra, to_quiver(s.rest, s.w), opt, rng, d.summands);
    }
    std::size_t total = 0;
    for (const auto& l : d.summands) total += label_dim(l, m.algebra->name);
    if (total != d.input_dim) throw IdentificationFailure("summand dimensions do not add up");
    std::sort(d.summands.begin(), d.summands.end());
    return d;
}

IndecLabel identify(const ModuleRep& m, bool certified_indecomposable) {
    DecomposeOptions opt;
    WeightView v = weight_view(m);
    Stripped s = strip_projectives(v.mod, v.w);
    std::vector<IndecLabel> out = s.projectives;
    if (s.rest.dim()) {
        QuiverRep q = to_quiver(s.rest, s.w);
        if (certified_indecomposable && s.projectives.empty()) {
            if (q.b() == 0 && q.t() == 1)
                out.push_back(IndecLabel::simple(q.tw[0].first, q.tw[0].second));
            else
                out.push_back(identify_rep(m.algebra, q, opt));
        } else {
            Rng rng(opt.seed);
            decompose_rep(m.algebra, q, opt, rng, out);
        }
    }
    if (out.size() != 1) throw IdentificationFailure("module is not indecomposable");
    return out[0];
}

std::optional<Matrix> find_isomorphism(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed) {
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.algebra->name != n.algebra->name) return std::nullopt;
    if (m.dim() == 0) return Matrix();
    if (has_weights(*m.algebra)) {
        if (module_weight_counts(m) != module_weight_counts(n)) return std::nullopt;
        for (const char* g : {"x", "y"})
            if (rank(m.action(g)) != rank(n.action(g))) return std::nullopt;
    }
    auto hom = hom_basis(m, n);
    if (hom.empty()) return std::nullopt;
    const std::size_t d = m.dim();
    for (const auto& f : hom)
        if (rank(f) == d) return f;
    Rng rng(seed);
    for (int r = 0; r < 16; ++r) {
        Matrix f = random_combination(hom, rng);
        if (rank(f) == d) return f;
    }
    return std::nullopt;
}

bool iso_check(const ModuleRep& m, const ModuleRep& n, std::uint64_t seed) {
    return find_isomorphism(m, n, seed).has_value();
}

Fingerprint fingerprint(const ModuleRep& m) {
    Fingerprint f;
    f.dim = m.dim();
    WeightView v = weight_view(m);
    f.sign_multiplicities = weight_counts(v.w);
    Matrix X = m.action("x"), Y = m.action("y");
    f.x_rank = rank(X);
    f.y_rank = rank(Y);
    if (m.algebra->name == "DH4") {
        // radical generators x(1+gh), y(1+gh)
        Matrix f1 = (Matrix::identity(f.dim) + m.action("g") * m.action("h")) * Rational(1, 2);
        X = X * f1;
        Y = Y * f1;
    }
    auto close = [&](Matrix s) {
        for (;;) {
            std::vector<Matrix> parts = {s};
            for (const auto& a : m.actions) parts.push_back(a * s);
            Matrix next = column_basis(hstack(parts));
            if (next.cols() == s.cols()) return next;
            s = next;
        }
    };
    Matrix layer = Matrix::identity(f.dim);
    while (layer.cols() > 0) {
        ++f.loewy_length;
        Matrix next = column_basis(hstack({X * layer, Y * layer}));
        layer = next.cols() ? close(next) : next;
        if (f.loewy_length == 1) f.top_dim = f.dim - layer.cols();
    }
    f.socle_dim = nullspace(vstack({X, Y})).cols();
    if (f.dim % 2 == 0 && f.dim > 0 && f.top_dim * 2 == f.dim && (X * Y).is_zero() && (Y * X).is_zero()) {
        try {
            QuiverRep q = to_quiver(v.mod, v.w);
            Shape sh = rep_shape(q, m.algebra->name == "HH");
            if (sh.family == Family::C) f.band_eta = sh.eta;
        } catch (const IdentificationFailure&) {
        }
    }
    return f;
}

std::map<IndecLabel, int> Decomposition::multiplicities() const {
    std::map<IndecLabel, int> out;
    for (const auto& l : summands) out[l]++;
    return out;
}

std::string Decomposition::str() const {
    if (summands.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, k] : multiplicities()) {
        if (!first) os << " + ";
        first = false;
        if (k > 1) os << k << "·";
        os << l.str();
    }
    return os.str();
}

std::string Decomposition::json(const std::string& input) const {
    nlohmann::ordered_json j;
    j["input"] = input;
    j["input_dim"] = input_dim;
    j["seed"] = seed;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& l : summands) {
        nlohmann::ordered_json s;
        s["family"] = family_name(l.family);
        if (l.has_rank()) s["rank"] = l.rank;
        s["signs"] = std::string{l.s1 > 0 ? '+' : '-', l.s2 > 0 ? '+' : '-'};
        if (l.family == Family::C) s["eta"] = l.eta.str();
        s["label"] = l.str();
        arr.push_back(s);
    }
    j["summands"] = arr;
    return j.dump(2);
}

AliasTable build_alias_table(const std::string& algebra, int max_rank) {
    AliasTable t;
    t.algebra = algebra;
    auto h = build_algebra(algebra);
    const std::vector<Rational> etas = {1, 2, -1};
    for (Family f : {Family::S, Family::P, Family::M, Family::W, Family::N, Family::Nprime, Family::C}) {
        std::vector<IndecLabel> probes;
        if (f == Family::S || f == Family::P)
            probes.push_back({f, 0, 1, 1, {}});
        else
            for (int r = 1; r <= max_rank; ++r) {
                if (f == Family::C)
                    for (const auto& eta : etas) probes.push_back(IndecLabel::band(r, eta));
                else
                    probes.push_back(IndecLabel::string(f, r));
            }
        std::vector<Signs> stab = {{1, 1}};
        for (Signs s : kAllSigns) {
            if (s == Signs{1, 1}) continue;
            bool all = true, valid = true;
            for (const auto& l : probes) {
                ModuleRep a = make_module(h, l), b;
                try {
                    b = make_module(h, l.twisted(s.first, s.second));
                } catch (const std::invalid_argument&) {
                    valid = false;
                    break;
                }
                ++t.checks;
                if (!iso_check(a, b)) {
                    all = false;
                    break;
                }
            }
            if (valid && all) stab.push_back(s);
        }
        t.stabilizers[f] = stab;
    }
    return t;
}

const AliasTable& alias_table(const std::string& algebra) {
    static std::mutex mu;
    static std::map<std::string, AliasTable> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(algebra);
    if (it == cache.end()) it = cache.emplace(algebra, build_alias_table(algebra)).first;
    return it->second;
}

IndecLabel canonicalize(const IndecLabel& label, const std::string& algebra) {
    const auto& stab = alias_table(algebra).stabilizers.at(label.family);
    IndecLabel best = label;
    for (Signs s : stab) best = std::min(best, label.twisted(s.first, s.second));
    return best;
}

}  // namespace greenring
