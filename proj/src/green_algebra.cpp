#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>

#include "greenring/green.hpp"

namespace greenring {

namespace {

using Vec = std::vector<Rational>;
using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Finite-dimensional algebra on a list of labels, multiplication from the bridge.
struct LabelAlgebra {
    std::string alg;
    std::vector<IndecLabel> basis;
    std::map<IndecLabel, std::size_t> index;
    std::vector<std::vector<Vec>> mult;

    std::size_t dim() const { return basis.size(); }
    Vec unit() const { return coords(GreenElement::one(alg)); }
    Vec of(const IndecLabel& l) const { return coords(GreenElement::basis(alg, l)); }
    Vec coords(const GreenElement& e) const {
        Vec v(dim());
        for (const auto& [l, c] : e.terms) {
            auto it = index.find(l);
            if (it == index.end()) throw std::logic_error("label " + l.str() + " outside the algebra");
            v[it->second] = c;
        }
        return v;
    }
    GreenElement element(const Vec& v) const {
        GreenElement e(alg);
        for (std::size_t i = 0; i < dim(); ++i) e.add(basis[i], v[i]);
        return e;
    }
    Vec mul(const Vec& a, const Vec& b) const {
        Vec out(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (b[j].is_zero()) continue;
                Rational c = a[i] * b[j];
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!mult[i][j][k].is_zero()) out[k] += c * mult[i][j][k];
            }
        }
        return out;
    }
    Matrix left_mult(const Vec& a) const {
        Matrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            Vec e(dim());
            e[j] = 1;
            Vec col = mul(a, e);
            for (std::size_t i = 0; i < dim(); ++i) m(i, j) = col[i];
        }
        return m;
    }
};

Vec vadd(Vec a, const Vec& b, const Rational& c = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    return a;
}
Vec vscale(Vec a, const Rational& c) {
    for (auto& x : a) x *= c;
    return a;
}
bool vzero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix columns(const std::vector<Vec>& vs, std::size_t n) {
    Matrix m(n, vs.size());
    for (std::size_t j = 0; j < vs.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = vs[j][i];
    return m;
}

bool in_span(const Matrix& span, const Vec& v) {
    if (vzero(v)) return true;
    if (span.cols() == 0) return false;
    return rank(hstack({span, columns({v}, v.size())})) == rank(span);
}

// Echelon basis of a subspace of R(H), keyed by labels.
struct Subspace {
    std::vector<std::pair<IndecLabel, GreenElement>> rows;  // pivot, element with pivot coefficient 1

    GreenElement reduce(GreenElement x) const {
        for (const auto& [p, e] : rows) {
            Rational c = x.coefficient(p);
            if (!c.is_zero()) x -= e * c;
        }
        return x;
    }
    bool contains(const GreenElement& x) const { return reduce(x).is_zero(); }
    // true when x enlarged the space
    bool insert(const GreenElement& x) {
        GreenElement r = reduce(x);
        if (r.is_zero()) return false;
        auto [p, c] = *r.terms.begin();
        rows.push_back({p, r * c.inverse()});
        return true;
    }
};

// Two-sided ideal of St(H) generated by `gens`, closed under multiplication by `mults`.
Subspace stable_ideal(const std::vector<GreenElement>& gens, const std::vector<GreenElement>& mults) {
    Subspace sp;
    std::deque<GreenElement> todo;
    for (const auto& g : gens) {
        auto s = stable_quotient(g);
        if (sp.insert(s)) todo.push_back(s);
    }
    while (!todo.empty()) {
        GreenElement e = todo.front();
        todo.pop_front();
        for (const auto& m : mults)
            for (const auto& p : {multiply_closed_form(m, e), multiply_closed_form(e, m)}) {
                auto s = stable_quotient(p);
                if (sp.insert(s)) todo.push_back(s);
            }
    }
    return sp;
}

struct GroupRing {
    std::string alg;
    GreenElement one() const { return GreenElement::one(alg); }
    GreenElement S() const { return GreenElement::basis(alg, IndecLabel::simple(-1, -1)); }
    GreenElement Sm() const { return GreenElement::basis(alg, IndecLabel::simple(1, -1)); }
    GreenElement L(const IndecLabel& l) const { return GreenElement::basis(alg, l); }
    GreenElement N(int r) const { return r <= 0 ? GreenElement(alg) : L(IndecLabel::string(Family::N, r)); }
    GreenElement Np(int r) const { return r <= 0 ? GreenElement(alg) : L(IndecLabel::string(Family::Nprime, r)); }
    GreenElement C(int r, const Rational& e) const { return r <= 0 ? GreenElement(alg) : L(IndecLabel::band(r, e)); }
    GreenElement P() const { return L(IndecLabel::projective(1, 1)); }
    GreenElement mul(const GreenElement& a, const GreenElement& b) const { return multiply_closed_form(a, b); }
};

}  // namespace

// ---------- projective class algebra ----------

ProjectiveClassAlgebra projective_class_algebra(const std::string& alg, std::uint64_t seed) {
    auto t0 = Clock::now();
    ProjectiveClassAlgebra out;
    out.algebra = alg;
    auto& rep = out.report;
    rep.suite = "proj-class(" + alg + ")";
    LabelAlgebra A{alg, {}, {}, {}};
    for (Signs s : std::vector<Signs>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
        if (alg != "DH4" || s.first == s.second) A.basis.push_back(IndecLabel::simple(s.first, s.second));
    for (Signs s : std::vector<Signs>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) A.basis.push_back(IndecLabel::projective(s.first, s.second));
    for (std::size_t i = 0; i < A.dim(); ++i) A.index[A.basis[i]] = i;
    A.mult.assign(A.dim(), std::vector<Vec>(A.dim()));
    bool closed = true;
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            auto g = bruteforce_product(alg, A.basis[i], A.basis[j], seed);
            try {
                A.mult[i][j] = A.coords(g);
            } catch (const std::logic_error&) {
                closed = false;
                A.mult[i][j] = Vec(A.dim());
            }
        }
    rep.add_check("span of simple and projective classes is closed under products", closed);
    out.basis = A.basis;
    out.mult = A.mult;

    // generators and monomials
    const Vec one = A.unit(), S = A.of(IndecLabel::simple(-1, -1));
    const bool dh4 = alg == "DH4";
    const Vec Sm = dh4 ? Vec{} : A.of(IndecLabel::simple(1, -1));
    const Vec P = dh4 ? A.of(IndecLabel::projective(1, -1)) : A.of(IndecLabel::projective(1, 1));
    auto mul = [&](const Vec& a, const Vec& b) { return A.mul(a, b); };
    auto sum = [&](std::initializer_list<std::pair<Rational, Vec>> xs) {
        Vec v(A.dim());
        for (const auto& [c, x] : xs) v = vadd(v, x, c);
        return v;
    };
    std::vector<Vec> monomials;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < (dh4 ? 1 : 2); ++b)
            for (int c = 0; c < (dh4 ? 3 : 2); ++c) {
                Vec m = one;
                if (a) m = mul(m, S);
                if (b) m = mul(m, Sm);
                for (int k = 0; k < c; ++k) m = mul(m, P);
                monomials.push_back(m);
            }
    out.monomial_count = monomials.size();
    rep.add("monomial basis size", std::to_string(A.dim()), std::to_string(rank(columns(monomials, A.dim()))),
            rank(columns(monomials, A.dim())) == A.dim() && monomials.size() == A.dim());
    rep.add_check("S^2=1", mul(S, S) == one);
    const Vec onePlusS = vadd(one, S);
    if (alg == "mabar") {
        rep.add_check("S_-^2=1", mul(Sm, Sm) == one);
        rep.add_check("P^2=2(1+S)P", mul(P, P) == vscale(mul(onePlusS, P), 2));
    } else if (dh4) {
        rep.add_check("P_+^3=2(1+S)P_+", mul(mul(P, P), P) == vscale(mul(onePlusS, P), 2));
    } else {
        rep.add_check("S_-^2=1", mul(Sm, Sm) == one);
        rep.add_check("P^2=(1+S)(1+S_-)P", mul(P, P) == mul(mul(onePlusS, vadd(one, Sm)), P));
    }

    // radical = kernel of the trace form
    std::vector<Matrix> L;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        Vec e(A.dim());
        e[i] = 1;
        L.push_back(A.left_mult(e));
    }
    Matrix T(A.dim(), A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) T(i, j) = trace(L[i] * L[j]);
    Matrix J = nullspace(T);
    out.radical_dim = J.cols();
    out.quotient_dim = A.dim() - J.cols();
    const std::size_t expected_q = alg == "mabar" ? 6 : (dh4 ? 4 : 5);
    rep.add("quotient dimension", std::to_string(expected_q), std::to_string(out.quotient_dim), out.quotient_dim == expected_q);

    // the listed radical generators span the same ideal
    std::vector<Vec> rad_gens;
    const Vec oneMinusS = vadd(one, S, -1);
    rad_gens.push_back(mul(oneMinusS, P));
    if (alg == "HH") rad_gens.push_back(mul(vadd(one, Sm, -1), P));
    std::vector<Vec> ideal;
    for (const auto& g : rad_gens)
        for (const auto& m : monomials) {
            ideal.push_back(mul(g, m));
            ideal.push_back(mul(m, g));
        }
    Matrix I = columns(ideal, A.dim());
    const std::size_t ri = rank(I);
    bool same = ri == J.cols() && (J.cols() == 0 || rank(hstack({I, J})) == ri);
    rep.add("radical equals the ideal of the listed generators", std::to_string(J.cols()), std::to_string(ri), same);

    // listed quotient idempotents
    std::vector<std::pair<std::string, Vec>> idem;
    if (alg == "mabar") {
        for (int pm : {1, -1}) {
            const Vec u = vadd(one, Sm, pm);
            const std::string sg = pm > 0 ? "+" : "-";
            idem.push_back({"(1" + sg + "S_-)(1-S)/4", vscale(mul(u, oneMinusS), Rational(1, 4))});
            idem.push_back({"(1" + sg + "S_-)P/8", vscale(mul(u, P), Rational(1, 8))});
            Vec inner = sum({{1, one}, {Rational(-1, 4), P}, {Rational(-1, 2), oneMinusS}});
            idem.push_back({"(1" + sg + "S_-)(1-P/4-(1-S)/2)/2", vscale(mul(u, inner), Rational(1, 2))});
        }
    } else if (dh4) {
        idem.push_back({"(1-S)/2", vscale(oneMinusS, Rational(1, 2))});
        idem.push_back({"P_+(P_++2)/8", vscale(mul(P, vadd(P, one, 2)), Rational(1, 8))});
        idem.push_back({"P_+(P_+-2)/8", vscale(mul(P, vadd(P, one, -2)), Rational(1, 8))});
        idem.push_back({"(1+S)/2-P_+^2/4", vadd(vscale(onePlusS, Rational(1, 2)), mul(P, P), Rational(-1, 4))});
    } else {
        const Vec u = vadd(one, Sm), v = vadd(one, Sm, -1);
        idem.push_back({"(1-S)(1+S_-)/4", vscale(mul(oneMinusS, u), Rational(1, 4))});
        idem.push_back({"(1-S)(1-S_-)/4", vscale(mul(oneMinusS, v), Rational(1, 4))});
        idem.push_back({"(1+S)(1-S_-)/4", vscale(mul(onePlusS, v), Rational(1, 4))});
        idem.push_back({"((1+S)(1+S_-)-P)/4", vscale(vadd(mul(onePlusS, u), P, -1), Rational(1, 4))});
        idem.push_back({"P/4", vscale(P, Rational(1, 4))});
    }
    rep.add("idempotent count", std::to_string(expected_q), std::to_string(idem.size()), idem.size() == expected_q);
    Vec total(A.dim());
    for (std::size_t i = 0; i < idem.size(); ++i) {
        const auto& [ni, ei] = idem[i];
        total = vadd(total, ei);
        rep.add_check("nonzero mod J: " + ni, !in_span(J, ei));
        rep.add_check("idempotent mod J: " + ni, in_span(J, vadd(mul(ei, ei), ei, -1)));
        for (std::size_t j = 0; j < idem.size(); ++j)
            if (i != j) rep.add_check("orthogonal mod J: " + ni + " · " + idem[j].first, in_span(J, mul(ei, idem[j].second)));
    }
    rep.add_check("complete mod J: sum = 1", in_span(J, vadd(total, one, -1)));
    rep.sort_cases();
    rep.seconds = seconds_since(t0);
    return out;
}

// ---------- radicals ----------

VerificationReport verify_radical_generators(const std::string& alg, const SweepOptions& opt) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.suite = "radicals(" + alg + ")";
    GroupRing G{alg};
    const auto one = G.one(), S = G.S();
    const auto P = alg == "DH4" ? G.L(IndecLabel::projective(1, -1)) : G.P();
    const auto Sm = alg == "DH4" ? GreenElement(alg) : G.Sm();
    auto mul = [&](const GreenElement& a, const GreenElement& b) { return G.mul(a, b); };
    auto Spow = [&](int k) { return k % 2 ? S : one; };

    std::vector<std::pair<std::string, GreenElement>> gens;
    if (alg == "mabar" || alg == "DH4") {
        const auto u = one - S;
        gens.push_back({alg == "DH4" ? "(1-S)P_+" : "(1-S)P", mul(u, P)});
        for (int r = 1; r <= opt.max_rank; ++r) {
            const std::string rs = std::to_string(r);
            gens.push_back({"(1-S)N_" + rs, mul(u, G.N(r))});
            gens.push_back({"(1-S)N'_" + rs, mul(u, G.Np(r))});
            for (const auto& e : opt.etas) gens.push_back({"(1-S)C_{" + rs + "," + e.str() + "}", mul(u, G.C(r, e))});
        }
    } else {
        gens.push_back({"(1-S)P", mul(one - S, P)});
        gens.push_back({"(1-S_-)P", mul(one - Sm, P)});
        for (int r = 1; r <= opt.max_rank; ++r) {
            const std::string rs = std::to_string(r);
            gens.push_back({"(S^{r-1}-SS_-)N_" + rs, mul(Spow(r - 1) - mul(S, Sm), G.N(r))});
            gens.push_back({"(1-S^{r-1}S_-)N'_" + rs, mul(one - mul(Spow(r - 1), Sm), G.Np(r))});
            for (const auto& e : opt.etas) gens.push_back({"(1-S_-)C_{" + rs + "," + e.str() + "}", mul(one - Sm, G.C(r, e))});
        }
    }
    for (const auto& [name, g] : gens) {
        GreenElement x = g;
        unsigned k = 1;
        while (!x.is_zero() && k <= 8) {
            x = mul(x, g);
            ++k;
        }
        rep.add("nilpotent: " + name, "exponent <= 8", x.is_zero() ? "exponent " + std::to_string(k) : "nonzero 8th power",
                x.is_zero() && k <= 8);
    }

    std::vector<std::pair<std::string, GreenElement>> idem;
    if (alg == "mabar") {
        idem.push_back({"(S+1)P/8", mul(S + one, P) * Rational(1, 8)});
        idem.push_back({"(1+S_-)(S+1)P/16", mul(mul(one + Sm, S + one), P) * Rational(1, 16)});
        idem.push_back({"(1-S_-)(S+1)P/16", mul(mul(one - Sm, S + one), P) * Rational(1, 16)});
    } else if (alg == "DH4") {
        idem.push_back({"(1+S)(P_++2)P_+/16", mul(mul(one + S, P + one * 2), P) * Rational(1, 16)});
        idem.push_back({"(1+S)(P_+-2)P_+/16", mul(mul(one + S, P - one * 2), P) * Rational(1, 16)});
    } else {
        idem.push_back({"(1+S)(1+S_-)P/16", mul(mul(one + S, one + Sm), P) * Rational(1, 16)});
    }
    for (std::size_t i = 0; i < idem.size(); ++i) {
        const auto& [ni, ei] = idem[i];
        rep.add("idempotent: " + ni, ei.str(), mul(ei, ei).str(), mul(ei, ei) == ei && !ei.is_zero());
        // (S+1)P/8 belongs to the comparison with mabar'; the p± pair refines it
        for (std::size_t j = 0; j < idem.size(); ++j) {
            if (i == j) continue;
            if (alg == "mabar" && (i == 0 || j == 0)) continue;
            rep.add_check("orthogonal: " + ni + " · " + idem[j].first, mul(ei, idem[j].second).is_zero());
        }
        for (const auto& [ng, g] : gens)
            rep.add_check("annihilates: " + ni + " · " + ng, mul(ei, g).is_zero() && mul(g, ei).is_zero());
    }

    if (alg == "mabar") {
        // St(mabar') modulo J: differences of consecutive ranks are orthogonal idempotents
        const int K = opt.max_rank + 1;
        std::vector<GreenElement> jg, mults = {S, Sm, G.L(IndecLabel::string(Family::M, 1)), G.L(IndecLabel::string(Family::W, 1))};
        for (int r = 1; r <= K; ++r) {
            jg.push_back(mul(S - one, G.N(r)));
            jg.push_back(mul(S - one, G.Np(r)));
            mults.push_back(G.N(r));
            mults.push_back(G.Np(r));
            for (const auto& e : opt.etas) {
                jg.push_back(mul(S - one, G.C(r, e)));
                mults.push_back(G.C(r, e));
            }
        }
        Subspace J = stable_ideal(jg, mults);
        auto smul = [&](const GreenElement& a, const GreenElement& b) { return stable_quotient(mul(a, b)); };
        std::vector<std::pair<std::string, GreenElement>> fam;
        for (int r = 0; r < opt.max_rank; ++r) {
            const std::string rs = std::to_string(r);
            fam.push_back({"(N_" + std::to_string(r + 1) + "-N_" + rs + ")/2", (G.N(r + 1) - G.N(r)) * Rational(1, 2)});
            fam.push_back({"(N'_" + std::to_string(r + 1) + "-N'_" + rs + ")/2", (G.Np(r + 1) - G.Np(r)) * Rational(1, 2)});
            for (const auto& e : opt.etas)
                fam.push_back({"(C_{" + std::to_string(r + 1) + "," + e.str() + "}-C_{" + rs + "," + e.str() + "})/2",
                               (G.C(r + 1, e) - G.C(r, e)) * Rational(1, 2)});
        }
        for (std::size_t i = 0; i < fam.size(); ++i) {
            const auto& [ni, ei] = fam[i];
            rep.add_check("St/J idempotent: " + ni, J.contains(smul(ei, ei) - ei) && !J.contains(ei));
            for (std::size_t j = i + 1; j < fam.size(); ++j)
                rep.add_check("St/J orthogonal: " + ni + " · " + fam[j].first, J.contains(smul(ei, fam[j].second)));
        }
    }
    rep.sort_cases();
    rep.seconds = seconds_since(t0);
    return rep;
}

VerificationReport verify_alternating_idempotents(const SweepOptions& opt) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.suite = "alternating-idempotents(HH)";
    GroupRing G{"HH"};
    const auto one = G.one(), S = G.S(), Sm = G.Sm();
    auto mul = [&](const GreenElement& a, const GreenElement& b) { return G.mul(a, b); };
    auto smul = [&](const GreenElement& a, const GreenElement& b) { return stable_quotient(mul(a, b)); };
    auto Spow = [&](int k) { return k % 2 ? S : one; };
    const int K = opt.max_rank + 1;

    std::vector<GreenElement> jg, mults = {S, Sm, G.L(IndecLabel::string(Family::M, 1)), G.L(IndecLabel::string(Family::W, 1))};
    for (int r = 1; r <= K; ++r) {
        jg.push_back(mul(Spow(r - 1) - mul(S, Sm), G.N(r)));
        jg.push_back(mul(one - mul(Spow(r - 1), Sm), G.Np(r)));
        mults.push_back(G.N(r));
        mults.push_back(G.Np(r));
        for (const auto& e : opt.etas) {
            jg.push_back(mul(one - Sm, G.C(r, e)));
            mults.push_back(G.C(r, e));
        }
    }
    Subspace J = stable_ideal(jg, mults);
    auto eq = [&](const GreenElement& a, const GreenElement& b) { return J.contains(stable_quotient(a - b)); };

    auto Nt = [&](int r) { return r <= 0 ? GreenElement("HH") : G.N(r) - mul(S, G.N(r - 1)); };
    auto Npt = [&](int r) { return r <= 0 ? GreenElement("HH") : G.Np(r) - mul(S, G.Np(r - 1)); };
    const int R = opt.max_rank;
    for (int r = 1; r <= R; ++r)
        for (int t = 1; t <= R; ++t) {
            const std::string k = "[r=" + std::to_string(r) + ",t=" + std::to_string(t) + "]";
            const int m = std::min(r, t);
            const int d = r == t ? 1 : 0;
            GreenElement c1 = (one + S) * Rational(1 + d) - one * 2;
            rep.add_check("Ñ_rÑ_t=[(1+δ)(1+S)-2]S_-Ñ_min " + k, eq(smul(Nt(r), Nt(t)), mul(mul(c1, Sm), Nt(m))));
            GreenElement c2 = one * 2 - (one + S) * Rational(1 - d);
            rep.add_check("Ñ'_rÑ'_t=[2-(1-δ)(1+S)]Ñ'_min " + k, eq(smul(Npt(r), Npt(t)), mul(c2, Npt(m))));

            GreenElement dr = Nt(r) - Nt(r - 1), dt = Nt(t) - Nt(t - 1);
            GreenElement want(std::string("HH"));
            if (r == t)
                want = mul(Sm, mul(S, Nt(r)) + Nt(r - 1)) * 2;
            else if (std::abs(r - t) == 1)
                want = mul(mul(one + S, Sm), Nt(m)) * -1;
            rep.add_check("(Ñ_r-Ñ_{r-1})(Ñ_t-Ñ_{t-1}) " + k, eq(smul(dr, dt), want));

            GreenElement pr = Npt(r) - Npt(r - 1), pt = Npt(t) - Npt(t - 1);
            GreenElement want2(std::string("HH"));
            if (r == t)
                want2 = (Npt(r) + mul(S, Npt(r - 1))) * 2;
            else if (std::abs(r - t) == 1)
                want2 = mul(one + S, Npt(m)) * -1;
            rep.add_check("(Ñ'_r-Ñ'_{r-1})(Ñ'_t-Ñ'_{t-1}) " + k, eq(smul(pr, pt), want2));
        }

    std::vector<std::pair<std::string, GreenElement>> fam;
    for (int r = 1; r <= R; ++r) {
        const std::string rs = std::to_string(r);
        fam.push_back({"S_-(1+S)Ñ_" + rs + "/4", mul(mul(Sm, one + S), Nt(r)) * Rational(1, 4)});
        fam.push_back({"S_-(S-1)(Ñ_" + rs + "-Ñ_" + std::to_string(r - 1) + ")/4",
                       mul(mul(Sm, S - one), Nt(r) - Nt(r - 1)) * Rational(1, 4)});
        fam.push_back({"(1+S)Ñ'_" + rs + "/4", mul(one + S, Npt(r)) * Rational(1, 4)});
        fam.push_back({"(1-S)(Ñ'_" + rs + "-Ñ'_" + std::to_string(r - 1) + ")/4",
                       mul(one - S, Npt(r) - Npt(r - 1)) * Rational(1, 4)});
    }
    for (int r = 0; r < R; ++r)
        for (const auto& e : opt.etas)
            fam.push_back({"(C_{" + std::to_string(r + 1) + "," + e.str() + "}-C_{" + std::to_string(r) + "," + e.str() + "})/2",
                           (G.C(r + 1, e) - G.C(r, e)) * Rational(1, 2)});
    for (std::size_t i = 0; i < fam.size(); ++i) {
        const auto& [ni, ei] = fam[i];
        rep.add_check("idempotent mod J: " + ni, eq(smul(ei, ei), ei) && !J.contains(stable_quotient(ei)));
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            rep.add_check("orthogonal mod J: " + ni + " · " + fam[j].first, J.contains(smul(ei, fam[j].second)));
    }
    rep.sort_cases();
    rep.seconds = seconds_since(t0);
    return rep;
}

}  // namespace greenring
