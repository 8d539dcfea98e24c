#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "greenring/green.hpp"

namespace greenring {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = unsigned(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mu;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(err_mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

const std::vector<Signs> kSigns = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};

std::vector<Signs> twists_for(const std::string& alg, const IndecLabel& base) {
    if (alg == "DH4") return {{1, 1}, {-1, -1}};
    (void)base;
    return kSigns;
}

std::string fmt_eta(const Rational& e) { return e.str(); }

// Builders for relation right-hand sides. Simple-twist multiples only: no table lookups.
struct Ring {
    std::string alg;
    GreenElement zero() const { return GreenElement(alg); }
    GreenElement one() const { return GreenElement::one(alg); }
    GreenElement L(const IndecLabel& l, const Rational& c = 1) const { return GreenElement::basis(alg, l, c); }
    GreenElement P() const { return L(IndecLabel::projective(1, 1)); }
    GreenElement Pplus() const { return L(IndecLabel::projective(1, -1)); }
    GreenElement S() const { return L(IndecLabel::simple(-1, -1)); }
    GreenElement Sm() const { return L(IndecLabel::simple(1, -1)); }
    GreenElement M(int r = 1) const { return L(IndecLabel::string(Family::M, r)); }
    GreenElement W(int r = 1) const { return L(IndecLabel::string(Family::W, r)); }
    GreenElement N(int r) const { return r <= 0 ? zero() : L(IndecLabel::string(Family::N, r)); }
    GreenElement Np(int r) const { return r <= 0 ? zero() : L(IndecLabel::string(Family::Nprime, r)); }
    GreenElement C(int r, const Rational& eta) const { return r <= 0 ? zero() : L(IndecLabel::band(r, eta)); }
    // product of simple-class polynomial u (group elements only) with e: twists each label
    GreenElement tw(const GreenElement& u, const GreenElement& e) const {
        GreenElement out(alg);
        for (const auto& [su, cu] : u.terms) {
            if (su.family != Family::S) throw std::logic_error("tw expects simple classes on the left");
            for (const auto& [l, c] : e.terms) {
                IndecLabel t = l.twisted(su.s1, su.s2);
                // S(s) (x) C(r,eta) = C(r, s1 s2 eta) (x) S(s) over mabar
                if (alg != "HH" && t.family == Family::C) t.eta = t.eta * Rational(su.s1 * su.s2);
                out.add(t, cu * c);
            }
        }
        return out;
    }
};

long long ce(long long n) { return (n + 1) / 2; }
long long fl(long long n) { return n / 2; }

std::string pair_key(const IndecLabel& a, const IndecLabel& b) { return a.str() + " ⊗ " + b.str(); }

}  // namespace

// ---------- closed-form rules ----------

VerificationReport verify_rule_families(const std::string& alg, const SweepOptions& opt) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.suite = (alg == "HH" ? "theorem-dec1(" : "theorem-dec(") + alg + ")";
    std::vector<IndecLabel> bases = {IndecLabel::projective(1, 1)};
    if (alg == "DH4") bases.push_back(IndecLabel::projective(1, -1));
    for (int r = 1; r <= opt.max_rank; ++r)
        for (Family f : {Family::M, Family::W, Family::N, Family::Nprime}) bases.push_back(IndecLabel::string(f, r));
    for (int r = 1; r <= opt.max_rank; ++r)
        for (const auto& e : opt.etas) bases.push_back(IndecLabel::band(r, e));

    struct Job {
        std::string item;
        IndecLabel a, b;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = 0; j < bases.size(); ++j) {
            const auto &X = bases[i], &Y = bases[j];
            std::string item = rule_family(alg, X, Y);
            for (Signs s : twists_for(alg, X))
                for (Signs t : twists_for(alg, Y)) jobs.push_back({item, X.twisted(s.first, s.second), Y.twisted(t.first, t.second)});
        }
    rep.cases.resize(jobs.size());
    parallel_for(jobs.size(), opt.threads, [&](std::size_t k) {
        const auto& jb = jobs[k];
        GreenElement cf = closed_form_product(alg, jb.a, jb.b);
        GreenElement bf = bruteforce_product(alg, jb.a, jb.b, opt.seed);
        CaseResult c{jb.item + " " + pair_key(jb.a, jb.b), cf.str(), bf.str(), cf == bf, ""};
        if (!c.pass && closed_form_product(alg, jb.a, jb.b, RuleSet::Corrected) == bf)
            c.note = "stated rule refuted; corrected rule agrees";
        rep.cases[k] = std::move(c);
    });
    rep.sort_cases();
    rep.seconds = seconds_since(t0);
    return rep;
}

// ---------- relation lists ----------

namespace {

struct RelationCase {
    std::string key;
    GreenElement lhs, rhs;
    std::string note;
};

using Product = std::function<GreenElement(const GreenElement&, const GreenElement&)>;

// Relations shared by the f1 block of mabar and DH4.
void f1_relations(const Ring& R, const Product& mul, const SweepOptions& opt, const std::string& tag, bool with_p_rows,
                  std::vector<RelationCase>& out) {
    const auto S = R.S(), P = R.P(), M = R.M(), W = R.W(), one = R.one();
    auto add = [&](std::string key, GreenElement lhs, GreenElement rhs) {
        out.push_back({tag.empty() ? key : tag + ": " + key, std::move(lhs), std::move(rhs), ""});
    };
    add("S^2=1", mul(S, S), one);
    if (with_p_rows) {
        add("P^2=2(1+S)P", mul(P, P), R.tw(one + S, P) * 2);
        add("MP=(1+2S)P", mul(M, P), R.tw(one + S * 2, P));
        add("WP=(2+S)P", mul(W, P), R.tw(one * 2 + S, P));
    }
    add("MW=2P+S", mul(M, W), P * 2 + S);
    const int K = opt.max_rank;
    for (int r = 1; r <= K; ++r) {
        const std::string rs = "[r=" + std::to_string(r) + "]";
        if (with_p_rows) {
            add("N_rP=r(1+S)P " + rs, mul(R.N(r), P), R.tw(one + S, P) * r);
            add("N'_rP=r(1+S)P " + rs, mul(R.Np(r), P), R.tw(one + S, P) * r);
        }
        add("MN_r=rP+SN_r " + rs, mul(M, R.N(r)), P * r + R.tw(S, R.N(r)));
        add("MN'_r=rP+SN'_r " + rs, mul(M, R.Np(r)), P * r + R.tw(S, R.Np(r)));
        add("WN_r=rP+N_r " + rs, mul(W, R.N(r)), P * r + R.N(r));
        add("WN'_r=rP+N'_r " + rs, mul(W, R.Np(r)), P * r + R.Np(r));
        for (const auto& eta : opt.etas) {
            const std::string re = "[r=" + std::to_string(r) + ",eta=" + fmt_eta(eta) + "]";
            const auto C = R.C(r, eta);
            if (with_p_rows) add("C_{r,eta}P=r(1+S)P " + re, mul(C, P), R.tw(one + S, P) * r);
            add("MC_{r,eta}=rP+SC_{r,eta} " + re, mul(M, C), P * r + R.tw(S, C));
            add("WC_{r,eta}=rP+C_{r,eta} " + re, mul(W, C), P * r + C);
        }
        for (int s = 1; s <= K; ++s) {
            const std::string rss = "[r=" + std::to_string(r) + ",s=" + std::to_string(s) + "]";
            const int m = std::min(r, s);
            add("N_rN_s=(rs-min)P+(1+S)N_min " + rss, mul(R.N(r), R.N(s)), P * (r * s - m) + R.tw(one + S, R.N(m)));
            add("N'_rN'_s=(rs-min)P+(1+S)N'_min " + rss, mul(R.Np(r), R.Np(s)), P * (r * s - m) + R.tw(one + S, R.Np(m)));
            add("N_rN'_s=rsP " + rss, mul(R.N(r), R.Np(s)), P * (r * s));
            for (const auto& eta : opt.etas) {
                const std::string key = "[r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",eta=" + fmt_eta(eta) + "]";
                add("C_{r,eta}N_s=rsP " + key, mul(R.C(r, eta), R.N(s)), P * (r * s));
                add("C_{r,eta}N'_s=rsP " + key, mul(R.C(r, eta), R.Np(s)), P * (r * s));
                for (const auto& gam : opt.etas) {
                    const std::string k2 = "[r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",eta=" + fmt_eta(eta) +
                                           ",gamma=" + fmt_eta(gam) + "]";
                    GreenElement rhs = eta != gam ? P * (r * s) : P * (r * s - m) + R.tw(one + S, R.C(m, eta));
                    add("C_{r,eta}C_{s,gamma} " + k2, mul(R.C(r, eta), R.C(s, gam)), rhs);
                }
            }
        }
    }
}

std::vector<RelationCase> relation_list(const std::string& alg, const SweepOptions& opt) {
    Ring R{alg};
    Product mul = [&](const GreenElement& a, const GreenElement& b) { return multiply_bruteforce(a, b, opt.seed); };
    std::vector<RelationCase> out;
    const auto S = R.S(), Sm = R.Sm(), P = R.P(), M = R.M(), W = R.W(), one = R.one();
    auto add = [&](const std::string& tag, std::string key, GreenElement lhs, GreenElement rhs, std::string note = "") {
        out.push_back({tag.empty() ? key : tag + ": " + key, std::move(lhs), std::move(rhs), std::move(note)});
    };
    const int K = opt.max_rank;
    if (alg == "mabar") {
        f1_relations(R, mul, opt, "", true, out);
        add("", "S_-^2=1", mul(Sm, Sm), one);
        auto comm = [&](const std::string& name, const GreenElement& x) {
            add("", "[" + name + ",S_-]=0", mul(x, Sm), mul(Sm, x));
        };
        comm("S", S);
        comm("P", P);
        comm("M", M);
        comm("W", W);
        for (int r = 1; r <= K; ++r) {
            comm("N_" + std::to_string(r), R.N(r));
            comm("N'_" + std::to_string(r), R.Np(r));
            for (const auto& eta : opt.etas)
                add("", "S_-C_{r,eta}=C_{r,-eta}S_- [r=" + std::to_string(r) + ",eta=" + fmt_eta(eta) + "]",
                    mul(Sm, R.C(r, eta)), mul(R.C(r, -eta), Sm));
        }
    } else if (alg == "DH4") {
        const auto Pp = R.Pplus();
        f1_relations(R, mul, opt, "", false, out);
        add("", "P_+P=2(1+S)P_+", mul(Pp, P), R.tw(one + S, Pp) * 2);
        add("", "P_+^2=SP", mul(Pp, Pp), R.tw(S, P));
        add("", "MP_+=(1+2S)P_+", mul(M, Pp), R.tw(one + S * 2, Pp));
        add("", "WP_+=(2+S)P_+", mul(W, Pp), R.tw(one * 2 + S, Pp));
        for (int r = 1; r <= K; ++r) {
            const std::string rs = "[r=" + std::to_string(r) + "]";
            add("", "N_rP_+=r(1+S)P_+ " + rs, mul(R.N(r), Pp), R.tw(one + S, Pp) * r);
            add("", "N'_rP_+=r(1+S)P_+ " + rs, mul(R.Np(r), Pp), R.tw(one + S, Pp) * r);
            for (const auto& eta : opt.etas)
                add("", "C_{r,eta}P_+=r(1+S)P_+ [r=" + std::to_string(r) + ",eta=" + fmt_eta(eta) + "]", mul(R.C(r, eta), Pp),
                    R.tw(one + S, Pp) * r);
        }
    } else {
        const std::string g;
        const auto SSm = R.tw(S, Sm);
        add(g, "S^2=1", mul(S, S), one);
        add(g, "S_-^2=1", mul(Sm, Sm), one);
        add(g, "P^2=(1+S)(1+S_-)P", mul(P, P), R.tw(R.tw(one + S, one + Sm), P));
        add(g, "MP=(1+S_-+SS_-)P", mul(M, P), R.tw(one + Sm + SSm, P));
        add(g, "WP=(1+S+S_-)P", mul(W, P), R.tw(one + S + Sm, P));
        add(g, "MW=(1+S)P+S_-", mul(M, W), R.tw(one + S, P) + Sm);
        const auto SP = R.tw(S, P);
        for (int r = 1; r <= K; ++r) {
            const std::string rs = "[r=" + std::to_string(r) + "]";
            const auto N = R.N(r), Np = R.Np(r);
            add(g, "N_rP " + rs, mul(N, P), R.tw(one + SSm, P) * ce(r) + R.tw(S + Sm, P) * fl(r));
            add(g, "N'_rP " + rs, mul(Np, P), R.tw(one + Sm, P) * ce(r) + R.tw(S + SSm, P) * fl(r));
            add(g, "MN_r " + rs, mul(M, N), P * ce(r) + SP * fl(r) + R.tw(SSm, N));
            add(g, "MN'_r " + rs, mul(M, Np), P * ce(r) + SP * fl(r) + R.tw(Sm, Np));
            add(g, "WN_r " + rs, mul(W, N), P * ce(r) + SP * fl(r) + R.tw(S, N));
            add(g, "WN'_r " + rs, mul(W, Np), P * fl(r) + SP * ce(r) + Np);
            for (const auto& eta : opt.etas) {
                const std::string re = "[r=" + std::to_string(r) + ",eta=" + fmt_eta(eta) + "]";
                const auto C = R.C(r, eta);
                add(g, "C_{r,eta}S=C_{r,eta} " + re, mul(C, S), C);
                add(g, "C_{r,eta}P=r(1+S+S_-+SS_-)P " + re, mul(C, P), R.tw(one + S + Sm + SSm, P) * r);
                add(g, "MC_{r,eta}=r(1+S)P+S_-C_{r,eta} " + re, mul(M, C), R.tw(one + S, P) * r + R.tw(Sm, C));
                add(g, "WC_{r,eta}=r(1+S)P+C_{r,eta} " + re, mul(W, C), R.tw(one + S, P) * r + C);
            }
            for (int s = 1; s <= K; ++s) {
                const std::string rss = "[r=" + std::to_string(r) + ",s=" + std::to_string(s) + "]";
                const int m = std::min(r, s), Mx = std::max(r, s);
                const long long d = (long long)r * s - m;
                const auto Spow = (Mx - 1) % 2 ? S : one;
                add(g, "N_rN_s " + rss, mul(N, R.N(s)), P * ce(d) + SP * fl(d) + R.tw(Spow + SSm, R.N(m)));
                add(g, "N'_rN'_s " + rss, mul(Np, R.Np(s)), P * fl(d) + SP * ce(d) + R.tw(one + R.tw(Spow, Sm), R.Np(m)));
                add(g, "N_rN'_s=ceil(rs/2)P+floor(rs/2)SP " + rss, mul(N, R.Np(s)), P * ce(r * s) + SP * fl(r * s));
                add(g, "N_rN'_s=rs(1+S)P (second value) " + rss, mul(N, R.Np(s)), R.tw(one + S, P) * (r * s),
                    "the same list also gives N_rN'_s=ceil(rs/2)P+floor(rs/2)SP");
                for (const auto& eta : opt.etas) {
                    const std::string key =
                        "[r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",eta=" + fmt_eta(eta) + "]";
                    add(g, "C_{r,eta}N_s=rs(1+S)P " + key, mul(R.C(r, eta), R.N(s)), R.tw(one + S, P) * (r * s));
                    add(g, "C_{r,eta}N'_s=rs(1+S)P " + key, mul(R.C(r, eta), R.Np(s)), R.tw(one + S, P) * (r * s));
                    for (const auto& gam : opt.etas) {
                        const std::string k2 = "[r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",eta=" +
                                               fmt_eta(eta) + ",gamma=" + fmt_eta(gam) + "]";
                        GreenElement rhs = eta != gam ? R.tw(one + S, P) * (2 * r * s)
                                                      : R.tw(one + S, P) * (2 * r * s - m) + R.tw(one + Sm, R.C(m, eta));
                        add(g, "C_{r,eta}C_{s,gamma} " + k2, mul(R.C(r, eta), R.C(s, gam)), rhs);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

VerificationReport verify_green_relations(const std::string& alg, const SweepOptions& opt) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.suite = "green-relations(" + alg + ")";
    for (auto& c : relation_list(alg, opt)) {
        bool pass = c.lhs == c.rhs;
        std::string note = c.note;
        if (!pass && c.lhs.dim() != c.rhs.dim())
            note += (note.empty() ? "" : "; ") + std::string("dimension: expected ") + c.rhs.dim().str() + ", actual " + c.lhs.dim().str();
        rep.add(c.key, c.rhs.str(), c.lhs.str(), pass, note);
    }
    rep.sort_cases();
    rep.seconds = seconds_since(t0);
    return rep;
}

// ---------- sign-twist commutation ----------

VerificationReport verify_twist_commutation(const SweepOptions& opt) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.suite = "twist-commutation(mabar)";
    auto h = build_algebra("mabar");
    auto certify = [&](const ModuleRep& lhs, const ModuleRep& rhs) {
        auto f = find_isomorphism(lhs, rhs, opt.seed);
        if (!f) return false;
        if (rank(*f) != lhs.dim()) return false;
        for (std::size_t g = 0; g < lhs.actions.size(); ++g)
            if (!(*f * lhs.actions[g] == rhs.actions[g] * *f)) return false;
        return true;
    };
    for (Signs s : kSigns) {
        const auto sm = simple(h, s);
        const IndecLabel sl = IndecLabel::simple(s.first, s.second);
        std::vector<IndecLabel> others = {IndecLabel::simple(1, 1), IndecLabel::projective(1, 1)};
        for (int r = 1; r <= opt.max_rank; ++r)
            for (Family f : {Family::M, Family::W, Family::N, Family::Nprime}) others.push_back(IndecLabel::string(f, r));
        for (const auto& o : others) {
            auto m = make_module(h, o);
            rep.add_check("sim: " + o.str() + " ⊗ " + sl.str() + " ≅ " + sl.str() + " ⊗ " + o.str(),
                          certify(tensor(m, sm), tensor(sm, m)));
        }
        for (int r = 1; r <= opt.max_rank; ++r)
            for (const auto& eta : opt.etas) {
                const Rational eta2 = eta * Rational(s.first * s.second);
                rep.add_check("sim: " + sl.str() + " ⊗ " + IndecLabel::band(r, eta).str() + " ≅ " + IndecLabel::band(r, eta2).str() +
                                  " ⊗ " + sl.str(),
                              certify(tensor(sm, band_module(h, r, eta)), tensor(band_module(h, r, eta2), sm)));
            }
    }
    // non-commuting witness
    const auto sm = IndecLabel::simple(1, -1), c = IndecLabel::band(1, 1);
    auto left = bruteforce_product("mabar", sm, c, opt.seed), right = bruteforce_product("mabar", c, sm, opt.seed);
    rep.add("witness: [S(+,-)][C(1,1)] != [C(1,1)][S(+,-)]", right.str(), left.str(), !(left == right),
            "left " + left.str() + ", right " + right.str());
    rep.sort_cases();
    rep.seconds = seconds_since(t0);
    return rep;
}

// ---------- commutativity ----------

VerificationReport commutativity_probe(const std::string& alg, const std::vector<std::pair<IndecLabel, IndecLabel>>& pairs,
                                       std::uint64_t seed) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.suite = "commutativity(" + alg + ")";
    for (const auto& [a, b] : pairs) {
        auto ab = bruteforce_product(alg, a, b, seed), ba = bruteforce_product(alg, b, a, seed);
        // over mabar ab != ba exactly for S(s) with s1 s2 = -1 against a band
        bool predicted = true;
        if (alg == "mabar") {
            auto odd = [](const IndecLabel& l) { return l.family == Family::S && l.s1 * l.s2 < 0; };
            if ((odd(a) && b.family == Family::C) || (odd(b) && a.family == Family::C)) predicted = false;
        }
        bool observed = ab == ba;
        rep.add(pair_key(a, b), predicted ? "commute" : "differ", observed ? "commute" : "differ", predicted == observed,
                observed ? "" : "ab = " + ab.str() + "; ba = " + ba.str());
    }
    rep.sort_cases();
    rep.seconds = seconds_since(t0);
    return rep;
}

VerificationReport commutativity_probe(const std::string& alg, const SweepOptions& opt) {
    std::vector<IndecLabel> gens = {IndecLabel::simple(-1, -1), IndecLabel::projective(1, 1), IndecLabel::string(Family::M, 1),
                                    IndecLabel::string(Family::W, 1)};
    if (alg == "DH4")
        gens.push_back(IndecLabel::projective(1, -1));
    else
        gens.push_back(IndecLabel::simple(1, -1));
    for (int r = 1; r <= opt.max_rank; ++r) {
        gens.push_back(IndecLabel::string(Family::N, r));
        gens.push_back(IndecLabel::string(Family::Nprime, r));
        for (const auto& eta : opt.etas) gens.push_back(IndecLabel::band(r, eta));
    }
    std::vector<std::pair<IndecLabel, IndecLabel>> pairs;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) pairs.push_back({gens[i], gens[j]});
    return commutativity_probe(alg, pairs, opt.seed);
}

// ---------- ring properties ----------

VerificationReport verify_ring_properties(const std::string& alg, const SweepOptions& opt) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.suite = "ring-properties(" + alg + ")";
    Ring R{alg};
    const RuleSet rs = RuleSet::Corrected;
    std::vector<GreenElement> gens = {R.S(), R.P(), R.M(), R.W()};
    if (alg == "DH4")
        gens.push_back(R.Pplus());
    else
        gens.push_back(R.Sm());
    for (int r = 1; r <= std::min(opt.max_rank, 2); ++r) {
        gens.push_back(R.N(r));
        gens.push_back(R.Np(r));
        for (const auto& eta : opt.etas) gens.push_back(R.C(r, eta));
    }
    const auto one = R.one();
    rep.add_check("S^2=1", multiply_closed_form(R.S(), R.S(), rs) == one);
    if (alg != "DH4") rep.add_check("S_-^2=1", multiply_closed_form(R.Sm(), R.Sm(), rs) == one);
    for (const auto& a : gens) {
        const std::string n = a.str();
        rep.add_check("unit: 1·" + n + " = " + n + "·1 = " + n,
                      multiply_closed_form(one, a, rs) == a && multiply_closed_form(a, one, rs) == a);
        for (const auto& b : gens) {
            auto ab = multiply_closed_form(a, b, rs);
            rep.add_check("dim: " + n + "·" + b.str(), ab.dim() == a.dim() * b.dim());
            rep.add_check("stable: " + n + "·" + b.str(),
                          stable_quotient(ab) == stable_quotient(multiply_closed_form(stable_quotient(a), stable_quotient(b), rs)));
            for (const auto& c : gens) {
                auto lhs = multiply_closed_form(ab, c, rs);
                auto rhs = multiply_closed_form(a, multiply_closed_form(b, c, rs), rs);
                rep.add("assoc: (" + n + "·" + b.str() + ")·" + c.str(), lhs.str(), rhs.str(), lhs == rhs);
            }
        }
    }
    rep.sort_cases();
    rep.seconds = seconds_since(t0);
    return rep;
}

// ---------- St(DH4) against St(mabar') ----------

VerificationReport verify_stable_comparison(const SweepOptions& opt) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.suite = "stable-comparison";
    std::vector<IndecLabel> labels;
    for (int t : {1, -1}) {
        labels.push_back(IndecLabel::simple(t, t));
        for (int r = 1; r <= opt.max_rank; ++r) {
            for (Family f : {Family::M, Family::W, Family::N, Family::Nprime}) labels.push_back(IndecLabel::string(f, r, t, t));
            for (const auto& eta : opt.etas) labels.push_back(IndecLabel::band(r, eta, t, t));
        }
    }
    for (const auto& a : labels)
        for (const auto& b : labels) {
            auto d = stable_quotient(bruteforce_product("DH4", a, b));
            auto m = stable_quotient(bruteforce_product("mabar", a, b));
            rep.add(a.str() + "·" + b.str(), m.str(), d.str(), d.terms == m.terms);
        }
    rep.sort_cases();
    rep.seconds = seconds_since(t0);
    return rep;
}

}  // namespace greenring
