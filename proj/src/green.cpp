#include "greenring/green.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace greenring {

namespace {

AlgebraPtr algebra_ptr(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, AlgebraPtr> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, build_algebra(name)).first;
    return it->second;
}

void check_algebra(const std::string& alg) {
    if (alg != "mabar" && alg != "DH4" && alg != "HH") throw std::invalid_argument("no Green ring tables for '" + alg + "'");
}

IndecLabel Pl(int a, int b) { return IndecLabel::projective(a, b); }
long long ce(long long n) { return (n + 1) / 2; }
long long fl(long long n) { return n / 2; }
// |k| of the parity convention: - for odd k, + for even k
int par(long long k) { return k % 2 ? -1 : 1; }

using Terms = std::vector<std::pair<IndecLabel, long long>>;

int base_order(const IndecLabel& l) {
    switch (l.family) {
        case Family::P: return l.s1 == l.s2 ? 0 : 1;
        case Family::M: return 2;
        case Family::W: return 3;
        case Family::N: return 4;
        case Family::Nprime: return 5;
        case Family::C: return 6;
        default: return -1;
    }
}

struct Split {
    IndecLabel base;
    Signs twist;
};

// label = base (x) S(twist)
Split split_label(const std::string& alg, const IndecLabel& l) {
    if (l.family == Family::S) return {IndecLabel::simple(1, 1), {l.s1, l.s2}};
    if (l.family == Family::P && alg == "DH4" && l.s1 != l.s2) return {Pl(1, -1), {l.s1, l.s1}};
    IndecLabel b = l;
    b.s1 = b.s2 = 1;
    return {b, {l.s1, l.s2}};
}

// f1-block table shared by mabar and DH4; "_-" is the (-,-) twist
std::optional<Terms> rules_mabar(const IndecLabel& X, const IndecLabel& Y) {
    const long long r = X.rank, s = Y.rank;
    const auto P = Pl(1, 1), Pm = Pl(-1, -1);
    auto sub = [](IndecLabel l) { return l.twisted(-1, -1); };
    const Family fx = X.family, fy = Y.family;
    if (fx == Family::P && X.s1 == X.s2) {
        switch (fy) {
            case Family::P:
                if (Y.s1 == Y.s2) return Terms{{P, 2}, {Pm, 2}};
                return std::nullopt;
            case Family::M: return Terms{{P, s}, {Pm, s + 1}};
            case Family::W: return Terms{{P, s + 1}, {Pm, s}};
            default: return Terms{{P, s}, {Pm, s}};
        }
    }
    if (fx == Family::M) {
        switch (fy) {
            case Family::M: return Terms{{P, r * s}, {sub(IndecLabel::string(Family::M, int(r + s))), 1}};
            case Family::W:
                if (r < s) return Terms{{P, r * (s + 1)}, {sub(IndecLabel::string(Family::W, int(s - r))), 1}};
                if (r == s) return Terms{{P, r * (r + 1)}, {IndecLabel::simple(-1, -1), 1}};
                return Terms{{P, (r + 1) * s}, {IndecLabel::string(Family::M, int(r - s)), 1}};
            case Family::C:
            case Family::N:
            case Family::Nprime: return Terms{{P, r * s}, {sub(Y), 1}};
            default: return std::nullopt;
        }
    }
    if (fx == Family::W) {
        switch (fy) {
            case Family::W: return Terms{{P, r * s}, {IndecLabel::string(Family::W, int(r + s)), 1}};
            case Family::C:
            case Family::N:
            case Family::Nprime: return Terms{{P, r * s}, {Y, 1}};
            default: return std::nullopt;
        }
    }
    const long long m = std::min(r, s);
    if (fx == fy && (fx == Family::N || fx == Family::Nprime)) {
        auto l = IndecLabel::string(fx, int(m));
        return Terms{{P, r * s - m}, {l, 1}, {sub(l), 1}};
    }
    if (fx == Family::C && fy == Family::C) {
        if (X.eta != Y.eta) return Terms{{P, r * s}};
        auto l = IndecLabel::band(int(m), X.eta);
        return Terms{{P, r * s - m}, {l, 1}, {sub(l), 1}};
    }
    // N N', N C, N' C
    return Terms{{P, r * s}};
}

std::optional<Terms> rules_dh4(const IndecLabel& X, const IndecLabel& Y) {
    const auto Pp = Pl(1, -1), Pn = Pl(-1, 1);
    if (base_order(X) == 1) {
        const long long s = Y.rank;
        switch (Y.family) {
            case Family::P:
                if (Y.s1 != Y.s2) return Terms{{Pl(-1, -1), 1}};
                return std::nullopt;
            case Family::M: return Terms{{Pp, s}, {Pn, s + 1}};
            case Family::W: return Terms{{Pp, s + 1}, {Pn, s}};
            default: return Terms{{Pp, s}, {Pn, s}};
        }
    }
    if (base_order(X) == 0 && base_order(Y) == 1) return Terms{{Pp, 2}, {Pn, 2}};
    return rules_mabar(X, Y);
}

std::optional<Terms> rules_hh(const IndecLabel& X, const IndecLabel& Y, RuleSet rules) {
    const long long r = X.rank, s = Y.rank;
    const auto P = Pl(1, 1), Pmm = Pl(-1, -1), Ppm = Pl(1, -1), Pmp = Pl(-1, 1);
    const Family fx = X.family, fy = Y.family;
    if (fx == Family::P) {
        switch (fy) {
            case Family::P: return Terms{{P, 1}, {Pmm, 1}, {Ppm, 1}, {Pmp, 1}};
            case Family::M: return Terms{{P, ce(s)}, {Pmm, fl(s)}, {Ppm, ce(s)}, {Pmp, ce(s + 1)}};
            case Family::W: return Terms{{P, ce(s + 1)}, {Pmm, ce(s)}, {Ppm, ce(s)}, {Pmp, fl(s)}};
            case Family::N: return Terms{{P, ce(s)}, {Pmm, fl(s)}, {Ppm, fl(s)}, {Pmp, ce(s)}};
            case Family::Nprime: return Terms{{P, ce(s)}, {Pmm, fl(s)}, {Ppm, ce(s)}, {Pmp, fl(s)}};
            case Family::C: return Terms{{P, s}, {Pmm, s}, {Ppm, s}, {Pmp, s}};
            default: return std::nullopt;
        }
    }
    if (fx == Family::M) {
        switch (fy) {
            case Family::M:
                return Terms{{P, ce(r * s)}, {Pmm, fl(r * s)}, {IndecLabel::string(Family::M, int(r + s), -1, 1), 1}};
            case Family::W:
                if (r < s)
                    return Terms{{P, ce(r * (s + 1))},
                                 {Pmm, fl(r * (s + 1))},
                                 {IndecLabel::string(Family::W, int(s - r), par(r - 1), par(r)), 1}};
                if (r == s) return Terms{{P, r * (r + 1) / 2}, {Pmm, r * (r + 1) / 2}, {IndecLabel::simple(par(r - 1), par(r)), 1}};
                return Terms{{P, ce((r + 1) * s)},
                             {Pmm, fl((r + 1) * s)},
                             {IndecLabel::string(Family::M, int(r - s), par(s), par(s)), 1}};
            case Family::C: return Terms{{P, r * s}, {Pmm, r * s}, {Y.twisted(1, -1), 1}};
            case Family::N: return Terms{{P, ce(r * s)}, {Pmm, fl(r * s)}, {Y.twisted(-1, 1), 1}};
            case Family::Nprime:
                if (rules == RuleSet::Corrected)
                    return Terms{{P, ce(r * s)}, {Pmm, fl(r * s)}, {Y.twisted(par(r - 1), par(r)), 1}};
                return Terms{{P, ce(r * s)}, {Pmm, fl(r * s)}, {Y.twisted(1, -1), 1}};
            default: return std::nullopt;
        }
    }
    if (fx == Family::W) {
        switch (fy) {
            case Family::W: return Terms{{P, fl(r * s)}, {Pmm, ce(r * s)}, {IndecLabel::string(Family::W, int(r + s)), 1}};
            case Family::C: return Terms{{P, r * s}, {Pmm, r * s}, {Y, 1}};
            case Family::N: return Terms{{P, ce(r * s)}, {Pmm, fl(r * s)}, {Y.twisted(par(r), par(r)), 1}};
            case Family::Nprime: return Terms{{P, fl(r * s)}, {Pmm, ce(r * s)}, {Y, 1}};
            default: return std::nullopt;
        }
    }
    const long long m = std::min(r, s), M = std::max(r, s);
    if (fx == Family::N && fy == Family::N) {
        auto l = IndecLabel::string(Family::N, int(m));
        return Terms{{P, ce(r * s - m)}, {Pmm, fl(r * s - m)}, {l.twisted(par(M - 1), par(M - 1)), 1}, {l.twisted(-1, 1), 1}};
    }
    if (fx == Family::Nprime && fy == Family::Nprime) {
        auto l = IndecLabel::string(Family::Nprime, int(m));
        return Terms{{P, fl(r * s - m)}, {Pmm, ce(r * s - m)}, {l, 1}, {l.twisted(par(M - 1), par(M)), 1}};
    }
    if (fx == Family::N && fy == Family::Nprime) return Terms{{P, ce(r * s)}, {Pmm, fl(r * s)}};
    if (fx == Family::C && fy == Family::C) {
        if (X.eta != Y.eta) return Terms{{P, 2 * r * s}, {Pmm, 2 * r * s}};
        auto l = IndecLabel::band(int(m), X.eta);
        return Terms{{P, 2 * r * s - m}, {Pmm, 2 * r * s - m}, {l, 1}, {l.twisted(1, -1), 1}};
    }
    // N C, N' C
    return Terms{{P, r * s}, {Pmm, r * s}};
}

std::optional<Terms> base_rule(const std::string& alg, IndecLabel X, IndecLabel Y, RuleSet rules) {
    if (base_order(X) > base_order(Y)) std::swap(X, Y);
    if (alg == "mabar") return rules_mabar(X, Y);
    if (alg == "DH4") return rules_dh4(X, Y);
    return rules_hh(X, Y, rules);
}

struct LearnedRules {
    std::mutex mu;
    std::map<std::string, std::map<std::pair<IndecLabel, IndecLabel>, GreenElement>> rules;
};
LearnedRules& learned() {
    static LearnedRules l;
    return l;
}

struct BruteCache {
    std::shared_mutex mu;
    std::map<std::tuple<std::string, IndecLabel, IndecLabel, std::uint64_t>, GreenElement> table;
};
BruteCache& brute_cache() {
    static BruteCache c;
    return c;
}

}  // namespace

// ---------- GreenElement ----------

GreenElement GreenElement::basis(const std::string& alg, const IndecLabel& l, const Rational& c) {
    GreenElement e(alg);
    e.add(l, c);
    return e;
}

GreenElement GreenElement::parse_label(const std::string& alg, const std::string& label) {
    return basis(alg, IndecLabel::parse(label));
}

void GreenElement::add(const IndecLabel& l, const Rational& c) {
    if (c.is_zero()) return;
    IndecLabel k = canonicalize(l, algebra);
    auto [it, fresh] = terms.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool GreenElement::integral() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.is_integer(); });
}

Rational GreenElement::coefficient(const IndecLabel& l) const {
    auto it = terms.find(canonicalize(l, algebra));
    return it == terms.end() ? Rational(0) : it->second;
}

Rational GreenElement::dim() const {
    Rational d;
    for (const auto& [l, c] : terms) d += c * Rational((long long)label_dim(l, algebra));
    return d;
}

std::string GreenElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : terms) {
        Rational a = c;
        if (!first) {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        } else if (a.sign() < 0) {
            os << "-";
            a = -a;
        }
        if (!a.is_one()) os << a.str() << "·";
        os << l.str();
        first = false;
    }
    return os.str();
}

GreenElement& GreenElement::operator+=(const GreenElement& o) {
    if (algebra.empty()) algebra = o.algebra;
    if (!o.terms.empty() && o.algebra != algebra) throw std::invalid_argument("Green elements over different algebras");
    for (const auto& [l, c] : o.terms) add(l, c);
    return *this;
}

GreenElement& GreenElement::operator-=(const GreenElement& o) {
    if (algebra.empty()) algebra = o.algebra;
    if (!o.terms.empty() && o.algebra != algebra) throw std::invalid_argument("Green elements over different algebras");
    for (const auto& [l, c] : o.terms) add(l, -c);
    return *this;
}

GreenElement& GreenElement::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [l, v] : terms) v *= c;
    return *this;
}

// ---------- products ----------

const std::vector<RuleCorrection>& rule_corrections() {
    static const std::vector<RuleCorrection> list = {
        {"HH", "M⊗N'", "M(r)⊗N'(s) = ⌈rs/2⌉P + ⌊rs/2⌋P_-- + N'(s)_+-",
         "M(r)⊗N'(s) = ⌈rs/2⌉P + ⌊rs/2⌋P_-- + N'(s)_{|r-1|,|r|}"},
    };
    return list;
}

GreenElement closed_form_product(const std::string& alg, const IndecLabel& a, const IndecLabel& b, RuleSet rules) {
    check_algebra(alg);
    auto [X, s] = split_label(alg, a);
    auto [Y, t] = split_label(alg, b);
    // S(s) (x) Y = Y' (x) S(s), with the band parameter scaled by s1 s2 over mabar
    if (alg != "HH" && Y.family == Family::C) Y.eta = Y.eta * Rational(s.first * s.second);
    const Signs u = {s.first * t.first, s.second * t.second};
    GreenElement out(alg);
    if (X.family == Family::S) {
        out.add(Y.twisted(u.first, u.second), 1);
        return out;
    }
    if (Y.family == Family::S) {
        out.add(X.twisted(u.first, u.second), 1);
        return out;
    }
    auto rule = base_rule(alg, X, Y, rules);
    if (!rule) {
        auto& L = learned();
        std::unique_lock lock(L.mu);
        auto& table = L.rules[alg];
        auto it = table.find({X, Y});
        if (it == table.end()) {
            lock.unlock();
            GreenElement g = bruteforce_product(alg, X, Y);
            lock.lock();
            it = table.emplace(std::pair{X, Y}, g).first;
        }
        for (const auto& [l, c] : it->second.terms) out.add(l.twisted(u.first, u.second), c);
        return out;
    }
    for (const auto& [l, k] : *rule) out.add(l.twisted(u.first, u.second), Rational(k));
    return out;
}

void clear_product_cache() {
    auto& cache = brute_cache();
    std::unique_lock lock(cache.mu);
    cache.table.clear();
}

GreenElement bruteforce_product(const std::string& alg, const IndecLabel& a, const IndecLabel& b, std::uint64_t seed) {
    auto key = std::tuple{alg, canonicalize(a, alg), canonicalize(b, alg), seed};
    auto& cache = brute_cache();
    {
        std::shared_lock lock(cache.mu);
        auto it = cache.table.find(key);
        if (it != cache.table.end()) return it->second;
    }
    auto h = algebra_ptr(alg);
    DecomposeOptions opt;
    opt.seed = seed;
    auto d = decompose(tensor(make_module(h, a), make_module(h, b)), opt);
    GreenElement out(alg);
    for (const auto& l : d.summands) out.add(l, 1);
    std::unique_lock lock(cache.mu);
    cache.table.emplace(key, out);
    return out;
}

GreenElement multiply_closed_form(const GreenElement& a, const GreenElement& b, RuleSet rules) {
    if (a.algebra != b.algebra) throw std::invalid_argument("algebra mismatch: " + a.algebra + " vs " + b.algebra);
    GreenElement out(a.algebra);
    for (const auto& [la, ca] : a.terms)
        for (const auto& [lb, cb] : b.terms) out += closed_form_product(a.algebra, la, lb, rules) * (ca * cb);
    return out;
}

GreenElement multiply_bruteforce(const GreenElement& a, const GreenElement& b, std::uint64_t seed) {
    if (a.algebra != b.algebra) throw std::invalid_argument("algebra mismatch: " + a.algebra + " vs " + b.algebra);
    GreenElement out(a.algebra);
    for (const auto& [la, ca] : a.terms)
        for (const auto& [lb, cb] : b.terms) out += bruteforce_product(a.algebra, la, lb, seed) * (ca * cb);
    return out;
}

GreenElement power_closed_form(const GreenElement& a, unsigned n, RuleSet rules) {
    GreenElement out = GreenElement::one(a.algebra);
    for (unsigned i = 0; i < n; ++i) out = multiply_closed_form(out, a, rules);
    return out;
}

std::string rule_family(const std::string& alg, const IndecLabel& a, const IndecLabel& b) {
    IndecLabel X = split_label(alg, a).base, Y = split_label(alg, b).base;
    if (X.family == Family::S || Y.family == Family::S) return "";
    if (base_order(X) > base_order(Y)) std::swap(X, Y);
    auto name = [&](const IndecLabel& l) { return alg == "DH4" && base_order(l) == 1 ? std::string("P+") : family_name(l.family); };
    return name(X) + "⊗" + name(Y);
}

std::vector<std::pair<IndecLabel, IndecLabel>> derived_rules(const std::string& alg) {
    auto& L = learned();
    std::lock_guard lock(L.mu);
    std::vector<std::pair<IndecLabel, IndecLabel>> out;
    for (const auto& [k, v] : L.rules[alg]) out.push_back(k);
    return out;
}

GreenElement stable_quotient(const GreenElement& e) {
    GreenElement out(e.algebra);
    for (const auto& [l, c] : e.terms)
        if (!is_projective_label(l)) out.terms.emplace(l, c);
    return out;
}

}  // namespace greenring
