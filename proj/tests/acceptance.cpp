#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>

#include "greenring/decomposer.hpp"
#include "greenring/green.hpp"
#include "greenring/suites.hpp"

using namespace greenring;

namespace {

// pinned limits
constexpr double kRuleSweepSeconds = 600;  // criterion 1
constexpr double kSingleTensorSeconds = 30;   // criterion 2
constexpr int kMaxRank = 4;
constexpr int kProbeRank = 3;                 // criterion 4 probes
constexpr int kRandomInstances = 100;         // criterion 10
constexpr int kSeeds = 5;
constexpr std::uint64_t kRandomSeed = 7;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

void line(int n, bool pass, const std::string& detail) {
    std::printf("criterion %2d: %s  %s\n", n, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

std::string counts(const VerificationReport& r) {
    return std::to_string(r.passed()) + "/" + std::to_string(r.cases.size()) + " cases";
}

// failures grouped by rule, e.g. "M⊗N'"
std::string failure_summary(const VerificationReport& r) {
    std::map<std::string, std::size_t> by;
    std::map<std::string, std::string> note;
    for (const auto& c : r.cases) {
        if (c.pass) continue;
        std::string k = c.key.substr(0, c.key.find(" ["));
        auto sp = k.find(' ');
        if (k.find(" ⊗ ") != std::string::npos && sp != std::string::npos) k = k.substr(0, sp);
        ++by[k];
        note[k] = c.note;
    }
    std::string s;
    for (const auto& [k, n] : by) s += "\n      " + std::to_string(n) + " x " + k + (note[k].empty() ? "" : " (" + note[k] + ")");
    return s;
}

IndecLabel random_label(const std::string& alg, std::mt19937_64& rng) {
    const std::vector<Rational> etas = {1, 2, -1};
    std::uniform_int_distribution<int> fam(0, 6), rank(1, kMaxRank), sign(0, 1), eta(0, 2);
    int s1 = sign(rng) ? 1 : -1, s2 = sign(rng) ? 1 : -1;
    if (alg == "DH4") s2 = s1;
    switch (fam(rng)) {
        case 0: return IndecLabel::simple(s1, s2);
        case 1: return IndecLabel::projective(s1, s2);
        case 2: return IndecLabel::string(Family::M, rank(rng), s1, s2);
        case 3: return IndecLabel::string(Family::W, rank(rng), s1, s2);
        case 4: return IndecLabel::string(Family::N, rank(rng), s1, s2);
        case 5: return IndecLabel::string(Family::Nprime, rank(rng), s1, s2);
        default: return IndecLabel::band(rank(rng), etas[eta(rng)], s1, s2);
    }
}

}  // namespace

int main() {
    SweepOptions opt;
    opt.max_rank = kMaxRank;
    opt.etas = {1, 2, -1};

    std::map<std::string, VerificationReport> battery;
    std::map<std::string, std::string> battery_json;
    for (const auto& name : suite_names()) {
        battery[name] = run_suite(name, opt);
        auto r = battery[name];
        r.seconds = 0;
        battery_json[name] = r.json();
    }

    // 1
    {
        const auto& r = battery["theorem-dec"];
        bool fast = r.seconds < kRuleSweepSeconds;
        line(1, r.all() && fast,
             counts(r) + " (mabar and DH4, r,s<=4, all twists), " + std::to_string(int(r.seconds)) + " s" + failure_summary(r));
    }
    // 2
    {
        const auto& r = battery["theorem-dec1"];
        double worst = 0;
        std::string worst_key;
        auto h = build_algebra("HH");
        for (auto [a, b] : std::vector<std::pair<IndecLabel, IndecLabel>>{
                 {IndecLabel::band(kMaxRank, 2), IndecLabel::band(kMaxRank, 2)},
                 {IndecLabel::string(Family::M, kMaxRank), IndecLabel::string(Family::W, kMaxRank)},
                 {IndecLabel::string(Family::W, kMaxRank), IndecLabel::string(Family::W, kMaxRank)}}) {
            auto t0 = Clock::now();
            decompose(tensor(make_module(h, a), make_module(h, b)));
            double s = since(t0);
            if (s > worst) {
                worst = s;
                worst_key = a.str() + " x " + b.str();
            }
        }
        line(2, r.all() && worst < kSingleTensorSeconds,
             counts(r) + ", slowest single decomposition " + worst_key + " " + std::to_string(worst) + " s" + failure_summary(r));
    }
    // 3
    {
        const auto& r = battery["green-relations"];
        line(3, r.all(), counts(r) + " (relation lists and ring laws, r,s<=4)" + failure_summary(r));
    }
    // 4
    {
        const auto& r = battery["commutativity"];
        SweepOptions p = opt;
        p.max_rank = kProbeRank;
        auto twists = verify_twist_commutation(opt);
        auto d = commutativity_probe("DH4", p), hh = commutativity_probe("HH", p);
        bool witness = false;
        for (const auto& c : twists.cases)
            if (c.key.find("witness") != std::string::npos) witness = c.pass;
        line(4, r.all() && twists.all() && d.all() && hh.all() && witness,
             "twist commutation " + counts(twists) + ", witness " + (witness ? "exhibited" : "missing") + ", DH4 probe " + counts(d) +
                 ", HH probe " + counts(hh) + failure_summary(r));
    }
    // 5
    {
        const auto &a = battery["hopf-axioms"], &c = battery["cocycles"], &t = battery["twist-iso"];
        line(5, a.all() && c.all() && t.all(),
             "axioms " + counts(a) + ", cocycles " + counts(c) + ", twists " + counts(t) + failure_summary(a) + failure_summary(c) +
                 failure_summary(t));
    }
    // 6
    {
        const auto& r = battery["idempotents"];
        line(6, r.all(), counts(r) + failure_summary(r));
    }
    // 7
    {
        const auto& r = battery["quivers"];
        line(7, r.all(), counts(r) + failure_summary(r));
    }
    // 8
    {
        const auto& r = battery["proj-class"];
        std::string dims;
        for (const char* a : {"mabar", "DH4", "HH"}) dims += std::string(" ") + a + "=" + std::to_string(projective_class_algebra(a).quotient_dim);
        line(8, r.all(), counts(r) + ", quotient dims" + dims + failure_summary(r));
    }
    // 9
    {
        const auto& r = battery["radicals"];
        line(9, r.all(), counts(r) + failure_summary(r));
    }
    // 10
    {
        clear_product_cache();
        bool same = true;
        std::string diff;
        for (const auto& name : suite_names()) {
            auto r = run_suite(name, opt);
            r.seconds = 0;
            if (!(r == battery[name]) || r.json() != battery_json[name]) {
                same = false;
                diff += " " + name;
            }
        }
        std::mt19937_64 rng(kRandomSeed);
        const std::vector<std::string> algs = {"mabar", "DH4", "HH"};
        int agree = 0;
        std::string bad;
        for (int i = 0; i < kRandomInstances; ++i) {
            const auto& alg = algs[rng() % algs.size()];
            auto h = build_algebra(alg);
            IndecLabel a = random_label(alg, rng), b = random_label(alg, rng);
            ModuleRep t = tensor(make_module(h, a), make_module(h, b));
            std::vector<IndecLabel> first;
            bool ok = true;
            for (int s = 0; s < kSeeds; ++s) {
                DecomposeOptions o;
                o.seed = kDefaultSeed + 1000 * std::uint64_t(s);
                auto d = decompose(t, o).summands;
                if (s == 0) first = d;
                ok = ok && d == first;
            }
            if (ok)
                ++agree;
            else
                bad += " " + alg + ":" + a.str() + "x" + b.str();
        }
        line(10, same && agree == kRandomInstances,
             std::string("battery rerun ") + (same ? "identical" : "differs in" + diff) + ", random tensors " + std::to_string(agree) +
                 "/" + std::to_string(kRandomInstances) + " stable across " + std::to_string(kSeeds) + " seeds" + bad);
    }
    return 0;
}
