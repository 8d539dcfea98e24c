#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "greenring/decomposer.hpp"
#include "greenring/green.hpp"
#include "greenring/structure.hpp"
#include "greenring/suites.hpp"

using namespace greenring;
using nlohmann::ordered_json;

namespace {

struct Config {
    std::string algebra = "mabar";
    std::vector<std::string> labels;
    std::string suite;
    int max_rank = 4;
    std::string etas = "1,2,-1";
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text";
    std::string out;
    std::string rules = "stated";
    bool bruteforce = false;
};

std::vector<Rational> parse_etas(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rational e = Rational::parse(item);
        if (e.is_zero()) throw std::invalid_argument("eta must be nonzero");
        out.push_back(e);
    }
    if (out.empty()) throw std::invalid_argument("empty eta list");
    return out;
}

SweepOptions sweep(const Config& c) {
    if (c.max_rank < 1) throw std::invalid_argument("--max-rank must be at least 1");
    SweepOptions o;
    o.max_rank = c.max_rank;
    o.etas = parse_etas(c.etas);
    o.seed = c.seed;
    return o;
}

RuleSet rule_set(const Config& c) {
    if (c.rules == "stated") return RuleSet::Stated;
    if (c.rules == "corrected") return RuleSet::Corrected;
    throw std::invalid_argument("--rules must be stated or corrected");
}

void emit(const Config& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

int run_algebra(const Config& c) {
    auto h = build_algebra(c.algebra);
    auto axioms = check_hopf_axioms(*h);
    IdempotentSystem prim;
    try {
        prim = named_idempotents(h, "e");
    } catch (const std::invalid_argument&) {
        prim = primitive_idempotents(h, c.seed);
    }
    auto blocks = central_idempotents(h, c.seed);
    auto quiver = ext_quiver(prim);
    if (c.format == "dot") {
        emit(c, quiver.dot());
    } else if (c.format == "json") {
        ordered_json j = ordered_json::parse(algebra_json(*h));
        ordered_json ax = ordered_json::object();
        for (const auto& it : axioms.items) ax[it.name] = it.pass;
        j["axioms"] = ax;
        ordered_json idem = ordered_json::object();
        for (std::size_t i = 0; i < prim.elements.size(); ++i) idem[prim.names[i]] = h->format(prim.elements[i]);
        j["idempotents"] = idem;
        j["blocks"] = blocks.elements.size();
        std::vector<std::string> cen;
        for (const auto& e : blocks.elements) cen.push_back(h->format(e));
        j["central_idempotents"] = cen;
        j["quiver"] = ordered_json::parse(quiver.json());
        emit(c, j.dump(2));
    } else {
        std::ostringstream os;
        os << h->name << ": dim " << h->dim << ", generators";
        for (const auto& g : h->generators) os << ' ' << g;
        os << "\naxioms: " << (axioms.all() ? "pass" : "FAIL") << '\n';
        for (const auto& it : axioms.items)
            if (!it.pass) os << "  FAIL " << it.name << ' ' << it.detail << '\n';
        os << "idempotents:\n";
        for (std::size_t i = 0; i < prim.elements.size(); ++i) os << "  " << prim.names[i] << " = " << h->format(prim.elements[i]) << '\n';
        os << "blocks: " << blocks.elements.size() << '\n';
        os << "quiver arrows:\n";
        for (std::size_t i = 0; i < quiver.vertices.size(); ++i) {
            os << "  " << quiver.vertices[i] << ':';
            for (auto a : quiver.arrows[i]) os << ' ' << a;
            os << '\n';
        }
        emit(c, os.str());
    }
    return axioms.all() ? 0 : 1;
}

int run_module(const Config& c) {
    if (c.labels.size() != 1) throw std::invalid_argument("module takes one label");
    auto h = build_algebra(c.algebra);
    IndecLabel l = IndecLabel::parse(c.labels[0]);
    ModuleRep m = make_module(h, l);
    auto valid = validate_module(m);
    if (c.format == "dot") {
        emit(c, module_dot(m));
    } else if (c.format == "json") {
        ordered_json j = ordered_json::parse(module_json(m));
        j["label"] = l.str();
        j["valid"] = valid.all();
        emit(c, j.dump(2));
    } else {
        std::ostringstream os;
        os << l.str() << " over " << h->name << ": dim " << m.dim() << ", relations " << (valid.all() ? "hold" : "FAIL") << '\n';
        for (std::size_t g = 0; g < m.actions.size(); ++g) os << h->generators[g] << ":\n" << m.actions[g].str() << '\n';
        emit(c, os.str());
    }
    return valid.all() ? 0 : 1;
}

int run_tensor(const Config& c) {
    if (c.labels.size() != 2) throw std::invalid_argument("tensor takes two labels");
    auto h = build_algebra(c.algebra);
    IndecLabel a = IndecLabel::parse(c.labels[0]), b = IndecLabel::parse(c.labels[1]);
    ModuleRep t = tensor(make_module(h, a), make_module(h, b));
    DecomposeOptions opt;
    opt.seed = c.seed;
    Decomposition d = decompose(t, opt);
    GreenElement bridge(c.algebra);
    for (const auto& l : d.summands) bridge.add(l, 1);
    std::optional<GreenElement> closed;
    try {
        closed = closed_form_product(c.algebra, a, b, rule_set(c));
    } catch (const std::exception&) {
        closed.reset();
    }
    const bool agree = closed && *closed == bridge;
    if (c.format == "json") {
        ordered_json j;
        j["algebra"] = c.algebra;
        j["left"] = a.str();
        j["right"] = b.str();
        j["dim"] = t.dim();
        j["seed"] = c.seed;
        j["decomposition"] = bridge.str();
        j["summands"] = ordered_json::parse(d.json())["summands"];
        j["closed_form"] = closed ? closed->str() : "";
        j["rules"] = c.rules;
        j["agree"] = agree;
        emit(c, j.dump(2));
    } else {
        std::ostringstream os;
        os << a.str() << " ⊗ " << b.str() << " = " << bridge.str() << '\n';
        if (closed)
            os << "closed form (" << c.rules << "): " << closed->str() << (agree ? "  [agrees]" : "  [DISAGREES]") << '\n';
        else
            os << "closed form: not available\n";
        emit(c, os.str());
    }
    return agree ? 0 : 1;
}

int run_green(const Config& c) {
    const RuleSet rules = rule_set(c);
    if (c.labels.size() == 2) {
        IndecLabel a = IndecLabel::parse(c.labels[0]), b = IndecLabel::parse(c.labels[1]);
        GreenElement p = closed_form_product(c.algebra, a, b, rules);
        std::optional<GreenElement> q;
        if (c.bruteforce) q = bruteforce_product(c.algebra, a, b, c.seed);
        if (c.format == "json") {
            ordered_json j;
            j["algebra"] = c.algebra;
            j["left"] = a.str();
            j["right"] = b.str();
            j["family"] = rule_family(c.algebra, a, b);
            j["product"] = p.str();
            if (q) {
                j["bruteforce"] = q->str();
                j["agree"] = *q == p;
            }
            emit(c, j.dump(2));
        } else {
            std::string s = "[" + a.str() + "][" + b.str() + "] = " + p.str() + '\n';
            if (q) s += "bridge: " + q->str() + (*q == p ? "  [agrees]\n" : "  [DISAGREES]\n");
            emit(c, s);
        }
        return q && !(*q == p) ? 1 : 0;
    }
    if (!c.labels.empty()) throw std::invalid_argument("green takes zero or two labels");
    auto o = sweep(c);
    std::vector<IndecLabel> gens = {IndecLabel::simple(-1, -1), IndecLabel::projective(1, 1), IndecLabel::string(Family::M, 1),
                                    IndecLabel::string(Family::W, 1)};
    if (c.algebra == "DH4")
        gens.push_back(IndecLabel::projective(1, -1));
    else
        gens.push_back(IndecLabel::simple(1, -1));
    for (int r = 1; r <= o.max_rank; ++r) {
        gens.push_back(IndecLabel::string(Family::N, r));
        gens.push_back(IndecLabel::string(Family::Nprime, r));
        for (const auto& e : o.etas) gens.push_back(IndecLabel::band(r, e));
    }
    ordered_json table = ordered_json::array();
    std::ostringstream os;
    for (const auto& a : gens)
        for (const auto& b : gens) {
            auto p = closed_form_product(c.algebra, a, b, rules);
            table.push_back({{"left", a.str()}, {"right", b.str()}, {"product", p.str()}});
            os << '[' << a.str() << "][" << b.str() << "] = " << p.str() << '\n';
        }
    if (c.format == "json") {
        ordered_json j;
        j["algebra"] = c.algebra;
        j["rules"] = c.rules;
        j["products"] = table;
        emit(c, j.dump(2));
    } else {
        emit(c, os.str());
    }
    return 0;
}

int run_verify(const Config& c) {
    auto o = sweep(c);
    std::vector<std::string> names;
    if (c.suite == "all")
        names = suite_names();
    else
        names = {c.suite};
    bool ok = true;
    ordered_json all = ordered_json::array();
    std::string text;
    for (const auto& n : names) {
        auto rep = run_suite(n, o);
        ok = ok && rep.all();
        all.push_back(ordered_json::parse(rep.json()));
        text += rep.text(true);
    }
    if (c.format == "json")
        emit(c, names.size() == 1 ? all[0].dump(2) : all.dump(2));
    else
        emit(c, text);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"greenring: Hopf algebras, module decompositions and Green rings"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s) {
        s->add_option("--format", c.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
        s->add_option("--out", c.out, "write output to a file");
        s->add_option("--seed", c.seed, "random seed (GREENRING_SEED overrides)");
    };
    auto* alg = app.add_subcommand("algebra", "structure constants, axioms, idempotents, blocks, quiver");
    alg->add_option("--name,--algebra", c.algebra, "H4, mabar, DH4, HH, Z2 or H4xH4");
    common(alg);
    auto* mod = app.add_subcommand("module", "canonical module for a label");
    mod->add_option("--algebra", c.algebra);
    mod->add_option("label", c.labels)->required();
    common(mod);
    auto* ten = app.add_subcommand("tensor", "decompose a tensor product and compare with the closed form");
    ten->add_option("--algebra", c.algebra);
    ten->add_option("labels", c.labels)->required()->expected(2);
    ten->add_option("--rules", c.rules, "stated or corrected");
    common(ten);
    auto* gr = app.add_subcommand("green", "Green ring products (two labels) or the generator table");
    gr->add_option("--algebra", c.algebra);
    gr->add_option("labels", c.labels)->expected(0, 2);
    gr->add_option("--max-rank", c.max_rank);
    gr->add_option("--etas", c.etas, "comma separated, e.g. 1,2,-1");
    gr->add_option("--rules", c.rules, "stated or corrected");
    gr->add_flag("--bruteforce", c.bruteforce, "also decompose through the bridge");
    common(gr);
    auto* ver = app.add_subcommand("verify", "run a verification suite (or all)");
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    ver->add_option("suite", c.suite)->required()->check(CLI::IsMember(choices));
    ver->add_option("--max-rank", c.max_rank);
    ver->add_option("--etas", c.etas);
    common(ver);
    c.format = "";
    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("GREENRING_SEED")) c.seed = std::stoull(env);
    try {
        if (alg->parsed()) {
            if (c.format.empty()) c.format = "text";
            return run_algebra(c);
        }
        if (mod->parsed()) {
            if (c.format.empty()) c.format = "text";
            return run_module(c);
        }
        if (ten->parsed()) {
            if (c.format.empty()) c.format = "text";
            return run_tensor(c);
        }
        if (gr->parsed()) {
            if (c.format.empty()) c.format = "text";
            return run_green(c);
        }
        if (ver->parsed()) {
            if (c.format.empty()) c.format = "json";
            return run_verify(c);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
