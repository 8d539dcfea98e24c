#include "greenring/label.hpp"

#include <regex>
#include <stdexcept>

namespace greenring {

namespace {

char sign_char(int s) { return s > 0 ? '+' : '-'; }

int parse_sign(char c) {
    if (c == '+') return 1;
    if (c == '-') return -1;
    throw std::invalid_argument(std::string("bad sign '") + c + "'");
}

// "+-", "(+,-)", "{+-}", "{+,-}"
std::pair<int, int> parse_signs(std::string s) {
    std::string t;
    for (char c : s)
        if (c == '+' || c == '-') t += c;
    if (t.size() == 1) return {parse_sign(t[0]), parse_sign(t[0])};
    if (t.size() != 2) throw std::invalid_argument("bad sign pair '" + s + "'");
    return {parse_sign(t[0]), parse_sign(t[1])};
}

int family_order(Family f) {
    switch (f) {
        case Family::S: return 0;
        case Family::P: return 1;
        case Family::M: return 2;
        case Family::W: return 3;
        case Family::N: return 4;
        case Family::Nprime: return 5;
        case Family::C: return 6;
    }
    return 7;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::S: return "S";
        case Family::P: return "P";
        case Family::M: return "M";
        case Family::W: return "W";
        case Family::N: return "N";
        case Family::Nprime: return "N'";
        case Family::C: return "C";
    }
    return "?";
}

std::string IndecLabel::str() const {
    std::string signs = {sign_char(s1), sign_char(s2)};
    if (family == Family::S || family == Family::P)
        return family_name(family) + "(" + sign_char(s1) + "," + sign_char(s2) + ")";
    std::string out = family_name(family);
    if (family == Family::C)
        out += "(" + std::to_string(rank) + "," + eta.str() + ")";
    else
        out += "(" + std::to_string(rank) + ")";
    if (s1 != 1 || s2 != 1) out += "_" + signs;
    return out;
}

IndecLabel IndecLabel::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "1") return simple(1, 1);
    if (s == "S") return simple(-1, -1);
    if (s == "P") return projective(1, 1);

    static const std::regex sp_re(R"(^([SP])(?:_?)(\(?[+-],?[+-]\)?|\{[+-],?[+-]\}|[+-])$)");
    static const std::regex str_re(R"(^(M|W|N'|Nprime|N)\(?(\d+)\)?(?:_(.+))?$)");
    static const std::regex band_re(R"(^C\((\d+),([-+]?\d+(?:/\d+)?)\)(?:_(.+))?$)");
    std::smatch m;
    if (std::regex_match(s, m, sp_re)) {
        auto [a, b] = parse_signs(m[2]);
        return m[1] == "S" ? simple(a, b) : projective(a, b);
    }
    if (std::regex_match(s, m, str_re)) {
        Family f = Family::M;
        std::string fam = m[1];
        if (fam == "W") f = Family::W;
        if (fam == "N") f = Family::N;
        if (fam == "N'" || fam == "Nprime") f = Family::Nprime;
        int r = std::stoi(m[2]);
        if (r < 1) throw std::invalid_argument("rank must be positive in '" + text + "'");
        auto [a, b] = m[3].matched ? parse_signs(m[3]) : std::pair{1, 1};
        return string(f, r, a, b);
    }
    if (std::regex_match(s, m, band_re)) {
        int r = std::stoi(m[1]);
        Rational eta = Rational::parse(m[2]);
        if (r < 1) throw std::invalid_argument("rank must be positive in '" + text + "'");
        if (eta.is_zero()) throw std::invalid_argument("band parameter must be nonzero in '" + text + "'");
        auto [a, b] = m[3].matched ? parse_signs(m[3]) : std::pair{1, 1};
        return band(r, eta, a, b);
    }
    throw std::invalid_argument("cannot parse module label '" + text + "'");
}

std::strong_ordering operator<=>(const IndecLabel& a, const IndecLabel& b) {
    if (auto c = family_order(a.family) <=> family_order(b.family); c != 0) return c;
    if (auto c = a.rank <=> b.rank; c != 0) return c;
    // '+' before '-'
    if (auto c = (a.s1 < 0) <=> (b.s1 < 0); c != 0) return c;
    if (auto c = (a.s2 < 0) <=> (b.s2 < 0); c != 0) return c;
    return a.eta <=> b.eta;
}

std::size_t label_dim(const IndecLabel& l, const std::string& algebra) {
    const auto r = std::size_t(l.rank);
    switch (l.family) {
        case Family::S: return 1;
        case Family::P: return (algebra == "DH4" && l.s1 != l.s2) ? 2 : 4;
        case Family::M:
        case Family::W: return 2 * r + 1;
        case Family::N:
        case Family::Nprime: return 2 * r;
        case Family::C: return algebra == "HH" ? 4 * r : 2 * r;
    }
    return 0;
}

bool is_projective_label(const IndecLabel& l) { return l.family == Family::P; }

}  // namespace greenring
