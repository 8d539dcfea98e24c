#pragma once

#include <compare>
#include <string>

#include "greenring/rational.hpp"

namespace greenring {

enum class Family { S, P, M, W, N, Nprime, C };

// Isomorphism-class name: family, rank, sign twist (s1,s2) in {+1,-1}, band parameter.
struct IndecLabel {
    Family family = Family::S;
    int rank = 0;
    int s1 = 1, s2 = 1;
    Rational eta;

    static IndecLabel simple(int s1, int s2) { return {Family::S, 0, s1, s2, {}}; }
    static IndecLabel projective(int s1, int s2) { return {Family::P, 0, s1, s2, {}}; }
    static IndecLabel string(Family f, int r, int s1 = 1, int s2 = 1) { return {f, r, s1, s2, {}}; }
    static IndecLabel band(int r, const Rational& eta, int s1 = 1, int s2 = 1) { return {Family::C, r, s1, s2, eta}; }

    bool has_rank() const { return family != Family::S && family != Family::P; }
    IndecLabel twisted(int t1, int t2) const {
        IndecLabel l = *this;
        l.s1 *= t1;
        l.s2 *= t2;
        return l;
    }

    std::string str() const;
    // Grammar: S(s1,s2) | P(s1,s2) | M<r> | W<r> | N<r> | N'<r> | C(<r>,<eta>), optional _s1s2 suffix; "1" is S(+,+)
    static IndecLabel parse(const std::string& text);

    friend bool operator==(const IndecLabel& a, const IndecLabel& b) = default;
    friend std::strong_ordering operator<=>(const IndecLabel& a, const IndecLabel& b);
};

std::string family_name(Family f);
// Dimension of the canonical module with this label over the named algebra.
std::size_t label_dim(const IndecLabel& l, const std::string& algebra);
bool is_projective_label(const IndecLabel& l);

}  // namespace greenring

template <>
struct std::hash<greenring::IndecLabel> {
    std::size_t operator()(const greenring::IndecLabel& l) const {
        return std::size_t(l.family) * 1315423911u ^ std::size_t(l.rank) * 2654435761u ^ std::size_t(l.s1 + 2) * 97 ^
               std::size_t(l.s2 + 2) * 7919 ^ l.eta.hash();
    }
};
