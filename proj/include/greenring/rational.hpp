#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace greenring {

// Exact rational number. Values that fit in int64 num/den are kept inline;
// anything larger lives in an mpq_class and is demoted again when it shrinks.
class Rational {
public:
    Rational() = default;
    Rational(int v) : n_(v) {}
    Rational(long v) : n_(v) {}
    Rational(long long v) : n_(v) {}
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    static Rational parse(const std::string& s);

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    bool is_small() const { return !big_; }
    int sign() const;

    mpq_class to_mpq() const;
    mpz_class num() const;
    mpz_class den() const;
    double to_double() const;
    std::string str() const;

    Rational operator-() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // this += a * b
    void add_mul(const Rational& a, const Rational& b);

    std::size_t hash() const;

private:
    int64_t n_ = 0;
    int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;

    static Rational from128(__int128 n, __int128 d);
    void assign_mpq(mpq_class&& q);
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace greenring

template <>
struct std::hash<greenring::Rational> {
    std::size_t operator()(const greenring::Rational& q) const { return q.hash(); }
};
