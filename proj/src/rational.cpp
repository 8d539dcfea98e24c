#include "greenring/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace greenring {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<int64_t>::max();

uint64_t gcd64(uint64_t a, uint64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    int shift = __builtin_ctzll(a | b);
    a >>= __builtin_ctzll(a);
    while (b != 0) {
        b >>= __builtin_ctzll(b);
        if (a > b) std::swap(a, b);
        b -= a;
    }
    return a << shift;
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        if ((a >> 64) == 0 && (b >> 64) == 0) return gcd64(uint64_t(a), uint64_t(b));
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 abs128(i128 v) { return v < 0 ? u128(-v) : u128(v); }

mpz_class mpz_from128(i128 v) {
    u128 a = abs128(v);
    uint64_t limbs[2] = {uint64_t(a), uint64_t(a >> 64)};
    mpz_class z;
    mpz_import(z.get_mpz_t(), 2, -1, sizeof(uint64_t), 0, 0, limbs);
    if (v < 0) z = -z;
    return z;
}

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    *this = from128(n, d);
}

Rational::Rational(const mpq_class& q) { assign_mpq(mpq_class(q)); }

Rational Rational::from128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Rational r;
    if (n == 0) return r;
    u128 g = gcd128(abs128(n), u128(d));
    if (g > 1) {
        n /= i128(g);
        d /= i128(g);
    }
    if (fits(n) && d <= kMax) {
        r.n_ = int64_t(n);
        r.d_ = int64_t(d);
    } else {
        r.big_ = std::make_unique<mpq_class>(mpz_from128(n), mpz_from128(d));
    }
    return r;
}

void Rational::assign_mpq(mpq_class&& q) {
    q.canonicalize();
    const mpz_class& nu = q.get_num();
    const mpz_class& de = q.get_den();
    if (mpz_fits_slong_p(nu.get_mpz_t()) && mpz_fits_slong_p(de.get_mpz_t()) &&
        nu != std::numeric_limits<int64_t>::min()) {
        n_ = nu.get_si();
        d_ = de.get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

Rational Rational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::domain_error("zero denominator");
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(n_), mpz_class(d_));
}

mpz_class Rational::num() const { return big_ ? big_->get_num() : mpz_class(n_); }
mpz_class Rational::den() const { return big_ ? big_->get_den() : mpz_class(d_); }

double Rational::to_double() const { return big_ ? big_->get_d() : double(n_) / double(d_); }

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.big_ = std::make_unique<mpq_class>(-*big_);
    } else {
        r.n_ = -n_;
        r.d_ = d_;
    }
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (big_) {
        mpq_class q = 1 / *big_;
        Rational r;
        r.assign_mpq(std::move(q));
        return r;
    }
    return from128(d_, n_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.d_ == 1 && b.d_ == 1) {
            i128 s = i128(a.n_) + b.n_;
            if (fits(s)) {
                Rational r;
                r.n_ = int64_t(s);
                return r;
            }
            return Rational::from128(s, 1);
        }
        if (a.d_ == b.d_) return Rational::from128(i128(a.n_) + b.n_, a.d_);
        return Rational::from128(i128(a.n_) * b.d_ + i128(b.n_) * a.d_, i128(a.d_) * b.d_);
    }
    Rational r;
    r.assign_mpq(a.to_mpq() + b.to_mpq());
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.d_ == 1 && b.d_ == 1) {
            i128 s = i128(a.n_) - b.n_;
            if (fits(s)) {
                Rational r;
                r.n_ = int64_t(s);
                return r;
            }
            return Rational::from128(s, 1);
        }
        if (a.d_ == b.d_) return Rational::from128(i128(a.n_) - b.n_, a.d_);
        return Rational::from128(i128(a.n_) * b.d_ - i128(b.n_) * a.d_, i128(a.d_) * b.d_);
    }
    Rational r;
    r.assign_mpq(a.to_mpq() - b.to_mpq());
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.n_ == 0 || b.n_ == 0) return Rational();
        if (a.d_ == 1 && b.d_ == 1) {
            i128 p = i128(a.n_) * b.n_;
            if (fits(p)) {
                Rational r;
                r.n_ = int64_t(p);
                return r;
            }
            return Rational::from128(p, 1);
        }
        uint64_t g1 = gcd64(uint64_t(a.n_ < 0 ? -a.n_ : a.n_), uint64_t(b.d_));
        uint64_t g2 = gcd64(uint64_t(b.n_ < 0 ? -b.n_ : b.n_), uint64_t(a.d_));
        i128 n = i128(a.n_ / int64_t(g1)) * (b.n_ / int64_t(g2));
        i128 d = i128(a.d_ / int64_t(g2)) * (b.d_ / int64_t(g1));
        if (fits(n) && d <= kMax) {
            Rational r;
            r.n_ = int64_t(n);
            r.d_ = int64_t(d);
            return r;
        }
        return Rational::from128(n, d);
    }
    if (a.is_zero() || b.is_zero()) return Rational();
    Rational r;
    r.assign_mpq(a.to_mpq() * b.to_mpq());
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!b.big_) {
        Rational inv;
        if (b.n_ < 0) {
            inv.n_ = -b.d_;
            inv.d_ = -b.n_;
        } else {
            inv.n_ = b.d_;
            inv.d_ = b.n_;
        }
        return a * inv;
    }
    return a * b.inverse();
}

Rational& Rational::operator+=(const Rational& o) { return *this = *this + o; }
Rational& Rational::operator-=(const Rational& o) { return *this = *this - o; }
Rational& Rational::operator*=(const Rational& o) { return *this = *this * o; }
Rational& Rational::operator/=(const Rational& o) { return *this = *this / o; }

void Rational::add_mul(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return;
    if (!big_ && !a.big_ && !b.big_ && d_ == 1 && a.d_ == 1 && b.d_ == 1) {
        i128 s = i128(n_) + i128(a.n_) * b.n_;
        if (fits(s)) {
            n_ = int64_t(s);
            return;
        }
    }
    *this = *this + a * b;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: big values never fit inline
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        i128 l = i128(a.n_) * b.d_;
        i128 r = i128(b.n_) * a.d_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::size_t Rational::hash() const {
    if (big_) return std::hash<std::string>()(big_->get_str());
    return std::size_t(n_) * 1000003u ^ std::size_t(d_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace greenring
