#include "greenring/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace greenring {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t deg) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, Rational(1)}); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rational inv = leading().inverse();
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= inv;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * Rational((long long)k);
    return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& t) const {
    Rational r;
    for (std::size_t k = c_.size(); k-- > 0;) r = r * t + c_[k];
    return r;
}

Matrix Polynomial::eval(const Matrix& m) const {
    if (!m.is_square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
    const std::size_t n = m.rows();
    Matrix r(n, n);
    for (std::size_t k = c_.size(); k-- > 0;) {
        r = r * m;
        if (!c_[k].is_zero())
            for (std::size_t i = 0; i < n; ++i) r(i, i) += c_[k];
    }
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] -= b.c_[k];
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j].add_mul(a.c_[i], b.c_[j]);
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
    std::vector<Rational> v(a.c_);
    for (auto& x : v) x *= s;
    return Polynomial(std::move(v));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        Rational c = c_[k];
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        if (c.sign() < 0) c = -c;
        if (!c.is_one() || k == 0) os << c;
        if (k > 0) os << var;
        if (k > 1) os << "^" << k;
        first = false;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> q(std::size_t(a.degree() - db + 1));
    Rational inv = b.leading().inverse();
    for (int k = a.degree(); k >= db; --k) {
        if (r[std::size_t(k)].is_zero()) continue;
        Rational f = r[std::size_t(k)] * inv;
        for (int j = 0; j <= db; ++j) r[std::size_t(k - db + j)].add_mul(-f, b.coeffs()[std::size_t(j)]);
        q[std::size_t(k - db)] = f;
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(1), s1;
    Polynomial t0, t1 = Polynomial::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational inv = r0.leading().inverse();
    return {inv * r0, inv * s0, inv * t0};
}

Polynomial pow(const Polynomial& p, unsigned e) {
    Polynomial r = Polynomial::constant(1);
    for (unsigned k = 0; k < e; ++k) r = r * p;
    return r;
}

Polynomial char_poly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("char_poly needs a square matrix");
    const std::size_t n = m.rows();
    Matrix H = m;
    // reduce to upper Hessenberg form by similarity
    for (std::size_t c = 1; c + 1 < n; ++c) {
        std::size_t i = c;
        while (i < n && H(i, c - 1).is_zero()) ++i;
        if (i == n) continue;
        if (i != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(H(i, j), H(c, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(H(j, i), H(j, c));
        }
        Rational inv = H(c, c - 1).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (H(r, c - 1).is_zero()) continue;
            Rational u = H(r, c - 1) * inv;
            for (std::size_t j = c - 1; j < n; ++j)
                if (!H(c, j).is_zero()) H(r, j).add_mul(-u, H(c, j));
            for (std::size_t j = 0; j < n; ++j)
                if (!H(j, r).is_zero()) H(j, c).add_mul(u, H(j, r));
        }
    }
    std::vector<Polynomial> p(n + 1);
    p[0] = Polynomial::constant(1);
    const Polynomial t = Polynomial::monomial(1, 1);
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = (t - Polynomial::constant(H(k - 1, k - 1))) * p[k - 1];
        Rational prod = 1;
        for (std::size_t i = 1; i < k; ++i) {
            prod *= H(k - i, k - i - 1);
            if (prod.is_zero()) break;
            Rational f = prod * H(k - i - 1, k - 1);
            if (!f.is_zero()) p[k] = p[k] - f * p[k - i - 1];
        }
    }
    return p[n];
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class v) {
    if (v < 0) v = -v;
    std::vector<std::pair<mpz_class, unsigned>> fac;
    for (unsigned long p = 2; p <= 1000000 && mpz_class(p) * p <= v; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            v /= p;
            ++e;
        }
        if (e) fac.emplace_back(mpz_class(p), e);
    }
    if (v > 1) fac.emplace_back(v, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 200000) break;
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;
    Polynomial f = p;
    if (f.coeff(0).is_zero()) {
        roots.push_back(Rational());
        while (f.coeff(0).is_zero()) f = divmod(f, Polynomial::monomial(1, 1)).first;
    }
    if (f.degree() < 1) return roots;
    // integer-normalize
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : f.coeffs()) z.push_back(c.num() * (l / c.den()));
    auto num_div = positive_divisors(z.front());
    auto den_div = positive_divisors(z.back());
    std::set<Rational> cand;
    for (const auto& a : num_div)
        for (const auto& b : den_div) {
            Rational q(mpq_class(a, b));
            cand.insert(q);
            cand.insert(-q);
        }
    for (const auto& q : cand)
        if (f.eval(q).is_zero()) roots.push_back(q);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<Factor> squarefree_split(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_split of zero polynomial");
    std::vector<Factor> yun;
    Polynomial f = p.monic();
    if (f.degree() >= 1) {
        Polynomial a0 = gcd(f, f.derivative());
        Polynomial b = divmod(f, a0).first;
        Polynomial c = divmod(f.derivative(), a0).first;
        Polynomial d = c - b.derivative();
        unsigned i = 1;
        while (b.degree() >= 1) {
            Polynomial a = gcd(b, d);
            Polynomial nb = divmod(b, a).first;
            Polynomial nc = divmod(d, a).first;
            if (a.degree() >= 1) yun.push_back({a, i});
            b = std::move(nb);
            d = nc - b.derivative();
            ++i;
        }
    }
    std::vector<Factor> out;
    for (auto& fac : yun) {
        Polynomial rest = fac.poly;
        for (const auto& r : rational_roots(fac.poly)) {
            out.push_back({Polynomial::linear(r), fac.multiplicity});
            rest = divmod(rest, Polynomial::linear(r)).first;
        }
        if (rest.degree() >= 1) out.push_back({rest.monic(), fac.multiplicity});
    }
    return out;
}

}  // namespace greenring
