#include "sixlines/rational.hpp"

#include <ostream>

namespace sixlines {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::invalid_argument("Rational: negative power of zero");
        return Rational(0);
    }
    Rational base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
    return Rational(mpq_class(n, d));
}

std::optional<Rational> Rational::sqrt_exact() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return Rational(0);
    const mpz_class n = v_.get_num(), d = v_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

std::optional<Rational> Rational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    auto is_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '-') t.remove_prefix(1);
        if (t.empty()) return false;
        for (char ch : t)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string_view ns = s.substr(0, slash);
    std::string_view ds = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    if (!is_int(ns)) return std::nullopt;
    mpz_class num(std::string(ns), 10);
    if (slash == std::string_view::npos) return Rational(mpq_class(num));
    if (!is_int(ds) || ds.front() == '-') return std::nullopt;
    mpz_class den(std::string(ds), 10);
    if (den == 0) return std::nullopt;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class squarefree_core(const mpz_class& n, mpz_class* square) {
    if (n == 0) throw std::invalid_argument("squarefree_core: zero input");
    mpz_class core = n < 0 ? mpz_class(-1) : mpz_class(1);
    mpz_class sq = 1;
    mpz_class m = ::abs(n);

    static constexpr unsigned long kTrialBound = 100000;
    for (unsigned long p = 2; p <= kTrialBound && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) sq *= p;
        if (e % 2) core *= p;
    }
    if (m > 1) {
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
            sq *= r;
            m = 1;
        } else {
            // tail has no prime factor <= kTrialBound and is not a square;
            // below kTrialBound^3 it is p, pq, or p^3 -- p^3 would be a
            // forbidden size, so tail < bound^3 is certified squarefree
            mpz_class bound3 = mpz_class(kTrialBound) * kTrialBound * kTrialBound;
            if (m >= bound3)
                throw std::domain_error("squarefree_core: radicand tail too large to certify");
            core *= m;
            m = 1;
        }
    }
    if (square) *square = sq;
    return core;
}

}  // namespace sixlines
