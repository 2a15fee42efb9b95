#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sixlines/quadext.hpp"
#include "sixlines/rational.hpp"

namespace sixlines {

// Dense univariate polynomial over an exact field K (Rational or QuadExt).
// Coefficients lowest degree first; leading coefficient nonzero unless empty (zero poly).
template <class K>
class Poly {
  public:
    Poly() = default;
    Poly(K c) { c_.push_back(std::move(c)); trim(); }
    Poly(int c) : Poly(K(c)) {}
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(K(1)); }
    static Poly x() { return monomial(1, K(1)); }
    static Poly monomial(int deg, K c) {
        Poly p;
        if (c == K(0)) return p;
        p.c_.assign(deg + 1, K(0));
        p.c_[deg] = std::move(c);
        return p;
    }
    // product of (x - r) over the given roots
    static Poly from_roots(const std::vector<K>& roots) {
        Poly p = one();
        for (const K& r : roots) p *= Poly(std::vector<K>{K(0) - r, K(1)});
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : K(0); }
    const K& lc() const {
        if (is_zero()) throw std::invalid_argument("Poly: lc of zero");
        return c_.back();
    }
    int ord_at_zero() const {
        if (is_zero()) throw std::invalid_argument("Poly: ord of zero polynomial");
        int i = 0;
        while (c_[i] == K(0)) ++i;
        return i;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = K(0) - c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == K(0)) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const K& s) {
        for (auto& c : c_) c = c * s;
        trim();
        return *this;
    }
    friend Poly operator*(Poly a, const K& s) { a *= s; return a; }
    friend Poly operator*(const K& s, Poly a) { a *= s; return a; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    K operator()(const K& v) const {  // Horner
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<int>(i));
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * lc().inverse();
    }

    // quotient and remainder; requires field coefficients
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::invalid_argument("Poly: division by zero polynomial");
        Poly r = a, q;
        const int db = b.degree();
        const K inv = b.lc().inverse();
        if (r.degree() >= db) q.c_.assign(r.degree() - db + 1, K(0));
        while (!r.is_zero() && r.degree() >= db) {
            const int k = r.degree() - db;
            K f = r.lc() * inv;
            q.c_[k] = f;
            for (int i = 0; i <= db; ++i) r.c_[k + i] -= f * b.c_[i];
            r.trim();
        }
        q.trim();
        return {std::move(q), std::move(r)};
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::invalid_argument("Poly: inexact division");
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    bool divides(const Poly& a) const { return divmod(a, *this).second.is_zero(); }

    Poly pow(int e) const {
        Poly acc = one(), base = *this;
        while (e) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    // u^n * p(1/u); requires deg(p) <= n
    Poly reciprocal(int n) const {
        if (degree() > n) throw std::invalid_argument("Poly: reciprocal bound below degree");
        std::vector<K> r(n + 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
        return Poly(std::move(r));
    }

    Poly substitute(const Poly& inner) const {  // p(inner(x))
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly(*it);
        return acc;
    }

    std::string str(const char* var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
std::string Poly<K>::str(const char* var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == K(0)) continue;
        if (!out.empty()) out += " + ";
        std::string cs = c_[i].str();
        if (i == 0) { out += cs; continue; }
        if (!(c_[i] == K(1))) out += "(" + cs + ")*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

// monic gcd via the Euclidean algorithm; gcd(0,0) = 0
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

// Yun's squarefree decomposition: p = lc * prod f_i^{m_i}, factors monic,
// squarefree, pairwise coprime, multiplicities strictly increasing.
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decompose(const Poly<K>& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
    std::vector<std::pair<Poly<K>, int>> out;
    if (p.degree() == 0) return out;
    Poly<K> pm = p.monic();
    Poly<K> dp = pm.derivative();
    Poly<K> g = poly_gcd(pm, dp);
    if (g.degree() == 0) {
        out.emplace_back(pm, 1);
        return out;
    }
    Poly<K> w = pm / g;
    Poly<K> y = dp / g;
    Poly<K> z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        Poly<K> gi = poly_gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        w = w / gi;
        y = z / gi;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

// pairwise-coprime monic basis spanning the (nonzero squarefree) inputs multiplicatively
template <class K>
std::vector<Poly<K>> gcd_free_basis(const std::vector<Poly<K>>& inputs) {
    std::vector<Poly<K>> basis;
    for (const Poly<K>& in : inputs) {
        if (in.is_zero()) throw std::invalid_argument("gcd_free_basis: zero input");
        std::vector<Poly<K>> work{in.monic()};
        while (!work.empty()) {
            Poly<K> f = std::move(work.back());
            work.pop_back();
            if (f.degree() <= 0) continue;
            bool split = false;
            for (size_t i = 0; i < basis.size(); ++i) {
                Poly<K> g = poly_gcd(f, basis[i]);
                if (g.degree() == 0) continue;
                if (g.degree() < basis[i].degree()) {
                    Poly<K> rest = basis[i] / g;
                    basis[i] = g;
                    basis.push_back(rest.monic());
                }
                work.push_back(f / g);
                split = true;
                break;
            }
            if (!split) basis.push_back(f.monic());
        }
    }
    std::sort(basis.begin(), basis.end(), [](const Poly<K>& a, const Poly<K>& b) {
        return a.degree() < b.degree();
    });
    return basis;
}

// square root within K itself; the hint names the ambient quadratic field for
// rational-valued extension elements
inline std::optional<Rational> field_sqrt(const Rational& v, long long = 0) {
    return v.sqrt_exact();
}
inline std::optional<QuadExt> field_sqrt(const QuadExt& v, long long hint = 0) {
    return v.sqrt_exact(hint);
}

inline long long scalar_radicand(const Rational&) { return 0; }
inline long long scalar_radicand(const QuadExt& v) { return v.radicand(); }

namespace detail {
// Sylvester matrix determinant by Gaussian elimination over the field
template <class K>
K sylvester_determinant(const Poly<K>& p, const Poly<K>& q) {
    const int m = p.degree(), n = q.degree();
    const int N = m + n;
    std::vector<std::vector<K>> M(N, std::vector<K>(N, K(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + m - i] = p.coeff(i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + n - i] = q.coeff(i);
    K det(1);
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (!(M[r][col] == K(0))) { piv = r; break; }
        if (piv < 0) return K(0);
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = K(0) - det;
        }
        det = det * M[col][col];
        K inv = M[col][col].inverse();
        for (int r = col + 1; r < N; ++r) {
            if (M[r][col] == K(0)) continue;
            K f = M[r][col] * inv;
            for (int cc = col; cc < N; ++cc) M[r][cc] -= f * M[col][cc];
        }
    }
    return det;
}

// subresultant PRS (Cohen, Alg. 3.3.7); both arguments nonconstant
template <class K>
K resultant_prs(Poly<K> A, Poly<K> B) {
    bool neg = false;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1)) neg = !neg;
        std::swap(A, B);
    }
    K g(1), h(1);
    while (true) {
        const int da = A.degree(), db = B.degree();
        const int delta = da - db;
        if ((da & 1) && (db & 1)) neg = !neg;
        Poly<K> R = (A * B.lc().pow(delta + 1)) % B;
        A = std::move(B);
        K div = g * h.pow(delta);
        B = R * div.inverse();
        g = A.lc();
        if (delta > 0) h = g.pow(delta) * h.pow(delta - 1).inverse();
        if (B.is_zero()) return K(0);
        if (B.degree() == 0) {
            K res = B.lc().pow(A.degree()) * h.pow(A.degree() - 1).inverse();
            return neg ? K(0) - res : res;
        }
    }
}
}  // namespace detail

// Resultant with the Sylvester-determinant sign convention. Degrees above 8
// go through the subresultant chain; the direct determinant is kept as the
// small-degree path and cross-check oracle.
template <class K>
K resultant(const Poly<K>& p, const Poly<K>& q) {
    if (p.is_zero() || q.is_zero()) return K(0);
    if (p.degree() == 0 && q.degree() == 0) return K(1);
    if (p.degree() == 0) return p.lc().pow(q.degree());
    if (q.degree() == 0) return q.lc().pow(p.degree());
    if (std::max(p.degree(), q.degree()) <= 8) return detail::sylvester_determinant(p, q);
    return detail::resultant_prs(p, q);
}

// Sylvester determinant with formal degrees (m, n) >= the actual degrees; this
// is the convention under which resultants of parametric families specialize
// correctly when leading coefficients vanish
template <class K>
K resultant_formal(const Poly<K>& p, const Poly<K>& q, int m, int n) {
    if (p.degree() > m || q.degree() > n)
        throw std::invalid_argument("resultant_formal: formal degree below actual degree");
    if (m == 0 && n == 0) return K(1);
    const int N = m + n;
    std::vector<std::vector<K>> M(N, std::vector<K>(N, K(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) M[r][r + m - i] = p.coeff(i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) M[n + r][r + n - i] = q.coeff(i);
    K det(1);
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (!(M[r][col] == K(0))) { piv = r; break; }
        if (piv < 0) return K(0);
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = K(0) - det;
        }
        det = det * M[col][col];
        K inv = M[col][col].inverse();
        for (int r = col + 1; r < N; ++r) {
            if (M[r][col] == K(0)) continue;
            K f = M[r][col] * inv;
            for (int cc = col; cc < N; ++cc) M[r][cc] -= f * M[col][cc];
        }
    }
    return det;
}

// Disc(p) = (-1)^{n(n-1)/2} Res(p, p') / lc(p); degree >= 1 required
template <class K>
K discriminant(const Poly<K>& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("discriminant: degree >= 1 required");
    const int n = p.degree();
    K r = resultant(p, p.derivative()) * p.lc().inverse();
    return ((n * (n - 1) / 2) % 2) ? K(0) - r : r;
}

// exact square root of a polynomial over K, if one exists; field_hint names the
// ambient quadratic field when the coefficients happen to be rational
template <class K>
std::optional<Poly<K>> poly_sqrt(const Poly<K>& p, long long field_hint = 0) {
    if (p.is_zero()) return Poly<K>();
    if (p.degree() % 2) return std::nullopt;
    long long hint = field_hint;
    for (const K& c : p.coeffs())
        if (long long r = scalar_radicand(c); r != 0) hint = r;
    auto lr = field_sqrt(p.lc(), hint);
    if (!lr) return std::nullopt;
    const int h = p.degree() / 2;
    Poly<K> r = Poly<K>::monomial(h, *lr);
    K twice_lc = *lr + *lr;
    K inv = twice_lc.inverse();
    while (true) {
        Poly<K> e = p - r * r;
        if (e.is_zero()) return r;
        const int d = e.degree();
        if (d < h || d >= 2 * h) return std::nullopt;
        r += Poly<K>::monomial(d - h, e.lc() * inv);
    }
}

using RatPoly = Poly<Rational>;
using ExtPoly = Poly<QuadExt>;

}  // namespace sixlines
