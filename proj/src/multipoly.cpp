#include "sixlines/multipoly.hpp"

#include <numeric>
#include <stdexcept>

namespace sixlines {

MultiPoly MultiPoly::constant(int arity, Rational c) {
    MultiPoly p(arity);
    if (!c.is_zero()) p.terms_.emplace(Expo(arity, 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(int arity, int var, int exp) {
    if (var < 0 || var >= arity) throw std::invalid_argument("MultiPoly: variable index");
    MultiPoly p(arity);
    Expo e(arity, 0);
    e[var] = exp;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(int arity, Rational c, Expo e) {
    if (static_cast<int>(e.size()) != arity) throw std::invalid_argument("MultiPoly: exponent arity");
    MultiPoly p(arity);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void MultiPoly::add_term(const Expo& e, const Rational& c) {
    if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("MultiPoly: exponent arity");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (arity_ != o.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly r(a.arity_);
    MultiPoly::Expo e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly: negative power");
    MultiPoly acc = constant(arity_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc *= base;
        if (e >>= 1) base *= base;
    }
    return acc;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("MultiPoly: eval arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < arity_; ++i)
            if (e[i]) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != arity_)
        throw std::invalid_argument("MultiPoly: substitute arity mismatch");
    const int out_arity = images.empty() ? 0 : images[0].arity();
    for (const auto& im : images)
        if (im.arity() != out_arity) throw std::invalid_argument("MultiPoly: image arity mismatch");
    MultiPoly acc(out_arity);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = constant(out_arity, c);
        for (int i = 0; i < arity_; ++i)
            if (e[i]) t *= images[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str();
        for (int i = 0; i < arity_; ++i) {
            if (!e[i]) continue;
            out += "*" + names.at(i);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

}  // namespace sixlines
