// unipoly.cpp

#include "smallzeros/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace smallzeros {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& v) {
    UniPoly p;
    if (v != 0) p.c_.push_back(v);
    return p;
}

UniPoly UniPoly::x() { return monomial(Rat(1), 1); }

UniPoly UniPoly::monomial(const Rat& coeff, unsigned deg) {
    UniPoly p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = coeff;
    }
    return p;
}

UniPoly UniPoly::from_int_coeffs(const std::vector<long>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

const Rat& UniPoly::lc() const {
    if (c_.empty()) throw std::domain_error("lc of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (Rat& v : r.c_) v = -v;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rat& s) const {
    if (s == 0) return UniPoly();
    UniPoly r = *this;
    for (Rat& v : r.c_) v *= s;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly r = a;
    int db = b.degree();
    if (a.degree() < db) return {UniPoly(), r};
    std::vector<Rat> q(a.degree() - db + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        Rat f = r.lc() / b.lc();
        q[k] = f;
        // r -= f * x^k * b
        for (int i = 0; i <= db; ++i) r.c_[k + i] -= f * b.c_[i];
        r.trim();
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(d));
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::reversed() const {
    std::vector<Rat> c(c_.rbegin(), c_.rend());
    return UniPoly(std::move(c));
}

UniPoly UniPoly::shift_down(unsigned k) const {
    if (k == 0) return *this;
    if (c_.size() < k) throw std::domain_error("shift_down: degree too small");
    for (unsigned i = 0; i < k; ++i)
        if (c_[i] != 0) throw std::domain_error("shift_down: not divisible by x^k");
    return UniPoly(std::vector<Rat>(c_.begin() + k, c_.end()));
}

unsigned UniPoly::trailing_order() const {
    if (is_zero()) return 0;
    unsigned k = 0;
    while (c_[k] == 0) ++k;
    return k;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = divrem(f, g).second;
        f = g;
        g = r;
    }
    if (f.is_zero()) return f;
    return f.scaled(Rat(1) / f.lc());  // monic
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero() || degree() == 0) return *this;
    UniPoly g = gcd(*this, derivative());
    return divrem(*this, g).first;
}

std::pair<std::vector<Int>, Rat> UniPoly::integer_primitive() const {
    if (is_zero()) return {{}, Rat(0)};
    Rat content = rational_content(c_);
    if (c_.back() < 0) content = -content;
    std::vector<Int> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Rat v = c_[i] / content;
        if (v.get_den() != 1) throw std::logic_error("integer_primitive: internal error");
        out[i] = v.get_num();
    }
    return {out, content};
}

bool UniPoly::has_integer_coeffs() const {
    for (const Rat& v : c_)
        if (v.get_den() != 1) return false;
    return true;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rat v = c_[i];
        if (!first) {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0 || v != 1) {
            os << rat_str(v);
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

int ip_degree(const IntPoly& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[d] == 0) --d;
    return d;
}

IntPoly ip_derivative(const IntPoly& f) {
    if (f.size() <= 1) return {};
    IntPoly d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = f[i] * static_cast<long>(i);
    return d;
}

Int ip_eval(const IntPoly& f, const Int& x) {
    Int acc = 0;
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

Dyadic ip_eval_dyadic(const IntPoly& f, const Dyadic& x) {
    Dyadic acc;
    for (size_t i = f.size(); i-- > 0;) acc = acc * x + Dyadic(f[i]);
    return acc;
}

int ip_sign_at(const IntPoly& f, const Dyadic& x) { return ip_eval_dyadic(f, x).sign(); }

Enclosure ip_eval_box(const IntPoly& f, const Enclosure& x, long prec) {
    Enclosure acc;  // zero
    for (size_t i = f.size(); i-- > 0;) {
        Enclosure c = Enclosure::point(Dyadic(f[i]), Dyadic::zero());
        acc = (acc * x + c).round_outward(prec);
    }
    return acc;
}

UniPoly ip_to_unipoly(const IntPoly& f) {
    std::vector<Rat> c(f.size());
    for (size_t i = 0; i < f.size(); ++i) c[i] = Rat(f[i]);
    return UniPoly(std::move(c));
}

}  // namespace smallzeros
