// dyadic.cpp

#include "smallzeros/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace smallzeros {

void Dyadic::normalize() {
    if (man_ == 0) {
        exp_ = 0;
        return;
    }
    mp_bitcnt_t tz = mpz_scan1(man_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_fdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), tz);
        exp_ += static_cast<long>(tz);
    }
}

static long bit_length(const mpz_class& z) {
    if (z == 0) return 0;
    return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long e = std::min(a.exp_, b.exp_);
    mpz_class ma = a.man_, mb = b.man_;
    if (a.exp_ > e) mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), a.exp_ - e);
    if (b.exp_ > e) mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), b.exp_ - e);
    return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.man_ * b.man_, a.exp_ + b.exp_);
}

int Dyadic::cmp(const Dyadic& rhs) const {
    int sa = sign(), sb = rhs.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    Dyadic d = *this - rhs;
    return d.sign();
}

Dyadic Dyadic::round_down(long prec) const {
    if (man_ == 0) return *this;
    long bits = bit_length(man_);
    if (bits <= prec) return *this;
    long shift = bits - prec;
    mpz_class q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), shift);
    return Dyadic(q, exp_ + shift);
}

Dyadic Dyadic::round_up(long prec) const {
    if (man_ == 0) return *this;
    long bits = bit_length(man_);
    if (bits <= prec) return *this;
    long shift = bits - prec;
    mpz_class q;
    mpz_cdiv_q_2exp(q.get_mpz_t(), man_.get_mpz_t(), shift);
    return Dyadic(q, exp_ + shift);
}

Dyadic Dyadic::from_mpq_down(const mpq_class& q, long prec) {
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (num == 0) return Dyadic();
    // power-of-two denominators are exact
    if (mpz_scan1(den.get_mpz_t(), 0) == static_cast<mp_bitcnt_t>(bit_length(den) - 1)) {
        return Dyadic(num, -(bit_length(den) - 1));
    }
    long k = prec + bit_length(den) - bit_length(num) + 2;
    mpz_class t;
    if (k >= 0) {
        mpz_mul_2exp(t.get_mpz_t(), num.get_mpz_t(), k);
        mpz_fdiv_q(t.get_mpz_t(), t.get_mpz_t(), den.get_mpz_t());
    } else {
        mpz_class d2;
        mpz_mul_2exp(d2.get_mpz_t(), den.get_mpz_t(), -k);
        mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), d2.get_mpz_t());
    }
    return Dyadic(t, -k);
}

Dyadic Dyadic::from_mpq_up(const mpq_class& q, long prec) {
    return -from_mpq_down(mpq_class(-q), prec);
}

Dyadic Dyadic::root_down(unsigned long n, long prec) const {
    if (sign() < 0) throw std::domain_error("root of negative dyadic");
    if (man_ == 0) return Dyadic();
    // scale so the exponent is divisible by n and the mantissa carries
    // at least n*prec bits
    long e = exp_;
    mpz_class m = man_;
    long want = static_cast<long>(n) * (prec + 2);
    long shift = 0;
    long bits = bit_length(m);
    if (bits < want) shift = want - bits;
    long r = ((e - shift) % static_cast<long>(n) + static_cast<long>(n)) % static_cast<long>(n);
    shift += r;  // make (e - shift) divisible by n
    if (shift > 0) {
        mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), shift);
        e -= shift;
    }
    mpz_class root, rem;
    mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t(), n);
    return Dyadic(root, e / static_cast<long>(n));
}

Dyadic Dyadic::root_up(unsigned long n, long prec) const {
    if (sign() < 0) throw std::domain_error("root of negative dyadic");
    if (man_ == 0) return Dyadic();
    long e = exp_;
    mpz_class m = man_;
    long want = static_cast<long>(n) * (prec + 2);
    long shift = 0;
    long bits = bit_length(m);
    if (bits < want) shift = want - bits;
    long r = ((e - shift) % static_cast<long>(n) + static_cast<long>(n)) % static_cast<long>(n);
    shift += r;
    if (shift > 0) {
        mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), shift);
        e -= shift;
    }
    mpz_class root, rem;
    mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t(), n);
    if (rem != 0) root += 1;
    return Dyadic(root, e / static_cast<long>(n));
}

mpq_class Dyadic::to_mpq() const {
    mpq_class q(man_);
    if (exp_ >= 0) {
        mpz_class f;
        mpz_ui_pow_ui(f.get_mpz_t(), 2, exp_);
        q *= mpq_class(f);
    } else {
        mpz_class f;
        mpz_ui_pow_ui(f.get_mpz_t(), 2, -exp_);
        q /= mpq_class(f);
    }
    q.canonicalize();
    return q;
}

double Dyadic::to_double() const {
    return mpz_get_d(man_.get_mpz_t()) * std::ldexp(1.0, static_cast<int>(std::max<long>(-1074, std::min<long>(1024, exp_))));
}

std::string Dyadic::str() const {
    mpq_class q = to_mpq();
    return q.get_str();
}

// ---------------------------------------------------------------------------

DyInterval::DyInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("DyInterval: lo > hi");
}

DyInterval DyInterval::of_mpq(const mpq_class& q, long prec) {
    return DyInterval(Dyadic::from_mpq_down(q, prec), Dyadic::from_mpq_up(q, prec));
}

DyInterval DyInterval::of_mpq(const mpq_class& qlo, const mpq_class& qhi, long prec) {
    return DyInterval(Dyadic::from_mpq_down(qlo, prec), Dyadic::from_mpq_up(qhi, prec));
}

bool DyInterval::contains(const mpq_class& q) const {
    return lo.to_mpq() <= q && q <= hi.to_mpq();
}

DyInterval operator+(const DyInterval& a, const DyInterval& b) {
    return DyInterval(a.lo + b.lo, a.hi + b.hi);
}

DyInterval operator-(const DyInterval& a, const DyInterval& b) {
    return DyInterval(a.lo - b.hi, a.hi - b.lo);
}

DyInterval operator*(const DyInterval& a, const DyInterval& b) {
    Dyadic p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Dyadic lo = p1, hi = p1;
    for (const Dyadic* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (*p > hi) hi = *p;
    }
    return DyInterval(lo, hi);
}

DyInterval DyInterval::sq() const {
    if (lo.sign() >= 0) return DyInterval(lo * lo, hi * hi);
    if (hi.sign() <= 0) return DyInterval(hi * hi, lo * lo);
    Dyadic m = std::max(lo * lo, hi * hi);
    return DyInterval(Dyadic::zero(), m);
}

DyInterval DyInterval::scale(const Dyadic& c) const {
    if (c.sign() >= 0) return DyInterval(lo * c, hi * c);
    return DyInterval(hi * c, lo * c);
}

DyInterval DyInterval::scale_mpq(const mpq_class& c, long prec) const {
    mpq_class a = lo.to_mpq() * c, b = hi.to_mpq() * c;
    if (a > b) std::swap(a, b);
    return DyInterval(Dyadic::from_mpq_down(a, prec), Dyadic::from_mpq_up(b, prec));
}

DyInterval DyInterval::div(const DyInterval& num, const DyInterval& den, long prec) {
    if (den.contains_zero()) throw std::domain_error("interval division by interval containing 0");
    mpq_class nl = num.lo.to_mpq(), nh = num.hi.to_mpq();
    mpq_class dl = den.lo.to_mpq(), dh = den.hi.to_mpq();
    mpq_class q1 = nl / dl, q2 = nl / dh, q3 = nh / dl, q4 = nh / dh;
    mpq_class lo = q1, hi = q1;
    for (const mpq_class* q : {&q2, &q3, &q4}) {
        if (*q < lo) lo = *q;
        if (*q > hi) hi = *q;
    }
    return DyInterval(Dyadic::from_mpq_down(lo, prec), Dyadic::from_mpq_up(hi, prec));
}

DyInterval DyInterval::sqrt_outward(long prec) const {
    if (lo.sign() < 0) throw std::domain_error("sqrt of interval with negative part");
    return DyInterval(lo.sqrt_down(prec), hi.sqrt_up(prec));
}

DyInterval DyInterval::nth_root_outward(unsigned long n, long prec) const {
    if (lo.sign() < 0) throw std::domain_error("root of interval with negative part");
    return DyInterval(lo.root_down(n, prec), hi.root_up(n, prec));
}

DyInterval DyInterval::round_outward(long prec) const {
    return DyInterval(lo.round_down(prec), hi.round_up(prec));
}

DyInterval DyInterval::hull(const DyInterval& o) const {
    return DyInterval(std::min(lo, o.lo), std::max(hi, o.hi));
}

std::optional<DyInterval> DyInterval::intersect(const DyInterval& o) const {
    Dyadic l = std::max(lo, o.lo), h = std::min(hi, o.hi);
    if (l > h) return std::nullopt;
    return DyInterval(l, h);
}

std::string DyInterval::str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }

DyInterval max_one(const DyInterval& x) {
    Dyadic one = Dyadic::one();
    return DyInterval(std::max(x.lo, one), std::max(x.hi, one));
}

// ---------------------------------------------------------------------------

Dyadic Enclosure::width() const { return std::max(re.width(), im.width()); }

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.re + b.re, a.im + b.im);
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.re - b.re, a.im - b.im);
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

std::optional<Enclosure> Enclosure::div(const Enclosure& num, const Enclosure& den, long prec) {
    DyInterval d = den.abs_sq();
    if (!d.strictly_positive()) return std::nullopt;
    Enclosure nc = num * den.conj();
    return Enclosure(DyInterval::div(nc.re, d, prec), DyInterval::div(nc.im, d, prec));
}

std::optional<Enclosure> Enclosure::intersect(const Enclosure& o) const {
    auto r = re.intersect(o.re);
    auto i = im.intersect(o.im);
    if (!r || !i) return std::nullopt;
    return Enclosure(*r, *i);
}

std::string Enclosure::str() const { return re.str() + " + i*" + im.str(); }

}  // namespace smallzeros
