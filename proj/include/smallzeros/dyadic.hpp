// dyadic.hpp
// Dyadic rationals m*2^e and outward-rounded interval arithmetic.
// Addition and multiplication of dyadics are exact; only division,
// square roots and n-th roots round, always outward at a requested
// precision, so every interval result encloses the true value.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

namespace smallzeros {

class Dyadic {
public:
    Dyadic() : man_(0), exp_(0) {}
    Dyadic(long v) : man_(v), exp_(0) { normalize(); }
    Dyadic(const mpz_class& m) : man_(m), exp_(0) { normalize(); }
    Dyadic(mpz_class m, long e) : man_(std::move(m)), exp_(e) { normalize(); }

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1); }

    // Exact iff q has a power-of-two denominator; otherwise rounds in the
    // requested direction with about `prec` significant bits.
    static Dyadic from_mpq_down(const mpq_class& q, long prec);
    static Dyadic from_mpq_up(const mpq_class& q, long prec);

    const mpz_class& mantissa() const { return man_; }
    long exponent() const { return exp_; }

    bool is_zero() const { return man_ == 0; }
    int sign() const { return sgn(man_); }

    Dyadic operator-() const { return Dyadic(-man_, exp_); }
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

    // -1, 0, +1 as *this compares to rhs
    int cmp(const Dyadic& rhs) const;
    bool operator<(const Dyadic& r) const { return cmp(r) < 0; }
    bool operator<=(const Dyadic& r) const { return cmp(r) <= 0; }
    bool operator>(const Dyadic& r) const { return cmp(r) > 0; }
    bool operator>=(const Dyadic& r) const { return cmp(r) >= 0; }
    bool operator==(const Dyadic& r) const { return cmp(r) == 0; }
    bool operator!=(const Dyadic& r) const { return cmp(r) != 0; }

    Dyadic abs() const { return man_ < 0 ? -*this : *this; }
    Dyadic half() const { return Dyadic(man_, exp_ - 1); }
    Dyadic mul_pow2(long k) const { return Dyadic(man_, exp_ + k); }

    // Keep at most `prec` significant bits, rounding toward -inf / +inf.
    Dyadic round_down(long prec) const;
    Dyadic round_up(long prec) const;

    // sqrt / n-th root of a nonnegative dyadic, rounded down/up with about
    // `prec` significant bits. Exact values (perfect powers) come out exact.
    Dyadic sqrt_down(long prec) const { return root_down(2, prec); }
    Dyadic sqrt_up(long prec) const { return root_up(2, prec); }
    Dyadic root_down(unsigned long n, long prec) const;
    Dyadic root_up(unsigned long n, long prec) const;

    mpq_class to_mpq() const;
    double to_double() const;
    std::string str() const;  // exact, as "p" or "p/q" with q a power of two

private:
    void normalize();
    mpz_class man_;
    long exp_;
};

// Closed real interval [lo, hi] with dyadic endpoints.
struct DyInterval {
    Dyadic lo, hi;

    DyInterval() = default;
    DyInterval(Dyadic l, Dyadic h);
    static DyInterval point(const Dyadic& v) { return DyInterval(v, v); }
    static DyInterval of_mpq(const mpq_class& q, long prec);
    static DyInterval of_mpq(const mpq_class& qlo, const mpq_class& qhi, long prec);

    bool is_point() const { return lo == hi; }
    Dyadic width() const { return hi - lo; }
    Dyadic mid() const { return (lo + hi).half(); }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    bool contains(const Dyadic& v) const { return lo <= v && v <= hi; }
    bool contains(const mpq_class& q) const;
    bool contains(const DyInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool strictly_positive() const { return lo.sign() > 0; }
    bool disjoint(const DyInterval& o) const { return hi < o.lo || o.hi < lo; }

    DyInterval operator-() const { return DyInterval(-hi, -lo); }
    friend DyInterval operator+(const DyInterval& a, const DyInterval& b);
    friend DyInterval operator-(const DyInterval& a, const DyInterval& b);
    friend DyInterval operator*(const DyInterval& a, const DyInterval& b);
    DyInterval sq() const;

    DyInterval scale(const Dyadic& c) const;
    // outward-rounded operations
    DyInterval scale_mpq(const mpq_class& c, long prec) const;  // c may be any sign
    static DyInterval div(const DyInterval& num, const DyInterval& den, long prec);
    DyInterval sqrt_outward(long prec) const;          // requires lo >= 0
    DyInterval nth_root_outward(unsigned long n, long prec) const;
    DyInterval round_outward(long prec) const;

    DyInterval hull(const DyInterval& o) const;
    std::optional<DyInterval> intersect(const DyInterval& o) const;

    std::string str() const;
};

// max(1, x) pointwise
DyInterval max_one(const DyInterval& x);

// Axis-aligned rectangle in the complex plane with dyadic endpoints.
struct Enclosure {
    DyInterval re, im;

    Enclosure() = default;
    Enclosure(DyInterval r, DyInterval i) : re(std::move(r)), im(std::move(i)) {}
    static Enclosure point(const Dyadic& r, const Dyadic& i) {
        return Enclosure(DyInterval::point(r), DyInterval::point(i));
    }
    static Enclosure real_interval(DyInterval r) {
        return Enclosure(std::move(r), DyInterval::point(Dyadic::zero()));
    }

    bool is_real() const { return im.is_point() && im.lo.is_zero(); }
    bool is_point() const { return re.is_point() && im.is_point(); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool contains(const Enclosure& o) const { return re.contains(o.re) && im.contains(o.im); }
    bool disjoint(const Enclosure& o) const { return re.disjoint(o.re) || im.disjoint(o.im); }
    Dyadic width() const;

    Enclosure conj() const { return Enclosure(re, -im); }
    friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator*(const Enclosure& a, const Enclosure& b);

    DyInterval abs_sq() const { return re.sq() + im.sq(); }

    // num/den, outward; fails (nullopt) when 0 may lie in den
    static std::optional<Enclosure> div(const Enclosure& num, const Enclosure& den, long prec);

    Enclosure round_outward(long prec) const {
        return Enclosure(re.round_outward(prec), im.round_outward(prec));
    }
    std::optional<Enclosure> intersect(const Enclosure& o) const;

    std::string str() const;
};

}  // namespace smallzeros
