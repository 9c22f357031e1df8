// certreal.cpp

#include "smallzeros/certreal.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace smallzeros {

const char* cmp_name(Cmp c) {
    switch (c) {
        case Cmp::LE_certified: return "LE_certified";
        case Cmp::GT_certified: return "GT_certified";
        default: return "inconclusive";
    }
}

long default_precision_cap() {
    static long cap = [] {
        if (const char* env = std::getenv("SMALLZERO_PRECISION_BITS")) {
            long v = std::atol(env);
            if (v >= 64) return v;
        }
        return 16384L;
    }();
    return cap;
}

DyInterval rat_root_enclosure(const Rat& base, unsigned root, long prec) {
    if (base <= 0) throw std::domain_error("rat_root_enclosure: base must be positive");
    if (root == 0) throw std::invalid_argument("rat_root_enclosure: zero root index");
    const Int& num = base.get_num();
    const Int& den = base.get_den();
    unsigned long n = root;
    Int shifted;
    mpz_mul_2exp(shifted.get_mpz_t(), num.get_mpz_t(), n * static_cast<unsigned long>(prec));
    Int a_lo, a_hi;
    mpz_fdiv_q(a_lo.get_mpz_t(), shifted.get_mpz_t(), den.get_mpz_t());
    mpz_cdiv_q(a_hi.get_mpz_t(), shifted.get_mpz_t(), den.get_mpz_t());
    // floor(a_lo^(1/n)) <= base^(1/n) * 2^prec; equality iff everything exact
    Int root_lo, rem_lo, root_hi, rem_hi;
    mpz_rootrem(root_lo.get_mpz_t(), rem_lo.get_mpz_t(), a_lo.get_mpz_t(), n);
    mpz_rootrem(root_hi.get_mpz_t(), rem_hi.get_mpz_t(), a_hi.get_mpz_t(), n);
    if (rem_hi != 0) root_hi += 1;
    return DyInterval(Dyadic(root_lo, -prec), Dyadic(root_hi, -prec));
}

CertReal CertReal::from_rat(const Rat& v) {
    if (v <= 0) throw std::domain_error("CertReal: value must be positive");
    CertReal r;
    r.base_ = v;
    r.root_ = 1;
    return r;
}

CertReal CertReal::nth_root(const Rat& base, unsigned root) {
    if (base <= 0) throw std::domain_error("CertReal: base must be positive");
    if (root == 0) throw std::invalid_argument("CertReal: zero root index");
    CertReal r;
    r.base_ = base;
    r.root_ = root;
    return r;
}

CertReal CertReal::from_refiner(Refiner r) {
    CertReal out;
    out.arch_ = std::move(r);
    return out;
}

CertReal CertReal::operator*(const CertReal& o) const {
    CertReal r;
    unsigned l = std::lcm(root_, o.root_);
    r.base_ = rat_pow(base_, l / root_) * rat_pow(o.base_, l / o.root_);
    r.root_ = l;
    if (arch_ && o.arch_) {
        Refiner a = arch_, b = o.arch_;
        r.arch_ = [a, b](long prec) {
            return (a(prec) * b(prec)).round_outward(prec);
        };
    } else if (arch_) {
        r.arch_ = arch_;
    } else if (o.arch_) {
        r.arch_ = o.arch_;
    }
    return r;
}

CertReal CertReal::pow(unsigned k) const {
    if (k == 0) return CertReal();
    CertReal r;
    unsigned g = std::gcd(k, root_);
    r.base_ = rat_pow(base_, k / g);
    r.root_ = root_ / g;
    if (arch_) {
        Refiner a = arch_;
        r.arch_ = [a, k](long prec) {
            DyInterval v = a(prec);
            DyInterval acc = DyInterval::point(Dyadic::one());
            for (unsigned i = 0; i < k; ++i) acc = (acc * v).round_outward(prec);
            return acc;
        };
    }
    return r;
}

CertReal CertReal::root(unsigned m) const {
    if (m == 0) throw std::invalid_argument("CertReal: zero root");
    if (m == 1) return *this;
    CertReal r;
    r.base_ = base_;
    r.root_ = root_ * m;
    if (arch_) {
        Refiner a = arch_;
        r.arch_ = [a, m](long prec) { return a(prec).nth_root_outward(m, prec); };
    }
    return r;
}

DyInterval CertReal::enclosure(long prec) const {
    DyInterval e = rat_root_enclosure(base_, root_, prec);
    if (arch_) e = (e * arch_(prec)).round_outward(prec);
    return e;
}

Cmp compare_le(const CertReal& a, const CertReal& b, long max_prec) {
    if (a.is_exact() && b.is_exact()) {
        unsigned l = std::lcm(a.root_index(), b.root_index());
        Rat lhs = rat_pow(a.base(), l / a.root_index());
        Rat rhs = rat_pow(b.base(), l / b.root_index());
        return lhs <= rhs ? Cmp::LE_certified : Cmp::GT_certified;
    }
    for (long prec = 64; prec <= max_prec; prec *= 2) {
        DyInterval ia = a.enclosure(prec);
        DyInterval ib = b.enclosure(prec);
        if (ia.hi <= ib.lo) return Cmp::LE_certified;
        if (ib.hi < ia.lo) return Cmp::GT_certified;
    }
    return Cmp::Inconclusive;
}

}  // namespace smallzeros
