// resultant.hpp
// Resultants via the subresultant PRS, generic over the coefficient ring
// (Q, or a multivariate polynomial ring over Q). A Sylvester/Bareiss route
// is provided as the independent cross-check used by the tests.

#pragma once

#include "smallzeros/multipoly.hpp"
#include "smallzeros/rational.hpp"
#include "smallzeros/unipoly.hpp"

#include <stdexcept>
#include <vector>

namespace smallzeros {

struct RatRing {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem neg(const Elem& a) const { return -a; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem divexact(const Elem& a, const Elem& b) const { return a / b; }
};

struct MPolyRing {
    unsigned nvars;
    using Elem = MultiPoly;
    Elem zero() const { return MultiPoly(nvars); }
    Elem one() const { return MultiPoly::constant(nvars, 1); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem neg(const Elem& a) const { return -a; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem divexact(const Elem& a, const Elem& b) const { return MultiPoly::divexact(a, b); }
};

// dense polynomial in one variable with coefficients in Ring::Elem
template <class Ring>
using RPoly = std::vector<typename Ring::Elem>;

template <class Ring>
int rp_deg(const Ring& R, const RPoly<Ring>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && R.is_zero(p[d])) --d;
    return d;
}

template <class Ring>
typename Ring::Elem ring_pow(const Ring& R, typename Ring::Elem base, unsigned long e) {
    typename Ring::Elem acc = R.one();
    while (e) {
        if (e & 1) acc = R.mul(acc, base);
        base = R.mul(base, base);
        e >>= 1;
    }
    return acc;
}

// Res_x(A, B). Both may have ring coefficients; A nonzero required.
// Returns 0 when B is the zero polynomial.
template <class Ring>
typename Ring::Elem resultant(const Ring& R, RPoly<Ring> A, RPoly<Ring> B);

// convenience wrappers
Rat resultant_q(const UniPoly& f, const UniPoly& g);
MultiPoly resultant_x(const std::vector<MultiPoly>& f_coeffs,
                      const std::vector<MultiPoly>& g_coeffs, unsigned nvars);

// Sylvester-matrix determinant via fraction-free (Bareiss) elimination.
// Test oracle for the PRS route.
template <class Ring>
typename Ring::Elem sylvester_resultant(const Ring& R, const RPoly<Ring>& A, const RPoly<Ring>& B);

// --------------------------------------------------------------------------
// implementation

template <class Ring>
static void rp_trim(const Ring& R, RPoly<Ring>& p) {
    while (!p.empty() && R.is_zero(p.back())) p.pop_back();
}

// pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + R
template <class Ring>
static RPoly<Ring> rp_prem(const Ring& R, const RPoly<Ring>& A, const RPoly<Ring>& B) {
    int da = rp_deg(R, A), db = rp_deg(R, B);
    if (db < 0) throw std::domain_error("prem: zero divisor");
    const typename Ring::Elem& d = B[db];
    RPoly<Ring> rem = A;
    rp_trim(R, rem);
    long e = da - db + 1;
    while (true) {
        int dr = rp_deg(R, rem);
        if (dr < db) break;
        // rem <- d*rem - lc(rem)*x^(dr-db)*B
        typename Ring::Elem lr = rem[dr];
        RPoly<Ring> next(static_cast<size_t>(dr), R.zero());
        for (int i = 0; i < dr; ++i) {
            typename Ring::Elem t = R.mul(d, i < static_cast<int>(rem.size()) ? rem[i] : R.zero());
            int j = i - (dr - db);
            if (j >= 0 && j <= db) t = R.sub(t, R.mul(lr, B[j]));
            next[i] = t;
        }
        rem = std::move(next);
        rp_trim(R, rem);
        --e;
    }
    if (e > 0) {
        typename Ring::Elem f = ring_pow(R, d, static_cast<unsigned long>(e));
        for (auto& c : rem) c = R.mul(c, f);
    }
    return rem;
}

template <class Ring>
typename Ring::Elem resultant(const Ring& R, RPoly<Ring> A, RPoly<Ring> B) {
    rp_trim(R, A);
    rp_trim(R, B);
    if (A.empty() && B.empty()) throw std::domain_error("resultant: both arguments zero");
    if (A.empty() || B.empty()) return R.zero();
    int s = 1;
    if (rp_deg(R, A) < rp_deg(R, B)) {
        if ((rp_deg(R, A) & 1) && (rp_deg(R, B) & 1)) s = -s;
        std::swap(A, B);
    }
    int da = rp_deg(R, A), db = rp_deg(R, B);
    if (db == 0) {
        typename Ring::Elem r = ring_pow(R, B[0], static_cast<unsigned long>(da));
        return s < 0 ? R.neg(r) : r;
    }
    typename Ring::Elem g = R.one(), h = R.one();
    while (true) {
        da = rp_deg(R, A);
        db = rp_deg(R, B);
        long delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        RPoly<Ring> rem = rp_prem(R, A, B);
        A = std::move(B);
        // B <- rem / (g * h^delta)
        typename Ring::Elem denom = R.mul(g, ring_pow(R, h, static_cast<unsigned long>(delta)));
        B = std::move(rem);
        for (auto& c : B) c = R.divexact(c, denom);
        rp_trim(R, B);
        g = A[rp_deg(R, A)];
        // h <- g^delta * h^(1-delta)
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = R.divexact(ring_pow(R, g, static_cast<unsigned long>(delta)),
                           ring_pow(R, h, static_cast<unsigned long>(delta - 1)));
        }
        int dbn = rp_deg(R, B);
        if (dbn < 0) return R.zero();  // common factor
        if (dbn == 0) break;
    }
    // h <- lc(B)^(deg A) * h^(1 - deg A)
    int dA = rp_deg(R, A);
    typename Ring::Elem num = ring_pow(R, B[0], static_cast<unsigned long>(dA));
    typename Ring::Elem res =
        dA <= 1 ? num : R.divexact(num, ring_pow(R, h, static_cast<unsigned long>(dA - 1)));
    return s < 0 ? R.neg(res) : res;
}

template <class Ring>
typename Ring::Elem sylvester_resultant(const Ring& R, const RPoly<Ring>& A0, const RPoly<Ring>& B0) {
    RPoly<Ring> A = A0, B = B0;
    rp_trim(R, A);
    rp_trim(R, B);
    if (A.empty() && B.empty()) throw std::domain_error("resultant: both arguments zero");
    if (A.empty() || B.empty()) return R.zero();
    int m = rp_deg(R, A), n = rp_deg(R, B);
    if (m == 0 && n == 0) return R.one();
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<typename Ring::Elem>> M(dim, std::vector<typename Ring::Elem>(dim, R.zero()));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = A[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = B[n - k];
    // Bareiss fraction-free elimination
    int sign = 1;
    typename Ring::Elem prev = R.one();
    for (size_t k = 0; k + 1 < dim; ++k) {
        size_t piv = k;
        while (piv < dim && R.is_zero(M[piv][k])) ++piv;
        if (piv == dim) return R.zero();
        if (piv != k) {
            std::swap(M[piv], M[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < dim; ++i) {
            for (size_t j = k + 1; j < dim; ++j) {
                typename Ring::Elem t =
                    R.sub(R.mul(M[k][k], M[i][j]), R.mul(M[i][k], M[k][j]));
                M[i][j] = R.divexact(t, prev);
            }
            M[i][k] = R.zero();
        }
        prev = M[k][k];
    }
    typename Ring::Elem det = M[dim - 1][dim - 1];
    return sign < 0 ? R.neg(det) : det;
}

}  // namespace smallzeros
