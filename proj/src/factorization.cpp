// factorization.cpp

#include "smallzeros/factorization.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace smallzeros {

namespace {

// ----- arithmetic in F_p[x], p an odd machine prime -----------------------

using ZpPoly = std::vector<unsigned long>;  // coefficients in [0, p)

struct Zp {
    unsigned long p;

    unsigned long add(unsigned long a, unsigned long b) const {
        unsigned long s = a + b;
        return s >= p ? s - p : s;
    }
    unsigned long sub(unsigned long a, unsigned long b) const {
        return a >= b ? a - b : a + p - b;
    }
    unsigned long mul(unsigned long a, unsigned long b) const {
        return static_cast<unsigned long>(
            (static_cast<unsigned __int128>(a) * b) % p);
    }
    unsigned long pow(unsigned long a, unsigned long e) const {
        unsigned long r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    unsigned long inv(unsigned long a) const { return pow(a, p - 2); }
};

void zp_trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int zp_deg(const ZpPoly& f) { return static_cast<int>(f.size()) - 1; }

ZpPoly zp_mul(const Zp& F, const ZpPoly& a, const ZpPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    zp_trim(c);
    return c;
}

ZpPoly zp_sub(const Zp& F, const ZpPoly& a, const ZpPoly& b) {
    ZpPoly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = F.sub(c[i], b[i]);
    zp_trim(c);
    return c;
}

ZpPoly zp_scale(const Zp& F, const ZpPoly& a, unsigned long s) {
    ZpPoly c = a;
    for (auto& v : c) v = F.mul(v, s);
    zp_trim(c);
    return c;
}

// division with remainder; g must be nonzero
std::pair<ZpPoly, ZpPoly> zp_divrem(const Zp& F, const ZpPoly& a, const ZpPoly& g) {
    ZpPoly r = a, q;
    int dg = zp_deg(g);
    if (dg < 0) throw std::domain_error("zp_divrem: zero divisor");
    unsigned long lg_inv = F.inv(g.back());
    if (zp_deg(r) >= dg) q.assign(zp_deg(r) - dg + 1, 0);
    while (zp_deg(r) >= dg) {
        int k = zp_deg(r) - dg;
        unsigned long f = F.mul(r.back(), lg_inv);
        q[k] = f;
        for (int i = 0; i <= dg; ++i) r[k + i] = F.sub(r[k + i], F.mul(f, g[i]));
        zp_trim(r);
    }
    return {q, r};
}

ZpPoly zp_monic(const Zp& F, const ZpPoly& a) {
    if (a.empty()) return a;
    return zp_scale(F, a, F.inv(a.back()));
}

ZpPoly zp_gcd(const Zp& F, ZpPoly a, ZpPoly b) {
    while (!b.empty()) {
        ZpPoly r = zp_divrem(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(F, a);
}

// extended gcd: returns (g, s, t) with s*a + t*b = g (g monic)
std::tuple<ZpPoly, ZpPoly, ZpPoly> zp_ext_gcd(const Zp& F, ZpPoly a, ZpPoly b) {
    ZpPoly s_prev = {1}, s_cur = {}, t_prev = {}, t_cur = {1};
    while (!b.empty()) {
        auto [q, r] = zp_divrem(F, a, b);
        a = std::move(b);
        b = std::move(r);
        ZpPoly s_next = zp_sub(F, s_prev, zp_mul(F, q, s_cur));
        ZpPoly t_next = zp_sub(F, t_prev, zp_mul(F, q, t_cur));
        s_prev = std::move(s_cur);
        s_cur = std::move(s_next);
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    if (a.empty()) throw std::domain_error("ext_gcd of zero polynomials");
    unsigned long c = Zp{F.p}.inv(a.back());
    return {zp_scale(F, a, c), zp_scale(F, s_prev, c), zp_scale(F, t_prev, c)};
}

ZpPoly zp_derivative(const Zp& F, const ZpPoly& f) {
    if (f.size() <= 1) return {};
    ZpPoly d(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(f[i], i % F.p);
    zp_trim(d);
    return d;
}

// base^e mod f, e an arbitrary-precision exponent
ZpPoly zp_powmod(const Zp& F, ZpPoly base, const Int& e, const ZpPoly& f) {
    ZpPoly r{1};
    base = zp_divrem(F, base, f).second;
    long bits = e == 0 ? 0 : static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
    for (long i = bits - 1; i >= 0; --i) {
        r = zp_divrem(F, zp_mul(F, r, r), f).second;
        if (mpz_tstbit(e.get_mpz_t(), i))
            r = zp_divrem(F, zp_mul(F, r, base), f).second;
    }
    return r;
}

// ----- distinct-degree + equal-degree (Cantor-Zassenhaus) -----------------

void equal_degree_split(const Zp& F, const ZpPoly& h, int d, std::mt19937_64& rng,
                        std::vector<ZpPoly>& out) {
    int n = zp_deg(h);
    if (n == d) {
        out.push_back(h);
        return;
    }
    Int pd = 1;
    for (int i = 0; i < d; ++i) pd *= static_cast<long>(F.p);
    Int e = (pd - 1) / 2;
    for (;;) {
        ZpPoly r(static_cast<size_t>(n), 0);
        for (auto& v : r) v = rng() % F.p;
        zp_trim(r);
        if (zp_deg(r) < 1) continue;
        ZpPoly w = zp_powmod(F, r, e, h);
        if (w.empty())
            continue;
        w[0] = F.sub(w[0], 1);  // w - 1
        zp_trim(w);
        ZpPoly g = zp_gcd(F, h, w);
        int dg = zp_deg(g);
        if (dg > 0 && dg < n) {
            equal_degree_split(F, g, d, rng, out);
            equal_degree_split(F, zp_divrem(F, h, g).first, d, rng, out);
            return;
        }
    }
}

// monic squarefree f -> monic irreducible factors mod p
std::vector<ZpPoly> factor_mod_p(const Zp& F, ZpPoly f) {
    std::vector<ZpPoly> out;
    std::mt19937_64 rng(0xC0FFEEuL);  // fixed seed: output order is sorted later
    ZpPoly x{0, 1};
    ZpPoly xq = x;
    ZpPoly g = f;
    int d = 0;
    while (zp_deg(g) > 0) {
        ++d;
        if (2 * d > zp_deg(g)) {
            out.push_back(zp_monic(F, g));
            break;
        }
        xq = zp_powmod(F, xq, Int(static_cast<long>(F.p)), g);
        ZpPoly diff = zp_sub(F, xq, x);
        ZpPoly c = zp_gcd(F, g, diff);
        if (zp_deg(c) > 0) {
            equal_degree_split(F, c, d, rng, out);
            g = zp_divrem(F, g, c).first;
            if (zp_deg(g) == 0) break;
            xq = zp_divrem(F, xq, g).second;
        }
    }
    return out;
}

// ----- integer polynomials modulo m ----------------------------------------

Int sym_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

IntPoly ipm_reduce(const IntPoly& f, const Int& m) {
    IntPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        r[i] = f[i] % m;
        if (r[i] < 0) r[i] += m;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

IntPoly ipm_mul(const IntPoly& a, const IntPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    IntPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return ipm_reduce(c, m);
}

IntPoly ipm_add(const IntPoly& a, const IntPoly& b, const Int& m) {
    IntPoly c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return ipm_reduce(c, m);
}

IntPoly ipm_sub(const IntPoly& a, const IntPoly& b, const Int& m) {
    IntPoly c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return ipm_reduce(c, m);
}

// division by a monic polynomial mod m
std::pair<IntPoly, IntPoly> ipm_divrem_monic(const IntPoly& a, const IntPoly& g, const Int& m) {
    IntPoly r = ipm_reduce(a, m), q;
    int dg = ip_degree(g);
    if (ip_degree(r) >= dg) q.assign(ip_degree(r) - dg + 1, Int(0));
    while (ip_degree(r) >= dg) {
        int k = ip_degree(r) - dg;
        Int f = r[ip_degree(r)];
        q[k] = f;
        for (int i = 0; i <= dg; ++i) {
            r[k + i] -= f * g[i];
        }
        r = ipm_reduce(r, m);
    }
    return {ipm_reduce(q, m), r};
}

// one quadratic Hensel step:
//   inputs mod m:  f = g*h, s*g + t*h = 1, h monic
//   outputs mod m^2 (same invariants)
struct HenselPair {
    IntPoly g, h, s, t;
};

HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const Int& m) {
    Int m2 = m * m;
    IntPoly e = ipm_sub(f, ipm_mul(in.g, in.h, m2), m2);
    auto [q, r] = ipm_divrem_monic(ipm_mul(in.s, e, m2), in.h, m2);
    IntPoly g1 = ipm_add(in.g, ipm_add(ipm_mul(in.t, e, m2), ipm_mul(q, in.g, m2), m2), m2);
    IntPoly h1 = ipm_add(in.h, r, m2);
    IntPoly b = ipm_sub(ipm_add(ipm_mul(in.s, g1, m2), ipm_mul(in.t, h1, m2), m2), IntPoly{Int(1)}, m2);
    auto [c, d] = ipm_divrem_monic(ipm_mul(in.s, b, m2), h1, m2);
    IntPoly s1 = ipm_sub(in.s, d, m2);
    IntPoly t1 = ipm_sub(in.t, ipm_add(ipm_mul(in.t, b, m2), ipm_mul(c, g1, m2), m2), m2);
    return {g1, h1, s1, t1};
}

IntPoly zp_to_ip(const ZpPoly& f) {
    IntPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = Int(static_cast<unsigned long>(f[i]));
    return r;
}

ZpPoly ip_to_zp(const IntPoly& f, const Zp& F) {
    ZpPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Int v = f[i] % static_cast<long>(F.p);
        if (v < 0) v += static_cast<long>(F.p);
        r[i] = v.get_ui();
    }
    zp_trim(r);
    return r;
}

// lift f = lc(f) * prod(monic factors) from mod p to mod target;
// returns monic factors mod `target`
std::vector<IntPoly> hensel_lift_tree(const IntPoly& f, std::vector<ZpPoly> monic,
                                      const Zp& F, const Int& target) {
    if (monic.size() == 1) {
        // normalize f to monic mod target
        IntPoly fm = ipm_reduce(f, target);
        Int lc = fm[ip_degree(fm)];
        Int lcinv;
        if (mpz_invert(lcinv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t()) == 0)
            throw std::logic_error("hensel: leading coefficient not invertible");
        IntPoly out(fm.size());
        for (size_t i = 0; i < fm.size(); ++i) out[i] = (fm[i] * lcinv) % target;
        return {ipm_reduce(out, target)};
    }
    size_t half = monic.size() / 2;
    std::vector<ZpPoly> left(monic.begin(), monic.begin() + half);
    std::vector<ZpPoly> right(monic.begin() + half, monic.end());
    // g carries the leading coefficient, h is monic
    unsigned long lcp = mpz_fdiv_ui(f[ip_degree(f)].get_mpz_t(), F.p);
    ZpPoly gp = {lcp};
    zp_trim(gp);
    for (const auto& g : left) gp = zp_mul(F, gp, g);
    ZpPoly hp{1};
    for (const auto& h : right) hp = zp_mul(F, hp, h);
    auto [one, s, t] = zp_ext_gcd(F, gp, hp);
    if (zp_deg(one) != 0) throw std::logic_error("hensel: factors not coprime mod p");
    HenselPair cur{zp_to_ip(gp), zp_to_ip(hp), zp_to_ip(s), zp_to_ip(t)};
    Int m(static_cast<long>(F.p));
    while (m < target) {
        cur = hensel_step(ipm_reduce(f, m * m), cur, m);
        m *= m;
    }
    cur.g = ipm_reduce(cur.g, target);
    cur.h = ipm_reduce(cur.h, target);
    auto a = hensel_lift_tree(cur.g, left, F, target);
    auto b = hensel_lift_tree(cur.h, right, F, target);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

Int ip_norm2_ceil(const IntPoly& f) {
    Int s = 0;
    for (const Int& c : f) s += c * c;
    Int r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

IntPoly ip_primitive(const IntPoly& f) {
    Int g = 0;
    for (const Int& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return f;
    if (f[ip_degree(f)] < 0) g = -g;
    IntPoly r(f.size());
    for (size_t i = 0; i < f.size(); ++i) r[i] = f[i] / g;
    return r;
}

// exact division test over Z; returns quotient if divisible
bool ip_divides(const IntPoly& d, const IntPoly& f, IntPoly& quot) {
    UniPoly fd = ip_to_unipoly(d), ff = ip_to_unipoly(f);
    auto [q, r] = UniPoly::divrem(ff, fd);
    if (!r.is_zero() || !q.has_integer_coeffs()) return false;
    quot.assign(static_cast<size_t>(q.degree() + 1), Int(0));
    for (int i = 0; i <= q.degree(); ++i) quot[static_cast<size_t>(i)] = q.coeff(i).get_num();
    return true;
}

const long kPrimes[] = {5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                        59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113};

}  // namespace

std::vector<IntPoly> factor_squarefree_integer(const IntPoly& f_in) {
    IntPoly f = ip_primitive(f_in);
    int n = ip_degree(f);
    if (n <= 0) return {};
    if (n == 1) return {f};
    // prime with p coprime to lc and f squarefree mod p
    Zp F{0};
    ZpPoly fp;
    bool found = false;
    for (long p : kPrimes) {
        F.p = static_cast<unsigned long>(p);
        if (mpz_divisible_ui_p(f[n].get_mpz_t(), F.p)) continue;
        fp = ip_to_zp(f, F);
        if (zp_deg(fp) != n) continue;
        ZpPoly d = zp_derivative(F, fp);
        ZpPoly g = zp_gcd(F, fp, d);
        if (zp_deg(g) == 0) {
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("factor: no suitable prime in table");

    std::vector<ZpPoly> modular = factor_mod_p(F, zp_monic(F, fp));
    if (modular.size() == 1) return {f};

    // deterministic order of modular factors
    std::sort(modular.begin(), modular.end());

    // lift to p^k > 2 * |lc| * 2^n * ||f||_2
    Int lc = f[n];
    Int bound = 2 * abs(lc) * ip_norm2_ceil(f);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
    Int target(static_cast<long>(F.p));
    while (target <= bound) target *= static_cast<long>(F.p);
    std::vector<IntPoly> lifted = hensel_lift_tree(f, modular, F, target);

    // Zassenhaus recombination
    std::vector<IntPoly> result;
    std::vector<size_t> live(lifted.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;
    IntPoly rem_f = f;

    auto try_subsets = [&](size_t take) -> bool {
        std::vector<size_t> idx(take);
        for (size_t i = 0; i < take; ++i) idx[i] = i;
        while (true) {
            // candidate = lc * prod lifted[live[idx]] (symmetric mod)
            IntPoly cand{rem_f[ip_degree(rem_f)]};
            for (size_t i : idx) cand = ipm_mul(cand, lifted[live[i]], target);
            for (auto& c : cand) c = sym_mod(c, target);
            while (!cand.empty() && cand.back() == 0) cand.pop_back();
            IntPoly prim = ip_primitive(cand);
            IntPoly quot;
            if (ip_degree(prim) >= 1 && ip_divides(prim, rem_f, quot)) {
                result.push_back(prim);
                rem_f = ip_primitive(quot);
                std::vector<size_t> next_live;
                for (size_t i = 0, j = 0; i < live.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    next_live.push_back(live[i]);
                }
                live = std::move(next_live);
                return true;
            }
            // next combination
            size_t k = take;
            while (k > 0) {
                --k;
                if (idx[k] + (take - k) < live.size()) {
                    ++idx[k];
                    for (size_t j = k + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (k == 0) return false;
            }
            if (take == 0) return false;
        }
    };

    size_t take = 1;
    while (2 * take <= live.size()) {
        if (try_subsets(take))
            take = 1;
        else
            ++take;
    }
    if (ip_degree(rem_f) >= 1) result.push_back(ip_primitive(rem_f));
    return result;
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, unsigned>> out;
    if (f.degree() == 0) return out;
    UniPoly fp = f.derivative();
    UniPoly g = UniPoly::gcd(f, fp);
    if (g.degree() == 0) {
        out.push_back({f, 1});
        return out;
    }
    UniPoly c = UniPoly::divrem(f, g).first;
    UniPoly d = UniPoly::divrem(fp, g).first - c.derivative();
    unsigned i = 1;
    while (c.degree() > 0) {
        UniPoly a = UniPoly::gcd(c, d);
        if (a.degree() > 0) out.push_back({a, i});
        c = UniPoly::divrem(c, a).first;
        d = UniPoly::divrem(d, a).first - c.derivative();
        ++i;
    }
    return out;
}

bool factor_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    }
    return false;
}

Factorization factor_over_q(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor of zero polynomial");
    Factorization out;
    out.constant = Rat(1);
    if (f.degree() == 0) {
        out.constant = f.coeff(0);
        return out;
    }
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        auto [ip, scale] = part.integer_primitive();
        for (const IntPoly& fac : factor_squarefree_integer(ip))
            out.factors.push_back({ip_to_unipoly(fac), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return factor_less(a.first, b.first); });
    // constant = lc(f) / prod lc(fac)^mult
    Rat lcs(1);
    for (const auto& [fac, mult] : out.factors) lcs *= rat_pow(fac.lc(), mult);
    out.constant = f.lc() / lcs;
    return out;
}

bool has_small_factor(const IntPoly& f, int max_deg, long coeff_bound) {
    int n = ip_degree(f);
    for (int d = 1; d <= max_deg && d < n; ++d) {
        std::vector<long> c(static_cast<size_t>(d + 1), -coeff_bound);
        for (;;) {
            if (c[d] != 0) {
                IntPoly cand(c.size());
                for (size_t i = 0; i < c.size(); ++i) cand[i] = c[i];
                IntPoly q;
                if (ip_divides(cand, f, q)) return true;
            }
            size_t k = 0;
            while (k < c.size() && c[k] == coeff_bound) {
                c[k] = -coeff_bound;
                ++k;
            }
            if (k == c.size()) break;
            ++c[k];
        }
    }
    return false;
}

}  // namespace smallzeros
