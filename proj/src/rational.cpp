// rational.cpp

#include "smallzeros/rational.hpp"

#include <stdexcept>

namespace smallzeros {

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    Rat q;
    if (slash == std::string::npos) {
        if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
    } else {
        if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
    }
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    return make_rat(int_pow(base.get_num(), e), int_pow(base.get_den(), e));
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat rational_content(const std::vector<Rat>& v) {
    Int num_gcd = 0, den_lcm = 1;
    for (const Rat& q : v) {
        if (q == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    }
    if (num_gcd == 0) return Rat(0);
    return make_rat(num_gcd, den_lcm);
}

long padic_valuation(const Rat& a, const Int& p) {
    if (a == 0) throw std::domain_error("valuation of zero");
    long v = 0;
    Int n = a.get_num();
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    Int d = a.get_den();
    while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
        d /= p;
        --v;
    }
    return v;
}

namespace {

Int pollard_rho(const Int& n) {
    // n odd composite, not a prime power of interest; returns a nontrivial factor
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eedu);
    for (;;) {
        Int x = rng.get_z_range(n - 2) + 2;
        Int y = x, c = rng.get_z_range(n - 1) + 1, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n_in) {
    if (n_in == 0) throw std::domain_error("factor of zero");
    Int n = abs(n_in);
    std::vector<Int> primes;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.push_back(Int(p));
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Int, unsigned>> out;
    for (const Int& p : primes) {
        if (!out.empty() && out.back().first == p)
            out.back().second++;
        else
            out.push_back({p, 1});
    }
    return out;
}

}  // namespace smallzeros
