// roots.cpp

#include "smallzeros/roots.hpp"
#include "smallzeros/factorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace smallzeros {

namespace {

// ----- Sturm sequences (exact) ---------------------------------------------

// integer-primitive chain, each element scaled by a positive rational only
std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<UniPoly> chain;
    chain.push_back(ip_to_unipoly(f));
    chain.push_back(ip_to_unipoly(ip_derivative(f)));
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = UniPoly::divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    std::vector<IntPoly> out;
    for (const UniPoly& p : chain) {
        if (p.is_zero()) continue;
        Rat content = rational_content(p.coeffs());  // positive, keeps signs
        IntPoly q(static_cast<size_t>(p.degree() + 1));
        for (int i = 0; i <= p.degree(); ++i) {
            Rat v = p.coeff(i) / content;
            q[static_cast<size_t>(i)] = v.get_num();
        }
        out.push_back(std::move(q));
    }
    return out;
}

int sign_variations(const std::vector<IntPoly>& chain, const Dyadic& x) {
    int count = 0, prev = 0;
    for (const IntPoly& p : chain) {
        int s = ip_sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// number of real roots in (a, b], assuming f(a) != 0 and f(b) != 0
int roots_in(const std::vector<IntPoly>& chain, const Dyadic& a, const Dyadic& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Dyadic cauchy_bound_pow2(const IntPoly& f) {
    int n = ip_degree(f);
    mpq_class lead = mpq_class(abs(f[static_cast<size_t>(n)]));
    mpq_class best(0);
    for (int i = 0; i < n; ++i) {
        mpq_class v = mpq_class(abs(f[static_cast<size_t>(i)])) / lead;
        if (v > best) best = v;
    }
    best += 1;
    long k = 1;
    while ((mpz_class(1) << k) < best.get_num() / best.get_den() + 1) ++k;
    return Dyadic(mpz_class(1), k + 1);
}

// real isolating intervals [a, b] with a sign change and exactly one root;
// f irreducible over Q with degree >= 2 (so f never vanishes at dyadics)
std::vector<DyInterval> isolate_real(const IntPoly& f) {
    std::vector<IntPoly> chain = sturm_chain(f);
    Dyadic B = cauchy_bound_pow2(f);
    struct Item {
        Dyadic a, b;
        int count;
    };
    std::vector<Item> work;
    std::vector<DyInterval> done;
    int total = roots_in(chain, -B, B);
    if (total > 0) work.push_back({-B, B, total});
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        if (it.count == 1) {
            done.emplace_back(it.a, it.b);
            continue;
        }
        Dyadic m = (it.a + it.b).half();
        int left = roots_in(chain, it.a, m);
        int right = it.count - left;
        if (left > 0) work.push_back({it.a, m, left});
        if (right > 0) work.push_back({m, it.b, right});
    }
    return done;
}

DyInterval bisect_real(const IntPoly& f, DyInterval iv, const Dyadic& width) {
    // invariant: sign change across [lo, hi]
    int slo = ip_sign_at(f, iv.lo);
    while (iv.width() > width) {
        Dyadic m = iv.mid();
        int sm = ip_sign_at(f, m);
        if (sm == 0) return DyInterval::point(m);  // dyadic root (degree-1 factors)
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

// ----- complex approximation (Durand-Kerner) -------------------------------

struct Cmpf {
    mpf_class re, im;
};

Cmpf c_sub(const Cmpf& a, const Cmpf& b) { return {a.re - b.re, a.im - b.im}; }
Cmpf c_mul(const Cmpf& a, const Cmpf& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cmpf c_div(const Cmpf& a, const Cmpf& b) {
    mpf_class d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
mpf_class c_abs2(const Cmpf& a) { return a.re * a.re + a.im * a.im; }

std::vector<Cmpf> durand_kerner(const IntPoly& f, unsigned long prec) {
    int n = ip_degree(f);
    std::vector<Cmpf> coeff;  // monic
    mpf_class lead(f[static_cast<size_t>(n)], prec);
    for (int i = 0; i <= n; ++i) {
        Cmpf c{mpf_class(0, prec), mpf_class(0, prec)};
        c.re = mpf_class(f[static_cast<size_t>(i)], prec) / lead;
        coeff.push_back(c);
    }
    auto eval = [&](const Cmpf& z) {
        Cmpf acc{mpf_class(0, prec), mpf_class(0, prec)};
        for (int i = n; i >= 0; --i) {
            acc = c_mul(acc, z);
            acc.re += coeff[static_cast<size_t>(i)].re;
            acc.im += coeff[static_cast<size_t>(i)].im;
        }
        return acc;
    };
    Dyadic Bd = cauchy_bound_pow2(f);
    mpf_class R(Bd.mantissa(), prec);
    if (Bd.exponent() >= 0)
        mpf_mul_2exp(R.get_mpf_t(), R.get_mpf_t(), static_cast<unsigned long>(Bd.exponent()));

    std::vector<Cmpf> z;
    Cmpf seed{mpf_class(0.4, prec), mpf_class(0.9, prec)};
    Cmpf cur{mpf_class(1, prec), mpf_class(0, prec)};
    for (int k = 0; k < n; ++k) {
        cur = c_mul(cur, seed);
        z.push_back({cur.re * R, cur.im * R});
    }
    mpf_class eps(0, prec);
    mpf_set_ui(eps.get_mpf_t(), 1);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec - 8);

    for (int iter = 0; iter < 400; ++iter) {
        mpf_class worst(0, prec);
        for (int k = 0; k < n; ++k) {
            Cmpf num = eval(z[static_cast<size_t>(k)]);
            Cmpf den{mpf_class(1, prec), mpf_class(0, prec)};
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                den = c_mul(den, c_sub(z[static_cast<size_t>(k)], z[static_cast<size_t>(j)]));
            }
            Cmpf delta = c_div(num, den);
            z[static_cast<size_t>(k)].re -= delta.re;
            z[static_cast<size_t>(k)].im -= delta.im;
            mpf_class d2 = c_abs2(delta);
            if (d2 > worst) worst = d2;
        }
        if (worst < eps * eps) break;
    }
    return z;
}

Dyadic mpf_to_dyadic(const mpf_class& v, long prec) {
    // mpf values are dyadic, so the mpq conversion below is exact
    mpq_class q;
    mpq_set_f(q.get_mpq_t(), v.get_mpf_t());
    return Dyadic::from_mpq_down(q, prec);
}

// ----- interval Newton ------------------------------------------------------

struct NewtonResult {
    bool ok = false;
    Enclosure refined;
};

NewtonResult newton_test(const IntPoly& f, const IntPoly& fp, const Enclosure& X, long prec) {
    NewtonResult out;
    Enclosure D = ip_eval_box(fp, X, prec);
    if (D.contains_zero()) return out;
    Enclosure mid = Enclosure::point(X.re.mid(), X.im.mid());
    Enclosure fm = ip_eval_box(f, mid, prec);
    auto quot = Enclosure::div(fm, D, prec);
    if (!quot) return out;
    Enclosure N = mid - *quot;
    // strict containment in the interior
    if (!(X.re.lo < N.re.lo && N.re.hi < X.re.hi && X.im.lo < N.im.lo && N.im.hi < X.im.hi))
        return out;
    out.ok = true;
    out.refined = N;
    return out;
}

Enclosure newton_refine(const IntPoly& f, const IntPoly& fp, Enclosure X, const Dyadic& width) {
    long prec = 64;
    int stall = 0;
    while (X.width() > width) {
        long need = 8;
        Dyadic w = X.width();
        // ensure the working precision comfortably exceeds the target
        while (Dyadic(mpz_class(1), -need) > width && need < (1L << 22)) need *= 2;
        prec = std::max(prec, need + 32);
        Enclosure D = ip_eval_box(fp, X, prec);
        if (D.contains_zero()) {
            prec *= 2;
            if (prec > (1L << 24)) throw std::runtime_error("newton_refine: no progress");
            continue;
        }
        Enclosure mid = Enclosure::point(X.re.mid(), X.im.mid());
        Enclosure fm = ip_eval_box(f, mid, prec);
        auto quot = Enclosure::div(fm, D, prec);
        if (!quot) {
            prec *= 2;
            continue;
        }
        Enclosure N = mid - *quot;
        auto meet = N.intersect(X);
        if (!meet) throw std::logic_error("newton_refine: empty intersection");
        Enclosure nx = meet->round_outward(prec);
        // guard against rounding growing the box
        auto safe = nx.intersect(X);
        nx = safe ? *safe : *meet;
        if (!(nx.width() < X.width())) {
            ++stall;
            prec *= 2;
            if (stall > 64) throw std::runtime_error("newton_refine: stalled");
        } else {
            stall = 0;
        }
        X = nx;
    }
    return X;
}

}  // namespace

Enclosure refine_root(const IntPoly& f, const Enclosure& box, bool real, const Dyadic& width) {
    if (box.width() <= width) return box;
    int n = ip_degree(f);
    if (n == 1) {
        // rational root -q0/q1; nested by monotonicity of directed rounding
        mpq_class root = mpq_class(-f[0]) / mpq_class(f[1]);
        root.canonicalize();
        long prec = 64;
        for (;;) {
            DyInterval iv = DyInterval::of_mpq(root, prec);
            if (iv.width() <= width) {
                auto meet = Enclosure::real_interval(iv).intersect(box);
                return meet ? *meet : Enclosure::real_interval(iv);
            }
            prec *= 2;
        }
    }
    if (real) {
        DyInterval iv = bisect_real(f, box.re, width);
        return Enclosure::real_interval(iv);
    }
    return newton_refine(f, ip_derivative(f), box, width);
}

std::vector<RootBox> isolate_irreducible_roots(const IntPoly& f, const Dyadic& width) {
    int n = ip_degree(f);
    if (n < 1) throw std::domain_error("isolate: constant polynomial");
    std::vector<RootBox> out;
    if (n == 1) {
        mpq_class root = mpq_class(-f[0]) / mpq_class(f[1]);
        root.canonicalize();
        // exact point when the root is dyadic
        Dyadic down = Dyadic::from_mpq_down(root, 64);
        if (down.to_mpq() == root) {
            out.push_back({Enclosure::point(down, Dyadic::zero()), 1, true});
            return out;
        }
        long prec = 64;
        DyInterval iv = DyInterval::of_mpq(root, prec);
        while (iv.width() > width) {
            prec *= 2;
            iv = DyInterval::of_mpq(root, prec);
        }
        out.push_back({Enclosure::real_interval(iv), 1, true});
        return out;
    }

    std::vector<DyInterval> real_iv = isolate_real(f);
    for (auto& iv : real_iv) {
        DyInterval r = bisect_real(f, iv, width);
        out.push_back({Enclosure::real_interval(r), 1, true});
    }
    int n_real = static_cast<int>(real_iv.size());
    int n_pairs = (n - n_real) / 2;
    if ((n - n_real) % 2 != 0) throw std::logic_error("isolate: parity mismatch");

    if (n_pairs > 0) {
        IntPoly fp = ip_derivative(f);
        unsigned long prec = 192;
        bool done = false;
        for (int attempt = 0; attempt < 10 && !done; ++attempt, prec *= 2) {
            std::vector<Cmpf> approx = durand_kerner(f, prec);
            // candidates: largest imaginary parts
            std::sort(approx.begin(), approx.end(),
                      [](const Cmpf& a, const Cmpf& b) { return a.im > b.im; });
            std::vector<Enclosure> certified;
            bool fail = false;
            for (int k = 0; k < n_pairs && !fail; ++k) {
                const Cmpf& zk = approx[static_cast<size_t>(k)];
                if (zk.im <= 0) {
                    fail = true;
                    break;
                }
                // radius: quarter of the distance to the nearest other
                // approximation or to the real axis
                mpf_class best = zk.im * zk.im;
                for (size_t j = 0; j < approx.size(); ++j) {
                    if (&approx[j] == &zk) continue;
                    mpf_class d2 = c_abs2(c_sub(zk, approx[j]));
                    if (d2 < best) best = d2;
                }
                long lp = static_cast<long>(prec);
                Dyadic rad = mpf_to_dyadic(best, lp).sqrt_down(lp).half().half();
                if (rad.sign() <= 0) {
                    fail = true;
                    break;
                }
                Dyadic cre = mpf_to_dyadic(zk.re, lp);
                Dyadic cim = mpf_to_dyadic(zk.im, lp);
                Enclosure X(DyInterval(cre - rad, cre + rad), DyInterval(cim - rad, cim + rad));
                NewtonResult nr = newton_test(f, fp, X, lp + 32);
                if (!nr.ok) {
                    fail = true;
                    break;
                }
                Enclosure cert = nr.refined;
                // push imaginary part strictly above the axis
                int guard = 0;
                while (!(cert.im.lo.sign() > 0) && guard++ < 64)
                    cert = newton_refine(f, fp, cert, cert.width().half());
                if (!(cert.im.lo.sign() > 0)) {
                    fail = true;
                    break;
                }
                certified.push_back(cert);
            }
            if (fail) continue;
            // pairwise disjoint (mirrors are then disjoint as well)
            for (size_t i = 0; i < certified.size() && !fail; ++i)
                for (size_t j = i + 1; j < certified.size(); ++j)
                    if (!certified[i].disjoint(certified[j])) {
                        fail = true;
                        break;
                    }
            if (fail) continue;
            for (auto& c : certified) {
                Enclosure r = newton_refine(f, fp, c, width);
                out.push_back({r, 1, false});
                out.push_back({r.conj(), 1, false});
            }
            done = true;
        }
        if (!done) throw std::runtime_error("isolate: certification failed");
    }

    std::sort(out.begin(), out.end(), [](const RootBox& a, const RootBox& b) {
        Dyadic ar = a.box.re.mid(), br = b.box.re.mid();
        int c = ar.cmp(br);
        if (c != 0) return c < 0;
        return a.box.im.mid() < b.box.im.mid();
    });
    return out;
}

std::vector<RootBox> isolate_roots(const UniPoly& f, const Dyadic& width) {
    if (f.is_zero() || f.degree() < 1)
        throw std::domain_error("isolate_roots: degree must be >= 1");
    Factorization fac = factor_over_q(f);
    struct Tagged {
        RootBox rb;
        IntPoly poly;
    };
    std::vector<Tagged> all;
    for (const auto& [factor, mult] : fac.factors) {
        auto [ip, scale] = factor.integer_primitive();
        for (RootBox rb : isolate_irreducible_roots(ip, width)) {
            rb.multiplicity = mult;
            all.push_back({rb, ip});
        }
    }
    // separate boxes belonging to different irreducible factors
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 128) {
        changed = false;
        for (size_t i = 0; i < all.size(); ++i) {
            for (size_t j = i + 1; j < all.size(); ++j) {
                if (all[i].rb.box.disjoint(all[j].rb.box)) continue;
                Dyadic w = std::min(all[i].rb.box.width(), all[j].rb.box.width()).half();
                if (w.is_zero()) w = Dyadic(mpz_class(1), -64);
                all[i].rb.box = refine_root(all[i].poly, all[i].rb.box, all[i].rb.real, w);
                all[j].rb.box = refine_root(all[j].poly, all[j].rb.box, all[j].rb.real, w);
                changed = true;
            }
        }
    }
    if (guard >= 128) throw std::runtime_error("isolate_roots: separation failed");
    std::vector<RootBox> out;
    out.reserve(all.size());
    for (auto& t : all) out.push_back(t.rb);
    std::sort(out.begin(), out.end(), [](const RootBox& a, const RootBox& b) {
        int c = a.box.re.mid().cmp(b.box.re.mid());
        if (c != 0) return c < 0;
        return a.box.im.mid() < b.box.im.mid();
    });
    return out;
}

}  // namespace smallzeros
