// sweep.cpp

#include "smallzeros/sweep.hpp"
#include "smallzeros/parser.hpp"

#include <algorithm>
#include <cstdio>

namespace smallzeros {

// splitmix64: tiny, stable across platforms
std::uint64_t InstanceGen::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

long InstanceGen::coeff(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

void monomials_of_degree(unsigned n, unsigned m, Monomial& cur, std::vector<Monomial>& out) {
    if (cur.size() + 1 == n) {
        cur.push_back(m);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned e = 0; e <= m; ++e) {
        cur.push_back(e);
        monomials_of_degree(n, m - e, cur, out);
        cur.pop_back();
    }
}

std::vector<Monomial> homogeneous_monomials(unsigned n, unsigned m) {
    std::vector<Monomial> out;
    Monomial cur;
    monomials_of_degree(n, m, cur, out);
    return out;
}

}  // namespace

MultiPoly InstanceGen::homogeneous(unsigned n, unsigned m, long lo, long hi) {
    for (;;) {
        MultiPoly f(n);
        for (const Monomial& mono : homogeneous_monomials(n, m))
            f.add_term(mono, Rat(coeff(lo, hi)));
        if (!f.is_zero() && f.total_degree() == static_cast<int>(m)) return f;
    }
}

MultiPoly InstanceGen::homogeneous_nonvanishing(unsigned n, unsigned m, long lo, long hi) {
    MultiPoly f = homogeneous(n, m, lo, hi);
    for (unsigned i = 0; i < n; ++i) {
        Monomial mono(n, 0);
        mono[i] = m;
        while (f.coeff(mono) == 0) {
            long c = coeff(lo, hi);
            if (c != 0) f.add_term(mono, Rat(c));
        }
    }
    return f;
}

MultiPoly InstanceGen::inhomogeneous(unsigned n, unsigned m, long lo, long hi) {
    for (;;) {
        MultiPoly f(n);
        for (unsigned d = 0; d <= m; ++d)
            for (const Monomial& mono : homogeneous_monomials(n, d))
                if (next() % 2 == 0) f.add_term(mono, Rat(coeff(lo, hi)));
        if (f.is_zero() || f.is_monomial() || f.is_homogeneous()) continue;
        if (f.total_degree() != static_cast<int>(m)) continue;
        return f;
    }
}

MultiPoly InstanceGen::inhomogeneous_unit_safe(unsigned n, unsigned m, long lo, long hi) {
    for (;;) {
        MultiPoly f = inhomogeneous(n, m, lo, hi);
        bool ok = true;
        for (unsigned i = 0; i < n && ok; ++i) {
            std::vector<Rat> e(n, Rat(0));
            e[i] = 1;
            if (f.eval(e) == 0) ok = false;
        }
        if (ok) return f;
    }
}

QMatrix InstanceGen::integer_matrix_invertible(unsigned n, long lo, long hi) {
    for (;;) {
        QMatrix a;
        a.rows.assign(n, std::vector<Rat>(n));
        for (unsigned r = 0; r < n; ++r)
            for (unsigned c = 0; c < n; ++c) a.rows[r][c] = Rat(coeff(lo, hi));
        if (a.det() != 0) return a;
    }
}

// ---------------------------------------------------------------------------

RunConfig RunConfig::from_json(const ordered_json& j) {
    RunConfig c;
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("n_values")) c.n_values = j.at("n_values").get<std::vector<unsigned>>();
    if (j.contains("m_values")) c.m_values = j.at("m_values").get<std::vector<unsigned>>();
    if (j.contains("coeff_lo")) c.coeff_lo = j.at("coeff_lo").get<long>();
    if (j.contains("coeff_hi")) c.coeff_hi = j.at("coeff_hi").get<long>();
    if (j.contains("instances")) c.instances = j.at("instances").get<unsigned>();
    if (j.contains("precision_bits")) c.precision_bits = j.at("precision_bits").get<long>();
    if (j.contains("families")) c.families = j.at("families").get<std::vector<std::string>>();
    if (c.n_values.empty() || c.m_values.empty() || c.families.empty() || c.instances == 0)
        throw std::invalid_argument("sweep config: ranges must be nonempty");
    if (c.precision_bits < 64) throw std::invalid_argument("sweep config: precision cap < 64");
    if (c.coeff_lo > c.coeff_hi) throw std::invalid_argument("sweep config: bad coefficient box");
    return c;
}

ordered_json RunConfig::to_json() const {
    return ordered_json{{"seed", seed},
                        {"n_values", n_values},
                        {"m_values", m_values},
                        {"coeff_lo", coeff_lo},
                        {"coeff_hi", coeff_hi},
                        {"instances", instances},
                        {"precision_bits", precision_bits},
                        {"families", families}};
}

namespace {

std::string format_ratio(double r) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", r);
    return buf;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string matrix_text(const QMatrix& m) {
    std::string out;
    for (size_t r = 0; r < m.nrows(); ++r) {
        if (r) out += ";";
        for (size_t c = 0; c < m.ncols(); ++c) {
            if (c) out += ",";
            out += rat_str(m.rows[r][c]);
        }
    }
    return out;
}

}  // namespace

SweepOutcome run_sweep(const RunConfig& config) {
    SweepOutcome out;
    ordered_json instances = ordered_json::array();
    unsigned pass = 0, inconclusive = 0, hypothesis_failures = 0;
    double max_ratio = 0.0;
    ordered_json tallies;
    auto bump = [&tallies](const std::string& key) {
        tallies[key] = (tallies.contains(key) ? tallies[key].get<unsigned>() : 0u) + 1u;
    };

    unsigned index = 0;
    const std::vector<long> sharp_cs{2, 3, 5, 7};
    for (const std::string& family : config.families) {
        for (unsigned n : config.n_values) {
            for (unsigned m : config.m_values) {
                for (unsigned k = 0; k < config.instances; ++k) {
                    // per-instance deterministic stream
                    std::uint64_t mix = config.seed;
                    mix = mix * 1000003u + fnv1a(family);
                    mix = mix * 1000003u + n;
                    mix = mix * 1000003u + m;
                    mix = mix * 1000003u + k;
                    InstanceGen gen(mix);

                    ordered_json rec;
                    rec["index"] = index++;
                    rec["family"] = family;
                    rec["n"] = n;
                    rec["m"] = m;
                    try {
                        ZeroCertificate cert;
                        bool have_cert = true;
                        if (family == "prop31") {
                            MultiPoly f = gen.homogeneous(n, m, config.coeff_lo, config.coeff_hi);
                            rec["poly"] = print_poly(f);
                            cert = basic_small_zero(f, config.precision_bits);
                        } else if (family == "prop41") {
                            if (m < 1) continue;
                            MultiPoly f =
                                gen.inhomogeneous(n, std::max(1u, m), config.coeff_lo, config.coeff_hi);
                            rec["poly"] = print_poly(f);
                            cert = nonzero_coord_zero(f, config.precision_bits);
                        } else if (family == "thm42") {
                            MultiPoly f = gen.homogeneous_nonvanishing(n, m, config.coeff_lo,
                                                                       config.coeff_hi);
                            rec["poly"] = print_poly(f);
                            cert = all_nonzero_zero(f, config.precision_bits);
                        } else if (family == "thm12") {
                            MultiPoly f = gen.homogeneous(n, m, config.coeff_lo, config.coeff_hi);
                            QMatrix a = gen.integer_matrix_invertible(n, -3, 3);
                            rec["poly"] = print_poly(f);
                            rec["matrix"] = matrix_text(a);
                            cert = torus_zero(f, a, config.precision_bits);
                        } else if (family == "cor43") {
                            MultiPoly f = gen.inhomogeneous_unit_safe(n, std::max(1u, m),
                                                                      config.coeff_lo,
                                                                      config.coeff_hi);
                            rec["poly"] = print_poly(f);
                            cert = inhomogeneous_zero(f, config.precision_bits);
                        } else if (family == "sharpness") {
                            long c = sharp_cs[k % sharp_cs.size()];
                            MultiPoly f(2);
                            Monomial m1(2, 0), m2(2, 0);
                            m1[0] = m;
                            m2[1] = m;
                            f.add_term(m1, Rat(1));
                            f.add_term(m2, Rat(-c));
                            rec["poly"] = print_poly(f);
                            cert = basic_small_zero(f, config.precision_bits);
                            // normalized ratio window [1/2, 1]: the lower half
                            // of the sqrt(2)-scaled bound must be certified too
                            CertReal half_bound =
                                CertReal::nth_root(make_rat(1, 2), 2) *
                                height_poly(f).to_cert().root(m);
                            Cmp lower = compare_le(half_bound, cert.computed_height.to_cert(),
                                                   config.precision_bits);
                            rec["sharpness_lower"] = cmp_name(lower);
                            if (lower != Cmp::LE_certified) bump("sharpness_lower_failures");
                        } else {
                            throw std::invalid_argument("unknown sweep family: " + family);
                        }
                        if (have_cert) {
                            rec["branch"] = branch_name(cert.branch.kind);
                            rec["verdict"] = cmp_name(cert.bound_verdict);
                            double hb = cert.computed_height.approx();
                            double bb = cert.claimed_bound.mid().to_double();
                            double ratio = bb > 0 ? hb / bb : 0.0;
                            rec["ratio"] = format_ratio(ratio);
                            if (cert.bound_verdict == Cmp::LE_certified) {
                                ++pass;
                                bump(family + "_pass");
                            } else {
                                ++inconclusive;
                                bump(family + "_inconclusive");
                            }
                            if (ratio > max_ratio) max_ratio = ratio;
                            if (family == "cor43")
                                bump(std::string("cor43_") + branch_name(cert.branch.kind));
                        }
                    } catch (const hypothesis_failure_error& e) {
                        ++hypothesis_failures;
                        rec["error"] = "hypothesis_failure";
                        rec["detail"] = e.failed_check;
                        rec["exit_code"] = 2;
                        bump(family + "_hypothesis_failure");
                    }
                    instances.push_back(rec);
                }
            }
        }
    }

    out.report = ordered_json{{"config", config.to_json()},
                              {"instances", instances},
                              {"aggregate",
                               ordered_json{{"pass", pass},
                                            {"inconclusive", inconclusive},
                                            {"hypothesis_failure", hypothesis_failures},
                                            {"max_ratio", format_ratio(max_ratio)},
                                            {"tallies", tallies}}}};
    out.exit_code = inconclusive > 0 ? 3 : 0;
    return out;
}

}  // namespace smallzeros
