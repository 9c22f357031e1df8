// heights.cpp

#include "smallzeros/heights.hpp"
#include "smallzeros/resultant.hpp"

#include <algorithm>
#include <stdexcept>

namespace smallzeros {

DyInterval HeightValue::enclosure(long prec) const {
    DyInterval f = rat_root_enclosure(finite_base, finite_root, prec);
    return (f * arch(prec)).round_outward(prec);
}

CertReal HeightValue::to_cert() const {
    CertReal fin = CertReal::nth_root(finite_base, finite_root);
    if (arch_sq) {
        if (*arch_sq == 1) return fin;
        return fin * CertReal::nth_root(*arch_sq, 2);
    }
    return fin * CertReal::from_refiner(arch);
}

double HeightValue::approx() const {
    DyInterval e = enclosure(64);
    return e.mid().to_double();
}

// ---------------------------------------------------------------------------

AlgVector AlgVector::from_rats(const std::vector<Rat>& v) {
    AlgVector out;
    out.reprs.reserve(v.size());
    for (const Rat& q : v) out.reprs.push_back(UniPoly::constant(q));
    return out;
}

AlgVector AlgVector::from_elements(const std::vector<NFElement>& v) {
    AlgVector out;
    out.reprs.reserve(v.size());
    for (const NFElement& e : v) {
        if (e.field()) {
            if (out.field && !out.field->same_field(*e.field()))
                throw incompatible_fields_error("AlgVector: mixed fields");
            if (!out.field) out.field = e.field();
        }
        out.reprs.push_back(e.repr());
    }
    return out;
}

bool AlgVector::is_zero() const {
    for (const UniPoly& r : reprs)
        if (!r.is_zero()) return false;
    return true;
}

NFElement AlgVector::coord(size_t i) const { return NFElement(field, reprs.at(i)); }

std::vector<bool> AlgVector::nonzero_flags() const {
    std::vector<bool> out;
    out.reserve(reprs.size());
    for (const UniPoly& r : reprs) out.push_back(!r.is_zero());
    return out;
}

Int AlgVector::denominator() const {
    Int q = 1;
    for (const UniPoly& r : reprs)
        for (const Rat& c : r.coeffs())
            mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), c.get_den().get_mpz_t());
    return q;
}

bool AlgVector::all_rational() const {
    for (const UniPoly& r : reprs)
        if (r.degree() > 0) return false;
    return true;
}

std::vector<Rat> AlgVector::rational_coords() const {
    if (!all_rational()) throw std::domain_error("AlgVector: coordinates not rational");
    std::vector<Rat> out;
    out.reserve(reprs.size());
    for (const UniPoly& r : reprs) out.push_back(r.coeff(0));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// primitive integer vector projectively equal to x
std::vector<Int> primitive_vector(const std::vector<Rat>& x) {
    Int q = 1;
    for (const Rat& v : x) mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> y(x.size());
    Int g = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        y[i] = x[i].get_num() * (q / x[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y[i].get_mpz_t());
    }
    if (g == 0) throw std::domain_error("height of the zero vector");
    for (Int& v : y) v /= g;
    return y;
}

Refiner sqrt_refiner(const Rat& s) {
    return [s](long prec) {
        return rat_root_enclosure(s, 2, prec);
    };
}

// integer polynomials G_i with z_i = G_i(alpha)/q
std::vector<IntPoly> cleared_coords(const AlgVector& z, const Int& q) {
    std::vector<IntPoly> out;
    out.reserve(z.reprs.size());
    for (const UniPoly& r : z.reprs) {
        IntPoly g(static_cast<size_t>(std::max(0, r.degree() + 1)));
        for (int k = 0; k <= r.degree(); ++k) {
            Rat c = r.coeff(k) * Rat(q);
            if (c.get_den() != 1) throw std::logic_error("cleared_coords: denominator not cleared");
            g[static_cast<size_t>(k)] = c.get_num();
        }
        out.push_back(std::move(g));
    }
    return out;
}

// arch part of a point over Q(alpha):
//   prod_over_roots ( sum_i |G_i(root)|^2 / q^2 ) ^ (1/(2D))
Refiner point_arch_refiner(FieldPtr field, std::vector<IntPoly> G, Int q) {
    unsigned D = field->degree();
    return [field, G = std::move(G), q = std::move(q), D](long prec) {
        long wp = prec + 16;
        std::vector<Enclosure> roots = field->roots_at(wp);
        DyInterval acc = DyInterval::point(Dyadic::one());
        for (const Enclosure& r : roots) {
            DyInterval s = DyInterval::point(Dyadic::zero());
            for (const IntPoly& g : G) {
                if (ip_degree(g) < 0) continue;
                s = s + ip_eval_box(g, r, wp).abs_sq();
            }
            acc = (acc * s).round_outward(wp);
        }
        Rat scale = make_rat(1, int_pow(q, 2 * D));
        acc = acc.scale_mpq(scale, wp);
        return acc.nth_root_outward(2 * D, wp).round_outward(prec);
    };
}

// (finite part)^D = q^D * lc(f)^e / |content(Res_x(f, sum t_i G_i))|
Rat normform_finite_power(const NumberField& field, const std::vector<IntPoly>& G, const Int& q) {
    unsigned D = field.degree();
    int e = -1;
    for (const IntPoly& g : G) e = std::max(e, ip_degree(g));
    if (e < 0) throw std::domain_error("finite part of the zero vector");
    unsigned N = static_cast<unsigned>(G.size());
    MPolyRing R{N};
    RPoly<MPolyRing> A, B;
    for (const Int& c : field.minpoly()) A.push_back(MultiPoly::constant(N, Rat(c)));
    B.assign(static_cast<size_t>(e + 1), MultiPoly(N));
    for (unsigned i = 0; i < N; ++i)
        for (int k = 0; k <= ip_degree(G[i]); ++k) {
            if (G[i][static_cast<size_t>(k)] == 0) continue;
            Monomial m(N, 0);
            m[i] = 1;
            B[static_cast<size_t>(k)].add_term(m, Rat(G[i][static_cast<size_t>(k)]));
        }
    MultiPoly res = resultant(R, A, B);
    Rat content = abs(rational_content(res.coefficient_vector()));
    if (content == 0) throw std::logic_error("norm form vanished identically");
    return make_rat(int_pow(q, D), 1) *
           rat_pow(Rat(abs(field.minpoly_lc())), static_cast<unsigned long>(e)) / content;
}

}  // namespace

HeightValue height_rational_vector(const std::vector<Rat>& x) {
    std::vector<Int> y = primitive_vector(x);
    Rat s(0);
    for (const Int& v : y) s += Rat(v * v);
    HeightValue h;
    h.finite_base = 1;
    h.finite_root = 1;
    h.arch_sq = s;
    h.arch = sqrt_refiner(s);
    h.degree_used = 1;
    return h;
}

HeightValue height_algebraic(const AlgebraicNumber& a) {
    unsigned D = a.degree();
    HeightValue h;
    h.finite_base = Rat(abs(a.field->minpoly_lc()));
    h.finite_root = D;
    h.degree_used = D;
    if (D == 1) {
        Rat r = a.rational_value();
        Rat m = abs(r) > 1 ? abs(r) : Rat(1);
        h.arch_sq = m * m;
        h.arch = sqrt_refiner(*h.arch_sq);
        return h;
    }
    FieldPtr field = a.field;
    h.arch = [field, D](long prec) {
        long wp = prec + 16;
        DyInterval acc = DyInterval::point(Dyadic::one());
        for (const Enclosure& r : field->roots_at(wp)) {
            DyInterval mod = r.abs_sq().sqrt_outward(wp);
            acc = (acc * max_one(mod)).round_outward(wp);
        }
        return acc.nth_root_outward(D, wp).round_outward(prec);
    };
    return h;
}

// Requires f irreducible over Q (the root isolation contract).
CertReal mahler_measure(const IntPoly& f) {
    int n = ip_degree(f);
    if (n < 0) throw std::domain_error("mahler_measure of zero");
    if (n == 0) return CertReal::from_rat(Rat(abs(f[0])));
    IntPoly g = f;
    if (g[static_cast<size_t>(n)] < 0)
        for (Int& c : g) c = -c;
    AlgebraicNumber a{NumberField::make(g), 0};
    // measure = |lc| * prod max(1, |root|) = h(alpha)^D
    return height_algebraic(a).to_cert().pow(a.degree());
}

HeightValue height_point(const AlgVector& z) {
    if (z.is_zero()) throw std::domain_error("height of the zero vector");
    if (!z.field) return height_rational_vector(z.rational_coords());
    FieldPtr field = z.field;
    unsigned D = field->degree();
    Int q = z.denominator();
    std::vector<IntPoly> G = cleared_coords(z, q);

    HeightValue h;
    h.finite_base = normform_finite_power(*field, G, q);
    h.finite_root = D;
    h.degree_used = D;
    if (z.all_rational()) {
        // embedded rational vector: every embedding gives the same l2 norm
        Rat s(0);
        for (const IntPoly& g : G) {
            Rat c = g.empty() ? Rat(0) : Rat(g[0]);
            s += c * c;
        }
        s /= Rat(q * q);
        h.arch_sq = s;
        h.arch = sqrt_refiner(s);
        return h;
    }
    h.arch = point_arch_refiner(field, std::move(G), q);
    return h;
}

HeightValue height_poly(const MultiPoly& f) {
    if (f.is_zero()) throw std::domain_error("height of zero polynomial");
    return height_rational_vector(f.coefficient_vector());
}

HeightValue height_poly(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("height of zero polynomial");
    return height_rational_vector(f.coeffs());
}

HeightValue height_matrix(const QMatrix& a) {
    std::vector<Rat> flat;
    for (const auto& row : a.rows) flat.insert(flat.end(), row.begin(), row.end());
    if (flat.empty()) throw std::domain_error("height of empty matrix");
    return height_rational_vector(flat);
}

HeightValue height_subspace(const QMatrix& rows) {
    size_t m = rows.nrows(), n = rows.ncols();
    if (m == 0 || m >= n) throw std::invalid_argument("height_subspace: need rank M < N");
    if (rows.rank() != m) throw std::domain_error("height_subspace: rank-deficient matrix");
    // all maximal minors (Grassmann coordinates), column subsets in lex order
    std::vector<Rat> minors;
    std::vector<size_t> idx(m);
    for (size_t i = 0; i < m; ++i) idx[i] = i;
    for (;;) {
        QMatrix sub;
        sub.rows.assign(m, std::vector<Rat>(m));
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c) sub.rows[r][c] = rows.rows[r][idx[c]];
        minors.push_back(sub.det());
        size_t k = m;
        while (k > 0) {
            --k;
            if (idx[k] + (m - k) < n) {
                ++idx[k];
                for (size_t j = k + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (k == 0) return height_rational_vector(minors);
        }
    }
}

Rat normform_finite_part(const AlgVector& z) {
    if (z.is_zero()) throw std::domain_error("finite part of the zero vector");
    FieldPtr field = z.field ? z.field : NumberField::rationals();
    if (field->degree() != 1)
        throw std::invalid_argument("normform_finite_part: cross-check is defined at D = 1");
    AlgVector zz = z;
    zz.field = field;
    Int q = zz.denominator();
    return normform_finite_power(*field, cleared_coords(zz, q), q);
}

Rat content_finite_part(const std::vector<Rat>& x) {
    Rat c = rational_content(x);
    if (c == 0) throw std::domain_error("finite part of the zero vector");
    return Rat(1) / c;
}

// ---------------------------------------------------------------------------

ProductFormulaReport product_formula_check(const Rat& a) {
    if (a == 0) throw std::domain_error("product formula: zero input");
    ProductFormulaReport rep;
    Rat finite_prod(1);
    auto add_place = [&](const Int& p, long v) {
        if (v == 0) return;
        Rat contrib = v > 0 ? make_rat(1, int_pow(p, static_cast<unsigned long>(v)))
                            : make_rat(int_pow(p, static_cast<unsigned long>(-v)), 1);
        rep.split.finite.push_back({p, contrib});
        finite_prod *= contrib;
    };
    Int nd = abs(a.get_num()) * a.get_den();
    if (nd != 1)
        for (const auto& [p, mult] : factor_integer(nd)) add_place(p, padic_valuation(a, p));
    Rat total = finite_prod * abs(a);
    rep.exact_ok = (total == 1);
    rep.split.arch = DyInterval::of_mpq(abs(a), 64);
    rep.enclosure_ok = rep.exact_ok;
    return rep;
}

ProductFormulaReport product_formula_check(const NFElement& a, long prec) {
    if (a.is_zero()) throw std::domain_error("product formula: zero input");
    ProductFormulaReport rep;
    if (!a.field() || a.is_rational()) return product_formula_check(a.rational_value());

    // exact route: minpoly(1/a) must be the normalized reversal of minpoly(a)
    UniPoly m = element_minpoly(*a.field(), a.repr());
    UniPoly m_inv = element_minpoly(*a.field(), a.inverse().repr());
    UniPoly rev = m.reversed();
    auto [ri, rs] = rev.integer_primitive();
    rep.exact_ok = (ip_to_unipoly(ri) == m_inv);

    // enclosure route: H((a)) as a 1-vector must contain 1
    AlgVector v;
    v.field = a.field();
    v.reprs = {a.repr()};
    HeightValue h = height_point(v);
    DyInterval e = h.enclosure(prec);
    rep.split.arch = e;
    rep.enclosure_ok = e.contains(Rat(1));
    return rep;
}

Cmp compare(const HeightValue& h, const CertReal& bound, long max_prec) {
    return compare_le(h.to_cert(), bound, max_prec);
}

Cmp compare(const HeightValue& a, const HeightValue& b, long max_prec) {
    return compare_le(a.to_cert(), b.to_cert(), max_prec);
}

}  // namespace smallzeros
