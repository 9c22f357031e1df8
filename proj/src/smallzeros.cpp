// smallzeros.cpp

#include "smallzeros/smallzeros.hpp"
#include "smallzeros/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace smallzeros {

const char* branch_name(BranchKind k) {
    switch (k) {
        case BranchKind::ZeroPolynomial: return "zero_polynomial";
        case BranchKind::BasisVector: return "basis_vector";
        case BranchKind::BinaryReduction: return "binary_reduction";
        case BranchKind::NonzeroCoordinate: return "nonzero_coordinate";
        case BranchKind::AllNonzero: return "all_nonzero";
        case BranchKind::TorusColumn: return "torus_column";
        case BranchKind::TorusImage: return "torus_image";
        case BranchKind::InhomCaseA: return "inhom_case_a";
        case BranchKind::InhomCaseB: return "inhom_case_b";
    }
    return "?";
}

namespace {

constexpr long kSelectionPrec = 256;  // factor selection; ties fall back to order

AlgVector basis_vector(unsigned n, unsigned i /*0-based*/) {
    std::vector<Rat> v(n, Rat(0));
    v[i] = 1;
    return AlgVector::from_rats(v);
}

std::vector<NFElement> coords_of(const AlgVector& z) {
    std::vector<NFElement> out;
    out.reserve(z.size());
    for (size_t i = 0; i < z.size(); ++i) out.push_back(z.coord(i));
    return out;
}

// F(e_i) for homogeneous F is the coefficient of X_i^M
Rat homogeneous_unit_value(const MultiPoly& F, unsigned i) {
    int m = F.total_degree();
    Monomial mono(F.nvars(), 0);
    mono[i] = static_cast<unsigned>(m);
    return F.coeff(mono);
}

Rat affine_unit_value(const MultiPoly& F, unsigned i) {
    std::vector<Rat> v(F.nvars(), Rat(0));
    v[i] = 1;
    return F.eval(v);
}

ZeroCertificate finish_certificate(MultiPoly F, std::optional<QMatrix> A, BranchTrace trace,
                                   AlgVector point, CertReal bound,
                                   std::vector<bool> nonzero_flags, long prec_cap) {
    ZeroCertificate cert;
    cert.input = std::move(F);
    cert.matrix = std::move(A);
    cert.branch = std::move(trace);
    cert.point = std::move(point);
    cert.degree = cert.point.degree();
    cert.bound_expr = std::move(bound);
    cert.claimed_bound = cert.bound_expr.enclosure(64);
    cert.computed_height = height_point(cert.point);
    cert.zero_verified = eval_poly(cert.input, coords_of(cert.point)).is_zero();
    cert.nonzero_coords = std::move(nonzero_flags);
    cert.bound_verdict = compare(cert.computed_height, cert.bound_expr, prec_cap);
    return cert;
}

CertReal sqrt2() { return CertReal::nth_root(Rat(2), 2); }

CertReal height_cert(const MultiPoly& F) { return height_poly(F).to_cert(); }

}  // namespace

// ---------------------------------------------------------------------------

AlgebraicNumber min_height_root(const UniPoly& g) {
    if (g.is_zero() || g.degree() < 1)
        throw std::invalid_argument("min_height_root: need degree >= 1");
    unsigned M = static_cast<unsigned>(g.degree());
    Factorization fac = factor_over_q(g);
    // candidate invariant per factor: M(f)^(1/deg f) = h(root)
    struct Cand {
        FieldPtr field;
        CertReal h;
    };
    std::vector<Cand> cands;
    for (const auto& [factor, mult] : fac.factors) {
        auto [ip, scale] = factor.integer_primitive();
        FieldPtr field = NumberField::make(ip);
        AlgebraicNumber a{field, 0};
        cands.push_back({field, height_algebraic(a).to_cert()});
    }
    size_t best = 0;
    for (size_t i = 1; i < cands.size(); ++i) {
        // replace only when the current best is certified larger
        if (compare_le(cands[best].h, cands[i].h, kSelectionPrec) == Cmp::GT_certified)
            best = i;
    }
    AlgebraicNumber alpha{cands[best].field, 0};
    // Mahler bound: h(alpha) <= H(g)^(1/M) must never be certified-violated
    CertReal bound = height_poly(g).to_cert().root(M);
    if (compare_le(cands[best].h, bound) == Cmp::GT_certified)
        throw std::logic_error("min_height_root: Mahler bound violated");
    return alpha;
}

// ---------------------------------------------------------------------------

ZeroCertificate basic_small_zero(const MultiPoly& F, long prec_cap) {
    if (!F.is_homogeneous())
        throw std::invalid_argument("basic_small_zero: non-homogeneous input");
    unsigned N = F.nvars();
    if (N < 2) throw std::invalid_argument("basic_small_zero: need N >= 2");
    if (F.is_zero()) {
        BranchTrace tr;
        tr.kind = BranchKind::ZeroPolynomial;
        tr.index = 1;
        AlgVector e1 = basis_vector(N, 0);
        std::vector<bool> flags(N, false);
        flags[0] = true;
        return finish_certificate(F, std::nullopt, tr, e1, CertReal(), flags, prec_cap);
    }
    int M = F.total_degree();
    if (M < 1) throw std::invalid_argument("basic_small_zero: need degree >= 1");
    CertReal bound = sqrt2() * height_cert(F).root(static_cast<unsigned>(M));

    for (unsigned i = 0; i < N; ++i) {
        if (F.degree_in(i) < M) {
            BranchTrace tr;
            tr.kind = BranchKind::BasisVector;
            tr.index = static_cast<int>(i) + 1;
            AlgVector ei = basis_vector(N, i);
            std::vector<bool> flags(N, false);
            flags[i] = true;
            return finish_certificate(F, std::nullopt, tr, ei, bound, flags, prec_cap);
        }
    }
    // binary reduction: F(X1, X2, 0, ..., 0), g = F(X1, 1)
    MultiPoly f12 = F.restrict_to({0, 1});
    UniPoly g = f12.univariate_in(0, {Rat(1)});
    AlgebraicNumber alpha = min_height_root(g);
    std::vector<UniPoly> reprs(N, UniPoly());
    reprs[0] = UniPoly::x();
    reprs[1] = UniPoly::constant(Rat(1));
    AlgVector z;
    z.field = alpha.field;
    z.reprs.clear();
    for (UniPoly& r : reprs) z.reprs.push_back(alpha.field->reduce(r));
    BranchTrace tr;
    tr.kind = BranchKind::BinaryReduction;
    tr.pivot_var = 1;
    std::vector<bool> flags(N, false);
    flags[0] = flags[1] = true;
    return finish_certificate(F, std::nullopt, tr, z, bound, flags, prec_cap);
}

// ---------------------------------------------------------------------------

SpanningResult spanning_zeros(const MultiPoly& F, long prec_cap) {
    if (!F.is_homogeneous())
        throw std::invalid_argument("spanning_zeros: non-homogeneous input");
    unsigned N = F.nvars();
    if (N < 2) throw std::invalid_argument("spanning_zeros: need N >= 2");
    if (F.is_zero()) throw std::invalid_argument("spanning_zeros: zero polynomial");
    int M = F.total_degree();
    if (M < 1) throw std::invalid_argument("spanning_zeros: need degree >= 1");
    CertReal bound = sqrt2() * height_cert(F).root(static_cast<unsigned>(M));

    SpanningResult out;
    for (unsigned i = 0; i < N; ++i) {
        for (unsigned j = 0; j < N; ++j) {
            if (i == j) continue;
            MultiPoly fij = F.restrict_to({i, j});
            BranchTrace tr;
            std::vector<bool> flags(N, false);
            AlgVector z;
            if (fij.is_zero() || fij.degree_in(0) < M) {
                tr.kind = fij.is_zero() ? BranchKind::ZeroPolynomial : BranchKind::BasisVector;
                tr.index = static_cast<int>(i) + 1;
                z = basis_vector(N, i);
                flags[i] = true;
            } else if (fij.degree_in(1) < M) {
                tr.kind = BranchKind::BasisVector;
                tr.index = static_cast<int>(j) + 1;
                z = basis_vector(N, j);
                flags[j] = true;
            } else {
                UniPoly g = fij.univariate_in(0, {Rat(1)});
                AlgebraicNumber alpha = min_height_root(g);
                z.field = alpha.field;
                z.reprs.assign(N, UniPoly());
                z.reprs[i] = alpha.field->reduce(UniPoly::x());
                z.reprs[j] = UniPoly::constant(Rat(1));
                tr.kind = BranchKind::BinaryReduction;
                tr.pivot_var = static_cast<int>(i) + 1;
                flags[i] = flags[j] = true;
            }
            out.certificates.push_back(
                finish_certificate(F, std::nullopt, tr, z, bound, flags, prec_cap));
        }
    }
    // exact rank of the support patterns
    QMatrix pat;
    for (const ZeroCertificate& c : out.certificates) {
        std::vector<Rat> row;
        for (bool b : c.nonzero_coords) row.push_back(Rat(b ? 1 : 0));
        pat.rows.push_back(std::move(row));
    }
    out.pattern_rank = pat.rank();
    out.spans = (out.pattern_rank == N);
    return out;
}

// ---------------------------------------------------------------------------

std::vector<long> avoid_hypersurface_point(const MultiPoly& P, long B) {
    if (P.is_zero()) throw std::invalid_argument("avoid_hypersurface_point: zero polynomial");
    if (B < 1) throw std::invalid_argument("avoid_hypersurface_point: need B >= 1");
    unsigned n = P.nvars();
    // value sequence 1, -1, 2, -2, ..., B, -B
    auto value = [](long k) { return (k % 2 == 0) ? (k / 2 + 1) : -(k / 2 + 1); };
    std::vector<long> idx(n, 0);
    for (;;) {
        std::vector<Rat> a(n);
        for (unsigned i = 0; i < n; ++i) a[i] = Rat(value(idx[i]));
        if (P.eval(a) != 0) {
            std::vector<long> out(n);
            for (unsigned i = 0; i < n; ++i) out[i] = value(idx[i]);
            return out;
        }
        long pos = static_cast<long>(n) - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == 2 * B - 1) {
            idx[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            throw search_exhausted_error(
                "avoid_hypersurface_point: grid exhausted; B is below the guaranteed "
                "threshold deg(P)/2 = " +
                std::to_string(P.total_degree() / 2.0));
        ++idx[static_cast<size_t>(pos)];
    }
}

// ---------------------------------------------------------------------------

ZeroCertificate nonzero_coord_zero(const MultiPoly& F, long prec_cap) {
    if (F.is_zero()) throw std::invalid_argument("nonzero_coord_zero: zero polynomial");
    if (F.is_monomial())
        throw std::invalid_argument("nonzero_coord_zero: monomial input has no such zero");
    unsigned N = F.nvars();
    if (N < 2) throw std::invalid_argument("nonzero_coord_zero: need N >= 2");
    int M = F.total_degree();

    // smallest variable occurring with two distinct exponents
    int pivot = -1;
    for (unsigned v = 0; v < N && pivot < 0; ++v) {
        std::set<unsigned> exps;
        for (const auto& [m, c] : F.terms()) exps.insert(m[v]);
        if (exps.size() >= 2) pivot = static_cast<int>(v);
    }
    if (pivot < 0) throw std::logic_error("nonzero_coord_zero: no pivot variable");

    std::vector<MultiPoly> parts = F.decompose_along(static_cast<unsigned>(pivot));
    int j = -1, k = -1;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].is_zero()) continue;
        if (j < 0)
            j = static_cast<int>(i);
        else {
            k = static_cast<int>(i);
            break;
        }
    }
    if (k < 0) throw std::logic_error("nonzero_coord_zero: single X1-power");

    MultiPoly prod = parts[static_cast<size_t>(j)] * parts[static_cast<size_t>(k)];
    std::vector<long> a = avoid_hypersurface_point(prod, M);

    std::vector<Rat> a_rat(a.size());
    for (size_t i = 0; i < a.size(); ++i) a_rat[i] = Rat(a[i]);
    UniPoly g = F.univariate_in(static_cast<unsigned>(pivot), a_rat);
    unsigned strip = g.trailing_order();
    if (strip > 0) g = g.shift_down(strip);
    if (g.coeff(0) == 0) throw std::logic_error("nonzero_coord_zero: g(0) = 0 after strip");
    AlgebraicNumber alpha = min_height_root(g);
    // alpha != 0 exactly: the minimal polynomial has nonzero constant term
    if (alpha.minpoly()[0] == 0) throw std::logic_error("nonzero_coord_zero: zero root chosen");

    AlgVector z;
    z.field = alpha.field;
    z.reprs.assign(N, UniPoly());
    size_t pos = 0;
    for (unsigned v = 0; v < N; ++v) {
        if (v == static_cast<unsigned>(pivot))
            z.reprs[v] = alpha.field->reduce(UniPoly::x());
        else
            z.reprs[v] = UniPoly::constant(a_rat[pos++]);
    }
    if (z.degree() > static_cast<unsigned>(M))
        throw std::logic_error("nonzero_coord_zero: degree bound violated");

    BranchTrace tr;
    tr.kind = BranchKind::NonzeroCoordinate;
    tr.pivot_var = pivot + 1;
    tr.avoid_point = a;
    CertReal bound = CertReal::from_rat(rat_pow(Rat(M), static_cast<unsigned long>(M))) *
                     CertReal::nth_root(Rat(static_cast<long>(N) - 1), 2) * height_cert(F);
    return finish_certificate(F, std::nullopt, tr, z, bound,
                              std::vector<bool>(N, true), prec_cap);
}

// ---------------------------------------------------------------------------

BetaStep select_beta(const MultiPoly& F) {
    if (!F.is_homogeneous() || F.is_zero())
        throw std::invalid_argument("select_beta: need a nonzero homogeneous polynomial");
    unsigned N = F.nvars();
    int M = F.total_degree();
    if (N < 2 || M < 1) throw std::invalid_argument("select_beta: need N >= 2, M >= 1");
    if (homogeneous_unit_value(F, N - 1) == 0)
        throw hypothesis_failure_error("select_beta: F(e_N) = 0");
    if (homogeneous_unit_value(F, N - 2) == 0)
        throw hypothesis_failure_error("select_beta: F(e_{N-1}) = 0");
    // p(b) = sum_i f_{(0,...,0,i,M-i)} b^(M-i)
    std::vector<Rat> pc(static_cast<size_t>(M + 1), Rat(0));
    for (int i = 0; i <= M; ++i) {
        Monomial mono(N, 0);
        mono[N - 2] = static_cast<unsigned>(i);
        mono[N - 1] = static_cast<unsigned>(M - i);
        pc[static_cast<size_t>(M - i)] = F.coeff(mono);
    }
    UniPoly p{std::move(pc)};
    long limit = M / 2 + 1;
    for (long beta = 1; beta <= limit; ++beta) {
        for (int sign : {+1, -1}) {
            if (p.eval(Rat(sign * beta)) != 0) return {static_cast<unsigned>(beta), sign};
        }
    }
    throw std::logic_error("select_beta: no beta within the guaranteed range");
}

namespace {

// recursive core of the all-nonzero construction
std::pair<AlgVector, std::vector<BetaStep>> all_nonzero_core(const MultiPoly& F) {
    unsigned N = F.nvars();
    int M = F.total_degree();
    for (unsigned i = 0; i < N; ++i)
        if (homogeneous_unit_value(F, i) == 0)
            throw hypothesis_failure_error("all_nonzero: F(e_" + std::to_string(i + 1) + ") = 0");
    if (N == 2) {
        UniPoly g = F.univariate_in(0, {Rat(1)});
        AlgebraicNumber alpha = min_height_root(g);
        if (alpha.minpoly()[0] == 0)
            throw std::logic_error("all_nonzero: zero root in the base case");
        AlgVector z;
        z.field = alpha.field;
        z.reprs = {alpha.field->reduce(UniPoly::x()), UniPoly::constant(Rat(1))};
        return {z, {}};
    }
    BetaStep step = select_beta(F);
    Rat c = Rat(step.sign) * Rat(static_cast<long>(step.beta));
    MultiPoly Fp = F.substitute_scaled_var(N - 1, N - 2, c);
    if (Fp.total_degree() != M || !Fp.is_homogeneous())
        throw std::logic_error("all_nonzero: substitution changed the degree");
    for (unsigned i = 0; i + 1 < N; ++i)
        if (homogeneous_unit_value(Fp, i) == 0)
            throw hypothesis_failure_error(
                "all_nonzero: F'(e_" + std::to_string(i + 1) + ") = 0 after beta substitution");
    auto [x, inner] = all_nonzero_core(Fp);
    AlgVector z = x;
    z.reprs.push_back(z.field ? z.field->reduce(x.reprs[N - 2].scaled(c))
                              : x.reprs[N - 2].scaled(c));
    std::vector<BetaStep> trace{step};
    trace.insert(trace.end(), inner.begin(), inner.end());
    return {z, trace};
}

}  // namespace

ZeroCertificate all_nonzero_zero(const MultiPoly& F, long prec_cap) {
    if (!F.is_homogeneous() || F.is_zero())
        throw std::invalid_argument("all_nonzero_zero: need a nonzero homogeneous polynomial");
    unsigned N = F.nvars();
    int M = F.total_degree();
    if (N < 2) throw std::invalid_argument("all_nonzero_zero: need N >= 2");
    if (M < 1) throw std::invalid_argument("all_nonzero_zero: need M >= 1");

    auto [z, trace] = all_nonzero_core(F);
    for (const UniPoly& r : z.reprs)
        if (r.is_zero()) throw std::logic_error("all_nonzero_zero: zero coordinate");

    BranchTrace tr;
    tr.kind = BranchKind::AllNonzero;
    tr.beta_trace = trace;
    CertReal bound = constant_c2(N, static_cast<unsigned>(M)).value *
                     height_cert(F).root(static_cast<unsigned>(M));
    return finish_certificate(F, std::nullopt, tr, z, bound,
                              std::vector<bool>(N, true), prec_cap);
}

// ---------------------------------------------------------------------------

ZeroCertificate torus_zero(const MultiPoly& F, const QMatrix& A, long prec_cap) {
    if (!F.is_homogeneous() || F.is_zero())
        throw std::invalid_argument("torus_zero: need a nonzero homogeneous polynomial");
    unsigned N = F.nvars();
    int M = F.total_degree();
    if (N < 2 || M < 1) throw std::invalid_argument("torus_zero: need N >= 2, M >= 1");
    if (A.nrows() != N || A.ncols() != N)
        throw std::invalid_argument("torus_zero: matrix dimension mismatch");
    if (A.det() == 0) throw std::invalid_argument("torus_zero: singular matrix");

    MultiPoly G = F.substitute_linear(A);
    for (unsigned i = 0; i < N; ++i) {
        if (homogeneous_unit_value(G, i) != 0) continue;
        // branch 1: x = A e_i, the i-th column of A
        std::vector<Rat> col(N);
        for (unsigned r = 0; r < N; ++r) col[r] = A.rows[r][i];
        AlgVector x = AlgVector::from_rats(col);
        BranchTrace tr;
        tr.kind = BranchKind::TorusColumn;
        tr.index = static_cast<int>(i) + 1;
        CertReal bound = height_matrix(A).to_cert();
        std::vector<bool> flags;
        for (const Rat& v : col) flags.push_back(v != 0);
        return finish_certificate(F, A, tr, x, bound, flags, prec_cap);
    }

    ZeroCertificate inner = all_nonzero_zero(G, prec_cap);
    // x = A z over the same field
    const AlgVector& z = inner.point;
    AlgVector x;
    x.field = z.field;
    x.reprs.assign(N, UniPoly());
    for (unsigned r = 0; r < N; ++r) {
        UniPoly acc;
        for (unsigned c = 0; c < N; ++c) acc = acc + z.reprs[c].scaled(A.rows[r][c]);
        x.reprs[r] = x.field ? x.field->reduce(acc) : acc;
    }
    // exact torus membership: A^-1 x must equal z with all coordinates nonzero
    QMatrix Ainv = A.inverse();
    for (unsigned r = 0; r < N; ++r) {
        UniPoly acc;
        for (unsigned c = 0; c < N; ++c) acc = acc + x.reprs[c].scaled(Ainv.rows[r][c]);
        acc = x.field ? x.field->reduce(acc) : acc;
        if (!(acc == z.reprs[r]) || acc.is_zero())
            throw std::logic_error("torus_zero: A^-1 x does not match the torus point");
    }
    BranchTrace tr;
    tr.kind = BranchKind::TorusImage;
    tr.beta_trace = inner.branch.beta_trace;
    CertReal bound = constant_c1(N, static_cast<unsigned>(M)).value *
                     height_matrix(A).to_cert().pow(2) *
                     height_cert(F).root(static_cast<unsigned>(M));
    return finish_certificate(F, A, tr, x, bound, z.nonzero_flags(), prec_cap);
}

// ---------------------------------------------------------------------------

ZeroCertificate inhomogeneous_zero(const MultiPoly& F, long prec_cap) {
    if (F.is_zero() || F.is_homogeneous())
        throw std::invalid_argument("inhomogeneous_zero: need an inhomogeneous polynomial");
    unsigned N = F.nvars();
    int M = F.total_degree();
    if (N < 2 || M < 1) throw std::invalid_argument("inhomogeneous_zero: need N >= 2, M >= 1");
    for (unsigned i = 0; i < N; ++i)
        if (affine_unit_value(F, i) == 0)
            throw hypothesis_failure_error("inhomogeneous_zero: F(e_" + std::to_string(i + 1) +
                                           ") = 0");

    MultiPoly Fh = F.homogenize();  // X_0 is variable index 0
    CertReal bound = constant_c2(N + 1, static_cast<unsigned>(M)).value *
                     height_cert(F).root(static_cast<unsigned>(M));

    bool e0_nonzero = homogeneous_unit_value(Fh, 0) != 0;
    if (e0_nonzero) {
        for (unsigned i = 1; i <= N; ++i)
            if (homogeneous_unit_value(Fh, i) == 0)
                throw hypothesis_failure_error(
                    "inhomogeneous_zero case a: F'(e'_" + std::to_string(i) +
                    ") = 0 while F'(e'_0) != 0 (the paper's final case is not constructive)");
        ZeroCertificate inner = all_nonzero_zero(Fh, prec_cap);
        const AlgVector& zp = inner.point;
        NFElement z0 = zp.coord(0);
        AlgVector z;
        z.field = zp.field;
        for (unsigned i = 1; i <= N; ++i) {
            NFElement zi = zp.coord(i) / z0;
            z.reprs.push_back(zi.repr());
        }
        BranchTrace tr;
        tr.kind = BranchKind::InhomCaseA;
        tr.beta_trace = inner.branch.beta_trace;
        return finish_certificate(F, std::nullopt, tr, z, bound,
                                  std::vector<bool>(N, true), prec_cap);
    }

    // case b: F'(e'_0) = 0; try X_0 := X_j, re-checking the paper's claims
    std::vector<std::string> failures;
    Rat hf_s = height_poly(F).arch_sq.value();
    for (unsigned j = 1; j <= N; ++j) {
        MultiPoly G = Fh.substitute_scaled_var(0, j, Rat(1));
        bool ok = true;
        std::string why;
        if (G.total_degree() != M) {
            ok = false;
            why = "deg G != M after X_0 := X_" + std::to_string(j) + " (top terms merged away)";
        }
        for (unsigned i = 0; i < N && ok; ++i) {
            if (homogeneous_unit_value(G, i) == 0) {
                ok = false;
                why = "G(e_" + std::to_string(i + 1) + ") = 0 after X_0 := X_" + std::to_string(j);
            }
        }
        if (ok) {
            // the paper asserts H(G) = H(F); monomial merging can break this
            Rat hg_s = height_poly(G).arch_sq.value();
            if (!(hg_s == hf_s)) {
                ok = false;
                why = "H(G) != H(F) after X_0 := X_" + std::to_string(j) +
                      " (coefficients merged)";
            }
        }
        if (!ok) {
            failures.push_back(why);
            continue;
        }
        ZeroCertificate inner = all_nonzero_zero(G, prec_cap);
        const AlgVector& zg = inner.point;
        NFElement z0 = zg.coord(j - 1);  // X_0 took the value of X_j
        AlgVector z;
        z.field = zg.field;
        for (unsigned i = 0; i < N; ++i) {
            NFElement zi = zg.coord(i) / z0;
            z.reprs.push_back(zi.repr());
        }
        BranchTrace tr;
        tr.kind = BranchKind::InhomCaseB;
        tr.subst_var = static_cast<int>(j);
        tr.beta_trace = inner.branch.beta_trace;
        return finish_certificate(F, std::nullopt, tr, z, bound,
                                  std::vector<bool>(N, true), prec_cap);
    }
    std::string detail = "inhomogeneous_zero case b: every substitution failed its re-check";
    for (const std::string& f : failures) detail += "; " + f;
    throw hypothesis_failure_error(detail);
}

// ---------------------------------------------------------------------------

namespace {

void enumerate_rec(const MultiPoly& F, long bound, const Rat& cap_sq, std::vector<Int>& cur,
                   Rat& partial_sq, std::vector<EnumeratedZero>& out) {
    size_t idx = cur.size();
    size_t n = F.nvars();
    if (idx == n) {
        bool all_zero = true;
        Int g = 0;
        for (const Int& v : cur) {
            if (v != 0) all_zero = false;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
        if (all_zero || g != 1) return;
        for (const Int& v : cur) {
            if (v == 0) continue;
            if (v < 0) return;  // first nonzero coordinate must be positive
            break;
        }
        std::vector<Rat> args(n);
        for (size_t i = 0; i < n; ++i) args[i] = Rat(cur[i]);
        if (F.eval(args) != 0) return;
        out.push_back({cur, partial_sq});
        return;
    }
    for (long v = -bound; v <= bound; ++v) {
        Rat vs = Rat(v) * Rat(v);
        if (partial_sq + vs > cap_sq) continue;
        cur.push_back(Int(v));
        partial_sq += vs;
        enumerate_rec(F, bound, cap_sq, cur, partial_sq, out);
        partial_sq -= vs;
        cur.pop_back();
    }
}

}  // namespace

std::vector<EnumeratedZero> enumerate_rational_zeros(const MultiPoly& F, const Rat& cap) {
    if (cap < 1) throw std::invalid_argument("enumerate_rational_zeros: need cap >= 1");
    Rat cap_sq = cap * cap;
    long bound = static_cast<long>(cap.get_d());
    std::vector<Int> cur;
    Rat partial(0);
    std::vector<EnumeratedZero> out;
    enumerate_rec(F, bound, cap_sq, cur, partial, out);
    std::sort(out.begin(), out.end(), [](const EnumeratedZero& a, const EnumeratedZero& b) {
        if (a.height_sq != b.height_sq) return a.height_sq < b.height_sq;
        return std::lexicographical_compare(a.point.begin(), a.point.end(), b.point.begin(),
                                            b.point.end());
    });
    return out;
}

// ---------------------------------------------------------------------------

VerifyReport verify_certificate(const ZeroCertificate& cert, long prec_cap) {
    VerifyReport rep;
    rep.zero_ok = eval_poly(cert.input, coords_of(cert.point)).is_zero();
    int M = cert.input.total_degree();
    rep.degree_ok = cert.point.degree() == cert.degree &&
                    (M < 1 || cert.degree <= static_cast<unsigned>(M));
    std::vector<bool> flags;
    if (cert.branch.kind == BranchKind::TorusImage && cert.matrix) {
        QMatrix inv = cert.matrix->inverse();
        unsigned n = static_cast<unsigned>(inv.nrows());
        flags.reserve(n);
        for (unsigned r = 0; r < n; ++r) {
            UniPoly acc;
            for (unsigned c = 0; c < n; ++c)
                acc = acc + cert.point.reprs[c].scaled(inv.rows[r][c]);
            if (cert.point.field) acc = cert.point.field->reduce(acc);
            flags.push_back(!acc.is_zero());
        }
    } else {
        flags = cert.point.nonzero_flags();
    }
    rep.nonzero_ok = (flags == cert.nonzero_coords);
    HeightValue h = height_point(cert.point);
    rep.bound_verdict = compare(h, cert.bound_expr, prec_cap);
    return rep;
}

CompositionReport composition_height_check(const MultiPoly& F, const QMatrix& A, long prec_cap) {
    if (!F.is_homogeneous() || F.is_zero())
        throw std::invalid_argument("composition_height_check: need nonzero homogeneous F");
    if (A.nrows() != F.nvars() || A.ncols() != F.nvars())
        throw std::invalid_argument("composition_height_check: dimension mismatch");
    unsigned N = F.nvars();
    unsigned M = static_cast<unsigned>(F.total_degree());
    MultiPoly G = F.substitute_linear(A);
    CompositionReport rep;
    rep.composed_height = height_poly(G);
    rep.bound = CertReal::nth_root(Rat(binomial(N + M, N)), 2) *
                height_matrix(A).to_cert().pow(M) * height_cert(F);
    rep.verdict = compare(rep.composed_height, rep.bound, prec_cap);
    return rep;
}

}  // namespace smallzeros
