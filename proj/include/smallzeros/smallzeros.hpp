// smallzeros.hpp
// Constructive small-height zero search. Every operation returns a
// ZeroCertificate whose exact checks (zero evaluation in Q[x]/(f), degree,
// nonzero coordinates) are re-verified, with a certified comparison of the
// computed height against the claimed bound. Hypothesis violations are
// reported as named diagnostics, never papered over.

#pragma once

#include "smallzeros/constants.hpp"
#include "smallzeros/evaluate.hpp"
#include "smallzeros/heights.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace smallzeros {

struct hypothesis_failure_error : std::runtime_error {
    explicit hypothesis_failure_error(const std::string& check)
        : std::runtime_error("hypothesis failure: " + check), failed_check(check) {}
    std::string failed_check;
};

struct search_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BranchKind {
    ZeroPolynomial,     // F identically zero: e_1
    BasisVector,        // deg_{X_i} F < M: e_i
    BinaryReduction,    // reduction to the binary form F(X_1, X_2, 0, ..., 0)
    NonzeroCoordinate,  // integer point off a hypersurface + one root
    AllNonzero,         // recursive X_N := sign*beta*X_{N-1} elimination
    TorusColumn,        // F(A e_i) = 0: column of A
    TorusImage,         // image of an all-nonzero zero of F(AX)
    InhomCaseA,         // homogenization with all F'(e'_i) != 0
    InhomCaseB,         // X_0 := X_j substitution after F'(e'_0) = 0
};

const char* branch_name(BranchKind k);

struct BetaStep {
    unsigned beta;
    int sign;  // +1 or -1
};

struct BranchTrace {
    BranchKind kind = BranchKind::BasisVector;
    int index = -1;                    // 1-based basis-vector / column index
    std::vector<BetaStep> beta_trace;  // outermost substitution first
    int subst_var = -1;                // case-b target variable (1-based)
    int pivot_var = -1;                // variable isolated in the univariate step
    std::vector<long> avoid_point;    // integer vector from the grid scan
};

struct ZeroCertificate {
    MultiPoly input;
    std::optional<QMatrix> matrix;
    BranchTrace branch;
    AlgVector point;
    unsigned degree = 1;             // degree of the generator over Q
    CertReal bound_expr;             // claimed bound, refinable
    DyInterval claimed_bound;        // enclosure of the bound (reporting)
    HeightValue computed_height;
    bool zero_verified = false;
    std::vector<bool> nonzero_coords;
    Cmp bound_verdict = Cmp::Inconclusive;
};

struct VerifyReport {
    bool zero_ok = false;
    bool degree_ok = false;
    bool nonzero_ok = false;
    Cmp bound_verdict = Cmp::Inconclusive;
    bool all_ok() const {
        return zero_ok && degree_ok && nonzero_ok && bound_verdict == Cmp::LE_certified;
    }
};

// Lemma-style root choice: a root of g of minimal Mahler-measure invariant
// M(f)^(1/deg f) over the irreducible factors, first root in box order.
AlgebraicNumber min_height_root(const UniPoly& g);

ZeroCertificate basic_small_zero(const MultiPoly& F,
                                 long prec_cap = default_precision_cap());

struct SpanningResult {
    std::vector<ZeroCertificate> certificates;
    size_t pattern_rank = 0;
    bool spans = false;
};
SpanningResult spanning_zeros(const MultiPoly& F, long prec_cap = default_precision_cap());

// integer vector with nonzero entries, |a_i| <= B, P(a) != 0, first hit in
// the scan order 1, -1, 2, -2, ..., rightmost coordinate fastest
std::vector<long> avoid_hypersurface_point(const MultiPoly& P, long B);

ZeroCertificate nonzero_coord_zero(const MultiPoly& F,
                                   long prec_cap = default_precision_cap());

BetaStep select_beta(const MultiPoly& F);

ZeroCertificate all_nonzero_zero(const MultiPoly& F,
                                 long prec_cap = default_precision_cap());

ZeroCertificate torus_zero(const MultiPoly& F, const QMatrix& A,
                           long prec_cap = default_precision_cap());

ZeroCertificate inhomogeneous_zero(const MultiPoly& F,
                                   long prec_cap = default_precision_cap());

struct EnumeratedZero {
    std::vector<Int> point;  // primitive, first nonzero coordinate positive
    Rat height_sq;           // exact H(point)^2
};
std::vector<EnumeratedZero> enumerate_rational_zeros(const MultiPoly& F, const Rat& cap);

VerifyReport verify_certificate(const ZeroCertificate& cert,
                                long prec_cap = default_precision_cap());

struct CompositionReport {
    Cmp verdict = Cmp::Inconclusive;
    HeightValue composed_height;
    CertReal bound;
};
CompositionReport composition_height_check(const MultiPoly& F, const QMatrix& A,
                                           long prec_cap = default_precision_cap());

}  // namespace smallzeros
