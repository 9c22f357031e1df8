// heights.hpp
// Absolute Weil heights with exact finite parts and certified archimedean
// enclosures. Finite parts of points over Q(alpha) come from the norm-form
// resultant identity
//     (finite part)^D = q^D * lc(f)^e / |content(Res_x(f, sum t_i G_i))|
// with z_i = G_i(alpha)/q; the archimedean part multiplies l2 norms over
// the D embeddings, evaluated on refinable root enclosures.

#pragma once

#include "smallzeros/certreal.hpp"
#include "smallzeros/multipoly.hpp"
#include "smallzeros/numberfield.hpp"

#include <optional>

namespace smallzeros {

struct HeightValue {
    Rat finite_base = Rat(1);       // finite part = finite_base^(1/finite_root)
    unsigned finite_root = 1;
    std::optional<Rat> arch_sq;     // arch part = sqrt(arch_sq) exactly, when known
    Refiner arch;                   // certified arch-part enclosure (always set)
    unsigned degree_used = 1;

    DyInterval enclosure(long prec) const;
    CertReal to_cert() const;       // fully exact when arch_sq is known
    double approx() const;
};

// vector of coordinates in one number field Q(alpha); a null field means a
// plain rational vector
struct AlgVector {
    FieldPtr field;                 // null => rational coordinates
    std::vector<UniPoly> reprs;     // each reduced mod the field polynomial

    static AlgVector from_rats(const std::vector<Rat>& v);
    static AlgVector from_elements(const std::vector<NFElement>& v);

    size_t size() const { return reprs.size(); }
    bool is_zero() const;
    unsigned degree() const { return field ? field->degree() : 1; }
    NFElement coord(size_t i) const;
    std::vector<bool> nonzero_flags() const;
    Int denominator() const;        // minimal positive q clearing all coefficients
    bool all_rational() const;      // every repr is a constant
    std::vector<Rat> rational_coords() const;
};

HeightValue height_rational_vector(const std::vector<Rat>& x);
HeightValue height_algebraic(const AlgebraicNumber& a);
HeightValue height_point(const AlgVector& z);
HeightValue height_poly(const MultiPoly& f);
HeightValue height_poly(const UniPoly& f);
HeightValue height_matrix(const QMatrix& a);
HeightValue height_subspace(const QMatrix& rows);  // rank M < N required

// Mahler measure of a nonzero integer polynomial: |lc| * prod max(1, |root|)
CertReal mahler_measure(const IntPoly& f);

// finite part of a height two ways, for the D = 1 cross-check:
// the norm-form route on the raw (unnormalized) vector, and the
// gcd/content route q/gcd
Rat normform_finite_part(const AlgVector& z);
Rat content_finite_part(const std::vector<Rat>& x);

struct PlaceSplit {
    std::vector<std::pair<Int, Rat>> finite;  // (p, |a|_p) entries != 1
    DyInterval arch;                          // |a| at the real place
};

struct ProductFormulaReport {
    bool exact_ok = false;        // rational: exact product == 1;
                                  // algebraic: reverse-minpoly identity holds
    bool enclosure_ok = false;    // certified place product encloses 1 tightly
    PlaceSplit split;             // rational case only
    std::string detail;
};

ProductFormulaReport product_formula_check(const Rat& a);
ProductFormulaReport product_formula_check(const NFElement& a, long prec = 64);

// sound three-valued comparisons
Cmp compare(const HeightValue& h, const CertReal& bound, long max_prec = default_precision_cap());
Cmp compare(const HeightValue& a, const HeightValue& b, long max_prec = default_precision_cap());

}  // namespace smallzeros
