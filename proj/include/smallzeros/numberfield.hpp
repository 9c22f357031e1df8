// numberfield.hpp
// Arithmetic in Q[x]/(f) for an irreducible primitive integer polynomial f,
// plus algebraic numbers as (minimal polynomial, selected root enclosure).

#pragma once

#include "smallzeros/roots.hpp"
#include "smallzeros/unipoly.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace smallzeros {

struct incompatible_fields_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class NumberField {
public:
    // f must be irreducible over Q, primitive with positive leading
    // coefficient; callers that are unsure should factor first.
    static std::shared_ptr<const NumberField> make(const IntPoly& f);
    static std::shared_ptr<const NumberField> rationals();  // f = x

    unsigned degree() const { return degree_; }
    const IntPoly& minpoly() const { return f_; }
    const UniPoly& minpoly_q() const { return fq_; }
    Int minpoly_lc() const { return f_[degree_]; }

    // all roots with both box sides <= 2^-prec; refinements are nested and
    // the order (by box midpoint) is fixed at construction
    std::vector<Enclosure> roots_at(long prec) const;
    const std::vector<RootBox>& base_roots() const { return base_roots_; }

    UniPoly reduce(const UniPoly& p) const;  // canonical representative mod f

    bool same_field(const NumberField& o) const { return f_ == o.f_; }

private:
    explicit NumberField(IntPoly f);
    IntPoly f_;
    UniPoly fq_;
    unsigned degree_;
    std::vector<RootBox> base_roots_;
    mutable std::mutex mu_;
    mutable std::vector<Enclosure> refined_;
    mutable long refined_prec_ = 0;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NFElement {
public:
    NFElement() = default;  // zero over the rationals
    NFElement(FieldPtr field, UniPoly repr);
    static NFElement from_rat(FieldPtr field, const Rat& v);

    const FieldPtr& field() const { return field_; }
    const UniPoly& repr() const { return repr_; }
    bool is_zero() const { return repr_.is_zero(); }
    bool is_rational() const { return repr_.degree() <= 0; }
    Rat rational_value() const;  // requires is_rational()

    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    NFElement operator-() const;
    NFElement inverse() const;  // throws on zero
    friend NFElement operator/(const NFElement& a, const NFElement& b);
    bool operator==(const NFElement& o) const;

    NFElement scaled(const Rat& c) const;

private:
    static FieldPtr merge_fields(const NFElement& a, const NFElement& b);
    FieldPtr field_;   // null means plain rational (repr constant)
    UniPoly repr_;
};

struct AlgebraicNumber {
    FieldPtr field;      // carries the minimal polynomial
    size_t root_index;   // which root of the minimal polynomial, in box order

    unsigned degree() const { return field->degree(); }
    const IntPoly& minpoly() const { return field->minpoly(); }
    Enclosure root_box() const { return field->base_roots()[root_index].box; }
    Enclosure root_box_at(long prec) const { return field->roots_at(prec)[root_index]; }
    bool is_rational() const { return degree() == 1; }
    Rat rational_value() const;
};

// algebraic number from a rational value
AlgebraicNumber algebraic_from_rat(const Rat& v);

// minimal polynomial of g(alpha) in Q[x]/(f): squarefree part of the
// characteristic polynomial Res_x(f(x), y - g(x)), primitive with positive lc
UniPoly element_minpoly(const NumberField& field, const UniPoly& repr);

// extended gcd over Q[x]: returns (g, s, t), g monic, with s*a + t*b = g
std::tuple<UniPoly, UniPoly, UniPoly> unipoly_ext_gcd(const UniPoly& a, const UniPoly& b);

}  // namespace smallzeros
