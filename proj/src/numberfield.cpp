// numberfield.cpp

#include "smallzeros/numberfield.hpp"
#include "smallzeros/resultant.hpp"

#include <algorithm>

namespace smallzeros {

namespace {
constexpr long kBaseIsolationPrec = 32;
}

NumberField::NumberField(IntPoly f) : f_(std::move(f)) {
    int d = ip_degree(f_);
    if (d < 1) throw std::invalid_argument("NumberField: degree must be >= 1");
    if (f_[static_cast<size_t>(d)] <= 0)
        throw std::invalid_argument("NumberField: leading coefficient must be positive");
    f_.resize(static_cast<size_t>(d + 1));
    degree_ = static_cast<unsigned>(d);
    fq_ = ip_to_unipoly(f_);
    base_roots_ = isolate_irreducible_roots(f_, Dyadic(mpz_class(1), -kBaseIsolationPrec));
    refined_.reserve(base_roots_.size());
    for (const RootBox& rb : base_roots_) refined_.push_back(rb.box);
    refined_prec_ = kBaseIsolationPrec;
}

std::shared_ptr<const NumberField> NumberField::make(const IntPoly& f) {
    return std::shared_ptr<const NumberField>(new NumberField(f));
}

std::shared_ptr<const NumberField> NumberField::rationals() {
    static std::shared_ptr<const NumberField> q =
        std::shared_ptr<const NumberField>(new NumberField(IntPoly{Int(0), Int(1)}));
    return q;
}

std::vector<Enclosure> NumberField::roots_at(long prec) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (prec <= refined_prec_) return refined_;
    Dyadic w(mpz_class(1), -prec);
    for (size_t i = 0; i < refined_.size(); ++i)
        refined_[i] = refine_root(f_, refined_[i], base_roots_[i].real, w);
    refined_prec_ = prec;
    return refined_;
}

UniPoly NumberField::reduce(const UniPoly& p) const {
    return UniPoly::divrem(p, fq_).second;
}

// ---------------------------------------------------------------------------

NFElement::NFElement(FieldPtr field, UniPoly repr) : field_(std::move(field)) {
    if (!field_) {
        if (repr.degree() > 0)
            throw std::invalid_argument("NFElement: nonconstant repr without a field");
        repr_ = std::move(repr);
        return;
    }
    repr_ = field_->reduce(repr);
    if (field_->degree() == 1) {
        // normalize rationals living in a degree-1 field
        if (!repr_.is_zero() && repr_.degree() != 0)
            throw std::logic_error("NFElement: bad reduction");
    }
}

NFElement NFElement::from_rat(FieldPtr field, const Rat& v) {
    return NFElement(std::move(field), UniPoly::constant(v));
}

Rat NFElement::rational_value() const {
    if (!is_rational()) throw std::domain_error("NFElement: not rational");
    return repr_.coeff(0);
}

FieldPtr NFElement::merge_fields(const NFElement& a, const NFElement& b) {
    if (!a.field_) return b.field_;
    if (!b.field_) return a.field_;
    if (a.field_ == b.field_ || a.field_->same_field(*b.field_)) return a.field_;
    throw incompatible_fields_error("NFElement: mixed number fields");
}

NFElement operator+(const NFElement& a, const NFElement& b) {
    return NFElement(NFElement::merge_fields(a, b), a.repr_ + b.repr_);
}

NFElement operator-(const NFElement& a, const NFElement& b) {
    return NFElement(NFElement::merge_fields(a, b), a.repr_ - b.repr_);
}

NFElement operator*(const NFElement& a, const NFElement& b) {
    return NFElement(NFElement::merge_fields(a, b), a.repr_ * b.repr_);
}

NFElement NFElement::operator-() const { return NFElement(field_, -repr_); }

NFElement NFElement::scaled(const Rat& c) const { return NFElement(field_, repr_.scaled(c)); }

NFElement NFElement::inverse() const {
    if (is_zero()) throw std::domain_error("NFElement: inverse of zero");
    if (!field_ || is_rational())
        return NFElement(field_, UniPoly::constant(Rat(1) / repr_.coeff(0)));
    auto [g, s, t] = unipoly_ext_gcd(repr_, field_->minpoly_q());
    if (g.degree() != 0) throw std::logic_error("NFElement: minpoly not irreducible?");
    return NFElement(field_, s.scaled(Rat(1) / g.coeff(0)));
}

NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }

bool NFElement::operator==(const NFElement& o) const {
    if (is_rational() && o.is_rational())
        return repr_.coeff(0) == o.repr_.coeff(0);
    return (*this - o).is_zero();
}

// ---------------------------------------------------------------------------

Rat AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("AlgebraicNumber: not rational");
    const IntPoly& f = field->minpoly();
    return make_rat(-f[0], f[1]);
}

AlgebraicNumber algebraic_from_rat(const Rat& v) {
    IntPoly f{-v.get_num(), v.get_den()};
    if (f[1] < 0) {
        f[0] = -f[0];
        f[1] = -f[1];
    }
    return AlgebraicNumber{NumberField::make(f), 0};
}

UniPoly element_minpoly(const NumberField& field, const UniPoly& repr) {
    UniPoly g = field.reduce(repr);
    if (g.degree() <= 0) {
        // y - c, cleared to integers with positive lc
        Rat c = g.coeff(0);
        return UniPoly(std::vector<Rat>{-c, Rat(1)});
    }
    // characteristic polynomial: Res_x(f(x), y - g(x)) in Q[y]
    MPolyRing R{1};
    const UniPoly& f = field.minpoly_q();
    RPoly<MPolyRing> A, B;
    for (int i = 0; i <= f.degree(); ++i) A.push_back(MultiPoly::constant(1, f.coeff(i)));
    for (int i = 0; i <= g.degree(); ++i) B.push_back(MultiPoly::constant(1, -g.coeff(i)));
    B[0] = B[0] + MultiPoly::variable(1, 0);
    MultiPoly chi = resultant(R, A, B);
    std::vector<Rat> cy(static_cast<size_t>(chi.total_degree() + 1), Rat(0));
    for (const auto& [m, c] : chi.terms()) cy[m[0]] = c;
    UniPoly charpoly{std::move(cy)};
    UniPoly min = charpoly.squarefree_part();
    auto [ip, scale] = min.integer_primitive();
    return ip_to_unipoly(ip);
}

std::tuple<UniPoly, UniPoly, UniPoly> unipoly_ext_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(Rat(1)), s1;
    UniPoly t0, t1 = UniPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = UniPoly::divrem(r0, r1);
        r0 = r1;
        r1 = r;
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) throw std::domain_error("ext_gcd of zero polynomials");
    Rat lead = r0.lc();
    return {r0.scaled(Rat(1) / lead), s0.scaled(Rat(1) / lead), t0.scaled(Rat(1) / lead)};
}

}  // namespace smallzeros
