// multipoly.cpp

#include "smallzeros/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace smallzeros {

QMatrix QMatrix::identity(size_t n) {
    QMatrix m;
    m.rows.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m.rows[i][i] = 1;
    return m;
}

Rat QMatrix::det() const {
    size_t n = nrows();
    if (n != ncols()) throw std::invalid_argument("det: non-square matrix");
    std::vector<std::vector<Rat>> a = rows;
    Rat d(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d *= a[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return d;
}

QMatrix QMatrix::inverse() const {
    size_t n = nrows();
    if (n != ncols()) throw std::invalid_argument("inverse: non-square matrix");
    std::vector<std::vector<Rat>> a = rows;
    QMatrix inv = identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv.rows[piv], inv.rows[col]);
        Rat p = a[col][col];
        for (size_t c = 0; c < n; ++c) {
            a[col][c] /= p;
            inv.rows[col][c] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (size_t c = 0; c < n; ++c) {
                a[r][c] -= f * a[col][c];
                inv.rows[r][c] -= f * inv.rows[col][c];
            }
        }
    }
    return inv;
}

std::vector<Rat> QMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != ncols()) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<Rat> out(nrows(), Rat(0));
    for (size_t i = 0; i < nrows(); ++i)
        for (size_t j = 0; j < ncols(); ++j) out[i] += rows[i][j] * v[j];
    return out;
}

size_t QMatrix::rank() const {
    std::vector<std::vector<Rat>> a = rows;
    size_t n = nrows(), m = ncols(), rank = 0;
    for (size_t col = 0; col < m && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[rank]);
        for (size_t r = rank + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rat f = a[r][col] / a[rank][col];
            for (size_t c = col; c < m; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------

MultiPoly::MultiPoly(unsigned nvars, std::map<Monomial, Rat> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
    normalize();
}

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != nvars_)
            throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

MultiPoly MultiPoly::constant(unsigned nvars, const Rat& v) {
    MultiPoly p(nvars);
    if (v != 0) p.terms_[Monomial(nvars, 0)] = v;
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned i) {
    if (i >= nvars) throw std::invalid_argument("variable index out of range");
    MultiPoly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.terms_[m] = 1;
    return p;
}

Rat MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    if (m.size() != nvars_) throw std::invalid_argument("add_term: bad monomial length");
    Rat& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int t = static_cast<int>(std::accumulate(m.begin(), m.end(), 0u));
        d = std::max(d, t);
    }
    return d;
}

int MultiPoly::degree_in(unsigned var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0u);
    for (const auto& [m, c] : terms_)
        if (std::accumulate(m.begin(), m.end(), 0u) != d) return false;
    return true;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly +: nvars mismatch");
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly *: nvars mismatch");
    MultiPoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.nvars_);
            for (unsigned i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rat& s) const {
    if (s == 0) return MultiPoly(nvars_);
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& args) const {
    if (args.size() != nvars_) throw std::invalid_argument("eval: arity mismatch");
    Rat acc(0);
    for (const auto& [m, c] : terms_) {
        Rat t = c;
        for (unsigned i = 0; i < nvars_; ++i)
            if (m[i] > 0) t *= rat_pow(args[i], m[i]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_linear(const QMatrix& A) const {
    if (A.nrows() != nvars_ || A.ncols() != nvars_)
        throw std::invalid_argument("substitute_linear: dimension mismatch");
    // linear forms L_i = sum_j A[i][j] X_j, powers cached per variable
    std::vector<MultiPoly> forms;
    forms.reserve(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
        MultiPoly L(nvars_);
        for (unsigned j = 0; j < nvars_; ++j) {
            if (A.rows[i][j] == 0) continue;
            Monomial m(nvars_, 0);
            m[j] = 1;
            L.add_term(m, A.rows[i][j]);
        }
        forms.push_back(L);
    }
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) powers[i].push_back(constant(nvars_, 1));
    auto power = [&](unsigned i, unsigned e) -> const MultiPoly& {
        while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * forms[i]);
        return powers[i][e];
    };
    MultiPoly out(nvars_);
    for (const auto& [m, c] : terms_) {
        MultiPoly t = constant(nvars_, c);
        for (unsigned i = 0; i < nvars_; ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        out = out + t;
    }
    return out;
}

MultiPoly MultiPoly::substitute_scaled_var(unsigned i, unsigned j, const Rat& c) const {
    if (i >= nvars_ || j >= nvars_ || i == j)
        throw std::invalid_argument("substitute_scaled_var: bad variable indices");
    MultiPoly out(nvars_ - 1);
    for (const auto& [m, coef] : terms_) {
        Monomial nm;
        nm.reserve(nvars_ - 1);
        unsigned jj_new = 0;
        for (unsigned k = 0, pos = 0; k < nvars_; ++k) {
            if (k == i) continue;
            if (k == j) jj_new = pos;
            nm.push_back(m[k]);
            ++pos;
        }
        nm[jj_new] += m[i];
        out.add_term(nm, coef * rat_pow(c, m[i]));
    }
    return out;
}

MultiPoly MultiPoly::substitute_const(unsigned i, const Rat& c) const {
    if (i >= nvars_) throw std::invalid_argument("substitute_const: bad variable index");
    MultiPoly out(nvars_ - 1);
    for (const auto& [m, coef] : terms_) {
        Monomial nm;
        nm.reserve(nvars_ - 1);
        for (unsigned k = 0; k < nvars_; ++k)
            if (k != i) nm.push_back(m[k]);
        out.add_term(nm, coef * rat_pow(c, m[i]));
    }
    return out;
}

MultiPoly MultiPoly::restrict_to(const std::vector<unsigned>& keep) const {
    MultiPoly out(static_cast<unsigned>(keep.size()));
    for (const auto& [m, coef] : terms_) {
        bool outside = false;
        unsigned kept_sum = 0;
        for (unsigned k : keep) kept_sum += m[k];
        unsigned total = std::accumulate(m.begin(), m.end(), 0u);
        if (kept_sum != total) outside = true;  // some dropped variable occurs
        if (outside) continue;
        Monomial nm;
        nm.reserve(keep.size());
        for (unsigned k : keep) nm.push_back(m[k]);
        out.add_term(nm, coef);
    }
    return out;
}

MultiPoly MultiPoly::homogenize() const {
    if (is_zero()) throw std::domain_error("homogenize: zero polynomial");
    unsigned d = static_cast<unsigned>(total_degree());
    MultiPoly out(nvars_ + 1);
    for (const auto& [m, coef] : terms_) {
        unsigned t = std::accumulate(m.begin(), m.end(), 0u);
        Monomial nm;
        nm.reserve(nvars_ + 1);
        nm.push_back(d - t);
        nm.insert(nm.end(), m.begin(), m.end());
        out.add_term(nm, coef);
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::decompose_along(unsigned var) const {
    if (var >= nvars_) throw std::invalid_argument("decompose_along: bad variable");
    int d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(0, d + 1)), MultiPoly(nvars_ - 1));
    for (const auto& [m, coef] : terms_) {
        Monomial nm;
        nm.reserve(nvars_ - 1);
        for (unsigned k = 0; k < nvars_; ++k)
            if (k != var) nm.push_back(m[k]);
        out[m[var]].add_term(nm, coef);
    }
    return out;
}

UniPoly MultiPoly::univariate_in(unsigned var, const std::vector<Rat>& other_args) const {
    if (other_args.size() + 1 != nvars_)
        throw std::invalid_argument("univariate_in: arity mismatch");
    int d = degree_in(var);
    std::vector<Rat> c(static_cast<size_t>(std::max(0, d + 1)), Rat(0));
    for (const auto& [m, coef] : terms_) {
        Rat t = coef;
        unsigned pos = 0;
        for (unsigned k = 0; k < nvars_; ++k) {
            if (k == var) continue;
            if (m[k] > 0) t *= rat_pow(other_args[pos], m[k]);
            ++pos;
        }
        c[m[var]] += t;
    }
    return UniPoly(std::move(c));
}

std::vector<Rat> MultiPoly::coefficient_vector() const {
    std::vector<Rat> v;
    v.reserve(terms_.size());
    for (const auto& [m, c] : terms_) v.push_back(c);
    return v;
}

MultiPoly MultiPoly::divexact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("divexact: zero divisor");
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("divexact: nvars mismatch");
    MultiPoly rem = a, quot(a.nvars_);
    const auto& blead = *b.terms_.rbegin();  // largest key in lex order
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        Monomial qm(a.nvars_);
        for (unsigned i = 0; i < a.nvars_; ++i) {
            if (rlead.first[i] < blead.first[i])
                throw std::domain_error("divexact: not divisible");
            qm[i] = rlead.first[i] - blead.first[i];
        }
        Rat qc = rlead.second / blead.second;
        MultiPoly t(a.nvars_);
        t.terms_[qm] = qc;
        quot = quot + t;
        rem = rem - t * b;
    }
    return quot;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    // deterministic order: descending lex on exponent vectors
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat v = it->second;
        if (!first) {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        } else {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        }
        first = false;
        bool any_var = false;
        for (unsigned e : it->first)
            if (e) any_var = true;
        if (!any_var || v != 1) {
            os << rat_str(v);
            if (any_var) os << "*";
        }
        bool printed = false;
        for (unsigned i = 0; i < nvars_; ++i) {
            unsigned e = it->first[i];
            if (e == 0) continue;
            if (printed) os << "*";
            printed = true;
            os << "x" << (i + 1);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace smallzeros
