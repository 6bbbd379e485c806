#include "a1deg/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace a1deg {

Monomial::Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {
    deg_ = std::accumulate(e_.begin(), e_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<unsigned> r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    std::vector<unsigned> r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] - o.e_[i];
    return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<unsigned> r(a.e_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (a.deg() != b.deg()) {
        bool deg_less = a.deg() < b.deg();
        // local order reverses the degree comparison: smaller degree is larger
        return order == MonomialOrder::GlobalDegRevLex ? deg_less : !deg_less;
    }
    // revlex tiebreak: at the last differing exponent, the smaller one wins
    for (size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

RingPtr make_ring(const FieldContext& field, std::vector<std::string> vars) {
    return std::make_shared<PolyRing>(PolyRing{field, std::move(vars)});
}

// --- Polynomial -----------------------------------------------------------------

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
    Polynomial p(std::move(ring));
    p.add_term_(Monomial(p.nvars()), c);
    return p;
}

Polynomial Polynomial::variable(RingPtr ring, size_t i) {
    Polynomial p(ring);
    std::vector<unsigned> e(ring->nvars(), 0u);
    e.at(i) = 1;
    p.add_term_(Monomial(std::move(e)), FieldElement::one(ring->field));
    return p;
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const FieldElement& c) {
    Polynomial p(std::move(ring));
    if (m.nvars() != p.nvars())
        raise(ErrorCode::ContextMismatch, "monomial arity does not match ring");
    p.add_term_(m, c);
    return p;
}

void Polynomial::add_term_(const Monomial& m, const FieldElement& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        FieldElement s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

void Polynomial::check_same_(const Polynomial& o) const {
    if (!(*ring_ == *o.ring_))
        raise(ErrorCode::ContextMismatch, "polynomials over different rings");
}

FieldElement Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement::zero(context()) : it->second;
}

FieldElement Polynomial::constant_term() const { return coeff(Monomial(nvars())); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term_(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_(o);
    Polynomial r(ring_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term_(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.add_term_(m, a * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(ring_, FieldElement::one(context()));
    Polynomial b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return *ring_ == *o.ring_ && terms_ == o.terms_;
}

std::pair<Monomial, FieldElement> Polynomial::leading(MonomialOrder order) const {
    if (is_zero()) raise(ErrorCode::ZeroElement, "leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (mono_less(best->first, it->first, order)) best = it;
    return {best->first, best->second};
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
    return d;
}

unsigned Polynomial::ecart(MonomialOrder order) const {
    return total_degree() - leading(order).first.deg();
}

Polynomial Polynomial::derivative(size_t var) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m[var];
        if (e == 0) continue;
        std::vector<unsigned> ex = m.exponents();
        ex[var] -= 1;
        r.add_term_(Monomial(std::move(ex)), c * FieldElement::integer(context(), e));
    }
    return r;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
    if (point.size() != nvars())
        raise(ErrorCode::ContextMismatch, "point arity does not match ring");
    FieldElement acc = FieldElement::zero(context());
    for (const auto& [m, c] : terms_) {
        FieldElement t = c;
        for (size_t i = 0; i < nvars(); ++i)
            if (m[i]) t = t * point[i].pow(m[i]);
        acc = acc + t;
    }
    return acc;
}

ExtElem Polynomial::evaluate_ext(const ExtPtr& ext, std::span<const ExtElem> point) const {
    if (point.size() != nvars())
        raise(ErrorCode::ContextMismatch, "point arity does not match ring");
    ExtElem acc = ExtElem::from_base(ext, FieldElement::zero(context()));
    for (const auto& [m, c] : terms_) {
        ExtElem t = ExtElem::from_base(ext, c);
        for (size_t i = 0; i < nvars(); ++i)
            for (unsigned k = 0; k < m[i]; ++k) t = t * point[i];
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::translate(std::span<const FieldElement> a) const {
    if (a.size() != nvars()) raise(ErrorCode::ContextMismatch, "shift arity does not match ring");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        Polynomial t = constant(ring_, c);
        for (size_t i = 0; i < nvars(); ++i) {
            if (m[i] == 0) continue;
            Polynomial base = variable(ring_, i) + constant(ring_, a[i]);
            t = t * base.pow(m[i]);
        }
        r = r + t;
    }
    return r;
}

Polynomial Polynomial::substitute(size_t var, const FieldElement& value) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        std::vector<unsigned> ex = m.exponents();
        unsigned e = ex[var];
        ex[var] = 0;
        r.add_term_(Monomial(std::move(ex)), c * value.pow(e));
    }
    return r;
}

std::vector<size_t> Polynomial::support_vars() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < nvars(); ++i) {
        for (const auto& [m, c] : terms_)
            if (m[i]) {
                out.push_back(i);
                break;
            }
    }
    return out;
}

UniPoly Polynomial::to_unipoly(size_t var) const {
    std::vector<FieldElement> coeffs;
    for (const auto& [m, c] : terms_) {
        for (size_t i = 0; i < nvars(); ++i)
            if (i != var && m[i])
                raise(ErrorCode::PreconditionViolated, "polynomial is not univariate in " +
                                                           ring_->vars[var]);
        size_t e = m[var];
        if (coeffs.size() <= e) coeffs.resize(e + 1, FieldElement::zero(context()));
        coeffs[e] = c;
    }
    return UniPoly(context(), std::move(coeffs));
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    // print largest global-degrevlex terms first
    std::vector<const std::pair<const Monomial, FieldElement>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
        return mono_less(b->first, a->first, MonomialOrder::GlobalDegRevLex);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ts) {
        const auto& [m, c] = *t;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string mag = neg ? cs.substr(1) : cs;
        bool printed_coeff = false;
        if (m.is_one() || mag != "1") {
            os << mag;
            printed_coeff = true;
        }
        for (size_t i = 0; i < nvars(); ++i) {
            if (m[i] == 0) continue;
            if (printed_coeff) os << "*";
            os << ring_->vars[i];
            if (m[i] > 1) os << "^" << m[i];
            printed_coeff = true;
        }
    }
    return os.str();
}

// --- calculus helpers -------------------------------------------------------------

std::vector<Polynomial> gradient(const Polynomial& f) {
    std::vector<Polynomial> g;
    g.reserve(f.nvars());
    for (size_t i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i));
    return g;
}

namespace {

Polynomial det_cofactor(const std::vector<std::vector<Polynomial>>& m, std::vector<size_t> cols,
                        size_t row) {
    const RingPtr& ring = m[0][0].ring();
    if (cols.size() == 1) return m[row][cols[0]];
    Polynomial acc(ring);
    for (size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& pivot = m[row][cols[k]];
        if (pivot.is_zero()) continue;
        std::vector<size_t> rest;
        rest.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Polynomial minor = det_cofactor(m, std::move(rest), row + 1);
        Polynomial contrib = pivot * minor;
        acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

// exact division, valid when q | p in the polynomial ring
Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
    const RingPtr& ring = p.ring();
    Polynomial rem = p, quo(ring);
    auto [qm, qc] = q.leading(MonomialOrder::GlobalDegRevLex);
    while (!rem.is_zero()) {
        auto [rm, rc] = rem.leading(MonomialOrder::GlobalDegRevLex);
        if (!qm.divides(rm))
            raise(ErrorCode::InternalContradiction, "inexact polynomial division");
        Polynomial t = Polynomial::term(ring, rm.quotient(qm), rc / qc);
        quo = quo + t;
        rem = rem - t * q;
    }
    return quo;
}

Polynomial det_bareiss(std::vector<std::vector<Polynomial>> m) {
    const size_t n = m.size();
    const RingPtr& ring = m[0][0].ring();
    Polynomial prev = Polynomial::constant(ring, FieldElement::one(ring->field));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial::zero(ring);  // singular column
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(num, prev);
            }
            m[i][k] = Polynomial::zero(ring);
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace

Polynomial matrix_det(const std::vector<std::vector<Polynomial>>& m) {
    const size_t n = m.size();
    if (n == 0) raise(ErrorCode::PreconditionViolated, "determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) raise(ErrorCode::PreconditionViolated, "matrix is not square");
    if (n <= 4) {
        std::vector<size_t> cols(n);
        std::iota(cols.begin(), cols.end(), 0u);
        return det_cofactor(m, std::move(cols), 0);
    }
    return det_bareiss(m);
}

Polynomial jacobian_det(std::span<const Polynomial> f) {
    if (f.empty()) raise(ErrorCode::PreconditionViolated, "empty system");
    const size_t n = f.size();
    if (f[0].nvars() != n)
        raise(ErrorCode::PreconditionViolated, "system is not square");
    std::vector<std::vector<Polynomial>> jac;
    jac.reserve(n);
    for (const auto& fi : f) {
        std::vector<Polynomial> row;
        row.reserve(n);
        for (size_t j = 0; j < n; ++j) row.push_back(fi.derivative(j));
        jac.push_back(std::move(row));
    }
    return matrix_det(jac);
}

std::vector<std::vector<Polynomial>> linear_splitting(std::span<const Polynomial> f,
                                                      bool reversed) {
    if (f.empty()) raise(ErrorCode::PreconditionViolated, "empty system");
    const RingPtr& ring = f[0].ring();
    const size_t n = ring->nvars();
    const FieldElement zero = FieldElement::zero(ring->field);

    // truncate(f, k): keep the first k variables in telescoping order, zero the rest
    auto truncate = [&](const Polynomial& p, size_t k) {
        Polynomial r = p;
        for (size_t pos = k; pos < n; ++pos) {
            size_t var = reversed ? n - 1 - pos : pos;
            r = r.substitute(var, zero);
        }
        return r;
    };
    auto divide_by_var = [&](const Polynomial& p, size_t var) {
        Polynomial r(ring);
        for (const auto& [m, c] : p.terms()) {
            if (m[var] == 0)
                raise(ErrorCode::InternalContradiction, "telescoping difference not divisible");
            std::vector<unsigned> ex = m.exponents();
            ex[var] -= 1;
            r = r + Polynomial::term(ring, Monomial(std::move(ex)), c);
        }
        return r;
    };

    std::vector<std::vector<Polynomial>> a(f.size(),
                                           std::vector<Polynomial>(n, Polynomial::zero(ring)));
    for (size_t i = 0; i < f.size(); ++i) {
        for (size_t pos = 0; pos < n; ++pos) {
            size_t var = reversed ? n - 1 - pos : pos;
            Polynomial diff = truncate(f[i], pos + 1) - truncate(f[i], pos);
            if (!diff.is_zero()) a[i][var] = divide_by_var(diff, var);
        }
    }
    return a;
}

}  // namespace a1deg
