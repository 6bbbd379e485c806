#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "a1deg/unipoly.hpp"

namespace a1deg {

// Exponent vector with cached total degree.
class Monomial {
public:
    explicit Monomial(size_t nvars) : e_(nvars, 0u) {}
    explicit Monomial(std::vector<unsigned> exps);

    size_t nvars() const { return e_.size(); }
    unsigned deg() const { return deg_; }
    unsigned operator[](size_t i) const { return e_[i]; }
    bool is_one() const { return deg_ == 0; }
    const std::vector<unsigned>& exponents() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;  // this | o
    Monomial quotient(const Monomial& o) const;  // this / o (requires o | this)
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

    // structural order for map keys, independent of the semantic monomial order
    struct LexLess {
        bool operator()(const Monomial& a, const Monomial& b) const { return a.e_ < b.e_; }
    };

private:
    std::vector<unsigned> e_;
    unsigned deg_ = 0;
};

// GlobalDegRevLex is the usual well-order with 1 smallest. LocalDegRevLex
// orders by total degree ascending with 1 largest (leading terms have
// minimal degree), ties broken reverse-lexicographically; this is the order
// all standard-basis computations use.
enum class MonomialOrder { LocalDegRevLex, GlobalDegRevLex };

bool mono_less(const Monomial& a, const Monomial& b, MonomialOrder order);

struct PolyRing {
    FieldContext field;
    std::vector<std::string> vars;

    size_t nvars() const { return vars.size(); }
    int var_index(const std::string& name) const;
    bool operator==(const PolyRing& o) const { return field == o.field && vars == o.vars; }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(const FieldContext& field, std::vector<std::string> vars);

// Sparse multivariate polynomial in canonical form (no zero coefficients).
class Polynomial {
public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const FieldElement& c);
    static Polynomial variable(RingPtr ring, size_t i);
    static Polynomial term(RingPtr ring, Monomial m, const FieldElement& c);

    const RingPtr& ring() const { return ring_; }
    const FieldContext& context() const { return ring_->field; }
    size_t nvars() const { return ring_->nvars(); }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, FieldElement, Monomial::LexLess>& terms() const { return terms_; }
    FieldElement coeff(const Monomial& m) const;
    FieldElement constant_term() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial pow(unsigned e) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // largest term w.r.t. the order; polynomial must be nonzero
    std::pair<Monomial, FieldElement> leading(MonomialOrder order) const;
    unsigned total_degree() const;  // max degree of a term; 0 for the zero polynomial
    // total_degree - deg(leading monomial); the Mora reduction measure
    unsigned ecart(MonomialOrder order) const;

    Polynomial derivative(size_t var) const;
    FieldElement evaluate(std::span<const FieldElement> point) const;
    ExtElem evaluate_ext(const ExtPtr& ext, std::span<const ExtElem> point) const;
    // f(x + a): moves the point a to the origin
    Polynomial translate(std::span<const FieldElement> a) const;
    // substitute a value for one variable (result stays in the same ring)
    Polynomial substitute(size_t var, const FieldElement& value) const;
    // variables with a nonzero exponent somewhere
    std::vector<size_t> support_vars() const;
    UniPoly to_unipoly(size_t var) const;  // requires support ⊆ {var}

    std::string str() const;

private:
    RingPtr ring_;
    std::map<Monomial, FieldElement, Monomial::LexLess> terms_;

    void add_term_(const Monomial& m, const FieldElement& c);
    void check_same_(const Polynomial& o) const;
};

std::vector<Polynomial> gradient(const Polynomial& f);
// Cofactor expansion for n <= 4, fraction-free Bareiss elimination beyond.
Polynomial jacobian_det(std::span<const Polynomial> f);
Polynomial matrix_det(const std::vector<std::vector<Polynomial>>& m);
// Telescoping splitting a with f_i(x) - f_i(0) = sum_j a[i][j] x_j; the
// reversed flag telescopes over the variables in the opposite order.
std::vector<std::vector<Polynomial>> linear_splitting(std::span<const Polynomial> f,
                                                      bool reversed = false);

// Expression grammar: integers, rationals p/q, identifiers, + - * ^,
// parentheses, unary minus; ^ binds tighter than *, * than +-.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);
FieldElement parse_field_element(const FieldContext& ctx, const std::string& text);
UniPoly parse_unipoly(const FieldContext& ctx, const std::string& var, const std::string& text);

}  // namespace a1deg
