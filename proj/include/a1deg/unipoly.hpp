#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "a1deg/fields.hpp"

namespace a1deg {

// Dense univariate polynomial over a FieldContext. Coefficients ascending,
// no trailing zeros.
class UniPoly {
public:
    explicit UniPoly(const FieldContext& ctx) : ctx_(ctx) {}
    UniPoly(const FieldContext& ctx, std::vector<FieldElement> coeffs);

    static UniPoly constant(const FieldContext& ctx, const FieldElement& c);
    static UniPoly variable(const FieldContext& ctx);
    // c0 + c1 x + ... from integers
    static UniPoly from_ints(const FieldContext& ctx, const std::vector<long>& coeffs);

    const FieldContext& context() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const FieldElement& lead() const;
    FieldElement coeff(int i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly scaled(const FieldElement& c) const;
    UniPoly monic() const;
    bool operator==(const UniPoly& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }

    // Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;
    UniPoly operator%(const UniPoly& d) const { return divrem(d).second; }
    UniPoly operator/(const UniPoly& d) const { return divrem(d).first; }
    UniPoly derivative() const;
    FieldElement eval(const FieldElement& x) const;

    std::string str(const std::string& var = "t") const;

private:
    FieldContext ctx_;
    std::vector<FieldElement> c_;
    void trim_();
    void check_same_(const UniPoly& o) const;
};

UniPoly unipoly_gcd(UniPoly a, UniPoly b);  // monic gcd

// Simple field extension k[t]/(m(t)), m monic irreducible.
// Irreducibility is verified at construction: over Q for deg <= 4
// (rational-root test plus quadratic-split search via the resolvent cubic),
// over F_p by distinct-degree gcds. Higher degree over Q needs the
// promise flag.
struct SimpleExtension {
    FieldContext base;
    std::string var;
    UniPoly modulus;

    int degree() const { return modulus.degree(); }
};

using ExtPtr = std::shared_ptr<const SimpleExtension>;

ExtPtr make_extension(const FieldContext& base, const std::string& var, UniPoly modulus,
                      bool promise_irreducible = false);

// Residue of degree < deg(modulus), on the power basis 1, t, ..., t^{d-1}.
class ExtElem {
public:
    ExtElem(ExtPtr ext, std::vector<FieldElement> coords);
    static ExtElem from_base(ExtPtr ext, const FieldElement& c);
    static ExtElem generator(ExtPtr ext);
    static ExtElem from_unipoly(ExtPtr ext, const UniPoly& p);  // reduces mod m

    const ExtPtr& extension() const { return ext_; }
    const std::vector<FieldElement>& coords() const { return c_; }
    bool is_zero() const;
    // true when the element lies in the base field
    bool is_base() const;
    FieldElement base_value() const;
    UniPoly as_unipoly() const;

    ExtElem operator+(const ExtElem& o) const;
    ExtElem operator-(const ExtElem& o) const;
    ExtElem operator*(const ExtElem& o) const;
    ExtElem operator-() const;
    ExtElem scaled(const FieldElement& c) const;
    bool operator==(const ExtElem& o) const;

    std::string str() const;

private:
    ExtPtr ext_;
    std::vector<FieldElement> c_;
    void check_same_(const ExtElem& o) const;
};

// Trace of the multiplication-by-e endomorphism on the power basis.
FieldElement ext_trace(const ExtElem& e);

// Irreducibility of a monic polynomial; see SimpleExtension notes for scope.
bool is_irreducible(const UniPoly& monic_poly);

// Monic irreducible factors with multiplicities, smallest degree first.
// Over Q, factors of degree >= 5 are out of reach and raise
// FactorizationUnsupported; over F_p a bounded brute-force search is used.
std::vector<std::pair<UniPoly, int>> factor_unipoly(const UniPoly& f);

}  // namespace a1deg
