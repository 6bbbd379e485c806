#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "a1deg/errors.hpp"

namespace a1deg {

using Int = mpz_class;
using Rat = mpq_class;

// Exact base fields. RealClassifier and PadicClassifier carry rational
// elements; they only change how square classes and form equality are
// decided. No real or p-adic numbers are ever constructed.
enum class FieldKind { Rationals, PrimeField, RealClassifier, PadicClassifier };

struct FieldContext {
    FieldKind kind = FieldKind::Rationals;
    long p = 0;  // prime, for PrimeField and PadicClassifier

    static FieldContext rationals() { return {FieldKind::Rationals, 0}; }
    static FieldContext reals() { return {FieldKind::RealClassifier, 0}; }
    static FieldContext prime_field(long p);
    static FieldContext padic(long p);
    // "QQ", "RR", "Fp:<p>", "Qp:<p>"
    static FieldContext parse(const std::string& spec);

    bool operator==(const FieldContext&) const = default;

    bool is_prime_field() const { return kind == FieldKind::PrimeField; }
    // rank-only GW classification regime
    bool char2() const { return kind == FieldKind::PrimeField && p == 2; }
    // element arithmetic is plain rational arithmetic
    bool rational_arithmetic() const { return kind != FieldKind::PrimeField; }
    long characteristic() const { return is_prime_field() ? p : 0; }
    std::string name() const;
};

class FieldElement {
public:
    FieldElement() = default;  // zero over QQ
    FieldElement(const FieldContext& ctx, Rat value);

    static FieldElement zero(const FieldContext& ctx) { return {ctx, Rat(0)}; }
    static FieldElement one(const FieldContext& ctx) { return {ctx, Rat(1)}; }
    static FieldElement integer(const FieldContext& ctx, long n) { return {ctx, Rat(n)}; }
    static FieldElement integer(const FieldContext& ctx, const Int& n) { return {ctx, Rat(n)}; }
    static FieldElement rational(const FieldContext& ctx, const Int& num, const Int& den);

    const FieldContext& context() const { return ctx_; }
    const Rat& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }  // meaningful for rational-arithmetic contexts

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long e) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldContext ctx_{};
    Rat v_{0};

    void reduce_();
    void check_same_(const FieldElement& o) const;
};

// --- integer number theory -------------------------------------------------

// Trial division for small n, Miller-Rabin beyond.
bool is_prime(const Int& n);
// Prime factorization of n > 0 (trial division + Pollard-Brent rho).
std::map<Int, int> factor_integer(Int n);
// Signed squarefree part: n = squarefree_part(n) * square.
Int squarefree_part(const Int& n);
long padic_valuation(const Int& n, const Int& p);
long padic_valuation(const Rat& q, const Int& p);
// Residue mod p of a rational with v_p = 0.
Int unit_residue_mod(const Rat& u, const Int& p);

// Euler criterion; a may be any integer, p an odd prime.
int legendre_symbol(const Int& a, const Int& p);
// Smallest positive non-residue mod an odd prime.
Int smallest_nonresidue(const Int& p);

// A place of Q: the real place or a finite prime.
struct Place {
    bool infinite = false;
    Int p{0};

    static Place at_infinity() { return {true, Int(0)}; }
    static Place prime(Int q) { return {false, std::move(q)}; }
    bool operator==(const Place&) const = default;
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return !infinite;  // finite places first
        return p < o.p;
    }
    std::string str() const { return infinite ? "inf" : p.get_str(); }
};

// Hilbert symbol (a,b)_place for nonzero rationals, by the standard local
// formulas (epsilon/omega at 2, Legendre symbols at odd p, signs at infinity).
int hilbert_symbol(const Rat& a, const Rat& b, const Place& place);

// --- square classes ---------------------------------------------------------

// Canonical representatives of k*/(k*)^2:
//   Rationals       sign * squarefree positive integer
//   RealClassifier  +1 or -1
//   PrimeField      1 or the smallest non-residue (always 1 for p = 2)
//   PadicClassifier {1, u, p, up} for odd p (u the smallest non-residue),
//                   {+-1, +-2, +-5, +-10} for p = 2
class SquareClass {
public:
    SquareClass(const FieldContext& ctx, Rat canonical_rep)
        : ctx_(ctx), rep_(std::move(canonical_rep)) {}

    const FieldContext& context() const { return ctx_; }
    const Rat& representative() const { return rep_; }
    bool is_one() const { return rep_ == 1; }
    bool operator==(const SquareClass& o) const { return ctx_ == o.ctx_ && rep_ == o.rep_; }
    bool operator!=(const SquareClass& o) const { return !(*this == o); }
    SquareClass operator*(const SquareClass& o) const;
    std::string str() const;

private:
    FieldContext ctx_;
    Rat rep_;
};

SquareClass reduce_square_class(const FieldElement& a);
SquareClass square_class_of_rat(const FieldContext& ctx, const Rat& a);
SquareClass minus_one_class(const FieldContext& ctx);

}  // namespace a1deg
