#include "a1deg/fields.hpp"

#include <algorithm>
#include <sstream>

namespace a1deg {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::NotIsolatedZero: return "NotIsolatedZero";
        case ErrorCode::ZeroIdealInput: return "ZeroIdealInput";
        case ErrorCode::NonRationalPoint: return "NonRationalPoint";
        case ErrorCode::NonRationalImage: return "NonRationalImage";
        case ErrorCode::NotEtale: return "NotEtale";
        case ErrorCode::DegenerateCriticalPoint: return "DegenerateCriticalPoint";
        case ErrorCode::Char2Unsupported: return "Char2Unsupported";
        case ErrorCode::RankParityMismatch: return "RankParityMismatch";
        case ErrorCode::UnresolvedFiber: return "UnresolvedFiber";
        case ErrorCode::FactorizationUnsupported: return "FactorizationUnsupported";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::StepLimitExceeded: return "StepLimitExceeded";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::DegenerateForm: return "DegenerateForm";
        case ErrorCode::InternalContradiction: return "InternalContradiction";
    }
    return "UnknownError";
}

ErrorClass error_class(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
            return ErrorClass::Parse;
        case ErrorCode::StepLimitExceeded:
        case ErrorCode::CapExceeded:
        case ErrorCode::DegenerateForm:
        case ErrorCode::InternalContradiction:
            return ErrorClass::Internal;
        default:
            return ErrorClass::Math;
    }
}

// --- primality and factoring -------------------------------------------------

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (n == q) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
    }
    // BPSW + Miller-Rabin; no composite below 2^64 passes, far beyond the
    // prime sizes this library meets.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_brent(const Int& n) {
    // n odd composite, not a prime power of interest; returns a nontrivial factor
    for (long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        auto step = [&](const Int& v) { return Int((v * v + c) % n); };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Int diff = x - y;
            if (sgn(diff) == 0) break;  // cycle without factor, retry with new c
            mpz_gcd(d.get_mpz_t(), Int(abs(diff)).get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        factor_rec(r, out);
        factor_rec(r, out);
        return;
    }
    Int d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Int, int> factor_integer(Int n) {
    if (n <= 0) raise(ErrorCode::PreconditionViolated, "factor_integer needs n > 0");
    std::map<Int, int> out;
    for (long q : {2L, 3L, 5L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            out[Int(q)] += 1;
            n /= q;
        }
    }
    // wheel over 6k +- 1
    for (long q = 7; q <= 10000 && n > 1; q += (q % 6 == 1) ? 4 : 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            out[Int(q)] += 1;
            n /= q;
        }
    }
    if (n > 1) factor_rec(n, out);
    return out;
}

Int squarefree_part(const Int& n) {
    if (sgn(n) == 0) raise(ErrorCode::ZeroElement, "squarefree part of zero");
    Int res = sgn(n) < 0 ? -1 : 1;
    for (const auto& [p, e] : factor_integer(abs(n)))
        if (e % 2) res *= p;
    return res;
}

long padic_valuation(const Int& n, const Int& p) {
    if (sgn(n) == 0) raise(ErrorCode::ZeroElement, "valuation of zero");
    long v = 0;
    Int m = abs(n);
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

long padic_valuation(const Rat& q, const Int& p) {
    return padic_valuation(Int(q.get_num()), p) - padic_valuation(Int(q.get_den()), p);
}

Int unit_residue_mod(const Rat& u, const Int& p) {
    Int num = u.get_num(), den = u.get_den();
    Int dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        raise(ErrorCode::PreconditionViolated, "denominator not invertible mod p");
    Int r = (num % p) * dinv % p;
    if (sgn(r) < 0) r += p;
    return r;
}

int legendre_symbol(const Int& a, const Int& p) {
    if (p <= 2 || mpz_even_p(p.get_mpz_t()))
        raise(ErrorCode::PreconditionViolated, "legendre_symbol needs an odd prime");
    Int r = a % p;
    if (sgn(r) < 0) r += p;
    if (sgn(r) == 0) return 0;
    Int e = (p - 1) / 2, m;
    mpz_powm(m.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return m == 1 ? 1 : -1;
}

Int smallest_nonresidue(const Int& p) {
    for (Int n = 2;; ++n)
        if (legendre_symbol(n, p) == -1) return n;
}

// --- Hilbert symbol -----------------------------------------------------------

namespace {
int eps4(const Int& u) { return mpz_tstbit(Int((u - 1) / 2).get_mpz_t(), 0) ? -1 : 1; }
int omega8(const Int& u) { return mpz_tstbit(Int((u * u - 1) / 8).get_mpz_t(), 0) ? -1 : 1; }
}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& place) {
    if (sgn(a) == 0 || sgn(b) == 0) raise(ErrorCode::ZeroElement, "hilbert symbol of zero");
    if (place.infinite) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
    const Int& p = place.p;
    long alpha = padic_valuation(a, p);
    long beta = padic_valuation(b, p);
    Rat u = a, v = b;
    for (long i = 0; i < alpha; ++i) u /= p;
    for (long i = alpha; i < 0; ++i) u *= p;
    for (long i = 0; i < beta; ++i) v /= p;
    for (long i = beta; i < 0; ++i) v *= p;
    if (p == 2) {
        // units mod 8 decide; (a,b)_2 = (-1)^(eps(u)eps(v)) * omega(u)^beta * omega(v)^alpha
        Int ur = unit_residue_mod(u, 8), vr = unit_residue_mod(v, 8);
        int s = 1;
        if (eps4(ur) == -1 && eps4(vr) == -1) s = -s;
        if ((beta % 2) && omega8(ur) == -1) s = -s;
        if ((alpha % 2) && omega8(vr) == -1) s = -s;
        return s;
    }
    Int ur = unit_residue_mod(u, p), vr = unit_residue_mod(v, p);
    int s = 1;
    if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2 == 1) s = -s;
    if (beta % 2) s *= legendre_symbol(ur, p);
    if (alpha % 2) s *= legendre_symbol(vr, p);
    return s;
}

// --- FieldContext -------------------------------------------------------------

FieldContext FieldContext::prime_field(long p) {
    if (!is_prime(Int(p))) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    return {FieldKind::PrimeField, p};
}

FieldContext FieldContext::padic(long p) {
    if (!is_prime(Int(p))) raise(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    return {FieldKind::PadicClassifier, p};
}

FieldContext FieldContext::parse(const std::string& spec) {
    if (spec == "QQ") return rationals();
    if (spec == "RR") return reals();
    auto with_prime = [&](const std::string& prefix) -> std::optional<long> {
        if (spec.rfind(prefix, 0) != 0) return std::nullopt;
        try {
            size_t pos = 0;
            long p = std::stol(spec.substr(prefix.size()), &pos);
            if (pos != spec.size() - prefix.size()) return std::nullopt;
            return p;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    };
    if (auto p = with_prime("Fp:")) return prime_field(*p);
    if (auto p = with_prime("Qp:")) return padic(*p);
    raise(ErrorCode::ParseError, "bad field spec '" + spec + "' (want QQ, RR, Fp:<p>, Qp:<p>)");
}

std::string FieldContext::name() const {
    switch (kind) {
        case FieldKind::Rationals: return "QQ";
        case FieldKind::RealClassifier: return "RR";
        case FieldKind::PrimeField: return "Fp:" + std::to_string(p);
        case FieldKind::PadicClassifier: return "Qp:" + std::to_string(p);
    }
    return "?";
}

// --- FieldElement -------------------------------------------------------------

FieldElement::FieldElement(const FieldContext& ctx, Rat value) : ctx_(ctx), v_(std::move(value)) {
    reduce_();
}

FieldElement FieldElement::rational(const FieldContext& ctx, const Int& num, const Int& den) {
    if (sgn(den) == 0) raise(ErrorCode::DivisionByZero, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return {ctx, r};
}

void FieldElement::reduce_() {
    if (!ctx_.is_prime_field()) return;
    const Int p(ctx_.p);
    Int den = v_.get_den();
    if (den != 1) {
        Int dinv;
        if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
            raise(ErrorCode::DivisionByZero, "denominator divisible by p in F_p");
        v_ = Rat(Int(v_.get_num()) * dinv);
    }
    Int n = v_.get_num() % p;
    if (sgn(n) < 0) n += p;
    v_ = Rat(n);
}

void FieldElement::check_same_(const FieldElement& o) const {
    if (ctx_ != o.ctx_)
        raise(ErrorCode::ContextMismatch,
              "field contexts differ: " + ctx_.name() + " vs " + o.ctx_.name());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same_(o);
    return {ctx_, v_ + o.v_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same_(o);
    return {ctx_, v_ - o.v_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same_(o);
    return {ctx_, v_ * o.v_};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same_(o);
    return *this * o.inverse();
}

FieldElement FieldElement::operator-() const { return {ctx_, -v_}; }

FieldElement FieldElement::inverse() const {
    if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
    if (ctx_.is_prime_field()) {
        Int inv;
        mpz_invert(inv.get_mpz_t(), Int(v_.get_num()).get_mpz_t(), Int(ctx_.p).get_mpz_t());
        if (sgn(inv) < 0) inv += ctx_.p;
        return {ctx_, Rat(inv)};
    }
    return {ctx_, Rat(1) / v_};
}

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement r = one(ctx_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const { return ctx_ == o.ctx_ && v_ == o.v_; }

std::string FieldElement::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

// --- square classes -----------------------------------------------------------

SquareClass SquareClass::operator*(const SquareClass& o) const {
    if (ctx_ != o.ctx_) raise(ErrorCode::ContextMismatch, "square classes over different fields");
    return square_class_of_rat(ctx_, rep_ * o.rep_);
}

std::string SquareClass::str() const {
    std::ostringstream os;
    os << rep_;
    return os.str();
}

SquareClass square_class_of_rat(const FieldContext& ctx, const Rat& a) {
    if (sgn(a) == 0) raise(ErrorCode::ZeroElement, "square class of zero");
    switch (ctx.kind) {
        case FieldKind::Rationals: {
            // a = num/den ~ num*den mod squares
            Int m = Int(a.get_num()) * Int(a.get_den());
            return {ctx, Rat(squarefree_part(m))};
        }
        case FieldKind::RealClassifier:
            return {ctx, Rat(sgn(a) < 0 ? -1 : 1)};
        case FieldKind::PrimeField: {
            const Int p(ctx.p);
            if (p == 2) return {ctx, Rat(1)};  // every nonzero element is a square
            Int r = unit_residue_mod(a, p);
            return {ctx, legendre_symbol(r, p) == 1 ? Rat(1) : Rat(smallest_nonresidue(p))};
        }
        case FieldKind::PadicClassifier: {
            const Int p(ctx.p);
            long val = padic_valuation(a, p);
            Rat u = a;
            for (long i = 0; i < val; ++i) u /= p;
            for (long i = val; i < 0; ++i) u *= p;
            if (p == 2) {
                Int r = unit_residue_mod(u, 8);
                Rat unit_rep = r == 1 ? Rat(1) : r == 3 ? Rat(-5) : r == 5 ? Rat(5) : Rat(-1);
                return {ctx, (val % 2) ? unit_rep * 2 : unit_rep};
            }
            Rat unit_rep = legendre_symbol(unit_residue_mod(u, p), p) == 1
                               ? Rat(1)
                               : Rat(smallest_nonresidue(p));
            return {ctx, (val % 2) ? unit_rep * Rat(p) : unit_rep};
        }
    }
    raise(ErrorCode::InternalContradiction, "unreachable field kind");
}

SquareClass reduce_square_class(const FieldElement& a) {
    if (a.is_zero()) raise(ErrorCode::ZeroElement, "square class of zero");
    return square_class_of_rat(a.context(), a.value());
}

SquareClass minus_one_class(const FieldContext& ctx) {
    return square_class_of_rat(ctx, Rat(-1));
}

}  // namespace a1deg
