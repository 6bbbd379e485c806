#include "a1deg/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace a1deg {

UniPoly::UniPoly(const FieldContext& ctx, std::vector<FieldElement> coeffs)
    : ctx_(ctx), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.context() != ctx_) raise(ErrorCode::ContextMismatch, "coefficient context");
    trim_();
}

UniPoly UniPoly::constant(const FieldContext& ctx, const FieldElement& c) {
    return UniPoly(ctx, std::vector<FieldElement>{c});
}

UniPoly UniPoly::variable(const FieldContext& ctx) {
    return UniPoly(ctx, {FieldElement::zero(ctx), FieldElement::one(ctx)});
}

UniPoly UniPoly::from_ints(const FieldContext& ctx, const std::vector<long>& coeffs) {
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.push_back(FieldElement::integer(ctx, v));
    return UniPoly(ctx, std::move(c));
}

void UniPoly::trim_() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void UniPoly::check_same_(const UniPoly& o) const {
    if (ctx_ != o.ctx_) raise(ErrorCode::ContextMismatch, "univariate polynomial contexts differ");
}

const FieldElement& UniPoly::lead() const {
    if (c_.empty()) raise(ErrorCode::ZeroElement, "leading coefficient of zero polynomial");
    return c_.back();
}

FieldElement UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElement::zero(ctx_);
    return c_[static_cast<size_t>(i)];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    check_same_(o);
    std::vector<FieldElement> r(std::max(c_.size(), o.c_.size()), FieldElement::zero(ctx_));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = r[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    check_same_(o);
    if (is_zero() || o.is_zero()) return UniPoly(ctx_);
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, FieldElement::zero(ctx_));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::scaled(const FieldElement& c) const {
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(a * c);
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) raise(ErrorCode::ZeroElement, "monic of zero polynomial");
    return scaled(lead().inverse());
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& d) const {
    check_same_(d);
    if (d.is_zero()) raise(ErrorCode::DivisionByZero, "division by zero polynomial");
    UniPoly q(ctx_), r = *this;
    FieldElement linv = d.lead().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        FieldElement c = r.lead() * linv;
        std::vector<FieldElement> t(static_cast<size_t>(k) + 1, FieldElement::zero(ctx_));
        t.back() = c;
        UniPoly term(ctx_, std::move(t));
        q = q + term;
        r = r - term * d;
    }
    return {q, r};
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(ctx_);
    std::vector<FieldElement> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.push_back(c_[i] * FieldElement::integer(ctx_, static_cast<long>(i)));
    return UniPoly(ctx_, std::move(r));
}

FieldElement UniPoly::eval(const FieldElement& x) const {
    FieldElement acc = FieldElement::zero(ctx_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        FieldElement c = coeff(i);
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string mag = neg ? cs.substr(1) : cs;
        if (i == 0 || mag != "1") os << mag;
        if (i > 0) {
            if (mag != "1") os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
}

namespace {

UniPoly powmod(UniPoly base, Int e, const UniPoly& mod) {
    UniPoly r = UniPoly::constant(mod.context(), FieldElement::one(mod.context()));
    base = base % mod;
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

// Rational square root when it exists.
std::optional<Rat> rat_sqrt(const Rat& z) {
    if (sgn(z) < 0) return std::nullopt;
    if (sgn(z) == 0) return Rat(0);
    Int num = z.get_num(), den = z.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : factor_integer(abs(n))) {
        size_t sz = divs.size();
        Int pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
        }
    }
    return divs;
}

// All rational roots of a polynomial over a rational-arithmetic context,
// by the rational root theorem on the primitive integer model.
std::vector<FieldElement> rational_roots_q(const UniPoly& f) {
    const FieldContext& ctx = f.context();
    std::vector<FieldElement> roots;
    UniPoly work = f;
    // clear denominators
    Int lcm_den = 1;
    for (const auto& c : work.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), Int(c.value().get_den()).get_mpz_t());
    std::vector<Int> ic;
    ic.reserve(work.coeffs().size());
    Int content = 0;
    for (const auto& c : work.coeffs()) {
        Int v = Int(c.value().get_num()) * (lcm_den / Int(c.value().get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ic.push_back(v);
    }
    if (content > 1)
        for (auto& v : ic) v /= content;
    // zero root
    size_t low = 0;
    while (low < ic.size() && sgn(ic[low]) == 0) ++low;
    if (low > 0) roots.insert(roots.end(), low, FieldElement::zero(ctx));
    if (low + 1 >= ic.size()) return roots;  // constant or pure power of x
    Int a0 = ic[low], ad = ic.back();
    for (const Int& pnum : divisors_of(a0)) {
        for (const Int& qden : divisors_of(ad)) {
            Int g;
            mpz_gcd(g.get_mpz_t(), pnum.get_mpz_t(), qden.get_mpz_t());
            if (g != 1) continue;
            for (int s : {1, -1}) {
                FieldElement cand = FieldElement::rational(ctx, s * pnum, qden);
                if (f.eval(cand).is_zero()) {
                    bool seen = false;
                    for (const auto& r : roots) seen = seen || r == cand;
                    if (!seen) roots.push_back(cand);
                }
            }
        }
    }
    return roots;
}

UniPoly linear_factor(const FieldContext& ctx, const FieldElement& root) {
    return UniPoly(ctx, {-root, FieldElement::one(ctx)});
}

// Monic quartic with no rational roots: look for a split into two monic
// quadratics via the resolvent cubic of the depressed form.
std::optional<std::pair<UniPoly, UniPoly>> quartic_split(const UniPoly& f) {
    const FieldContext& ctx = f.context();
    const FieldElement c3 = f.coeff(3), c2 = f.coeff(2), c1 = f.coeff(1), c0 = f.coeff(0);
    const FieldElement quarter = FieldElement::rational(ctx, 1, 4);
    // depress: x = y - c3/4 gives y^4 + P y^2 + Q y + R
    FieldElement s = c3 * quarter;
    FieldElement P = c2 - FieldElement::integer(ctx, 6) * s * s;
    FieldElement Q = c1 - FieldElement::integer(ctx, 2) * c2 * s +
                     FieldElement::integer(ctx, 8) * s * s * s;
    FieldElement R = c0 - c1 * s + c2 * s * s - FieldElement::integer(ctx, 3) * s * s * s * s;
    // resolvent: z^3 + 2P z^2 + (P^2 - 4R) z - Q^2, roots z = e^2
    UniPoly resolvent(ctx, {-(Q * Q), P * P - FieldElement::integer(ctx, 4) * R,
                            FieldElement::integer(ctx, 2) * P, FieldElement::one(ctx)});
    auto assemble = [&](const FieldElement& e, const FieldElement& fq,
                        const FieldElement& gq) -> std::pair<UniPoly, UniPoly> {
        // (y^2 + e y + fq)(y^2 - e y + gq), un-depressed by y = x + c3/4
        UniPoly y = UniPoly(ctx, {s, FieldElement::one(ctx)});
        UniPoly q1 = y * y + y.scaled(e) + UniPoly::constant(ctx, fq);
        UniPoly q2 = y * y - y.scaled(e) + UniPoly::constant(ctx, gq);
        return {q1, q2};
    };
    const FieldElement half = FieldElement::rational(ctx, 1, 2);
    for (const auto& z : rational_roots_q(resolvent)) {
        auto e2 = rat_sqrt(z.value());
        if (!e2) continue;
        FieldElement e(ctx, *e2);
        if (e.is_zero()) {
            if (!Q.is_zero()) continue;
            auto d = rat_sqrt((P * P - FieldElement::integer(ctx, 4) * R).value());
            if (!d) continue;
            FieldElement sq(ctx, *d);
            auto [q1, q2] = assemble(e, (P - sq) * half, (P + sq) * half);
            if (q1 * q2 == f) return {{q1, q2}};
            continue;
        }
        FieldElement fq = (P + z - Q / e) * half;
        FieldElement gq = (P + z + Q / e) * half;
        auto [q1, q2] = assemble(e, fq, gq);
        if (q1 * q2 == f) return {{q1, q2}};
    }
    return std::nullopt;
}

// Irreducible factors of a squarefree monic polynomial over Q (or a
// classifier context with rational arithmetic). Degree <= 4 beyond the
// rational roots; larger irrational parts are unsupported.
std::vector<UniPoly> factor_squarefree_q(const UniPoly& f) {
    const FieldContext& ctx = f.context();
    std::vector<UniPoly> out;
    UniPoly work = f;
    for (const auto& r : rational_roots_q(f)) {
        UniPoly lf = linear_factor(ctx, r);
        out.push_back(lf);
        work = work / lf;
    }
    if (work.degree() <= 0) return out;
    if (work.degree() <= 3) {  // no rational roots: quadratics and cubics are irreducible
        out.push_back(work);
        return out;
    }
    if (work.degree() == 4) {
        if (auto split = quartic_split(work)) {
            out.push_back(split->first);
            out.push_back(split->second);
        } else {
            out.push_back(work);
        }
        return out;
    }
    raise(ErrorCode::FactorizationUnsupported,
          "irrational factor of degree " + std::to_string(work.degree()) +
              " (only degree <= 4 supported over " + ctx.name() + ")");
}

// Bounded brute-force factorization over F_p by trial division with monic
// candidates of ascending degree.
std::vector<std::pair<UniPoly, int>> factor_fp(const UniPoly& f) {
    const FieldContext& ctx = f.context();
    const long p = ctx.p;
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly work = f.monic();
    for (long r = 0; r < p && work.degree() > 0; ++r) {
        UniPoly lf = linear_factor(ctx, FieldElement::integer(ctx, r));
        int mult = 0;
        while (work.degree() > 0) {
            auto [q, rem] = work.divrem(lf);
            if (!rem.is_zero()) break;
            work = q;
            ++mult;
        }
        if (mult) out.push_back({lf, mult});
    }
    for (int d = 2; 2 * d <= work.degree();) {
        double count = 1;
        for (int i = 0; i < d; ++i) count *= static_cast<double>(p);
        if (count > 2e5)
            raise(ErrorCode::FactorizationUnsupported,
                  "brute-force factor search too large over " + ctx.name());
        bool found = false;
        std::vector<long> digits(static_cast<size_t>(d), 0);
        while (true) {
            std::vector<FieldElement> cs;
            cs.reserve(static_cast<size_t>(d) + 1);
            for (long v : digits) cs.push_back(FieldElement::integer(ctx, v));
            cs.push_back(FieldElement::one(ctx));
            UniPoly cand(ctx, std::move(cs));
            int mult = 0;
            while (work.degree() >= d) {
                auto [q, rem] = work.divrem(cand);
                if (!rem.is_zero()) break;
                work = q;
                ++mult;
            }
            if (mult) {
                // smaller-degree factors were exhausted first, so cand is irreducible
                out.push_back({cand, mult});
                found = true;
                break;
            }
            size_t i = 0;
            while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
            if (i == digits.size()) break;
        }
        if (!found) ++d;
    }
    if (work.degree() > 0) out.push_back({work, 1});
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.degree() < b.first.degree();
    });
    return out;
}

}  // namespace

bool is_irreducible(const UniPoly& monic_poly) {
    const UniPoly& m = monic_poly;
    const FieldContext& ctx = m.context();
    if (m.degree() < 1) return false;
    if (!m.lead().is_one()) raise(ErrorCode::PreconditionViolated, "modulus must be monic");
    if (m.degree() == 1) return true;
    if (ctx.is_prime_field()) {
        // distinct-degree test: no irreducible factor of degree <= d/2
        UniPoly x = UniPoly::variable(ctx);
        UniPoly xq = x;
        for (int i = 1; 2 * i <= m.degree(); ++i) {
            xq = powmod(xq, Int(ctx.p), m);
            UniPoly g = unipoly_gcd(xq - x, m);
            if (g.degree() != 0) return false;
        }
        return true;
    }
    if (unipoly_gcd(m, m.derivative()).degree() > 0) return false;
    if (!rational_roots_q(m).empty()) return false;
    if (m.degree() <= 3) return true;
    if (m.degree() == 4) return !quartic_split(m).has_value();
    raise(ErrorCode::NotIrreducible,
          "cannot certify irreducibility of degree " + std::to_string(m.degree()) +
              " over " + ctx.name() + "; pass the promise flag if it is known irreducible");
}

std::vector<std::pair<UniPoly, int>> factor_unipoly(const UniPoly& f) {
    if (f.is_zero()) raise(ErrorCode::ZeroElement, "factoring the zero polynomial");
    if (f.degree() == 0) return {};
    UniPoly fm = f.monic();
    if (f.context().is_prime_field()) return factor_fp(fm);
    UniPoly sf = fm / unipoly_gcd(fm, fm.derivative());
    std::vector<std::pair<UniPoly, int>> out;
    for (const auto& q : factor_squarefree_q(sf)) {
        int mult = 0;
        UniPoly w = fm;
        while (true) {
            auto [quo, rem] = w.divrem(q);
            if (!rem.is_zero()) break;
            w = quo;
            ++mult;
        }
        out.push_back({q, mult});
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.degree() < b.first.degree();
    });
    return out;
}

// --- simple extensions ----------------------------------------------------------

ExtPtr make_extension(const FieldContext& base, const std::string& var, UniPoly modulus,
                      bool promise_irreducible) {
    if (modulus.context() != base) raise(ErrorCode::ContextMismatch, "modulus context");
    if (modulus.degree() < 1) raise(ErrorCode::NotIrreducible, "modulus must be nonconstant");
    if (!modulus.lead().is_one()) raise(ErrorCode::NotIrreducible, "modulus must be monic");
    if (!promise_irreducible && !is_irreducible(modulus))
        raise(ErrorCode::NotIrreducible, "modulus " + modulus.str(var) + " is reducible over " +
                                             base.name());
    return std::make_shared<SimpleExtension>(SimpleExtension{base, var, std::move(modulus)});
}

ExtElem::ExtElem(ExtPtr ext, std::vector<FieldElement> coords)
    : ext_(std::move(ext)), c_(std::move(coords)) {
    if (c_.size() != static_cast<size_t>(ext_->degree()))
        raise(ErrorCode::PreconditionViolated, "extension element needs degree-many coordinates");
    for (const auto& c : c_)
        if (c.context() != ext_->base) raise(ErrorCode::ContextMismatch, "coordinate context");
}

ExtElem ExtElem::from_base(ExtPtr ext, const FieldElement& c) {
    std::vector<FieldElement> coords(static_cast<size_t>(ext->degree()),
                                     FieldElement::zero(ext->base));
    coords[0] = c;
    return ExtElem(std::move(ext), std::move(coords));
}

ExtElem ExtElem::generator(ExtPtr ext) {
    if (ext->degree() == 1) {
        // t = -c0 in a degree-1 extension
        return from_base(ext, -ext->modulus.coeff(0));
    }
    std::vector<FieldElement> coords(static_cast<size_t>(ext->degree()),
                                     FieldElement::zero(ext->base));
    coords[1] = FieldElement::one(ext->base);
    return ExtElem(std::move(ext), std::move(coords));
}

ExtElem ExtElem::from_unipoly(ExtPtr ext, const UniPoly& p) {
    UniPoly r = p % ext->modulus;
    std::vector<FieldElement> coords(static_cast<size_t>(ext->degree()),
                                     FieldElement::zero(ext->base));
    for (int i = 0; i <= r.degree(); ++i) coords[static_cast<size_t>(i)] = r.coeff(i);
    return ExtElem(std::move(ext), std::move(coords));
}

void ExtElem::check_same_(const ExtElem& o) const {
    if (ext_->base != o.ext_->base || !(ext_->modulus == o.ext_->modulus))
        raise(ErrorCode::ContextMismatch, "elements of different extensions");
}

bool ExtElem::is_zero() const {
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

bool ExtElem::is_base() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

FieldElement ExtElem::base_value() const {
    if (!is_base()) raise(ErrorCode::NonRationalImage, "element does not lie in the base field");
    return c_[0];
}

UniPoly ExtElem::as_unipoly() const { return UniPoly(ext_->base, c_); }

ExtElem ExtElem::operator+(const ExtElem& o) const {
    check_same_(o);
    std::vector<FieldElement> r(c_.size(), FieldElement::zero(ext_->base));
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] + o.c_[i];
    return ExtElem(ext_, std::move(r));
}

ExtElem ExtElem::operator-(const ExtElem& o) const { return *this + (-o); }

ExtElem ExtElem::operator-() const {
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return ExtElem(ext_, std::move(r));
}

ExtElem ExtElem::operator*(const ExtElem& o) const {
    check_same_(o);
    return from_unipoly(ext_, as_unipoly() * o.as_unipoly());
}

ExtElem ExtElem::scaled(const FieldElement& c) const {
    std::vector<FieldElement> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(a * c);
    return ExtElem(ext_, std::move(r));
}

bool ExtElem::operator==(const ExtElem& o) const {
    return ext_->base == o.ext_->base && ext_->modulus == o.ext_->modulus && c_ == o.c_;
}

std::string ExtElem::str() const { return as_unipoly().str(ext_->var); }

FieldElement ext_trace(const ExtElem& e) {
    const ExtPtr& L = e.extension();
    const FieldContext& k = L->base;
    FieldElement tr = FieldElement::zero(k);
    UniPoly cur = e.as_unipoly() % L->modulus;
    UniPoly x = UniPoly::variable(k);
    for (int i = 0; i < L->degree(); ++i) {
        tr = tr + cur.coeff(i);
        if (i + 1 < L->degree()) cur = (cur * x) % L->modulus;
    }
    return tr;
}

}  // namespace a1deg
