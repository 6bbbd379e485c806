#include "a1deg/gw.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace a1deg {

SymmetricForm SymmetricForm::from_gram(const FieldContext& ctx,
                                       std::vector<std::vector<FieldElement>> gram) {
    const size_t n = gram.size();
    for (const auto& row : gram) {
        if (row.size() != n) raise(ErrorCode::PreconditionViolated, "Gram matrix is not square");
        for (const auto& e : row)
            if (e.context() != ctx) raise(ErrorCode::ContextMismatch, "Gram entry context");
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i])
                raise(ErrorCode::PreconditionViolated, "Gram matrix is not symmetric");
    return SymmetricForm(ctx, std::move(gram));
}

SymmetricForm SymmetricForm::diagonal(const FieldContext& ctx, std::vector<FieldElement> entries) {
    const size_t n = entries.size();
    std::vector<std::vector<FieldElement>> g(n, std::vector<FieldElement>(n, FieldElement::zero(ctx)));
    for (size_t i = 0; i < n; ++i) g[i][i] = entries[i];
    return from_gram(ctx, std::move(g));
}

SymmetricForm SymmetricForm::diagonal_ints(const FieldContext& ctx,
                                           const std::vector<long>& entries) {
    std::vector<FieldElement> es;
    es.reserve(entries.size());
    for (long v : entries) es.push_back(FieldElement::integer(ctx, v));
    return diagonal(ctx, std::move(es));
}

SymmetricForm SymmetricForm::hyperbolic(const FieldContext& ctx, size_t m) {
    const size_t n = 2 * m;
    std::vector<std::vector<FieldElement>> g(n, std::vector<FieldElement>(n, FieldElement::zero(ctx)));
    for (size_t k = 0; k < m; ++k) {
        g[2 * k][2 * k + 1] = FieldElement::one(ctx);
        g[2 * k + 1][2 * k] = FieldElement::one(ctx);
    }
    return from_gram(ctx, std::move(g));
}

FieldElement SymmetricForm::det() const {
    // exact Gaussian elimination with partial pivoting over the field
    std::vector<std::vector<FieldElement>> m = g_;
    const size_t n = m.size();
    FieldElement d = FieldElement::one(ctx_);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return FieldElement::zero(ctx_);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            d = -d;
        }
        d = d * m[k][k];
        FieldElement inv = m[k][k].inverse();
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            FieldElement c = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - c * m[k][j];
        }
    }
    return d;
}

SymmetricForm SymmetricForm::direct_sum(const SymmetricForm& o) const {
    if (ctx_ != o.ctx_) raise(ErrorCode::ContextMismatch, "direct sum over different fields");
    const size_t n = rank(), m = o.rank();
    std::vector<std::vector<FieldElement>> g(n + m,
                                             std::vector<FieldElement>(n + m, FieldElement::zero(ctx_)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g[i][j] = g_[i][j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) g[n + i][n + j] = o.g_[i][j];
    return SymmetricForm(ctx_, std::move(g));
}

SymmetricForm SymmetricForm::with_context(const FieldContext& ctx) const {
    if (ctx == ctx_) return *this;
    if (!ctx.rational_arithmetic() || !ctx_.rational_arithmetic())
        raise(ErrorCode::ContextMismatch,
              "cannot reinterpret " + ctx_.name() + " form over " + ctx.name());
    std::vector<std::vector<FieldElement>> g(rank());
    for (size_t i = 0; i < rank(); ++i)
        for (size_t j = 0; j < rank(); ++j) g[i].emplace_back(ctx, g_[i][j].value());
    return SymmetricForm(ctx, std::move(g));
}

std::vector<FieldElement> diagonalize(const SymmetricForm& q) {
    const FieldContext& ctx = q.context();
    if (ctx.char2()) raise(ErrorCode::Char2Unsupported, "no diagonalization in characteristic 2");
    if (!q.nondegenerate()) raise(ErrorCode::DegenerateForm, "form is degenerate");
    std::vector<std::vector<FieldElement>> m = q.gram();
    const size_t n = m.size();
    const FieldElement two = FieldElement::integer(ctx, 2);
    std::vector<FieldElement> diag;
    diag.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (m[i][i].is_zero()) {
            size_t j = i + 1;
            while (j < n && m[j][j].is_zero()) ++j;
            if (j < n) {
                std::swap(m[i], m[j]);
                for (auto& row : m) std::swap(row[i], row[j]);
            } else {
                // all remaining diagonal entries vanish; repair with
                // a_ii <- a_ii + 2 a_ij + a_jj
                j = i + 1;
                while (j < n && m[i][j].is_zero()) ++j;
                if (j == n) raise(ErrorCode::DegenerateForm, "degenerate block");
                for (size_t k = 0; k < n; ++k) m[i][k] = m[i][k] + m[j][k];
                for (size_t k = 0; k < n; ++k) m[k][i] = m[k][i] + m[k][j];
            }
        }
        FieldElement inv = m[i][i].inverse();
        for (size_t j = i + 1; j < n; ++j) {
            if (m[i][j].is_zero()) continue;
            FieldElement c = m[i][j] * inv;
            for (size_t k = 0; k < n; ++k) m[j][k] = m[j][k] - c * m[i][k];
            for (size_t k = 0; k < n; ++k) m[k][j] = m[k][j] - c * m[k][i];
        }
        diag.push_back(m[i][i]);
    }
    return diag;
}

namespace {

long signature_of(const std::vector<FieldElement>& diag) {
    long s = 0;
    for (const auto& d : diag) s += d.sign() > 0 ? 1 : -1;
    return s;
}

// odd primes showing up in the square classes of the entries
std::set<Int> relevant_odd_primes(const FieldContext& ctx, const std::vector<FieldElement>& diag) {
    std::set<Int> primes;
    for (const auto& d : diag) {
        Int sf = abs(Int(square_class_of_rat(FieldContext::rationals(), d.value()).representative().get_num()));
        for (const auto& [p, e] : factor_integer(sf))
            if (p != 2) primes.insert(p);
    }
    (void)ctx;
    return primes;
}

int hasse_at(const std::vector<FieldElement>& diag, const Place& place) {
    int eps = 1;
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j)
            eps *= hilbert_symbol(diag[i].value(), diag[j].value(), place);
    return eps;
}

}  // namespace

GWClass invariants(const SymmetricForm& q) {
    GWClass cls;
    cls.ctx = q.context();
    cls.rank = q.rank();
    cls.char2 = q.context().char2();
    if (!q.nondegenerate()) raise(ErrorCode::DegenerateForm, "form is degenerate");
    if (cls.char2) return cls;  // rank is the only invariant
    cls.disc = reduce_square_class(q.det());
    switch (q.context().kind) {
        case FieldKind::PrimeField:
            break;
        case FieldKind::RealClassifier:
            cls.signature = signature_of(diagonalize(q));
            break;
        case FieldKind::Rationals: {
            auto diag = diagonalize(q);
            cls.signature = signature_of(diag);
            cls.hasse.emplace_back(Place::at_infinity(), hasse_at(diag, Place::at_infinity()));
            cls.hasse.emplace_back(Place::prime(2), hasse_at(diag, Place::prime(2)));
            for (const auto& p : relevant_odd_primes(q.context(), diag))
                cls.hasse.emplace_back(Place::prime(p), hasse_at(diag, Place::prime(p)));
            break;
        }
        case FieldKind::PadicClassifier: {
            auto diag = diagonalize(q);
            cls.hasse.emplace_back(Place::prime(q.context().p), hasse_at(diag, Place::prime(q.context().p)));
            break;
        }
    }
    return cls;
}

std::optional<std::string> gw_difference(const SymmetricForm& a, const SymmetricForm& b) {
    if (a.context() != b.context())
        raise(ErrorCode::ContextMismatch,
              "forms over different fields: " + a.context().name() + " vs " + b.context().name());
    const FieldContext& ctx = a.context();
    if (a.rank() != b.rank())
        return "rank: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank());
    if (ctx.char2()) return std::nullopt;
    if (!a.nondegenerate() || !b.nondegenerate())
        raise(ErrorCode::DegenerateForm, "comparison of a degenerate form");

    auto disc_diff = [&]() -> std::optional<std::string> {
        SquareClass da = reduce_square_class(a.det()), db = reduce_square_class(b.det());
        if (da != db) return "disc: " + da.str() + " vs " + db.str();
        return std::nullopt;
    };

    // difference reporting order: rank, disc, signature, Hasse
    switch (ctx.kind) {
        case FieldKind::PrimeField:
            return disc_diff();
        case FieldKind::RealClassifier: {
            if (auto d = disc_diff()) return d;
            long sa = signature_of(diagonalize(a)), sb = signature_of(diagonalize(b));
            if (sa != sb) return "signature: " + std::to_string(sa) + " vs " + std::to_string(sb);
            return std::nullopt;
        }
        case FieldKind::Rationals: {
            auto da = diagonalize(a), db = diagonalize(b);
            if (auto d = disc_diff()) return d;
            long sa = signature_of(da), sb = signature_of(db);
            if (sa != sb) return "signature: " + std::to_string(sa) + " vs " + std::to_string(sb);
            std::set<Int> primes = relevant_odd_primes(ctx, da);
            for (const auto& p : relevant_odd_primes(ctx, db)) primes.insert(p);
            primes.insert(Int(2));
            for (const auto& p : primes) {
                int ea = hasse_at(da, Place::prime(p)), eb = hasse_at(db, Place::prime(p));
                if (ea != eb)
                    return "hasse@" + p.get_str() + ": " + std::to_string(ea) + " vs " +
                           std::to_string(eb);
            }
            return std::nullopt;
        }
        case FieldKind::PadicClassifier: {
            // disc and Hasse symbol are compared p-adically
            SquareClass da = reduce_square_class(a.det()), db = reduce_square_class(b.det());
            if (da != db) return "disc: " + da.str() + " vs " + db.str();
            int ea = hasse_at(diagonalize(a), Place::prime(ctx.p));
            int eb = hasse_at(diagonalize(b), Place::prime(ctx.p));
            if (ea != eb)
                return "hasse@" + std::to_string(ctx.p) + ": " + std::to_string(ea) + " vs " +
                       std::to_string(eb);
            return std::nullopt;
        }
    }
    raise(ErrorCode::InternalContradiction, "unreachable field kind");
}

bool gw_equals(const SymmetricForm& a, const SymmetricForm& b) {
    return !gw_difference(a, b).has_value();
}

bool stable_equals(const SymmetricForm& a, const SymmetricForm& b) {
    if ((a.rank() + b.rank()) % 2 != 0)
        raise(ErrorCode::RankParityMismatch,
              "ranks differ by an odd number; never stably isomorphic");
    if (a.rank() == b.rank()) return gw_equals(a, b);
    const SymmetricForm& small = a.rank() < b.rank() ? a : b;
    const SymmetricForm& big = a.rank() < b.rank() ? b : a;
    SymmetricForm padded =
        small.direct_sum(SymmetricForm::hyperbolic(small.context(), (big.rank() - small.rank()) / 2));
    return gw_equals(padded, big);
}

Presentation present(const SymmetricForm& q) {
    const FieldContext& ctx = q.context();
    if (ctx.char2()) raise(ErrorCode::Char2Unsupported, "no presentation in characteristic 2");
    std::vector<FieldElement> diag = diagonalize(q);
    std::vector<SquareClass> cls;
    cls.reserve(diag.size());
    for (const auto& d : diag) cls.push_back(reduce_square_class(d));
    const SquareClass minus_one = minus_one_class(ctx);

    Presentation p;
    std::vector<bool> used(cls.size(), false);
    for (size_t i = 0; i < cls.size(); ++i) {
        if (used[i]) continue;
        for (size_t j = i + 1; j < cls.size(); ++j) {
            if (used[j]) continue;
            if (cls[i] * cls[j] == minus_one) {  // <a, -a*square> is hyperbolic
                used[i] = used[j] = true;
                p.h_multiplicity += 1;
                break;
            }
        }
    }
    for (size_t i = 0; i < cls.size(); ++i)
        if (!used[i]) p.residual.push_back(cls[i]);
    return p;
}

std::string presentation_string(const Presentation& p) {
    std::ostringstream os;
    if (p.h_multiplicity > 0) os << p.h_multiplicity << "*H";
    if (!p.residual.empty()) {
        if (p.h_multiplicity > 0) os << " + ";
        os << "<";
        for (size_t i = 0; i < p.residual.size(); ++i) {
            if (i) os << ",";
            os << p.residual[i].str();
        }
        os << ">";
    }
    if (p.h_multiplicity == 0 && p.residual.empty()) os << "0";
    return os.str();
}

SymmetricForm form_of_presentation(const FieldContext& ctx, const Presentation& p) {
    std::vector<FieldElement> entries;
    entries.reserve(p.residual.size());
    for (const auto& c : p.residual) entries.emplace_back(ctx, c.representative());
    return SymmetricForm::hyperbolic(ctx, p.h_multiplicity)
        .direct_sum(SymmetricForm::diagonal(ctx, std::move(entries)));
}

SymmetricForm trace_form(const ExtPtr& L, const ExtElem& w) {
    if (w.is_zero()) raise(ErrorCode::ZeroElement, "trace form of zero");
    const size_t d = static_cast<size_t>(L->degree());
    // u_k = w * t^k reduced mod the modulus, for k = 0, ..., 2d-2
    std::vector<ExtElem> u;
    u.reserve(2 * d - 1);
    u.push_back(w);
    ExtElem t = ExtElem::generator(L);
    for (size_t k = 1; k + 1 <= 2 * (d - 1) + 1; ++k) u.push_back(u.back() * t);
    std::vector<std::vector<FieldElement>> g(d,
                                             std::vector<FieldElement>(d, FieldElement::zero(L->base)));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) g[i][j] = ext_trace(u[i + j]);
    return SymmetricForm::from_gram(L->base, std::move(g));
}

}  // namespace a1deg
