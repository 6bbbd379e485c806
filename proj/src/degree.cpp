#include "a1deg/degree.hpp"

#include <algorithm>

namespace a1deg {

ClosedPoint ClosedPoint::rational(std::vector<FieldElement> coords) {
    if (coords.empty()) raise(ErrorCode::PreconditionViolated, "empty point");
    for (const auto& c : coords)
        if (c.context() != coords[0].context())
            raise(ErrorCode::ContextMismatch, "mixed coordinate contexts");
    ClosedPoint p;
    p.rat_coords = std::move(coords);
    return p;
}

ClosedPoint ClosedPoint::extension(ExtPtr ext, std::vector<ExtElem> coords) {
    if (coords.empty()) raise(ErrorCode::PreconditionViolated, "empty point");
    ClosedPoint p;
    p.ext = std::move(ext);
    p.ext_coords = std::move(coords);
    return p;
}

std::vector<std::string> ClosedPoint::coord_strings() const {
    std::vector<std::string> out;
    if (is_rational())
        for (const auto& c : rat_coords) out.push_back(c.str());
    else
        for (const auto& c : ext_coords) out.push_back(c.str());
    return out;
}

SymmetricForm milnor_number(const Polynomial& g) {
    std::vector<Polynomial> grad = gradient(g);
    for (const auto& gi : grad)
        if (!gi.constant_term().is_zero())
            raise(ErrorCode::NotIsolatedZero, "the gradient does not vanish at the origin");
    return ekl_compute(std::move(grad)).gram;
}

SymmetricForm milnor_number_at(const Polynomial& g, std::span<const FieldElement> x) {
    std::vector<Polynomial> grad = gradient(g);
    for (const auto& gi : grad)
        if (!gi.evaluate(x).is_zero())
            raise(ErrorCode::NotIsolatedZero, "the gradient does not vanish at the point");
    return ekl_class(grad, x);
}

SymmetricForm local_degree_etale(std::span<const Polynomial> f, const ClosedPoint& x) {
    if (f.empty()) raise(ErrorCode::PreconditionViolated, "empty system");
    const RingPtr& ring = f[0].ring();
    if (f.size() != ring->nvars() || x.arity() != ring->nvars())
        raise(ErrorCode::PreconditionViolated, "system or point arity mismatch");
    Polynomial jac = jacobian_det(f);
    if (x.is_rational()) {
        FieldElement j = jac.evaluate(x.rat_coords);
        if (j.is_zero()) raise(ErrorCode::NotEtale, "Jacobian determinant vanishes at the point");
        return SymmetricForm::diagonal(ring->field, {j});
    }
    const ExtPtr& L = *x.ext;
    if (L->base != ring->field) raise(ErrorCode::ContextMismatch, "extension over a different base");
    for (const auto& fi : f) {
        ExtElem v = fi.evaluate_ext(L, x.ext_coords);
        if (!v.is_base())
            raise(ErrorCode::NonRationalImage, "f(x) = " + v.str() + " is not rational");
    }
    ExtElem j = jac.evaluate_ext(L, x.ext_coords);
    if (j.is_zero()) raise(ErrorCode::NotEtale, "Jacobian determinant vanishes at the point");
    return trace_form(L, j);
}

SymmetricForm node_arithmetic_type(const Polynomial& g, const ClosedPoint& x) {
    const FieldContext& k = g.context();
    if (k.char2())
        raise(ErrorCode::Char2Unsupported, "arithmetic types are not defined in characteristic 2");
    std::vector<Polynomial> grad = gradient(g);
    bool critical = true;
    if (x.is_rational()) {
        for (const auto& gi : grad) critical = critical && gi.evaluate(x.rat_coords).is_zero();
    } else {
        for (const auto& gi : grad)
            critical = critical && gi.evaluate_ext(*x.ext, x.ext_coords).is_zero();
    }
    if (!critical) raise(ErrorCode::PreconditionViolated, "the point is not a critical point of g");
    // the Jacobian of the gradient is the Hessian; vanishing there means no node
    Polynomial hess = jacobian_det(grad);
    bool degenerate = x.is_rational() ? hess.evaluate(x.rat_coords).is_zero()
                                      : hess.evaluate_ext(*x.ext, x.ext_coords).is_zero();
    if (degenerate)
        raise(ErrorCode::DegenerateCriticalPoint, "Hessian determinant vanishes at the point");
    return local_degree_etale(grad, x);
}

// --- fiber sums ------------------------------------------------------------------

namespace {

struct FiberSolver {
    const std::vector<Polynomial>& f;        // original system
    const std::vector<FieldElement>& y;      // base point
    std::vector<Polynomial> eqs;             // f_i - y_i
    const RingPtr& ring;
    std::vector<FiberPoint> points;

    void run() {
        std::vector<std::optional<FieldElement>> fixed(ring->nvars());
        std::vector<bool> used(eqs.size(), false);
        branch(fixed, used);
    }

    void branch(std::vector<std::optional<FieldElement>> fixed, std::vector<bool> used) {
        size_t unresolved = 0;
        for (const auto& v : fixed)
            if (!v) ++unresolved;
        if (unresolved == 0) {
            finish_rational(fixed, used);
            return;
        }

        // an unused equation that is univariate in one unresolved variable
        size_t eq_idx = eqs.size(), var_idx = 0;
        Polynomial plugged(ring);
        for (size_t i = 0; i < eqs.size() && eq_idx == eqs.size(); ++i) {
            if (used[i]) continue;
            Polynomial p = substitute_fixed(eqs[i], fixed);
            std::vector<size_t> sup;
            for (size_t v : p.support_vars())
                if (!fixed[v]) sup.push_back(v);
            if (p.is_zero())
                raise(ErrorCode::UnresolvedFiber,
                      "an equation degenerates after substitution; the fiber is not finite");
            if (sup.empty()) {
                if (!p.constant_term().is_zero()) return;  // inconsistent branch, no points here
                used[i] = true;                            // redundant equation
                continue;
            }
            if (sup.size() == 1) {
                eq_idx = i;
                var_idx = sup[0];
                plugged = p;
            }
        }
        if (eq_idx == eqs.size())
            raise(ErrorCode::UnresolvedFiber, "system is not in shape position");

        UniPoly u = plugged.to_unipoly(var_idx);
        std::vector<std::pair<UniPoly, int>> factors;
        try {
            factors = factor_unipoly(u);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::FactorizationUnsupported)
                raise(ErrorCode::UnresolvedFiber, e.detail());
            throw;
        }
        used[eq_idx] = true;
        for (const auto& [q, mult] : factors) {
            if (q.degree() == 1) {
                auto next = fixed;
                next[var_idx] = -q.coeff(0);
                branch(next, used);
                continue;
            }
            if (unresolved > 1)
                raise(ErrorCode::UnresolvedFiber,
                      "irrational coordinate before the last variable: factor " + q.str());
            if (mult > 1)
                raise(ErrorCode::UnresolvedFiber,
                      "irrational multiple point: factor " + q.str() + " with multiplicity " +
                          std::to_string(mult));
            finish_extension(fixed, used, var_idx, q);
        }
    }

    Polynomial substitute_fixed(const Polynomial& p,
                                const std::vector<std::optional<FieldElement>>& fixed) const {
        Polynomial r = p;
        for (size_t v = 0; v < fixed.size(); ++v)
            if (fixed[v]) r = r.substitute(v, *fixed[v]);
        return r;
    }

    void finish_rational(const std::vector<std::optional<FieldElement>>& fixed,
                         const std::vector<bool>& used) {
        std::vector<FieldElement> coords;
        coords.reserve(fixed.size());
        for (const auto& v : fixed) coords.push_back(*v);
        for (size_t i = 0; i < eqs.size(); ++i)
            if (!used[i] && !eqs[i].evaluate(coords).is_zero()) return;  // not on the fiber
        SymmetricForm form = ekl_class(f, coords);
        size_t mult = form.rank();
        points.push_back({ClosedPoint::rational(coords), mult, std::move(form)});
    }

    void finish_extension(const std::vector<std::optional<FieldElement>>& fixed,
                          const std::vector<bool>& used, size_t var_idx, const UniPoly& modulus) {
        ExtPtr L = make_extension(ring->field, "t", modulus, /*promise_irreducible=*/true);
        std::vector<ExtElem> coords;
        coords.reserve(fixed.size());
        for (size_t v = 0; v < fixed.size(); ++v) {
            if (v == var_idx)
                coords.push_back(ExtElem::generator(L));
            else
                coords.push_back(ExtElem::from_base(L, *fixed[v]));
        }
        for (size_t i = 0; i < eqs.size(); ++i)
            if (!used[i] && !eqs[i].evaluate_ext(L, coords).is_zero()) return;
        ClosedPoint pt = ClosedPoint::extension(L, std::move(coords));
        SymmetricForm form = [&] {
            try {
                return local_degree_etale(f, pt);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::NotEtale)
                    raise(ErrorCode::UnresolvedFiber,
                          "irrational non-etale point: factor " + modulus.str());
                throw;
            }
        }();
        points.push_back({std::move(pt), 1, std::move(form)});
    }
};

}  // namespace

FiberReport fiber_sum(std::span<const Polynomial> f, std::span<const FieldElement> y) {
    if (f.empty()) raise(ErrorCode::PreconditionViolated, "empty system");
    const RingPtr& ring = f[0].ring();
    if (f.size() != ring->nvars() || y.size() != f.size())
        raise(ErrorCode::PreconditionViolated, "system or base point arity mismatch");
    std::vector<Polynomial> fv(f.begin(), f.end());
    std::vector<FieldElement> yv(y.begin(), y.end());
    std::vector<Polynomial> eqs;
    eqs.reserve(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        eqs.push_back(fv[i] - Polynomial::constant(ring, yv[i]));

    FiberSolver solver{fv, yv, std::move(eqs), ring, {}};
    solver.run();

    SymmetricForm total = SymmetricForm::diagonal(ring->field, {});
    for (const auto& p : solver.points) total = total.direct_sum(p.form);
    return FiberReport{yv, std::move(solver.points), std::move(total)};
}

FiberReport fiber_sum_univariate(const Polynomial& f, const FieldElement& y) {
    if (f.nvars() != 1)
        raise(ErrorCode::PreconditionViolated, "fiber_sum_univariate needs one variable");
    if (f.total_degree() < 1)
        raise(ErrorCode::PreconditionViolated, "constant polynomials have no finite fibers");
    std::vector<Polynomial> sys{f};
    std::vector<FieldElement> yy{y};
    return fiber_sum(sys, yy);
}

ConservationReport conservation_check(std::span<const Polynomial> f,
                                      const std::vector<std::vector<FieldElement>>& ys) {
    if (ys.empty()) raise(ErrorCode::PreconditionViolated, "no base points given");
    ConservationReport rep;
    rep.pass = true;
    for (const auto& y : ys) rep.fibers.push_back(fiber_sum(f, y));
    for (size_t i = 1; i < rep.fibers.size(); ++i) {
        auto diff = gw_difference(rep.fibers[0].total, rep.fibers[i].total);
        if (diff) {
            rep.pass = false;
            std::string yi;
            for (const auto& c : rep.fibers[i].base_point) yi += (yi.empty() ? "" : ",") + c.str();
            std::string y0;
            for (const auto& c : rep.fibers[0].base_point) y0 += (y0.empty() ? "" : ",") + c.str();
            if (!rep.witness.empty()) rep.witness += "; ";
            rep.witness += "fiber over (" + yi + ") differs from fiber over (" + y0 + "): " + *diff;
        }
    }
    return rep;
}

ObstructionResult bifurcation_obstruction(const Polynomial& g,
                                          std::span<const SymmetricForm> node_types,
                                          const FieldContext& classify_field) {
    SymmetricForm mu = milnor_number(g).with_context(classify_field);
    SymmetricForm sum = SymmetricForm::diagonal(classify_field, {});
    for (const auto& nt : node_types) sum = sum.direct_sum(nt.with_context(classify_field));
    auto diff = gw_difference(mu, sum);
    if (diff) return {true, *diff};
    return {false, ""};
}

}  // namespace a1deg
