#include "a1deg/ekl.hpp"

namespace a1deg {

Polynomial socle_element(std::span<const Polynomial> f, const LocalAlgebra& algebra,
                         bool reversed_splitting) {
    if (f.size() != algebra.ring()->nvars())
        raise(ErrorCode::PreconditionViolated, "system is not square");
    for (const auto& fi : f)
        if (!fi.constant_term().is_zero())
            raise(ErrorCode::PreconditionViolated, "system does not vanish at the origin");
    auto a = linear_splitting(f, reversed_splitting);
    Polynomial e = algebra.normal_form(matrix_det(a));
    if (e.is_zero())
        raise(ErrorCode::InternalContradiction,
              "socle element reduced to zero; impossible for an isolated zero");
    return e;
}

std::vector<FieldElement> choose_functional(const LocalAlgebra& algebra,
                                            std::span<const FieldElement> e_coords,
                                            std::optional<size_t> monomial_index) {
    const FieldContext& k = algebra.ring()->field;
    const auto& stairs = algebra.staircase();
    size_t pick = stairs.size();
    if (monomial_index) {
        pick = *monomial_index;
        if (pick >= stairs.size() || e_coords[pick].is_zero())
            raise(ErrorCode::PreconditionViolated,
                  "requested staircase monomial has zero coefficient in E");
    } else {
        // staircase is sorted with socle-degree monomials last
        for (size_t i = stairs.size(); i-- > 0;) {
            if (!e_coords[i].is_zero()) {
                pick = i;
                break;
            }
        }
        if (pick == stairs.size())
            raise(ErrorCode::InternalContradiction, "functional from a zero socle element");
    }
    std::vector<FieldElement> phi(stairs.size(), FieldElement::zero(k));
    phi[pick] = e_coords[pick].inverse();
    return phi;
}

SymmetricForm gram_matrix(const LocalAlgebra& algebra, std::span<const FieldElement> phi) {
    const FieldContext& k = algebra.ring()->field;
    const auto& stairs = algebra.staircase();
    const size_t d = stairs.size();
    if (phi.size() != d) raise(ErrorCode::PreconditionViolated, "functional has wrong length");
    const FieldElement one = FieldElement::one(k);
    std::vector<std::vector<FieldElement>> g(d, std::vector<FieldElement>(d, FieldElement::zero(k)));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = i; j < d; ++j) {
            Polynomial prod = Polynomial::term(algebra.ring(), stairs[i] * stairs[j], one);
            std::vector<FieldElement> coords = algebra.nf_coords(prod);
            FieldElement v = FieldElement::zero(k);
            for (size_t t = 0; t < d; ++t) v = v + phi[t] * coords[t];
            g[i][j] = v;
            g[j][i] = v;
        }
    }
    SymmetricForm form = SymmetricForm::from_gram(k, std::move(g));
    if (!form.nondegenerate())
        raise(ErrorCode::DegenerateForm,
              "EKL Gram matrix is degenerate; impossible when phi(E) = 1");
    return form;
}

EKLComputation ekl_compute(std::vector<Polynomial> f, const EKLOptions& opts) {
    LocalAlgebra algebra = LocalAlgebra::compute(f, opts.basis);
    Polynomial e = socle_element(f, algebra, opts.reversed_splitting);
    std::vector<FieldElement> e_coords = algebra.nf_coords(e);
    std::vector<FieldElement> phi = choose_functional(algebra, e_coords, opts.phi_monomial);
    FieldElement pairing = FieldElement::zero(algebra.ring()->field);
    for (size_t i = 0; i < phi.size(); ++i) pairing = pairing + phi[i] * e_coords[i];
    if (!pairing.is_one())
        raise(ErrorCode::InternalContradiction, "functional does not send E to 1");
    SymmetricForm gram = gram_matrix(algebra, phi);
    return EKLComputation{std::move(algebra), std::move(e_coords), std::move(phi), std::move(gram)};
}

EKLComputation ekl_compute_at(std::span<const Polynomial> f, std::span<const FieldElement> x,
                              const EKLOptions& opts) {
    if (f.empty()) raise(ErrorCode::PreconditionViolated, "empty system");
    const RingPtr& ring = f[0].ring();
    if (x.size() != ring->nvars())
        raise(ErrorCode::PreconditionViolated, "point arity does not match ring");
    std::vector<Polynomial> shifted;
    shifted.reserve(f.size());
    for (const auto& fi : f) {
        Polynomial g = fi.translate(x);
        shifted.push_back(g - Polynomial::constant(ring, g.constant_term()));
    }
    return ekl_compute(std::move(shifted), opts);
}

SymmetricForm ekl_class(std::span<const Polynomial> f, std::span<const FieldElement> x,
                        std::optional<std::span<const FieldElement>> y_shift,
                        const EKLOptions& opts) {
    if (y_shift) {
        if (y_shift->size() != f.size())
            raise(ErrorCode::PreconditionViolated, "shift arity does not match the system");
        for (size_t i = 0; i < f.size(); ++i)
            if (f[i].evaluate(x) != (*y_shift)[i])
                raise(ErrorCode::PreconditionViolated,
                      "f(x) differs from the requested target value");
    }
    return ekl_compute_at(f, x, opts).gram;
}

}  // namespace a1deg
