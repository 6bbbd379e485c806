#pragma once

#include "a1deg/gw.hpp"
#include "a1deg/standard_basis.hpp"

namespace a1deg {

struct EKLOptions {
    bool reversed_splitting = false;            // telescope the splitting in reverse variable order
    std::optional<size_t> phi_monomial;         // staircase index to build phi from
    StdBasisOptions basis;
};

// One full run at the origin: local algebra, distinguished socle element E,
// a functional with phi(E) = 1, and the Gram matrix of beta_phi.
struct EKLComputation {
    LocalAlgebra algebra;
    std::vector<FieldElement> e_coords;  // NF(E) in the staircase basis
    std::vector<FieldElement> phi;       // functional as staircase coordinates
    SymmetricForm gram;

    Polynomial socle_polynomial() const { return algebra.from_coords(e_coords); }
};

// NF(det(a_ij)) for the telescoping splitting f_i = sum_j a_ij x_j.
// Nonzero whenever the zero is isolated; a vanishing result means a bug
// upstream, not bad input.
Polynomial socle_element(std::span<const Polynomial> f, const LocalAlgebra& algebra,
                         bool reversed_splitting = false);

// Coefficient extractor scaled so that phi(E) = 1. By default the staircase
// monomial of maximal degree with a nonzero coefficient in E is used (the
// socle-degree monomial); any staircase index with a nonzero coefficient is
// accepted, and all choices give isomorphic forms.
std::vector<FieldElement> choose_functional(const LocalAlgebra& algebra,
                                            std::span<const FieldElement> e_coords,
                                            std::optional<size_t> monomial_index = {});

// Gram matrix phi(NF(B_i * B_j)) on the staircase basis.
SymmetricForm gram_matrix(const LocalAlgebra& algebra, std::span<const FieldElement> phi);

// The whole pipeline for a system already vanishing at the origin.
EKLComputation ekl_compute(std::vector<Polynomial> f, const EKLOptions& opts = {});

// w_x(f): translate x to the origin, subtract f(x), run the pipeline.
// When y_shift is given it must equal f(x).
SymmetricForm ekl_class(std::span<const Polynomial> f, std::span<const FieldElement> x,
                        std::optional<std::span<const FieldElement>> y_shift = {},
                        const EKLOptions& opts = {});

EKLComputation ekl_compute_at(std::span<const Polynomial> f, std::span<const FieldElement> x,
                              const EKLOptions& opts = {});

}  // namespace a1deg
