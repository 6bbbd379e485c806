#pragma once

#include "a1deg/ekl.hpp"

namespace a1deg {

// A closed point of affine n-space: rational coordinates, or coordinates in
// a simple extension of the base field.
struct ClosedPoint {
    std::optional<ExtPtr> ext;
    std::vector<FieldElement> rat_coords;
    std::vector<ExtElem> ext_coords;

    static ClosedPoint rational(std::vector<FieldElement> coords);
    static ClosedPoint extension(ExtPtr ext, std::vector<ExtElem> coords);

    bool is_rational() const { return !ext.has_value(); }
    size_t arity() const { return is_rational() ? rat_coords.size() : ext_coords.size(); }
    size_t residue_degree() const { return is_rational() ? 1 : static_cast<size_t>((*ext)->degree()); }
    std::vector<std::string> coord_strings() const;
};

struct FiberPoint {
    ClosedPoint point;
    size_t multiplicity;  // local length over the residue field
    SymmetricForm form;
};

struct FiberReport {
    std::vector<FieldElement> base_point;
    std::vector<FiberPoint> points;
    SymmetricForm total;
};

// mu^{A1}(g): EKL class of grad(g) at the origin.
SymmetricForm milnor_number(const Polynomial& g);
SymmetricForm milnor_number_at(const Polynomial& g, std::span<const FieldElement> x);

// Local degree at an etale point: <J(x)> at rational points, the transfer
// Tr_{k(x)/k}<J(x)> at extension points. Requires rational image f(x) and
// a nonvanishing Jacobian determinant at x.
SymmetricForm local_degree_etale(std::span<const Polynomial> f, const ClosedPoint& x);

// Arithmetic type of the equation g at a nondegenerate critical point:
// the local degree of grad(g), i.e. the Hessian class at rational points.
SymmetricForm node_arithmetic_type(const Polynomial& g, const ClosedPoint& x);

// Fiber of a univariate polynomial over y: each rational root contributes
// its EKL class, each simple irreducible factor of degree >= 2 its trace
// form. Irrational multiple roots make the fiber unresolvable.
FiberReport fiber_sum_univariate(const Polynomial& f, const FieldElement& y);

// Fiber of a square system over a rational point, for systems that can be
// solved by back-substitution (each step univariate in one variable);
// intermediate steps need rational roots, the final variable may contribute
// extension points. Anything else is rejected, never approximated.
FiberReport fiber_sum(std::span<const Polynomial> f, std::span<const FieldElement> y);

struct ConservationReport {
    bool pass = false;
    std::vector<FiberReport> fibers;
    std::string witness;  // non-empty on failure: which fibers differ and how
};

ConservationReport conservation_check(std::span<const Polynomial> f,
                                      const std::vector<std::vector<FieldElement>>& ys);

struct ObstructionResult {
    bool obstructed = false;
    std::string witness;  // first differing invariant when obstructed
};

// Compares mu^{A1}(g) against the orthogonal sum of the proposed node types
// over the given classifier field.
ObstructionResult bifurcation_obstruction(const Polynomial& g,
                                          std::span<const SymmetricForm> node_types,
                                          const FieldContext& classify_field);

}  // namespace a1deg
