#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>

#include "a1deg/poly.hpp"

namespace a1deg {

struct StdBasisOptions {
    long step_limit = 1'000'000;  // reduction-step guard; exceeding it is a bug, not bad input
};

// Mora's weak normal form w.r.t. LocalDegRevLex: returns r with u*h = q*G + r
// for some unit u of the local ring and LM(r) not divisible by any LM(G).
// Divisor selection is ecart-minimal with ties by list position; intermediate
// results with larger ecart join the divisor list, which is what makes the
// reduction terminate over the local ring.
Polynomial mora_normal_form(const Polynomial& h, const std::vector<Polynomial>& basis,
                            long step_limit = 1'000'000);

// s-polynomial w.r.t. the local order
Polynomial spoly_local(const Polynomial& a, const Polynomial& b);

// Standard basis of (f_1, ..., f_n) in the localization at the origin,
// with the staircase basis of the quotient Q_0(f) and a canonical
// normal-form operator on it.
class LocalAlgebra {
public:
    static LocalAlgebra compute(std::vector<Polynomial> generators, StdBasisOptions opts = {});

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::vector<Polynomial>& standard_basis() const { return basis_; }
    const std::vector<Monomial>& leading_monomials() const { return lead_; }
    // monomials outside the leading ideal, sorted with 1 first and the
    // socle-degree monomials last
    const std::vector<Monomial>& staircase() const { return staircase_; }
    size_t dimension() const { return staircase_.size(); }

    // canonical projection onto span(staircase): k-linear, idempotent,
    // congruent to the input modulo the localized ideal
    std::vector<FieldElement> nf_coords(const Polynomial& h) const;
    Polynomial normal_form(const Polynomial& h) const;
    Polynomial from_coords(std::span<const FieldElement> coords) const;

    // column j holds the coordinates of NF(g * B_j) in the staircase basis
    std::vector<std::vector<FieldElement>> multiplication_matrix(const Polynomial& g) const;

    std::optional<size_t> staircase_index(const Monomial& m) const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::vector<Polynomial> basis_;  // monic
    std::vector<Monomial> lead_;
    std::vector<Monomial> staircase_;
    unsigned cutoff_ = 0;  // m^cutoff lies in the ideal; monomials of degree >= cutoff reduce to 0

    // memoized monomial reductions, shared between copies; the mutex makes
    // concurrent normal-form calls on a shared algebra safe
    struct NfCache {
        std::mutex mutex;
        std::map<Monomial, std::vector<FieldElement>, Monomial::LexLess> entries;
    };
    std::shared_ptr<NfCache> cache_ = std::make_shared<NfCache>();

    LocalAlgebra() = default;
    const std::vector<FieldElement>& monomial_nf_(const Monomial& m) const;  // cache lock held
};

// Least b >= 1 such that every monomial of degree b lies in the ideal;
// perturbing the generators above this order changes nothing.
int determinacy_order(const LocalAlgebra& algebra);

}  // namespace a1deg
