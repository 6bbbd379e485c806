#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "a1deg/unipoly.hpp"

namespace a1deg {

// Gram matrix of a symmetric bilinear form over a field context.
class SymmetricForm {
public:
    static SymmetricForm from_gram(const FieldContext& ctx,
                                   std::vector<std::vector<FieldElement>> gram);
    static SymmetricForm diagonal(const FieldContext& ctx, std::vector<FieldElement> entries);
    static SymmetricForm diagonal_ints(const FieldContext& ctx, const std::vector<long>& entries);
    // m orthogonal copies of [[0,1],[1,0]]
    static SymmetricForm hyperbolic(const FieldContext& ctx, size_t m);

    const FieldContext& context() const { return ctx_; }
    size_t rank() const { return g_.size(); }
    const std::vector<std::vector<FieldElement>>& gram() const { return g_; }
    const FieldElement& entry(size_t i, size_t j) const { return g_[i][j]; }

    FieldElement det() const;
    bool nondegenerate() const { return rank() == 0 || !det().is_zero(); }

    SymmetricForm direct_sum(const SymmetricForm& o) const;
    // reinterpret the same rational entries under another classifier context;
    // only contexts with identical element arithmetic are allowed
    SymmetricForm with_context(const FieldContext& ctx) const;

    bool operator==(const SymmetricForm& o) const { return ctx_ == o.ctx_ && g_ == o.g_; }

private:
    FieldContext ctx_;
    std::vector<std::vector<FieldElement>> g_;
    SymmetricForm(FieldContext ctx, std::vector<std::vector<FieldElement>> g)
        : ctx_(std::move(ctx)), g_(std::move(g)) {}
};

// Diagonal entries of a congruent diagonal form, by symmetric Gaussian
// elimination. Requires a nondegenerate form away from characteristic 2.
std::vector<FieldElement> diagonalize(const SymmetricForm& q);

// Classification invariants. Which of them decide equality depends on the
// context: RR rank+signature, F_q (q odd) rank+disc, char 2 rank only,
// Q_p rank+disc+Hasse, Q rank+signature+disc+Hasse everywhere.
struct GWClass {
    FieldContext ctx;
    size_t rank = 0;
    bool char2 = false;
    std::optional<SquareClass> disc;       // det(gram) mod squares; absent in char 2
    std::optional<long> signature;         // Rationals / RealClassifier
    std::vector<std::pair<Place, int>> hasse;  // Rationals: all relevant places; Qp: place p
};

GWClass invariants(const SymmetricForm& q);

// Isometry test (char != 2) / equal rank (char 2).
bool gw_equals(const SymmetricForm& a, const SymmetricForm& b);
// Name and values of the first differing invariant, if any.
std::optional<std::string> gw_difference(const SymmetricForm& a, const SymmetricForm& b);
// Equality after padding with hyperbolic planes. Ranks of distinct parity
// can never become stably isomorphic and are rejected loudly.
bool stable_equals(const SymmetricForm& a, const SymmetricForm& b);

// Human-readable shape m*H + <d_1, ..., d_r>. The pairing is greedy and
// class-preserving; m is not certified maximal over Q.
struct Presentation {
    size_t h_multiplicity = 0;
    std::vector<SquareClass> residual;
};

Presentation present(const SymmetricForm& q);
std::string presentation_string(const Presentation& p);
// rebuild a form with the presented class
SymmetricForm form_of_presentation(const FieldContext& ctx, const Presentation& p);

// Transfer Tr_{L/k}<w>: Gram of (x,y) -> Tr(w x y) on the power basis.
SymmetricForm trace_form(const ExtPtr& L, const ExtElem& w);

}  // namespace a1deg
