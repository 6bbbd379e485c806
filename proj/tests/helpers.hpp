#pragma once

#include <random>

#include "a1deg/degree.hpp"

namespace a1deg::testing {

inline RingPtr qq_ring(std::vector<std::string> vars) {
    return make_ring(FieldContext::rationals(), std::move(vars));
}

inline Polynomial qp(const RingPtr& ring, const std::string& text) {
    return parse_polynomial(ring, text);
}

inline FieldElement fe(const FieldContext& ctx, long n) { return FieldElement::integer(ctx, n); }

inline std::vector<FieldElement> point(const FieldContext& ctx, std::initializer_list<long> cs) {
    std::vector<FieldElement> out;
    for (long c : cs) out.push_back(fe(ctx, c));
    return out;
}

// deterministic small random values for property tests
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}
    long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    long nonzero(long lo, long hi) {
        long v = 0;
        while (v == 0) v = small(lo, hi);
        return v;
    }
    FieldElement element(const FieldContext& ctx, long lo = -9, long hi = 9) {
        return fe(ctx, small(lo, hi));
    }
    FieldElement nonzero_element(const FieldContext& ctx, long lo = -9, long hi = 9) {
        FieldElement v = element(ctx, lo, hi);
        while (v.is_zero()) v = element(ctx, lo, hi);
        return v;
    }
    Polynomial poly(const RingPtr& ring, unsigned max_deg = 3, size_t terms = 4) {
        Polynomial p(ring);
        for (size_t t = 0; t < terms; ++t) {
            std::vector<unsigned> e(ring->nvars());
            unsigned budget = max_deg;
            for (auto& x : e) {
                x = static_cast<unsigned>(small(0, budget));
                budget -= x;
            }
            p = p + Polynomial::term(ring, Monomial(std::move(e)), element(ring->field, -5, 5));
        }
        return p;
    }

private:
    std::mt19937 gen_;
};

// the Table rows: name, equation, expected h-multiplicity and residual entries
struct AdeEntry {
    std::string name;
    std::string equation;
    size_t h_mult;
    std::vector<long> residual;
    size_t rank;
};

inline std::vector<AdeEntry> ade_corpus() {
    std::vector<AdeEntry> rows;
    for (long n = 1; n <= 6; ++n) {
        AdeEntry e;
        e.name = "A" + std::to_string(n);
        e.equation = "x1^2+x2^" + std::to_string(n + 1);
        e.rank = static_cast<size_t>(n);
        if (n % 2 == 1) {
            e.h_mult = static_cast<size_t>((n - 1) / 2);
            e.residual = {2 * (n + 1)};
        } else {
            e.h_mult = static_cast<size_t>(n / 2);
        }
        rows.push_back(e);
    }
    for (long n = 4; n <= 6; ++n) {
        AdeEntry e;
        e.name = "D" + std::to_string(n);
        e.equation = "x2*(x1^2+x2^" + std::to_string(n - 2) + ")";
        e.rank = static_cast<size_t>(n);
        if (n % 2 == 0) {
            e.h_mult = static_cast<size_t>((n - 2) / 2);
            e.residual = {-2, 2 * (n - 1)};
        } else {
            e.h_mult = static_cast<size_t>((n - 1) / 2);
            e.residual = {-2};
        }
        rows.push_back(e);
    }
    rows.push_back({"E6", "x1^3+x2^4", 3, {}, 6});
    rows.push_back({"E7", "x1*(x1^2+x2^3)", 3, {-3}, 7});
    rows.push_back({"E8", "x1^3+x2^5", 4, {}, 8});
    return rows;
}

inline SymmetricForm ade_expected(const FieldContext& ctx, const AdeEntry& e) {
    return SymmetricForm::hyperbolic(ctx, e.h_mult)
        .direct_sum(SymmetricForm::diagonal_ints(ctx, e.residual));
}

}  // namespace a1deg::testing
