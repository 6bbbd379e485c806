#include "a1deg/standard_basis.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace a1deg {

namespace {
constexpr MonomialOrder kLocal = MonomialOrder::LocalDegRevLex;
}

Polynomial spoly_local(const Polynomial& a, const Polynomial& b) {
    auto [ma, ca] = a.leading(kLocal);
    auto [mb, cb] = b.leading(kLocal);
    Monomial l = Monomial::lcm(ma, mb);
    Polynomial ta = Polynomial::term(a.ring(), l.quotient(ma), ca.inverse());
    Polynomial tb = Polynomial::term(b.ring(), l.quotient(mb), cb.inverse());
    return ta * a - tb * b;
}

Polynomial mora_normal_form(const Polynomial& h, const std::vector<Polynomial>& basis,
                            long step_limit) {
    std::vector<const Polynomial*> divisors;
    divisors.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) divisors.push_back(&g);
    std::deque<Polynomial> appended;  // deque: stored pointers stay valid while it grows

    Polynomial r = h;
    long steps = 0;
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading(kLocal);
        const Polynomial* best = nullptr;
        unsigned best_ecart = 0;
        for (const Polynomial* g : divisors) {
            if (!g->leading(kLocal).first.divides(rm)) continue;
            unsigned e = g->ecart(kLocal);
            if (!best || e < best_ecart) {
                best = g;
                best_ecart = e;
            }
        }
        if (!best) return r;
        if (best_ecart > r.ecart(kLocal)) {
            appended.push_back(r);
            divisors.push_back(&appended.back());
        }
        auto [gm, gc] = best->leading(kLocal);
        r = r - Polynomial::term(r.ring(), rm.quotient(gm), rc / gc) * (*best);
        if (++steps > step_limit)
            raise(ErrorCode::StepLimitExceeded,
                  "Mora reduction exceeded " + std::to_string(step_limit) + " steps");
    }
    return r;
}

LocalAlgebra LocalAlgebra::compute(std::vector<Polynomial> generators, StdBasisOptions opts) {
    if (generators.empty()) raise(ErrorCode::ZeroIdealInput, "no generators");
    LocalAlgebra A;
    A.ring_ = generators[0].ring();
    A.gens_ = generators;

    std::vector<Polynomial> G;
    for (auto& g : generators) {
        if (g.ring() != A.ring_ && !(*g.ring() == *A.ring_))
            raise(ErrorCode::ContextMismatch, "generators over different rings");
        if (g.is_zero()) continue;
        if (!g.constant_term().is_zero())
            raise(ErrorCode::PreconditionViolated,
                  "generator does not vanish at the origin; the local algebra there is zero");
        G.push_back(g.scaled(g.leading(kLocal).second.inverse()));
    }
    if (G.empty()) raise(ErrorCode::ZeroIdealInput, "all generators vanish identically");

    // Buchberger loop with Mora normal form. Pairs ordered by lcm degree,
    // then lcm, then indices; coprime-leading-term and chain criteria applied.
    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.lcm.deg() != b.lcm.deg()) return a.lcm.deg() < b.lcm.deg();
        if (!(a.lcm == b.lcm)) return mono_less(b.lcm, a.lcm, kLocal);
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    };
    std::vector<Pair> pending;
    std::set<std::pair<size_t, size_t>> handled;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial li = G[i].leading(kLocal).first;
            Monomial lj = G[j].leading(kLocal).first;
            if (li.coprime(lj)) {
                handled.insert({i, j});  // product criterion
                continue;
            }
            pending.push_back({i, j, Monomial::lcm(li, lj)});
        }
    };
    for (size_t j = 0; j < G.size(); ++j) push_pairs_for(j);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair pr = *it;
        pending.erase(it);
        handled.insert({pr.i, pr.j});
        // chain criterion: drop the pair if some other leading monomial
        // divides the lcm and both companion pairs were already treated
        bool skip = false;
        for (size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!G[k].leading(kLocal).first.divides(pr.lcm)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (handled.count(key(pr.i, k)) && handled.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;
        Polynomial h = mora_normal_form(spoly_local(G[pr.i], G[pr.j]), G, opts.step_limit);
        if (h.is_zero()) continue;
        G.push_back(h.scaled(h.leading(kLocal).second.inverse()));
        push_pairs_for(G.size() - 1);
    }

    // minimalize: drop elements whose leading monomial is a proper multiple
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        Monomial li = G[i].leading(kLocal).first;
        bool redundant = false;
        for (size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial lj = G[j].leading(kLocal).first;
            if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(G[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
        return mono_less(b.leading(kLocal).first, a.leading(kLocal).first, kLocal);
    });
    A.basis_ = std::move(minimal);
    for (const auto& g : A.basis_) A.lead_.push_back(g.leading(kLocal).first);

    // isolated-zero certificate: every variable needs a pure power in the
    // leading ideal, otherwise the staircase is infinite
    const size_t n = A.ring_->nvars();
    std::vector<unsigned> bound(n, 0);
    for (size_t v = 0; v < n; ++v) {
        unsigned best = 0;
        for (const auto& m : A.lead_) {
            bool pure = m[v] > 0;
            for (size_t w = 0; w < n && pure; ++w)
                if (w != v && m[w]) pure = false;
            if (pure && (best == 0 || m[v] < best)) best = m[v];
        }
        if (best == 0)
            raise(ErrorCode::NotIsolatedZero,
                  "no pure power of " + A.ring_->vars[v] +
                      " in the leading ideal: the zero is not isolated");
        bound[v] = best;
    }

    // staircase = monomials under the bounds and outside the leading ideal
    std::vector<unsigned> exp(n, 0);
    std::vector<Monomial> stairs;
    while (true) {
        Monomial m{std::vector<unsigned>(exp)};
        bool in_lead = false;
        for (const auto& l : A.lead_)
            if (l.divides(m)) {
                in_lead = true;
                break;
            }
        if (!in_lead) stairs.push_back(m);
        size_t i = 0;
        while (i < n && ++exp[i] == bound[i]) exp[i++] = 0;
        if (i == n) break;
    }
    std::sort(stairs.begin(), stairs.end(),
              [](const Monomial& a, const Monomial& b) { return mono_less(b, a, kLocal); });
    A.staircase_ = std::move(stairs);
    if (A.staircase_.empty())
        raise(ErrorCode::InternalContradiction, "empty staircase for an ideal inside the maximal ideal");
    // m^dim annihilates the quotient, so degree >= dim reduces to zero
    A.cutoff_ = static_cast<unsigned>(A.dimension());
    return A;
}

std::optional<size_t> LocalAlgebra::staircase_index(const Monomial& m) const {
    for (size_t i = 0; i < staircase_.size(); ++i)
        if (staircase_[i] == m) return i;
    return std::nullopt;
}

// Canonical reduction of a single monomial: staircase monomials are fixed,
// degree >= cutoff vanishes, and leading-ideal monomials below the cutoff
// are rewritten along a standard-basis element. The rewrite strictly
// descends in the local order, so the memoized recursion terminates.
// The caller holds the cache lock.
const std::vector<FieldElement>& LocalAlgebra::monomial_nf_(const Monomial& m) const {
    auto it = cache_->entries.find(m);
    if (it != cache_->entries.end()) return it->second;

    const FieldContext& k = ring_->field;
    std::vector<FieldElement> coords(dimension(), FieldElement::zero(k));
    if (m.deg() >= cutoff_) {
        return cache_->entries.emplace(m, std::move(coords)).first->second;
    }
    if (auto idx = staircase_index(m)) {
        coords[*idx] = FieldElement::one(k);
        return cache_->entries.emplace(m, std::move(coords)).first->second;
    }
    size_t g = 0;
    while (g < lead_.size() && !lead_[g].divides(m)) ++g;
    if (g == lead_.size())
        raise(ErrorCode::InternalContradiction, "monomial escaped both staircase and leading ideal");
    // m = q * LM(g); rewrite m = -q * tail(g) modulo the ideal (basis is monic)
    Monomial q = m.quotient(lead_[g]);
    for (const auto& [bm, bc] : basis_[g].terms()) {
        if (bm == lead_[g]) continue;
        const std::vector<FieldElement>& sub = monomial_nf_(q * bm);
        for (size_t i = 0; i < coords.size(); ++i) coords[i] = coords[i] - bc * sub[i];
    }
    return cache_->entries.emplace(m, std::move(coords)).first->second;
}

std::vector<FieldElement> LocalAlgebra::nf_coords(const Polynomial& h) const {
    if (!(*h.ring() == *ring_)) raise(ErrorCode::ContextMismatch, "wrong ring");
    const FieldContext& k = ring_->field;
    std::vector<FieldElement> coords(dimension(), FieldElement::zero(k));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& [m, c] : h.terms()) {
        const std::vector<FieldElement>& sub = monomial_nf_(m);
        for (size_t i = 0; i < coords.size(); ++i) coords[i] = coords[i] + c * sub[i];
    }
    return coords;
}

Polynomial LocalAlgebra::from_coords(std::span<const FieldElement> coords) const {
    if (coords.size() != dimension())
        raise(ErrorCode::PreconditionViolated, "coordinate vector has the wrong length");
    Polynomial p(ring_);
    for (size_t i = 0; i < coords.size(); ++i)
        p = p + Polynomial::term(ring_, staircase_[i], coords[i]);
    return p;
}

Polynomial LocalAlgebra::normal_form(const Polynomial& h) const {
    return from_coords(nf_coords(h));
}

std::vector<std::vector<FieldElement>> LocalAlgebra::multiplication_matrix(
    const Polynomial& g) const {
    const size_t d = dimension();
    std::vector<std::vector<FieldElement>> M(
        d, std::vector<FieldElement>(d, FieldElement::zero(ring_->field)));
    for (size_t j = 0; j < d; ++j) {
        Polynomial gj = g * Polynomial::term(ring_, staircase_[j], FieldElement::one(ring_->field));
        std::vector<FieldElement> col = nf_coords(gj);
        for (size_t i = 0; i < d; ++i) M[i][j] = col[i];
    }
    return M;
}

int determinacy_order(const LocalAlgebra& algebra) {
    const size_t n = algebra.ring()->nvars();
    const long cap = static_cast<long>(n) * (static_cast<long>(algebra.dimension()) + 1);
    for (long b = 1; b <= cap; ++b) {
        // all monomials of total degree b
        bool all_zero = true;
        std::vector<unsigned> exp(n, 0);
        exp[0] = static_cast<unsigned>(b);
        while (all_zero) {
            Monomial m{std::vector<unsigned>(exp)};
            if (m.deg() == static_cast<unsigned>(b)) {
                for (const auto& c : algebra.nf_coords(
                         Polynomial::term(algebra.ring(), m, FieldElement::one(algebra.ring()->field))))
                    if (!c.is_zero()) {
                        all_zero = false;
                        break;
                    }
            }
            // next composition of b into n parts
            if (n == 1) break;
            long rem = exp[0];
            size_t i = 1;
            for (; i < n; ++i) {
                if (rem > 0) {
                    exp[0] = static_cast<unsigned>(rem - 1);
                    exp[i] += 1;
                    break;
                }
                rem += exp[i];
                exp[i] = 0;
            }
            if (i == n) break;
        }
        if (all_zero) return static_cast<int>(b);
    }
    raise(ErrorCode::CapExceeded, "determinacy search exceeded its cap; this is a bug");
}

}  // namespace a1deg
