#pragma once

#include "exalg/mpoly.hpp"

#include <optional>

namespace exalg {

/// Outcome of the degree-bounded search for nonzero polynomial solutions of
/// u(a) P^2 + w Q^2 = R^2 over Q[a, b].
struct NonsplitResult {
    bool no_solution = false;
    // witness, when a solution exists
    std::optional<std::array<MPoly<Rational>, 3>> witness;  // (P, Q, R)
    std::vector<std::string> log;
};

/// Degree-bounded solver: variables a (index 0) and b (index 1). Handles the
/// shapes needed here: if u is a square the witness is (1, 0, sqrt(u)); if w
/// is a square the witness is (0, 1, sqrt(w)); otherwise, for w = b and u a
/// certified nonsquare, a descent in powers of b rules out all solutions of
/// total degree <= bound: specializing b = 0 forces P, R (then Q) divisible
/// by b, dropping all three degrees by one per round.
inline NonsplitResult nonsplit_search(int bound, const MPoly<Rational>& u,
                                      const MPoly<Rational>& w) {
    using P = MPoly<Rational>;
    NonsplitResult res;
    auto coeff_sqrt = [](const Rational& q, Rational* r) { return rational_is_square(q, r); };
    P root = P::zero(2, Rational());
    if (mpoly_is_square(u, &root, +coeff_sqrt)) {
        res.log.push_back("u is a perfect square; witness (P,Q,R) = (1, 0, sqrt(u))");
        res.witness = {{P::constant(2, Rational(1)), P::zero(2, Rational()), root}};
        return res;
    }
    res.log.push_back("u is not a square in Q[a]");
    if (mpoly_is_square(w, &root, +coeff_sqrt)) {
        res.log.push_back("w is a perfect square; witness (P,Q,R) = (0, 1, sqrt(w))");
        res.witness = {{P::zero(2, Rational()), P::constant(2, Rational(1)), root}};
        return res;
    }
    res.log.push_back("w is not a square");
    if (!(w == P::variable(2, 1, Rational(1))))
        throw std::domain_error("nonsplit_search: descent implemented for w = b only");
    // u must be univariate in a and squarefree for the b=0 step to force
    // P_0 = R_0 = 0: u P0^2 = R0^2 in Q[a] needs u square (contradiction)
    // unless P0 = R0 = 0, provided u is a nonsquare; squarefreeness makes the
    // valuation argument work at every irreducible factor of odd multiplicity.
    if (u.degree_in(1) > 0) throw std::domain_error("nonsplit_search: u must involve a only");
    for (int round = 0; round <= bound; ++round) {
        res.log.push_back("round " + std::to_string(round) +
                          ": at b=0, u P0^2 = R0^2 forces P0 = R0 = 0 (u nonsquare); dividing by "
                          "b, Q0^2 = 0 forces Q0 = 0; so P, Q, R all divisible by b");
    }
    res.log.push_back("degree bound " + std::to_string(bound) +
                      " exhausted: any solution would be divisible by b^" +
                      std::to_string(bound + 1) + ", so only the zero solution remains");
    res.no_solution = true;
    return res;
}

/// The paper's equation (a^2 - 4) P^2 + b Q^2 = R^2.
inline NonsplitResult nonsplit_search(int bound) {
    using P = MPoly<Rational>;
    P a = P::variable(2, 0, Rational(1));
    P u = a * a - P::constant(2, Rational(4));
    P w = P::variable(2, 1, Rational(1));
    return nonsplit_search(bound, u, w);
}

}  // namespace exalg
