#pragma once

#include "exalg/char_degrees.hpp"
#include "exalg/hopf_twist.hpp"

namespace exalg {

/// Degree-bound report: twisting does not change the underlying algebra
/// k[Gamma], so the maximal irreducible dimension of the twisted Hopf algebra
/// equals the maximal character degree of Gamma; the division algebra it acts
/// on has degree |G|, so the bound max_degree(Gamma) <= |G|^2 is asserted.
struct PiBoundReport {
    size_t gamma_order = 0;
    std::vector<int> degrees;
    int max_degree = 0;
    size_t g_order = 0;
    long bound = 0;  // |G|^2
    bool within_bound = false;
    bool degrees_consistent = false;  // sum d^2 = |Gamma|, count = #classes
};

inline PiBoundReport pi_bound_check(const GammaGroup& gg) {
    PiBoundReport rep;
    auto gamma = gg.group();
    rep.gamma_order = gamma->order();
    rep.degrees = character_degrees(gamma);
    rep.max_degree = rep.degrees.empty() ? 1 : rep.degrees.back();
    rep.g_order = gg.coc.mod.grp->order();
    rep.bound = static_cast<long>(rep.g_order) * static_cast<long>(rep.g_order);
    rep.within_bound = rep.max_degree <= rep.bound;
    long sum = 0;
    for (int d : rep.degrees) sum += static_cast<long>(d) * d;
    rep.degrees_consistent = sum == static_cast<long>(gamma->order()) &&
                             rep.degrees.size() == gamma->conjugacy_classes().size();
    return rep;
}

}  // namespace exalg
