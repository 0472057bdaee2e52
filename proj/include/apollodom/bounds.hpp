#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "apollodom/domination.hpp"
#include "apollodom/dyadic.hpp"
#include "apollodom/metrics.hpp"
#include "apollodom/network.hpp"

namespace apollodom {

inline BigInt pow3(int e) {
    if (e < 0) throw std::invalid_argument("pow3: negative exponent");
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= 3;
    return r;
}

/// gamma >= ceil((diam+2)/4) for any connected graph.
inline int diam_lower_bound_gamma(int diam) {
    if (diam < 0) throw std::invalid_argument("diam_lower_bound_gamma: negative diameter");
    return (diam + 2 + 3) / 4;
}

/// Every closed-form bound on the porous domination number of a level-k
/// network, evaluated in exact integer arithmetic. Fields are absent when
/// their k-range excludes k; none of this needs a built graph.
struct BoundsReport {
    int k = 0;
    BigInt n;                                // (3^(k-1)+5)/2
    int diameter = 0;                        // ceil((2k-1)/3)
    int lower_diam = 0;                      // ceil((diam+2)/4)
    int lower_closed_form = 0;               // ceil((2k+5)/12)
    std::optional<BigInt> upper_generation;  // 3^(k-5), k >= 6
    std::optional<BigInt> upper_subnetwork;  // (3^(k-8)+5)/2, k >= 10
    std::optional<BigInt> upper_recursion;   // 2*3^(k-5), k >= 5
    BigInt upper_order_floor;                // floor(2(n+2)/5)
    BigInt upper_order_numerator;            // 2(n+2), over denominator 5
    BigInt best_lower;
    BigInt best_upper;
};

/// 2*3^(k-5): three copies of the level-(k-1) network, grounded at k = 5.
inline BigInt recursion_upper(int k) {
    if (k < 5) throw std::invalid_argument("recursion_upper: defined for k >= 5, got " +
                                           std::to_string(k));
    return 2 * pow3(k - 5);
}

inline BoundsReport bounds_report(int k) {
    if (k < 1) throw std::invalid_argument("bounds_report: level must be >= 1");
    BoundsReport r;
    r.k = k;
    r.n = (pow3(k - 1) + 5) / 2;
    r.diameter = diameter_closed_form(k);
    r.lower_diam = diam_lower_bound_gamma(r.diameter);
    r.lower_closed_form = (2 * k + 5 + 11) / 12;
    if (k >= 6) r.upper_generation = pow3(k - 5);
    if (k >= 10) r.upper_subnetwork = (pow3(k - 8) + 5) / 2;
    if (k >= 5) r.upper_recursion = recursion_upper(k);
    r.upper_order_numerator = 2 * (r.n + 2);
    r.upper_order_floor = r.upper_order_numerator / 5;
    // the order bound over denominator 5 coincides with (3^(k-1)+9)/5
    if (r.upper_order_numerator != pow3(k - 1) + 9)
        throw std::logic_error("bounds_report: order-bound forms disagree");
    r.best_lower = std::max(r.lower_diam, r.lower_closed_form);
    r.best_upper = r.upper_order_floor;
    if (r.upper_generation && *r.upper_generation < r.best_upper) r.best_upper = *r.upper_generation;
    if (r.upper_subnetwork && *r.upper_subnetwork < r.best_upper) r.best_upper = *r.upper_subnetwork;
    if (r.upper_recursion && *r.upper_recursion < r.best_upper) r.best_upper = *r.upper_recursion;
    return r;
}

/// True when gamma <= 2(n+2)/5, compared as exact rationals.
inline bool order_upper_bound_holds(int gamma, const BigInt& n) {
    return BigInt(gamma) * 5 <= 2 * (n + 2);
}

/// The newest-but-three generation as a porous candidate set: size 3^(k-5),
/// and a dominating set for every k >= 6.
inline CandidateSet generation_dominating_set(const ApollonianNetwork& net) {
    const int k = net.level();
    if (k < 6)
        throw std::invalid_argument("generation_dominating_set: defined for levels >= 6, got " +
                                    std::to_string(k));
    auto members = net.generation_members(k - 3);
    return CandidateSet::of(net, {members.begin(), members.end()}, Variant::porous);
}

/// All vertices of the level-(k-7) subnetwork as a porous candidate set:
/// size (3^(k-8)+5)/2, and a dominating set for every k >= 10.
inline CandidateSet subnetwork_dominating_set(const ApollonianNetwork& net) {
    const int k = net.level();
    if (k < 10)
        throw std::invalid_argument("subnetwork_dominating_set: defined for levels >= 10, got " +
                                    std::to_string(k));
    const std::size_t count = net.generation_begin(k - 6); // ids below U_{k-6} span levels 1..k-7
    std::vector<VertexId> members(count);
    std::iota(members.begin(), members.end(), 0);
    return CandidateSet::of(net, std::move(members), Variant::porous);
}

} // namespace apollodom
