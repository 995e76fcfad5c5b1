#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "unicrit/cfrac.hpp"
#include "unicrit/ratfunc.hpp"

namespace unicrit {

/// Critical-point summary of a rational function. Finite critical points are
/// reported with their multiplicity in the Wronskian (wild ramification makes
/// the usual e-1 count meaningless), and only when they lie in the
/// coefficient field itself.
struct CritReport {
    bool separable = false;
    std::vector<std::pair<FieldElem, long long>> finite_critical;
    bool infinity_critical = false;
    std::optional<ProjPoint> unicritical_at;
};

/// Wronskian coefficients (c_{2d-2} : ... : c_0) padded to length 2d-1,
/// scaled so the first nonzero entry is 1. Undefined on inseparable maps.
std::vector<FieldElem> omega(const RatFunc& phi);

/// Coefficients of (tz - s)^(2d-2) for (s:t) = c, highest first, canonically
/// scaled. Requires d >= 2.
std::vector<FieldElem> theta(const ProjPoint& c, long long d);

/// Decides unicriticality without any root finding. The unique candidate for
/// a finite critical point is recovered from the base-p structure of 2d-2 and
/// verified by re-expanding a(z-c)^(2d-2).
CritReport is_unicritical(const RatFunc& phi);

/// Roots of the Wronskian in E with multiplicities, by direct scan. E must
/// be the coefficient field of phi.
std::vector<std::pair<FieldElem, long long>> finite_crit_in_field(
    const RatFunc& phi, const FieldSpec& E, std::uint64_t limit = kDefaultFieldLimit);

/// Ramification index of phi at c: the order of vanishing of phi - phi(c)
/// at c, after Mobius moves bring c and phi(c) into the finite plane.
long long ram_index(const RatFunc& phi, const ProjPoint& c);

} // namespace unicrit
