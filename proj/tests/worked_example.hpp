#pragma once

// The mixed morphism f0 + g : <4> -> <3> in the cluster tube, with f0 the composite
// <4> ->> <2> >-> <3> and g the class of 0 -> <-3> -> <-7> -> <4> -> 0.

#include <optional>
#include <stdexcept>

#include "tubehall/orbit_cat.hpp"
#include "tubehall/orbit_census.hpp"

namespace example {

using namespace tubehall;

struct MixedMorphism {
    OrbitMorphism f0;    // pure degree-0 part
    OrbitMorphism g;     // pure degree-1 part
    OrbitMorphism f;     // f0 + g
};

inline MixedMorphism four_to_three(const OrbitCategory& C) {
    const auto& F = C.field();
    const auto space = C.hom_space(4, 3);
    const std::size_t d0 = space.deg0_dim(), D = space.dim();
    const auto X = C.module(4);
    const auto L = C.module(3);
    std::optional<Column> a, b;
    for (std::uint64_t x = 1; x < space_size(F, d0) && !a; ++x) {
        Column c(D, 0);
        const auto part = decode(F, x, d0);
        std::copy(part.begin(), part.end(), c.begin());
        const auto kc = kernel_cokernel_parts(F, X, L, space.element(c).f0);
        if (decompose(F, kc.ker) == std::vector<IndecLabel>{{1, 2}} &&
            decompose(F, kc.cok) == std::vector<IndecLabel>{{1, 1}})
            a = c;
    }
    for (std::uint64_t x = 1; x < space_size(F, D - d0) && !b; ++x) {
        Column c(D, 0);
        const auto part = decode(F, x, D - d0);
        std::copy(part.begin(), part.end(), c.begin() + d0);
        const auto E = extension_middle_rep(X, C.twist(L), space.element(c).f1);
        if (decompose(F, E) == std::vector<IndecLabel>{{2, 7}}) b = c;
    }
    if (!a || !b) throw std::logic_error("worked example morphisms not found");
    Column sum(D);
    for (std::size_t i = 0; i < D; ++i) sum[i] = F.add((*a)[i], (*b)[i]);
    return {space.element(*a), space.element(*b), space.element(sum)};
}

}  // namespace example
