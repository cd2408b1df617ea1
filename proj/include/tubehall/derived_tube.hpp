#pragma once

// Stalk-complex model of the bounded derived category of a tube. Every object is a direct
// sum of shifted indecomposable modules; morphisms between stalks live in relative shift 0
// (module maps) or 1 (extension classes).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "tubehall/exactfield.hpp"
#include "tubehall/orbit_census.hpp"
#include "tubehall/tube_rep.hpp"

namespace tubehall {

struct Stalk {
    int shift = 0;
    IndecLabel label;

    friend auto operator<=>(const Stalk&, const Stalk&) = default;
    friend bool operator==(const Stalk&, const Stalk&) = default;
};

using StalkObject = std::vector<Stalk>;

inline StalkObject canonical(StalkObject x) {
    std::sort(x.begin(), x.end());
    return x;
}

inline Stalk suspend(const Stalk& s, int k = 1) { return {s.shift + k, s.label}; }

struct VRotations {
    std::uint64_t v_xyz = 0;        // |V(X, Y; Z)|
    std::uint64_t v_z_sx_y = 0;     // |V(Z, SX; Y)|
    std::uint64_t v_sy_z_x = 0;     // |V(S^-1 Y, Z; X)|
    std::uint64_t aut_x = 0, aut_y = 0, aut_z = 0;
    std::uint64_t hom_zx = 0, hom_yx = 0, hom_yz = 0;
};

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

class DerivedTube {
public:
    DerivedTube(FieldSpec F, CyclicQuiver Q, int max_length = 8) : F_(F), Q_(Q), max_length_(max_length) {}

    const FieldSpec& field() const { return F_; }
    const CyclicQuiver& quiver() const { return Q_; }
    int max_length() const { return max_length_; }

    void check_bound(const IndecLabel& L) const {
        check_label(Q_, L);
        if (L.length > max_length_) {
            throw std::out_of_range("length " + std::to_string(L.length) + " exceeds bound " + std::to_string(max_length_));
        }
    }

    std::size_t hom_dim(const Stalk& X, const Stalk& Y) const {
        const int rel = Y.shift - X.shift;
        if (rel != 0 && rel != 1) return 0;
        HomExt he(F_, build_indec(Q_, X.label), build_indec(Q_, Y.label));
        return rel == 0 ? he.hom_dim() : he.ext_dim();
    }

    std::size_t hom_dim(const StalkObject& X, const StalkObject& Y) const {
        std::size_t d = 0;
        for (const auto& a : X)
            for (const auto& b : Y) d += hom_dim(a, b);
        return d;
    }

    /// Number of automorphisms of an indecomposable stalk, counted by enumerating End.
    std::uint64_t aut_count(const IndecLabel& L) const {
        const auto M = build_indec(Q_, L);
        HomExt he(F_, M, M);
        std::vector<Column> basis;
        for (std::size_t i = 0; i < he.hom_dim(); ++i) {
            Column e(he.hom_dim(), 0);
            e[i] = 1;
            basis.push_back(e);
        }
        std::uint64_t n = 0;
        for_each_in_span(F_, basis, he.hom_dim(), [&](const Column& a) {
            if (top_scalar(L, Q_, he.hom_combination(a)) != 0) ++n;
        });
        return n;
    }

    std::uint64_t hom_count(const Stalk& X, const Stalk& Y) const { return ipow(F_.modulus(), hom_dim(X, Y)); }

    /// Aut(X)-orbits on Hom_D(X, Z), grouped by the isomorphism class of the cone.
    std::map<StalkObject, std::uint64_t> cone_census(const Stalk& X, const Stalk& Z) const {
        check_bound(X.label);
        check_bound(Z.label);
        const int rel = Z.shift - X.shift;
        std::map<StalkObject, std::uint64_t> out;
        if (rel != 0 && rel != 1) {
            out[canonical({Z, suspend(X)})] = 1;
            return out;
        }
        const auto M = build_indec(Q_, X.label);
        const auto N = build_indec(Q_, Z.label);
        HomExt space(F_, M, N);
        HomExt end(F_, M, M);
        const std::size_t D = rel == 0 ? space.hom_dim() : space.ext_dim();
        const std::size_t E = end.hom_dim();

        auto element = [&](const Column& c) {
            return rel == 0 ? space.hom_combination(c) : space.ext_combination(c);
        };
        std::vector<Matrix> right(E, Matrix(D, D));
        for (std::size_t k = 0; k < E; ++k) {
            const auto a = end.hom_element(k);
            for (std::size_t j = 0; j < D; ++j) {
                Column e(D, 0);
                e[j] = 1;
                const auto comp = compose_components(F_, element(e), a);
                const auto col = rel == 0 ? space.hom_coords(comp) : space.ext_coords(comp);
                for (std::size_t i = 0; i < D; ++i) right[k](i, j) = col[i];
            }
        }
        const auto group = unit_action(F_, E, right, D, [&](const Column& a) {
            return top_scalar(X.label, Q_, end.hom_combination(a)) != 0;
        });
        for_each_orbit(F_, D, group, [&](const Column& rep, const std::vector<Column>&) {
            StalkObject cone;
            if (rel == 0) {
                const auto kc = kernel_cokernel_parts(F_, M, N, element(rep));
                for (const auto& L : decompose(F_, kc.cok)) cone.push_back({X.shift, L});
                for (const auto& L : decompose(F_, kc.ker)) cone.push_back({X.shift + 1, L});
            } else {
                const auto E2 = extension_middle_rep(M, N, element(rep));
                for (const auto& L : decompose(F_, E2)) cone.push_back({X.shift + 1, L});
            }
            ++out[canonical(cone)];
        });
        return out;
    }

    /// |V(X, Y; Z)|: Aut(X)-orbits of morphisms X -> Z whose cone is isomorphic to Y.
    std::uint64_t v_number(const Stalk& X, const Stalk& Y, const Stalk& Z) const {
        const auto census = cone_census(X, Z);
        auto it = census.find(StalkObject{Y});
        return it == census.end() ? 0 : it->second;
    }

    /// The three counts of the rotation identities for modules X, Y, Z, with the
    /// cardinalities that appear in them.
    VRotations v_rotations(const IndecLabel& X, const IndecLabel& Y, const IndecLabel& Z) const {
        const Stalk x{0, X}, y{0, Y}, z{0, Z};
        VRotations r;
        r.v_xyz = v_number(x, y, z);
        r.v_z_sx_y = v_number(z, suspend(x), y);
        r.v_sy_z_x = v_number(suspend(y, -1), z, x);
        r.aut_x = aut_count(X);
        r.aut_y = aut_count(Y);
        r.aut_z = aut_count(Z);
        r.hom_zx = hom_count(z, x);
        r.hom_yx = hom_count(y, x);
        r.hom_yz = hom_count(y, z);
        return r;
    }

private:
    FieldSpec F_;
    CyclicQuiver Q_;
    int max_length_;
};

}  // namespace tubehall
