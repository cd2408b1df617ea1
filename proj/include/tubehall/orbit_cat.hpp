#pragma once

// The two 2-periodic orbit categories:
//   ClusterTube   = D^b(T_2) / tau^-1 S   (objects <m>, <-m>: modules with socle 1, 2)
//   RootCategory  = D^b(T_1) / S^2        (<n> = J_n in degree 0, <-n> = S J_n)
//
// A morphism X -> Y is a pair (f0, f1): f0 a module map X -> Y, f1 a cocycle representing
// an extension class X -> twist(Y)[1]. In the cluster tube twist = tau^-1 and both parts
// may be nonzero; in the root category twist = id and exactly one part exists, chosen by
// the parities of X and Y.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tubehall/exactfield.hpp"
#include "tubehall/orbit_census.hpp"
#include "tubehall/tube_rep.hpp"

namespace tubehall {

enum class Variant { ClusterTube, RootCategory };

inline std::string variant_name(Variant v) { return v == Variant::ClusterTube ? "cluster" : "root"; }

inline Variant parse_variant(const std::string& s) {
    if (s == "cluster") return Variant::ClusterTube;
    if (s == "root") return Variant::RootCategory;
    throw std::invalid_argument("unknown variant '" + s + "' (expected cluster or root)");
}

/// Cone labels as a sorted list of signed object labels.
using ObjectList = std::vector<int>;

struct OrbitMorphism {
    int source = 0, target = 0;
    std::vector<Matrix> f0;  // module map source -> target
    std::vector<Matrix> f1;  // cocycle source -> twist(target)[1]
};

/// Counts of Aut(X)-orbits whose cone is a given object, split by the kind of orbit.
struct OrbitCells {
    std::uint64_t s1 = 0;  // orbit contains a pure degree-0 morphism
    std::uint64_t s2 = 0;  // mixed, with no pure degree-0 member
    std::uint64_t s3 = 0;  // pure degree-1
    std::uint64_t total() const { return s1 + s2 + s3; }
};

class OrbitCategory;

class OrbitHomSpace {
public:
    OrbitHomSpace(const OrbitCategory& C, int X, int Y);

    int source() const { return X_; }
    int target() const { return Y_; }
    std::size_t deg0_dim() const { return active0_ ? deg0_.hom_dim() : 0; }
    std::size_t deg1_dim() const { return active1_ ? deg1_.ext_dim() : 0; }
    std::size_t dim() const { return deg0_dim() + deg1_dim(); }

    OrbitMorphism element(const Column& coords) const;
    Column coords(const OrbitMorphism& f) const;
    std::vector<OrbitMorphism> basis() const;

    const NilpRep& source_rep() const { return deg0_.source(); }
    const NilpRep& target_rep() const { return deg0_.target(); }
    const NilpRep& twisted_target_rep() const { return deg1_.target(); }

private:
    int X_, Y_;
    bool active0_, active1_;
    HomExt deg0_;  // Hom(X, Y)
    HomExt deg1_;  // Ext^1(X, twist Y)
};

class OrbitCategory {
public:
    OrbitCategory(Variant v, FieldSpec F, int max_length = 8)
        : variant_(v), F_(F), Q_(v == Variant::ClusterTube ? 2 : 1), max_length_(max_length) {}

    Variant variant() const { return variant_; }
    const FieldSpec& field() const { return F_; }
    const CyclicQuiver& quiver() const { return Q_; }
    int max_length() const { return max_length_; }

    void check_object(int m) const {
        if (m == 0) throw std::invalid_argument("object label 0 is not allowed");
        if (std::abs(m) > max_length_) {
            throw std::out_of_range("object <" + std::to_string(m) + "> exceeds length bound " +
                                    std::to_string(max_length_));
        }
    }

    IndecLabel module_label(int m) const {
        return variant_ == Variant::ClusterTube ? from_signed(m) : IndecLabel{1, std::abs(m)};
    }
    NilpRep module(int m) const {
        check_object(m);
        return build_indec(Q_, module_label(m));
    }
    /// Degree of the module representative (root category only).
    int parity(int m) const { return variant_ == Variant::RootCategory && m < 0 ? 1 : 0; }
    static int suspend(int m) { return -m; }

    int label_of(const IndecLabel& L, int parity) const {
        if (variant_ == Variant::ClusterTube) return to_signed(L);
        return parity % 2 == 0 ? L.length : -L.length;
    }

    NilpRep twist(const NilpRep& M) const { return variant_ == Variant::ClusterTube ? rotate(M, -1) : M; }
    std::vector<Matrix> twist_components(const std::vector<Matrix>& c) const {
        return variant_ == Variant::ClusterTube ? rotate_components(Q_, c, -1) : c;
    }

    /// Which parts of Hom(X, Y) exist: {degree-0, degree-1}.
    std::pair<bool, bool> active_parts(int X, int Y) const {
        if (variant_ == Variant::ClusterTube) return {true, true};
        const bool same = parity(X) == parity(Y);
        return {same, !same};
    }

    OrbitHomSpace hom_space(int X, int Y) const { return OrbitHomSpace(*this, X, Y); }

    OrbitMorphism identity(int X) const {
        const auto M = module(X);
        return {X, X, identity_components(M), zero_cocycle(M, twist(M))};
    }

    /// g o f. Degree-1 parts compose to zero.
    OrbitMorphism compose(const OrbitMorphism& g, const OrbitMorphism& f) const {
        if (f.target != g.source) throw std::invalid_argument("compose: morphisms are not composable");
        OrbitMorphism h{f.source, g.target, compose_components(F_, g.f0, f.f0), {}};
        const auto a = pullback_cocycle(F_, g.f1, f.f0);
        const auto b = pushout_cocycle(F_, twist_components(g.f0), f.f1);
        for (std::size_t v = 0; v < a.size(); ++v) h.f1.push_back(add(F_, a[v], b[v]));
        return h;
    }

    /// Scalar part of an endomorphism of an indecomposable; units are exactly the
    /// endomorphisms with nonzero scalar part.
    Scalar scalar_part(const OrbitMorphism& e) const { return top_scalar(module_label(e.source), Q_, e.f0); }

    /// Cone of f as a sorted list of object labels.
    ObjectList cone(const OrbitMorphism& f) const {
        const auto X = module(f.source);
        const auto L = module(f.target);
        ObjectList out;
        if (variant_ == Variant::ClusterTube) {
            // 0 -> cok(tau^-1 f0) -> Z -> ker f0 -> 0 induced from f1; the cone is S Z = tau Z.
            const auto tL = twist(L);
            const auto kc = kernel_cokernel_parts(F_, X, L, f.f0);
            const auto tkc = kernel_cokernel_parts(F_, twist(X), tL, twist_components(f.f0));
            std::vector<Matrix> c;
            const std::size_t n = X.dims.size();
            for (std::size_t v = 0; v < n; ++v) {
                c.push_back(multiply(F_, tkc.proj[(v + 1) % n], multiply(F_, f.f1[v], kc.incl[v])));
            }
            const auto Z = extension_middle_rep(kc.ker, tkc.cok, c);
            for (const auto& lab : decompose(F_, Z)) out.push_back(to_signed(ar_translate(Q_, lab)));
        } else {
            const int p = parity(f.source);
            if (parity(f.source) == parity(f.target)) {
                const auto kc = kernel_cokernel_parts(F_, X, L, f.f0);
                for (const auto& lab : decompose(F_, kc.cok)) out.push_back(label_of(lab, p));
                for (const auto& lab : decompose(F_, kc.ker)) out.push_back(label_of(lab, p + 1));
            } else {
                const auto E = extension_middle_rep(X, L, f.f1);
                for (const auto& lab : decompose(F_, E)) out.push_back(label_of(lab, p + 1));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Right multiplication by End(X) basis elements, as matrices on Hom(X, L) coordinates.
    std::vector<Matrix> right_action(const OrbitHomSpace& space, const OrbitHomSpace& end) const {
        const std::size_t D = space.dim(), E = end.dim();
        std::vector<Matrix> out(E, Matrix(D, D));
        const auto hb = space.basis();
        const auto eb = end.basis();
        for (std::size_t k = 0; k < E; ++k)
            for (std::size_t j = 0; j < D; ++j) {
                const auto col = space.coords(compose(hb[j], eb[k]));
                for (std::size_t i = 0; i < D; ++i) out[k](i, j) = col[i];
            }
        return out;
    }

    /// All automorphisms of X as matrices acting on Hom(X, L) coordinates.
    std::vector<Matrix> aut_action(const OrbitHomSpace& space) const {
        const auto end = hom_space(space.source(), space.source());
        return unit_action(F_, end.dim(), right_action(space, end), space.dim(),
                           [&](const Column& a) { return scalar_part(end.element(a)) != 0; });
    }

    /// Every unit of End(X).
    std::vector<OrbitMorphism> aut_elements(int X) const {
        const auto end = hom_space(X, X);
        std::vector<OrbitMorphism> out;
        std::vector<Column> basis;
        for (std::size_t k = 0; k < end.dim(); ++k) {
            Column e(end.dim(), 0);
            e[k] = 1;
            basis.push_back(e);
        }
        for_each_in_span(F_, basis, end.dim(), [&](const Column& a) {
            auto e = end.element(a);
            if (scalar_part(e) != 0) out.push_back(std::move(e));
        });
        return out;
    }

    /// Aut(X)-orbits on Hom(X, L) grouped by cone, with the S1/S2/S3 split.
    std::map<ObjectList, OrbitCells> census(int X, int L) const {
        const auto space = hom_space(X, L);
        const auto group = aut_action(space);
        const std::size_t d0 = space.deg0_dim(), D = space.dim();
        std::map<ObjectList, OrbitCells> out;
        for_each_orbit(F_, D, group, [&](const Column& rep, const std::vector<Column>& members) {
            auto& cell = out[cone(space.element(rep))];
            bool f0_zero = true, f1_zero = true;
            for (std::size_t i = 0; i < D; ++i) (i < d0 ? f0_zero : f1_zero) &= rep[i] == 0;
            if (f0_zero && !f1_zero) {
                ++cell.s3;
                return;
            }
            for (const auto& m : members) {
                bool pure = true;
                for (std::size_t i = d0; i < D; ++i) pure &= m[i] == 0;
                if (pure) {
                    ++cell.s1;
                    return;
                }
            }
            ++cell.s2;
        });
        return out;
    }

    OrbitCells orbit_partition(int X, int L, int Y) const {
        const auto c = census(X, L);
        auto it = c.find(ObjectList{Y});
        return it == c.end() ? OrbitCells{} : it->second;
    }

private:
    Variant variant_;
    FieldSpec F_;
    CyclicQuiver Q_;
    int max_length_;
};

inline OrbitHomSpace::OrbitHomSpace(const OrbitCategory& C, int X, int Y)
    : X_(X), Y_(Y), active0_(C.active_parts(X, Y).first), active1_(C.active_parts(X, Y).second),
      deg0_(C.field(), C.module(X), C.module(Y)), deg1_(C.field(), C.module(X), C.twist(C.module(Y))) {}

inline OrbitMorphism OrbitHomSpace::element(const Column& coords) const {
    if (coords.size() != dim()) throw std::invalid_argument("OrbitHomSpace: coordinate length mismatch");
    const std::size_t d0 = deg0_dim();
    OrbitMorphism f{X_, Y_, {}, {}};
    if (active0_) {
        f.f0 = deg0_.hom_combination(Column(coords.begin(), coords.begin() + d0));
    } else {
        f.f0 = zero_components(deg0_.source(), deg0_.target());
    }
    if (active1_) {
        f.f1 = deg1_.ext_combination(Column(coords.begin() + d0, coords.end()));
    } else {
        f.f1 = zero_cocycle(deg1_.source(), deg1_.target());
    }
    return f;
}

inline Column OrbitHomSpace::coords(const OrbitMorphism& f) const {
    Column out;
    if (active0_) out = deg0_.hom_coords(f.f0);
    if (active1_) {
        auto c1 = deg1_.ext_coords(f.f1);
        out.insert(out.end(), c1.begin(), c1.end());
    }
    return out;
}

inline std::vector<OrbitMorphism> OrbitHomSpace::basis() const {
    std::vector<OrbitMorphism> out;
    for (std::size_t k = 0; k < dim(); ++k) {
        Column e(dim(), 0);
        e[k] = 1;
        out.push_back(element(e));
    }
    return out;
}

}  // namespace tubehall
