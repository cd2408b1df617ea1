#pragma once

// Nilpotent representations of the cyclic quiver with n vertices (the standard tube T_n).
//
// Vertices are 1..n in labels and 0..n-1 in storage; arrow i goes from vertex i to vertex
// i+1 (mod n). An indecomposable is uniserial: a chain top -> ... -> socle following the
// arrows, so its socle sits at the end of the chain.

#include <algorithm>
#include <compare>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tubehall/exactfield.hpp"

namespace tubehall {

struct CyclicQuiver {
    int n = 1;

    explicit CyclicQuiver(int vertices) : n(vertices) {
        if (n < 1) throw std::invalid_argument("CyclicQuiver: need at least one vertex");
    }
    int wrap(int v) const noexcept { return ((v % n) + n) % n; }
    friend bool operator==(const CyclicQuiver&, const CyclicQuiver&) = default;
};

/// Indecomposable tube object named by socle vertex (1-based) and length.
struct IndecLabel {
    int socle = 1;
    int length = 1;

    // canonical order: by length, then socle vertex
    friend auto operator<=>(const IndecLabel& a, const IndecLabel& b) {
        if (auto c = a.length <=> b.length; c != 0) return c;
        return a.socle <=> b.socle;
    }
    friend bool operator==(const IndecLabel&, const IndecLabel&) = default;
};

inline void check_label(const CyclicQuiver& Q, const IndecLabel& L) {
    if (L.length < 1 || L.socle < 1 || L.socle > Q.n) {
        throw std::invalid_argument("IndecLabel: socle " + std::to_string(L.socle) + ", length " +
                                    std::to_string(L.length) + " invalid for n=" + std::to_string(Q.n));
    }
}

// For n = 2: <m> has socle 1, <-m> has socle 2.
inline int to_signed(const IndecLabel& L) { return L.socle == 1 ? L.length : -L.length; }
inline IndecLabel from_signed(int m) {
    if (m == 0) throw std::invalid_argument("from_signed: label 0 does not name an object");
    return m > 0 ? IndecLabel{1, m} : IndecLabel{2, -m};
}

/// AR translation: shifts the socle vertex forward along the arrows.
inline IndecLabel ar_translate(const CyclicQuiver& Q, const IndecLabel& L, int power = 1) {
    check_label(Q, L);
    return {Q.wrap(L.socle - 1 + power) + 1, L.length};
}

struct NilpRep {
    CyclicQuiver quiver{1};
    std::vector<std::size_t> dims;
    std::vector<Matrix> arrows;  // arrows[i] : dims[i] -> dims[i+1]

    std::size_t total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }
    std::size_t next(std::size_t v) const { return (v + 1) % dims.size(); }

    void validate() const {
        if (dims.size() != static_cast<std::size_t>(quiver.n) || arrows.size() != dims.size()) {
            throw std::invalid_argument("NilpRep: vertex count mismatch");
        }
        for (std::size_t v = 0; v < dims.size(); ++v) {
            if (arrows[v].rows() != dims[next(v)] || arrows[v].cols() != dims[v]) {
                throw std::invalid_argument("NilpRep: arrow " + std::to_string(v + 1) + " has wrong shape");
            }
        }
    }
    friend bool operator==(const NilpRep&, const NilpRep&) = default;
};

inline NilpRep zero_rep(const CyclicQuiver& Q) {
    NilpRep r{Q, std::vector<std::size_t>(Q.n, 0), std::vector<Matrix>(Q.n)};
    return r;
}

/// Composite of `steps` consecutive arrow maps starting at vertex `start` (0-based).
inline Matrix path_map(const FieldSpec& F, const NilpRep& M, std::size_t start, std::size_t steps) {
    Matrix acc = Matrix::identity(M.dims[start]);
    std::size_t v = start;
    for (std::size_t s = 0; s < steps; ++s) {
        acc = multiply(F, M.arrows[v], acc);
        v = M.next(v);
    }
    return acc;
}

inline bool is_nilpotent(const FieldSpec& F, const NilpRep& M) {
    const std::size_t N = M.total_dim();
    for (std::size_t v = 0; v < M.dims.size(); ++v)
        if (!path_map(F, M, v, N).is_zero()) return false;
    return true;
}

/// Positions of a uniserial chain: position k (0 = top) lives at vertex top+k and is the
/// (k / n)-th basis vector there.
inline NilpRep build_indec(const CyclicQuiver& Q, const IndecLabel& L) {
    check_label(Q, L);
    const int n = Q.n;
    const int top = Q.wrap(L.socle - 1 - (L.length - 1));
    NilpRep M{Q, std::vector<std::size_t>(n, 0), {}};
    for (int k = 0; k < L.length; ++k) ++M.dims[Q.wrap(top + k)];
    for (int v = 0; v < n; ++v) M.arrows.emplace_back(M.dims[Q.wrap(v + 1)], M.dims[v]);
    for (int k = 0; k + 1 < L.length; ++k) {
        const int v = Q.wrap(top + k);
        const int idx_here = k / n;
        const int idx_next = (k + 1) / n;
        M.arrows[v](idx_next, idx_here) = 1;
    }
    return M;
}

inline NilpRep direct_sum(const CyclicQuiver& Q, const std::vector<NilpRep>& parts) {
    NilpRep S = zero_rep(Q);
    for (const auto& P : parts)
        for (int v = 0; v < Q.n; ++v) S.dims[v] += P.dims[v];
    for (int v = 0; v < Q.n; ++v) {
        Matrix A(S.dims[Q.wrap(v + 1)], S.dims[v]);
        std::size_t r0 = 0, c0 = 0;
        for (const auto& P : parts) {
            const auto& B = P.arrows[v];
            for (std::size_t i = 0; i < B.rows(); ++i)
                for (std::size_t j = 0; j < B.cols(); ++j) A(r0 + i, c0 + j) = B(i, j);
            r0 += B.rows();
            c0 += B.cols();
        }
        S.arrows[v] = std::move(A);
    }
    return S;
}

inline NilpRep build_object(const CyclicQuiver& Q, const std::vector<IndecLabel>& labels) {
    std::vector<NilpRep> parts;
    for (const auto& L : labels) parts.push_back(build_indec(Q, L));
    return direct_sum(Q, parts);
}

/// tau^k as a vertex rotation: (tau^k M)_v = M_{v-k}.
inline NilpRep rotate(const NilpRep& M, int k) {
    const auto& Q = M.quiver;
    NilpRep R{Q, std::vector<std::size_t>(Q.n), std::vector<Matrix>(Q.n)};
    for (int v = 0; v < Q.n; ++v) {
        R.dims[v] = M.dims[Q.wrap(v - k)];
        R.arrows[v] = M.arrows[Q.wrap(v - k)];
    }
    return R;
}

/// Per-vertex matrices rotated the same way (for morphism components and cocycles).
inline std::vector<Matrix> rotate_components(const CyclicQuiver& Q, const std::vector<Matrix>& comps, int k) {
    std::vector<Matrix> out(comps.size());
    for (int v = 0; v < Q.n; ++v) out[v] = comps[Q.wrap(v - k)];
    return out;
}

struct RepMorphism {
    std::shared_ptr<const NilpRep> source;
    std::shared_ptr<const NilpRep> target;
    std::vector<Matrix> components;  // components[v] : source.dims[v] -> target.dims[v]
};

/// Element of the cocycle space for Ext^1(source, target): c[v] : source_v -> target_{v+1}.
struct ExtCocycle {
    std::shared_ptr<const NilpRep> source;
    std::shared_ptr<const NilpRep> target;
    std::vector<Matrix> components;
};

inline std::vector<Matrix> zero_components(const NilpRep& M, const NilpRep& N) {
    std::vector<Matrix> c;
    for (std::size_t v = 0; v < M.dims.size(); ++v) c.emplace_back(N.dims[v], M.dims[v]);
    return c;
}

inline std::vector<Matrix> zero_cocycle(const NilpRep& M, const NilpRep& N) {
    std::vector<Matrix> c;
    for (std::size_t v = 0; v < M.dims.size(); ++v) c.emplace_back(N.dims[M.next(v)], M.dims[v]);
    return c;
}

inline std::vector<Matrix> identity_components(const NilpRep& M) {
    std::vector<Matrix> c;
    for (auto d : M.dims) c.push_back(Matrix::identity(d));
    return c;
}

inline bool commutes(const FieldSpec& F, const NilpRep& M, const NilpRep& N, const std::vector<Matrix>& phi) {
    for (std::size_t v = 0; v < M.dims.size(); ++v) {
        if (multiply(F, N.arrows[v], phi[v]) != multiply(F, phi[M.next(v)], M.arrows[v])) return false;
    }
    return true;
}

inline std::vector<Matrix> compose_components(const FieldSpec& F, const std::vector<Matrix>& g,
                                              const std::vector<Matrix>& f) {
    std::vector<Matrix> out;
    for (std::size_t v = 0; v < f.size(); ++v) out.push_back(multiply(F, g[v], f[v]));
    return out;
}

/// Cocycle c : M -> N[+1] precomposed with a morphism a : M' -> M (pullback of the extension).
inline std::vector<Matrix> pullback_cocycle(const FieldSpec& F, const std::vector<Matrix>& c,
                                            const std::vector<Matrix>& a) {
    return compose_components(F, c, a);
}

/// Cocycle c : M -> N[+1] followed by a morphism h : N -> N' (pushout of the extension).
inline std::vector<Matrix> pushout_cocycle(const FieldSpec& F, const std::vector<Matrix>& h,
                                           const std::vector<Matrix>& c) {
    std::vector<Matrix> out;
    const std::size_t n = c.size();
    for (std::size_t v = 0; v < n; ++v) out.push_back(multiply(F, h[(v + 1) % n], c[v]));
    return out;
}

// Flatten per-vertex matrices into one coordinate column (vertex by vertex, row-major).
inline Column flatten(const std::vector<Matrix>& comps) {
    Column out;
    for (const auto& m : comps) out.insert(out.end(), m.data().begin(), m.data().end());
    return out;
}

inline std::vector<Matrix> unflatten(const Column& flat, const std::vector<std::pair<std::size_t, std::size_t>>& shapes) {
    std::vector<Matrix> out;
    std::size_t off = 0;
    for (auto [r, c] : shapes) {
        std::vector<Scalar> d(flat.begin() + off, flat.begin() + off + r * c);
        out.emplace_back(r, c, std::move(d));
        off += r * c;
    }
    if (off != flat.size()) throw std::invalid_argument("unflatten: length mismatch");
    return out;
}

/// Hom(M, N) and Ext^1(M, N) computed from the map
///   delta : (h_v)_v  |->  (N_v h_v - h_{v+1} M_v)_v,
/// whose kernel is Hom and whose cokernel is Ext^1.
class HomExt {
public:
    HomExt(const FieldSpec& F, NilpRep M, NilpRep N)
        : F_(F), M_(std::make_shared<const NilpRep>(std::move(M))),
          N_(std::make_shared<const NilpRep>(std::move(N))) {
        if (!(M_->quiver == N_->quiver)) throw std::invalid_argument("HomExt: different quivers");
        build();
    }

    const NilpRep& source() const { return *M_; }
    const NilpRep& target() const { return *N_; }
    std::shared_ptr<const NilpRep> source_ptr() const { return M_; }
    std::shared_ptr<const NilpRep> target_ptr() const { return N_; }

    std::size_t hom_dim() const { return hom_basis_.size(); }
    std::size_t ext_dim() const { return ext_.lift.cols(); }

    const std::vector<std::pair<std::size_t, std::size_t>>& hom_shapes() const { return hom_shapes_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& cocycle_shapes() const { return co_shapes_; }

    /// i-th Hom basis element as per-vertex matrices.
    std::vector<Matrix> hom_element(std::size_t i) const { return unflatten(hom_basis_[i], hom_shapes_); }
    /// i-th Ext basis element as a cocycle representative.
    std::vector<Matrix> ext_element(std::size_t i) const { return unflatten(ext_.lift.column(i), co_shapes_); }

    std::vector<Matrix> hom_combination(const Column& coeff) const {
        Column flat(hom_len_, 0);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (!coeff[i]) continue;
            for (std::size_t r = 0; r < hom_len_; ++r) flat[r] = F_.add(flat[r], F_.mul(coeff[i], hom_basis_[i][r]));
        }
        return unflatten(flat, hom_shapes_);
    }
    std::vector<Matrix> ext_combination(const Column& coeff) const {
        return unflatten(apply(F_, ext_.lift, coeff), co_shapes_);
    }

    /// Coordinates of a morphism M -> N in the Hom basis.
    Column hom_coords(const std::vector<Matrix>& phi) const {
        const Column flat = flatten(phi);
        Column out;
        for (auto c : hom_free_) out.push_back(flat[c]);
        return out;
    }
    /// Coordinates of the class of a cocycle M -> N[+1] in the Ext basis.
    Column ext_coords(const std::vector<Matrix>& cocycle) const { return apply(F_, ext_.project, flatten(cocycle)); }

    /// True when the cocycle is a coboundary.
    bool is_coboundary(const std::vector<Matrix>& cocycle) const {
        for (auto x : ext_coords(cocycle))
            if (x) return false;
        return true;
    }

    std::vector<RepMorphism> hom_basis() const {
        std::vector<RepMorphism> out;
        for (std::size_t i = 0; i < hom_dim(); ++i) out.push_back({M_, N_, hom_element(i)});
        return out;
    }
    std::vector<ExtCocycle> ext_basis() const {
        std::vector<ExtCocycle> out;
        for (std::size_t i = 0; i < ext_dim(); ++i) out.push_back({M_, N_, ext_element(i)});
        return out;
    }

private:
    void build() {
        const auto& M = *M_;
        const auto& N = *N_;
        const std::size_t n = M.dims.size();
        std::vector<std::size_t> hoff(n + 1, 0), coff(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) {
            hom_shapes_.emplace_back(N.dims[v], M.dims[v]);
            co_shapes_.emplace_back(N.dims[M.next(v)], M.dims[v]);
            hoff[v + 1] = hoff[v] + N.dims[v] * M.dims[v];
            coff[v + 1] = coff[v] + N.dims[M.next(v)] * M.dims[v];
        }
        hom_len_ = hoff[n];
        const std::size_t co_len = coff[n];
        Matrix delta(co_len, hom_len_);
        for (std::size_t v = 0; v < n; ++v) {
            const std::size_t w = M.next(v);
            const auto& Na = N.arrows[v];  // N_v -> N_w
            const auto& Ma = M.arrows[v];  // M_v -> M_w
            const std::size_t mv = M.dims[v], mw = M.dims[w];
            // (Na h_v)[a][b] = sum_c Na[a][c] h_v[c][b]
            for (std::size_t a = 0; a < Na.rows(); ++a)
                for (std::size_t b = 0; b < mv; ++b)
                    for (std::size_t c = 0; c < Na.cols(); ++c) {
                        auto& e = delta(coff[v] + a * mv + b, hoff[v] + c * mv + b);
                        e = F_.add(e, Na(a, c));
                    }
            // (h_w Ma)[a][b] = sum_c h_w[a][c] Ma[c][b]
            for (std::size_t a = 0; a < N.dims[w]; ++a)
                for (std::size_t b = 0; b < mv; ++b)
                    for (std::size_t c = 0; c < mw; ++c) {
                        auto& e = delta(coff[v] + a * mv + b, hoff[w] + a * mw + c);
                        e = F_.sub(e, Ma(c, b));
                    }
        }
        hom_basis_ = kernel_basis(F_, delta);
        hom_free_ = free_columns(F_, delta);
        ext_ = complement_of(F_, delta, co_len);
    }

    FieldSpec F_;
    std::shared_ptr<const NilpRep> M_, N_;
    std::vector<std::pair<std::size_t, std::size_t>> hom_shapes_, co_shapes_;
    std::size_t hom_len_ = 0;
    std::vector<Column> hom_basis_;
    std::vector<std::size_t> hom_free_;
    Complement ext_;
};

inline std::vector<RepMorphism> hom_basis(const FieldSpec& F, const NilpRep& M, const NilpRep& N) {
    return HomExt(F, M, N).hom_basis();
}

inline std::vector<ExtCocycle> ext_basis(const FieldSpec& F, const NilpRep& M, const NilpRep& N) {
    return HomExt(F, M, N).ext_basis();
}

struct Extension {
    NilpRep middle;
    RepMorphism inclusion;   // N -> E
    RepMorphism projection;  // E -> M
};

/// Middle term of 0 -> N -> E -> M -> 0 for a cocycle c : M -> N[+1]; E_v = N_v (+) M_v with
/// arrow maps [[n_v, c_v], [0, m_v]].
inline NilpRep extension_middle_rep(const NilpRep& M, const NilpRep& N, const std::vector<Matrix>& c) {
    const std::size_t n = M.dims.size();
    NilpRep E{M.quiver, std::vector<std::size_t>(n), std::vector<Matrix>(n)};
    for (std::size_t v = 0; v < n; ++v) E.dims[v] = N.dims[v] + M.dims[v];
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t w = M.next(v);
        Matrix A(E.dims[w], E.dims[v]);
        for (std::size_t i = 0; i < N.dims[w]; ++i)
            for (std::size_t j = 0; j < N.dims[v]; ++j) A(i, j) = N.arrows[v](i, j);
        for (std::size_t i = 0; i < N.dims[w]; ++i)
            for (std::size_t j = 0; j < M.dims[v]; ++j) A(i, N.dims[v] + j) = c[v](i, j);
        for (std::size_t i = 0; i < M.dims[w]; ++i)
            for (std::size_t j = 0; j < M.dims[v]; ++j) A(N.dims[w] + i, N.dims[v] + j) = M.arrows[v](i, j);
        E.arrows[v] = std::move(A);
    }
    return E;
}

inline Extension extension_middle(const ExtCocycle& c) {
    const auto& M = *c.source;
    const auto& N = *c.target;
    auto E = std::make_shared<const NilpRep>(extension_middle_rep(M, N, c.components));
    std::vector<Matrix> iota, pi;
    for (std::size_t v = 0; v < M.dims.size(); ++v) {
        Matrix I(E->dims[v], N.dims[v]), P(M.dims[v], E->dims[v]);
        for (std::size_t i = 0; i < N.dims[v]; ++i) I(i, i) = 1;
        for (std::size_t i = 0; i < M.dims[v]; ++i) P(i, N.dims[v] + i) = 1;
        iota.push_back(std::move(I));
        pi.push_back(std::move(P));
    }
    return {*E, RepMorphism{c.target, E, std::move(iota)}, RepMorphism{E, c.source, std::move(pi)}};
}

struct KernelCokernel {
    NilpRep ker;
    RepMorphism inclusion;  // ker -> source
    NilpRep cok;
    RepMorphism projection;  // target -> cok
};

/// Vertex-wise kernel and cokernel with their induced arrow maps; operates on bare components.
struct KerCokParts {
    NilpRep ker;
    std::vector<Matrix> incl;
    NilpRep cok;
    std::vector<Matrix> proj;
};

inline KerCokParts kernel_cokernel_parts(const FieldSpec& F, const NilpRep& M, const NilpRep& N,
                                         const std::vector<Matrix>& f) {
    const std::size_t n = M.dims.size();
    KerCokParts out{NilpRep{M.quiver, std::vector<std::size_t>(n), std::vector<Matrix>(n)}, {},
                    NilpRep{M.quiver, std::vector<std::size_t>(n), std::vector<Matrix>(n)}, {}};
    std::vector<Subspace> kers;
    std::vector<Complement> coks;
    for (std::size_t v = 0; v < n; ++v) {
        const auto kb = kernel_basis(F, f[v]);
        const Matrix K = Matrix::from_columns(M.dims[v], kb);
        kers.push_back(subspace_with_coords(F, K));
        coks.push_back(complement_of(F, f[v], N.dims[v]));
        out.ker.dims[v] = K.cols();
        out.cok.dims[v] = coks.back().lift.cols();
        out.incl.push_back(K);
        out.proj.push_back(coks.back().project);
    }
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t w = M.next(v);
        out.ker.arrows[v] = multiply(F, kers[w].coords, multiply(F, M.arrows[v], kers[v].basis));
        out.cok.arrows[v] = multiply(F, coks[w].project, multiply(F, N.arrows[v], coks[v].lift));
    }
    return out;
}

inline KernelCokernel kernel_cokernel(const FieldSpec& F, const RepMorphism& f) {
    auto parts = kernel_cokernel_parts(F, *f.source, *f.target, f.components);
    auto K = std::make_shared<const NilpRep>(parts.ker);
    auto C = std::make_shared<const NilpRep>(parts.cok);
    return {parts.ker, RepMorphism{K, f.source, std::move(parts.incl)}, parts.cok,
            RepMorphism{f.target, C, std::move(parts.proj)}};
}

/// Krull-Schmidt decomposition from ranks of arrow-path composites.
///
/// With R(s, l) = rank of the l-step path map starting at s, R(s, l) - R(s, l+1) counts the
/// summands whose socle is s+l and whose length is at least l+1; a second difference then
/// isolates each (socle, length).
inline std::vector<IndecLabel> decompose(const FieldSpec& F, const NilpRep& M) {
    const auto& Q = M.quiver;
    const int n = Q.n;
    const int N = static_cast<int>(M.total_dim());
    // R[s][l] for l in [0, N+1]
    std::vector<std::vector<int>> R(n, std::vector<int>(N + 2, 0));
    for (int s = 0; s < n; ++s) {
        Matrix acc = Matrix::identity(M.dims[s]);
        int v = s;
        for (int l = 0; l <= N + 1; ++l) {
            R[s][l] = static_cast<int>(rank(F, acc));
            if (R[s][l] == 0) break;
            acc = multiply(F, M.arrows[v], acc);
            v = Q.wrap(v + 1);
        }
    }
    auto d1 = [&](int s, int l) { return R[Q.wrap(s)][l] - R[Q.wrap(s)][l + 1]; };
    std::vector<IndecLabel> out;
    for (int len = 1; len <= N; ++len) {
        for (int soc = 0; soc < n; ++soc) {
            const int mult = d1(soc - (len - 1), len - 1) - d1(soc - len, len);
            if (mult < 0) throw std::logic_error("decompose: negative multiplicity (not nilpotent?)");
            for (int i = 0; i < mult; ++i) out.push_back({soc + 1, len});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Scalar part of an endomorphism of an indecomposable: the coefficient of the top basis
/// vector in the image of the top basis vector. Invertible iff nonzero.
inline Scalar top_scalar(const IndecLabel& L, const CyclicQuiver& Q, const std::vector<Matrix>& endo) {
    const int top = Q.wrap(L.socle - 1 - (L.length - 1));
    return endo[top](0, 0);
}

}  // namespace tubehall
