#pragma once

// Quiver combinatorics of the covering Q -> Qbar:
//   Q    = |d| copies of A_inf_inf, vertices (j, i), arrows (j, i) -> (j, i - 1)
//   Qbar = m copies of the cyclic quiver with n' vertices, arrows (j, i) -> (j, i - 1 mod n')
// with the automorphisms sigma, sigma-bar and the covering map C. All floors are toward -inf.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tubehall/derived_tube.hpp"
#include "tubehall/orbit_atlas.hpp"

namespace tubehall {

struct VertexQ {
    int j = 0;
    std::int64_t i = 0;
    friend auto operator<=>(const VertexQ&, const VertexQ&) = default;
    friend bool operator==(const VertexQ&, const VertexQ&) = default;
};

struct VertexBarQ {
    int j = 0;
    int i = 0;
    friend auto operator<=>(const VertexBarQ&, const VertexBarQ&) = default;
    friend bool operator==(const VertexBarQ&, const VertexBarQ&) = default;
};

struct CoverContext {
    int d = -1, n = 1;
    int m = 1, n_prime = 1, c = 0;

    CoverContext(int d_, int n_) : d(d_), n(n_) {
        if (d == 0) throw std::invalid_argument("covering needs d != 0");
        const auto inv = derive_invariants_from_d(d, n);
        m = inv.m;
        n_prime = inv.n_prime;
        c = inv.c;
    }
    int abs_d() const { return std::abs(d); }
    int sgn_d() const { return d > 0 ? 1 : -1; }
};

inline VertexQ sigma(const CoverContext& ctx, const VertexQ& v) {
    if (v.j >= 1) return {v.j - 1, v.i};
    return {ctx.abs_d() - 1, v.i + ctx.sgn_d()};
}

inline VertexQ sigma_inv(const CoverContext& ctx, const VertexQ& v) {
    if (v.j <= ctx.abs_d() - 2) return {v.j + 1, v.i};
    return {0, v.i - ctx.sgn_d()};
}

/// sigma^k in closed form: sigma walks j downwards and carries sgn(d) into i on wrap-around.
inline VertexQ sigma_pow(const CoverContext& ctx, const VertexQ& v, std::int64_t k) {
    const std::int64_t t = v.j - k;
    const std::int64_t q = floor_div(t, ctx.abs_d());
    return {static_cast<int>(t - q * ctx.abs_d()), v.i - q * ctx.sgn_d()};
}

inline VertexBarQ cover_map(const CoverContext& ctx, const VertexQ& v) {
    const std::int64_t t = floor_div(v.j, ctx.m);
    const std::int64_t i = v.i - t * ctx.c;
    return {static_cast<int>(v.j - t * ctx.m), static_cast<int>(floor_mod(i, ctx.n_prime))};
}

inline VertexBarQ bar_sigma(const CoverContext& ctx, const VertexBarQ& v) {
    if (v.j >= 1) return {v.j - 1, v.i};
    return {ctx.m - 1, static_cast<int>(floor_mod(v.i + ctx.c, ctx.n_prime))};
}

inline VertexBarQ bar_sigma_inv(const CoverContext& ctx, const VertexBarQ& v) {
    if (v.j <= ctx.m - 2) return {v.j + 1, v.i};
    return {0, static_cast<int>(floor_mod(v.i - ctx.c, ctx.n_prime))};
}

struct DiagramReport {
    std::uint64_t vertices_checked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks on every vertex with |i| <= window: C sigma^-1 = sigma-bar^-1 C, C sigma^n = C,
/// sigma and C send arrows to arrows, and C hits every vertex of Qbar.
inline DiagramReport check_diagrams(const CoverContext& ctx, std::int64_t window) {
    DiagramReport rep;
    auto show = [](const VertexQ& v) { return "(" + std::to_string(v.j) + "," + std::to_string(v.i) + ")"; };
    std::set<VertexBarQ> image;
    for (int j = 0; j < ctx.abs_d(); ++j) {
        for (std::int64_t i = -window; i <= window; ++i) {
            const VertexQ v{j, i};
            ++rep.vertices_checked;
            const auto Cv = cover_map(ctx, v);
            image.insert(Cv);
            if (sigma_inv(ctx, sigma(ctx, v)) != v || sigma(ctx, sigma_inv(ctx, v)) != v) {
                rep.violations.push_back("sigma not invertible at " + show(v));
            }
            if (cover_map(ctx, sigma_inv(ctx, v)) != bar_sigma_inv(ctx, Cv)) {
                rep.violations.push_back("square fails at " + show(v));
            }
            if (cover_map(ctx, sigma_pow(ctx, v, ctx.n)) != Cv) {
                rep.violations.push_back("C o sigma^n != C at " + show(v));
            }
            // arrow v -> (j, i-1)
            const VertexQ w{j, i - 1};
            const auto Cw = cover_map(ctx, w);
            if (Cw.j != Cv.j || Cw.i != floor_mod(Cv.i - 1, ctx.n_prime)) {
                rep.violations.push_back("arrow image fails at " + show(v));
            }
            const auto sv = sigma(ctx, v), sw = sigma(ctx, w);
            if (sw.j != sv.j || sw.i != sv.i - 1) rep.violations.push_back("sigma breaks arrow at " + show(v));
        }
    }
    for (int j = 0; j < ctx.m; ++j)
        for (int i = 0; i < ctx.n_prime; ++i)
            if (!image.count({j, i}) && window >= 2 * ctx.n) {
                rep.violations.push_back("vertex (" + std::to_string(j) + "," + std::to_string(i) + ") of Qbar not hit");
            }
    return rep;
}

using DimQ = std::map<VertexQ, std::uint64_t>;
using DimBarQ = std::map<VertexBarQ, std::uint64_t>;

inline DimBarQ push_dims(const CoverContext& ctx, const DimQ& X) {
    DimBarQ out;
    for (const auto& [v, d] : X)
        if (d) out[cover_map(ctx, v)] += d;
    return out;
}

struct OrbitSumReport {
    DimBarQ pushed;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Pull back the pushed dimensions and compare, on the window, with the sum over p of the
/// sigma^{np}-translates of X.
inline OrbitSumReport orbit_sum_dims(const CoverContext& ctx, const DimQ& X, std::int64_t window) {
    OrbitSumReport rep;
    rep.pushed = push_dims(ctx, X);
    // sigma^{np} moves i by about np/|d|, so this many p reach every support vertex
    std::int64_t reach = 0;
    for (const auto& [v, d] : X) reach = std::max<std::int64_t>(reach, (std::abs(v.i) + window + 2) * ctx.abs_d());
    for (int j = 0; j < ctx.abs_d(); ++j)
        for (std::int64_t i = -window; i <= window; ++i) {
            const VertexQ v{j, i};
            auto it = rep.pushed.find(cover_map(ctx, v));
            const std::uint64_t pulled = it == rep.pushed.end() ? 0 : it->second;
            // (sigma^{np} X)_v = X_{sigma^{-np} v}
            std::uint64_t orbit = 0;
            for (std::int64_t p = -reach; p <= reach; ++p) {
                auto x = X.find(sigma_pow(ctx, v, -static_cast<std::int64_t>(ctx.n) * p));
                if (x != X.end()) orbit += x->second;
            }
            if (orbit != pulled) {
                rep.violations.push_back("mismatch at (" + std::to_string(j) + "," + std::to_string(i) + ")");
            }
        }
    return rep;
}

/// p' = ceil(p / m), j_p = m + p - m p'.
inline std::pair<std::int64_t, std::int64_t> index_bookkeeping(int m, std::int64_t p) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    const std::int64_t pp = ceil_div(p, m);
    return {pp, m + p - m * pp};
}

// ---------------------------------------------------------------------------------------
// Hom-dimension shadow of the reindexing behind the functor Psi.

/// Sigma^s tau^k applied to a stalk object of D^b(T_{n'}).
inline StalkObject shift_translate(const CyclicQuiver& Q, const StalkObject& X, std::int64_t s, std::int64_t k) {
    StalkObject out;
    for (const auto& st : X) out.push_back({static_cast<int>(st.shift + s), ar_translate(Q, st.label, static_cast<int>(k))});
    return canonical(out);
}

using StalkTuple = std::vector<StalkObject>;  // (X_0, ..., X_{m-1})

/// (Sigma sigma-bar^-1)(Y) = Sigma (tau^c Y_{m-1}, Y_0, ..., Y_{m-2}); inverse for negative steps.
inline StalkTuple twist_tuple(const CyclicQuiver& Q, int c, StalkTuple Y, std::int64_t steps) {
    const std::size_t m = Y.size();
    for (; steps > 0; --steps) {
        StalkTuple Z(m);
        Z[0] = shift_translate(Q, Y[m - 1], 1, c);
        for (std::size_t j = 1; j < m; ++j) Z[j] = shift_translate(Q, Y[j - 1], 1, 0);
        Y = std::move(Z);
    }
    for (; steps < 0; ++steps) {
        StalkTuple Z(m);
        Z[m - 1] = shift_translate(Q, Y[0], -1, -c);
        for (std::size_t j = 0; j + 1 < m; ++j) Z[j] = shift_translate(Q, Y[j + 1], -1, 0);
        Y = std::move(Z);
    }
    return Y;
}

struct PsiDims {
    std::uint64_t lhs = 0;        // sum over p with the (p', j_p) expansion
    std::uint64_t rhs = 0;        // triple sum over (p', j, j')
    std::uint64_t iterated = 0;   // sum over p by iterating the twist functor
};

class WindowTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dimensions of both sides of the reindexing identity for tuples X, Y of m stalk objects
/// in D^b(T_{n'}), summed over p' in [-window, window]. Hom vanishes unless the relative
/// shift is 0 or 1, so only finitely many p' can contribute; WindowTooSmall is thrown when
/// one of them lies outside the window.
inline PsiDims psi_dim_identity(const CoverContext& ctx, const DerivedTube& D, const StalkTuple& X,
                                const StalkTuple& Y, std::int64_t window) {
    const int m = ctx.m;
    const int c = ctx.c;
    const auto& Q = D.quiver();
    if (static_cast<int>(X.size()) != m || static_cast<int>(Y.size()) != m) {
        throw std::invalid_argument("psi_dim_identity: tuples must have m entries");
    }
    auto hom = [&](const StalkObject& A, const StalkObject& B) { return static_cast<std::uint64_t>(D.hom_dim(A, B)); };
    auto lhs_term = [&](std::int64_t p) {
        const auto [pp, jp] = index_bookkeeping(m, p);
        std::uint64_t term = 0;
        for (std::int64_t j = 0; j < jp; ++j) term += hom(X[j], shift_translate(Q, Y[m - jp + j], p, c * pp));
        for (std::int64_t j = jp; j < m; ++j) term += hom(X[j], shift_translate(Q, Y[j - jp], p, c * (pp - 1)));
        return term;
    };
    auto rhs_term = [&](std::int64_t pp) {
        std::uint64_t term = 0;
        for (int j = 0; j < m; ++j)
            for (int jj = 0; jj < m; ++jj)
                term += hom(X[j], shift_translate(Q, Y[jj], j - jj + static_cast<std::int64_t>(m) * pp, c * pp));
        return term;
    };

    int spread = 0;
    for (const auto& obj : X)
        for (const auto& a : obj)
            for (const auto& tup : Y)
                for (const auto& b : tup) spread = std::max(spread, std::abs(a.shift - b.shift));
    const std::int64_t reach = (spread + 2 * m + 2) / m + 1;

    PsiDims out;
    for (std::int64_t pp = -std::max(window, reach); pp <= std::max(window, reach); ++pp) {
        const bool inside = std::abs(pp) <= window;
        const std::uint64_t r = rhs_term(pp);
        std::uint64_t l = 0;
        // the p with ceil(p / m) = pp
        for (std::int64_t p = m * pp - m + 1; p <= m * pp; ++p) {
            l += lhs_term(p);
            if (inside) {
                const auto twisted = twist_tuple(Q, c, Y, p);
                for (int j = 0; j < m; ++j) out.iterated += hom(X[j], twisted[j]);
            }
        }
        if (!inside && (l || r)) throw WindowTooSmall("psi_dim_identity: nonzero terms outside the window");
        if (inside) {
            out.lhs += l;
            out.rhs += r;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------
// DOT output

inline std::string cover_dot(const CoverContext& ctx, std::int64_t window) {
    std::ostringstream os;
    os << "digraph cover {\n  rankdir=LR;\n  subgraph cluster_Q {\n    label=\"Q\";\n";
    for (int j = 0; j < ctx.abs_d(); ++j)
        for (std::int64_t i = -window; i <= window; ++i) {
            const auto b = cover_map(ctx, {j, i});
            os << "    \"q" << j << "_" << i << "\" [label=\"(" << j << "," << i << ")\\nC=(" << b.j << "," << b.i
               << ")\"];\n";
            if (i > -window) os << "    \"q" << j << "_" << i << "\" -> \"q" << j << "_" << i - 1 << "\";\n";
        }
    os << "  }\n  subgraph cluster_Qbar {\n    label=\"Qbar\";\n";
    for (int j = 0; j < ctx.m; ++j)
        for (int i = 0; i < ctx.n_prime; ++i) {
            os << "    \"b" << j << "_" << i << "\" [label=\"(" << j << "," << i << ")\"];\n";
            os << "    \"b" << j << "_" << i << "\" -> \"b" << j << "_" << floor_mod(i - 1, ctx.n_prime) << "\";\n";
        }
    os << "  }\n}\n";
    return os.str();
}

/// AR quivers of `tubes` tubes of the given rank, truncated at height `height`. Vertices are
/// (socle, length); solid arrows are irreducible maps, dashed arrows the AR translation.
inline std::string ar_quiver_dot(int tubes, int rank, int height) {
    std::ostringstream os;
    os << "digraph ar_quiver {\n";
    const CyclicQuiver Q(rank);
    for (int t = 0; t < tubes; ++t) {
        os << "  subgraph cluster_tube" << t << " {\n    label=\"tube " << t << " (rank " << rank << ")\";\n";
        auto name = [&](int s, int l) { return "\"t" + std::to_string(t) + "_" + std::to_string(s) + "_" + std::to_string(l) + "\""; };
        for (int l = 1; l <= height; ++l)
            for (int s = 1; s <= rank; ++s) {
                os << "    " << name(s, l) << " [label=\"(" << s << "," << l << ")\"];\n";
                if (l < height) {
                    // inclusion of (s, l) into (s, l + 1), quotient of (s, l + 1) onto its top part
                    os << "    " << name(s, l) << " -> " << name(s, l + 1) << ";\n";
                    const auto top = ar_translate(Q, {s, l}, -1);
                    os << "    " << name(s, l + 1) << " -> " << name(top.socle, l) << ";\n";
                }
                const auto tl = ar_translate(Q, {s, l});
                os << "    " << name(s, l) << " -> " << name(tl.socle, l) << " [style=dashed];\n";
            }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace tubehall
