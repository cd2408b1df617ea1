#pragma once

// Closed-form integral structure constants of the two Lie algebras, and the symbolic checks
// built on them: Jacobi, center, quotient by the center, CRT lifting of brute-force
// residues, and the Heisenberg basis.

#include <boost/rational.hpp>

#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tubehall/hall_lie.hpp"

namespace tubehall {

namespace detail {

inline bool is_even(int m) { return m % 2 == 0; }

// Relations 3)-6): even index e = +-2x, odd index o = 2y-1 or -2y+1.
inline LieElement even_odd(int e, int o) {
    const int x = std::abs(e) / 2;
    const int y = (std::abs(o) + 1) / 2;
    LieElement r;
    const bool ep = e > 0, op = o > 0;
    if (ep && op) {
        r.add(2 * (x + y) - 1, 1);
        if (x < y) r.add(2 * (y - x) - 1, 1);
        else r.add(2 * (x - y) + 1, -1);
    } else if (ep && !op) {
        r.add(-2 * (x + y) + 1, -1);
        if (x < y) r.add(2 * (x - y) + 1, -1);
        else r.add(2 * (y - x) - 1, 1);
    } else if (!ep && op) {
        r.add(2 * (x + y) - 1, -1);
        if (x < y) r.add(2 * (y - x) - 1, -1);
        else r.add(2 * (x - y) + 1, 1);
    } else {
        r.add(-2 * (x + y) + 1, 1);
        if (x < y) r.add(2 * (x - y) + 1, 1);
        else r.add(2 * (y - x) - 1, -1);
    }
    return r;
}

// Relation 7): p = 2x-1 > 0, n = -2y+1 < 0.
inline LieElement odd_pos_neg(int p, int n) {
    const int x = (p + 1) / 2;
    const int y = (-n + 1) / 2;
    LieElement r;
    if (x == y) {
        r.add(kZ, -1);
        r.add(4 * x - 2, 1);
        r.add(-4 * x + 2, -1);
        return r;
    }
    r.add(2 * x + 2 * y - 2, 1);
    r.add(-2 * x - 2 * y + 2, -1);
    if (x < y) {
        r.add(2 * x - 2 * y, 1);
        r.add(2 * y - 2 * x, -1);
    } else {
        r.add(2 * y - 2 * x, 1);
        r.add(2 * x - 2 * y, -1);
    }
    return r;
}

}  // namespace detail

/// Integral bracket of basis symbols in the cluster tube algebra.
inline LieElement cluster_closed(int a, int b) {
    using namespace detail;
    LieElement r;
    if (a == kZ && b == kZ) return r;
    if (a == kZ) {
        if (!is_even(b)) r.add(b, b > 0 ? 4 : -4);
        return r;
    }
    if (b == kZ) return -1 * cluster_closed(b, a);
    if (is_even(a) && is_even(b)) return r;
    if (!is_even(a) && !is_even(b)) {
        if ((a > 0) == (b > 0)) return r;
        return a > 0 ? odd_pos_neg(a, b) : -1 * odd_pos_neg(b, a);
    }
    return is_even(a) ? even_odd(a, b) : -1 * even_odd(b, a);
}

/// Integral bracket of basis symbols in the root category algebra.
inline LieElement root_closed(int a, int b) {
    LieElement r;
    if (a != kZ && b != kZ && a == -b) r.add(kZ, -a);
    return r;
}

inline LieElement closed_basis(Variant v, int a, int b) {
    return v == Variant::ClusterTube ? cluster_closed(a, b) : root_closed(a, b);
}

inline LieElement closed_bracket(Variant v, const LieElement& A, const LieElement& B) {
    LieElement out(A.modulus());
    for (auto [ka, ca] : A.terms())
        for (auto [kb, cb] : B.terms()) out += (ca * cb) * closed_basis(v, ka, kb);
    return out;
}

/// Basis {z} u {u_m : 0 < |m| <= max_index}, z first.
inline std::vector<int> basis_keys(int max_index) {
    std::vector<int> out{kZ};
    for (int m = -max_index; m <= max_index; ++m)
        if (m != 0) out.push_back(m);
    return out;
}

struct JacobiFailure {
    int a, b, c;
    LieElement value;
};

/// Jacobi identity on every triple of basis symbols with indices up to max_index.
inline std::vector<JacobiFailure> jacobi_failures(Variant v, int max_index) {
    const auto keys = basis_keys(max_index);
    std::vector<JacobiFailure> out;
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = i + 1; j < keys.size(); ++j)
            for (std::size_t k = j + 1; k < keys.size(); ++k) {
                const auto A = LieElement::basis(keys[i]), B = LieElement::basis(keys[j]), C = LieElement::basis(keys[k]);
                auto s = closed_bracket(v, A, closed_bracket(v, B, C)) + closed_bracket(v, B, closed_bracket(v, C, A)) +
                         closed_bracket(v, C, closed_bracket(v, A, B));
                if (!s.is_zero()) out.push_back({keys[i], keys[j], keys[k], s});
            }
    return out;
}

/// Pairs (x, m) where u_{2x} + u_{-2x} fails to commute with u_m.
inline std::vector<std::pair<int, int>> center_failures(int max_x, int max_index) {
    std::vector<std::pair<int, int>> out;
    for (int x = 1; x <= max_x; ++x) {
        const auto c = LieElement::basis(2 * x) + LieElement::basis(-2 * x);
        for (int key : basis_keys(max_index))
            if (!closed_bracket(Variant::ClusterTube, c, LieElement::basis(key)).is_zero()) out.push_back({x, key});
    }
    return out;
}

// ---------------------------------------------------------------------------------------
// Integral lifting

/// Solution of x = r_i (mod m_i) for possibly non-coprime moduli, as (x mod M, M), or
/// nullopt when the congruences are inconsistent.
inline std::optional<std::pair<std::int64_t, std::int64_t>> crt(const std::vector<std::int64_t>& residues,
                                                              const std::vector<std::int64_t>& moduli) {
    std::int64_t x = 0, M = 1;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        const std::int64_t m = moduli[i];
        const std::int64_t r = ((residues[i] % m) + m) % m;
        // find t with x + M t = r (mod m), by search over t in [0, m)
        std::optional<std::int64_t> hit;
        for (std::int64_t t = 0; t < m; ++t) {
            if (((x + M * t - r) % m + m) % m == 0) {
                hit = t;
                break;
            }
        }
        if (!hit) return std::nullopt;
        const std::int64_t L = std::lcm(M, m);
        x = ((x + M * *hit) % L + L) % L;
        M = L;
    }
    return std::make_pair(x, M);
}

/// Representative of x mod M in the window (-M/2, M/2].
inline std::int64_t symmetric_rep(std::int64_t x, std::int64_t M) {
    x = ((x % M) + M) % M;
    return 2 * x > M ? x - M : x;
}

using IntegralTable = std::map<std::pair<int, int>, LieElement>;

struct LiftReport {
    IntegralTable table;
    std::int64_t window = 0;  // lcm of the moduli
    std::vector<std::string> errors;
};

/// Lift brute-force brackets of basis pairs with indices up to max_index from several primes
/// to integers, via CRT on the moduli p - 1.
inline LiftReport lift_integral(Variant v, const std::vector<std::uint32_t>& primes, int max_index) {
    if (primes.size() < 2) throw std::invalid_argument("lift_integral: need at least two primes");
    std::vector<std::unique_ptr<HallLie>> algebras;
    std::vector<std::int64_t> moduli;
    for (auto p : primes) {
        if (p == 2) throw std::invalid_argument("lift_integral: primes must be odd");
        algebras.push_back(std::make_unique<HallLie>(v, FieldSpec(p), max_index));
        moduli.push_back(static_cast<std::int64_t>(p) - 1);
    }
    LiftReport rep;
    rep.window = 1;
    for (auto m : moduli) rep.window = std::lcm(rep.window, m);
    const auto keys = basis_keys(max_index);
    for (int a : keys)
        for (int b : keys) {
            std::vector<LieElement> residues;
            std::map<int, bool> support;
            for (const auto& alg : algebras) {
                residues.push_back(alg->bracket_basis(a, b));
                for (auto [k, c] : residues.back().terms()) support[k] = true;
            }
            LieElement lifted;
            for (auto [k, _] : support) {
                std::vector<std::int64_t> r;
                for (const auto& e : residues) r.push_back(e.coeff(k));
                auto sol = crt(r, moduli);
                if (!sol) {
                    rep.errors.push_back("inconsistent residues for [" + std::to_string(a) + "," + std::to_string(b) +
                                         "] at key " + std::to_string(k));
                    continue;
                }
                lifted.add(k, symmetric_rep(sol->first, sol->second));
            }
            rep.table[{a, b}] = lifted;
        }
    return rep;
}

/// Closed-form table on the same index range.
inline IntegralTable closed_table(Variant v, int max_index) {
    IntegralTable t;
    for (int a : basis_keys(max_index))
        for (int b : basis_keys(max_index)) t[{a, b}] = closed_basis(v, a, b);
    return t;
}

// ---------------------------------------------------------------------------------------
// Quotient of the cluster tube algebra by its center

using Rational = boost::rational<std::int64_t>;

/// Basis symbol of the quotient: kind 'a' (index x, integer) or 'b' / 'c' (index y, half
/// an odd integer). twice = 2 * index.
struct QuotientSymbol {
    char kind = 'a';
    int twice = 0;

    friend auto operator<=>(const QuotientSymbol&, const QuotientSymbol&) = default;
    friend bool operator==(const QuotientSymbol&, const QuotientSymbol&) = default;

    std::string name() const {
        std::string idx = twice % 2 == 0 ? std::to_string(twice / 2) : std::to_string(twice) + "/2";
        return std::string(1, kind) + "_" + idx;
    }
};

using QuotientElement = std::map<QuotientSymbol, Rational>;

inline void add_term(QuotientElement& e, const QuotientSymbol& s, Rational c) {
    auto& slot = e[s];
    slot += c;
    if (slot.numerator() == 0) e.erase(s);
}

/// Image of an integral element in the quotient: u_{2x} -> a_x, u_{-2x} -> -a_x, z -> 2 a_0,
/// u_k -> b_{k/2} (k odd > 0), u_k -> c_{-k/2} (k odd < 0).
inline QuotientElement project(const LieElement& e) {
    QuotientElement out;
    for (auto [k, c] : e.terms()) {
        if (k == kZ) add_term(out, {'a', 0}, Rational(2 * c));
        else if (k % 2 == 0) add_term(out, {'a', std::abs(k)}, Rational(k > 0 ? c : -c));
        else if (k > 0) add_term(out, {'b', k}, Rational(c));
        else add_term(out, {'c', -k}, Rational(c));
    }
    return out;
}

/// A representative of a quotient basis symbol, with its scalar (a_0 = z / 2).
inline std::pair<int, Rational> lift_symbol(const QuotientSymbol& s) {
    if (s.kind == 'a') return s.twice == 0 ? std::make_pair(kZ, Rational(1, 2)) : std::make_pair(s.twice, Rational(1));
    return {s.kind == 'b' ? s.twice : -s.twice, Rational(1)};
}

struct QuotientEntry {
    QuotientSymbol s, t;
    QuotientElement value;
};

inline std::vector<QuotientSymbol> quotient_symbols(int max_twice) {
    std::vector<QuotientSymbol> out;
    for (int t = 0; t <= max_twice; t += 2) out.push_back({'a', t});
    for (int t = 1; t <= max_twice; t += 2) out.push_back({'b', t});
    for (int t = 1; t <= max_twice; t += 2) out.push_back({'c', t});
    return out;
}

/// Brackets of the quotient basis computed from an integral bracket function on basis keys.
/// Throws if a central element fails to bracket to zero (the projection would be ill-defined).
template <class Bracket>
std::vector<QuotientEntry> quotient_by_center(Bracket br, int max_twice) {
    for (int x = 2; x <= max_twice; x += 2) {
        for (int k : basis_keys(max_twice)) {
            if (!project(br(x, k) + br(-x, k)).empty()) {
                throw std::logic_error("quotient: u_" + std::to_string(x) + " + u_" + std::to_string(-x) +
                                       " is not central against u_" + std::to_string(k));
            }
        }
    }
    std::vector<QuotientEntry> out;
    for (const auto& s : quotient_symbols(max_twice))
        for (const auto& t : quotient_symbols(max_twice)) {
            const auto [ks, cs] = lift_symbol(s);
            const auto [kt, ct] = lift_symbol(t);
            QuotientElement v;
            for (auto [sym, c] : project(br(ks, kt))) add_term(v, sym, c * cs * ct);
            out.push_back({s, t, v});
        }
    return out;
}

/// The expected quotient brackets, written directly in the a/b/c basis.
inline QuotientElement quotient_expected(const QuotientSymbol& s, const QuotientSymbol& t) {
    QuotientElement v;
    auto sgn = [](int r) { return r > 0 ? 1 : -1; };
    // doubled indices keep everything integral: y - x has doubled value t - s
    if (s.kind == 'a' && (t.kind == 'b' || t.kind == 'c')) {
        const int sign = t.kind == 'b' ? 1 : -1;
        const int diff = t.twice - s.twice;
        add_term(v, {t.kind, t.twice + s.twice}, Rational(sign));
        add_term(v, {t.kind, std::abs(diff)}, Rational(sign * sgn(diff)));
    } else if ((s.kind == 'b' || s.kind == 'c') && t.kind == 'a') {
        for (auto [sym, c] : quotient_expected(t, s)) add_term(v, sym, -c);
    } else if (s.kind == 'b' && t.kind == 'c') {
        add_term(v, {'a', s.twice + t.twice}, Rational(2));
        add_term(v, {'a', std::abs(s.twice - t.twice)}, Rational(-2));
    } else if (s.kind == 'c' && t.kind == 'b') {
        for (auto [sym, c] : quotient_expected(t, s)) add_term(v, sym, -c);
    }
    return v;
}

inline std::string quotient_to_string(const QuotientElement& e) {
    if (e.empty()) return "0";
    std::string s;
    for (const auto& [sym, c] : e) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c.numerator()) + (c.denominator() == 1 ? "" : "/" + std::to_string(c.denominator())) + "*" +
             sym.name();
    }
    return s;
}

// ---------------------------------------------------------------------------------------
// Heisenberg basis of the root category algebra

struct HeisenbergReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Checks e_n = -(1/n) u_n, f_n = u_{-n}, z: [e_n, f_n] = z, z central, every other basis
/// bracket zero. `br` returns integral brackets of basis keys.
template <class Bracket>
HeisenbergReport heisenberg_check(Bracket br, int max_index) {
    HeisenbergReport rep;
    auto as_rational = [](const LieElement& e) {
        std::map<int, Rational> out;
        for (auto [k, c] : e.terms()) out[k] = Rational(c);
        return out;
    };
    for (int n = 1; n <= max_index; ++n) {
        auto v = as_rational(br(n, -n));
        for (auto& [k, c] : v) c *= Rational(-1, n);
        if (v != std::map<int, Rational>{{kZ, Rational(1)}}) rep.failures.push_back("[e_" + std::to_string(n) + ", f_" + std::to_string(n) + "] != z");
    }
    for (int a : basis_keys(max_index))
        for (int b : basis_keys(max_index)) {
            if (a != kZ && b != kZ && a == -b) continue;
            if (!br(a, b).is_zero()) {
                rep.failures.push_back("[" + std::to_string(a) + ", " + std::to_string(b) + "] != 0");
            }
        }
    return rep;
}

}  // namespace tubehall
