#pragma once

// Classification arithmetic for the orbit categories S_w / S^n: derived parameters, graded
// algebra presentations, the equivalence criterion, Picard group laws and AR shapes.
//
// Scalars come from a field model K providing value, one(), from_int(), mul(), neg(),
// equal(), is_zero() and str(). RationalField and ModularField are provided.

#include <boost/rational.hpp>

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "tubehall/exactfield.hpp"

namespace tubehall {

struct RationalField {
    using value = boost::rational<std::int64_t>;
    value one() const { return value(1); }
    value from_int(std::int64_t x) const { return value(x); }
    value mul(const value& a, const value& b) const { return a * b; }
    value neg(const value& a) const { return -a; }
    value inv(const value& a) const {
        if (a.numerator() == 0) throw std::domain_error("inverse of zero");
        return value(1) / a;
    }
    bool equal(const value& a, const value& b) const { return a == b; }
    bool is_zero(const value& a) const { return a.numerator() == 0; }
    std::string str(const value& a) const {
        return a.denominator() == 1 ? std::to_string(a.numerator())
                                    : std::to_string(a.numerator()) + "/" + std::to_string(a.denominator());
    }
    std::string name() const { return "Q"; }
    friend bool operator==(const RationalField&, const RationalField&) = default;
};

struct ModularField {
    FieldSpec F;
    using value = Scalar;
    value one() const { return F.reduce(1); }
    value from_int(std::int64_t x) const { return F.reduce(x); }
    value mul(value a, value b) const { return F.mul(a, b); }
    value neg(value a) const { return F.neg(a); }
    value inv(value a) const { return F.inv(a); }
    bool equal(value a, value b) const { return a == b; }
    bool is_zero(value a) const { return a == 0; }
    std::string str(value a) const { return std::to_string(a); }
    std::string name() const { return "F_" + std::to_string(F.modulus()); }
    friend bool operator==(const ModularField&, const ModularField&) = default;
};

template <class K>
typename K::value power(const K& k, typename K::value a, std::int64_t e) {
    if (e < 0) return power(k, k.inv(a), -e);
    auto r = k.one();
    while (e--) r = k.mul(r, a);
    return r;
}

/// (-1)^e in K, for any integer e.
template <class K>
typename K::value sign_power(const K& k, std::int64_t e) {
    return std::abs(e) % 2 == 0 ? k.one() : k.neg(k.one());
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Integer invariants derived from (w, n).
struct OrbitInvariants {
    int w = 0, n = 1;
    int d = 1, m = 1, n_prime = 1, d_prime = 1, c = 0;
};

inline OrbitInvariants derive_invariants_from_d(int d, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    OrbitInvariants r;
    r.n = n;
    r.d = d;
    r.w = 1 - d;
    r.m = d == 0 ? n : std::gcd(n, std::abs(d));
    r.n_prime = n / r.m;
    r.d_prime = d / r.m;
    r.c = 0;
    if (r.n_prime > 1) {
        const int dp = static_cast<int>(floor_mod(r.d_prime, r.n_prime));
        for (int c = 0; c < r.n_prime; ++c)
            if ((static_cast<std::int64_t>(dp) * c) % r.n_prime == 1) {
                r.c = c;
                break;
            }
    }
    return r;
}

inline OrbitInvariants derive_invariants(int w, int n) { return derive_invariants_from_d(1 - w, n); }

template <class K>
struct OrbitParams {
    OrbitInvariants inv;
    typename K::value a, b;
};

template <class K>
OrbitParams<K> derive_params(const K& k, int w, int n, typename K::value a, typename K::value b) {
    if (k.is_zero(a) || k.is_zero(b)) throw std::invalid_argument("a and b must be nonzero");
    return {derive_invariants(w, n), a, b};
}

/// k<s, r, r^-1> / (s^2, s r = lambda r s) with |s| = deg_s, |r| = deg_r.
template <class K>
struct GradedPresentation {
    int deg_s = 0;
    int deg_r = 1;
    typename K::value lambda;
};

template <class K>
GradedPresentation<K> lambda_tilde(const K& k, int w, typename K::value a, int n) {
    return {w, n, k.mul(sign_power(k, static_cast<std::int64_t>(n) * w), a)};
}

template <class K>
GradedPresentation<K> lambda_tilde_prime(const K& k, int n_prime, typename K::value b, int d_prime, int m) {
    return {1 - m * d_prime, n_prime * m, k.mul(sign_power(k, static_cast<std::int64_t>(n_prime) * m), power(k, b, n_prime))};
}

/// Generator rescalings cannot change lambda and degrees cannot mix, so isomorphism is
/// equality of the normalized data.
template <class K>
bool presentations_isomorphic(const K& k, const GradedPresentation<K>& P, const GradedPresentation<K>& Q) {
    return P.deg_s == Q.deg_s && P.deg_r == Q.deg_r && k.equal(P.lambda, Q.lambda);
}

template <class K>
bool equivalent(const K& k, const OrbitParams<K>& p) {
    return k.equal(p.a, power(k, k.mul(sign_power(k, p.inv.d), p.b), p.inv.n_prime));
}

/// n' m + n w = d n' (mod 2).
inline bool parity_identity(const OrbitInvariants& inv) {
    const std::int64_t lhs = static_cast<std::int64_t>(inv.n_prime) * inv.m + static_cast<std::int64_t>(inv.n) * inv.w;
    const std::int64_t rhs = static_cast<std::int64_t>(inv.d) * inv.n_prime;
    return floor_mod(lhs - rhs, 2) == 0;
}

/// (number of tubes, rank of each tube).
inline std::pair<int, int> ar_shape(const OrbitInvariants& inv) {
    if (inv.w == 1) return {inv.n, 1};
    return {inv.m, inv.n_prime};
}

// Picard groups: k^x x Z for the spherical side, k^x x Z/n x Z for the derived tube.

template <class K>
struct PicardS {
    typename K::value scalar;
    std::int64_t shift = 0;
};

template <class K>
struct PicardT {
    typename K::value scalar;
    int rotation = 0;
    std::int64_t shift = 0;
    int n = 1;
};

template <class K>
PicardS<K> picard_compose_s(const K& k, const PicardS<K>& x, const PicardS<K>& y) {
    if (k.is_zero(x.scalar) || k.is_zero(y.scalar)) throw std::invalid_argument("Picard scalar must be nonzero");
    return {k.mul(x.scalar, y.scalar), x.shift + y.shift};
}

template <class K>
PicardT<K> picard_compose_t(const K& k, const PicardT<K>& x, const PicardT<K>& y) {
    if (x.n != y.n) throw std::invalid_argument("Picard elements for different tube ranks");
    if (k.is_zero(x.scalar) || k.is_zero(y.scalar)) throw std::invalid_argument("Picard scalar must be nonzero");
    return {k.mul(x.scalar, y.scalar), static_cast<int>(floor_mod(x.rotation + y.rotation, x.n)), x.shift + y.shift, x.n};
}

template <class K>
PicardS<K> picard_inverse_s(const K& k, const PicardS<K>& x) {
    return {k.inv(x.scalar), -x.shift};
}

template <class K>
PicardT<K> picard_inverse_t(const K& k, const PicardT<K>& x) {
    return {k.inv(x.scalar), static_cast<int>(floor_mod(-x.rotation, x.n)), -x.shift, x.n};
}

template <class K>
bool picard_equal_s(const K& k, const PicardS<K>& x, const PicardS<K>& y) {
    return k.equal(x.scalar, y.scalar) && x.shift == y.shift;
}

template <class K>
bool picard_equal_t(const K& k, const PicardT<K>& x, const PicardT<K>& y) {
    return k.equal(x.scalar, y.scalar) && x.rotation == y.rotation && x.shift == y.shift && x.n == y.n;
}

template <class K>
PicardS<K> picard_suspension_s(const K& k) { return {k.one(), 1}; }
template <class K>
PicardT<K> picard_tau(const K& k, int n) { return {k.one(), 1 % n, 0, n}; }
template <class K>
PicardT<K> picard_suspension_t(const K& k, int n) { return {k.one(), 0, 1, n}; }

}  // namespace tubehall
