#pragma once

// Hall numbers and the Ringel-Hall Lie bracket of the two orbit categories, by brute-force
// orbit counting over F_q.
//
// Lie elements use integer keys: 0 is z, m != 0 is u_<m>.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "tubehall/orbit_cat.hpp"

namespace tubehall {

inline constexpr int kZ = 0;

/// Finite linear combination over {z} u {u_m}. modulus 0 means integer coefficients,
/// otherwise residues in [0, modulus).
class LieElement {
public:
    explicit LieElement(std::int64_t modulus = 0) : modulus_(modulus) {
        if (modulus < 0) throw std::invalid_argument("LieElement: negative modulus");
    }
    static LieElement basis(int key, std::int64_t modulus = 0) {
        LieElement e(modulus);
        e.add(key, 1);
        return e;
    }

    std::int64_t modulus() const { return modulus_; }
    const std::map<int, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t coeff(int key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(int key, std::int64_t c) {
        auto& slot = terms_[key];
        slot = normalize(slot + c);
        if (slot == 0) terms_.erase(key);
    }

    LieElement& operator+=(const LieElement& o) {
        for (auto [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LieElement& operator-=(const LieElement& o) {
        for (auto [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(std::int64_t s, const LieElement& a) {
        LieElement out(a.modulus_);
        for (auto [k, c] : a.terms_) out.add(k, s * c);
        return out;
    }
    friend bool operator==(const LieElement&, const LieElement&) = default;

    /// Reduce integer coefficients modulo m.
    LieElement reduced(std::int64_t m) const {
        LieElement out(m);
        for (auto [k, c] : terms_) out.add(k, c);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto [k, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += std::to_string(c) + (k == kZ ? std::string("*z") : "*u_" + std::to_string(k));
        }
        return s;
    }

private:
    std::int64_t normalize(std::int64_t c) const {
        if (modulus_ == 0) return c;
        c %= modulus_;
        return c < 0 ? c + modulus_ : c;
    }

    std::int64_t modulus_;
    std::map<int, std::int64_t> terms_;
};

/// Grothendieck class of <m> as a multiple of z.
inline std::int64_t grothendieck_class(Variant v, int m) {
    if (m == 0) throw std::invalid_argument("grothendieck_class: label 0");
    if (v == Variant::RootCategory) return m;
    const int odd = std::abs(m) % 2;
    return m > 0 ? odd : -odd;
}

class HallLie {
public:
    /// Bracket inputs are bounded by max_index; candidate cones go up to twice that.
    HallLie(Variant v, FieldSpec F, int max_index = 8) : cat_(v, F, 2 * max_index), max_index_(max_index) {
        if (F.modulus() == 2) {
            throw std::invalid_argument("Hall-number verification needs q >= 3 (Z/(q-1) is trivial at q = 2)");
        }
    }

    const OrbitCategory& category() const { return cat_; }
    Variant variant() const { return cat_.variant(); }
    int max_index() const { return max_index_; }
    std::int64_t modulus() const { return static_cast<std::int64_t>(cat_.field().modulus()) - 1; }

    /// When set, S2 orbits are left out of every Hall number.
    void set_drop_s2(bool drop) { drop_s2_ = drop; }

    const std::map<ObjectList, OrbitCells>& census(int X, int L) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto key = std::make_pair(X, L);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, cat_.census(X, L)).first;
        return it->second;
    }

    OrbitCells hall_cells(int Y, int X, int L) const {
        const auto& c = census(X, L);
        auto it = c.find(ObjectList{Y});
        return it == c.end() ? OrbitCells{} : it->second;
    }

    /// F^L_{YX} mod (q-1).
    std::int64_t hall_F(int Y, int X, int L) const {
        const auto c = hall_cells(Y, X, L);
        const std::uint64_t n = c.s1 + c.s3 + (drop_s2_ ? 0 : c.s2);
        return static_cast<std::int64_t>(n % static_cast<std::uint64_t>(modulus()));
    }

    std::int64_t hom_dim(int X, int Y) const { return static_cast<std::int64_t>(cat_.hom_space(X, Y).dim()); }

    /// Symmetric Euler form on representatives.
    std::int64_t euler_form(int X, int Y) const {
        return hom_dim(X, Y) - hom_dim(X, OrbitCategory::suspend(Y)) + hom_dim(Y, X) -
               hom_dim(Y, OrbitCategory::suspend(X));
    }

    void check_index(int m) const {
        if (m != kZ && std::abs(m) > max_index_) {
            throw std::out_of_range("index " + std::to_string(m) + " exceeds bound " + std::to_string(max_index_));
        }
    }

    /// Bracket of two basis symbols.
    LieElement bracket_basis(int a, int b) const {
        check_index(a);
        check_index(b);
        LieElement out(modulus());
        if (a == kZ && b == kZ) return out;
        if (a == kZ) {
            out.add(b, euler_form(1, b));
            return out;
        }
        if (b == kZ) {
            out.add(a, -euler_form(1, a));
            return out;
        }
        const int bound = std::abs(a) + std::abs(b);
        for (int len = 1; len <= bound; ++len) {
            for (int L : {len, -len}) {
                const std::int64_t c = hall_F(b, a, L) - hall_F(a, b, L);
                if (c) out.add(L, c);
            }
        }
        if (a == OrbitCategory::suspend(b)) out.add(kZ, -grothendieck_class(variant(), a));
        return out;
    }

    LieElement bracket(const LieElement& A, const LieElement& B) const {
        LieElement out(modulus());
        for (auto [ka, ca] : A.terms())
            for (auto [kb, cb] : B.terms()) out += (ca * cb) * bracket_basis(ka, kb);
        return out;
    }

private:
    OrbitCategory cat_;
    int max_index_;
    bool drop_s2_ = false;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, std::map<ObjectList, OrbitCells>> cache_;
};

}  // namespace tubehall
