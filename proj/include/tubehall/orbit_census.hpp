#pragma once

// Orbits of a finite group of linear maps acting on F_p^D, found by exhaustive sweep.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tubehall/exactfield.hpp"

namespace tubehall {

// Refuse sweeps larger than this many vectors.
inline constexpr std::uint64_t kMaxSweep = std::uint64_t{1} << 26;

inline std::uint64_t space_size(const FieldSpec& F, std::size_t dim) {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        s *= F.modulus();
        if (s > kMaxSweep) {
            throw std::out_of_range("orbit sweep over F_" + std::to_string(F.modulus()) + "^" + std::to_string(dim) +
                                    " exceeds the enumeration bound");
        }
    }
    return s;
}

// Index <-> coordinates, first coordinate most significant (the enumeration order).
inline std::uint64_t encode(const FieldSpec& F, const Column& v) {
    std::uint64_t x = 0;
    for (auto c : v) x = x * F.modulus() + c;
    return x;
}

inline Column decode(const FieldSpec& F, std::uint64_t x, std::size_t dim) {
    Column v(dim);
    for (std::size_t i = dim; i-- > 0;) {
        v[i] = static_cast<Scalar>(x % F.modulus());
        x /= F.modulus();
    }
    return v;
}

/// Units of an algebra given by its right-multiplication matrices R_k on a module of
/// dimension D: every unit a = sum a_k e_k yields the matrix sum a_k R_k.
template <class IsUnit>
std::vector<Matrix> unit_action(const FieldSpec& F, std::size_t end_dim, const std::vector<Matrix>& right_mult,
                                std::size_t dim, IsUnit is_unit) {
    std::vector<Column> unit_basis;
    for (std::size_t k = 0; k < end_dim; ++k) {
        Column e(end_dim, 0);
        e[k] = 1;
        unit_basis.push_back(e);
    }
    std::vector<Matrix> out;
    for_each_in_span(F, unit_basis, end_dim, [&](const Column& a) {
        if (!is_unit(a)) return;
        Matrix A(dim, dim);
        for (std::size_t k = 0; k < end_dim; ++k)
            if (a[k]) A = add(F, A, scale(F, a[k], right_mult[k]));
        out.push_back(std::move(A));
    });
    return out;
}

/// Calls visit(rep, members) once per orbit. The representative is the orbit's smallest
/// element in enumeration order; members lists the distinct orbit elements.
template <class Visit>
void for_each_orbit(const FieldSpec& F, std::size_t dim, const std::vector<Matrix>& group, Visit visit) {
    const std::uint64_t total = space_size(F, dim);
    std::vector<bool> seen(total, false);
    std::vector<Column> members;
    for (std::uint64_t x = 0; x < total; ++x) {
        if (seen[x]) continue;
        const Column rep = decode(F, x, dim);
        members.clear();
        seen[x] = true;
        members.push_back(rep);
        for (const auto& g : group) {
            Column y = apply(F, g, rep);
            const auto idx = encode(F, y);
            if (!seen[idx]) {
                seen[idx] = true;
                members.push_back(std::move(y));
            }
        }
        visit(rep, members);
    }
}

}  // namespace tubehall
