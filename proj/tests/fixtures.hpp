#pragma once

// Shared test fixtures built directly from matrices and tables.

#include <array>
#include <random>
#include <string>
#include <vector>

#include "fgchar/central_ext.hpp"
#include "fgchar/dsl.hpp"
#include "fgchar/gmodule.hpp"
#include "fgchar/named.hpp"

namespace fixture {

using Mat2 = std::array<int, 4>;  // row-major over F_3

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3, (a[2] * b[0] + a[3] * b[2]) % 3,
            (a[2] * b[1] + a[3] * b[3]) % 3};
}

struct Sl23 {
    fgchar::GroupPtr group;
    std::vector<Mat2> mats;  // mats[g] is the matrix of element g
};

/// SL(2,3) from its 24 matrices.
inline Sl23 sl23() {
    Sl23 s;
    for (int a = 0; a < 81; ++a) {
        Mat2 m{a % 3, a / 3 % 3, a / 9 % 3, a / 27};
        if (((m[0] * m[3] - m[1] * m[2]) % 3 + 3) % 3 == 1) s.mats.push_back(m);
    }
    const int n = static_cast<int>(s.mats.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        const auto& m = s.mats[i];
        labels.push_back("[" + std::to_string(m[0]) + std::to_string(m[1]) + ";" + std::to_string(m[2]) + std::to_string(m[3]) + "]");
        for (int j = 0; j < n; ++j) {
            auto p = mat_mul(s.mats[i], s.mats[j]);
            for (int k = 0; k < n; ++k)
                if (s.mats[k] == p) table[i][j] = k;
        }
    }
    s.group = fgchar::FiniteGroup::from_multiplication_table(table, labels);
    return s;
}

/// Coordinates of an element of EA(3, dim): first coordinate most significant.
inline std::vector<int> digits(int x, int dim) {
    std::vector<int> d(static_cast<std::size_t>(dim));
    for (int i = dim - 1; i >= 0; --i, x /= 3) d[i] = x % 3;
    return d;
}

inline int from_digits(const std::vector<int>& d) {
    int x = 0;
    for (int v : d) x = 3 * x + v;
    return x;
}

/// V^k for the natural module V = F_3^2 of SL(2,3), acting blockwise.
inline fgchar::GModule natural_power(const Sl23& s, int k) {
    auto carrier = fgchar::elementary_abelian(3, 2 * k);
    std::vector<std::vector<int>> act;
    for (const auto& m : s.mats) {
        std::vector<int> row(static_cast<std::size_t>(carrier->order()));
        for (int x = 0; x < carrier->order(); ++x) {
            auto d = digits(x, 2 * k);
            std::vector<int> out(d.size());
            for (int b = 0; b < k; ++b) {
                out[2 * b] = (m[0] * d[2 * b] + m[1] * d[2 * b + 1]) % 3;
                out[2 * b + 1] = (m[2] * d[2 * b] + m[3] * d[2 * b + 1]) % 3;
            }
            row[x] = from_digits(out);
        }
        act.push_back(std::move(row));
    }
    return fgchar::make_module(carrier, s.group, std::move(act));
}

/// total -> total/mu for a central subgroup mu.
inline fgchar::CentralExtension central_quotient(const fgchar::Subgroup& mu) {
    auto q = fgchar::quotient(mu);
    return fgchar::make_extension(q.projection, mu);
}

/// Central extensions with cyclic kernel used across the cocycle tests.
inline std::vector<std::pair<std::string, fgchar::CentralExtension>> extension_fixtures() {
    std::vector<std::pair<std::string, fgchar::CentralExtension>> out;
    for (const char* spec : {"D(8)", "Q(8)", "C(8)", "D(16)", "Q(16)", "Heis(3)", "C(4) x C(2)", "Q(8) x C(3)", "sdp(C(4), C(4), inversion)"}) {
        auto g = fgchar::dsl::evaluate(spec).group;
        const auto& z = fgchar::center(g);
        // a cyclic central subgroup of prime order
        for (int x : z.elements())
            if (g->element_order(x) > 1 && fgchar::detail::is_prime(g->element_order(x))) {
                int one[1] = {x};
                out.emplace_back(spec, central_quotient(fgchar::subgroup_generated(g, one)));
                break;
            }
    }
    return out;
}

/// k z + delta f for a random normalized cochain f with denominators up to 12.
inline fgchar::Cocycle perturbed(const fgchar::Cocycle& z, int k, std::mt19937& rng) {
    const auto& g = z.base;
    fgchar::Cocycle out = fgchar::zero_cocycle(g);
    for (int i = 0; i < k; ++i) out = fgchar::add(out, z);
    fgchar::Cochain f(static_cast<std::size_t>(g->order()), mpq_class(0));
    for (int x = 0; x < g->order(); ++x)
        if (x != g->identity()) {
            int den = 1 + static_cast<int>(rng() % 12);
            f[x] = mpq_class(static_cast<long>(rng() % den), den);
            f[x].canonicalize();
        }
    return fgchar::add(out, fgchar::coboundary(g, f));
}

}  // namespace fixture
