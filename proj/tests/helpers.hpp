/*
 * Copyright 2026 The Cubix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "cubix/matrix.hpp"
#include "cubix/polynomial.hpp"
#include "cubix/sampling.hpp"

namespace cubix::testing {

inline Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

inline Polynomial cst(std::size_t n, const Rational& c) { return Polynomial::constant(n, c); }

/// Determinant by the Leibniz expansion, independent of the library's elimination.
template <class T>
T leibniz_det(const std::vector<std::vector<T>>& m, T zero, T one) {
    std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total = zero;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        T term = one;
        for (std::size_t i = 0; i < n; ++i) term = T(term * m[i][perm[i]]);
        if (inversions % 2)
            total = total - term;
        else
            total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Rational leibniz_det(const Matrix& a) {
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
    return leibniz_det<Rational>(m, Rational(0), Rational(1));
}

inline Polynomial leibniz_det(const std::vector<std::vector<Polynomial>>& m, std::size_t nvars) {
    return leibniz_det<Polynomial>(m, Polynomial(nvars), cst(nvars, 1));
}

/// Rank modulo a 61-bit prime; equals the rational rank for small integer
/// matrices outside a negligible set.
inline std::size_t modular_rank(const Matrix& a) {
    const unsigned __int128 p = (1ULL << 61) - 1;
    const mpz_class pz(static_cast<unsigned long>((1ULL << 61) - 1));
    auto reduce = [&](const Rational& q) {
        mpz_class num = q.get_num() % pz;
        if (num < 0) num += pz;
        return static_cast<unsigned __int128>(num.get_ui());
    };
    auto power = [&](unsigned __int128 b, unsigned long long e) {
        unsigned __int128 r = 1;
        for (; e; e >>= 1, b = b * b % p)
            if (e & 1) r = r * b % p;
        return r;
    };
    std::vector<std::vector<unsigned __int128>> m(a.rows(), std::vector<unsigned __int128>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).get_den() != 1) return ~std::size_t{0};
            m[i][j] = reduce(a(i, j));
        }
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && m[piv][c] == 0) ++piv;
        if (piv == a.rows()) continue;
        std::swap(m[piv], m[r]);
        unsigned __int128 inv = power(m[r][c], static_cast<unsigned long long>(p - 2));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            unsigned __int128 f = m[i][c] * inv % p;
            for (std::size_t j = c; j < a.cols(); ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j] % p) % p;
        }
        ++r;
    }
    return r;
}

inline Matrix random_matrix(SampleStream& s, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = s.next();
    return m;
}

inline Matrix random_invertible(SampleStream& s, std::size_t n) {
    for (;;) {
        Matrix m = random_matrix(s, n, n);
        bool ok = n <= 7 ? sgn(leibniz_det(m)) != 0 : rank(m) == n;
        if (ok) return m;
    }
}

}  // namespace cubix::testing
