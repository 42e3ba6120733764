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

#include "cubix/algebra.hpp"

#include <algorithm>

#include "cubix/error.hpp"

namespace cubix {

Algebra::Algebra(Vector unit, const std::vector<std::vector<Vector>>& table)
    : n_(unit.size()), unit_(std::move(unit)), table_(n_ * n_), sparse_(n_) {
    require_dim(table.size(), n_, "structure table rows");
    for (std::size_t i = 0; i < n_; ++i) {
        require_dim(table[i].size(), n_, "structure table columns");
        for (std::size_t j = 0; j < n_; ++j) {
            require_dim(table[i][j].size(), n_, "structure constant vector");
            table_[i * n_ + j] = table[i][j];
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (table_[i * n_ + j] != table_[j * n_ + i]) {
                fail(Errc::IdentityFailure, "structure table is not symmetric at (" + std::to_string(i) + ", " +
                                                std::to_string(j) + ")");
            }
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            const Vector& v = table_[i * n_ + j];
            for (std::size_t k = 0; k < n_; ++k) {
                if (sgn(v[k]) != 0) sparse_[i].push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k), v[k]});
            }
        }
    }
    for (std::size_t i = 0; i < n_; ++i) {
        if (multiply(unit_, unit_vector(n_, i)) != unit_vector(n_, i)) {
            fail(Errc::IdentityFailure, "unit law fails on basis vector " + std::to_string(i));
        }
    }
}

Element Algebra::multiply(const Element& x, const Element& y) const {
    require_dim(x.size(), n_, "multiply left factor");
    require_dim(y.size(), n_, "multiply right factor");
    Element z(n_);
    Rational t;
    for (std::size_t i = 0; i < n_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (const auto& term : sparse_[i]) {
            if (sgn(y[term.j]) == 0) continue;
            t = x[i] * y[term.j];
            z[term.k] += t * term.c;
        }
    }
    return z;
}

Matrix Algebra::left_mult(const Element& x) const {
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) m.set_col(j, multiply(x, unit_vector(n_, j)));
    return m;
}

std::size_t element_degree(const Algebra& a, const Element& x) {
    Subspace s = Subspace::span(a.dim(), {a.unit()});
    Element p = a.unit();
    while (true) {
        p = a.multiply(p, x);
        if (s.contains(p)) return s.dim();
        s = s + Subspace::span(a.dim(), {p});
    }
}

std::size_t rank(const Algebra& a, const Options& opts) {
    SampleStream stream(opts.seed);
    std::size_t best = 0;
    for (int k = 0; k < 5; ++k) best = std::max(best, element_degree(a, stream.next_vector(a.dim())));
    return best;
}

Element jordan_defect(const Algebra& a, const Element& x, const Element& y) {
    Element x2 = a.square(x);
    return a.multiply(x2, a.multiply(x, y)) - a.multiply(x, a.multiply(x2, y));
}

namespace {

// Full polarization of the Jordan identity in x at the basis triple (p, q, r):
// the symmetrization of (ab)(c y) - a((bc) y) over the six orderings.
bool polarized_jordan_vanishes(const Algebra& a, std::size_t p, std::size_t q, std::size_t r, std::size_t y) {
    std::size_t n = a.dim();
    const std::size_t idx[3] = {p, q, r};
    Element ey = unit_vector(n, y);
    Element acc(n);
    for (int c = 0; c < 3; ++c) {
        const Element& pair = a.table(idx[(c + 1) % 3], idx[(c + 2) % 3]);
        Element ec = unit_vector(n, idx[c]);
        acc = acc + a.multiply(pair, a.multiply(ec, ey));
        acc = acc - a.multiply(ec, a.multiply(pair, ey));
    }
    return is_zero(acc);
}

}  // namespace

JordanCheck check_jordan(const Algebra& a, const Options& opts, std::size_t min_pairs) {
    JordanCheck res;
    std::size_t n = a.dim();
    if (n <= 10) {
        res.symbolic = true;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p; q < n; ++q)
                for (std::size_t r = q; r < n; ++r)
                    for (std::size_t y = 0; y < n; ++y)
                        if (!polarized_jordan_vanishes(a, p, q, r, y)) return res;
    }
    SampleStream stream = SampleStream(opts.seed).fork(0x4a4f5244);
    std::size_t pairs = std::max<std::size_t>(min_pairs, 50);
    for (std::size_t k = 0; k < pairs; ++k) {
        Element x = stream.next_vector(n);
        Element y = stream.next_vector(n);
        if (!is_zero(jordan_defect(a, x, y))) return res;
        res.pairs = k + 1;
    }
    res.holds = true;
    return res;
}

Matrix u_operator(const Algebra& a, const Element& x) {
    Matrix l = a.left_mult(x);
    return Rational(2) * (l * l) - a.left_mult(a.square(x));
}

Element isotope_product(const Algebra& a, const Element& x, const Element& y, const Element& u) {
    return a.multiply(x, a.multiply(y, u)) + a.multiply(y, a.multiply(x, u)) - a.multiply(a.multiply(x, y), u);
}

bool is_ideal(const Algebra& a, const Subspace& s) {
    require_dim(s.ambient_dim(), a.dim(), "ideal ambient dimension");
    for (const auto& v : s.vectors())
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!s.contains(a.multiply(unit_vector(a.dim(), i), v))) return false;
    return true;
}

Algebra make_product(const std::vector<Algebra>& factors) {
    std::size_t n = 0;
    for (const auto& f : factors) n += f.dim();
    Vector unit;
    std::vector<std::vector<Vector>> t(n, std::vector<Vector>(n, zeros(n)));
    std::size_t off = 0;
    for (const auto& f : factors) {
        unit.insert(unit.end(), f.unit().begin(), f.unit().end());
        for (std::size_t i = 0; i < f.dim(); ++i)
            for (std::size_t j = 0; j < f.dim(); ++j)
                for (std::size_t k = 0; k < f.dim(); ++k) t[off + i][off + j][off + k] = f.table(i, j)[k];
        off += f.dim();
    }
    return Algebra(unit, t);
}

}  // namespace cubix
