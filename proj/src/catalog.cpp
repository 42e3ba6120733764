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

#include "cubix/catalog.hpp"

#include <array>
#include <functional>
#include <regex>

#include "cubix/error.hpp"

namespace cubix {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Algebra make_spin_factor(const Matrix& q) {
    if (q.rows() != q.cols() || !q.is_symmetric()) fail(Errc::DimensionMismatch, "spin form must be symmetric");
    std::size_t k = q.rows();
    std::size_t n = k + 1;
    return tabulate(n, unit_vector(n, 0), [&](const Vector& x, const Vector& y) {
        Vector w(x.begin() + 1, x.end()), w2(y.begin() + 1, y.end());
        Vector out(n);
        out[0] = x[0] * y[0] - (k ? dot(w, q * w2) : Rational(0));
        for (std::size_t i = 0; i < k; ++i) out[1 + i] = x[0] * w2[i] + y[0] * w[i];
        return out;
    });
}

namespace {

using HermMatrix = std::array<std::array<Vector, 3>, 3>;

// Off-diagonal slots (1-based): x1 at (2,3), x2 at (3,1), x3 at (2,1); the
// conjugates sit at the transposed positions.
constexpr std::size_t kSlotRow[3] = {1, 2, 1};
constexpr std::size_t kSlotCol[3] = {2, 0, 0};

HermMatrix herm_from_coords(const CompositionAlgebra& a, const Vector& x) {
    std::size_t d = a.dim();
    HermMatrix m;
    for (std::size_t i = 0; i < 3; ++i) m[i][i] = x[i] * a.unit();
    for (std::size_t s = 0; s < 3; ++s) {
        Vector block(x.begin() + static_cast<std::ptrdiff_t>(3 + s * d),
                     x.begin() + static_cast<std::ptrdiff_t>(3 + (s + 1) * d));
        m[kSlotCol[s]][kSlotRow[s]] = a.conjugate(block);
        m[kSlotRow[s]][kSlotCol[s]] = std::move(block);
    }
    return m;
}

Vector herm_to_coords(const CompositionAlgebra& a, const HermMatrix& m) {
    std::size_t d = a.dim();
    Vector x(3 + 3 * d);
    for (std::size_t i = 0; i < 3; ++i) x[i] = a.scalar_part(m[i][i]);
    for (std::size_t s = 0; s < 3; ++s) {
        const Vector& block = m[kSlotRow[s]][kSlotCol[s]];
        if (a.conjugate(block) != m[kSlotCol[s]][kSlotRow[s]])
            fail(Errc::IdentityFailure, "symmetrized product left the hermitian matrices");
        std::copy(block.begin(), block.end(), x.begin() + static_cast<std::ptrdiff_t>(3 + s * d));
    }
    return x;
}

HermMatrix herm_multiply(const CompositionAlgebra& a, const HermMatrix& m, const HermMatrix& n) {
    HermMatrix p;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
            Vector acc(a.dim());
            for (std::size_t j = 0; j < 3; ++j) acc = acc + a.multiply(m[i][j], n[j][k]) + a.multiply(n[i][j], m[j][k]);
            p[i][k] = Rational(1, 2) * acc;
        }
    }
    return p;
}

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

PolyMatrix symbolic_square(std::size_t n, const std::function<Polynomial(std::size_t, std::size_t)>& entry,
                           std::size_t size) {
    PolyMatrix m(size, std::vector<Polynomial>(size, Polynomial(n)));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m[i][j] = entry(i, j);
    return m;
}

Polynomial pfaffian_rec(const PolyMatrix& a, std::vector<std::size_t> idx) {
    std::size_t vars = a[0][0].nvars();
    if (idx.empty()) return Polynomial::constant(vars, 1);
    Polynomial out(vars);
    std::size_t first = idx[0];
    for (std::size_t t = 1; t < idx.size(); ++t) {
        if (a[first][idx[t]].is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t s = 1; s < idx.size(); ++s)
            if (s != t) rest.push_back(idx[s]);
        Polynomial term = a[first][idx[t]] * pfaffian_rec(a, rest);
        if (t % 2 == 1) out += term;
        else out -= term;
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> alt6_pairs() {
    std::vector<std::pair<std::size_t, std::size_t>> p;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) p.emplace_back(i, j);
    return p;
}

Matrix alt6_j() {
    Matrix j(6, 6);
    for (std::size_t b = 0; b < 3; ++b) {
        j(2 * b, 2 * b + 1) = 1;
        j(2 * b + 1, 2 * b) = -1;
    }
    return j;
}

Matrix skew_from(const Vector& x) {
    Matrix a(6, 6);
    auto pairs = alt6_pairs();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        a(pairs[k].first, pairs[k].second) = x[k];
        a(pairs[k].second, pairs[k].first) = -x[k];
    }
    return a;
}

}  // namespace

Algebra make_herm3(const CompositionAlgebra& a) {
    std::size_t n = 3 + 3 * a.dim();
    Vector unit(n);
    unit[0] = unit[1] = unit[2] = 1;
    return tabulate(n, unit, [&](const Vector& x, const Vector& y) {
        return herm_to_coords(a, herm_multiply(a, herm_from_coords(a, x), herm_from_coords(a, y)));
    });
}

Polynomial herm3_norm(const CompositionAlgebra& a) {
    std::size_t d = a.dim();
    std::size_t n = 3 + 3 * d;
    std::vector<std::vector<Polynomial>> blocks(3);
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t i = 0; i < d; ++i) blocks[s].push_back(var(n, 3 + s * d + i));
    Polynomial out = var(n, 0) * var(n, 1) * var(n, 2);
    out += Rational(2) * a.inner(a.multiply(blocks[0], blocks[1]), blocks[2]);
    for (std::size_t s = 0; s < 3; ++s) out -= var(n, s) * a.norm(blocks[s]);
    return out;
}

Algebra make_m3() {
    return tabulate(9, {1, 0, 0, 0, 1, 0, 0, 0, 1}, [](const Vector& x, const Vector& y) {
        Vector out(9);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t j = 0; j < 3; ++j)
                    out[3 * i + k] += (x[3 * i + j] * y[3 * j + k] + y[3 * i + j] * x[3 * j + k]) / 2;
        return out;
    });
}

Algebra make_alt6() {
    Matrix j = alt6_j();
    Matrix jinv = inverse(j);
    Vector unit(15);
    auto pairs = alt6_pairs();
    for (std::size_t k = 0; k < pairs.size(); ++k) unit[k] = j(pairs[k].first, pairs[k].second);
    return tabulate(15, unit, [&](const Vector& x, const Vector& y) {
        Matrix xm = jinv * skew_from(x);
        Matrix ym = jinv * skew_from(y);
        Matrix prod = Rational(1, 2) * (j * (xm * ym + ym * xm));
        if (prod.transpose() != Rational(-1) * prod) fail(Errc::IdentityFailure, "Alt6 product is not skew");
        Vector out(15);
        for (std::size_t k = 0; k < pairs.size(); ++k) out[k] = prod(pairs[k].first, pairs[k].second);
        return out;
    });
}

Polynomial pfaffian(const PolyMatrix& skew) {
    std::vector<std::size_t> idx(skew.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    if (idx.size() % 2) return Polynomial(skew.empty() ? 0 : skew[0][0].nvars());
    return pfaffian_rec(skew, idx);
}

Polynomial symbolic_det3(const PolyMatrix& m) {
    Polynomial out(m[0][0].nvars());
    for (std::size_t j = 0; j < 3; ++j) {
        Polynomial minor = m[1][(j + 1) % 3] * m[2][(j + 2) % 3] - m[1][(j + 2) % 3] * m[2][(j + 1) % 3];
        out += m[0][j] * minor;
    }
    return out;
}

PolyMatrix symbolic_adjugate3(const PolyMatrix& m) {
    PolyMatrix adj(3, std::vector<Polynomial>(3));
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            // cofactor (j, i) via cyclic indices, which carries the sign
            std::size_t r1 = (j + 1) % 3, r2 = (j + 2) % 3, c1 = (i + 1) % 3, c2 = (i + 2) % 3;
            adj[i][j] = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
        }
    }
    return adj;
}

namespace {

CatalogEntry semisimple(CatalogEntry e, std::size_t ss_dim) {
    e.expected_rank = 3;
    e.expected_radical_dim = 0;
    e.expected_ss_signature = {3, ss_dim};
    e.expected_penico = {0};
    return e;
}

QuadraticMap forms(std::vector<Polynomial> f) { return QuadraticMap(std::move(f)); }

CatalogEntry entry_cn(std::size_t k, const std::string& name) {
    CatalogEntry e;
    e.name = name;
    e.description = "Q^" + std::to_string(k) + " with componentwise product";
    std::vector<Algebra> f(k, Algebra({1}, {{{1}}}));
    e.algebra = make_product(f);
    e.expected_rank = k;
    if (k == 3) {
        e.closed_norm = var(3, 0) * var(3, 1) * var(3, 2);
        e.closed_adjoint = forms({var(3, 1) * var(3, 2), var(3, 0) * var(3, 2), var(3, 0) * var(3, 1)});
        e = semisimple(e, 3);
    }
    return e;
}

CatalogEntry entry_spin(std::size_t k) {
    CatalogEntry e;
    e.name = "spin(" + std::to_string(k) + ")";
    e.description = "spin factor Q + W, dim W = " + std::to_string(k) + ", q = sum of squares";
    e.algebra = make_spin_factor(Matrix::identity(k));
    e.expected_rank = k ? 2 : 1;
    return e;
}

CatalogEntry entry_cxspin(std::size_t k) {
    if (k == 0) fail(Errc::UnknownName, "Cxspin needs dim W >= 1");
    CatalogEntry e;
    e.name = "Cxspin(" + std::to_string(k) + ")";
    e.description = "Q x spin factor, dim W = " + std::to_string(k);
    e.algebra = make_product({Algebra({1}, {{{1}}}), make_spin_factor(Matrix::identity(k))});
    std::size_t n = k + 2;
    Polynomial q = var(n, 1) * var(n, 1);
    for (std::size_t i = 0; i < k; ++i) q += var(n, 2 + i) * var(n, 2 + i);
    e.closed_norm = var(n, 0) * q;
    std::vector<Polynomial> adj{q, var(n, 0) * var(n, 1)};
    for (std::size_t i = 0; i < k; ++i) adj.push_back(-(var(n, 0) * var(n, 2 + i)));
    e.closed_adjoint = forms(adj);
    return semisimple(e, n);
}

CatalogEntry entry_c_eps3() {
    CatalogEntry e;
    e.name = "C_eps3";
    e.description = "Q[eps]/(eps^3), basis 1, eps, eps^2";
    e.algebra = tabulate(3, {1, 0, 0}, [](const Vector& x, const Vector& y) {
        return Vector{x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[0] * y[2] + x[1] * y[1] + x[2] * y[0]};
    });
    e.closed_norm = var(3, 0).pow(3);
    e.closed_adjoint =
        forms({var(3, 0).pow(2), -(var(3, 0) * var(3, 1)), var(3, 1).pow(2) - var(3, 0) * var(3, 2)});
    e.expected_rank = 3;
    e.expected_radical_dim = 2;
    e.expected_ss_signature = {1, 1};
    e.expected_penico = {2, 1, 0};
    return e;
}

CatalogEntry entry_cxceps2() {
    CatalogEntry e;
    e.name = "CxCeps2";
    e.description = "Q x Q[eps]/(eps^2), coordinates (rho, lambda, mu) for (rho, lambda + mu eps)";
    e.algebra = tabulate(3, {1, 1, 0}, [](const Vector& x, const Vector& y) {
        return Vector{x[0] * y[0], x[1] * y[1], x[1] * y[2] + x[2] * y[1]};
    });
    e.closed_norm = var(3, 0) * var(3, 1).pow(2);
    e.closed_adjoint = forms({var(3, 1).pow(2), var(3, 0) * var(3, 1), -(var(3, 0) * var(3, 2))});
    e.expected_rank = 3;
    e.expected_radical_dim = 1;
    e.expected_ss_signature = {2, 2};
    e.expected_penico = {1, 0};
    return e;
}

CatalogEntry entry_sym3() {
    CatalogEntry e;
    e.name = "Sym3";
    e.description = "symmetric 3x3 matrices (Herm3 over Q)";
    CompositionAlgebra q = split_rationals();
    e.algebra = make_herm3(q);
    e.closed_norm = herm3_norm(q);
    PolyMatrix m = symbolic_square(
        6,
        [](std::size_t i, std::size_t j) {
            if (i == j) return var(6, i);
            std::size_t hi = std::max(i, j), lo = std::min(i, j);
            std::size_t slot = hi == 2 ? (lo == 1 ? 0 : 1) : 2;
            return var(6, 3 + slot);
        },
        3);
    PolyMatrix adj = symbolic_adjugate3(m);
    e.closed_adjoint = forms({adj[0][0], adj[1][1], adj[2][2], adj[2][1], adj[2][0], adj[1][0]});
    return semisimple(e, 6);
}

CatalogEntry entry_m3() {
    CatalogEntry e;
    e.name = "M3";
    e.description = "3x3 matrices with symmetrized product";
    e.algebra = make_m3();
    PolyMatrix m = symbolic_square(9, [](std::size_t i, std::size_t j) { return var(9, 3 * i + j); }, 3);
    e.closed_norm = symbolic_det3(m);
    PolyMatrix adj = symbolic_adjugate3(m);
    std::vector<Polynomial> f;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) f.push_back(adj[i][j]);
    e.closed_adjoint = forms(f);
    return semisimple(e, 9);
}

CatalogEntry entry_alt6() {
    CatalogEntry e;
    e.name = "Alt6";
    e.description = "skew 6x6 matrices A as J^{-1} A, norm Pf(A)";
    e.algebra = make_alt6();
    auto pairs = alt6_pairs();
    PolyMatrix a(6, std::vector<Polynomial>(6, Polynomial(15)));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        a[pairs[k].first][pairs[k].second] = var(15, k);
        a[pairs[k].second][pairs[k].first] = -var(15, k);
    }
    Polynomial pf = pfaffian(a);
    e.closed_norm = pf;
    // Pf * A^{-1} has entries (j, i) = dPf/da_ij and (i, j) = -dPf/da_ij
    PolyMatrix b(6, std::vector<Polynomial>(6, Polynomial(15)));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        Polynomial d = pf.derivative(k);
        b[pairs[k].second][pairs[k].first] = d;
        b[pairs[k].first][pairs[k].second] = -d;
    }
    Matrix j = alt6_j();
    std::vector<Polynomial> f;
    for (const auto& [r, c] : pairs) {
        Polynomial s(15);
        for (std::size_t p = 0; p < 6; ++p)
            for (std::size_t q = 0; q < 6; ++q)
                if (sgn(j(r, p)) != 0 && sgn(j(q, c)) != 0) s += (j(r, p) * j(q, c)) * b[p][q];
        f.push_back(s);
    }
    e.closed_adjoint = forms(f);
    return semisimple(e, 15);
}

CatalogEntry entry_herm3o() {
    CatalogEntry e;
    e.name = "Herm3O";
    e.description = "Hermitian 3x3 matrices over the split octonions (Zorn vector matrices)";
    CompositionAlgebra o = split_octonions();
    e.algebra = make_herm3(o);
    e.closed_norm = herm3_norm(o);
    return semisimple(e, 27);
}

CatalogEntry entry_j0(std::size_t n) {
    if (n == 0) fail(Errc::UnknownName, "J0 needs n >= 1");
    CatalogEntry e;
    e.name = "J0(" + std::to_string(n) + ")";
    e.description = "spin factor with q = 0, designated norm lambda^3";
    e.algebra = make_spin_factor(Matrix(n - 1, n - 1));
    e.expected_rank = n == 1 ? 1 : 2;
    e.designated_norm = var(n, 0).pow(3);
    std::vector<Polynomial> f{var(n, 0).pow(2)};
    for (std::size_t i = 1; i < n; ++i) f.push_back(-(var(n, 0) * var(n, i)));
    e.normed_map = forms(f);
    return e;
}

CatalogEntry entry_j1(std::size_t n) {
    if (n < 2) fail(Errc::UnknownName, "J1 needs n >= 2");
    CatalogEntry e;
    e.name = "J1(" + std::to_string(n) + ")";
    e.description = "spin factor with q(w) = -w1^2, designated norm (lambda + w1)^2 (lambda - w1)";
    Matrix q(n - 1, n - 1);
    q(0, 0) = -1;
    e.algebra = make_spin_factor(q);
    e.expected_rank = 2;
    Polynomial lp = var(n, 0) + var(n, 1);
    Polynomial lm = var(n, 0) - var(n, 1);
    e.designated_norm = lp * lp * lm;
    std::vector<Polynomial> f{lp * var(n, 0)};
    for (std::size_t i = 1; i < n; ++i) f.push_back(-(lp * var(n, i)));
    e.normed_map = forms(f);
    return e;
}

}  // namespace

CatalogEntry make_named(const std::string& name) {
    static const std::regex pattern(R"(^([A-Za-z0-9_]+?)(?:\((\d{1,3})\))?$)");
    std::smatch m;
    if (!std::regex_match(name, m, pattern)) fail(Errc::UnknownName, "unknown catalog name '" + name + "'");
    std::string base = m[1];
    bool has_arg = m[2].matched;
    std::size_t arg = has_arg ? std::stoul(m[2]) : 0;
    auto plain = [&](const char* s) { return base == s && !has_arg; };
    if (plain("C")) {
        CatalogEntry e = entry_j0(1);
        e.name = "C";
        e.description = "Q, designated norm x^3";
        return e;
    }
    if (plain("CxCxC")) return entry_cn(3, "CxCxC");
    if (base == "Cn" && has_arg && arg >= 1) return entry_cn(arg, name);
    if (base == "spin" && has_arg) return entry_spin(arg);
    if (base == "Cxspin" && has_arg) return entry_cxspin(arg);
    if (plain("C_eps3")) return entry_c_eps3();
    if (plain("CxCeps2")) return entry_cxceps2();
    if (plain("Sym3")) return entry_sym3();
    if (plain("M3")) return entry_m3();
    if (plain("Alt6")) return entry_alt6();
    if (plain("Herm3O")) return entry_herm3o();
    if (base == "J0" && has_arg) return entry_j0(arg);
    if (base == "J1" && has_arg) return entry_j1(arg);
    fail(Errc::UnknownName, "unknown catalog name '" + name + "'");
}

std::vector<std::string> catalog_names() {
    return {"C",      "Cn(3)",   "CxCxC", "spin(3)", "Cxspin(1)", "Cxspin(4)", "C_eps3",
            "CxCeps2", "Sym3",   "M3",    "Alt6",    "Herm3O",    "J0(3)",     "J1(3)"};
}

std::vector<std::string> rank3_names() {
    return {"Cn(3)", "Cxspin(1)", "Cxspin(4)", "C_eps3", "CxCeps2", "Sym3", "M3", "Alt6", "Herm3O"};
}

CubicData entry_cubic_data(const CatalogEntry& entry, const Options& opts) {
    if (!entry.rank_three()) fail(Errc::NotRankThree, entry.name + " is not a rank-3 entry");
    std::size_t n = entry.algebra.dim();
    if (cubic_data_cost(n) <= opts.budget || !entry.closed_norm) return cubic_data(entry.algebra, opts);
    return cubic_data_from_norm(entry.algebra, *entry.closed_norm);
}

}  // namespace cubix
