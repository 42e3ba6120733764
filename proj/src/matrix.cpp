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

#include "cubix/matrix.hpp"

#include <cstdint>

#include "cubix/error.hpp"

namespace cubix {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
    require_dim(v.size(), cols_, "matrix row");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vector& v) {
    require_dim(v.size(), rows_, "matrix column");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Errc::DimensionMismatch, "matrix shapes differ");
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_dim(b.rows_, a.cols_, "matrix product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (sgn(b(k, j)) != 0) r(i, j) += x * b(k, j);
        }
    return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
    require_dim(v.size(), a.cols_, "matrix-vector product");
    Vector r = zeros(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) r[i] += a(i, j) * v[j];
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.data_) x *= s;
    return r;
}

std::string Matrix::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out += ", ";
        out += cubix::to_string(row(i));
    }
    return out + "]";
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            if (sgn(m(r, j)) != 0) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Matrix& m) {
    Matrix w = m;
    return rref(w).size();
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) fail(Errc::SingularMatrix, "inverse of a non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) fail(Errc::SingularMatrix, "matrix is not invertible");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) fail(Errc::DimensionMismatch, "determinant of a non-square matrix");
    Matrix w = m;
    std::size_t n = w.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(w(p, c)) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) swap(w(p, j), w(c, j));
            det = -det;
        }
        det *= w(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(w(i, c)) == 0) continue;
            Rational f = w(i, c) / w(c, c);
            for (std::size_t j = c; j < n; ++j) w(i, j) -= f * w(c, j);
        }
    }
    return det;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::row_space(const Matrix& m) {
    Subspace s(m.cols());
    Matrix w = m;
    auto piv = rref(w);
    Matrix b(piv.size(), m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b(i, j) = w(i, j);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(piv);
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
    if (vectors.empty()) return Subspace(ambient);
    return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::whole(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

std::vector<Vector> Subspace::vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
    return out;
}

bool Subspace::contains(const Vector& v) const {
    require_dim(v.size(), ambient_, "subspace membership");
    // reduce v against the echelon basis
    Vector w = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        Rational f = w[pivots_[i]];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (sgn(basis_(i, j)) != 0) w[j] -= f * basis_(i, j);
    }
    return cubix::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::annihilator() const {
    if (dim() == 0) return whole(ambient_);
    Subspace k = nullspace(basis_);
    return k;
}

Subspace Subspace::intersect(const Subspace& other) const {
    require_dim(other.ambient_, ambient_, "subspace intersection");
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
    Subspace ann = other.annihilator();
    if (ann.dim() == 0) return *this;
    // x = a^T B with C x = 0  <=>  (C B^T) a = 0
    Matrix cbt = ann.basis() * basis_.transpose();
    Subspace coeffs = nullspace(cbt);
    std::vector<Vector> vecs;
    for (std::size_t i = 0; i < coeffs.dim(); ++i) {
        Vector a = coeffs.basis().row(i);
        vecs.push_back(basis_.transpose() * a);
    }
    return span(ambient_, vecs);
}

Subspace Subspace::operator+(const Subspace& other) const {
    require_dim(other.ambient_, ambient_, "subspace sum");
    auto vecs = vectors();
    for (auto& v : other.vectors()) vecs.push_back(v);
    return span(ambient_, vecs);
}

Subspace nullspace(const Matrix& m) {
    Matrix w = m;
    auto piv = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vector> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v = zeros(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -w(i, f);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), vecs);
}

// ------------------------------------------------------------------ solving

namespace {

SolveResult solve_from_rref(const Matrix& w, const std::vector<std::size_t>& piv, std::size_t ncols,
                            std::size_t rhs_col) {
    SolveResult res;
    std::size_t rank_a = 0;
    for (auto p : piv) {
        if (p < ncols) ++rank_a;
    }
    res.rank = rank_a;
    // inconsistent iff some row has its pivot in the rhs column
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == rhs_col) {
            res.status = SolveStatus::Inconsistent;
            return res;
        }
    }
    res.solution = zeros(ncols);
    for (std::size_t i = 0; i < piv.size(); ++i)
        if (piv[i] < ncols) res.solution[piv[i]] = w(i, rhs_col);
    res.status = rank_a == ncols ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return res;
}

}  // namespace

SolveResult solve(const Matrix& a, const Vector& b) {
    require_dim(b.size(), a.rows(), "solve rhs");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto piv = rref(aug);
    return solve_from_rref(aug, piv, a.cols(), a.cols());
}

std::vector<SolveResult> solve_columns(const Matrix& a, const Matrix& b) {
    require_dim(b.rows(), a.rows(), "solve_columns rhs");
    std::size_t n = a.cols();
    Matrix aug(a.rows(), n + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
    }
    // eliminate on the A block only, carrying the right-hand sides along
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < aug.rows(); ++c) {
        std::size_t p = r;
        while (p < aug.rows() && sgn(aug(p, c)) == 0) ++p;
        if (p == aug.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < aug.cols(); ++j) swap(aug(p, j), aug(r, j));
        Rational inv = 1 / aug(r, c);
        for (std::size_t j = c; j < aug.cols(); ++j)
            if (sgn(aug(r, j)) != 0) aug(r, j) *= inv;
        for (std::size_t i = 0; i < aug.rows(); ++i) {
            if (i == r || sgn(aug(i, c)) == 0) continue;
            Rational f = aug(i, c);
            for (std::size_t j = c; j < aug.cols(); ++j)
                if (sgn(aug(r, j)) != 0) aug(i, j) -= f * aug(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<SolveResult> out;
    for (std::size_t k = 0; k < b.cols(); ++k) {
        SolveResult res;
        res.rank = piv.size();
        bool consistent = true;
        for (std::size_t i = piv.size(); i < aug.rows(); ++i)
            if (sgn(aug(i, n + k)) != 0) consistent = false;
        if (!consistent) {
            res.status = SolveStatus::Inconsistent;
        } else {
            res.solution = zeros(n);
            for (std::size_t i = 0; i < piv.size(); ++i) res.solution[piv[i]] = aug(i, n + k);
            res.status = piv.size() == n ? SolveStatus::Unique : SolveStatus::Underdetermined;
        }
        out.push_back(std::move(res));
    }
    return out;
}

// ------------------------------------------------------- modular elimination

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

/// Primes just below 2^62, found with GMP's primality test.
u64 nth_prime(std::size_t k) {
    static std::vector<u64> cache;
    while (cache.size() <= k) {
        Integer start = cache.empty() ? Integer(1) << 62 : Integer(cache.back());
        // walk downwards: previous prime below start
        Integer c = start - 1;
        while (mpz_probab_prime_p(c.get_mpz_t(), 30) == 0) c -= 1;
        cache.push_back(c.get_ui());
    }
    return cache[k];
}

bool reduce_mod(const Rational& q, u64 p, u64& out) {
    Integer num = q.get_num() % Integer(static_cast<unsigned long>(p));
    if (num < 0) num += Integer(static_cast<unsigned long>(p));
    Integer den = q.get_den() % Integer(static_cast<unsigned long>(p));
    if (den == 0) return false;
    out = mulmod(num.get_ui(), invmod(den.get_ui(), p), p);
    return true;
}

struct ModularOutcome {
    bool ok = false;          // usable prime (no bad denominators)
    std::size_t rank_a = 0;
    bool consistent = true;
    std::vector<u64> solution;  // valid when rank_a == cols && consistent
    std::vector<std::size_t> pivots;
};

ModularOutcome eliminate_mod(const Matrix& a, const Vector& b, u64 p) {
    ModularOutcome out;
    std::size_t rows = a.rows(), cols = a.cols(), w = cols + 1;
    std::vector<u64> m(rows * w);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            if (!reduce_mod(a(i, j), p, m[i * w + j])) return out;
        if (!reduce_mod(b[i], p, m[i * w + cols])) return out;
    }
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w && r < rows; ++c) {
        std::size_t q = r;
        while (q < rows && m[q * w + c] == 0) ++q;
        if (q == rows) continue;
        if (q != r)
            for (std::size_t j = 0; j < w; ++j) std::swap(m[q * w + j], m[r * w + j]);
        u64 inv = invmod(m[r * w + c], p);
        for (std::size_t j = c; j < w; ++j) m[r * w + j] = mulmod(m[r * w + j], inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            u64 f = m[i * w + c];
            if (f == 0) continue;
            u64* ri = &m[i * w];
            const u64* rr = &m[r * w];
            for (std::size_t j = c; j < w; ++j) {
                if (rr[j] == 0) continue;
                u64 t = mulmod(f, rr[j], p);
                ri[j] = ri[j] >= t ? ri[j] - t : ri[j] + p - t;
            }
        }
        piv.push_back(c);
        ++r;
    }
    out.ok = true;
    out.pivots = piv;
    for (auto c : piv) {
        if (c < cols) ++out.rank_a;
        else out.consistent = false;
    }
    if (out.rank_a == cols && out.consistent) {
        out.solution.resize(cols);
        for (std::size_t i = 0; i < cols; ++i) out.solution[piv[i]] = m[i * w + cols];
    }
    return out;
}

bool rational_reconstruct(const Integer& a, const Integer& m, Rational& out) {
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
    Integer r0 = m, r1 = a, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Integer t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return false;
    out = Rational(r1, t1);
    out.canonicalize();
    return true;
}

bool verify_solution(const Matrix& a, const Vector& b, const Vector& x) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0) acc += a(i, j) * x[j];
        if (acc != b[i]) return false;
    }
    return true;
}

}  // namespace

SolveResult solve_large(const Matrix& a, const Vector& b) {
    require_dim(b.size(), a.rows(), "solve rhs");
    constexpr std::size_t kMaxPrimes = 24;
    std::size_t cols = a.cols();
    std::vector<Integer> residues(cols, Integer(0));
    Integer modulus = 1;
    std::size_t deficient = 0;
    for (std::size_t k = 0; k < kMaxPrimes; ++k) {
        u64 p = nth_prime(k);
        ModularOutcome mo = eliminate_mod(a, b, p);
        if (!mo.ok) continue;
        if (mo.rank_a < cols) {
            if (++deficient >= 2) {
                SolveResult res;
                res.status = SolveStatus::Underdetermined;
                res.rank = mo.rank_a;
                return res;
            }
            continue;
        }
        if (!mo.consistent) {
            // full column rank modulo p together with rank([A|b]) > rank(A)
            // modulo p certifies inconsistency over Q.
            SolveResult res;
            res.status = SolveStatus::Inconsistent;
            res.rank = cols;
            return res;
        }
        // CRT merge
        Integer pz(static_cast<unsigned long>(p));
        Integer inv_mod_p;
        Integer mm = modulus % pz;
        mpz_invert(inv_mod_p.get_mpz_t(), mm.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            Integer rj(static_cast<unsigned long>(mo.solution[j]));
            Integer diff = (rj - residues[j] % pz) % pz;
            if (diff < 0) diff += pz;
            Integer t = (diff * inv_mod_p) % pz;
            residues[j] += modulus * t;
        }
        modulus *= pz;
        Vector x(cols);
        bool ok = true;
        for (std::size_t j = 0; j < cols && ok; ++j) ok = rational_reconstruct(residues[j], modulus, x[j]);
        if (ok && verify_solution(a, b, x)) {
            SolveResult res;
            res.status = SolveStatus::Unique;
            res.rank = cols;
            res.solution = std::move(x);
            return res;
        }
    }
    return solve(a, b);
}

SolveResult solve_auto(const Matrix& a, const Vector& b) {
    constexpr std::size_t kSmall = 2000;
    if (a.rows() * a.cols() <= kSmall) return solve(a, b);
    return solve_large(a, b);
}

Subspace nullspace_large(const Matrix& a) {
    std::size_t cols = a.cols();
    ModularOutcome probe;
    for (std::size_t k = 0; k < 4 && !probe.ok; ++k) probe = eliminate_mod(a, zeros(a.rows()), nth_prime(k));
    if (!probe.ok) return nullspace(a);
    std::vector<bool> is_pivot(cols, false);
    std::vector<std::size_t> pivots;
    for (auto c : probe.pivots) {
        if (c < cols) {
            is_pivot[c] = true;
            pivots.push_back(c);
        }
    }
    Matrix ap(a.rows(), pivots.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < pivots.size(); ++j) ap(i, j) = a(i, pivots[j]);
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector rhs(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) rhs[i] = -a(i, f);
        SolveResult res = solve_large(ap, rhs);
        if (res.status != SolveStatus::Unique) return nullspace(a);
        Vector v(cols);
        v[f] = 1;
        for (std::size_t j = 0; j < pivots.size(); ++j) v[pivots[j]] = res.solution[j];
        basis.push_back(std::move(v));
    }
    return Subspace::span(cols, basis);
}

Subspace nullspace_auto(const Matrix& a) {
    constexpr std::size_t kSmall = 2000;
    return a.rows() * a.cols() <= kSmall ? nullspace(a) : nullspace_large(a);
}

Complement standard_complement(const Subspace& r) {
    std::size_t n = r.ambient_dim();
    Complement c;
    Subspace span = r;
    for (std::size_t i = 0; i < n && span.dim() < n; ++i) {
        Vector v = unit_vector(n, i);
        if (span.contains(v)) continue;
        c.indices.push_back(i);
        span = span + Subspace::span(n, {v});
    }
    std::size_t m = c.indices.size();
    c.basis = Matrix(n, m);
    Matrix full(n, n);
    for (std::size_t k = 0; k < m; ++k) {
        c.basis(c.indices[k], k) = 1;
        full(c.indices[k], k) = 1;
    }
    auto rv = r.vectors();
    for (std::size_t t = 0; t < rv.size(); ++t) full.set_col(m + t, rv[t]);
    c.coords = inverse(full);
    return c;
}

}  // namespace cubix
