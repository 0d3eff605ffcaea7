/*
   Copyright 2026 The opfields authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OPFIELDS_MATRIX_HPP
#define OPFIELDS_MATRIX_HPP

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "field.hpp"

namespace opfields {

template <field K>
using Vec = std::vector<K>;

template <field K>
Vec<K> zero_vec(int n)
{
    return Vec<K>(n, K::zero());
}

template <field K>
Vec<K> unit_vec(int n, int i)
{
    Vec<K> v(n, K::zero());
    v[i] = K::one();
    return v;
}

template <field K>
bool is_zero_vec(const Vec<K>& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <field K>
Vec<K> add_vec(const Vec<K>& a, const Vec<K>& b)
{
    Vec<K> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

template <field K>
Vec<K> sub_vec(const Vec<K>& a, const Vec<K>& b)
{
    Vec<K> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
    return r;
}

template <field K>
Vec<K> scale_vec(const K& c, const Vec<K>& a)
{
    Vec<K> r = a;
    for (auto& x : r) x = c * x;
    return r;
}

/// Tensor coordinates: (a ox b)[i*dim(b)+j] = a[i]*b[j].
template <field K>
Vec<K> tensor_vec(const Vec<K>& a, const Vec<K>& b)
{
    Vec<K> r(a.size() * b.size(), K::zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
    return r;
}

/// Dense matrix over an exact field. Row-major; vectors act as columns.
template <field K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, K::zero()) {}

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K::one();
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<K>>& rows)
    {
        if (rows.empty()) return Matrix(0, 0);
        Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows_; ++i)
            for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        return m;
    }
    static Matrix from_columns(const std::vector<Vec<K>>& cols)
    {
        if (cols.empty()) return Matrix(0, 0);
        Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
        for (int j = 0; j < m.cols_; ++j)
            for (int i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    K& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const K& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    Vec<K> row(int i) const
    {
        Vec<K> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    Vec<K> column(int j) const
    {
        Vec<K> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_column(int j, const Vec<K>& c)
    {
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Matrix r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - b.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        assert(a.cols_ == b.rows_);
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j)
                    r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const K& c, const Matrix& m)
    {
        Matrix r = m;
        for (auto& x : r.a_) x = c * x;
        return r;
    }
    Matrix operator-() const
    {
        Matrix r = *this;
        for (auto& x : r.a_) x = -x;
        return r;
    }

    friend Vec<K> operator*(const Matrix& m, const Vec<K>& v)
    {
        assert(static_cast<int>(v.size()) == m.cols_);
        Vec<K> r(m.rows_, K::zero());
        for (int i = 0; i < m.rows_; ++i)
            for (int j = 0; j < m.cols_; ++j)
                if (!m(i, j).is_zero()) r[i] = r[i] + m(i, j) * v[j];
        return r;
    }

    Matrix transpose() const
    {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Kronecker product in tensor coordinates matching tensor_vec.
    static Matrix kron(const Matrix& a, const Matrix& b)
    {
        Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) {
                if (a(i, j).is_zero()) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        r(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
            }
        return r;
    }

    template <class F>
    Matrix map(F&& f) const
    {
        Matrix r = *this;
        for (auto& x : r.a_) x = f(x);
        return r;
    }

    Matrix pow(int e) const
    {
        assert(rows_ == cols_);
        Matrix r = identity(rows_);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    K trace() const
    {
        K t = K::zero();
        for (int i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    /// First-nonzero pivoting in input order keeps output canonical.
    std::vector<int> rref()
    {
        std::vector<int> pivots;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int p = -1;
            for (int i = r; i < rows_; ++i)
                if (!(*this)(i, c).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            if (p != r)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            K inv = K::one() / (*this)(r, c);
            for (int j = 0; j < cols_; ++j) (*this)(r, j) = inv * (*this)(r, j);
            for (int i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c).is_zero()) continue;
                K f = (*this)(i, c);
                for (int j = 0; j < cols_; ++j)
                    (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    int rank() const
    {
        Matrix m = *this;
        return static_cast<int>(m.rref().size());
    }

    /// Basis of the right kernel {x : Ax = 0}, ordered by free column.
    std::vector<Vec<K>> kernel_basis() const
    {
        Matrix m = *this;
        std::vector<int> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<Vec<K>> basis;
        for (int j = 0; j < cols_; ++j) {
            if (is_pivot[j]) continue;
            Vec<K> v(cols_, K::zero());
            v[j] = K::one();
            for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(static_cast<int>(i), j);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::optional<Vec<K>> solve(const Vec<K>& b) const
    {
        Matrix aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_) = b[i];
        }
        std::vector<int> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        Vec<K> x(cols_, K::zero());
        for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(static_cast<int>(i), cols_);
        return x;
    }

    std::optional<Matrix> inverse() const
    {
        assert(rows_ == cols_);
        Matrix aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = K::one();
        }
        std::vector<int> pivots = aug.rref();
        if (static_cast<int>(pivots.size()) != rows_ || pivots.back() != rows_ - 1)
            return std::nullopt;
        Matrix inv(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
        return inv;
    }

    K det() const
    {
        assert(rows_ == cols_);
        Matrix m = *this;
        K d = K::one();
        for (int c = 0; c < cols_; ++c) {
            int p = -1;
            for (int i = c; i < rows_; ++i)
                if (!m(i, c).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return K::zero();
            if (p != c) {
                for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
                d = -d;
            }
            d = d * m(c, c);
            K inv = K::one() / m(c, c);
            for (int i = c + 1; i < rows_; ++i) {
                if (m(i, c).is_zero()) continue;
                K f = m(i, c) * inv;
                for (int j = c; j < cols_; ++j) m(i, j) = m(i, j) - f * m(c, j);
            }
        }
        return d;
    }

  private:
    int rows_, cols_;
    std::vector<K> a_;
};

/// Row space in canonical (reduced row echelon) form.
template <field K>
class Subspace {
  public:
    Subspace() : ambient_(0) {}
    explicit Subspace(int ambient) : ambient_(ambient) {}

    static Subspace span(int ambient, const std::vector<Vec<K>>& vectors)
    {
        Subspace s(ambient);
        if (vectors.empty()) return s;
        Matrix<K> m = Matrix<K>::from_rows(vectors);
        s.pivots_ = m.rref();
        std::vector<Vec<K>> rows;
        for (size_t i = 0; i < s.pivots_.size(); ++i) rows.push_back(m.row(static_cast<int>(i)));
        s.basis_ = rows.empty() ? Matrix<K>(0, ambient) : Matrix<K>::from_rows(rows);
        return s;
    }

    static Subspace full(int ambient)
    {
        std::vector<Vec<K>> rows;
        for (int i = 0; i < ambient; ++i) rows.push_back(unit_vec<K>(ambient, i));
        return span(ambient, rows);
    }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix<K>& basis() const { return basis_; }
    Vec<K> basis_vector(int i) const { return basis_.row(i); }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Coordinates of v in the canonical basis, if v lies in the space.
    std::optional<Vec<K>> coords(const Vec<K>& v) const
    {
        Vec<K> c(dim(), K::zero());
        Vec<K> rem = v;
        for (int i = 0; i < dim(); ++i) {
            c[i] = rem[pivots_[i]];
            if (c[i].is_zero()) continue;
            for (int j = 0; j < ambient_; ++j) rem[j] = rem[j] - c[i] * basis_(i, j);
        }
        if (!is_zero_vec(rem)) return std::nullopt;
        return c;
    }

    bool contains(const Vec<K>& v) const { return coords(v).has_value(); }

    bool contains(const Subspace& other) const
    {
        for (int i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    static Subspace intersect(const Subspace& a, const Subspace& b)
    {
        // x = u^T A = v^T B; solve [A^T | -B^T] null space.
        int n = a.ambient_;
        Matrix<K> m(n, a.dim() + b.dim());
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < a.dim(); ++j) m(i, j) = a.basis_(j, i);
            for (int j = 0; j < b.dim(); ++j) m(i, a.dim() + j) = -b.basis_(j, i);
        }
        std::vector<Vec<K>> vecs;
        for (const auto& k : m.kernel_basis()) {
            Vec<K> x(n, K::zero());
            for (int j = 0; j < a.dim(); ++j)
                if (!k[j].is_zero()) x = add_vec(x, scale_vec(k[j], a.basis_.row(j)));
            vecs.push_back(std::move(x));
        }
        return span(n, vecs);
    }

    static Subspace sum(const Subspace& a, const Subspace& b)
    {
        std::vector<Vec<K>> vecs;
        for (int i = 0; i < a.dim(); ++i) vecs.push_back(a.basis_vector(i));
        for (int i = 0; i < b.dim(); ++i) vecs.push_back(b.basis_vector(i));
        return span(a.ambient_, vecs);
    }

  private:
    int ambient_;
    Matrix<K> basis_{0, 0};
    std::vector<int> pivots_;
};

/// Quotient of K^n by a subspace, with deterministic section: the quotient
/// basis consists of the ambient coordinates away from the pivot columns.
template <field K>
class QuotientSpace {
  public:
    QuotientSpace() = default;
    explicit QuotientSpace(Subspace<K> rel) : rel_(std::move(rel))
    {
        std::vector<bool> is_pivot(rel_.ambient_dim(), false);
        for (int p : rel_.pivots()) is_pivot[p] = true;
        for (int j = 0; j < rel_.ambient_dim(); ++j)
            if (!is_pivot[j]) free_.push_back(j);
    }

    int dim() const { return static_cast<int>(free_.size()); }
    int ambient_dim() const { return rel_.ambient_dim(); }
    const Subspace<K>& relations() const { return rel_; }

    /// Ambient vector -> quotient coordinates.
    Vec<K> project(const Vec<K>& v) const
    {
        Vec<K> rem = v;
        for (int i = 0; i < rel_.dim(); ++i) {
            K c = rem[rel_.pivots()[i]];
            if (c.is_zero()) continue;
            for (int j = 0; j < rel_.ambient_dim(); ++j)
                rem[j] = rem[j] - c * rel_.basis()(i, j);
        }
        Vec<K> out(dim(), K::zero());
        for (int i = 0; i < dim(); ++i) out[i] = rem[free_[i]];
        return out;
    }

    /// Chosen section: quotient coordinates -> ambient representative.
    Vec<K> section(const Vec<K>& q) const
    {
        Vec<K> v(rel_.ambient_dim(), K::zero());
        for (int i = 0; i < dim(); ++i) v[free_[i]] = q[i];
        return v;
    }

    Matrix<K> projection_matrix() const
    {
        Matrix<K> m(dim(), ambient_dim());
        for (int j = 0; j < ambient_dim(); ++j) {
            Vec<K> col = project(unit_vec<K>(ambient_dim(), j));
            for (int i = 0; i < dim(); ++i) m(i, j) = col[i];
        }
        return m;
    }

    Matrix<K> section_matrix() const
    {
        Matrix<K> m(ambient_dim(), dim());
        for (int i = 0; i < dim(); ++i) m(free_[i], i) = K::one();
        return m;
    }

    /// Matrix of the induced map on the quotient for an ambient map that
    /// preserves the relation subspace.
    Matrix<K> induced_map(const Matrix<K>& ambient_map) const
    {
        return projection_matrix() * ambient_map * section_matrix();
    }

  private:
    Subspace<K> rel_;
    std::vector<int> free_;
};

}  // namespace opfields

#endif
