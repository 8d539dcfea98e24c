#include "greenring/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace greenring {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    a_.reserve(r_ * c_);
    for (const auto& row : rows) {
        if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
        for (const auto& v : row) a_.push_back(v);
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::column_vector(const std::vector<Rational>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return q.is_zero(); });
}

bool Matrix::is_identity() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) {
            const Rational& v = (*this)(i, j);
            if (i == j ? !v.is_one() : !v.is_zero()) return false;
        }
    return true;
}

std::size_t Matrix::nonzeros() const {
    return std::count_if(a_.begin(), a_.end(), [](const Rational& q) { return !q.is_zero(); });
}

Matrix Matrix::transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (!(*this)(i, j).is_zero()) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::column(std::size_t j) const {
    Matrix m(r_, 1);
    for (std::size_t i = 0; i < r_; ++i) m(i, 0) = (*this)(i, j);
    return m;
}

std::vector<Rational> Matrix::column_values(std::size_t j) const {
    std::vector<Rational> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(r_, idx.size());
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), c_);
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t j = 0; j < c_; ++j) m(k, j) = (*this)(idx[k], j);
    return m;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix m(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) m(a, b) = (*this)(rows[a], cols[b]);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch in +");
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch in -");
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
    if (s.is_zero()) {
        for (auto& v : a_) v = Rational();
    } else if (!s.is_one()) {
        for (auto& v : a_)
            if (!v.is_zero()) v *= s;
    }
    return *this;
}

void Matrix::add_scaled(const Matrix& o, const Rational& s) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch in add_scaled");
    if (s.is_zero()) return;
    for (std::size_t k = 0; k < a_.size(); ++k)
        if (!o.a_[k].is_zero()) a_[k].add_mul(o.a_[k], s);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("shape mismatch in *");
    Matrix c(a.r_, b.c_);
    // nonzero pattern of b's rows
    std::vector<std::vector<std::size_t>> nz(b.r_);
    for (std::size_t k = 0; k < b.r_; ++k)
        for (std::size_t j = 0; j < b.c_; ++j)
            if (!b(k, j).is_zero()) nz[k].push_back(j);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j : nz[k]) c(i, j).add_mul(aik, b(k, j));
        }
    return c;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < r_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

namespace {

// Pick a pivot row in column j among rows >= from; prefer unit entries.
std::ptrdiff_t choose_pivot(const Matrix& m, std::size_t from, std::size_t j) {
    std::ptrdiff_t best = -1;
    for (std::size_t i = from; i < m.rows(); ++i) {
        const Rational& v = m(i, j);
        if (v.is_zero()) continue;
        if (v.is_one() || (-v).is_one()) return std::ptrdiff_t(i);
        if (best < 0) best = std::ptrdiff_t(i);
    }
    return best;
}

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

Echelon rref(Matrix m) {
    Echelon e;
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t row = 0;
    std::vector<std::size_t> nzcols;
    for (std::size_t j = 0; j < C && row < R; ++j) {
        std::ptrdiff_t p = choose_pivot(m, row, j);
        if (p < 0) continue;
        swap_rows(m, row, std::size_t(p));
        Rational inv = m(row, j).inverse();
        nzcols.clear();
        for (std::size_t k = j; k < C; ++k) {
            if (m(row, k).is_zero()) continue;
            if (!inv.is_one()) m(row, k) *= inv;
            nzcols.push_back(k);
        }
        for (std::size_t i = 0; i < R; ++i) {
            if (i == row || m(i, j).is_zero()) continue;
            Rational f = -m(i, j);
            for (std::size_t k : nzcols) m(i, k).add_mul(f, m(row, k));
        }
        e.pivots.push_back(j);
        ++row;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) {
    // forward elimination only
    Matrix a = m;
    const std::size_t R = a.rows(), C = a.cols();
    std::size_t row = 0;
    std::vector<std::size_t> nzcols;
    for (std::size_t j = 0; j < C && row < R; ++j) {
        std::ptrdiff_t p = choose_pivot(a, row, j);
        if (p < 0) continue;
        swap_rows(a, row, std::size_t(p));
        Rational inv = a(row, j).inverse();
        nzcols.clear();
        for (std::size_t k = j + 1; k < C; ++k)
            if (!a(row, k).is_zero()) nzcols.push_back(k);
        for (std::size_t i = row + 1; i < R; ++i) {
            if (a(i, j).is_zero()) continue;
            Rational f = -(a(i, j) * inv);
            a(i, j) = Rational();
            for (std::size_t k : nzcols) a(i, k).add_mul(f, a(row, k));
        }
        ++row;
    }
    return row;
}

Matrix nullspace(const Matrix& m) {
    Echelon e = rref(m);
    const std::size_t C = m.cols();
    std::vector<char> is_pivot(C, 0);
    for (std::size_t p : e.pivots) is_pivot[p] = 1;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < C; ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix n(C, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        std::size_t f = free[k];
        n(f, k) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            if (!e.reduced(r, f).is_zero()) n(e.pivots[r], k) = -e.reduced(r, f);
    }
    return n;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    const std::size_t C = a.cols();
    Echelon e = rref(hstack({a, b}));
    for (std::size_t p : e.pivots)
        if (p >= C) return std::nullopt;
    Matrix x(C, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, C + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    const std::size_t n = m.rows();
    Echelon e = rref(hstack({m, Matrix::identity(n)}));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

Rational trace(const Matrix& m) {
    Rational t;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

Rational determinant(Matrix a) {
    if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::ptrdiff_t p = choose_pivot(a, j, j);
        if (p < 0) return Rational();
        if (std::size_t(p) != j) {
            swap_rows(a, j, std::size_t(p));
            det = -det;
        }
        det *= a(j, j);
        Rational inv = a(j, j).inverse();
        for (std::size_t i = j + 1; i < n; ++i) {
            if (a(i, j).is_zero()) continue;
            Rational f = -(a(i, j) * inv);
            for (std::size_t k = j + 1; k < n; ++k)
                if (!a(j, k).is_zero()) a(i, k).add_mul(f, a(j, k));
        }
    }
    return det;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& v = a(i, j);
            if (v.is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = v * b(p, q);
        }
    return k;
}

Matrix hstack(const std::vector<Matrix>& parts) {
    std::size_t R = 0, C = 0;
    bool first = true;
    for (const auto& p : parts) {
        if (first) {
            R = p.rows();
            first = false;
        } else if (p.rows() != R) {
            throw std::invalid_argument("hstack: row mismatch");
        }
        C += p.cols();
    }
    Matrix m(R, C);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < R; ++i)
            for (std::size_t j = 0; j < p.cols(); ++j) m(i, off + j) = p(i, j);
        off += p.cols();
    }
    return m;
}

Matrix vstack(const std::vector<Matrix>& parts) {
    std::size_t R = 0, C = 0;
    bool first = true;
    for (const auto& p : parts) {
        if (first) {
            C = p.cols();
            first = false;
        } else if (p.cols() != C) {
            throw std::invalid_argument("vstack: column mismatch");
        }
        R += p.rows();
    }
    Matrix m(R, C);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t j = 0; j < C; ++j) m(off + i, j) = p(i, j);
        off += p.rows();
    }
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

std::vector<std::size_t> pivot_columns(const Matrix& m) { return rref(m).pivots; }

Matrix column_basis(const Matrix& m) { return m.select_columns(pivot_columns(m)); }

std::vector<std::size_t> complement_indices(const Matrix& m) {
    const std::size_t n = m.rows();
    auto piv = pivot_columns(hstack({m, Matrix::identity(n)}));
    std::vector<std::size_t> out;
    for (std::size_t p : piv)
        if (p >= m.cols()) out.push_back(p - m.cols());
    return out;
}

bool in_column_span(const Matrix& a, const Matrix& b) {
    if (b.cols() == 0) return true;
    return rank(a) == rank(hstack({a, b}));
}

namespace {

// r += c * s over sorted sparse rows
void sparse_axpy(SparseRow& r, const Rational& c, const SparseRow& s) {
    SparseRow out;
    out.reserve(r.size() + s.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
        if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
            out.push_back(std::move(r[i++]));
        } else if (i == r.size() || s[j].first < r[i].first) {
            out.emplace_back(s[j].first, c * s[j].second);
            ++j;
        } else {
            Rational v = std::move(r[i].second);
            v.add_mul(c, s[j].second);
            if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    r = std::move(out);
}

}  // namespace

Matrix sparse_nullspace(std::vector<SparseRow> rows, std::size_t ncols) {
    std::vector<std::ptrdiff_t> pivot_of(ncols, -1);
    std::vector<SparseRow> basis;
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        // merge duplicates
        SparseRow clean;
        for (auto& e : row) {
            if (!clean.empty() && clean.back().first == e.first) {
                clean.back().second += e.second;
                if (clean.back().second.is_zero()) clean.pop_back();
            } else if (!e.second.is_zero()) {
                clean.push_back(std::move(e));
            }
        }
        row = std::move(clean);
        while (!row.empty()) {
            std::size_t lead = row.front().first;
            std::ptrdiff_t p = pivot_of[lead];
            if (p < 0) break;
            Rational f = -row.front().second;
            sparse_axpy(row, f, basis[std::size_t(p)]);
        }
        if (row.empty()) continue;
        Rational inv = row.front().second.inverse();
        for (auto& e : row) e.second *= inv;
        pivot_of[row.front().first] = std::ptrdiff_t(basis.size());
        basis.push_back(std::move(row));
    }
    // back substitution to reduced form, highest pivot first
    std::vector<std::size_t> order(basis.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return basis[a].front().first > basis[b].front().first; });
    for (std::size_t k : order) {
        SparseRow& row = basis[k];
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t t = 1; t < row.size(); ++t) {
                std::ptrdiff_t p = pivot_of[row[t].first];
                if (p >= 0) {
                    Rational f = -row[t].second;
                    sparse_axpy(row, f, basis[std::size_t(p)]);
                    again = true;
                    break;
                }
            }
        }
    }
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < ncols; ++j)
        if (pivot_of[j] < 0) free.push_back(j);
    std::vector<std::ptrdiff_t> free_pos(ncols, -1);
    for (std::size_t k = 0; k < free.size(); ++k) free_pos[free[k]] = std::ptrdiff_t(k);
    Matrix n(ncols, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) n(free[k], k) = 1;
    for (const auto& row : basis) {
        std::size_t p = row.front().first;
        for (std::size_t t = 1; t < row.size(); ++t) n(p, std::size_t(free_pos[row[t].first])) = -row[t].second;
    }
    return n;
}

}  // namespace greenring
