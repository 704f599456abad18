#include "coincide/linalg.hpp"

#include <stdexcept>

namespace coincide {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
{
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw std::invalid_argument("ragged matrix");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

RatMatrix RatMatrix::transposed() const
{
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

void RatMatrix::append_row(const std::vector<Rat>& row)
{
    if (rows_ == 0 && cols_ == 0)
        cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_)
        throw std::invalid_argument("row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

// Each row scaled by the lcm of its denominators; row space is unchanged.
ZMat to_integer_rows(const RatMatrix& m)
{
    ZMat z(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j)
            z[i][j] = m(i, j).num() * (l / m(i, j).den());
    }
    return z;
}

// Fraction-free Gaussian elimination in place; returns pivot columns.
std::vector<int> bareiss(ZMat& a, int ncols)
{
    std::vector<int> piv;
    int rows = static_cast<int>(a.size());
    mpz_class prev(1);
    int r = 0;
    for (int c = 0; c < ncols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < ncols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

int rank(const RatMatrix& m)
{
    ZMat z = to_integer_rows(m);
    return static_cast<int>(bareiss(z, m.cols()).size());
}

LinearSolveOutcome solve_linear(const RatMatrix& a, const std::vector<Rat>& b)
{
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("solve_linear: rhs length mismatch");
    int n = a.cols();
    RatMatrix aug(a.rows(), n + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    ZMat z = to_integer_rows(aug);
    std::vector<int> piv = bareiss(z, n + 1);

    LinearSolveOutcome out;
    bool rhs_pivot = !piv.empty() && piv.back() == n;
    out.rank = static_cast<int>(piv.size()) - (rhs_pivot ? 1 : 0);
    if (rhs_pivot) {
        out.kind = LinearSolveOutcome::Kind::Inconsistent;
        return out;
    }
    if (out.rank < n) {
        out.kind = LinearSolveOutcome::Kind::Underdetermined;
        return out;
    }
    // square upper-triangular block in rows 0..n-1
    out.x.assign(n, Rat(0));
    for (int i = n - 1; i >= 0; --i) {
        Rat s(z[i][n]);
        for (int j = i + 1; j < n; ++j)
            s -= Rat(z[i][j]) * out.x[j];
        out.x[i] = s / Rat(z[i][i]);
    }
    out.kind = LinearSolveOutcome::Kind::Unique;
    return out;
}

}  // namespace coincide
