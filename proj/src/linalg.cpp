#include "wbr/linalg.hpp"

#include <algorithm>

namespace wbr {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix(0, 0);
    const size_t cols = blocks.front().cols();
    size_t rows = 0;
    for (const Matrix& b : blocks) {
        if (b.cols() != cols) throw InternalError("vstack: column mismatch");
        rows += b.rows();
    }
    Matrix m(rows, cols);
    size_t r0 = 0;
    for (const Matrix& b : blocks) {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < cols; ++j) m.at(r0 + i, j) = b.at(i, j);
        r0 += b.rows();
    }
    return m;
}

namespace {

// Divides a row by its content: common rational factor for rational rows,
// denominator lcm followed by numerator gcd for polynomial rows. Keeps
// fraction-free elimination from blowing up.
void remove_row_content(std::vector<Scalar>& row) {
    bool any_fun = false;
    Indet var = Indet::delta;
    bool all_zero = true;
    for (const Scalar& x : row) {
        if (x.is_zero()) continue;
        all_zero = false;
        if (!x.is_rational()) {
            any_fun = true;
            var = x.fun().var();
        }
    }
    if (all_zero) return;

    if (!any_fun) {
        Int num_gcd(0), den_lcm(1);
        for (const Scalar& x : row) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.rational().get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.rational().get_den_mpz_t());
        }
        Rat c(num_gcd, den_lcm);
        c.canonicalize();
        const Scalar inv = Scalar(c);
        for (Scalar& x : row)
            if (!x.is_zero()) x = x / inv;
        return;
    }

    Poly den_lcm = Poly::constant(var, 1);
    for (const Scalar& x : row) {
        if (x.is_zero()) continue;
        const Poly d = x.as_fun(var).den();
        den_lcm = exact_div(den_lcm * d, poly_gcd(den_lcm, d));
    }
    std::vector<Poly> nums;
    nums.reserve(row.size());
    for (const Scalar& x : row) {
        RatFun f = x.as_fun(var);
        nums.push_back(f.num() * exact_div(den_lcm, f.den()));
    }
    Poly g(var);
    for (const Poly& p : nums) g = poly_gcd(g, p);
    Rat content(0);
    if (!g.is_zero()) {
        for (Poly& p : nums)
            if (!p.is_zero()) p = exact_div(p, g);
    }
    for (const Poly& p : nums) {
        if (p.is_zero()) continue;
        Rat c = p.content();
        mpz_gcd(content.get_num_mpz_t(), content.get_num_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(content.get_den_mpz_t(), content.get_den_mpz_t(), c.get_den_mpz_t());
    }
    content.canonicalize();
    for (size_t i = 0; i < row.size(); ++i)
        row[i] = rat_is_zero(content) ? Scalar(nums[i]) : Scalar(nums[i] * (Rat(1) / content));
}

struct Echelon {
    std::vector<std::vector<Scalar>> rows;
    std::vector<size_t> pivot_cols;
};

// Fraction-free row echelon form; pivot = first nonzero entry in column
// order, scanning rows top-down.
Echelon echelon_form(const Matrix& m) {
    Echelon e;
    e.rows.assign(m.rows(), std::vector<Scalar>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) e.rows[i][j] = m.at(i, j);
    for (auto& r : e.rows) remove_row_content(r);

    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && e.rows[p][col].is_zero()) ++p;
        if (p == m.rows()) continue;
        std::swap(e.rows[p], e.rows[row]);
        const std::vector<Scalar>& pr = e.rows[row];
        for (size_t i = row + 1; i < m.rows(); ++i) {
            std::vector<Scalar>& ri = e.rows[i];
            if (ri[col].is_zero()) continue;
            const Scalar piv = pr[col];
            const Scalar f = ri[col];
            for (size_t j = 0; j < m.cols(); ++j) ri[j] = piv * ri[j] - f * pr[j];
            remove_row_content(ri);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

} // namespace

Scalar determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw NotSquare();
    const size_t n = m.rows();
    if (n == 0) return Scalar(1);
    Matrix a = m;
    Scalar prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t p = k;
        while (p < n && a.at(p, k).is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != k) {
            for (size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(k, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = Scalar(0);
        }
        prev = a.at(k, k);
    }
    Scalar det = a.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

size_t rank(const Matrix& m) { return echelon_form(m).pivot_cols.size(); }

void normalize_vector(std::vector<Scalar>& v) {
    remove_row_content(v);
    for (const Scalar& x : v) {
        if (x.is_zero()) continue;
        const bool negative =
            x.is_rational() ? sgn(x.rational()) < 0 : sgn(x.fun().num().lc()) < 0;
        if (negative)
            for (Scalar& y : v) y = -y;
        break;
    }
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
    const Echelon e = echelon_form(m);
    const size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(n, Scalar(0));
        v[free_col] = Scalar(1);
        for (size_t k = e.pivot_cols.size(); k-- > 0;) {
            const size_t pc = e.pivot_cols[k];
            if (pc > free_col) continue;
            const std::vector<Scalar>& row = e.rows[k];
            Scalar acc(0);
            for (size_t j = pc + 1; j < n; ++j)
                if (!v[j].is_zero()) acc += row[j] * v[j];
            v[pc] = -acc / row[pc];
        }
        normalize_vector(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    if (b.size() != m.rows()) throw InternalError("solve: size mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    const Echelon e = echelon_form(aug);
    std::vector<Scalar> x(m.cols(), Scalar(0));
    for (size_t k = e.pivot_cols.size(); k-- > 0;) {
        const size_t pc = e.pivot_cols[k];
        if (pc == m.cols()) return std::nullopt; // pivot in the rhs column
        const std::vector<Scalar>& row = e.rows[k];
        Scalar acc = row[m.cols()];
        for (size_t j = pc + 1; j < m.cols(); ++j)
            if (!x[j].is_zero()) acc -= row[j] * x[j];
        x[pc] = acc / row[pc];
    }
    return x;
}

} // namespace wbr
