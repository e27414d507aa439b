#include "lvder/matrix.hpp"

#include <gmp.h>

#include <utility>

namespace lvder {

namespace {

std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
    RatMatrix m(0, cols);
    for (const auto& r : rows) m.push_row(r);
    return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    RatMatrix m(0, cols);
    for (const auto& r : rows) m.push_row(std::vector<Rational>(r));
    return m;
}

void RatMatrix::push_row(std::span<const Rational> values) {
    if (values.size() != cols_) throw DimensionError("row length does not match matrix width");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
}

void RatMatrix::append(const RatMatrix& other) {
    if (rows_ == 0 && cols_ == 0) {
        *this = other;
        return;
    }
    if (other.rows_ == 0 && other.cols_ == 0) return;
    if (other.cols_ != cols_) throw DimensionError("cannot stack matrices of different widths");
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
    rows_ += other.rows_;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::vector<Rational> RatMatrix::apply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw DimensionError("vector length does not match matrix width");
    std::vector<Rational> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc = 0;
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) acc += (*this)(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("inner dimensions differ");
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

EchelonForm echelon(const RatMatrix& m) {
    EchelonForm out{m, {}};
    RatMatrix& a = out.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        // Smallest-entry pivot keeps coefficient growth down.
        std::size_t best = rows;
        for (std::size_t r = lead; r < rows; ++r) {
            if (sgn(a(r, col)) == 0) continue;
            if (best == rows || bit_size(a(r, col)) < bit_size(a(best, col))) best = r;
        }
        if (best == rows) continue;
        if (best != lead)
            for (std::size_t c = 0; c < cols; ++c) std::swap(a(best, c), a(lead, c));

        const Rational inv = 1 / Rational(a(lead, col));
        for (std::size_t c = col; c < cols; ++c)
            if (sgn(a(lead, c)) != 0) a(lead, c) *= inv;

        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || sgn(a(r, col)) == 0) continue;
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < cols; ++c)
                if (sgn(a(lead, c)) != 0) a(r, c) -= factor * a(lead, c);
        }
        out.pivots.push_back(col);
        ++lead;
    }
    return out;
}

RatMatrix rref(const RatMatrix& m) { return echelon(m).reduced; }

std::size_t rank(const RatMatrix& m) { return echelon(m).pivots.size(); }

}  // namespace lvder
