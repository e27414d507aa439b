#pragma once

#include "lvder/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace lvder {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
    static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<Rational> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    /// Appends a row; the row length must equal cols().
    void push_row(std::span<const Rational> values);
    /// Stacks `other` below this matrix. An empty 0×0 matrix adopts other's width.
    void append(const RatMatrix& other);

    [[nodiscard]] RatMatrix transpose() const;
    [[nodiscard]] std::vector<Rational> apply(std::span<const Rational> x) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

/// Reduced row echelon form. Zero rows are kept at the bottom so the shape is
/// unchanged.
RatMatrix rref(const RatMatrix& m);

/// RREF together with its pivot columns (in increasing order).
struct EchelonForm {
    RatMatrix reduced;
    std::vector<std::size_t> pivots;
};
EchelonForm echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

}  // namespace lvder
