#pragma once
// Exact rational dense matrices with reduced row echelon form, rank and
// nullspace. Deterministic pivoting; everything exact.

#include <vector>

#include "equijac/poly.hpp"

namespace equijac {

class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

// Basis of {x : M x = 0}. Each vector is scaled to integer entries with
// content 1 and a positive leading entry.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);

}  // namespace equijac
