#pragma once

#include "rbar/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace rbar {

// Small dense matrices for exact elimination and integer normal forms.
// Everything here is exact; no floating point enters.

class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<Integer> data_;
};

/// Rank by exact Gauss elimination.
std::size_t rational_rank(RationalMatrix m);

/// Solves A x = b for every column b of `targets` simultaneously.
/// Returns nullopt if any system is inconsistent.  When A has full column
/// rank the solutions are unique.
std::optional<RationalMatrix> solve_linear(const RationalMatrix& a, const RationalMatrix& targets);

/// Column-style Hermite normal form.  Applies unimodular column operations
/// in place; pivots are positive and entries left of a pivot in its row are
/// reduced into [0, pivot).  If `transform` is non-null it receives U with
/// A_in * U = A_out.  Returns the number of nonzero (pivot) columns, which
/// come first.
std::size_t hermite_normal_form(IntMatrix& a, IntMatrix* transform);

/// Basis of the integer kernel {x : A x = 0} as matrix columns.  The basis
/// spans the full kernel lattice (saturated), via the HNF transform.
IntMatrix integer_kernel(const IntMatrix& a);

}  // namespace rbar
