#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mqt/field.hpp"

namespace mqt {

/// Dense vector over a finite field. Entries are stored encoded (see Field).
class VectorF {
  public:
    VectorF(Field field, std::size_t dim);
    VectorF(Field field, std::vector<std::uint64_t> entries);

    const Field& field() const { return field_; }
    std::size_t dim() const { return entries_.size(); }

    std::uint64_t raw(std::size_t i) const { return entries_[i]; }
    void set_raw(std::size_t i, std::uint64_t v) { entries_[i] = v; }
    FieldElement at(std::size_t i) const { return field_.element(entries_[i]); }

    bool is_zero() const;
    bool operator==(const VectorF& other) const;
    bool operator!=(const VectorF& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    Field field_;
    std::vector<std::uint64_t> entries_;
};

/// Dense row-major matrix over a finite field. Zero-row matrices are valid
/// (they carry ambient information for null subspaces).
class MatrixF {
  public:
    MatrixF(Field field, std::size_t rows, std::size_t cols);
    MatrixF(Field field, std::size_t rows, std::size_t cols, std::vector<std::uint64_t> entries);

    static MatrixF identity(const Field& field, std::size_t n);
    static MatrixF from_rows(const Field& field, std::size_t cols, const std::vector<VectorF>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint64_t raw(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set_raw(std::size_t r, std::size_t c, std::uint64_t v) { entries_[r * cols_ + c] = v; }
    FieldElement at(std::size_t r, std::size_t c) const { return field_.element(raw(r, c)); }

    VectorF row(std::size_t r) const;
    MatrixF transpose() const;

    bool operator==(const MatrixF& other) const;
    bool operator!=(const MatrixF& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> entries_;
};

struct RrefResult {
    MatrixF matrix;
    std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form: pivots are 1, pivot columns are zero elsewhere,
/// zero rows last. The output is the unique RREF of the input's row space.
RrefResult rref(const MatrixF& m);

std::size_t rank(const MatrixF& m);

/// Basis of the right kernel {x : m x = 0}, returned as the rows of an RREF
/// matrix with cols(m) columns and cols(m) - rank(m) rows.
MatrixF right_kernel(const MatrixF& m);

/// Any solution x of m x = b, or nullopt when the system is inconsistent.
/// Deterministic: free variables are set to zero.
std::optional<VectorF> solve(const MatrixF& m, const VectorF& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<MatrixF> inverse(const MatrixF& m);

/// Kronecker product. Composite index convention is left-factor-major:
/// (i, j) -> i * dim2 + j for rows and columns alike.
MatrixF kron(const MatrixF& a, const MatrixF& b);
VectorF kron(const VectorF& a, const VectorF& b);

MatrixF mat_mul(const MatrixF& a, const MatrixF& b);
VectorF mat_vec(const MatrixF& m, const VectorF& x);
MatrixF vstack(const MatrixF& top, const MatrixF& bottom);
MatrixF hstack(const MatrixF& left, const MatrixF& right);

std::uint64_t dot(const VectorF& a, const VectorF& b);
VectorF vec_add(const VectorF& a, const VectorF& b);
/// a + c * b
VectorF vec_add_scaled(const VectorF& a, const VectorF& b, std::uint64_t c);
VectorF vec_scale(const VectorF& a, std::uint64_t c);

}  // namespace mqt
