#include "mqt/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace mqt {

namespace {

void require_same_field(const Field& a, const Field& b, const char* what) {
    if (a != b) throw DomainError(std::string(what) + ": operands belong to different fields");
}

}  // namespace

VectorF::VectorF(Field field, std::size_t dim) : field_(std::move(field)), entries_(dim, 0) {
    if (dim == 0) throw DomainError("vector dimension must be at least 1");
}

VectorF::VectorF(Field field, std::vector<std::uint64_t> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
    if (entries_.empty()) throw DomainError("vector dimension must be at least 1");
    for (std::uint64_t v : entries_) {
        if (v >= field_.order()) throw DomainError("vector entry outside field");
    }
}

bool VectorF::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](std::uint64_t v) { return v == 0; });
}

bool VectorF::operator==(const VectorF& other) const {
    return field_ == other.field_ && entries_ == other.entries_;
}

std::string VectorF::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << field_.format(entries_[i]);
    }
    os << ')';
    return os.str();
}

MatrixF::MatrixF(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (cols == 0) throw DomainError("matrix must have at least one column");
}

MatrixF::MatrixF(Field field, std::size_t rows, std::size_t cols,
                 std::vector<std::uint64_t> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (cols == 0) throw DomainError("matrix must have at least one column");
    if (entries_.size() != rows * cols) throw DomainError("matrix entry count mismatch");
    for (std::uint64_t v : entries_) {
        if (v >= field_.order()) throw DomainError("matrix entry outside field");
    }
}

MatrixF MatrixF::identity(const Field& field, std::size_t n) {
    MatrixF m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
    return m;
}

MatrixF MatrixF::from_rows(const Field& field, std::size_t cols,
                           const std::vector<VectorF>& rows) {
    MatrixF m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same_field(field, rows[r].field(), "from_rows");
        if (rows[r].dim() != cols) throw DomainError("row length mismatch in from_rows");
        for (std::size_t c = 0; c < cols; ++c) m.set_raw(r, c, rows[r].raw(c));
    }
    return m;
}

VectorF MatrixF::row(std::size_t r) const {
    std::vector<std::uint64_t> e(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                 entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return VectorF(field_, std::move(e));
}

MatrixF MatrixF::transpose() const {
    MatrixF t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t.set_raw(c, r, raw(r, c));
    }
    return t;
}

bool MatrixF::operator==(const MatrixF& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
}

std::string MatrixF::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) os << ", ";
        os << row(r).to_string();
    }
    os << ']';
    return os.str();
}

RrefResult rref(const MatrixF& m) {
    const Field& f = m.field();
    MatrixF r = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r.raw(sel, col) == 0) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pivot_row) {
            for (std::size_t c = 0; c < r.cols(); ++c) {
                std::uint64_t tmp = r.raw(sel, c);
                r.set_raw(sel, c, r.raw(pivot_row, c));
                r.set_raw(pivot_row, c, tmp);
            }
        }
        const std::uint64_t scale = f.inv(r.raw(pivot_row, col));
        if (scale != 1) {
            for (std::size_t c = col; c < r.cols(); ++c) {
                r.set_raw(pivot_row, c, f.mul(scale, r.raw(pivot_row, c)));
            }
        }
        for (std::size_t row = 0; row < r.rows(); ++row) {
            if (row == pivot_row) continue;
            const std::uint64_t factor = r.raw(row, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < r.cols(); ++c) {
                r.set_raw(row, c, f.sub(r.raw(row, c), f.mul(factor, r.raw(pivot_row, c))));
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const MatrixF& m) { return rref(m).pivot_columns.size(); }

MatrixF right_kernel(const MatrixF& m) {
    const Field& f = m.field();
    const auto [r, pivots] = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    MatrixF kernel(f, n - pivots.size(), n);
    std::size_t out_row = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        kernel.set_raw(out_row, free_col, 1);
        for (std::size_t t = 0; t < pivots.size(); ++t) {
            kernel.set_raw(out_row, pivots[t], f.neg(r.raw(t, free_col)));
        }
        ++out_row;
    }
    // Canonicalize so callers can treat kernels as unique bases.
    return rref(kernel).matrix;
}

std::optional<VectorF> solve(const MatrixF& m, const VectorF& b) {
    require_same_field(m.field(), b.field(), "solve");
    if (b.dim() != m.rows()) throw DomainError("solve: right-hand side dimension mismatch");
    const Field& f = m.field();
    MatrixF aug = hstack(m, MatrixF::from_rows(f, b.dim(), {b}).transpose());
    // Eliminate, pivoting only on the coefficient columns.
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < aug.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < aug.rows() && aug.raw(sel, col) == 0) ++sel;
        if (sel == aug.rows()) continue;
        if (sel != pivot_row) {
            for (std::size_t c = 0; c < aug.cols(); ++c) {
                std::uint64_t tmp = aug.raw(sel, c);
                aug.set_raw(sel, c, aug.raw(pivot_row, c));
                aug.set_raw(pivot_row, c, tmp);
            }
        }
        const std::uint64_t scale = f.inv(aug.raw(pivot_row, col));
        if (scale != 1) {
            for (std::size_t c = col; c < aug.cols(); ++c) {
                aug.set_raw(pivot_row, c, f.mul(scale, aug.raw(pivot_row, c)));
            }
        }
        for (std::size_t row = 0; row < aug.rows(); ++row) {
            if (row == pivot_row) continue;
            const std::uint64_t factor = aug.raw(row, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < aug.cols(); ++c) {
                aug.set_raw(row, c, f.sub(aug.raw(row, c), f.mul(factor, aug.raw(pivot_row, c))));
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    for (std::size_t row = pivot_row; row < aug.rows(); ++row) {
        if (aug.raw(row, m.cols()) != 0) return std::nullopt;  // 0 = nonzero: inconsistent
    }
    VectorF x(f, m.cols());
    for (std::size_t t = 0; t < pivots.size(); ++t) {
        x.set_raw(pivots[t], aug.raw(t, m.cols()));
    }
    return x;
}

std::optional<MatrixF> inverse(const MatrixF& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) throw DomainError("inverse: matrix must be nonempty");
    const auto [r, pivots] = rref(hstack(m, MatrixF::identity(m.field(), n)));
    // Invertible exactly when all n pivots stay in the left block.
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    MatrixF inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv.set_raw(i, j, r.raw(i, n + j));
    }
    return inv;
}

MatrixF kron(const MatrixF& a, const MatrixF& b) {
    require_same_field(a.field(), b.field(), "kron");
    const Field& f = a.field();
    MatrixF out(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const std::uint64_t av = a.raw(i1, j1);
            if (av == 0) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
                    out.set_raw(i1 * b.rows() + i2, j1 * b.cols() + j2, f.mul(av, b.raw(i2, j2)));
                }
            }
        }
    }
    return out;
}

VectorF kron(const VectorF& a, const VectorF& b) {
    require_same_field(a.field(), b.field(), "kron");
    const Field& f = a.field();
    VectorF out(f, a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.raw(i) == 0) continue;
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out.set_raw(i * b.dim() + j, f.mul(a.raw(i), b.raw(j)));
        }
    }
    return out;
}

MatrixF mat_mul(const MatrixF& a, const MatrixF& b) {
    require_same_field(a.field(), b.field(), "mat_mul");
    if (a.cols() != b.rows()) throw DomainError("mat_mul: inner dimension mismatch");
    const Field& f = a.field();
    MatrixF out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t av = a.raw(i, k);
            if (av == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out.set_raw(i, j, f.add(out.raw(i, j), f.mul(av, b.raw(k, j))));
            }
        }
    }
    return out;
}

VectorF mat_vec(const MatrixF& m, const VectorF& x) {
    require_same_field(m.field(), x.field(), "mat_vec");
    if (x.dim() != m.cols()) throw DomainError("mat_vec: dimension mismatch");
    if (m.rows() == 0) throw DomainError("mat_vec: empty matrix");
    const Field& f = m.field();
    VectorF out(f, m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(m.raw(i, j), x.raw(j)));
        out.set_raw(i, acc);
    }
    return out;
}

MatrixF vstack(const MatrixF& top, const MatrixF& bottom) {
    require_same_field(top.field(), bottom.field(), "vstack");
    if (top.cols() != bottom.cols()) throw DomainError("vstack: column count mismatch");
    MatrixF out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) {
        for (std::size_t c = 0; c < top.cols(); ++c) out.set_raw(r, c, top.raw(r, c));
    }
    for (std::size_t r = 0; r < bottom.rows(); ++r) {
        for (std::size_t c = 0; c < top.cols(); ++c) out.set_raw(top.rows() + r, c, bottom.raw(r, c));
    }
    return out;
}

MatrixF hstack(const MatrixF& left, const MatrixF& right) {
    require_same_field(left.field(), right.field(), "hstack");
    if (left.rows() != right.rows()) throw DomainError("hstack: row count mismatch");
    MatrixF out(left.field(), left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) out.set_raw(r, c, left.raw(r, c));
        for (std::size_t c = 0; c < right.cols(); ++c) {
            out.set_raw(r, left.cols() + c, right.raw(r, c));
        }
    }
    return out;
}

std::uint64_t dot(const VectorF& a, const VectorF& b) {
    require_same_field(a.field(), b.field(), "dot");
    if (a.dim() != b.dim()) throw DomainError("dot: dimension mismatch");
    const Field& f = a.field();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) acc = f.add(acc, f.mul(a.raw(i), b.raw(i)));
    return acc;
}

VectorF vec_add(const VectorF& a, const VectorF& b) { return vec_add_scaled(a, b, 1); }

VectorF vec_add_scaled(const VectorF& a, const VectorF& b, std::uint64_t c) {
    require_same_field(a.field(), b.field(), "vec_add");
    if (a.dim() != b.dim()) throw DomainError("vec_add: dimension mismatch");
    const Field& f = a.field();
    VectorF out = a;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        out.set_raw(i, f.add(a.raw(i), f.mul(c, b.raw(i))));
    }
    return out;
}

VectorF vec_scale(const VectorF& a, std::uint64_t c) {
    const Field& f = a.field();
    VectorF out = a;
    for (std::size_t i = 0; i < a.dim(); ++i) out.set_raw(i, f.mul(c, a.raw(i)));
    return out;
}

}  // namespace mqt
