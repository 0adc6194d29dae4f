#include "mqt/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace mqt {

namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* what) {
    if (a.field() != b.field()) {
        throw DomainError(std::string(what) + ": subspaces over different fields");
    }
    if (a.ambient() != b.ambient()) {
        throw DomainError(std::string(what) + ": ambient dimension mismatch");
    }
}

MatrixF drop_zero_rows(const MatrixF& m, std::size_t nonzero_rows) {
    MatrixF out(m.field(), nonzero_rows, m.cols());
    for (std::size_t r = 0; r < nonzero_rows; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.set_raw(r, c, m.raw(r, c));
    }
    return out;
}

// Reduces v against an RREF basis in place; returns true when it vanishes,
// i.e. when v lies in the row space.
bool reduces_to_zero(const MatrixF& basis, const std::vector<std::size_t>& pivots, VectorF& v) {
    const Field& f = basis.field();
    for (std::size_t t = 0; t < pivots.size(); ++t) {
        const std::uint64_t c = v.raw(pivots[t]);
        if (c == 0) continue;
        for (std::size_t j = 0; j < basis.cols(); ++j) {
            v.set_raw(j, f.sub(v.raw(j), f.mul(c, basis.raw(t, j))));
        }
    }
    return v.is_zero();
}

std::vector<std::size_t> pivot_columns_of_rref(const MatrixF& basis) {
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        std::size_t c = 0;
        while (c < basis.cols() && basis.raw(r, c) == 0) ++c;
        pivots.push_back(c);
    }
    return pivots;
}

// Number of r-dimensional subspaces of F_q^n (Gaussian binomial), saturating
// at cap, by the Pascal-style recurrence.
std::uint64_t subspace_count_saturating(std::uint64_t q, std::size_t n, std::size_t r,
                                        std::uint64_t cap) {
    using u128 = unsigned __int128;
    std::vector<u128> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t k = std::min(m, r); k > 0; --k) {
            // [m k] = [m-1 k-1] + q^k [m-1 k]
            u128 v = row[k - 1];
            u128 qk = 1;
            for (std::size_t i = 0; i < k && qk <= cap; ++i) qk *= q;
            v += qk * row[k];
            row[k] = v > cap ? static_cast<u128>(cap) + 1 : v;
        }
    }
    u128 result = row[r];
    return result > cap ? cap + 1 : static_cast<std::uint64_t>(result);
}

// Advances comb to the next r-combination of {0, ..., n-1} in lexicographic
// order; returns false when exhausted.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t r = comb.size();
    std::size_t i = r;
    while (i > 0) {
        --i;
        if (comb[i] < n - r + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Subspace Subspace::span_rows(const MatrixF& m) {
    auto [r, pivots] = rref(m);
    return Subspace(drop_zero_rows(r, pivots.size()));
}

Subspace Subspace::span(const Field& field, std::size_t ambient_dim,
                        const std::vector<VectorF>& vectors) {
    for (const VectorF& v : vectors) {
        if (v.dim() != ambient_dim) throw DomainError("span: vector length mismatch");
    }
    return span_rows(MatrixF::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::null(const Field& field, std::size_t ambient_dim) {
    return Subspace(MatrixF(field, 0, ambient_dim));
}

Subspace Subspace::full(const Field& field, std::size_t ambient_dim) {
    return Subspace(MatrixF::identity(field, ambient_dim));
}

Subspace Subspace::from_rref(MatrixF basis) { return Subspace(std::move(basis)); }

bool Subspace::contains(const VectorF& v) const {
    if (v.dim() != ambient()) throw DomainError("contains: vector length mismatch");
    if (v.field() != field()) throw DomainError("contains: field mismatch");
    VectorF reduced = v;
    return reduces_to_zero(basis_, pivot_columns_of_rref(basis_), reduced);
}

std::string Subspace::to_string() const {
    if (is_null()) return "⟨0⟩";
    std::ostringstream os;
    os << "⟨";
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        if (r) os << ", ";
        os << basis_.row(r).to_string();
    }
    os << "⟩";
    return os.str();
}

Subspace join(const Subspace& a, const Subspace& b) {
    require_compatible(a, b, "join");
    return Subspace::span_rows(vstack(a.basis(), b.basis()));
}

Subspace meet(const Subspace& a, const Subspace& b) {
    require_compatible(a, b, "meet");
    if (a.is_null() || b.is_null()) return Subspace::null(a.field(), a.ambient());
    // x in the meet iff x = a^T alpha = -b^T beta for some kernel vector
    // (alpha, beta) of the stacked coefficient system [a^T | b^T].
    const MatrixF stacked = hstack(a.basis().transpose(), b.basis().transpose());
    const MatrixF kernel = right_kernel(stacked);
    if (kernel.rows() == 0) return Subspace::null(a.field(), a.ambient());
    const Field& f = a.field();
    MatrixF vectors(f, kernel.rows(), a.ambient());
    for (std::size_t r = 0; r < kernel.rows(); ++r) {
        for (std::size_t j = 0; j < a.ambient(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < a.dim(); ++t) {
                acc = f.add(acc, f.mul(kernel.raw(r, t), a.basis().raw(t, j)));
            }
            vectors.set_raw(r, j, acc);
        }
    }
    return Subspace::span_rows(vectors);
}

Subspace annihilator(const Subspace& a) {
    if (a.is_null()) return Subspace::full(a.field(), a.ambient());
    return Subspace::from_rref(right_kernel(a.basis()));
}

bool includes(const Subspace& a, const Subspace& b) {
    require_compatible(a, b, "includes");
    if (b.is_null()) return true;
    if (b.dim() > a.dim()) return false;
    const auto pivots = pivot_columns_of_rref(a.basis());
    for (std::size_t r = 0; r < b.dim(); ++r) {
        VectorF v = b.basis().row(r);
        if (!reduces_to_zero(a.basis(), pivots, v)) return false;
    }
    return true;
}

Subspace map_subspace(const MatrixF& m, const Subspace& s) {
    if (m.field() != s.field()) throw DomainError("map_subspace: field mismatch");
    if (m.cols() != s.ambient()) throw DomainError("map_subspace: dimension mismatch");
    if (s.is_null()) return Subspace::null(s.field(), m.rows());
    // Rows of basis * m^T are the images of the basis vectors.
    return Subspace::span_rows(mat_mul(s.basis(), m.transpose()));
}

void for_each_subspace(const Field& field, std::size_t ambient_dim,
                       std::optional<std::size_t> dim_filter, const Budget& budget,
                       const std::function<void(const Subspace&)>& fn) {
    if (ambient_dim == 0) throw DomainError("ambient dimension must be at least 1");
    budget.require_power(field.order(), ambient_dim, "subspace enumeration");
    const std::uint64_t q = field.order();
    unsigned __int128 total = 0;
    for (std::size_t r = 0; r <= ambient_dim; ++r) {
        if (dim_filter && *dim_filter != r) continue;
        total += subspace_count_saturating(q, ambient_dim, r, budget.max_vectors);
    }
    budget.require_count(total > budget.max_vectors ? budget.max_vectors + 1
                                                    : static_cast<std::uint64_t>(total),
                         "subspace enumeration");

    for (std::size_t r = 0; r <= ambient_dim; ++r) {
        if (dim_filter && *dim_filter != r) continue;
        if (r == 0) {
            fn(Subspace::null(field, ambient_dim));
            continue;
        }
        // Pivot column sets in lexicographic order.
        std::vector<std::size_t> pivots(r);
        for (std::size_t i = 0; i < r; ++i) pivots[i] = i;
        do {
            std::vector<bool> is_pivot(ambient_dim, false);
            for (std::size_t p : pivots) is_pivot[p] = true;
            // Free entry positions of the RREF shape, row-major.
            std::vector<std::pair<std::size_t, std::size_t>> free_pos;
            for (std::size_t t = 0; t < r; ++t) {
                for (std::size_t c = pivots[t] + 1; c < ambient_dim; ++c) {
                    if (!is_pivot[c]) free_pos.emplace_back(t, c);
                }
            }
            MatrixF basis(field, r, ambient_dim);
            for (std::size_t t = 0; t < r; ++t) basis.set_raw(t, pivots[t], 1);
            // Odometer over the free entries, last position fastest.
            std::vector<std::uint64_t> digits(free_pos.size(), 0);
            while (true) {
                for (std::size_t i = 0; i < free_pos.size(); ++i) {
                    basis.set_raw(free_pos[i].first, free_pos[i].second, digits[i]);
                }
                fn(Subspace::from_rref(basis));
                std::size_t pos = free_pos.size();
                while (pos > 0 && ++digits[pos - 1] == q) {
                    digits[pos - 1] = 0;
                    --pos;
                }
                if (pos == 0) break;
            }
        } while (next_combination(pivots, ambient_dim));
    }
}

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t ambient_dim,
                                          std::optional<std::size_t> dim_filter,
                                          const Budget& budget) {
    std::vector<Subspace> out;
    for_each_subspace(field, ambient_dim, dim_filter, budget,
                      [&out](const Subspace& s) { out.push_back(s); });
    return out;
}

void for_each_subspace_of(const Subspace& space, std::optional<std::size_t> dim_filter,
                          const Budget& budget, const std::function<void(const Subspace&)>& fn) {
    if (space.is_null()) {
        if (!dim_filter || *dim_filter == 0) fn(space);
        return;
    }
    // Enumerate in coordinates relative to the basis and map rows back into
    // the ambient space. Images of independent coordinate rows stay
    // independent, but not RREF, so re-canonicalize.
    for_each_subspace(space.field(), space.dim(), dim_filter, budget,
                      [&](const Subspace& coords) {
                          if (coords.is_null()) {
                              fn(Subspace::null(space.field(), space.ambient()));
                              return;
                          }
                          fn(Subspace::span_rows(mat_mul(coords.basis(), space.basis())));
                      });
}

std::vector<VectorF> enumerate_vectors(const Subspace& a, const Budget& budget) {
    budget.require_power(a.field().order(), a.dim(), "vector enumeration");
    const Field& f = a.field();
    const std::uint64_t q = f.order();
    std::vector<VectorF> out;
    if (a.is_null()) {
        out.emplace_back(f, a.ambient());
        return out;
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) total *= q;
    out.reserve(total);
    std::vector<std::uint64_t> digits(a.dim(), 0);
    for (std::uint64_t m = 0; m < total; ++m) {
        VectorF v(f, a.ambient());
        for (std::size_t t = 0; t < a.dim(); ++t) {
            if (digits[t] == 0) continue;
            for (std::size_t j = 0; j < a.ambient(); ++j) {
                v.set_raw(j, f.add(v.raw(j), f.mul(digits[t], a.basis().raw(t, j))));
            }
        }
        out.push_back(std::move(v));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == q) {
            digits[pos] = 0;
            ++pos;
        }
    }
    return out;
}

std::optional<std::pair<Subspace, Subspace>> is_diamond(const Subspace& a, const Subspace& b,
                                                        const Subspace& c) {
    require_compatible(a, b, "is_diamond");
    require_compatible(a, c, "is_diamond");
    if (a == b || b == c || a == c) return std::nullopt;
    const Subspace top = join(a, b);
    if (join(b, c) != top || join(a, c) != top) return std::nullopt;
    const Subspace bottom = meet(a, b);
    if (meet(b, c) != bottom || meet(c, a) != bottom) return std::nullopt;
    return std::make_pair(top, bottom);
}

std::vector<DiamondTriple> find_diamonds(const Field& field, std::size_t ambient_dim,
                                         bool require_null_bottom,
                                         std::optional<std::size_t> dim_filter,
                                         const Budget& budget) {
    const std::vector<Subspace> all = enumerate_subspaces(field, ambient_dim, dim_filter, budget);
    const unsigned __int128 n = all.size();
    const unsigned __int128 triples = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
    budget.require_count(triples > budget.max_vectors ? budget.max_vectors + 1
                                                      : static_cast<std::uint64_t>(triples),
                         "diamond search");
    std::vector<DiamondTriple> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            // Diamond members share one dimension; skip unequal pairs early.
            if (all[i].dim() != all[j].dim()) continue;
            for (std::size_t k = j + 1; k < all.size(); ++k) {
                if (all[k].dim() != all[i].dim()) continue;
                auto d = is_diamond(all[i], all[j], all[k]);
                if (!d) continue;
                if (require_null_bottom && !d->second.is_null()) continue;
                out.push_back(DiamondTriple{all[i], all[j], all[k], d->first, d->second});
            }
        }
    }
    return out;
}

}  // namespace mqt
