#pragma once

#include "monpow/bounds.hpp"
#include "monpow/errors.hpp"
#include "monpow/exponent_vector.hpp"
#include "monpow/ideal.hpp"
#include "monpow/integer.hpp"
#include "monpow/powers.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace monpow {

enum class SystemKind { power, colon, saturation };

inline const char* kind_tag(SystemKind kind) {
    switch (kind) {
        case SystemKind::power: return "power";
        case SystemKind::colon: return "colon";
        case SystemKind::saturation: return "sat";
    }
    return "?";
}

/// An integer inequality system B x <= c over non-negative x, with the
/// column blocks (alpha | h | n) of widths (k, r, 1). The non-negativity
/// rows are implicit and never stored: as long as (B|c) is not the zero
/// matrix they do not change the maximal subdeterminant.
///
/// Solutions x = (alpha, h, n) encode: h the exponent vector of a monomial,
/// n the power of the ideal, alpha the multiplicities of the generators
/// witnessing membership.
struct IneqSystem {
    SystemKind kind = SystemKind::power;
    std::size_t rows = 0;       // m
    std::size_t cols = 0;       // nu = alpha_cols + var_count + 1
    std::size_t alpha_cols = 0; // k
    std::size_t var_count = 0;  // r
    Integer sat_scale = 1;      // N; meaningful for the saturation kind only
    std::vector<std::vector<Integer>> matrix; // B, rows x cols
    std::vector<Integer> rhs;                 // c, length rows, entries >= 0
};

/// One block of r divisibility rows plus one counting row:
///   sum_j alpha_j * a_j <= h (+ slack)   and   sum_j alpha_j >= n.
namespace detail {
inline void append_block(IneqSystem& sys, const MonomialIdeal& I, std::size_t block,
                         std::size_t block_count, const ExponentVector* slack) {
    const std::size_t r = I.var_count();
    const std::size_t s = I.gen_count();
    const std::size_t nu = block_count * s + r + 1;
    for (std::size_t row = 0; row < r; ++row) {
        std::vector<Integer> line(nu, Integer(0));
        for (std::size_t j = 0; j < s; ++j) {
            line[block * s + j] = I.generators()[j][row];
        }
        line[block_count * s + row] = -1;
        sys.matrix.push_back(std::move(line));
        sys.rhs.push_back(slack ? (*slack)[row] : Integer(0));
    }
    std::vector<Integer> count(nu, Integer(0));
    for (std::size_t j = 0; j < s; ++j) {
        count[block * s + j] = -1;
    }
    count[nu - 1] = 1;
    sys.matrix.push_back(std::move(count));
    sys.rhs.push_back(0);
}
} // namespace detail

/// The homogeneous system describing membership in I^n: one block, rhs 0.
inline IneqSystem build_power_system(const MonomialIdeal& I) {
    detail::require_proper_nonzero(I, "build_power_system");
    IneqSystem sys;
    sys.kind = SystemKind::power;
    sys.var_count = I.var_count();
    sys.alpha_cols = I.gen_count();
    sys.cols = sys.alpha_cols + sys.var_count + 1;
    sys.rows = sys.var_count + 1;
    detail::append_block(sys, I, 0, 1, nullptr);
    return sys;
}

/// The system describing membership in I^n : (X_1,...,X_r): one block per
/// variable with its own alpha columns; block i allows the extra factor X_i
/// through the slack e_i on the right-hand side.
inline IneqSystem build_colon_system(const MonomialIdeal& I) {
    detail::require_proper_nonzero(I, "build_colon_system");
    IneqSystem sys;
    sys.kind = SystemKind::colon;
    const std::size_t r = I.var_count();
    sys.var_count = r;
    sys.alpha_cols = r * I.gen_count();
    sys.cols = sys.alpha_cols + r + 1;
    sys.rows = (r + 1) * r;
    for (std::size_t i = 0; i < r; ++i) {
        ExponentVector slack = ExponentVector::unit(r, i + 1);
        detail::append_block(sys, I, i, r, &slack);
    }
    return sys;
}

/// The colon system with its right-hand side scaled by N; for N large
/// enough (depending on the power and the monomial) feasibility agrees with
/// membership in the saturation of I^n.
inline IneqSystem build_sat_system(const MonomialIdeal& I, const Integer& scale) {
    if (scale < 1) {
        throw DomainError("saturation scale must be >= 1");
    }
    IneqSystem sys = build_colon_system(I);
    sys.kind = SystemKind::saturation;
    sys.sat_scale = scale;
    for (Integer& c : sys.rhs) {
        c *= scale;
    }
    return sys;
}

namespace detail {

struct BlockStructure {
    std::size_t block_count = 0;
    std::size_t gens_per_block = 0;
    std::vector<ExponentVector> generators;
};

/// Check that the system has the builder shape (blocks of divisibility rows
/// plus counting rows, shared h and n columns) and extract the generators.
inline BlockStructure block_structure(const IneqSystem& sys) {
    const std::size_t r = sys.var_count;
    const std::size_t blocks = sys.kind == SystemKind::power ? 1 : r;
    if (r == 0 || blocks == 0 || sys.cols != sys.alpha_cols + r + 1 ||
        sys.rows != blocks * (r + 1) || sys.alpha_cols % blocks != 0 ||
        sys.matrix.size() != sys.rows || sys.rhs.size() != sys.rows) {
        throw DomainError("system does not have the block shape");
    }
    const std::size_t s = sys.alpha_cols / blocks;
    BlockStructure bs;
    bs.block_count = blocks;
    bs.gens_per_block = s;

    for (std::size_t b = 0; b < blocks; ++b) {
        for (std::size_t row = 0; row <= r; ++row) {
            const std::vector<Integer>& line = sys.matrix[b * (r + 1) + row];
            for (std::size_t col = 0; col < sys.cols; ++col) {
                const Integer& v = line[col];
                bool in_block_alpha = col >= b * s && col < (b + 1) * s;
                if (col < sys.alpha_cols) {
                    if (!in_block_alpha) {
                        if (v != 0) {
                            throw DomainError("alpha entries outside their block");
                        }
                    } else if (row == r) {
                        if (v != -1) {
                            throw DomainError("counting row must be -1 on its alphas");
                        }
                    } else if (v < 0) {
                        throw DomainError("generator exponents must be non-negative");
                    }
                } else if (col < sys.alpha_cols + r) {
                    Integer expected = (row < r && col - sys.alpha_cols == row) ? -1 : 0;
                    if (v != expected) {
                        throw DomainError("h columns must carry -I per block");
                    }
                } else {
                    Integer expected = row == r ? 1 : 0;
                    if (v != expected) {
                        throw DomainError("n column must be 1 on counting rows");
                    }
                }
            }
        }
    }
    bs.generators.reserve(s);
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Integer> g(r);
        for (std::size_t row = 0; row < r; ++row) {
            g[row] = sys.matrix[row][j];
        }
        bs.generators.push_back(ExponentVector(std::move(g)));
    }
    for (std::size_t b = 1; b < blocks; ++b) {
        for (std::size_t j = 0; j < s; ++j) {
            for (std::size_t row = 0; row < r; ++row) {
                if (sys.matrix[b * (r + 1) + row][b * s + j] != bs.generators[j][row]) {
                    throw DomainError("blocks carry different generator columns");
                }
            }
        }
    }
    return bs;
}

} // namespace detail

/// Is there a non-negative integer solution with the h block fixed to h and
/// the n block fixed to n? The blocks decouple: each is an independent
/// search for generator multiplicities against the budget h plus the
/// block's slack, run with the same pruned search as member_of_power.
inline bool feasible(const IneqSystem& sys, const ExponentVector& h, const Integer& n) {
    if (h.size() != sys.var_count) {
        throw DimensionError("monomial length does not match the system");
    }
    if (n < 0) {
        throw DomainError("negative power");
    }
    detail::BlockStructure bs = detail::block_structure(sys);
    const std::size_t r = sys.var_count;
    detail::MultisetSearch search(bs.generators);
    for (std::size_t b = 0; b < bs.block_count; ++b) {
        std::vector<Integer> budget(r);
        for (std::size_t row = 0; row < r; ++row) {
            budget[row] = h[row] + sys.rhs[b * (r + 1) + row];
        }
        Integer need = n - sys.rhs[b * (r + 1) + r];
        if (!search.fits(ExponentVector(std::move(budget)), need)) {
            return false;
        }
    }
    return true;
}

namespace detail {

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer exact_det(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    if (n == 0) {
        return 1;
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) {
                ++pivot;
            }
            if (pivot == n) {
                return 0;
            }
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign < 0 ? Integer(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t limit) {
    const std::size_t t = idx.size();
    std::size_t pos = t;
    while (pos > 0) {
        --pos;
        if (idx[pos] + (t - pos) < limit) {
            ++idx[pos];
            for (std::size_t q = pos + 1; q < t; ++q) {
                idx[q] = idx[q - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

inline std::vector<std::vector<Integer>> augmented_matrix(const IneqSystem& sys) {
    std::vector<std::vector<Integer>> aug(sys.rows);
    for (std::size_t i = 0; i < sys.rows; ++i) {
        aug[i] = sys.matrix[i];
        aug[i].push_back(sys.rhs[i]);
    }
    return aug;
}

} // namespace detail

struct DeltaResult {
    Integer value;      // largest |minor| seen (the exact maximum iff complete)
    bool complete = false;
    bool zero_matrix = false; // (B|c) = 0: the implicit rows force the value 1
    std::uint64_t minors_evaluated = 0;
};

/// Maximal absolute value over all square subdeterminants of (B|c), by
/// exhaustive enumeration of minors up to order `order_cap` and at most
/// `minor_budget` determinant evaluations. When the caps truncate the
/// enumeration the partial maximum is returned with complete = false.
inline DeltaResult delta_exact(const IneqSystem& sys, std::size_t order_cap = 6,
                               std::uint64_t minor_budget = 1000000) {
    if (order_cap < 1) {
        throw DomainError("order cap must be >= 1");
    }
    DeltaResult result;
    result.value = 0;

    std::vector<std::vector<Integer>> aug = detail::augmented_matrix(sys);
    const std::size_t m = sys.rows;
    const std::size_t w = sys.cols + 1;

    bool all_zero = true;
    for (const auto& row : aug) {
        for (const Integer& v : row) {
            if (v != 0) {
                all_zero = false;
                break;
            }
        }
    }
    if (all_zero) {
        // Every minor of (B|c) vanishes, but the implicit -I rows of the
        // full system still contribute subdeterminants of absolute value 1.
        result.value = 1;
        result.complete = true;
        result.zero_matrix = true;
        return result;
    }

    const std::size_t full_order = std::min(m, w);
    const std::size_t max_order = std::min(order_cap, full_order);
    result.complete = max_order == full_order;

    std::vector<std::vector<Integer>> minor;
    for (std::size_t t = 1; t <= max_order; ++t) {
        std::vector<std::size_t> rows_idx(t), cols_idx(t);
        for (std::size_t i = 0; i < t; ++i) {
            rows_idx[i] = i;
        }
        do {
            for (std::size_t i = 0; i < t; ++i) {
                cols_idx[i] = i;
            }
            do {
                if (result.minors_evaluated >= minor_budget) {
                    result.complete = false;
                    return result;
                }
                minor.assign(t, std::vector<Integer>(t));
                for (std::size_t i = 0; i < t; ++i) {
                    for (std::size_t j = 0; j < t; ++j) {
                        minor[i][j] = aug[rows_idx[i]][cols_idx[j]];
                    }
                }
                Integer det = detail::exact_det(std::move(minor));
                ++result.minors_evaluated;
                if (det < 0) {
                    det = -det;
                }
                if (det > result.value) {
                    result.value = det;
                }
            } while (detail::next_combination(cols_idx, w));
        } while (detail::next_combination(rows_idx, m));
    }
    return result;
}

/// Hadamard estimate for the maximal subdeterminant, in squared form: the
/// product over the columns of (B|c) of a squared-norm factor. Generator
/// columns use the uniform cap d^2+1 (d the largest generator degree read
/// off the matrix), which dominates their squared norm for builder-shaped
/// columns; the remaining columns contribute their actual squared norm.
/// Every factor is kept >= 1 and >= the column's squared norm, so the
/// product bounds every minor regardless of which columns it uses.
inline BoundValue hadamard_bound(const IneqSystem& sys) {
    std::vector<std::vector<Integer>> aug = detail::augmented_matrix(sys);
    const std::size_t w = sys.cols + 1;

    Integer gen_degree = 0;
    for (std::size_t col = 0; col < sys.alpha_cols; ++col) {
        Integer positive_sum = 0;
        for (std::size_t row = 0; row < sys.rows; ++row) {
            if (aug[row][col] > 0) {
                positive_sum += aug[row][col];
            }
        }
        if (positive_sum > gen_degree) {
            gen_degree = positive_sum;
        }
    }
    const Integer alpha_cap = gen_degree * gen_degree + 1;

    Integer squared = 1;
    for (std::size_t col = 0; col < w; ++col) {
        Integer norm_sq = 0;
        for (std::size_t row = 0; row < sys.rows; ++row) {
            norm_sq += aug[row][col] * aug[row][col];
        }
        Integer factor = col < sys.alpha_cols && alpha_cap > norm_sq ? alpha_cap : norm_sq;
        if (factor < 1) {
            factor = 1;
        }
        squared *= factor;
    }
    return make_bound(std::move(squared), std::string("hadamard(") + kind_tag(sys.kind) + ")");
}

/// The degree bound Delta * (nu + 1) for the generators of the solution
/// module, in squared form. Uses the exact maximal subdeterminant when the
/// exhaustive enumeration completes within the caps, otherwise the Hadamard
/// estimate.
struct SystemBound {
    BoundValue bound;
    bool exact_delta = false;
};

inline SystemBound sigma_from_system(const IneqSystem& sys, std::size_t order_cap = 6,
                                     std::uint64_t minor_budget = 1000000) {
    SystemBound out;
    const Integer factor(sys.cols + 1);
    // A partial enumeration can never certify the maximum, so skip it when
    // the caps rule out completeness from the start.
    bool can_complete = std::min(sys.rows, sys.cols + 1) <= order_cap;
    DeltaResult delta;
    if (can_complete) {
        delta = delta_exact(sys, order_cap, minor_budget);
    }
    if (delta.complete) {
        out.exact_delta = true;
        Integer value = delta.value * factor;
        out.bound = make_bound(value * value,
                               std::string("delta*(nu+1)[exact,") + kind_tag(sys.kind) + "]");
    } else {
        BoundValue had = hadamard_bound(sys);
        out.bound = make_bound(had.squared * factor * factor,
                               std::string("delta*(nu+1)[hadamard,") + kind_tag(sys.kind) + "]");
    }
    return out;
}

/// Text dump: header `kind m nu k r [N]`, then the rows of B, then c.
/// Decimal integers, bit-exact.
inline void dump_system(const IneqSystem& sys, std::ostream& os) {
    os << kind_tag(sys.kind) << " " << sys.rows << " " << sys.cols << " " << sys.alpha_cols
       << " " << sys.var_count;
    if (sys.kind == SystemKind::saturation) {
        os << " " << sys.sat_scale;
    }
    os << "\n";
    for (const auto& row : sys.matrix) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) {
                os << " ";
            }
            os << row[j];
        }
        os << "\n";
    }
    for (std::size_t i = 0; i < sys.rhs.size(); ++i) {
        if (i) {
            os << " ";
        }
        os << sys.rhs[i];
    }
    os << "\n";
}

inline IneqSystem load_system(std::istream& is) {
    IneqSystem sys;
    std::string tag;
    if (!(is >> tag)) {
        throw DomainError("empty system dump");
    }
    if (tag == "power") {
        sys.kind = SystemKind::power;
    } else if (tag == "colon") {
        sys.kind = SystemKind::colon;
    } else if (tag == "sat") {
        sys.kind = SystemKind::saturation;
    } else {
        throw DomainError("unknown system kind '" + tag + "'");
    }
    if (!(is >> sys.rows >> sys.cols >> sys.alpha_cols >> sys.var_count)) {
        throw DomainError("truncated system header");
    }
    if (sys.kind == SystemKind::saturation) {
        std::string n;
        if (!(is >> n)) {
            throw DomainError("saturation dump lacks the scale");
        }
        sys.sat_scale = Integer(n);
        if (sys.sat_scale < 1) {
            throw DomainError("saturation scale must be >= 1");
        }
    }
    if (sys.cols != sys.alpha_cols + sys.var_count + 1) {
        throw DomainError("block widths do not sum to the column count");
    }
    if (sys.kind != SystemKind::power) {
        const std::size_t r = sys.var_count;
        if (sys.rows != (r + 1) * r || sys.alpha_cols % r != 0) {
            throw DomainError("colon-shaped dump has inconsistent dimensions");
        }
    }
    sys.matrix.assign(sys.rows, std::vector<Integer>(sys.cols));
    std::string cell;
    for (std::size_t i = 0; i < sys.rows; ++i) {
        for (std::size_t j = 0; j < sys.cols; ++j) {
            if (!(is >> cell)) {
                throw DomainError("truncated system matrix");
            }
            sys.matrix[i][j] = Integer(cell);
        }
    }
    sys.rhs.assign(sys.rows, Integer(0));
    for (std::size_t i = 0; i < sys.rows; ++i) {
        if (!(is >> cell)) {
            throw DomainError("truncated right-hand side");
        }
        sys.rhs[i] = Integer(cell);
        if (sys.rhs[i] < 0) {
            throw DomainError("right-hand side entries must be non-negative");
        }
    }
    return sys;
}

} // namespace monpow
