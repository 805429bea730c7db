#pragma once

#include "igt/cyclotomic.hpp"
#include "igt/errors.hpp"

#include <span>
#include <vector>

namespace igt {

/// Dense matrix over Q(zeta_n).  All entries share one conductor; values are
/// immutable in spirit (operations return fresh matrices).
class Mat {
public:
    Mat() : rows_(0), cols_(0), conductor_(1) {}
    Mat(long rows, long cols, long conductor)
        : rows_(rows), cols_(cols), conductor_(conductor),
          entries_(static_cast<std::size_t>(rows * cols), Cyc::zero(conductor)) {}

    static Mat identity(long d, long conductor);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long conductor() const { return conductor_; }

    const Cyc& at(long i, long j) const { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
    Cyc& at(long i, long j) { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }

    std::vector<Cyc> row(long i) const;
    std::vector<Cyc> col(long j) const;

    Mat transpose() const;
    Mat embedded(long m) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;
    /// True when the matrix is lambda * I for some scalar lambda.
    bool is_scalar() const;

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && conductor_ == o.conductor_ && entries_ == o.entries_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    Mat scaled(const Cyc& c) const;
    Mat pow(long e) const;

    /// Canonical key: dimensions plus the canonical printing of every entry.
    std::string key() const;

private:
    long rows_, cols_, conductor_;
    std::vector<Cyc> entries_;
};

struct RrefResult {
    Mat mat;
    long rank;
    std::vector<long> pivots;
};

/// Canonical reduced row echelon form (leading-entry pivoting, pivots scaled
/// to 1, eliminated above and below).
RrefResult rref(const Mat& m);

/// Row space of a matrix in canonical RREF form; two equal subspaces have
/// identical basis matrices, so equality is plain comparison.
class Subspace {
public:
    Subspace() : ambient_(0), conductor_(1) {}
    static Subspace zero(long ambient, long conductor);
    /// Canonicalizes the row span of `rows`.
    static Subspace from_rows(const Mat& rows);

    long ambient_dim() const { return ambient_; }
    long dim() const { return basis_.rows(); }
    long conductor() const { return conductor_; }
    const Mat& basis() const { return basis_; }

    bool contains(std::span<const Cyc> v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    long ambient_;
    long conductor_;
    Mat basis_;
};

/// Basis of {v : m v = 0}, canonicalized.
Subspace nullspace(const Mat& m);

Cyc det(const Mat& m);
Cyc trace(const Mat& m);
/// Inverse of a square matrix; throws precondition_error when singular.
Mat matinv(const Mat& m);

/// Lagrange interpolation projector onto the lambda-eigenspace of a matrix of
/// finite multiplicative order:  P = prod_{mu^order = 1, mu != lambda}
/// (m - mu I) / (lambda - mu).  Requires m^order = I and lambda^order = 1.
Mat eigenprojection(const Mat& m, long order, const Cyc& lambda);

/// Intersection of subspaces of a common ambient space.
Subspace intersect(std::span<const Subspace> spaces);

} // namespace igt
