#include "igt/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace igt {

Mat Mat::identity(long d, long conductor) {
    Mat m(d, d, conductor);
    for (long i = 0; i < d; ++i) m.at(i, i) = Cyc::one(conductor);
    return m;
}

std::vector<Cyc> Mat::row(long i) const {
    return {entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_};
}

std::vector<Cyc> Mat::col(long j) const {
    std::vector<Cyc> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (long i = 0; i < rows_; ++i) out.push_back(at(i, j));
    return out;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_, conductor_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::embedded(long m) const {
    Mat out(rows_, cols_, m);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).embedded(m);
    return out;
}

bool Mat::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Cyc& c) { return c.is_zero(); });
}

bool Mat::is_identity() const {
    if (!is_square()) return false;
    return *this == identity(rows_, conductor_);
}

bool Mat::is_scalar() const {
    if (!is_square() || rows_ == 0) return false;
    const Cyc& d = at(0, 0);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) {
            if (i == j ? (at(i, j) != d) : !at(i, j).is_zero()) return false;
        }
    return true;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw precondition_error("matrix shape mismatch in add");
    Mat out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
    return out;
}

Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw precondition_error("matrix shape mismatch in sub");
    Mat out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw precondition_error("matrix shape mismatch in mul");
    Mat out(a.rows_, b.cols_, a.conductor_);
    for (long i = 0; i < a.rows_; ++i) {
        for (long k = 0; k < a.cols_; ++k) {
            const Cyc& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < b.cols_; ++j) {
                const Cyc& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Mat Mat::scaled(const Cyc& c) const {
    Mat out = *this;
    for (auto& e : out.entries_) e *= c;
    return out;
}

Mat Mat::pow(long e) const {
    if (!is_square()) throw precondition_error("pow of non-square matrix");
    if (e < 0) return matinv(*this).pow(-e);
    Mat acc = identity(rows_, conductor_);
    Mat base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

std::string Mat::key() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << "@" << conductor_;
    for (const auto& e : entries_) os << ";" << e.str();
    return os.str();
}

RrefResult rref(const Mat& m) {
    Mat a = m;
    const long rows = a.rows(), cols = a.cols();
    std::vector<long> pivots;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long p = -1;
        for (long i = r; i < rows; ++i)
            if (!a.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (long j = 0; j < cols; ++j) std::swap(a.at(p, j), a.at(r, j));
        Cyc inv = a.at(r, c).inverse();
        for (long j = c; j < cols; ++j) a.at(r, j) *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Cyc f = a.at(i, c);
            for (long j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), r, std::move(pivots)};
}

Subspace Subspace::zero(long ambient, long conductor) {
    Subspace s;
    s.ambient_ = ambient;
    s.conductor_ = conductor;
    s.basis_ = Mat(0, ambient, conductor);
    return s;
}

Subspace Subspace::from_rows(const Mat& rows) {
    RrefResult r = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.conductor_ = rows.conductor();
    s.basis_ = Mat(r.rank, rows.cols(), rows.conductor());
    for (long i = 0; i < r.rank; ++i)
        for (long j = 0; j < rows.cols(); ++j) s.basis_.at(i, j) = r.mat.at(i, j);
    return s;
}

bool Subspace::contains(std::span<const Cyc> v) const {
    if (static_cast<long>(v.size()) != ambient_)
        throw precondition_error("vector length does not match ambient dimension");
    std::vector<Cyc> w(v.begin(), v.end());
    // Reduce against the RREF rows; membership iff the remainder vanishes.
    // Pivots are the first nonzero column of each basis row.
    for (long r = 0; r < basis_.rows(); ++r) {
        long pc = -1;
        for (long c = 0; c < ambient_; ++c)
            if (!basis_.at(r, c).is_zero()) { pc = c; break; }
        if (pc < 0) continue;
        if (!w[static_cast<std::size_t>(pc)].is_zero()) {
            Cyc f = w[static_cast<std::size_t>(pc)];
            for (long c = pc; c < ambient_; ++c)
                w[static_cast<std::size_t>(c)] -= f * basis_.at(r, c);
        }
    }
    return std::all_of(w.begin(), w.end(), [](const Cyc& c) { return c.is_zero(); });
}

bool Subspace::contains(const Subspace& other) const {
    for (long r = 0; r < other.basis().rows(); ++r) {
        auto row = other.basis().row(r);
        if (!contains(row)) return false;
    }
    return true;
}

Subspace nullspace(const Mat& m) {
    RrefResult r = rref(m);
    const long cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (long p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Mat basis(cols - r.rank, cols, m.conductor());
    long row = 0;
    for (long f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        basis.at(row, f) = Cyc::one(m.conductor());
        for (long pr = 0; pr < r.rank; ++pr)
            basis.at(row, r.pivots[static_cast<std::size_t>(pr)]) = -r.mat.at(pr, f);
        ++row;
    }
    return Subspace::from_rows(basis);
}

Cyc det(const Mat& m) {
    if (!m.is_square()) throw precondition_error("det of non-square matrix");
    Mat a = m;
    const long n = a.rows();
    Cyc d = Cyc::one(m.conductor());
    for (long c = 0; c < n; ++c) {
        long p = -1;
        for (long i = c; i < n; ++i)
            if (!a.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) return Cyc::zero(m.conductor());
        if (p != c) {
            for (long j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        Cyc inv = a.at(c, c).inverse();
        for (long i = c + 1; i < n; ++i) {
            if (a.at(i, c).is_zero()) continue;
            Cyc f = a.at(i, c) * inv;
            for (long j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return d;
}

Cyc trace(const Mat& m) {
    if (!m.is_square()) throw precondition_error("trace of non-square matrix");
    Cyc t = Cyc::zero(m.conductor());
    for (long i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

Mat matinv(const Mat& m) {
    if (!m.is_square()) throw precondition_error("inverse of non-square matrix");
    const long n = m.rows();
    Mat aug(n, 2 * n, m.conductor());
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Cyc::one(m.conductor());
    }
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivots[static_cast<std::size_t>(n - 1)] >= n)
        throw precondition_error("matrix is singular");
    Mat out(n, n, m.conductor());
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) out.at(i, j) = r.mat.at(i, n + j);
    return out;
}

Mat eigenprojection(const Mat& m, long order, const Cyc& lambda) {
    if (!m.is_square()) throw precondition_error("eigenprojection of non-square matrix");
    if (order < 1) throw precondition_error("eigenprojection order must be positive");
    if (!m.pow(order).is_identity())
        throw precondition_error("eigenprojection: m^order != I");
    if (lambda.pow(order) != Cyc::one(lambda.conductor()))
        throw precondition_error("eigenprojection: lambda^order != 1");
    const long n = m.conductor();
    Mat acc = Mat::identity(m.rows(), n);
    for (long j = 0; j < order; ++j) {
        Cyc mu = Cyc::root_of_unity(n, order, j);
        if (mu == lambda) continue;
        Mat term = m - Mat::identity(m.rows(), n).scaled(mu);
        acc = acc * term.scaled((lambda - mu).inverse());
    }
    return acc;
}

Subspace intersect(std::span<const Subspace> spaces) {
    if (spaces.empty()) throw precondition_error("intersect: empty list");
    Subspace acc = spaces[0];
    for (std::size_t k = 1; k < spaces.size(); ++k) {
        const Subspace& b = spaces[k];
        if (b.ambient_dim() != acc.ambient_dim())
            throw precondition_error("intersect: ambient dimension mismatch");
        // x in rowspace(A) cap rowspace(B) iff x = u A = v B; solve for (u, v).
        const Mat& A = acc.basis();
        const Mat& B = b.basis();
        const long n = acc.ambient_dim();
        Mat sys(n, A.rows() + B.rows(), acc.conductor());
        for (long i = 0; i < n; ++i) {
            for (long r = 0; r < A.rows(); ++r) sys.at(i, r) = A.at(r, i);
            for (long r = 0; r < B.rows(); ++r) sys.at(i, A.rows() + r) = -B.at(r, i);
        }
        Subspace ker = nullspace(sys);
        Mat rows(ker.dim(), n, acc.conductor());
        for (long r = 0; r < ker.dim(); ++r)
            for (long c = 0; c < n; ++c) {
                Cyc s = Cyc::zero(acc.conductor());
                for (long t = 0; t < A.rows(); ++t) s += ker.basis().at(r, t) * A.at(t, c);
                rows.at(r, c) = s;
            }
        acc = Subspace::from_rows(rows);
    }
    return acc;
}

} // namespace igt
