// Partitions of m data points into at most ell clusters, represented as
// column-stochastic membership matrices. Two matrices describe the same
// partition exactly when one is a row permutation of the other; all
// functions in this library treat representations as interchangeable and
// never canonicalize.

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace porbit {

/// Accept a column sum as exact when it deviates from 1 by at most this.
inline constexpr double kColumnSumTol = 1e-12;
/// Renormalize a column whose sum deviates by less than this; reject beyond.
inline constexpr double kColumnRenormTol = 1e-9;
/// Two cluster rows closer than this are considered identical.
inline constexpr double kIdenticalRowTol = 1e-12;

/// Membership matrix of ell clusters over m data points, column sums 1.
/// Rows are clusters, columns are data points; empty clusters are all-zero
/// rows. Hard partitions have binary entries. Immutable after construction.
class Partition {
public:
    Partition(std::size_t rows, std::size_t cols, std::vector<double> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows_ == 0 || cols_ == 0)
            throw std::invalid_argument("Partition: dimensions must be positive");
        if (rows_ > cols_)
            throw std::invalid_argument("Partition: cluster budget " + std::to_string(rows_) +
                                        " exceeds point count " + std::to_string(cols_));
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("Partition: entry count does not match dimensions");
        for (double& e : data_) {
            if (e < -kColumnSumTol || e > 1.0 + kColumnSumTol)
                throw std::invalid_argument("Partition: membership value outside [0, 1]");
            e = std::clamp(e, 0.0, 1.0);
        }
        for (std::size_t j = 0; j < cols_; ++j) {
            double sum = 0.0;
            for (std::size_t r = 0; r < rows_; ++r) sum += data_[r * cols_ + j];
            double dev = std::abs(sum - 1.0);
            if (dev <= kColumnSumTol) continue;
            if (dev < kColumnRenormTol) {
                for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + j] /= sum;
            } else {
                throw std::invalid_argument("Partition: column " + std::to_string(j + 1) +
                                            " sums to " + std::to_string(sum) + ", not 1");
            }
        }
        hard_ = std::all_of(data_.begin(), data_.end(),
                            [](double e) { return e == 0.0 || e == 1.0; });
    }

    /// Hard partition from 1-based cluster labels, one per data point.
    static Partition from_labels(const std::vector<int>& labels, std::size_t ell) {
        if (labels.empty()) throw std::invalid_argument("from_labels: empty label vector");
        std::vector<double> m(ell * labels.size(), 0.0);
        for (std::size_t j = 0; j < labels.size(); ++j) {
            int lab = labels[j];
            if (lab < 1 || static_cast<std::size_t>(lab) > ell)
                throw std::invalid_argument("from_labels: label " + std::to_string(lab) +
                                            " at position " + std::to_string(j + 1) +
                                            " outside 1.." + std::to_string(ell));
            m[(static_cast<std::size_t>(lab) - 1) * labels.size() + j] = 1.0;
        }
        return Partition(ell, labels.size(), std::move(m));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_hard() const { return hard_; }

    double operator()(std::size_t r, std::size_t j) const { return data_[r * cols_ + j]; }
    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(data_.data() + r * cols_, cols_);
    }
    const std::vector<double>& data() const { return data_; }

    bool same_shape(const Partition& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> data_;
    bool hard_ = false;
};

/// Bijection on cluster indices {0..ell-1}. image[p] = q means row p of the
/// permuted matrix takes row q of the original, so `image` is exactly the
/// row-selection of the corresponding permutation matrix.
class PermutationMap {
public:
    explicit PermutationMap(std::vector<std::size_t> image) : image_(std::move(image)) {
        std::vector<char> seen(image_.size(), 0);
        for (std::size_t q : image_) {
            if (q >= image_.size() || seen[q])
                throw std::invalid_argument("PermutationMap: image is not a bijection");
            seen[q] = 1;
        }
    }

    static PermutationMap identity(std::size_t n) {
        std::vector<std::size_t> img(n);
        for (std::size_t i = 0; i < n; ++i) img[i] = i;
        return PermutationMap(std::move(img));
    }

    std::size_t size() const { return image_.size(); }
    std::size_t operator()(std::size_t p) const { return image_[p]; }
    const std::vector<std::size_t>& image() const { return image_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i] != i) return false;
        return true;
    }

    PermutationMap inverse() const {
        std::vector<std::size_t> inv(image_.size());
        for (std::size_t p = 0; p < image_.size(); ++p) inv[image_[p]] = p;
        return PermutationMap(std::move(inv));
    }

    /// Function composition: compose(a, b)(p) = a(b(p)). Applying the result
    /// to a matrix equals applying `a` first, then `b`.
    friend PermutationMap compose(const PermutationMap& a, const PermutationMap& b) {
        if (a.size() != b.size())
            throw std::invalid_argument("compose: size mismatch");
        std::vector<std::size_t> img(a.size());
        for (std::size_t p = 0; p < a.size(); ++p) img[p] = a(b(p));
        return PermutationMap(std::move(img));
    }

    friend bool operator==(const PermutationMap& a, const PermutationMap& b) {
        return a.image_ == b.image_;
    }

private:
    std::vector<std::size_t> image_;
};

/// Row-permuted representation of the same partition: row p of the result
/// is row perm(p) of the input.
inline Partition apply_permutation(const Partition& x, const PermutationMap& perm) {
    if (perm.size() != x.rows())
        throw std::invalid_argument("apply_permutation: permutation size mismatch");
    std::vector<double> out(x.rows() * x.cols());
    for (std::size_t p = 0; p < x.rows(); ++p) {
        auto src = x.row(perm(p));
        std::copy(src.begin(), src.end(), out.begin() + p * x.cols());
    }
    return Partition(x.rows(), x.cols(), std::move(out));
}

/// Euclidean matrix distance between two fixed representations.
inline double frobenius_distance(const Partition& x, const Partition& y) {
    if (!x.same_shape(y))
        throw std::invalid_argument("frobenius_distance: dimension mismatch");
    double sum = 0.0;
    const auto& a = x.data();
    const auto& b = y.data();
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

/// 1-based cluster label of every point of a hard partition.
inline std::vector<int> hard_labels(const Partition& x) {
    if (!x.is_hard()) throw std::invalid_argument("hard_labels: partition is not hard");
    std::vector<int> labels(x.cols(), 0);
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (x(r, j) == 1.0) labels[j] = static_cast<int>(r) + 1;
    return labels;
}

/// Number of points in each cluster (row sums; exact integers for hard input).
inline std::vector<double> cluster_sizes(const Partition& x) {
    std::vector<double> sizes(x.rows(), 0.0);
    for (std::size_t r = 0; r < x.rows(); ++r) {
        double s = 0.0;
        for (double e : x.row(r)) s += e;
        sizes[r] = s;
    }
    return sizes;
}

}  // namespace porbit
