#pragma once

#include <stdexcept>
#include <vector>

#include "porbit/partition.hpp"

namespace porbit {

/// Ordered sample of n partitions over the same m points with the same
/// cluster budget ell. Order matters (duplicates are distinct members).
class EnsembleSample {
public:
    explicit EnsembleSample(std::vector<Partition> members) : members_(std::move(members)) {
        if (members_.empty()) throw std::invalid_argument("EnsembleSample: need n >= 1");
        for (const Partition& p : members_)
            if (!p.same_shape(members_.front()))
                throw std::invalid_argument("EnsembleSample: members differ in shape");
    }

    std::size_t size() const { return members_.size(); }
    std::size_t ell() const { return members_.front().rows(); }
    std::size_t points() const { return members_.front().cols(); }
    const Partition& operator[](std::size_t i) const { return members_[i]; }
    const std::vector<Partition>& members() const { return members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    std::vector<Partition> members_;
};

}  // namespace porbit
