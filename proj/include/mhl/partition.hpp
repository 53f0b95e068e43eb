#ifndef MHL_PARTITION_HPP
#define MHL_PARTITION_HPP

#include <string>
#include <vector>

#include "mhl/errors.hpp"

namespace mhl {

// A partition with strictly decreasing positive parts (a regular dominant
// weight). Parts are stored largest first.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw regularity_error("partition parts must be positive");
            if (i > 0 && parts_[i] >= parts_[i - 1])
                throw regularity_error("partition parts must be strictly decreasing");
        }
    }

    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); } // 1-based
    const std::vector<int>& parts() const { return parts_; }

    int first() const { return parts_.empty() ? 0 : parts_.front(); }

    // Number of cells in column j, i.e. the conjugate part lambda'_j.
    int conjugate(int j) const {
        int c = 0;
        for (int p : parts_)
            if (p >= j) ++c;
        return c;
    }

    int cell_count() const {
        int c = 0;
        for (int p : parts_) c += p;
        return c;
    }

    // sum_i (i-1) * lambda_i
    long n_lambda() const {
        long s = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += static_cast<long>(i) * parts_[i];
        return s;
    }

    // Value vector padded with zeros to length n.
    std::vector<int> padded(int n) const {
        std::vector<int> v(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < parts_.size() && i < v.size(); ++i) v[i] = parts_[i];
        return v;
    }

    void require_parts(int count, const char* context) const {
        if (size() != count)
            throw shape_error(std::string(context) + ": partition must have exactly " +
                              std::to_string(count) + " parts, got " + std::to_string(size()));
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  private:
    std::vector<int> parts_;
};

} // namespace mhl

#endif
