#pragma once

#include <cassert>
#include <vector>

namespace evplan {

// Dense row-major matrix.
template <typename V>
class Grid {
  public:
    Grid() : rows_(0), cols_(0) {}
    Grid(int rows, int cols, V init = V{})
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, init) {
        assert(rows >= 0 && cols >= 0);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    V& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }
    const V& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    V* row(int i) { return data_.data() + static_cast<size_t>(i) * cols_; }
    const V* row(int i) const { return data_.data() + static_cast<size_t>(i) * cols_; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

  private:
    int rows_, cols_;
    std::vector<V> data_;
};

}  // namespace evplan
