#pragma once

#include <cstddef>
#include <functional>
#include <utility>

#include "gcur/matrix.hpp"

namespace gcur {

inline constexpr std::size_t kDefaultBlockRows = 1024;

/// Streaming view of a matrix: contiguous row blocks in order, with pass
/// accounting. One full traversal of all blocks increments pass_count by
/// exactly one; blocks tile the matrix exactly once per pass.
class MatrixSource {
public:
    using BlockFn = std::function<void(std::size_t row0, const DenseMatrix& block)>;

    virtual ~MatrixSource() = default;

    virtual std::size_t rows() const = 0;
    virtual std::size_t cols() const = 0;

    std::size_t pass_count() const { return passes_; }

    void stream_pass(std::size_t block_rows, const BlockFn& fn) {
        if (block_rows == 0) throw InputError("stream_pass: block_rows must be positive");
        do_pass(block_rows, fn);
        ++passes_;
    }

protected:
    virtual void do_pass(std::size_t block_rows, const BlockFn& fn) = 0;

private:
    std::size_t passes_ = 0;
};

class InMemorySource final : public MatrixSource {
public:
    explicit InMemorySource(DenseMatrix m) : m_(std::move(m)) {
        m_.validated("InMemorySource");
    }

    std::size_t rows() const override { return m_.rows(); }
    std::size_t cols() const override { return m_.cols(); }

    const DenseMatrix& matrix() const { return m_; }

protected:
    void do_pass(std::size_t block_rows, const BlockFn& fn) override {
        for (std::size_t r0 = 0; r0 < m_.rows(); r0 += block_rows) {
            const std::size_t r1 = std::min(r0 + block_rows, m_.rows());
            fn(r0, m_.row_block(r0, r1));
        }
    }

private:
    DenseMatrix m_;
};

/// How many passes a (multi-source) operation consumed. One joint pass means
/// each participating matrix was traversed exactly once.
struct PassReport {
    std::size_t passes = 0;
};

}  // namespace gcur
