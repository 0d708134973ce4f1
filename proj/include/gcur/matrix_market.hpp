#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gcur/matrix.hpp"
#include "gcur/source.hpp"

namespace gcur {

namespace detail {

struct MmHeader {
    bool coordinate = false;
    std::size_t rows = 0, cols = 0, nnz = 0;
    std::size_t header_lines = 0;  // lines consumed including the size line
};

inline std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

inline MmHeader parse_mm_header(std::istream& in, const std::string& path) {
    MmHeader h;
    std::string line;
    std::size_t lineno = 0;

    if (!std::getline(in, line)) throw ParseError(path + ": empty file", 1);
    ++lineno;
    std::istringstream banner(line);
    std::string tag, object, format, field, symmetry;
    banner >> tag >> object >> format >> field >> symmetry;
    if (lower(tag) != "%%matrixmarket" || lower(object) != "matrix")
        throw ParseError(path + ": not a Matrix Market file", lineno);
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);
    if (format == "coordinate")
        h.coordinate = true;
    else if (format != "array")
        throw ParseError(path + ": unsupported format '" + format + "'", lineno);
    if (field != "real" && field != "integer" && field != "double")
        throw ParseError(path + ": unsupported field '" + field + "'", lineno);
    if (symmetry != "general")
        throw ParseError(path + ": only general symmetry is supported", lineno);

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '%') continue;
        std::istringstream dims(line);
        long long r = -1, c = -1, nnz = -1;
        dims >> r >> c;
        if (h.coordinate) dims >> nnz;
        if (r < 0 || c < 0 || (h.coordinate && nnz < 0))
            throw ParseError(path + ": malformed size line", lineno);
        h.rows = static_cast<std::size_t>(r);
        h.cols = static_cast<std::size_t>(c);
        h.nnz = h.coordinate ? static_cast<std::size_t>(nnz) : 0;
        h.header_lines = lineno;
        return h;
    }
    throw ParseError(path + ": missing size line", lineno);
}

}  // namespace detail

/// Reads a Matrix Market file (array or coordinate, real/integer, general)
/// into a dense matrix. Parse failures carry the 1-based line number.
inline DenseMatrix read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "' for reading");
    const detail::MmHeader h = detail::parse_mm_header(in, path);
    std::size_t lineno = h.header_lines;
    DenseMatrix out(h.rows, h.cols);
    std::string line;

    if (h.coordinate) {
        std::size_t seen = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '%') continue;
            std::istringstream row(line);
            long long i = 0, j = 0;
            double v = 0.0;
            if (!(row >> i >> j >> v))
                throw ParseError(path + ": malformed coordinate entry", lineno);
            if (i < 1 || j < 1 || static_cast<std::size_t>(i) > h.rows ||
                static_cast<std::size_t>(j) > h.cols)
                throw ParseError(path + ": coordinate out of range", lineno);
            out(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1) = v;
            ++seen;
        }
        if (seen != h.nnz)
            throw ParseError(path + ": expected " + std::to_string(h.nnz) + " entries, found " +
                                 std::to_string(seen),
                             lineno);
    } else {
        std::size_t filled = 0;
        const std::size_t total = h.rows * h.cols;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '%') continue;
            std::istringstream row(line);
            double v = 0.0;
            while (row >> v) {
                if (filled >= total)
                    throw ParseError(path + ": more entries than rows*cols", lineno);
                out.data()[filled++] = v;  // array format is column-major, as stored
            }
            if (!row.eof())
                throw ParseError(path + ": malformed array entry", lineno);
        }
        if (filled != total)
            throw ParseError(path + ": expected " + std::to_string(total) + " entries, found " +
                                 std::to_string(filled),
                             lineno);
    }
    if (!out.all_finite()) throw InputError(path + ": matrix contains NaN or Inf");
    return out;
}

/// Writes array-format Matrix Market with round-trip-exact doubles (%.17g).
inline void write_matrix_market(const std::string& path, const DenseMatrix& m) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << "%%MatrixMarket matrix array real general\n";
    out << m.rows() << " " << m.cols() << "\n";
    char buf[40];
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", m.data()[i]);
        out << buf << "\n";
    }
    if (!out) throw InputError("write to '" + path + "' failed");
}

/// Streams a Matrix Market file as row blocks. Each pass reads the file once
/// (array-format files are column-ordered, so a pass materializes the matrix
/// while scanning and then serves blocks from the buffer).
class MatrixMarketSource final : public MatrixSource {
public:
    explicit MatrixMarketSource(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        if (!in) throw InputError("cannot open '" + path_ + "' for reading");
        const detail::MmHeader h = detail::parse_mm_header(in, path_);
        rows_ = h.rows;
        cols_ = h.cols;
    }

    std::size_t rows() const override { return rows_; }
    std::size_t cols() const override { return cols_; }
    const std::string& path() const { return path_; }

protected:
    void do_pass(std::size_t block_rows, const BlockFn& fn) override {
        const DenseMatrix m = read_matrix_market(path_);
        for (std::size_t r0 = 0; r0 < m.rows(); r0 += block_rows) {
            const std::size_t r1 = std::min(r0 + block_rows, m.rows());
            fn(r0, m.row_block(r0, r1));
        }
    }

private:
    std::string path_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
};

}  // namespace gcur
