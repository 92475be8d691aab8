#pragma once

#include <cstdint>
#include <vector>

namespace brauer::gf {

bool is_prime(long long n);

// a^-1 mod p, p prime
std::uint32_t inverse(std::uint32_t a, long long p);

using Vec = std::vector<std::uint32_t>;

Vec add(const Vec& a, const Vec& b, long long p);
Vec sub(const Vec& a, const Vec& b, long long p);
void scale_into(Vec& a, std::uint32_t c, long long p);
bool is_zero(const Vec& a);

// Dense matrix over F_p, row-major.
class FpMat {
public:
    FpMat(long long p, int rows, int cols)
        : p_(p), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    long long modulus() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::uint32_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    std::uint32_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    void add_row(const Vec& row);   // appends; row.size() must equal cols()

    int rank() const;
    // Basis of {x : A x = 0}, one vector per row of the result.
    std::vector<Vec> nullspace() const;

private:
    long long p_;
    int rows_;
    int cols_;
    std::vector<std::uint32_t> a_;
};

// Incremental row space in echelon form. An optional column priority decides
// which coordinate becomes the pivot of a new row: the first nonzero position
// in priority order. residue() eliminates all pivots from a vector.
class RowSpace {
public:
    RowSpace(long long p, int ncols);
    RowSpace(long long p, std::vector<int> col_priority);

    // Returns true if the row enlarged the space.
    bool add(Vec row);
    Vec residue(Vec v) const;
    bool contains(const Vec& v) const;
    int dim() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return ncols_; }
    bool is_pivot(int col) const { return pivot_row_.at(col) >= 0; }
    const std::vector<Vec>& rows() const { return rows_; }

private:
    void eliminate(Vec& v) const;

    long long p_;
    int ncols_;
    std::vector<int> priority_;    // column visit order
    std::vector<int> pivot_row_;   // col -> row index or -1
    std::vector<Vec> rows_;
    std::vector<int> row_pivot_;   // row index -> its pivot col
};

} // namespace brauer::gf
