#include "brauer/gf.hpp"

#include "brauer/error.hpp"

#include <numeric>

namespace brauer::gf {

bool is_prime(long long n) {
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::uint32_t inverse(std::uint32_t a, long long p) {
    if (a % p == 0)
        throw Error("division by zero in F_p");
    // extended Euclid
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    t %= p;
    if (t < 0)
        t += p;
    return static_cast<std::uint32_t>(t);
}

Vec add(const Vec& a, const Vec& b, long long p) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<std::uint32_t>((static_cast<long long>(a[i]) + b[i]) % p);
    return r;
}

Vec sub(const Vec& a, const Vec& b, long long p) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<std::uint32_t>(((static_cast<long long>(a[i]) - b[i]) % p + p) % p);
    return r;
}

void scale_into(Vec& a, std::uint32_t c, long long p) {
    for (auto& x : a)
        x = static_cast<std::uint32_t>(static_cast<long long>(x) * c % p);
}

bool is_zero(const Vec& a) {
    for (auto x : a)
        if (x != 0)
            return false;
    return true;
}

void FpMat::add_row(const Vec& row) {
    if (static_cast<int>(row.size()) != cols_)
        throw Error("FpMat::add_row: size mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

namespace {

// In-place Gaussian elimination; returns pivot column per eliminated row.
std::vector<int> echelonize(std::vector<std::uint32_t>& a, int rows, int cols, long long p) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<size_t>(i) * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j)
                std::swap(a[static_cast<size_t>(piv) * cols + j], a[static_cast<size_t>(r) * cols + j]);
        std::uint32_t inv = inverse(a[static_cast<size_t>(r) * cols + c], p);
        for (int j = 0; j < cols; ++j)
            a[static_cast<size_t>(r) * cols + j] =
                static_cast<std::uint32_t>(static_cast<long long>(a[static_cast<size_t>(r) * cols + j]) * inv % p);
        for (int i = 0; i < rows; ++i) {
            if (i == r)
                continue;
            std::uint32_t f = a[static_cast<size_t>(i) * cols + c];
            if (f == 0)
                continue;
            for (int j = 0; j < cols; ++j) {
                long long v = a[static_cast<size_t>(i) * cols + j];
                v -= static_cast<long long>(f) * a[static_cast<size_t>(r) * cols + j] % p;
                a[static_cast<size_t>(i) * cols + j] = static_cast<std::uint32_t>((v % p + p) % p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int FpMat::rank() const {
    auto a = a_;
    return static_cast<int>(echelonize(a, rows_, cols_, p_).size());
}

std::vector<Vec> FpMat::nullspace() const {
    auto a = a_;
    std::vector<int> pivots = echelonize(a, rows_, cols_, p_);
    std::vector<bool> is_piv(cols_, false);
    for (int c : pivots)
        is_piv[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_piv[free])
            continue;
        Vec v(cols_, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) {
            std::uint32_t coef = a[r * cols_ + free];
            if (coef != 0)
                v[pivots[r]] = static_cast<std::uint32_t>((p_ - coef) % p_);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RowSpace::RowSpace(long long p, int ncols) : p_(p), ncols_(ncols), pivot_row_(ncols, -1) {
    priority_.resize(ncols);
    std::iota(priority_.begin(), priority_.end(), 0);
}

RowSpace::RowSpace(long long p, std::vector<int> col_priority)
    : p_(p), ncols_(static_cast<int>(col_priority.size())), priority_(std::move(col_priority)),
      pivot_row_(ncols_, -1) {}

void RowSpace::eliminate(Vec& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t f = v[row_pivot_[r]];
        if (f == 0)
            continue;
        const Vec& row = rows_[r];
        for (int j = 0; j < ncols_; ++j) {
            long long x = v[j];
            x -= static_cast<long long>(f) * row[j] % p_;
            v[j] = static_cast<std::uint32_t>((x % p_ + p_) % p_);
        }
    }
}

bool RowSpace::add(Vec row) {
    eliminate(row);
    int piv = -1;
    for (int c : priority_)
        if (row[c] != 0) {
            piv = c;
            break;
        }
    if (piv < 0)
        return false;
    std::uint32_t inv = inverse(row[piv], p_);
    scale_into(row, inv, p_);
    // keep earlier rows reduced at the new pivot
    for (size_t r = 0; r < rows_.size(); ++r) {
        std::uint32_t f = rows_[r][piv];
        if (f == 0)
            continue;
        for (int j = 0; j < ncols_; ++j) {
            long long x = rows_[r][j];
            x -= static_cast<long long>(f) * row[j] % p_;
            rows_[r][j] = static_cast<std::uint32_t>((x % p_ + p_) % p_);
        }
    }
    pivot_row_[piv] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    row_pivot_.push_back(piv);
    return true;
}

Vec RowSpace::residue(Vec v) const {
    eliminate(v);
    return v;
}

bool RowSpace::contains(const Vec& v) const {
    return is_zero(residue(v));
}

} // namespace brauer::gf
