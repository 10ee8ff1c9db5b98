#pragma once

#include <span>
#include <vector>

namespace hyperfront {

/// LU factorization of a constant tridiagonal matrix, reused for many solves.
class TridiagonalLU {
public:
    TridiagonalLU() = default;
    /// sub and super have n-1 entries, diag has n.
    TridiagonalLU(std::vector<double> sub, std::vector<double> diag, std::vector<double> super);

    /// Overwrites rhs with the solution.
    void solve(std::span<double> rhs) const;
    std::size_t size() const { return diag_.size(); }

private:
    std::vector<double> sub_, diag_, super_, super2_;
    std::vector<int> pivots_;
};

/// LU factorization of a general banded matrix with kl sub- and ku
/// super-diagonals, reused for many solves.
class BandedLU {
public:
    BandedLU(int n, int kl, int ku);

    /// Sets A(row, col). Must be called before factor() and within the band.
    void set(int row, int col, double value);
    void add(int row, int col, double value);
    void factor();
    void solve(std::span<double> rhs) const;
    int size() const { return n_; }

private:
    double& at(int row, int col);

    int n_, kl_, ku_, ldab_;
    std::vector<double> ab_;  // LAPACK band storage, column major
    std::vector<int> pivots_;
    bool factored_ = false;
};

}  // namespace hyperfront
