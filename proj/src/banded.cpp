#include "hyperfront/banded.hpp"

#include <lapacke.h>

#include <string>

#include "hyperfront/errors.hpp"

namespace hyperfront {

TridiagonalLU::TridiagonalLU(std::vector<double> sub, std::vector<double> diag,
                             std::vector<double> super)
    : sub_(std::move(sub)), diag_(std::move(diag)), super_(std::move(super)) {
    const auto n = static_cast<lapack_int>(diag_.size());
    if (n < 1 || sub_.size() + 1 != diag_.size() || super_.size() + 1 != diag_.size())
        throw ValidationError("inconsistent tridiagonal band sizes");
    super2_.assign(diag_.size() > 2 ? diag_.size() - 2 : 1, 0.0);
    pivots_.assign(diag_.size(), 0);
    const lapack_int info =
        LAPACKE_dgttrf(n, sub_.data(), diag_.data(), super_.data(), super2_.data(), pivots_.data());
    if (info != 0) throw NumericalError("tridiagonal factorization failed, info=" + std::to_string(info));
}

void TridiagonalLU::solve(std::span<double> rhs) const {
    const auto n = static_cast<lapack_int>(diag_.size());
    if (rhs.size() != diag_.size()) throw ValidationError("tridiagonal solve: size mismatch");
    const lapack_int info =
        LAPACKE_dgttrs_work(LAPACK_COL_MAJOR, 'N', n, 1, sub_.data(), diag_.data(), super_.data(),
                            super2_.data(), pivots_.data(), rhs.data(), n);
    if (info != 0) throw NumericalError("tridiagonal solve failed, info=" + std::to_string(info));
}

BandedLU::BandedLU(int n, int kl, int ku)
    : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1),
      ab_(static_cast<std::size_t>(ldab_) * static_cast<std::size_t>(n), 0.0),
      pivots_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || kl < 0 || ku < 0) throw ValidationError("invalid band shape");
}

double& BandedLU::at(int row, int col) {
    if (factored_) throw ValidationError("banded matrix already factored");
    if (row < 0 || col < 0 || row >= n_ || col >= n_ || row - col > kl_ || col - row > ku_)
        throw ValidationError("entry (" + std::to_string(row) + "," + std::to_string(col) +
                              ") outside the band");
    // dgbtrf layout: A(i,j) lives at AB(kl + ku + i - j, j).
    return ab_[static_cast<std::size_t>(kl_ + ku_ + row - col) +
               static_cast<std::size_t>(col) * static_cast<std::size_t>(ldab_)];
}

void BandedLU::set(int row, int col, double value) { at(row, col) = value; }
void BandedLU::add(int row, int col, double value) { at(row, col) += value; }

void BandedLU::factor() {
    const lapack_int info =
        LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n_, n_, kl_, ku_, ab_.data(), ldab_, pivots_.data());
    if (info != 0) throw NumericalError("banded factorization failed, info=" + std::to_string(info));
    factored_ = true;
}

void BandedLU::solve(std::span<double> rhs) const {
    if (!factored_) throw ValidationError("banded solve before factor()");
    if (rhs.size() != static_cast<std::size_t>(n_)) throw ValidationError("banded solve: size mismatch");
    const lapack_int info = LAPACKE_dgbtrs_work(LAPACK_COL_MAJOR, 'N', n_, kl_, ku_, 1, ab_.data(),
                                                ldab_, pivots_.data(), rhs.data(), n_);
    if (info != 0) throw NumericalError("banded solve failed, info=" + std::to_string(info));
}

}  // namespace hyperfront
