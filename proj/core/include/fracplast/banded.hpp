#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracplast {

/// Raised when elimination meets a (numerically) zero pivot.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::ptrdiff_t pivot_row)
      : std::runtime_error(what), pivot_row_(pivot_row) {}

  /// Row of the unknown vector at which elimination failed, -1 if unknown.
  std::ptrdiff_t pivot_row() const noexcept { return pivot_row_; }

 private:
  std::ptrdiff_t pivot_row_;
};

/**
 * Square band matrix with `lower` sub- and `upper` super-diagonals.
 *
 * Storage reserves `lower` extra super-diagonals for the fill-in produced by
 * partial pivoting, as in LAPACK's general band format.
 */
class BandMatrix {
 public:
  BandMatrix(std::size_t n, std::size_t lower, std::size_t upper);

  std::size_t size() const noexcept { return n_; }
  std::size_t lower() const noexcept { return kl_; }
  std::size_t upper() const noexcept { return ku_; }

  bool in_band(std::size_t row, std::size_t col) const noexcept;
  double at(std::size_t row, std::size_t col) const;
  /// Adds to an entry; throws std::out_of_range outside the band.
  void add(std::size_t row, std::size_t col, double value);

  std::vector<double> multiply(std::span<const double> x) const;

  /// Gaussian elimination with partial pivoting; the matrix is copied.
  std::vector<double> solve(std::span<const double> rhs) const;

 private:
  double& ref(std::size_t row, std::size_t col);
  double get(std::size_t row, std::size_t col) const;

  std::size_t n_;
  std::size_t kl_;
  std::size_t ku_;
  std::size_t width_;  // kl + ku + kl + 1 stored diagonals
  std::vector<double> data_;
};

}  // namespace fracplast
