#include "fracplast/banded.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace fracplast {

BandMatrix::BandMatrix(std::size_t n, std::size_t lower, std::size_t upper)
    : n_(n), kl_(lower), ku_(upper), width_(2 * lower + upper + 1), data_(n * width_, 0.0) {}

bool BandMatrix::in_band(std::size_t row, std::size_t col) const noexcept {
  if (row >= n_ || col >= n_) return false;
  return col + kl_ >= row && col <= row + ku_;
}

double BandMatrix::get(std::size_t row, std::size_t col) const {
  // Caller guarantees row - kl <= col <= row + ku + kl.
  return data_[row * width_ + (col + kl_ - row)];
}

double& BandMatrix::ref(std::size_t row, std::size_t col) {
  return data_[row * width_ + (col + kl_ - row)];
}

double BandMatrix::at(std::size_t row, std::size_t col) const {
  return in_band(row, col) ? get(row, col) : 0.0;
}

void BandMatrix::add(std::size_t row, std::size_t col, double value) {
  if (!in_band(row, col)) {
    throw std::out_of_range("band matrix entry (" + std::to_string(row) + ", " +
                            std::to_string(col) + ") outside the band");
  }
  ref(row, col) += value;
}

std::vector<double> BandMatrix::multiply(std::span<const double> x) const {
  if (x.size() != n_) throw std::invalid_argument("band multiply: size mismatch");
  std::vector<double> y(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t lo = i >= kl_ ? i - kl_ : 0;
    const std::size_t hi = std::min(n_ - 1, i + ku_);
    double s = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) s += get(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<double> BandMatrix::solve(std::span<const double> rhs) const {
  if (rhs.size() != n_) throw std::invalid_argument("band solve: size mismatch");
  BandMatrix lu = *this;
  std::vector<double> b(rhs.begin(), rhs.end());

  double scale = 0.0;
  for (double v : data_) scale = std::max(scale, std::abs(v));
  const double tiny = scale * static_cast<double>(n_) * std::numeric_limits<double>::epsilon();

  const std::size_t reach = ku_ + kl_;
  for (std::size_t k = 0; k < n_; ++k) {
    const std::size_t last_row = std::min(n_ - 1, k + kl_);
    const std::size_t last_col = std::min(n_ - 1, k + reach);

    std::size_t p = k;
    double best = std::abs(lu.get(k, k));
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      const double v = std::abs(lu.get(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (!(best > tiny)) {
      throw SolverError("singular band matrix: zero pivot at unknown " + std::to_string(k),
                        static_cast<std::ptrdiff_t>(k));
    }
    if (p != k) {
      for (std::size_t j = k; j <= last_col; ++j) std::swap(lu.ref(k, j), lu.ref(p, j));
      std::swap(b[k], b[p]);
    }

    const double pivot = lu.get(k, k);
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      const double l = lu.get(i, k) / pivot;
      if (l == 0.0) continue;
      lu.ref(i, k) = 0.0;
      for (std::size_t j = k + 1; j <= last_col; ++j) lu.ref(i, j) -= l * lu.get(k, j);
      b[i] -= l * b[k];
    }
  }

  std::vector<double> x(n_, 0.0);
  for (std::size_t ii = n_; ii-- > 0;) {
    const std::size_t last_col = std::min(n_ - 1, ii + reach);
    double s = b[ii];
    for (std::size_t j = ii + 1; j <= last_col; ++j) s -= lu.get(ii, j) * x[j];
    x[ii] = s / lu.get(ii, ii);
  }
  return x;
}

}  // namespace fracplast
