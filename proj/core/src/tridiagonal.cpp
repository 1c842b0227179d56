#include "ns1d/tridiagonal.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace ns1d {

Tridiagonal::Tridiagonal(std::vector<double> sub, std::vector<double> diag,
                         std::vector<double> super)
    : sub_(std::move(sub)), diag_(std::move(diag)), super_(std::move(super)) {
  if (diag_.size() < 2 || sub_.size() != diag_.size() || super_.size() != diag_.size()) {
    throw std::invalid_argument("tridiagonal: bands must share a size >= 2");
  }
  factor();
}

void Tridiagonal::factor() {
  const std::size_t n = diag_.size();
  c_prime_.resize(n);
  inv_diag_.resize(n);

  inv_diag_[0] = 1.0 / diag_[0];
  c_prime_[0] = super_[0] * inv_diag_[0];
  for (std::size_t i = 1; i < n; ++i) {
    const double pivot = diag_[i] - sub_[i] * c_prime_[i - 1];
    inv_diag_[i] = 1.0 / pivot;
    c_prime_[i] = super_[i] * inv_diag_[i];
  }
}

void Tridiagonal::solve(std::span<const double> b, std::span<double> x) const {
  const std::size_t n = diag_.size();
  assert(b.size() == n && x.size() == n);

  x[0] = b[0] * inv_diag_[0];
  for (std::size_t i = 1; i < n; ++i) {
    x[i] = (b[i] - sub_[i] * x[i - 1]) * inv_diag_[i];
  }
  for (std::size_t i = n - 1; i-- > 0;) {
    x[i] -= c_prime_[i] * x[i + 1];
  }
}

}  // namespace ns1d
