#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ns1d {

/// Tridiagonal matrix with a precomputed Thomas factorization. The factor
/// step runs once; solves are O(n), allocation-free, and const, so a factored
/// system can be shared by concurrent readers.
class Tridiagonal {
 public:
  Tridiagonal() = default;
  Tridiagonal(std::vector<double> sub, std::vector<double> diag,
              std::vector<double> super);

  std::size_t size() const { return diag_.size(); }
  const std::vector<double>& sub() const { return sub_; }
  const std::vector<double>& diag() const { return diag_; }
  const std::vector<double>& super() const { return super_; }

  /// Solve A x = b; b and x may alias.
  void solve(std::span<const double> b, std::span<double> x) const;

 private:
  void factor();

  std::vector<double> sub_;    // sub_[i] multiplies x[i-1] in row i; sub_[0] unused
  std::vector<double> diag_;
  std::vector<double> super_;  // super_[i] multiplies x[i+1] in row i; last unused
  std::vector<double> c_prime_;   // normalized superdiagonal from the forward sweep
  std::vector<double> inv_diag_;  // reciprocals of the pivots
};

}  // namespace ns1d
