#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace statespace {

// Unitary centred DFT between position samples at cell midpoints
//   x_j = x_min + (j + 1/2) dx,            j = 0 .. n-1
// and the conjugate momentum grid (hbar = 1)
//   p_k = 2 pi (k - n/2) / (n dx),         k = 0 .. n-1,
// approximating phi(p) = (2 pi)^{-1/2} \int psi(x) e^{-i p x} dx:
//
//   phi_k = dx / sqrt(2 pi) * sum_j psi_j e^{-i p_k x_j}
//   psi_j = dp / sqrt(2 pi) * sum_k phi_k e^{+i p_k x_j}
//
// With dx dp = 2 pi / n this is unitary for the measure-weighted inner
// products sum |psi|^2 dx = sum |phi|^2 dp. The kernel phase
// p_k (x_j - x_min) is reduced to an integer index into a 4n twiddle table,
// so accuracy does not degrade with n. Direct O(n^2) evaluation.
class CenteredDft {
 public:
  CenteredDft(double x_min, double dx, std::size_t n);

  std::size_t size() const { return n_; }
  double dx() const { return dx_; }
  double dp() const;

  // Input and output must not overlap.
  void forward(std::span<const std::complex<double>> psi,
               std::span<std::complex<double>> phi) const;
  void inverse(std::span<const std::complex<double>> phi,
               std::span<std::complex<double>> psi) const;

 private:
  void transform(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out, bool inverse) const;

  std::size_t n_;
  double dx_;
  std::vector<std::complex<double>> twiddle_;  // e^{-2 pi i m / 4n}
  std::vector<std::complex<double>> offset_;   // e^{-i p_k x_min}
};

}  // namespace statespace
