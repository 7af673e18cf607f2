#include "statespace/fourier.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace statespace {

CenteredDft::CenteredDft(double x_min, double dx, std::size_t n)
    : n_(n), dx_(dx), twiddle_(4 * n), offset_(n) {
  if (n == 0 || !(dx > 0.0)) {
    throw std::invalid_argument("CenteredDft needs n >= 1 and dx > 0");
  }
  const double quarter_turn = 2.0 * std::numbers::pi / static_cast<double>(4 * n);
  for (std::size_t m = 0; m < twiddle_.size(); ++m) {
    twiddle_[m] = std::polar(1.0, -quarter_turn * static_cast<double>(m));
  }
  const double spacing = dp();
  const double half = static_cast<double>(n) / 2.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double p = spacing * (static_cast<double>(k) - half);
    offset_[k] = std::polar(1.0, -p * x_min);
  }
}

double CenteredDft::dp() const {
  return 2.0 * std::numbers::pi / (static_cast<double>(n_) * dx_);
}

void CenteredDft::forward(std::span<const std::complex<double>> psi,
                          std::span<std::complex<double>> phi) const {
  transform(psi, phi, false);
}

void CenteredDft::inverse(std::span<const std::complex<double>> phi,
                          std::span<std::complex<double>> psi) const {
  transform(phi, psi, true);
}

// p_k (x_j - x_min) = 2 pi (2k - n)(2j + 1) / (4n), so the kernel is
// twiddle[(2k - n)(2j + 1) mod 4n].
void CenteredDft::transform(std::span<const std::complex<double>> in,
                            std::span<std::complex<double>> out,
                            bool inverse) const {
  if (in.size() != n_ || out.size() != n_) {
    throw std::invalid_argument("CenteredDft: span length differs from n");
  }
  const auto n = static_cast<std::int64_t>(n_);
  const std::int64_t period = 4 * n;
  const double scale =
      (inverse ? dp() : dx_) / std::sqrt(2.0 * std::numbers::pi);

  if (!inverse) {
    for (std::int64_t k = 0; k < n; ++k) {
      const std::int64_t stride = ((2 * (2 * k - n)) % period + period) % period;
      std::int64_t m = ((2 * k - n) % period + period) % period;
      std::complex<double> acc{};
      for (std::int64_t j = 0; j < n; ++j) {
        acc += in[j] * twiddle_[m];
        m += stride;
        if (m >= period) m -= period;
      }
      out[k] = scale * offset_[k] * acc;
    }
    return;
  }

  std::vector<std::complex<double>> shifted(n_);
  for (std::size_t k = 0; k < n_; ++k) shifted[k] = in[k] * std::conj(offset_[k]);
  for (std::int64_t j = 0; j < n; ++j) {
    // (2k - n)(2j + 1) advances by 2(2j + 1) per k.
    const std::int64_t stride = (2 * (2 * j + 1)) % period;
    std::int64_t m = (((-n) * (2 * j + 1)) % period + period) % period;
    std::complex<double> acc{};
    for (std::int64_t k = 0; k < n; ++k) {
      acc += shifted[k] * std::conj(twiddle_[m]);
      m += stride;
      if (m >= period) m -= period;
    }
    out[j] = scale * acc;
  }
}

}  // namespace statespace
