#pragma once

#include <complex>
#include <vector>

namespace gidx {

using Complex = std::complex<double>;

// Trigonometric polynomial f(x) = sum_{|n| <= B} c_n e^{inx} on the circle.
// Coefficients are primary; uniform samples and coefficients convert exactly
// (round trip below 1e-12) whenever the sample count is at least 2B+1.
class Bandlimited {
 public:
  Bandlimited() : coeff_(1, Complex(0.0, 0.0)) {}
  explicit Bandlimited(std::vector<Complex> coeff);  // size must be odd: n = -B..B

  static Bandlimited constant(Complex value);
  // Projects S samples on x_j = 2*pi*j/S onto bandwidth B (requires S >= 2B+1).
  static Bandlimited from_samples(const std::vector<Complex>& samples, int bandwidth);

  int bandwidth() const { return static_cast<int>(coeff_.size() / 2); }
  Complex coefficient(int n) const;            // 0 outside the band
  const std::vector<Complex>& coefficients() const { return coeff_; }

  Complex eval(double x) const;
  std::vector<Complex> samples(int count) const;

  Bandlimited derivative() const;              // c_n -> i n c_n
  Bandlimited translated(double t) const;      // x -> f(x + t)
  Bandlimited conjugated() const;              // x -> conj(f(x))
  Bandlimited truncated(int new_bandwidth, double* dropped_mass = nullptr) const;

  Bandlimited& operator+=(const Bandlimited& other);
  Bandlimited& operator*=(Complex scale);
  friend Bandlimited operator+(Bandlimited a, const Bandlimited& b) { return a += b; }
  friend Bandlimited operator-(const Bandlimited& a, const Bandlimited& b);
  friend Bandlimited operator*(const Bandlimited& a, const Bandlimited& b);  // band adds
  friend Bandlimited operator*(Complex s, Bandlimited f) { return f *= s; }

  // Grid extrema on an oversampled uniform grid (>= oversample*(2B+1) points).
  double sup_norm(int oversample = 4) const;
  double min_abs(int oversample = 4) const;
  double coeff_l1() const;

  bool near_zero(double tol = 1e-14) const { return coeff_l1() <= tol; }

 private:
  std::vector<Complex> coeff_;  // index i holds n = i - B
};

}  // namespace gidx
