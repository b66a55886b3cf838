#include "gidx/bandlimited.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gidx/errors.hpp"

namespace gidx {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Bandlimited::Bandlimited(std::vector<Complex> coeff) : coeff_(std::move(coeff)) {
  if (coeff_.empty() || coeff_.size() % 2 == 0)
    fail(Errc::ConfigError, "coefficient array must have odd length 2B+1");
}

Bandlimited Bandlimited::constant(Complex value) {
  return Bandlimited(std::vector<Complex>{value});
}

Bandlimited Bandlimited::from_samples(const std::vector<Complex>& samples, int bandwidth) {
  const int s = static_cast<int>(samples.size());
  if (bandwidth < 0) fail(Errc::ConfigError, "negative bandwidth");
  if (s < 2 * bandwidth + 1)
    fail(Errc::BandwidthExceeded, "need at least 2B+1 samples to resolve bandwidth B");
  std::vector<Complex> c(2 * bandwidth + 1, Complex(0, 0));
  for (int n = -bandwidth; n <= bandwidth; ++n) {
    Complex acc(0, 0);
    for (int j = 0; j < s; ++j) {
      const double phase = -kTwoPi * n * j / s;
      acc += samples[j] * std::polar(1.0, phase);
    }
    c[n + bandwidth] = acc / static_cast<double>(s);
  }
  return Bandlimited(std::move(c));
}

Complex Bandlimited::coefficient(int n) const {
  const int b = bandwidth();
  if (n < -b || n > b) return Complex(0, 0);
  return coeff_[n + b];
}

Complex Bandlimited::eval(double x) const {
  const int b = bandwidth();
  // Horner in e^{ix} over n = -B..B.
  const Complex w = std::polar(1.0, x);
  Complex acc(0, 0);
  for (int i = static_cast<int>(coeff_.size()) - 1; i >= 0; --i) acc = acc * w + coeff_[i];
  return acc * std::polar(1.0, -b * x);
}

std::vector<Complex> Bandlimited::samples(int count) const {
  std::vector<Complex> out(count);
  for (int j = 0; j < count; ++j) out[j] = eval(kTwoPi * j / count);
  return out;
}

Bandlimited Bandlimited::derivative() const {
  const int b = bandwidth();
  std::vector<Complex> c(coeff_);
  for (int n = -b; n <= b; ++n) c[n + b] *= Complex(0, n);
  return Bandlimited(std::move(c));
}

Bandlimited Bandlimited::translated(double t) const {
  const int b = bandwidth();
  std::vector<Complex> c(coeff_);
  for (int n = -b; n <= b; ++n) c[n + b] *= std::polar(1.0, n * t);
  return Bandlimited(std::move(c));
}

Bandlimited Bandlimited::conjugated() const {
  const int b = bandwidth();
  std::vector<Complex> c(coeff_.size());
  for (int n = -b; n <= b; ++n) c[n + b] = std::conj(coeff_[-n + b]);
  return Bandlimited(std::move(c));
}

Bandlimited Bandlimited::truncated(int new_bandwidth, double* dropped_mass) const {
  const int b = bandwidth();
  if (new_bandwidth >= b) {
    if (dropped_mass) *dropped_mass = 0.0;
    std::vector<Complex> c(2 * new_bandwidth + 1, Complex(0, 0));
    for (int n = -b; n <= b; ++n) c[n + new_bandwidth] = coeff_[n + b];
    return Bandlimited(std::move(c));
  }
  double dropped = 0.0;
  std::vector<Complex> c(2 * new_bandwidth + 1);
  for (int n = -b; n <= b; ++n) {
    if (std::abs(n) <= new_bandwidth)
      c[n + new_bandwidth] = coeff_[n + b];
    else
      dropped += std::abs(coeff_[n + b]);
  }
  if (dropped_mass) *dropped_mass = dropped;
  return Bandlimited(std::move(c));
}

Bandlimited& Bandlimited::operator+=(const Bandlimited& other) {
  const int b = std::max(bandwidth(), other.bandwidth());
  std::vector<Complex> c(2 * b + 1, Complex(0, 0));
  for (int n = -b; n <= b; ++n) c[n + b] = coefficient(n) + other.coefficient(n);
  coeff_ = std::move(c);
  return *this;
}

Bandlimited& Bandlimited::operator*=(Complex scale) {
  for (auto& v : coeff_) v *= scale;
  return *this;
}

Bandlimited operator-(const Bandlimited& a, const Bandlimited& b) {
  Bandlimited nb = b;
  nb *= Complex(-1, 0);
  Bandlimited out = a;
  out += nb;
  return out;
}

Bandlimited operator*(const Bandlimited& a, const Bandlimited& b) {
  const int ba = a.bandwidth(), bb = b.bandwidth();
  const int bc = ba + bb;
  std::vector<Complex> c(2 * bc + 1, Complex(0, 0));
  for (int m = -ba; m <= ba; ++m) {
    const Complex am = a.coefficient(m);
    if (am == Complex(0, 0)) continue;
    for (int n = -bb; n <= bb; ++n) c[m + n + bc] += am * b.coefficient(n);
  }
  return Bandlimited(std::move(c));
}

double Bandlimited::sup_norm(int oversample) const {
  const int count = std::max(16, oversample * (2 * bandwidth() + 1));
  double best = 0.0;
  for (int j = 0; j < count; ++j) best = std::max(best, std::abs(eval(kTwoPi * j / count)));
  return best;
}

double Bandlimited::min_abs(int oversample) const {
  const int count = std::max(16, oversample * (2 * bandwidth() + 1));
  double best = std::abs(eval(0.0));
  for (int j = 1; j < count; ++j) best = std::min(best, std::abs(eval(kTwoPi * j / count)));
  return best;
}

double Bandlimited::coeff_l1() const {
  double s = 0.0;
  for (const auto& v : coeff_) s += std::abs(v);
  return s;
}

}  // namespace gidx
