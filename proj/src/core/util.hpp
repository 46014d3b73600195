#ifndef OPUCLAB_UTIL_HPP
#define OPUCLAB_UTIL_HPP

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace opuclab {

using cplx = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline cplx unit_circle(double theta) { return std::polar(1.0, theta); }

// Normalize an angle to the fundamental interval [0, 2*pi).
inline double normalize_angle(double theta) {
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  if (t >= two_pi) t = 0.0;  // fmod can land exactly on 2*pi after the +=
  return t;
}

// exp(w) - 1, stable for small |w|.
inline cplx expm1c(cplx w) {
  const double x = w.real();
  const double y = w.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

// Compensated (Kahan) accumulator.  The transfer-norm sums enter a reciprocal
// in the spacing bound, so these are worth the extra adds.
struct KahanSum {
  double s = 0.0;
  double c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  double value() const { return s; }
};

struct KahanCSum {
  KahanSum re, im;
  void add(cplx x) {
    re.add(x.real());
    im.add(x.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

// --- deterministic hashing / seeded draws -------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
  return splitmix64(seed ^ splitmix64(v + 0x632be59bd9b4e019ull));
}

// Uniform double in [0, 1) from 64 hash bits.
inline double unit_interval(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// Uniform point in the closed disk of the given radius, derived purely from
// (seed, index) so that evaluation is a pure function.
inline cplx disk_point(std::uint64_t seed, std::uint64_t index, double radius) {
  std::uint64_t h1 = hash_combine(seed, index);
  std::uint64_t h2 = splitmix64(h1);
  double r = radius * std::sqrt(unit_interval(h1));
  double phi = two_pi * unit_interval(h2);
  return std::polar(r, phi);
}

// --- text formatting ------------------------------------------------------

// Locale-independent decimal with 17 significant digits (round-trips binary64).
inline std::string format_digits17(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

// Shortest decimal that round-trips; used for coefficient files so that
// save(load(save(x))) is byte-identical.
inline std::string format_shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// --- parallel sweep -------------------------------------------------------

// Runs fn(i) for i in [0, count); static block partition, deterministic
// regardless of scheduling.  threads == 0 means hardware concurrency.
void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn,
                  unsigned threads = 0);

// SHA-256 hex digest (backed by libcrypto).
std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const std::string& s);

}  // namespace opuclab

#endif
