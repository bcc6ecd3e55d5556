#ifndef THOMPSON_DYADIC_HPP
#define THOMPSON_DYADIC_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace thompson {

/// Raised when a result would need more binary digits after the point than
/// the configured scale limit allows.
class ScaleOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Process-wide bound on Dyadic::scale(). Default 2^20.
std::uint32_t scale_limit() noexcept;
void set_scale_limit(std::uint32_t limit) noexcept;

inline constexpr std::uint32_t kDefaultScaleLimit = 1u << 20;

/// Exact rational number numerator / 2^scale.
///
/// Always canonical: either scale == 0 or the numerator is odd, so equal
/// values have equal representations.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)

  /// numerator / 2^scale, canonicalized. Throws std::invalid_argument for a
  /// negative scale.
  static Dyadic make(const mpz_class& numerator, std::int64_t scale);

  /// 2^exponent for any signed exponent.
  static Dyadic pow2(std::int64_t exponent);

  const mpz_class& numerator() const noexcept { return num_; }
  std::uint32_t scale() const noexcept { return scale_; }

  bool is_zero() const noexcept { return sgn(num_) == 0; }
  int sign() const noexcept { return sgn(num_); }

  /// Exact value times 2^exponent.
  Dyadic shifted(std::int64_t exponent) const;

  /// e such that *this / other == 2^e, if the ratio is a power of two.
  /// Both values must be nonzero.
  std::optional<std::int64_t> log2_ratio(const Dyadic& other) const;

  /// floor(log2(x)) for x > 0.
  std::int64_t floor_log2() const;

  /// Largest k with this value an integer multiple of 2^-k, i.e. the scale
  /// for non-integers and -v2(numerator) for nonzero integers.
  std::int64_t granularity() const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const;

  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) noexcept {
    return a.scale_ == b.scale_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  /// "p/2^q", or plain "p" when q == 0.
  std::string to_string() const;
  static Dyadic parse(std::string_view text);

 private:
  Dyadic(mpz_class num, std::uint32_t scale) : num_(std::move(num)), scale_(scale) {}
  void canonicalize(std::int64_t scale);

  mpz_class num_{0};
  std::uint32_t scale_ = 0;
};

}  // namespace thompson

#endif  // THOMPSON_DYADIC_HPP
