#include "thompson/dyadic.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

namespace thompson {

namespace {

std::atomic<std::uint32_t> g_scale_limit{kDefaultScaleLimit};

void check_scale(std::int64_t scale) {
  if (scale > static_cast<std::int64_t>(g_scale_limit.load(std::memory_order_relaxed))) {
    throw ScaleOverflow("dyadic scale " + std::to_string(scale) + " exceeds limit " +
                        std::to_string(g_scale_limit.load()));
  }
}

}  // namespace

std::uint32_t scale_limit() noexcept { return g_scale_limit.load(std::memory_order_relaxed); }

void set_scale_limit(std::uint32_t limit) noexcept {
  g_scale_limit.store(limit, std::memory_order_relaxed);
}

void Dyadic::canonicalize(std::int64_t scale) {
  if (sgn(num_) == 0) {
    scale_ = 0;
    return;
  }
  if (scale > 0) {
    const auto zeros = static_cast<std::int64_t>(mpz_scan1(num_.get_mpz_t(), 0));
    const std::int64_t drop = std::min(zeros, scale);
    if (drop > 0) {
      mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
      scale -= drop;
    }
  }
  check_scale(scale);
  scale_ = static_cast<std::uint32_t>(scale);
}

Dyadic Dyadic::make(const mpz_class& numerator, std::int64_t scale) {
  if (scale < 0) {
    throw std::invalid_argument("dyadic scale must be non-negative");
  }
  Dyadic d;
  d.num_ = numerator;
  d.canonicalize(scale);
  return d;
}

Dyadic Dyadic::pow2(std::int64_t exponent) {
  Dyadic d;
  d.num_ = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(d.num_.get_mpz_t(), d.num_.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return d;
  }
  d.canonicalize(-exponent);
  return d;
}

Dyadic Dyadic::shifted(std::int64_t exponent) const {
  if (is_zero() || exponent == 0) return *this;
  Dyadic d;
  d.num_ = num_;
  std::int64_t scale = static_cast<std::int64_t>(scale_) - exponent;
  if (scale < 0) {
    mpz_mul_2exp(d.num_.get_mpz_t(), d.num_.get_mpz_t(), static_cast<mp_bitcnt_t>(-scale));
    scale = 0;
  }
  d.canonicalize(scale);
  return d;
}

std::int64_t Dyadic::granularity() const {
  if (is_zero()) {
    throw std::domain_error("granularity of zero is unbounded");
  }
  if (scale_ > 0) return scale_;
  return -static_cast<std::int64_t>(mpz_scan1(num_.get_mpz_t(), 0));
}

std::optional<std::int64_t> Dyadic::log2_ratio(const Dyadic& other) const {
  if (is_zero() || other.is_zero()) {
    throw std::domain_error("log2_ratio of zero");
  }
  // value = odd * 2^(-granularity)
  const auto ga = granularity();
  const auto gb = other.granularity();
  mpz_class oa = num_;
  mpz_class ob = other.num_;
  if (scale_ == 0) mpz_tdiv_q_2exp(oa.get_mpz_t(), oa.get_mpz_t(), static_cast<mp_bitcnt_t>(-ga));
  if (other.scale_ == 0) mpz_tdiv_q_2exp(ob.get_mpz_t(), ob.get_mpz_t(), static_cast<mp_bitcnt_t>(-gb));
  if (oa != ob) return std::nullopt;
  return gb - ga;
}

std::int64_t Dyadic::floor_log2() const {
  if (sign() <= 0) {
    throw std::domain_error("floor_log2 needs a positive value");
  }
  const auto bits = static_cast<std::int64_t>(mpz_sizeinbase(num_.get_mpz_t(), 2));
  return bits - 1 - static_cast<std::int64_t>(scale_);
}

namespace {

// Both numerators brought to the larger scale.
std::pair<mpz_class, mpz_class> aligned(const Dyadic& a, const Dyadic& b, std::int64_t& scale) {
  scale = std::max(a.scale(), b.scale());
  mpz_class x = a.numerator();
  mpz_class y = b.numerator();
  if (a.scale() < scale) mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(), static_cast<mp_bitcnt_t>(scale - a.scale()));
  if (b.scale() < scale) mpz_mul_2exp(y.get_mpz_t(), y.get_mpz_t(), static_cast<mp_bitcnt_t>(scale - b.scale()));
  return {std::move(x), std::move(y)};
}

}  // namespace

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.scale_ == b.scale_) {
    Dyadic d;
    d.num_ = a.num_ + b.num_;
    d.canonicalize(a.scale_);
    return d;
  }
  std::int64_t scale = 0;
  auto [x, y] = aligned(a, b, scale);
  Dyadic d;
  d.num_ = x + y;
  d.canonicalize(scale);
  return d;
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  std::int64_t scale = 0;
  auto [x, y] = aligned(a, b, scale);
  Dyadic d;
  d.num_ = x - y;
  d.canonicalize(scale);
  return d;
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  Dyadic d;
  d.num_ = a.num_ * b.num_;
  d.canonicalize(static_cast<std::int64_t>(a.scale_) + b.scale_);
  return d;
}

Dyadic Dyadic::operator-() const {
  Dyadic d = *this;
  d.num_ = -d.num_;
  return d;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int c = 0;
  if (a.scale_ == b.scale_) {
    c = cmp(a.num_, b.num_);
  } else {
    std::int64_t scale = 0;
    auto [x, y] = aligned(a, b, scale);
    c = cmp(x, y);
  }
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Dyadic::to_string() const {
  if (scale_ == 0) return num_.get_str();
  return num_.get_str() + "/2^" + std::to_string(scale_);
}

Dyadic Dyadic::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed dyadic '" + std::string(text) + "'"); };
  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw fail();
    return make(mpz_class(std::string(text)), 0);
  }
  const auto num = text.substr(0, slash);
  const auto rest = text.substr(slash + 1);
  if (!is_int(num) || rest.size() < 3 || rest.substr(0, 2) != "2^") throw fail();
  const auto exp = rest.substr(2);
  if (!is_int(exp) || exp[0] == '-' || exp.size() > 9) throw fail();
  return make(mpz_class(std::string(num)), std::stoll(std::string(exp)));
}

}  // namespace thompson
