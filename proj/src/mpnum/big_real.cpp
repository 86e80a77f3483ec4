#include "lapinv/mpnum/big_real.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "lapinv/error.hpp"

namespace lapinv::mp {

namespace {

constexpr double kLog2Of10 = 3.321928094887362347870319429489390175864831393;
constexpr mpfr_prec_t kGuardBits = 16;
constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

void check_digits(int digits) {
  if (digits < kMinDigits) {
    throw Error(ErrorKind::InvalidArgument,
                "precision must be at least " + std::to_string(kMinDigits) + " digits, got " +
                    std::to_string(digits));
  }
}

// Per-precision cache of mathematical constants. MPFR keeps its own
// thread-local caches; this one makes the returned BigReal copies cheap.
class ConstantCache {
 public:
  template <typename Fill>
  BigReal get(int digits, Fill fill) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = values_.find(digits); it != values_.end()) return it->second;
    }
    BigReal value(digits);
    fill(value.raw());
    std::unique_lock lock(mutex_);
    return values_.emplace(digits, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, BigReal> values_;
};

ConstantCache& pi_cache() {
  static ConstantCache cache;
  return cache;
}
ConstantCache& euler_cache() {
  static ConstantCache cache;
  return cache;
}
ConstantCache& ln2_cache() {
  static ConstantCache cache;
  return cache;
}

std::string strip_zeros(std::string digits) {
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  return digits;
}

}  // namespace

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + kGuardBits;
}

BigReal::BigReal(int digits) : digits_(digits) {
  check_digits(digits);
  mpfr_init2(value_, bits_for_digits(digits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, int digits) : BigReal(digits) { mpfr_set_si(value_, value, kRnd); }

BigReal::BigReal(NoInit, int digits, mpfr_prec_t bits) : digits_(digits) { mpfr_init2(value_, bits); }

BigReal BigReal::from_string(std::string_view text, int digits) {
  const std::string buffer(text);
  // MPFR accepts forms we do not want here (hex, "@" exponents, inf/nan).
  const bool charset_ok = !buffer.empty() && std::all_of(buffer.begin(), buffer.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' ||
           c == 'e' || c == 'E';
  });
  BigReal out(digits);
  char* end = nullptr;
  if (charset_ok) mpfr_strtofr(out.value_, buffer.c_str(), &end, 10, kRnd);
  if (!charset_ok || end == buffer.c_str() || *end != '\0') {
    throw Error(ErrorKind::ParseError, "not a decimal number: '" + buffer + "'");
  }
  return out;
}

BigReal BigReal::from_rational(const mpq_class& q, int digits) {
  BigReal out(digits);
  mpfr_set_q(out.value_, q.get_mpq_t(), kRnd);
  return out;
}

BigReal BigReal::from_double(double x, int digits) {
  BigReal out(digits);
  mpfr_set_d(out.value_, x, kRnd);
  return out;
}

BigReal::BigReal(const BigReal& other) : BigReal(NoInit{}, other.digits_, other.bits()) {
  mpfr_set(value_, other.value_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept : BigReal(NoInit{}, other.digits_, MPFR_PREC_MIN) {
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, kRnd);
    digits_ = other.digits_;
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::with_digits(int digits) const {
  BigReal out(digits);
  mpfr_set(out.value_, value_, kRnd);
  return out;
}

void BigReal::widen_to(const BigReal& other) {
  if (other.digits_ > digits_) {
    mpfr_prec_round(value_, other.bits(), kRnd);
    digits_ = other.digits_;
  }
}

double BigReal::to_double() const { return mpfr_get_d(value_, kRnd); }

long BigReal::to_long_round() const { return mpfr_get_si(value_, MPFR_RNDN); }

std::string BigReal::to_string(int significant) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  if (is_zero()) return "0";
  significant = std::max(significant, 1);
  mpfr_exp_t exp10 = 0;
  char* raw_digits = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(significant), value_, kRnd);
  std::string body(raw_digits);
  mpfr_free_str(raw_digits);
  std::string sign_text;
  if (!body.empty() && body.front() == '-') {
    sign_text = "-";
    body.erase(body.begin());
  }
  body = strip_zeros(body);
  const long e = static_cast<long>(exp10) - 1;  // value = d.ddd * 10^e
  std::string out = sign_text;
  if (e >= -6 && e < 21) {
    if (e < 0) {
      out += "0.";
      out.append(static_cast<size_t>(-e - 1), '0');
      out += body;
    } else if (static_cast<long>(body.size()) <= e + 1) {
      out += body;
      out.append(static_cast<size_t>(e + 1 - static_cast<long>(body.size())), '0');
    } else {
      out += body.substr(0, static_cast<size_t>(e + 1));
      out += '.';
      out += body.substr(static_cast<size_t>(e + 1));
    }
    return out;
  }
  out += body.substr(0, 1);
  if (body.size() > 1) {
    out += '.';
    out += body.substr(1);
  }
  out += 'e';
  out += std::to_string(e);
  return out;
}

std::string BigReal::serialize() const {
  if (!is_finite()) throw Error(ErrorKind::DomainError, "cannot serialize a non-finite value");
  std::string out = std::to_string(digits_) + ":";
  if (is_zero()) return out + "0e0";
  const size_t n = mpfr_get_str_ndigits(10, bits());
  mpfr_exp_t exp10 = 0;
  char* raw_digits = mpfr_get_str(nullptr, &exp10, 10, n, value_, kRnd);
  std::string body(raw_digits);
  mpfr_free_str(raw_digits);
  if (body.front() == '-') {
    out += '-';
    body.erase(body.begin());
  }
  out += body.substr(0, 1);
  if (body.size() > 1) {
    out += '.';
    out += body.substr(1);
  }
  out += 'e';
  out += std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

BigReal BigReal::deserialize(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw Error(ErrorKind::ParseError, "missing precision tag in '" + std::string(text) + "'");
  }
  int digits = 0;
  for (char c : text.substr(0, colon)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorKind::ParseError, "bad precision tag in '" + std::string(text) + "'");
    }
    digits = digits * 10 + (c - '0');
  }
  return from_string(text.substr(colon + 1), digits);
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen_to(rhs);
  mpfr_add(value_, value_, rhs.value_, kRnd);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen_to(rhs);
  mpfr_sub(value_, value_, rhs.value_, kRnd);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen_to(rhs);
  mpfr_mul(value_, value_, rhs.value_, kRnd);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen_to(rhs);
  mpfr_div(value_, value_, rhs.value_, kRnd);
  return *this;
}
BigReal& BigReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, kRnd);
  return *this;
}
BigReal& BigReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, kRnd);
  return *this;
}
BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRnd);
  return *this;
}
BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRnd);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.value_, out.value_, kRnd);
  return out;
}

BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
BigReal operator+(BigReal lhs, long rhs) { return lhs += rhs; }
BigReal operator-(BigReal lhs, long rhs) { return lhs -= rhs; }
BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }
BigReal operator+(long lhs, BigReal rhs) { return rhs += lhs; }
BigReal operator-(long lhs, const BigReal& rhs) {
  BigReal out(rhs.digits());
  mpfr_si_sub(out.raw(), lhs, rhs.raw(), kRnd);
  return out;
}
BigReal operator*(long lhs, BigReal rhs) { return rhs *= lhs; }
BigReal operator/(long lhs, const BigReal& rhs) {
  BigReal out(rhs.digits());
  mpfr_si_div(out.raw(), lhs, rhs.raw(), kRnd);
  return out;
}

bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.raw(), b.raw())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.raw(), b.raw());
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.raw(), b) == 0; }

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.raw())) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.raw(), b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

namespace {

template <typename Fn>
BigReal unary(const BigReal& x, Fn fn) {
  BigReal out(x.digits());
  fn(out.raw(), x.raw(), kRnd);
  return out;
}

}  // namespace

BigReal abs(const BigReal& x) { return unary(x, mpfr_abs); }

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw Error(ErrorKind::DomainError, "sqrt of a negative real");
  return unary(x, mpfr_sqrt);
}

BigReal exp(const BigReal& x) { return unary(x, mpfr_exp); }

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw Error(ErrorKind::DomainError, "log of a non-positive real");
  return unary(x, mpfr_log);
}

BigReal log10(const BigReal& x) {
  if (x.sign() <= 0) throw Error(ErrorKind::DomainError, "log10 of a non-positive real");
  return unary(x, mpfr_log10);
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal out(std::max(base.digits(), exponent.digits()));
  mpfr_pow(out.raw(), base.raw(), exponent.raw(), kRnd);
  if (!out.is_finite() && base.is_finite() && exponent.is_finite()) {
    throw Error(ErrorKind::DomainError, "real power is undefined for these arguments");
  }
  return out;
}

BigReal pow(const BigReal& base, long exponent) {
  BigReal out(base.digits());
  mpfr_pow_si(out.raw(), base.raw(), exponent, kRnd);
  return out;
}

BigReal sin(const BigReal& x) { return unary(x, mpfr_sin); }
BigReal cos(const BigReal& x) { return unary(x, mpfr_cos); }
BigReal sinh(const BigReal& x) { return unary(x, mpfr_sinh); }
BigReal cosh(const BigReal& x) { return unary(x, mpfr_cosh); }

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal out(std::max(x.digits(), y.digits()));
  mpfr_atan2(out.raw(), y.raw(), x.raw(), kRnd);
  return out;
}

BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal out(std::max(x.digits(), y.digits()));
  mpfr_hypot(out.raw(), x.raw(), y.raw(), kRnd);
  return out;
}

BigReal floor(const BigReal& x) {
  BigReal out(x.digits());
  mpfr_floor(out.raw(), x.raw());
  return out;
}

BigReal round(const BigReal& x) {
  BigReal out(x.digits());
  mpfr_round(out.raw(), x.raw());
  return out;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }
BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }

BigReal sin_pi(const BigReal& x) {
  const BigReal n = round(x);
  const BigReal r = x - n;  // exact: |r| <= 1/2 and x, n share the binary grid
  BigReal out = sin(pi(x.digits()) * r);
  mpz_class nz;
  mpfr_get_z(nz.get_mpz_t(), n.raw(), MPFR_RNDN);
  if (mpz_odd_p(nz.get_mpz_t())) out = -out;
  return out;
}

BigReal ten_to_minus(int n, int digits) {
  BigReal out(10, digits);
  mpfr_pow_si(out.raw(), out.raw(), -static_cast<long>(n), kRnd);
  return out;
}

BigReal pi(int digits) {
  return pi_cache().get(digits, [](mpfr_ptr v) { mpfr_const_pi(v, kRnd); });
}

BigReal euler_gamma(int digits) {
  return euler_cache().get(digits, [](mpfr_ptr v) { mpfr_const_euler(v, kRnd); });
}

BigReal ln2(int digits) {
  return ln2_cache().get(digits, [](mpfr_ptr v) { mpfr_const_log2(v, kRnd); });
}

}  // namespace lapinv::mp
