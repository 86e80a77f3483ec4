#include "lapinv/mpnum/exact_real.hpp"

#include <algorithm>
#include <cctype>

#include "lapinv/error.hpp"

namespace lapinv::mp {

namespace {

mpz_class pow10(unsigned long n) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, n);
  return out;
}

[[noreturn]] void parse_fail(std::string_view text) {
  throw Error(ErrorKind::ParseError, "not a decimal number: '" + std::string(text) + "'");
}

// Terminating decimal expansion of q, or nullopt when the denominator has
// prime factors other than 2 and 5.
std::optional<std::string> terminating_decimal(const mpq_class& q) {
  mpz_class den = q.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  const unsigned long places = std::max(twos, fives);
  mpz_class scaled = q.get_num() * pow10(places) / q.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str();
  if (places > 0) {
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
  }
  return (negative ? "-" : "") + digits;
}

}  // namespace

ExactReal::ExactReal(mpq_class q) : rational_(std::move(q)) { rational_->canonicalize(); }

ExactReal::ExactReal(BigReal approx) : approx_(std::move(approx)) {
  if (!approx_->is_finite()) throw Error(ErrorKind::DomainError, "non-finite exponent");
}

ExactReal ExactReal::parse(std::string_view text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
  std::string mantissa;
  long fraction_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa += c;
      if (seen_point) ++fraction_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (mantissa.empty()) parse_fail(text);
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') parse_fail(text);
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
    if (i == text.size()) parse_fail(text);
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) parse_fail(text);
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 100000) parse_fail(text);
    }
    if (exp_negative) exponent = -exponent;
  }
  mpq_class q(mpz_class(mantissa, 10));
  const long shift = exponent - fraction_digits;
  if (shift >= 0) {
    q *= pow10(static_cast<unsigned long>(shift));
  } else {
    q /= pow10(static_cast<unsigned long>(-shift));
  }
  if (negative) q = -q;
  return ExactReal(std::move(q));
}

BigReal ExactReal::at(int digits) const {
  if (rational_) return BigReal::from_rational(*rational_, digits);
  return approx_->with_digits(digits);
}

double ExactReal::to_double() const { return rational_ ? rational_->get_d() : approx_->to_double(); }

bool ExactReal::is_integer() const { return rational_ ? rational_->get_den() == 1 : approx_->is_integer(); }

long ExactReal::nearest_integer() const {
  if (rational_) {
    mpq_class shifted = *rational_ + mpq_class(1, 2);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return fl.get_si();
  }
  return approx_->to_long_round();
}

int ExactReal::native_digits() const noexcept { return approx_ ? approx_->digits() : 0; }

int ExactReal::sign() const { return rational_ ? sgn(*rational_) : approx_->sign(); }

std::string ExactReal::key() const {
  if (rational_) return "q:" + rational_->get_str();
  return "r:" + approx_->serialize();
}

std::string ExactReal::to_string() const {
  if (rational_) {
    if (auto dec = terminating_decimal(*rational_)) return *dec;
    return rational_->get_str();
  }
  return approx_->to_string(std::min(approx_->digits(), 40));
}

ExactReal ExactReal::operator-() const {
  if (rational_) return ExactReal(mpq_class(-*rational_));
  return ExactReal(-*approx_);
}

namespace {

template <typename ExactOp, typename ApproxOp>
ExactReal combine(const ExactReal& a, const ExactReal& b, ExactOp exact_op, ApproxOp approx_op) {
  if (a.is_exact() && b.is_exact()) return ExactReal(mpq_class(exact_op(a.rational(), b.rational())));
  // Mixed or approximate operands: work at the precision of the inexact one(s).
  int digits = kMinDigits;
  for (const ExactReal* x : {&a, &b}) {
    digits = std::max(digits, x->native_digits());
  }
  return ExactReal(approx_op(a.at(digits), b.at(digits)));
}

}  // namespace

ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  return combine(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x + y); },
                 [](const BigReal& x, const BigReal& y) { return x + y; });
}

ExactReal operator-(const ExactReal& a, const ExactReal& b) {
  return combine(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x - y); },
                 [](const BigReal& x, const BigReal& y) { return x - y; });
}

ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  return combine(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x * y); },
                 [](const BigReal& x, const BigReal& y) { return x * y; });
}

ExactReal operator/(const ExactReal& a, const ExactReal& b) {
  if (b.sign() == 0) throw Error(ErrorKind::DomainError, "division by zero");
  return combine(a, b, [](const mpq_class& x, const mpq_class& y) { return mpq_class(x / y); },
                 [](const BigReal& x, const BigReal& y) { return x / y; });
}

bool operator==(const ExactReal& a, const ExactReal& b) { return a.key() == b.key(); }

}  // namespace lapinv::mp
