#include "qsum/rational.hpp"

#include <stdexcept>

namespace qsum {

Rat pow(const Rat& r, long k) {
  if (k < 0) {
    if (r == 0) throw std::domain_error("zero raised to a negative power");
    Rat inv = 1 / r;
    return pow(inv, -k);
  }
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(k));
  Rat out(num, den);
  out.canonicalize();
  return out;
}

Rat parse_rat(const std::string& text) {
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (text.find('.', dot + 1) != std::string::npos) throw std::invalid_argument("bad number: " + text);
    std::size_t frac = text.size() - dot - 1;
    Rat out;
    if (out.set_str(digits.empty() ? "0" : digits, 10) != 0) throw std::invalid_argument("bad number: " + text);
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac);
    out /= scale;
    out.canonicalize();
    return out;
  }
  Rat out;
  if (text.empty() || out.set_str(text, 10) != 0) throw std::invalid_argument("bad number: " + text);
  if (out.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  out.canonicalize();
  return out;
}

std::string to_string(const Rat& r) { return r.get_str(); }

QParam::QParam(Rat value) : value_(std::move(value)) {
  value_.canonicalize();
  if (value_ == 0 || value_ == 1 || value_ == -1)
    throw std::invalid_argument("q must be a rational other than 0, 1, -1");
}

Rat QParam::pow(long k) const { return qsum::pow(value_, k); }

std::optional<long> q_log(const Rat& r, const QParam& q) {
  if (r == 0) throw std::domain_error("q_log of zero");
  // Work with |base| > 1 so the powers grow strictly in absolute value.
  Rat base = q.value();
  long dir = 1;
  if (abs(base) < 1) {
    base = 1 / base;
    dir = -1;
  }
  Rat target = r;
  long sign = 1;
  if (abs(target) < 1) {
    target = 1 / target;
    sign = -1;
  }
  Rat acc = 1;
  long k = 0;
  while (abs(acc) < abs(target)) {
    acc *= base;
    ++k;
  }
  if (acc != target) return std::nullopt;
  return dir * sign * k;
}

}  // namespace qsum
