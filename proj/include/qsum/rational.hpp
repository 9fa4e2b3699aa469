#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace qsum {

using Int = mpz_class;
using Rat = mpq_class;

/// r^k for any integer k; r must be nonzero when k < 0.
Rat pow(const Rat& r, long k);

/// Parses "3", "-4/9", "1.25".
Rat parse_rat(const std::string& text);

std::string to_string(const Rat& r);

/// The constant q of the q-shift operators. Never 0, 1 or -1, which are the
/// only rational roots of unity.
class QParam {
 public:
  explicit QParam(Rat value);

  const Rat& value() const { return value_; }
  Rat pow(long k) const;

 private:
  Rat value_;
};

/// The integer m with q^m == r, if any. Throws std::domain_error when r == 0.
std::optional<long> q_log(const Rat& r, const QParam& q);

}  // namespace qsum
