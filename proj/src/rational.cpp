#include "liegiambelli/rational.hpp"

#include "liegiambelli/errors.hpp"

#include <cctype>
#include <limits>

namespace liegiambelli {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  bool ok = slash == std::string_view::npos
                ? digits(body)
                : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
  if (!ok) throw Error(ErrorCode::ParseError, "not a rational number: '" + std::string(text) + "'");
  std::string canonical(text);
  if (canonical.front() == '+') canonical.erase(0, 1);
  Rational q(canonical, 10);
  if (q.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + canonical + "'");
  q.canonicalize();
  return q;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::TooLarge, "integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace liegiambelli
