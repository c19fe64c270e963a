#include "eulerleg/polynomial.hpp"

namespace eulerleg {

std::string format_polynomial(const RationalPolynomial& p) {
  if (p.is_zero()) return "0";
  mpz_class common = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get().get_den_mpz_t());

  std::string body;
  int terms = 0;
  for (long i = p.degree(); i >= 0; --i) {
    const mpq_class scaled = p.coefficients()[static_cast<std::size_t>(i)].get() * common;
    const mpz_class c = scaled.get_num();  // integral by construction
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (terms == 0)
      body += negative ? "-" : "";
    else
      body += negative ? " - " : " + ";
    if (i == 0 || magnitude != 1) body += magnitude.get_str();
    if (i >= 1) body += p.variable();
    if (i >= 2) body += "^" + std::to_string(i);
    ++terms;
  }
  if (common == 1) return body;
  if (terms == 1 && body.front() != '-') return body + "/" + common.get_str();
  return "(" + body + ")/" + common.get_str();
}

}  // namespace eulerleg
