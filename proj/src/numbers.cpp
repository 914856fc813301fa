#include "matroidal/numbers.hpp"

#include <stdexcept>

namespace matroidal {

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  try {
    return Int(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed integer literal: '" + s + "'");
  }
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  try {
    r = Rat(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

Int binomial(const Int& n, long k) {
  if (k < 0 || n < 0) return Int(0);
  if (n < k) return Int(0);
  Int out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace matroidal
