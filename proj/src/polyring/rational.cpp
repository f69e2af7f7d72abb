#include "defring/rational.hpp"

#include <stdexcept>

namespace defring {

Rational rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_display(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("empty rational");
  s = s.substr(b, e - b + 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

long residue_mod(const Rational& q, long m) {
  mpz_class mod(m);
  mpz_class den = q.get_den();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::domain_error("residue_mod: denominator not invertible");
  mpz_class r = (q.get_num() * inv) % mod;
  if (r < 0) r += mod;
  return r.get_si();
}

}  // namespace defring
