#include "gcl/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gcl {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw std::invalid_argument("malformed rational: " + text);
    Rational r;
    if (r.set_str(text, 10) != 0)
      throw std::invalid_argument("malformed rational: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!is_integer_token(whole) || frac.empty() || !is_integer_token(frac) ||
        frac[0] == '-' || frac[0] == '+')
      throw std::invalid_argument("malformed rational: " + text);
    bool negative = whole[0] == '-';
    BigInt w(whole);
    BigInt f(frac);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    BigInt num = rational_abs(Rational(w)).get_num() * den + f;
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  if (!is_integer_token(text)) throw std::invalid_argument("malformed rational: " + text);
  return Rational(BigInt(text));
}

std::string rational_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0 && exponent < 0) throw std::invalid_argument("0 to a negative power");
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

BigInt bigint_pow(unsigned long base, unsigned long exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

BigInt rational_floor(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

BigInt rational_ceil(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

bool is_power_of_three(const Rational& r, long& t) {
  if (r <= 0) return false;
  auto power_index = [](const BigInt& z, long& out) {
    if (z == 1) {
      out = 0;
      return true;
    }
    BigInt cur = z;
    long e = 0;
    while (mpz_divisible_ui_p(cur.get_mpz_t(), 3)) {
      mpz_divexact_ui(cur.get_mpz_t(), cur.get_mpz_t(), 3);
      ++e;
    }
    out = e;
    return cur == 1;
  };
  long en = 0, ed = 0;
  if (!power_index(r.get_num(), en) || !power_index(r.get_den(), ed)) return false;
  // Canonical form: at most one of num/den carries a factor of 3.
  t = en - ed;
  return true;
}

std::vector<Rational> parse_rational_list(const std::string& text, char sep) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(sep, start);
    if (end == std::string::npos) end = text.size();
    out.push_back(parse_rational(text.substr(start, end - start)));
    start = end + 1;
    if (end == text.size()) break;
  }
  return out;
}

}  // namespace gcl
