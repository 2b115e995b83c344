#include "symqcs/scalar.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

namespace symqcs {

namespace mp = boost::multiprecision;

Field Field::prime(std::uint32_t p) {
  if (p < 2 || !mp::miller_rabin_test(Int(p), 32))
    throw ConfigError("field characteristic must be prime, got " + std::to_string(p));
  return Field(p);
}

std::string Field::str() const {
  return is_rationals() ? "Q" : ("F" + std::to_string(p_));
}

Rat Field::reduce(const Rat& a) const {
  if (is_rationals()) return a;
  Int num = numerator(a), den = denominator(a);
  Int p(p_);
  Int dmod = den % p;
  if (dmod < 0) dmod += p;
  if (dmod == 0) throw ConfigError("denominator not invertible mod " + std::to_string(p_));
  Int dinv = mp::powm(dmod, Int(p_ - 2), p);
  Int r = ((num % p) * dinv) % p;
  if (r < 0) r += p;
  return Rat(r);
}

Rat Field::add(const Rat& a, const Rat& b) const { return reduce(a + b); }
Rat Field::sub(const Rat& a, const Rat& b) const { return reduce(a - b); }
Rat Field::mul(const Rat& a, const Rat& b) const { return reduce(a * b); }
Rat Field::neg(const Rat& a) const { return reduce(-a); }

Rat Field::inv(const Rat& a) const {
  if (a == 0) throw ArgError("division by zero");
  if (is_rationals()) return 1 / a;
  Int r = numerator(reduce(a));
  return Rat(mp::powm(r, Int(p_ - 2), Int(p_)));
}

std::string Scalar::str() const {
  if (f_.is_rationals()) {
    std::string s = numerator(v_).str();
    s += "/";
    s += denominator(v_).str();
    return s;
  }
  return numerator(v_).str() + " mod " + std::to_string(f_.characteristic());
}

Scalar Scalar::parse(const std::string& s) {
  auto mod = s.find(" mod ");
  if (mod != std::string::npos) {
    Int r(s.substr(0, mod));
    std::uint32_t p = static_cast<std::uint32_t>(std::stoul(s.substr(mod + 5)));
    return Scalar(Field::prime(p), Rat(r));
  }
  auto slash = s.find('/');
  if (slash == std::string::npos) return Scalar(Field::rationals(), Rat(Int(s)));
  Int num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den == 0) throw ArgError("zero denominator in scalar '" + s + "'");
  return Scalar(Field::rationals(), Rat(num, den));
}

bool characteristic_divides_factorial(const Field& f, int n) {
  if (f.is_rationals()) return false;
  return f.characteristic() <= static_cast<std::uint32_t>(n);
}

}  // namespace symqcs
