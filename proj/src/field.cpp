#include "skewlab/field.hpp"

namespace skewlab {

bool is_prime(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Field Field::prime(long p) {
  if (!is_prime(p))
    throw FieldError("F_p requires a prime p, got " + std::to_string(p));
  return Field(Kind::Prime, p);
}

Fel Field::reduce(const Fel &a) const {
  if (kind_ == Kind::Rationals) {
    Fel r = a;
    r.canonicalize();
    return r;
  }
  // a is num/den with den coprime to p in valid inputs
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class pz(p_);
  num %= pz;
  if (num < 0)
    num += pz;
  if (den == 1)
    return Fel(num);
  den %= pz;
  if (den < 0)
    den += pz;
  if (den == 0)
    throw FieldError("denominator divisible by p in F_" + std::to_string(p_));
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw FieldError("non-invertible denominator in F_" + std::to_string(p_));
  mpz_class r = (num * dinv) % pz;
  if (r < 0)
    r += pz;
  return Fel(r);
}

Fel Field::inv(const Fel &a) const {
  if (is_zero(a))
    throw FieldError("division by zero in " + describe());
  if (kind_ == Kind::Rationals) {
    Fel r = 1 / a;
    r.canonicalize();
    return r;
  }
  mpz_class pz(p_), ainv;
  mpz_class num = reduce(a).get_num();
  if (mpz_invert(ainv.get_mpz_t(), num.get_mpz_t(), pz.get_mpz_t()) == 0)
    throw FieldError("division by zero in " + describe());
  return Fel(ainv);
}

Fel Field::from_string(const std::string &s) const {
  Fel v;
  if (v.set_str(s, 10) != 0)
    throw FieldError("cannot parse field element '" + s + "'");
  v.canonicalize();
  return reduce(v);
}

std::string Field::to_string(const Fel &a) const { return a.get_str(); }

std::string Field::describe() const {
  return kind_ == Kind::Rationals ? "Q" : "F_" + std::to_string(p_);
}

} // namespace skewlab
