#pragma once

#include "skewlab/field.hpp"

#include <cstdint>
#include <vector>

namespace skewlab {

/// Dense univariate polynomial, lowest degree first, trailing zeros stripped.
class Poly {
public:
  explicit Poly(const Field &f) : field_(f) {}
  Poly(const Field &f, std::vector<Fel> coeffs);

  static Poly constant(const Field &f, const Fel &c);
  static Poly x(const Field &f);

  const Field &field() const { return field_; }
  const std::vector<Fel> &coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Fel coeff(int i) const;
  Fel leading() const;

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator*(const Poly &o) const;
  Poly operator*(const Fel &s) const;
  bool operator==(const Poly &o) const;
  bool operator!=(const Poly &o) const { return !(*this == o); }

  Poly monic() const;
  Poly derivative() const;
  Fel eval(const Fel &x) const;
  std::string to_string() const;

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static void divmod(const Poly &a, const Poly &b, Poly &q, Poly &r);
  Poly operator/(const Poly &b) const;
  Poly operator%(const Poly &b) const;
  bool divides(const Poly &f) const;

private:
  void strip();
  Field field_;
  std::vector<Fel> c_;
};

/// Monic gcd; gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// base^exp mod m.
Poly poly_pow_mod(const Poly &base, const mpz_class &exp, const Poly &m);

struct PolyFactor {
  Poly factor; // monic irreducible
  int multiplicity;
};

/// Complete factorization into monic irreducibles; the product of the
/// factors times the leading coefficient of f recovers f. Randomized
/// equal-degree splitting is seeded and retried deterministically.
std::vector<PolyFactor> poly_factor(const Poly &f, std::uint64_t seed = 0,
                                    int degree_ceiling = 64);

} // namespace skewlab
