#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace skewlab {

/// Element of an exact field. Rationals are stored in lowest terms with
/// positive denominator; prime-field residues as integers in [0, p).
using Fel = mpq_class;

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The coefficient field: Q or F_p with p prime.
class Field {
public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field prime(long p);

  Kind kind() const { return kind_; }
  long p() const { return p_; }
  long characteristic() const { return kind_ == Kind::Prime ? p_ : 0; }
  bool is_finite() const { return kind_ == Kind::Prime; }

  bool operator==(const Field &o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field &o) const { return !(*this == o); }

  Fel zero() const { return Fel(0); }
  Fel one() const { return Fel(1); }

  Fel add(const Fel &a, const Fel &b) const { return reduce(a + b); }
  Fel sub(const Fel &a, const Fel &b) const { return reduce(a - b); }
  Fel mul(const Fel &a, const Fel &b) const { return reduce(a * b); }
  Fel neg(const Fel &a) const { return reduce(-a); }
  Fel inv(const Fel &a) const;
  Fel div(const Fel &a, const Fel &b) const { return mul(a, inv(b)); }

  bool is_zero(const Fel &a) const { return sgn(a) == 0; }
  bool is_one(const Fel &a) const { return a == 1; }

  /// Canonical representative: identity on Q, residue in [0, p) on F_p.
  Fel reduce(const Fel &a) const;

  Fel from_long(long n) const { return reduce(Fel(n)); }
  Fel from_mpz(const mpz_class &n) const { return reduce(Fel(n)); }
  /// Parses "3", "-7/2" (Q) or an integer literal (F_p).
  Fel from_string(const std::string &s) const;
  std::string to_string(const Fel &a) const;

  std::string describe() const;

private:
  Field(Kind k, long p) : kind_(k), p_(p) {}
  Kind kind_;
  long p_;
};

bool is_prime(long n);

} // namespace skewlab
