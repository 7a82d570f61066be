#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace taugp {

// Exact coefficient field: the rationals, or a prime field F_p.
// Scalars are carried as mpq_class everywhere; over F_p they are kept
// reduced to integer representatives in [0, p).
struct Field {
  enum class Kind { Rationals, Prime };

  Kind kind = Kind::Rationals;
  long p = 0;

  static Field rationals() { return Field{Kind::Rationals, 0}; }
  static Field prime(long p);

  bool operator==(const Field&) const = default;

  bool is_prime_field() const { return kind == Kind::Prime; }

  mpq_class reduce(const mpq_class& x) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return reduce(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return reduce(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return reduce(a * b); }
  mpq_class neg(const mpq_class& a) const { return reduce(-a); }
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

  std::string describe() const;
};

}  // namespace taugp
