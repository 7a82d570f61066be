#include "taugp/field.hpp"

namespace taugp {

Field Field::prime(long p) {
  if (p < 2) throw std::invalid_argument("field characteristic must be >= 2");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
  return Field{Kind::Prime, p};
}

mpq_class Field::reduce(const mpq_class& x) const {
  if (kind == Kind::Rationals) {
    mpq_class r = x;
    r.canonicalize();
    return r;
  }
  // Representative in [0, p): numerator * denominator^{-1} mod p.
  mpz_class num = x.get_num(), den = x.get_den();
  mpz_class pm(p), dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t()) == 0)
    throw std::domain_error("denominator not invertible mod p");
  mpz_class r = (num % pm) * dinv % pm;
  if (r < 0) r += pm;
  return mpq_class(r);
}

mpq_class Field::inv(const mpq_class& a) const {
  mpq_class r = reduce(a);
  if (r == 0) throw std::domain_error("division by zero in field");
  if (kind == Kind::Rationals) return mpq_class(1) / r;
  mpz_class pm(p), ai;
  mpz_invert(ai.get_mpz_t(), r.get_num().get_mpz_t(), pm.get_mpz_t());
  if (ai < 0) ai += pm;
  return mpq_class(ai);
}

std::string Field::describe() const {
  return kind == Kind::Rationals ? "Q" : "F" + std::to_string(p);
}

}  // namespace taugp
