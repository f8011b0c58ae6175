#ifndef HECKE_FQ_HPP
#define HECKE_FQ_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hecke {

// Element of F_q, stored as an index in [0, q).  The base-p digits of the
// index are the coefficients of the polynomial representation: index
// sum_k c_k p^k stands for sum_k c_k X^k in F_p[X]/(irreducible).
using FqElem = unsigned;

/*
 * Arithmetic context for F_q, q = p^f.  All operations are table-driven;
 * the tables are built once from the lexicographically smallest monic
 * irreducible polynomial of degree f over F_p, so the representation is
 * canonical for a given (p, f).
 *
 * frobenius() is x -> x^p.  The twist automorphism induced by conjugation
 * by a uniformizer is sigma(x) = x^(p^s) for a configured exponent s; it
 * is applied via sigma_pow().
 */
class GaloisField {
public:
  GaloisField(unsigned p, unsigned f);

  unsigned p() const { return p_; }
  unsigned f() const { return f_; }
  unsigned q() const { return q_; }

  FqElem zero() const { return 0; }
  FqElem one() const { return 1; }

  FqElem add(FqElem a, FqElem b) const { return add_[a * q_ + b]; }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem mul(FqElem a, FqElem b) const { return mul_[a * q_ + b]; }
  FqElem neg(FqElem a) const { return neg_[a]; }
  FqElem inv(FqElem a) const {
    if (a == 0) throw std::domain_error("GaloisField: inversion of zero");
    return inv_[a];
  }
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

  FqElem frobenius(FqElem a) const { return frob_[a]; }

  // x -> x^(p^k); k may be negative (Frobenius has order f).
  FqElem frob_pow(FqElem a, long k) const;

  FqElem pow(FqElem a, long e) const;

  // All nonzero elements, ascending by index.
  std::vector<FqElem> units() const;

  // The smallest generator of the cyclic group F_q^x.
  FqElem generator() const { return gen_; }

  bool operator==(const GaloisField& o) const {
    return p_ == o.p_ && f_ == o.f_;
  }

private:
  unsigned p_, f_, q_;
  std::vector<FqElem> add_, mul_, neg_, inv_, frob_;
  FqElem gen_;
};

}  // namespace hecke

#endif
