#ifndef HECKE_ORACLE_HPP
#define HECKE_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hecke/fq.hpp"
#include "hecke/presentation.hpp"
#include "hecke/residue.hpp"
#include "hecke/weyl.hpp"

namespace hecke::oracle {

/*
 * Exact Laurent polynomial over F_q: t^v * (c_0 + c_1 t + ...), trimmed so
 * that c_0 != 0 unless the value is zero.  Elements of F_q((t)) appearing
 * in the oracle are all of this shape; series arise only through division,
 * which truncates at an explicit absolute degree.
 */
class LocalScalar {
public:
  LocalScalar() = default;
  static LocalScalar constant(FqElem x);
  static LocalScalar monomial(FqElem x, int v);
  static LocalScalar from_coeffs(int v, std::vector<FqElem> c);

  bool is_zero() const { return c_.empty(); }
  int valuation() const;            // throws on zero
  int top_degree() const;           // degree of the last stored coefficient
  FqElem coeff(int deg) const;
  FqElem leading() const { return c_.empty() ? 0 : c_[0]; }

  LocalScalar add(const LocalScalar& o, const GaloisField& F) const;
  LocalScalar sub(const LocalScalar& o, const GaloisField& F) const;
  LocalScalar mul(const LocalScalar& o, const GaloisField& F) const;
  LocalScalar neg(const GaloisField& F) const;
  LocalScalar shifted(int dv) const;      // multiply by t^dv
  LocalScalar truncated(int deg) const;   // drop coefficients of degree >= deg

  // this / o, correct modulo t^cap (absolute degree).
  LocalScalar div(const LocalScalar& o, const GaloisField& F, int cap) const;

  bool operator==(const LocalScalar&) const = default;

  void append_bytes(std::string& out) const;

private:
  int val_ = 0;
  std::vector<FqElem> c_;
  void trim();
};

class LocalMatrix {
public:
  LocalMatrix() = default;
  explicit LocalMatrix(int m) : m_(m), a_(m * m) {}

  static LocalMatrix identity(int m);
  static LocalMatrix from_residue(const ResidueMatrix& k);
  static LocalMatrix uniformizer_power(int m, int i);  // t^i * I

  int degree() const { return m_; }
  const LocalScalar& at(int i, int j) const { return a_[(i - 1) * m_ + (j - 1)]; }
  void set(int i, int j, LocalScalar v) { a_[(i - 1) * m_ + (j - 1)] = std::move(v); }

  LocalMatrix mul(const LocalMatrix& o, const GaloisField& F) const;
  LocalScalar det(const GaloisField& F) const;
  // Inverse correct modulo t^cap entrywise.
  LocalMatrix inverse(const GaloisField& F, int cap) const;

  bool operator==(const LocalMatrix&) const = default;

private:
  int m_ = 0;
  std::vector<LocalScalar> a_;
};

// Canonical representative of a left coset z K^1, serialized.
struct CosetLabel {
  std::string bytes;
  bool operator==(const CosetLabel&) const = default;
};

struct CosetLabelHash {
  std::size_t operator()(const CosetLabel& l) const {
    return std::hash<std::string>()(l.bytes);
  }
};

// One double coset in the support of a convolution product.
struct StructureTerm {
  LocalMatrix rep;              // a representative of the double coset
  long coefficient = 0;         // structure constant of f_x f_y there
  long left_coset_count = 0;    // number of left K^1-cosets it contains
};

struct ConvolutionResult {
  std::vector<StructureTerm> terms;
  long left_cosets_x = 0;
  long left_cosets_y = 0;
};

/*
 * Ground-truth convolution over G = GL_m(F_q((t))) by literal enumeration
 * of K^1 modulo the depth-N congruence subgroup.  Feasibility cap
 * m <= 2, q <= 3, N <= 4 (enforced); the split case only, so the
 * uniformizer twist is trivial.
 */
class OracleContext {
public:
  OracleContext(int m, unsigned p, unsigned f);

  int m() const { return m_; }
  const GaloisField& field() const { return F_; }

  // Elementary divisor valuations of x (ascending).
  std::vector<int> smith_valuations(const LocalMatrix& x) const;

  // Smallest ambient precision for convolving x and y: spread of the
  // elementary divisors of x, y and xy, plus 2 (at least 2).
  int precision_for(const LocalMatrix& x, const LocalMatrix& y) const;

  CosetLabel coset_label(const LocalMatrix& z, int N) const;

  // All left-coset labels of K^1 x K^1, each with one representative.
  std::vector<std::pair<CosetLabel, LocalMatrix>> double_coset_cosets(
      const LocalMatrix& x, int N) const;

  ConvolutionResult convolve(const LocalMatrix& x, const LocalMatrix& y, int N) const;

  bool same_double_coset(const LocalMatrix& a, const LocalMatrix& b, int N) const;

  // Constructive Bruhat-Iwahori decomposition of x into a normal word of
  // the presentation engine (engine parameters must match, sigma = id).
  NormalWord iwahori_decompose(const LocalMatrix& x, const HeckeAlgebra& engine) const;

  // Split-case matrix realization of a basis word.
  LocalMatrix realize(const NormalWord& w) const;

  void clear_cache() const;

private:
  int bytes_cap(const LocalMatrix& z, int N) const;
  void enumerate_k1(const LocalMatrix& x, int N,
                    std::vector<std::pair<CosetLabel, LocalMatrix>>& out) const;

  int m_;
  GaloisField F_;
  // dcc memo keyed by (left label, N); values index into orbit storage.
  mutable std::unordered_map<std::string, std::size_t> dc_index_;
  mutable std::vector<std::vector<std::pair<CosetLabel, LocalMatrix>>> dc_orbits_;
};

}  // namespace hecke::oracle

#endif
