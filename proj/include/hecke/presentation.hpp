#ifndef HECKE_PRESENTATION_HPP
#define HECKE_PRESENTATION_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/fq.hpp"
#include "hecke/residue.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

/*
 * Canonical label of one K^1-double coset: the unique tuple
 *   u1 * t * tau0^i * w1 * tau * w2 * u2
 * with u1 in w1 U^- w1^{-1} cap U, u2 in w2^{-1} U w2 cap U, tau in the
 * monoid Delta and w2 minimal in W_{P(tau)} w2.  Words compare
 * lexicographically on (i, tau exponents, w1, w2, t, u1, u2).
 */
struct NormalWord {
  ResidueUnipotent u1;
  TorusElem t;
  int tau0 = 0;
  Permutation w1;
  TauExponent tau{1};
  Permutation w2;
  ResidueUnipotent u2;

  bool operator==(const NormalWord&) const = default;
  bool operator<(const NormalWord& o) const;
  bool is_trivial() const;
};

// One factor of the generating set Omega, with K-elements pre-split into
// unipotent and torus parts by the residue Bruhat decomposition.
struct GeneratorToken {
  enum class Kind { Unipotent, Torus, Tau0, Simple, TauAlpha };
  Kind kind;
  ResidueUnipotent u;  // Kind::Unipotent; element of U(F_q)
  TorusElem t;         // Kind::Torus
  int eps = 0;         // Kind::Tau0; +1 or -1
  int alpha = 0;       // Kind::Simple / Kind::TauAlpha; simple index

  static GeneratorToken unipotent(ResidueUnipotent u);
  static GeneratorToken torus(TorusElem t);
  static GeneratorToken tau0(int eps);
  static GeneratorToken simple(int alpha);
  static GeneratorToken tau_alpha(int alpha);
};

// Finite integer combination of basis words, optionally with coefficients
// reduced modulo ell.
class AlgebraElement {
public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::optional<unsigned long> modulus)
      : modulus_(modulus) {}

  const std::map<NormalWord, mpz_class>& terms() const { return terms_; }
  std::optional<unsigned long> modulus() const { return modulus_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coeff(const NormalWord& w) const;

  void add_term(const NormalWord& w, const mpz_class& c);
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement scaled(const mpz_class& c) const;
  AlgebraElement reduced_mod(unsigned long ell) const;

  bool operator==(const AlgebraElement& o) const;

private:
  std::map<NormalWord, mpz_class> terms_;
  std::optional<unsigned long> modulus_;
};

// Parameters and instance data for relation_check.
struct RelationInstance {
  ResidueMatrix k1, k2;            // relation 1
  std::optional<GeneratorToken> omega;  // relation 2
  TorusElem t;                     // relation 3
  int alpha = 0;                   // relations 3..9
  int alpha2 = 0;                  // relations 7, 8
  Root root{0, 0};                 // relations 4..6: alpha' of U_{alpha'}
  FqElem x = 0;                    // relations 4..6: the entry
  Permutation w;                   // relation 9
};

/*
 * The algebra of K^1-bi-invariant functions on GL_m over a local field
 * with residue field F_q, presented on the generators Omega and computed
 * through the defining relations as a normal-form rewriting procedure.
 * Parameterized by (m, q = p^f, sigma exponent s); the uniformizer twist
 * acts on F_q as x -> x^(p^s).
 */
class HeckeAlgebra {
public:
  HeckeAlgebra(int m, unsigned p, unsigned f, unsigned sigma_exp = 0);

  int m() const { return m_; }
  const GaloisField& field() const { return F_; }
  unsigned sigma_exp() const { return sigma_; }

  NormalWord trivial_word() const;
  AlgebraElement unit() const;
  AlgebraElement element_of(const NormalWord& w) const;

  bool is_normal(const NormalWord& w) const;

  NormalWord normalize(const ResidueUnipotent& u1, const TorusElem& t, int tau0,
                       const Permutation& w1, const TauExponent& tau,
                       const Permutation& w2, const ResidueUnipotent& u2) const;

  // Basis-word builders for the generators.
  NormalWord word_of_residue(const ResidueMatrix& k) const;
  NormalWord word_tau0(int i) const;
  NormalWord word_tau(const TauExponent& tau) const;
  NormalWord word_tau_alpha(int alpha) const;
  NormalWord word_simple(int alpha) const;
  NormalWord word_torus(const TorusElem& t) const;
  NormalWord word_unipotent(const ResidueUnipotent& u) const;

  std::vector<GeneratorToken> expand_to_tokens(const NormalWord& x) const;

  AlgebraElement mul_gen(const AlgebraElement& a, const GeneratorToken& g) const;
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;

  bool relation_check(int n, const RelationInstance& inst) const;

  // Elements of U cap w U^- w^{-1} over F_q, i.e. all assignments of the
  // roots {g in Phi+ | w^{-1} g in Phi-}.
  std::vector<ResidueUnipotent> coset_unipotents(const Permutation& w) const;

private:
  AlgebraElement mul_word_gen(const NormalWord& x, const GeneratorToken& g) const;
  AlgebraElement token_element(const GeneratorToken& g) const;

  int m_;
  GaloisField F_;
  unsigned sigma_;
};

}  // namespace hecke

#endif
