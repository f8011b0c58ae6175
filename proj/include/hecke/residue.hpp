#ifndef HECKE_RESIDUE_HPP
#define HECKE_RESIDUE_HPP

#include <compare>
#include <map>
#include <tuple>
#include <vector>

#include "hecke/fq.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// Diagonal torus element over F_q: m invertible entries (Teichmueller
// coordinates of T at residue level).
class TorusElem {
public:
  TorusElem() = default;
  explicit TorusElem(int m) : entries_(m, 1) {}
  explicit TorusElem(std::vector<FqElem> entries);

  int degree() const { return static_cast<int>(entries_.size()); }
  FqElem operator[](int i) const { return entries_[i - 1]; }  // 1-based
  void set(int i, FqElem v) { entries_[i - 1] = v; }
  bool is_identity() const;
  const std::vector<FqElem>& entries() const { return entries_; }

  TorusElem mul(const TorusElem& o, const GaloisField& F) const;
  TorusElem inverse(const GaloisField& F) const;

  auto operator<=>(const TorusElem&) const = default;

private:
  std::vector<FqElem> entries_;
};

// Element of a root-subgroup product over F_q: identity plus finitely many
// off-diagonal entries.  Supports must stay within Phi+ or within Phi- for
// the group operations below; conjugation may move entries across signs.
class ResidueUnipotent {
public:
  ResidueUnipotent() = default;
  explicit ResidueUnipotent(int m) : m_(m) {}

  static ResidueUnipotent elementary(int m, const Root& a, FqElem x);

  int degree() const { return m_; }
  bool is_identity() const { return entries_.empty(); }
  FqElem entry(const Root& a) const;
  void set_entry(const Root& a, FqElem x);  // erases on x == 0
  const std::map<Root, FqElem>& entries() const { return entries_; }

  std::vector<Root> support() const;
  bool supported_in(const std::vector<Root>& roots) const;
  bool upper() const;  // all roots positive (true when empty)
  bool lower() const;

  auto operator<=>(const ResidueUnipotent&) const = default;

private:
  int m_ = 0;
  std::map<Root, FqElem> entries_;
};

// Dense m x m matrix over F_q.
class ResidueMatrix {
public:
  ResidueMatrix() = default;
  explicit ResidueMatrix(int m) : m_(m), a_(m * m, 0) {}

  static ResidueMatrix identity(int m);
  static ResidueMatrix from_unipotent(const ResidueUnipotent& u);
  static ResidueMatrix from_torus(const TorusElem& t);
  static ResidueMatrix from_permutation(const Permutation& w);

  int degree() const { return m_; }
  FqElem at(int i, int j) const { return a_[(i - 1) * m_ + (j - 1)]; }
  void set(int i, int j, FqElem v) { a_[(i - 1) * m_ + (j - 1)] = v; }

  ResidueMatrix mul(const ResidueMatrix& o, const GaloisField& F) const;
  ResidueMatrix inverse(const GaloisField& F) const;
  bool invertible(const GaloisField& F) const;
  bool is_identity() const;

  // Requires unitriangular (all diagonal 1, entries on one side only is
  // not required); extracts the off-diagonal entries.
  ResidueUnipotent to_unipotent() const;

  auto operator<=>(const ResidueMatrix&) const = default;

private:
  int m_ = 0;
  std::vector<FqElem> a_;
};

namespace residue {

// Product of two unipotents whose supports lie within a common sign
// (both upper or both lower).
ResidueUnipotent unipotent_mul(const ResidueUnipotent& u, const ResidueUnipotent& v,
                               const GaloisField& F);

ResidueUnipotent unipotent_inverse(const ResidueUnipotent& u, const GaloisField& F);

/*
 * Deterministic factorization u = u1 * u2 with support(u1) in S1 and
 * support(u2) in S2.  S1 and S2 must partition a set containing the
 * support closure of u, and each part must be closed under root addition.
 * Throws if the factorization leaves the declared parts.
 */
std::pair<ResidueUnipotent, ResidueUnipotent> factor_unipotent(
    const ResidueUnipotent& u, const std::vector<Root>& s1,
    const std::vector<Root>& s2, const GaloisField& F);

// w u w^{-1}: the entry at alpha moves to w(alpha), values unchanged.
ResidueUnipotent conj_by_perm(const ResidueUnipotent& u, const Permutation& w);

// t u t^{-1}: entry at alpha_jk becomes t_j x t_k^{-1}.
ResidueUnipotent conj_by_torus(const ResidueUnipotent& u, const TorusElem& t,
                               const GaloisField& F);

/*
 * tau u tau^{-1} (or tau^{-1} u tau when inverse is set) at residue level,
 * where tau has diagonal valuations d_1..d_m (central power included) and
 * the uniformizer acts on F_q by sigma = frob^s.  An entry at alpha_jk
 * with valuation shift > 0 is absorbed into K^1 and dropped; shift = 0
 * twists the entry by sigma^(d); shift < 0 throws.
 */
ResidueUnipotent conj_by_tau(const ResidueUnipotent& u, const TauExponent& tau,
                             bool inverse, const GaloisField& F, unsigned sigma_exp);

// Entrywise sigma^k with sigma = frob^s.
ResidueUnipotent sigma_pow(const ResidueUnipotent& u, long k, const GaloisField& F,
                           unsigned sigma_exp);
TorusElem sigma_pow(const TorusElem& t, long k, const GaloisField& F,
                    unsigned sigma_exp);

// tau t tau^{-1} for diagonal t: entry j twisted by sigma^(d_j).
TorusElem conj_torus_by_tau(const TorusElem& t, const TauExponent& tau,
                            const GaloisField& F, unsigned sigma_exp);

TorusElem conj_torus_by_perm(const TorusElem& t, const Permutation& w);

/*
 * The rank-1 break used when a simple reflection hits a nonzero entry:
 * s_i e_i(x) s_i = e_i(x^{-1}) s_i diag(..., x, -x^{-1}, ...) e_i(x^{-1})
 * with x, -x^{-1} at positions i, i+1.  Requires x != 0.
 */
struct Sl2Break {
  ResidueUnipotent v3;
  TorusElem t;
  ResidueUnipotent v4;
};
Sl2Break sl2_bruhat(FqElem x, int i, int m, const GaloisField& F);

// k = u1 * t * w * u2 with u1, u2 upper unipotent and t, w unique.
struct BruhatDecomp {
  ResidueUnipotent u1;
  TorusElem t;
  Permutation w;
  ResidueUnipotent u2;
};
BruhatDecomp residue_bruhat(const ResidueMatrix& k, const GaloisField& F);

// All of GL_m(F_q) (small parameters only).
std::vector<ResidueMatrix> all_gl(int m, const GaloisField& F);

}  // namespace residue
}  // namespace hecke

#endif
