#ifndef HECKE_WEYL_HPP
#define HECKE_WEYL_HPP

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace hecke {

// Root alpha_ij of GL_m, 1-based indices, i != j.  Positive iff i < j.
struct Root {
  int i = 0;
  int j = 0;

  bool positive() const { return i < j; }
  Root operator-() const { return {j, i}; }
  // Height in the ambient positive/negative chain: j - i.
  int height() const { return j - i; }

  auto operator<=>(const Root&) const = default;
};

// Permutation of {1..m} in one-line notation; img[k] = w(k+1).
// Composition is as functions: (a*b)(i) = a(b(i)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int m);                    // identity
  explicit Permutation(std::vector<int> one_line);

  static Permutation transposition(int m, int i);  // s_i = (i, i+1)
  static Permutation longest(int m);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  bool is_identity() const;

  Root act(const Root& a) const { return {img_[a.i - 1], img_[a.j - 1]}; }

  const std::vector<int>& one_line() const { return img_; }

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> img_;
};

// Subset of the simple roots, encoded as a sorted set of indices in 1..m-1
// (index i stands for alpha_{i,i+1}).
class SimpleSubset {
public:
  SimpleSubset() = default;
  SimpleSubset(int m, std::vector<int> indices);

  static SimpleSubset full(int m);  // all of Sigma

  int m() const { return m_; }
  bool contains(int i) const;
  const std::vector<int>& indices() const { return idx_; }
  bool empty() const { return idx_.empty(); }

  SimpleSubset complement() const;  // Sigma - P

  auto operator<=>(const SimpleSubset&) const = default;

private:
  int m_ = 0;
  std::vector<int> idx_;
};

/*
 * Exponent vector of an element of the diagonal monoid generated by
 * tau_h = diag(I_h, w I_{m-h}), h = 1..m-1, together with a signed central
 * exponent for tau_0 = w I_m.  Elements of the monoid Delta have a >= 0
 * and central == 0; conjugation results may be signed.
 */
struct TauExponent {
  std::vector<int> a;  // a[h-1] = exponent of tau_h, h = 1..m-1
  int central = 0;     // exponent of tau_0

  explicit TauExponent(int m) : a(m - 1, 0) {}
  TauExponent(std::vector<int> exps, int c) : a(std::move(exps)), central(c) {}

  int m() const { return static_cast<int>(a.size()) + 1; }
  bool in_delta() const;
  bool is_trivial() const;

  // P(tau) = { alpha_h in Sigma | a_h = 0 }.
  SimpleSubset vanishing_set() const;

  // Diagonal valuation vector (d_1..d_m): d_j = central + sum_{h<j} a_h.
  std::vector<int> diagonal() const;
  static TauExponent from_diagonal(const std::vector<int>& d);

  TauExponent operator*(const TauExponent& o) const;

  auto operator<=>(const TauExponent&) const = default;
};

namespace weyl {

// Positive roots of GL_m, ordered by (height, i).
std::vector<Root> positive_roots(int m);

// N(w) = { alpha in Phi+ | w(alpha) in Phi- }.
std::vector<Root> inversion_set(const Permutation& w);

std::size_t length(const Permutation& w);

// Lexicographically smallest reduced word; product of the listed s_i
// (left to right) equals w.
std::vector<int> reduced_word(const Permutation& w);

// w = w_P * w' with w_P in W_P and w' the minimal-length element of W_P w.
std::pair<Permutation, Permutation> min_decomp_right(const SimpleSubset& P,
                                                     const Permutation& w);

// w = w' * w_P with w_P in W_P and w' the minimal-length element of w W_P.
std::pair<Permutation, Permutation> min_decomp_left(const Permutation& w,
                                                    const SimpleSubset& P);

bool is_minimal_in_left_cosets(const SimpleSubset& P, const Permutation& w);

// (Phi_P^+, Psi_P^+): positive roots spanned by P, and the complement.
std::pair<std::vector<Root>, std::vector<Root>> root_sets(const SimpleSubset& P);

bool in_phi_p(const SimpleSubset& P, const Root& a);  // a in Phi_P (either sign)

/*
 * The bookkeeping sets attached to (w, alpha_i):
 *   A = { w(j) | i+1 <= j <= m },  B = { w(j)-1 | i+1 <= j <= m },
 *   P = simple roots indexed by (A \ B) within 1..m-1,  Q = B \ A.
 * Returned Q is a sorted subset of {0..m-1}; index 0 stands for tau_0.
 */
std::pair<SimpleSubset, std::vector<int>> pq_sets(const Permutation& w, int alpha);

// Exponent vector of w tau w^{-1}; additive in tau, entries may be signed.
TauExponent tau_conj(const Permutation& w, const TauExponent& tau);

// All m! permutations, for exhaustive checks.
std::vector<Permutation> all_permutations(int m);

}  // namespace weyl
}  // namespace hecke

#endif
