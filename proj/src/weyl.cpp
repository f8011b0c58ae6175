#include "hecke/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hecke {

Permutation::Permutation(int m) : img_(m) {
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
      throw std::invalid_argument("Permutation: not a bijection of 1..m");
    seen[v - 1] = true;
  }
}

Permutation Permutation::transposition(int m, int i) {
  if (i < 1 || i >= m) throw std::invalid_argument("transposition: bad index");
  Permutation w(m);
  std::swap(w.img_[i - 1], w.img_[i]);
  return w;
}

Permutation Permutation::longest(int m) {
  std::vector<int> v(m);
  for (int k = 0; k < m; ++k) v[k] = m - k;
  return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& o) const {
  std::vector<int> v(img_.size());
  for (size_t k = 0; k < v.size(); ++k) v[k] = img_[o.img_[k] - 1];
  Permutation w;
  w.img_ = std::move(v);
  return w;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (size_t k = 0; k < img_.size(); ++k) v[img_[k] - 1] = static_cast<int>(k) + 1;
  Permutation w;
  w.img_ = std::move(v);
  return w;
}

bool Permutation::is_identity() const {
  for (size_t k = 0; k < img_.size(); ++k)
    if (img_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

SimpleSubset::SimpleSubset(int m, std::vector<int> indices)
    : m_(m), idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  for (int i : idx_)
    if (i < 1 || i > m - 1)
      throw std::invalid_argument("SimpleSubset: index outside 1..m-1");
}

SimpleSubset SimpleSubset::full(int m) {
  std::vector<int> all(m - 1);
  std::iota(all.begin(), all.end(), 1);
  return SimpleSubset(m, std::move(all));
}

bool SimpleSubset::contains(int i) const {
  return std::binary_search(idx_.begin(), idx_.end(), i);
}

SimpleSubset SimpleSubset::complement() const {
  std::vector<int> rest;
  for (int i = 1; i <= m_ - 1; ++i)
    if (!contains(i)) rest.push_back(i);
  return SimpleSubset(m_, std::move(rest));
}

bool TauExponent::in_delta() const {
  if (central != 0) return false;
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

bool TauExponent::is_trivial() const {
  return central == 0 && std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

SimpleSubset TauExponent::vanishing_set() const {
  std::vector<int> idx;
  for (int h = 1; h <= m() - 1; ++h)
    if (a[h - 1] == 0) idx.push_back(h);
  return SimpleSubset(m(), std::move(idx));
}

std::vector<int> TauExponent::diagonal() const {
  std::vector<int> d(m());
  d[0] = central;
  for (int j = 1; j < m(); ++j) d[j] = d[j - 1] + a[j - 1];
  return d;
}

TauExponent TauExponent::from_diagonal(const std::vector<int>& d) {
  TauExponent t(static_cast<int>(d.size()));
  t.central = d[0];
  for (size_t j = 1; j < d.size(); ++j) t.a[j - 1] = d[j] - d[j - 1];
  return t;
}

TauExponent TauExponent::operator*(const TauExponent& o) const {
  TauExponent r(*this);
  r.central += o.central;
  for (size_t k = 0; k < r.a.size(); ++k) r.a[k] += o.a[k];
  return r;
}

namespace weyl {

std::vector<Root> positive_roots(int m) {
  std::vector<Root> out;
  for (int h = 1; h < m; ++h)
    for (int i = 1; i + h <= m; ++i) out.push_back({i, i + h});
  return out;
}

std::vector<Root> inversion_set(const Permutation& w) {
  std::vector<Root> out;
  int m = w.degree();
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (w(i) > w(j)) out.push_back({i, j});
  return out;
}

std::size_t length(const Permutation& w) {
  std::size_t n = 0;
  int m = w.degree();
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if (w(i) > w(j)) ++n;
  return n;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation v = w;
  int m = w.degree();
  std::size_t len = length(v);
  while (len > 0) {
    for (int i = 1; i < m; ++i) {
      Permutation sv = Permutation::transposition(m, i) * v;
      std::size_t l = length(sv);
      if (l < len) {
        word.push_back(i);
        v = std::move(sv);
        len = l;
        break;
      }
    }
  }
  return word;
}

std::pair<Permutation, Permutation> min_decomp_right(const SimpleSubset& P,
                                                     const Permutation& w) {
  int m = w.degree();
  Permutation wp(m);
  Permutation rest = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : P.indices()) {
      Permutation s = Permutation::transposition(m, i);
      Permutation cand = s * rest;
      if (length(cand) < length(rest)) {
        rest = std::move(cand);
        wp = wp * s;
        changed = true;
        break;
      }
    }
  }
  return {wp, rest};
}

std::pair<Permutation, Permutation> min_decomp_left(const Permutation& w,
                                                    const SimpleSubset& P) {
  auto [wp_inv, rest_inv] = min_decomp_right(P, w.inverse());
  return {rest_inv.inverse(), wp_inv.inverse()};
}

bool is_minimal_in_left_cosets(const SimpleSubset& P, const Permutation& w) {
  // minimal in W_P w  <=>  l(s_i w) > l(w) for all i in P
  //                   <=>  w^{-1}(i) < w^{-1}(i+1) for all i in P
  Permutation wi = w.inverse();
  for (int i : P.indices())
    if (wi(i) > wi(i + 1)) return false;
  return true;
}

std::pair<std::vector<Root>, std::vector<Root>> root_sets(const SimpleSubset& P) {
  std::vector<Root> phi_p, psi_p;
  for (const Root& a : positive_roots(P.m())) {
    bool spanned = true;
    for (int k = a.i; k < a.j; ++k)
      if (!P.contains(k)) {
        spanned = false;
        break;
      }
    (spanned ? phi_p : psi_p).push_back(a);
  }
  return {phi_p, psi_p};
}

bool in_phi_p(const SimpleSubset& P, const Root& a) {
  int lo = std::min(a.i, a.j), hi = std::max(a.i, a.j);
  for (int k = lo; k < hi; ++k)
    if (!P.contains(k)) return false;
  return true;
}

std::pair<SimpleSubset, std::vector<int>> pq_sets(const Permutation& w, int alpha) {
  int m = w.degree();
  if (alpha < 1 || alpha >= m) throw std::invalid_argument("pq_sets: alpha not simple");
  std::vector<bool> in_a(m + 1, false), in_b(m, false);
  for (int j = alpha + 1; j <= m; ++j) {
    in_a[w(j)] = true;
    in_b[w(j) - 1] = true;
  }
  std::vector<int> p_idx, q;
  for (int v = 1; v <= m - 1; ++v)
    if (in_a[v] && !in_b[v]) p_idx.push_back(v);
  for (int v = 0; v <= m - 1; ++v)
    if (in_b[v] && !in_a[v]) q.push_back(v);
  return {SimpleSubset(m, std::move(p_idx)), q};
}

TauExponent tau_conj(const Permutation& w, const TauExponent& tau) {
  std::vector<int> d = tau.diagonal();
  Permutation wi = w.inverse();
  std::vector<int> e(d.size());
  for (int k = 1; k <= static_cast<int>(d.size()); ++k) e[k - 1] = d[wi(k) - 1];
  return TauExponent::from_diagonal(e);
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.push_back(Permutation(v));
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace weyl
}  // namespace hecke
