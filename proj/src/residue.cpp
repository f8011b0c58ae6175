#include "hecke/residue.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

TorusElem::TorusElem(std::vector<FqElem> entries) : entries_(std::move(entries)) {
  for (FqElem v : entries_)
    if (v == 0) throw std::invalid_argument("TorusElem: zero entry");
}

bool TorusElem::is_identity() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](FqElem v) { return v == 1; });
}

TorusElem TorusElem::mul(const TorusElem& o, const GaloisField& F) const {
  TorusElem r(*this);
  for (size_t k = 0; k < entries_.size(); ++k)
    r.entries_[k] = F.mul(entries_[k], o.entries_[k]);
  return r;
}

TorusElem TorusElem::inverse(const GaloisField& F) const {
  TorusElem r(*this);
  for (auto& v : r.entries_) v = F.inv(v);
  return r;
}

ResidueUnipotent ResidueUnipotent::elementary(int m, const Root& a, FqElem x) {
  ResidueUnipotent u(m);
  u.set_entry(a, x);
  return u;
}

FqElem ResidueUnipotent::entry(const Root& a) const {
  auto it = entries_.find(a);
  return it == entries_.end() ? 0 : it->second;
}

void ResidueUnipotent::set_entry(const Root& a, FqElem x) {
  if (a.i == a.j || a.i < 1 || a.j < 1 || a.i > m_ || a.j > m_)
    throw std::invalid_argument("ResidueUnipotent: bad root");
  if (x == 0)
    entries_.erase(a);
  else
    entries_[a] = x;
}

std::vector<Root> ResidueUnipotent::support() const {
  std::vector<Root> s;
  for (const auto& [a, x] : entries_) s.push_back(a);
  return s;
}

bool ResidueUnipotent::supported_in(const std::vector<Root>& roots) const {
  for (const auto& [a, x] : entries_)
    if (std::find(roots.begin(), roots.end(), a) == roots.end()) return false;
  return true;
}

bool ResidueUnipotent::upper() const {
  for (const auto& [a, x] : entries_)
    if (!a.positive()) return false;
  return true;
}

bool ResidueUnipotent::lower() const {
  for (const auto& [a, x] : entries_)
    if (a.positive()) return false;
  return true;
}

ResidueMatrix ResidueMatrix::identity(int m) {
  ResidueMatrix r(m);
  for (int i = 1; i <= m; ++i) r.set(i, i, 1);
  return r;
}

ResidueMatrix ResidueMatrix::from_unipotent(const ResidueUnipotent& u) {
  ResidueMatrix r = identity(u.degree());
  for (const auto& [a, x] : u.entries()) r.set(a.i, a.j, x);
  return r;
}

ResidueMatrix ResidueMatrix::from_torus(const TorusElem& t) {
  ResidueMatrix r(t.degree());
  for (int i = 1; i <= t.degree(); ++i) r.set(i, i, t[i]);
  return r;
}

ResidueMatrix ResidueMatrix::from_permutation(const Permutation& w) {
  ResidueMatrix r(w.degree());
  for (int j = 1; j <= w.degree(); ++j) r.set(w(j), j, 1);
  return r;
}

ResidueMatrix ResidueMatrix::mul(const ResidueMatrix& o, const GaloisField& F) const {
  ResidueMatrix r(m_);
  for (int i = 1; i <= m_; ++i)
    for (int k = 1; k <= m_; ++k) {
      FqElem aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 1; j <= m_; ++j)
        r.set(i, j, F.add(r.at(i, j), F.mul(aik, o.at(k, j))));
    }
  return r;
}

ResidueMatrix ResidueMatrix::inverse(const GaloisField& F) const {
  ResidueMatrix a(*this), inv = identity(m_);
  for (int c = 1; c <= m_; ++c) {
    int piv = 0;
    for (int r = c; r <= m_; ++r)
      if (a.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv == 0) throw std::domain_error("ResidueMatrix: singular");
    if (piv != c)
      for (int j = 1; j <= m_; ++j) {
        std::swap(a.a_[(piv - 1) * m_ + j - 1], a.a_[(c - 1) * m_ + j - 1]);
        std::swap(inv.a_[(piv - 1) * m_ + j - 1], inv.a_[(c - 1) * m_ + j - 1]);
      }
    FqElem d = F.inv(a.at(c, c));
    for (int j = 1; j <= m_; ++j) {
      a.set(c, j, F.mul(a.at(c, j), d));
      inv.set(c, j, F.mul(inv.at(c, j), d));
    }
    for (int r = 1; r <= m_; ++r) {
      if (r == c) continue;
      FqElem f = a.at(r, c);
      if (f == 0) continue;
      for (int j = 1; j <= m_; ++j) {
        a.set(r, j, F.sub(a.at(r, j), F.mul(f, a.at(c, j))));
        inv.set(r, j, F.sub(inv.at(r, j), F.mul(f, inv.at(c, j))));
      }
    }
  }
  return inv;
}

bool ResidueMatrix::invertible(const GaloisField& F) const {
  ResidueMatrix a(*this);
  for (int c = 1; c <= m_; ++c) {
    int piv = 0;
    for (int r = c; r <= m_; ++r)
      if (a.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv == 0) return false;
    if (piv != c)
      for (int j = 1; j <= m_; ++j)
        std::swap(a.a_[(piv - 1) * m_ + j - 1], a.a_[(c - 1) * m_ + j - 1]);
    FqElem d = F.inv(a.at(c, c));
    for (int r = c + 1; r <= m_; ++r) {
      FqElem f = F.mul(a.at(r, c), d);
      if (f == 0) continue;
      for (int j = 1; j <= m_; ++j)
        a.set(r, j, F.sub(a.at(r, j), F.mul(f, a.at(c, j))));
    }
  }
  return true;
}

bool ResidueMatrix::is_identity() const {
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= m_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

ResidueUnipotent ResidueMatrix::to_unipotent() const {
  ResidueUnipotent u(m_);
  for (int i = 1; i <= m_; ++i) {
    if (at(i, i) != 1)
      throw std::domain_error("to_unipotent: diagonal entry != 1");
    for (int j = 1; j <= m_; ++j)
      if (i != j && at(i, j) != 0) u.set_entry({i, j}, at(i, j));
  }
  return u;
}

namespace residue {

ResidueUnipotent unipotent_mul(const ResidueUnipotent& u, const ResidueUnipotent& v,
                               const GaloisField& F) {
  if (!((u.upper() && v.upper()) || (u.lower() && v.lower())))
    throw std::domain_error("unipotent_mul: mixed-sign supports");
  ResidueMatrix prod =
      ResidueMatrix::from_unipotent(u).mul(ResidueMatrix::from_unipotent(v), F);
  return prod.to_unipotent();
}

ResidueUnipotent unipotent_inverse(const ResidueUnipotent& u, const GaloisField& F) {
  return ResidueMatrix::from_unipotent(u).inverse(F).to_unipotent();
}

std::pair<ResidueUnipotent, ResidueUnipotent> factor_unipotent(
    const ResidueUnipotent& u, const std::vector<Root>& s1,
    const std::vector<Root>& s2, const GaloisField& F) {
  const int m = u.degree();
  if (u.is_identity()) return {ResidueUnipotent(m), ResidueUnipotent(m)};

  // Peel off the S1 factor height by height; clearing a root of height h
  // only disturbs entries of larger height.
  ResidueMatrix left = ResidueMatrix::identity(m);  // accumulates u1
  ResidueMatrix rem = ResidueMatrix::from_unipotent(u);
  for (int h = 1; h < m; ++h) {
    bool any = false;
    for (const Root& g : s1)
      if (g.height() == h || g.height() == -h) any = true;
    if (!any) continue;
    ResidueMatrix cur = left.inverse(F).mul(ResidueMatrix::from_unipotent(u), F);
    for (const Root& g : s1) {
      if (g.height() != h && g.height() != -h) continue;
      FqElem c = cur.at(g.i, g.j);
      if (c == 0) continue;
      ResidueMatrix e = ResidueMatrix::from_unipotent(
          ResidueUnipotent::elementary(m, g, c));
      left = left.mul(e, F);
    }
  }
  rem = left.inverse(F).mul(ResidueMatrix::from_unipotent(u), F);
  ResidueUnipotent u1 = left.to_unipotent();
  ResidueUnipotent u2 = rem.to_unipotent();
  if (!u1.supported_in(s1) || !u2.supported_in(s2))
    throw std::domain_error("factor_unipotent: partition not closed for input");
  return {u1, u2};
}

ResidueUnipotent conj_by_perm(const ResidueUnipotent& u, const Permutation& w) {
  ResidueUnipotent r(u.degree());
  for (const auto& [a, x] : u.entries()) r.set_entry(w.act(a), x);
  return r;
}

ResidueUnipotent conj_by_torus(const ResidueUnipotent& u, const TorusElem& t,
                               const GaloisField& F) {
  ResidueUnipotent r(u.degree());
  for (const auto& [a, x] : u.entries())
    r.set_entry(a, F.mul(F.mul(t[a.i], x), F.inv(t[a.j])));
  return r;
}

ResidueUnipotent conj_by_tau(const ResidueUnipotent& u, const TauExponent& tau,
                             bool inverse, const GaloisField& F,
                             unsigned sigma_exp) {
  std::vector<int> d = tau.diagonal();
  ResidueUnipotent r(u.degree());
  for (const auto& [a, x] : u.entries()) {
    int shift = d[a.i - 1] - d[a.j - 1];
    int twist = d[a.i - 1];
    if (inverse) {
      shift = -shift;
      twist = -twist;
    }
    if (shift < 0)
      throw std::domain_error("conj_by_tau: negative valuation shift");
    if (shift > 0) continue;  // entry falls into K^1
    r.set_entry(a, F.frob_pow(x, static_cast<long>(twist) * sigma_exp));
  }
  return r;
}

ResidueUnipotent sigma_pow(const ResidueUnipotent& u, long k, const GaloisField& F,
                           unsigned sigma_exp) {
  ResidueUnipotent r(u.degree());
  for (const auto& [a, x] : u.entries())
    r.set_entry(a, F.frob_pow(x, k * sigma_exp));
  return r;
}

TorusElem sigma_pow(const TorusElem& t, long k, const GaloisField& F,
                    unsigned sigma_exp) {
  TorusElem r(t.degree());
  for (int i = 1; i <= t.degree(); ++i)
    r.set(i, F.frob_pow(t[i], k * sigma_exp));
  return r;
}

TorusElem conj_torus_by_tau(const TorusElem& t, const TauExponent& tau,
                            const GaloisField& F, unsigned sigma_exp) {
  std::vector<int> d = tau.diagonal();
  TorusElem r(t.degree());
  for (int i = 1; i <= t.degree(); ++i)
    r.set(i, F.frob_pow(t[i], static_cast<long>(d[i - 1]) * sigma_exp));
  return r;
}

TorusElem conj_torus_by_perm(const TorusElem& t, const Permutation& w) {
  TorusElem r(t.degree());
  Permutation wi = w.inverse();
  for (int i = 1; i <= t.degree(); ++i) r.set(i, t[wi(i)]);
  return r;
}

Sl2Break sl2_bruhat(FqElem x, int i, int m, const GaloisField& F) {
  if (x == 0) throw std::domain_error("sl2_bruhat: x == 0");
  FqElem xi = F.inv(x);
  Sl2Break b{ResidueUnipotent::elementary(m, {i, i + 1}, xi), TorusElem(m),
             ResidueUnipotent::elementary(m, {i, i + 1}, xi)};
  b.t.set(i, x);
  b.t.set(i + 1, F.neg(xi));
  return b;
}

BruhatDecomp residue_bruhat(const ResidueMatrix& k, const GaloisField& F) {
  const int m = k.degree();
  ResidueMatrix a(k);
  ResidueMatrix lrow = ResidueMatrix::identity(m);  // accumulated row ops
  ResidueMatrix rcol = ResidueMatrix::identity(m);  // accumulated col ops
  std::vector<bool> used(m + 1, false);
  std::vector<int> wimg(m, 0);
  for (int j = 1; j <= m; ++j) {
    int r = 0;
    for (int i = m; i >= 1; --i)
      if (!used[i] && a.at(i, j) != 0) {
        r = i;
        break;
      }
    if (r == 0) throw std::domain_error("residue_bruhat: singular input");
    used[r] = true;
    wimg[j - 1] = r;
    FqElem piv = a.at(r, j);
    // clear the column above the pivot (rows < r are all that remain)
    for (int i = 1; i < r; ++i) {
      FqElem c = a.at(i, j);
      if (c == 0) continue;
      FqElem f = F.neg(F.div(c, piv));
      for (int jj = 1; jj <= m; ++jj) {
        a.set(i, jj, F.add(a.at(i, jj), F.mul(f, a.at(r, jj))));
        lrow.set(i, jj, F.add(lrow.at(i, jj), F.mul(f, lrow.at(r, jj))));
      }
    }
    // clear the pivot row to the right
    for (int jj = j + 1; jj <= m; ++jj) {
      FqElem c = a.at(r, jj);
      if (c == 0) continue;
      FqElem f = F.neg(F.div(c, piv));
      for (int ii = 1; ii <= m; ++ii) {
        a.set(ii, jj, F.add(a.at(ii, jj), F.mul(f, a.at(ii, j))));
        rcol.set(ii, jj, F.add(rcol.at(ii, jj), F.mul(f, rcol.at(ii, j))));
      }
    }
  }
  BruhatDecomp d{lrow.inverse(F).to_unipotent(), TorusElem(m),
                 Permutation(std::vector<int>(wimg)), rcol.inverse(F).to_unipotent()};
  for (int j = 1; j <= m; ++j) d.t.set(wimg[j - 1], a.at(wimg[j - 1], j));
  return d;
}

std::vector<ResidueMatrix> all_gl(int m, const GaloisField& F) {
  std::vector<ResidueMatrix> out;
  const unsigned q = F.q();
  unsigned long long total = 1;
  for (int k = 0; k < m * m; ++k) {
    total *= q;
    if (total > 50000000ull) throw std::invalid_argument("all_gl: too large");
  }
  for (unsigned long long idx = 0; idx < total; ++idx) {
    ResidueMatrix a(m);
    unsigned long long v = idx;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        a.set(i, j, static_cast<FqElem>(v % q));
        v /= q;
      }
    if (a.invertible(F)) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace residue
}  // namespace hecke
