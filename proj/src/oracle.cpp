#include "hecke/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace hecke::oracle {

namespace {
constexpr int kValZero = 1 << 28;
}

LocalScalar LocalScalar::constant(FqElem x) { return monomial(x, 0); }

LocalScalar LocalScalar::monomial(FqElem x, int v) {
  LocalScalar s;
  if (x != 0) {
    s.val_ = v;
    s.c_ = {x};
  }
  return s;
}

LocalScalar LocalScalar::from_coeffs(int v, std::vector<FqElem> c) {
  LocalScalar s;
  s.val_ = v;
  s.c_ = std::move(c);
  s.trim();
  return s;
}

void LocalScalar::trim() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = 0;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + lead);
    val_ += static_cast<int>(lead);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int LocalScalar::valuation() const {
  if (c_.empty()) return kValZero;
  return val_;
}

int LocalScalar::top_degree() const {
  if (c_.empty()) return -kValZero;
  return val_ + static_cast<int>(c_.size()) - 1;
}

FqElem LocalScalar::coeff(int deg) const {
  if (c_.empty() || deg < val_ || deg > top_degree()) return 0;
  return c_[deg - val_];
}

LocalScalar LocalScalar::add(const LocalScalar& o, const GaloisField& F) const {
  if (c_.empty()) return o;
  if (o.c_.empty()) return *this;
  int lo = std::min(val_, o.val_);
  int hi = std::max(top_degree(), o.top_degree());
  std::vector<FqElem> c(hi - lo + 1, 0);
  for (size_t k = 0; k < c_.size(); ++k) c[val_ - lo + k] = c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k)
    c[o.val_ - lo + k] = F.add(c[o.val_ - lo + k], o.c_[k]);
  return from_coeffs(lo, std::move(c));
}

LocalScalar LocalScalar::sub(const LocalScalar& o, const GaloisField& F) const {
  return add(o.neg(F), F);
}

LocalScalar LocalScalar::neg(const GaloisField& F) const {
  LocalScalar s(*this);
  for (auto& x : s.c_) x = F.neg(x);
  return s;
}

LocalScalar LocalScalar::mul(const LocalScalar& o, const GaloisField& F) const {
  if (c_.empty() || o.c_.empty()) return LocalScalar();
  std::vector<FqElem> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(c_[i], o.c_[j]));
  }
  return from_coeffs(val_ + o.val_, std::move(c));
}

LocalScalar LocalScalar::shifted(int dv) const {
  if (c_.empty()) return *this;
  LocalScalar s(*this);
  s.val_ += dv;
  return s;
}

LocalScalar LocalScalar::truncated(int deg) const {
  if (c_.empty() || val_ >= deg) return LocalScalar();
  LocalScalar s(*this);
  if (s.top_degree() >= deg) s.c_.resize(deg - s.val_);
  s.trim();
  return s;
}

LocalScalar LocalScalar::div(const LocalScalar& o, const GaloisField& F,
                             int cap) const {
  if (o.c_.empty()) throw std::domain_error("LocalScalar: division by zero");
  if (c_.empty()) return LocalScalar();
  // o = t^w (b_0 + b_1 t + ...), b_0 != 0; invert the unit series up to
  // enough terms that the quotient is correct modulo t^cap.
  int terms = cap - (val_ - o.val_);
  if (terms <= 0) return LocalScalar();
  std::vector<FqElem> inv(terms, 0);
  FqElem b0i = F.inv(o.c_[0]);
  inv[0] = b0i;
  for (int n = 1; n < terms; ++n) {
    FqElem acc = 0;
    for (int k = 1; k <= n && k < static_cast<int>(o.c_.size()); ++k)
      acc = F.add(acc, F.mul(o.c_[k], inv[n - k]));
    inv[n] = F.neg(F.mul(acc, b0i));
  }
  LocalScalar u = from_coeffs(-o.val_, std::move(inv));
  return mul(u, F).truncated(cap);
}

void LocalScalar::append_bytes(std::string& out) const {
  out.push_back(static_cast<char>(c_.size() & 0xff));
  int v = c_.empty() ? 0 : val_;
  out.push_back(static_cast<char>((v + 128) & 0xff));
  for (FqElem x : c_) out.push_back(static_cast<char>(x & 0xff));
}

LocalMatrix LocalMatrix::identity(int m) {
  LocalMatrix a(m);
  for (int i = 1; i <= m; ++i) a.set(i, i, LocalScalar::constant(1));
  return a;
}

LocalMatrix LocalMatrix::from_residue(const ResidueMatrix& k) {
  LocalMatrix a(k.degree());
  for (int i = 1; i <= k.degree(); ++i)
    for (int j = 1; j <= k.degree(); ++j)
      a.set(i, j, LocalScalar::constant(k.at(i, j)));
  return a;
}

LocalMatrix LocalMatrix::uniformizer_power(int m, int i) {
  LocalMatrix a(m);
  for (int r = 1; r <= m; ++r) a.set(r, r, LocalScalar::monomial(1, i));
  return a;
}

LocalMatrix LocalMatrix::mul(const LocalMatrix& o, const GaloisField& F) const {
  LocalMatrix r(m_);
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= m_; ++j) {
      LocalScalar acc;
      for (int k = 1; k <= m_; ++k) {
        const LocalScalar& a = at(i, k);
        const LocalScalar& b = o.at(k, j);
        if (a.is_zero() || b.is_zero()) continue;
        acc = acc.add(a.mul(b, F), F);
      }
      r.set(i, j, std::move(acc));
    }
  return r;
}

LocalScalar LocalMatrix::det(const GaloisField& F) const {
  if (m_ == 1) return at(1, 1);
  if (m_ == 2)
    return at(1, 1).mul(at(2, 2), F).sub(at(1, 2).mul(at(2, 1), F), F);
  // expansion along the first row
  LocalScalar acc;
  for (int j = 1; j <= m_; ++j) {
    if (at(1, j).is_zero()) continue;
    LocalMatrix sub(m_ - 1);
    for (int i = 2; i <= m_; ++i) {
      int jc = 1;
      for (int k = 1; k <= m_; ++k) {
        if (k == j) continue;
        sub.set(i - 1, jc++, at(i, k));
      }
    }
    LocalScalar term = at(1, j).mul(sub.det(F), F);
    if (j % 2 == 0) term = term.neg(F);
    acc = acc.add(term, F);
  }
  return acc;
}

LocalMatrix LocalMatrix::inverse(const GaloisField& F, int cap) const {
  LocalScalar d = det(F);
  if (d.is_zero()) throw std::domain_error("LocalMatrix: singular");
  LocalMatrix adj(m_);
  if (m_ == 1) {
    adj.set(1, 1, LocalScalar::constant(1));
  } else if (m_ == 2) {
    adj.set(1, 1, at(2, 2));
    adj.set(2, 2, at(1, 1));
    adj.set(1, 2, at(1, 2).neg(F));
    adj.set(2, 1, at(2, 1).neg(F));
  } else {
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= m_; ++j) {
        LocalMatrix sub(m_ - 1);
        int ir = 1;
        for (int r = 1; r <= m_; ++r) {
          if (r == j) continue;
          int jc = 1;
          for (int c = 1; c <= m_; ++c) {
            if (c == i) continue;
            sub.set(ir, jc++, at(r, c));
          }
          ++ir;
        }
        LocalScalar cf = sub.det(F);
        if ((i + j) % 2 == 1) cf = cf.neg(F);
        adj.set(i, j, std::move(cf));
      }
  }
  LocalMatrix r(m_);
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= m_; ++j)
      r.set(i, j, adj.at(i, j).div(d, F, cap));
  return r;
}

OracleContext::OracleContext(int m, unsigned p, unsigned f) : m_(m), F_(p, f) {
  if (m < 1) throw std::invalid_argument("OracleContext: m < 1");
}

std::vector<int> OracleContext::smith_valuations(const LocalMatrix& x) const {
  // valuations of the gcds of k x k minors; differences give the divisors
  std::vector<int> gcdval(m_ + 1, 0);
  for (int k = 1; k <= m_; ++k) {
    int best = kValZero;
    // enumerate k-subsets of rows and columns
    std::vector<int> rows(k), cols(k);
    std::iota(rows.begin(), rows.end(), 1);
    auto next_subset = [&](std::vector<int>& s) {
      int i = k - 1;
      while (i >= 0 && s[i] == m_ - (k - 1 - i)) --i;
      if (i < 0) return false;
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
      return true;
    };
    do {
      std::iota(cols.begin(), cols.end(), 1);
      do {
        LocalMatrix sub(k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub.set(a + 1, b + 1, x.at(rows[a], cols[b]));
        LocalScalar d = sub.det(F_);
        if (!d.is_zero()) best = std::min(best, d.valuation());
      } while (next_subset(cols));
    } while (next_subset(rows));
    if (best >= kValZero)
      throw std::domain_error("smith_valuations: matrix not invertible");
    gcdval[k] = best;
  }
  std::vector<int> d(m_);
  for (int k = 1; k <= m_; ++k) d[k - 1] = gcdval[k] - gcdval[k - 1];
  std::sort(d.begin(), d.end());
  return d;
}

int OracleContext::precision_for(const LocalMatrix& x, const LocalMatrix& y) const {
  auto spread = [&](const LocalMatrix& a) {
    std::vector<int> d = smith_valuations(a);
    return d.back() - d.front();
  };
  int s = std::max({spread(x), spread(y), spread(x.mul(y, F_))});
  return std::max(2, s + 2);
}

int OracleContext::bytes_cap(const LocalMatrix& z, int N) const {
  std::vector<int> d = smith_valuations(z);
  int mx = 0;
  for (int v : d) mx = std::max(mx, std::abs(v));
  return N + 2 * m_ * (mx + 1) + (d.back() - d.front()) + 4;
}

CosetLabel OracleContext::coset_label(const LocalMatrix& z, int N) const {
  const int cap = bytes_cap(z, N);
  // Basis of the lattice t z O^m.
  std::vector<std::vector<LocalScalar>> h(m_, std::vector<LocalScalar>(m_));
  for (int c = 1; c <= m_; ++c)
    for (int r = 1; r <= m_; ++r) h[c - 1][r - 1] = z.at(r, c).shifted(1);

  // Hermite form over the valuation ring: after step r, column r has its
  // pivot t^{e_r} at row r and rows r of later columns vanish.
  std::vector<int> e(m_);
  for (int r = 0; r < m_; ++r) {
    int best = -1, bestval = kValZero;
    for (int c = r; c < m_; ++c) {
      if (h[c][r].is_zero()) continue;
      if (h[c][r].valuation() < bestval) {
        bestval = h[c][r].valuation();
        best = c;
      }
    }
    if (best < 0) throw std::domain_error("coset_label: singular matrix");
    std::swap(h[r], h[best]);
    // scale the column so the pivot becomes exactly t^{e_r}
    LocalScalar piv = h[r][r];
    e[r] = piv.valuation();
    for (int i = 0; i < m_; ++i)
      h[r][i] = h[r][i].mul(LocalScalar::monomial(1, e[r]), F_).div(piv, F_, cap);
    for (int c = r + 1; c < m_; ++c) {
      if (h[c][r].is_zero()) continue;
      LocalScalar f = h[c][r].shifted(-e[r]);  // exact: valuation >= e_r
      for (int i = 0; i < m_; ++i)
        h[c][i] = h[c][i].sub(f.mul(h[r][i], F_), F_).truncated(cap);
    }
  }
  // canonicalize the below-pivot entries of the basis
  for (int c = 0; c < m_; ++c)
    for (int i = c + 1; i < m_; ++i) {
      // reduce row i of column c modulo t^{e_i}
      LocalScalar hi = h[c][i];
      if (hi.is_zero() || hi.top_degree() < e[i]) continue;
      int kv = std::max(hi.valuation(), e[i]);
      std::vector<FqElem> qc;
      for (int dgr = kv; dgr <= hi.top_degree(); ++dgr) qc.push_back(hi.coeff(dgr));
      LocalScalar f = LocalScalar::from_coeffs(kv - e[i], std::move(qc));
      for (int r2 = 0; r2 < m_; ++r2)
        h[c][r2] = h[c][r2].sub(f.mul(h[i][r2], F_), F_).truncated(cap);
    }

  // reduce the columns of z against the pivots, top row first
  std::string bytes;
  bytes.push_back(static_cast<char>(m_));
  for (int c = 1; c <= m_; ++c) {
    std::vector<LocalScalar> v(m_);
    for (int r = 1; r <= m_; ++r) v[r - 1] = z.at(r, c).truncated(cap);
    for (int i = 0; i < m_; ++i) {
      const LocalScalar& vi = v[i];
      if (vi.is_zero() || vi.top_degree() < e[i]) continue;
      int kv = std::max(vi.valuation(), e[i]);
      std::vector<FqElem> qc;
      for (int dgr = kv; dgr <= vi.top_degree(); ++dgr) qc.push_back(vi.coeff(dgr));
      LocalScalar f = LocalScalar::from_coeffs(kv - e[i], std::move(qc));
      for (int r2 = 0; r2 < m_; ++r2)
        v[r2] = v[r2].sub(f.mul(h[i][r2], F_), F_).truncated(cap);
    }
    for (int r = 0; r < m_; ++r) v[r].append_bytes(bytes);
  }
  return CosetLabel{std::move(bytes)};
}

void OracleContext::enumerate_k1(
    const LocalMatrix& x, int N,
    std::vector<std::pair<CosetLabel, LocalMatrix>>& out) const {
  if (m_ > 2 || F_.q() > 3 || N > 4)
    throw std::invalid_argument(
        "oracle: enumeration beyond the feasibility cap m <= 2, q <= 3, N <= 4");
  if (N < 2) throw std::invalid_argument("oracle: N must be at least 2");
  const unsigned q = F_.q();
  const int depth = N - 1;  // entries of M run over O / t^(N-1) O
  const int cells = m_ * m_ * depth;
  unsigned long long total = 1;
  for (int k = 0; k < cells; ++k) total *= q;

  std::unordered_map<std::string, std::size_t> seen;
  std::vector<FqElem> digits(cells, 0);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    // k = I + t M from the digit odometer
    LocalMatrix k1(m_);
    int pos = 0;
    for (int i = 1; i <= m_; ++i)
      for (int j = 1; j <= m_; ++j) {
        std::vector<FqElem> coeffs(depth);
        for (int d = 0; d < depth; ++d) coeffs[d] = digits[pos + d];
        pos += depth;
        LocalScalar entry = LocalScalar::from_coeffs(1, std::move(coeffs));
        if (i == j) entry = entry.add(LocalScalar::constant(1), F_);
        k1.set(i, j, std::move(entry));
      }
    LocalMatrix z = k1.mul(x, F_);
    CosetLabel lab = coset_label(z, N);
    auto [it, fresh] = seen.emplace(lab.bytes, out.size());
    if (fresh) out.emplace_back(std::move(lab), std::move(z));
    // advance odometer
    for (int c = 0; c < cells; ++c) {
      if (++digits[c] < q) break;
      digits[c] = 0;
    }
  }
}

std::vector<std::pair<CosetLabel, LocalMatrix>> OracleContext::double_coset_cosets(
    const LocalMatrix& x, int N) const {
  CosetLabel lx = coset_label(x, N);
  std::string key = lx.bytes + "#" + std::to_string(N);
  auto it = dc_index_.find(key);
  if (it != dc_index_.end()) return dc_orbits_[it->second];
  std::vector<std::pair<CosetLabel, LocalMatrix>> orbit;
  enumerate_k1(x, N, orbit);
  std::size_t idx = dc_orbits_.size();
  dc_orbits_.push_back(orbit);
  for (const auto& [lab, rep] : orbit)
    dc_index_.emplace(lab.bytes + "#" + std::to_string(N), idx);
  return orbit;
}

bool OracleContext::same_double_coset(const LocalMatrix& a, const LocalMatrix& b,
                                      int N) const {
  CosetLabel lb = coset_label(b, N);
  for (const auto& [lab, rep] : double_coset_cosets(a, N))
    if (lab == lb) return true;
  return false;
}

ConvolutionResult OracleContext::convolve(const LocalMatrix& x,
                                          const LocalMatrix& y, int N) const {
  auto sx = double_coset_cosets(x, N);
  auto sy = double_coset_cosets(y, N);
  std::unordered_set<std::string> sy_labels;
  for (const auto& [lab, rep] : sy) sy_labels.insert(lab.bytes);

  ConvolutionResult res;
  res.left_cosets_x = static_cast<long>(sx.size());
  res.left_cosets_y = static_cast<long>(sy.size());

  // The left cosets of K^1 x K^1 y K^1 are exactly {z v K^1}; group the
  // candidates into double cosets, enumerating each new double coset once.
  std::unordered_map<std::string, std::size_t> assigned;
  const int cap = bytes_cap(x.mul(y, F_), N) + 2 * N;
  for (const auto& [lx, z] : sx)
    for (const auto& [ly, v] : sy) {
      LocalMatrix g = z.mul(v, F_);
      CosetLabel lg = coset_label(g, N);
      if (assigned.count(lg.bytes)) continue;
      auto orbit = double_coset_cosets(g, N);
      std::size_t idx = res.terms.size();
      for (const auto& [lab, rep] : orbit) assigned.emplace(lab.bytes, idx);
      StructureTerm term;
      term.rep = g;
      term.left_coset_count = static_cast<long>(orbit.size());
      term.coefficient = 0;
      res.terms.push_back(std::move(term));
    }
  for (auto& term : res.terms) {
    for (const auto& [lx, z] : sx) {
      LocalMatrix zi = z.inverse(F_, cap);
      CosetLabel lab = coset_label(zi.mul(term.rep, F_), N);
      if (sy_labels.count(lab.bytes)) ++term.coefficient;
    }
  }
  return res;
}

NormalWord OracleContext::iwahori_decompose(const LocalMatrix& x,
                                            const HeckeAlgebra& engine) const {
  if (engine.m() != m_ || !(engine.field() == F_))
    throw std::invalid_argument("iwahori_decompose: engine parameters mismatch");
  const int cap = bytes_cap(x, 6) + 8;
  LocalMatrix a(x);
  ResidueMatrix lres = ResidueMatrix::identity(m_);  // residue of the op product
  ResidueMatrix rres = ResidueMatrix::identity(m_);
  std::vector<bool> rowdone(m_ + 1, false), coldone(m_ + 1, false);
  std::vector<int> roww(m_ + 1, 0);  // pivot row per column
  for (int step = 0; step < m_; ++step) {
    int pr = 0, pc = 0, pv = kValZero;
    for (int i = 1; i <= m_; ++i) {
      if (rowdone[i]) continue;
      for (int j = 1; j <= m_; ++j) {
        if (coldone[j] || a.at(i, j).is_zero()) continue;
        int v = a.at(i, j).valuation();
        if (v < pv || (v == pv && (i > pr || (i == pr && j < pc)))) {
          pv = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == 0) throw std::domain_error("iwahori_decompose: singular input");
    // clear the pivot column with row operations (upper-unipotent above the
    // pivot, congruence-subgroup ops below)
    for (int i = 1; i <= m_; ++i) {
      if (i == pr || rowdone[i] || a.at(i, pc).is_zero()) continue;
      LocalScalar mu = a.at(i, pc).div(a.at(pr, pc), F_, cap);
      if (i > pr && mu.valuation() < 1)
        throw std::logic_error("iwahori_decompose: pivot rule violated");
      for (int j = 1; j <= m_; ++j)
        a.set(i, j, a.at(i, j).sub(mu.mul(a.at(pr, j), F_), F_).truncated(cap));
      if (i < pr && mu.coeff(0) != 0) {
        // residue of the elementary op I - mu0 E_{i,pr}
        ResidueMatrix e = ResidueMatrix::identity(m_);
        e.set(i, pr, F_.neg(mu.coeff(0)));
        lres = e.mul(lres, F_);
      }
    }
    // clear the pivot row with column operations
    for (int j = 1; j <= m_; ++j) {
      if (j == pc || coldone[j] || a.at(pr, j).is_zero()) continue;
      LocalScalar mu = a.at(pr, j).div(a.at(pr, pc), F_, cap);
      if (j < pc && mu.valuation() < 1)
        throw std::logic_error("iwahori_decompose: pivot rule violated");
      for (int i = 1; i <= m_; ++i)
        a.set(i, j, a.at(i, j).sub(mu.mul(a.at(i, pc), F_), F_).truncated(cap));
      if (j > pc && mu.coeff(0) != 0) {
        ResidueMatrix e = ResidueMatrix::identity(m_);
        e.set(pc, j, F_.neg(mu.coeff(0)));
        rres = rres.mul(e, F_);
      }
    }
    rowdone[pr] = true;
    coldone[pc] = true;
    roww[pc] = pr;
  }
  // a is monomial: entry mu_j t^{a_j} at (roww[j], j)
  std::vector<int> expo(m_);
  std::vector<int> wimg(m_);
  TorusElem t(m_);
  for (int j = 1; j <= m_; ++j) {
    int r = roww[j];
    wimg[j - 1] = r;
    const LocalScalar& v = a.at(r, j);
    expo[j - 1] = v.valuation();
    t.set(r, v.leading());
  }
  Permutation wfull((std::vector<int>(wimg)));
  // stable sort of the column exponents: slot k holds original index ord[k]
  std::vector<int> ord(m_);
  std::iota(ord.begin(), ord.end(), 1);
  std::stable_sort(ord.begin(), ord.end(),
                   [&](int aj, int bj) { return expo[aj - 1] < expo[bj - 1]; });
  std::vector<int> w2img(m_);
  for (int k = 1; k <= m_; ++k) w2img[ord[k - 1] - 1] = k;
  Permutation w2((std::vector<int>(w2img)));
  int i0 = expo[ord[0] - 1];
  TauExponent tau(m_);
  for (int h = 1; h <= m_ - 1; ++h)
    tau.a[h - 1] = expo[ord[h] - 1] - expo[ord[h - 1] - 1];
  Permutation w1 = wfull * w2.inverse();
  ResidueUnipotent u1 = lres.inverse(F_).to_unipotent();
  ResidueUnipotent u2 = rres.inverse(F_).to_unipotent();
  return engine.normalize(u1, t, i0, w1, tau, w2, u2);
}

LocalMatrix OracleContext::realize(const NormalWord& w) const {
  LocalMatrix out = LocalMatrix::from_residue(
      ResidueMatrix::from_unipotent(w.u1));
  out = out.mul(LocalMatrix::from_residue(ResidueMatrix::from_torus(w.t)), F_);
  out = out.mul(LocalMatrix::uniformizer_power(m_, w.tau0), F_);
  out = out.mul(LocalMatrix::from_residue(ResidueMatrix::from_permutation(w.w1)), F_);
  LocalMatrix taum(m_);
  std::vector<int> d = w.tau.diagonal();
  for (int i = 1; i <= m_; ++i) taum.set(i, i, LocalScalar::monomial(1, d[i - 1]));
  out = out.mul(taum, F_);
  out = out.mul(LocalMatrix::from_residue(ResidueMatrix::from_permutation(w.w2)), F_);
  out = out.mul(LocalMatrix::from_residue(ResidueMatrix::from_unipotent(w.u2)), F_);
  return out;
}

void OracleContext::clear_cache() const {
  dc_index_.clear();
  dc_orbits_.clear();
}

}  // namespace hecke::oracle
