#include "hecke/fq.hpp"

#include <numeric>

namespace hecke {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<unsigned>;  // coefficients mod p, ascending degree

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  const size_t dm = m.size() - 1;
  while (a.size() > dm) {
    unsigned lead = a.back();
    if (lead != 0) {
      // m is monic, so subtract lead * X^(deg a - dm) * m
      size_t shift = a.size() - 1 - dm;
      for (size_t k = 0; k <= dm; ++k)
        a[shift + k] = (a[shift + k] + p * p - lead * m[k] % p) % p;
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(c), m, p);
}

Poly from_index(unsigned idx, unsigned p) {
  Poly a;
  while (idx) {
    a.push_back(idx % p);
    idx /= p;
  }
  return a;
}

unsigned to_index(const Poly& a, unsigned p) {
  unsigned idx = 0;
  for (size_t k = a.size(); k-- > 0;) idx = idx * p + a[k];
  return idx;
}

// True if the monic candidate has no monic divisor of degree 1..f/2.
bool is_irreducible(const Poly& m, unsigned p) {
  unsigned f = static_cast<unsigned>(m.size()) - 1;
  for (unsigned d = 1; 2 * d <= f; ++d) {
    // enumerate monic polys of degree d
    unsigned count = 1;
    for (unsigned k = 0; k < d; ++k) count *= p;
    for (unsigned lo = 0; lo < count; ++lo) {
      Poly g = from_index(lo, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      // trial division: compute m mod g
      Poly r(m);
      while (r.size() >= g.size() && !r.empty()) {
        unsigned lead = r.back();
        if (lead != 0) {
          size_t shift = r.size() - g.size();
          for (size_t k = 0; k < g.size(); ++k)
            r[shift + k] = (r[shift + k] + p * p - lead * g[k] % p) % p;
        }
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
      }
      if (r.empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(unsigned p, unsigned f) {
  if (f == 1) return {0, 1};  // X (unused as modulus; arithmetic is mod p)
  unsigned count = 1;
  for (unsigned k = 0; k < f; ++k) count *= p;
  for (unsigned lo = 0; lo < count; ++lo) {
    Poly m = from_index(lo, p);
    m.resize(f + 1, 0);
    m[f] = 1;
    if (is_irreducible(m, p)) return m;
  }
  throw std::logic_error("GaloisField: no irreducible polynomial found");
}

}  // namespace

GaloisField::GaloisField(unsigned p, unsigned f) : p_(p), f_(f) {
  if (!is_prime(p)) throw std::invalid_argument("GaloisField: p not prime");
  if (f < 1) throw std::invalid_argument("GaloisField: f < 1");
  q_ = 1;
  for (unsigned k = 0; k < f; ++k) {
    if (q_ > 65535 / p) throw std::invalid_argument("GaloisField: q too large");
    q_ *= p;
  }
  Poly mod = smallest_irreducible(p, f);

  add_.resize(static_cast<size_t>(q_) * q_);
  mul_.resize(static_cast<size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.resize(q_);
  frob_.resize(q_);

  for (unsigned a = 0; a < q_; ++a) {
    Poly pa = from_index(a, p_);
    for (unsigned b = 0; b < q_; ++b) {
      Poly pb = from_index(b, p_);
      Poly s(std::max(pa.size(), pb.size()), 0);
      for (size_t k = 0; k < s.size(); ++k) {
        unsigned x = (k < pa.size() ? pa[k] : 0) + (k < pb.size() ? pb[k] : 0);
        s[k] = x % p_;
      }
      while (!s.empty() && s.back() == 0) s.pop_back();
      add_[a * q_ + b] = to_index(s, p_);
      mul_[a * q_ + b] = to_index(poly_mul(pa, pb, mod, p_), p_);
    }
  }
  for (unsigned a = 0; a < q_; ++a) {
    Poly pa = from_index(a, p_);
    for (auto& c : pa) c = (p_ - c) % p_;
    while (!pa.empty() && pa.back() == 0) pa.pop_back();
    neg_[a] = to_index(pa, p_);
  }
  inv_[0] = 0;
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
  for (unsigned a = 0; a < q_; ++a) {
    FqElem r = a;
    for (unsigned k = 1; k < p_; ++k) r = mul_[r * q_ + a];
    frob_[a] = r;  // a^p
  }
  gen_ = 0;
  for (unsigned a = 2; a < q_; ++a) {
    FqElem x = a;
    unsigned ord = 1;
    while (x != 1) {
      x = mul_[x * q_ + a];
      ++ord;
    }
    if (ord == q_ - 1) {
      gen_ = a;
      break;
    }
  }
  if (q_ == 2) gen_ = 1;
}

FqElem GaloisField::frob_pow(FqElem a, long k) const {
  long r = ((k % static_cast<long>(f_)) + f_) % f_;
  FqElem x = a;
  for (long i = 0; i < r; ++i) x = frob_[x];
  return x;
}

FqElem GaloisField::pow(FqElem a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  FqElem r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<FqElem> GaloisField::units() const {
  std::vector<FqElem> u;
  for (unsigned a = 1; a < q_; ++a) u.push_back(a);
  return u;
}

}  // namespace hecke
