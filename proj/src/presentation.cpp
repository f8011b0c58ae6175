#include "hecke/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hecke {

namespace {

// Roots g in Phi+ with w(g) in Phi+ / Phi-.
std::vector<Root> pos_sent_positive(const Permutation& w) {
  std::vector<Root> out;
  for (const Root& g : weyl::positive_roots(w.degree()))
    if (w.act(g).positive()) out.push_back(g);
  return out;
}

std::vector<Root> pos_sent_negative(const Permutation& w) {
  std::vector<Root> out;
  for (const Root& g : weyl::positive_roots(w.degree()))
    if (!w.act(g).positive()) out.push_back(g);
  return out;
}

}  // namespace

bool NormalWord::operator<(const NormalWord& o) const {
  if (tau0 != o.tau0) return tau0 < o.tau0;
  if (tau.a != o.tau.a) return tau.a < o.tau.a;
  if (w1.one_line() != o.w1.one_line()) return w1.one_line() < o.w1.one_line();
  if (w2.one_line() != o.w2.one_line()) return w2.one_line() < o.w2.one_line();
  if (t.entries() != o.t.entries()) return t.entries() < o.t.entries();
  if (u1.entries() != o.u1.entries()) return u1.entries() < o.u1.entries();
  return u2.entries() < o.u2.entries();
}

bool NormalWord::is_trivial() const {
  return u1.is_identity() && t.is_identity() && tau0 == 0 && w1.is_identity() &&
         tau.is_trivial() && w2.is_identity() && u2.is_identity();
}

GeneratorToken GeneratorToken::unipotent(ResidueUnipotent u) {
  GeneratorToken g{Kind::Unipotent};
  g.u = std::move(u);
  return g;
}
GeneratorToken GeneratorToken::torus(TorusElem t) {
  GeneratorToken g{Kind::Torus};
  g.t = std::move(t);
  return g;
}
GeneratorToken GeneratorToken::tau0(int eps) {
  GeneratorToken g{Kind::Tau0};
  g.eps = eps;
  return g;
}
GeneratorToken GeneratorToken::simple(int alpha) {
  GeneratorToken g{Kind::Simple};
  g.alpha = alpha;
  return g;
}
GeneratorToken GeneratorToken::tau_alpha(int alpha) {
  GeneratorToken g{Kind::TauAlpha};
  g.alpha = alpha;
  return g;
}

mpz_class AlgebraElement::coeff(const NormalWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void AlgebraElement::add_term(const NormalWord& w, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) it->second += c;
  if (modulus_) it->second %= static_cast<long>(*modulus_);
  if (modulus_ && it->second < 0) it->second += static_cast<long>(*modulus_);
  if (it->second == 0) terms_.erase(it);
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (modulus_ && o.modulus_ && *modulus_ != *o.modulus_)
    throw std::invalid_argument("AlgebraElement: modulus mismatch");
  AlgebraElement r(*this);
  if (!r.modulus_) r.modulus_ = o.modulus_;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

AlgebraElement AlgebraElement::scaled(const mpz_class& c) const {
  AlgebraElement r(modulus_);
  for (const auto& [w, x] : terms_) r.add_term(w, x * c);
  return r;
}

AlgebraElement AlgebraElement::reduced_mod(unsigned long ell) const {
  if (ell < 2) throw std::invalid_argument("reduced_mod: ell < 2");
  AlgebraElement r(ell);
  for (const auto& [w, x] : terms_) r.add_term(w, x);
  return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return terms_ == o.terms_;
}

HeckeAlgebra::HeckeAlgebra(int m, unsigned p, unsigned f, unsigned sigma_exp)
    : m_(m), F_(p, f), sigma_(sigma_exp) {
  if (m < 1) throw std::invalid_argument("HeckeAlgebra: m < 1");
}

NormalWord HeckeAlgebra::trivial_word() const {
  NormalWord w;
  w.u1 = ResidueUnipotent(m_);
  w.t = TorusElem(m_);
  w.tau0 = 0;
  w.w1 = Permutation(m_);
  w.tau = TauExponent(m_);
  w.w2 = Permutation(m_);
  w.u2 = ResidueUnipotent(m_);
  return w;
}

AlgebraElement HeckeAlgebra::unit() const {
  AlgebraElement e;
  e.add_term(trivial_word(), 1);
  return e;
}

AlgebraElement HeckeAlgebra::element_of(const NormalWord& w) const {
  AlgebraElement e;
  e.add_term(w, 1);
  return e;
}

bool HeckeAlgebra::is_normal(const NormalWord& x) const {
  if (!x.tau.in_delta()) return false;
  if (!weyl::is_minimal_in_left_cosets(x.tau.vanishing_set(), x.w2)) return false;
  if (!x.u1.supported_in(pos_sent_negative(x.w1.inverse()))) return false;
  if (!x.u2.supported_in(pos_sent_positive(x.w2))) return false;
  return true;
}

NormalWord HeckeAlgebra::normalize(const ResidueUnipotent& u1_in, const TorusElem& t,
                                   int tau0, const Permutation& w1_in,
                                   const TauExponent& tau, const Permutation& w2_in,
                                   const ResidueUnipotent& u2_in) const {
  if (!tau.in_delta())
    throw std::invalid_argument("normalize: tau not in the monoid");
  if (!u1_in.upper() || !u2_in.upper())
    throw std::invalid_argument("normalize: u1, u2 must lie in U(F_q)");
  const SimpleSubset P = tau.vanishing_set();

  // Merge the W_P-part of w2 into w1; tau centralizes W_P.
  auto [w3, w4] = weyl::min_decomp_right(P, w2_in);
  Permutation w1 = w1_in * w3;
  const Permutation& w2 = w4;

  // u1 conjugated through t and tau0^i.
  ResidueUnipotent u1p = residue::sigma_pow(
      residue::conj_by_torus(u1_in, t.inverse(F_), F_), -tau0, F_, sigma_);

  // u2 = u21 * u22 with w2(supp u21) in Psi_P^-; u21 is absorbed by f_tau.
  std::vector<Root> s_abs, s_keep;
  for (const Root& g : weyl::positive_roots(m_)) {
    Root h = w2.act(g);
    if (h.positive())
      s_keep.push_back(g);
    else if (!weyl::in_phi_p(P, h))
      s_abs.push_back(g);
    else
      throw std::logic_error("normalize: w2 not minimal for P(tau)");
  }
  auto [u21, u22] = residue::factor_unipotent(u2_in, s_abs, s_keep, F_);
  (void)u21;

  // u1' = a * b * c with w1^{-1}(supp a) negative, w1^{-1}(supp b) in
  // Phi_P^+, w1^{-1}(supp c) in Psi_P^+; c is absorbed, b passes through
  // tau and w2 into the u2 slot.
  std::vector<Root> s_a, s_b, s_c, s_bc;
  for (const Root& g : weyl::positive_roots(m_)) {
    Root h = w1.inverse().act(g);
    if (!h.positive()) {
      s_a.push_back(g);
    } else if (weyl::in_phi_p(P, h)) {
      s_b.push_back(g);
      s_bc.push_back(g);
    } else {
      s_c.push_back(g);
      s_bc.push_back(g);
    }
  }
  auto [a, bc] = residue::factor_unipotent(u1p, s_a, s_bc, F_);
  auto [b, c] = residue::factor_unipotent(bc, s_b, s_c, F_);
  (void)c;

  ResidueUnipotent v = residue::conj_by_perm(b, w1.inverse());
  v = residue::conj_by_tau(v, tau, /*inverse=*/true, F_, sigma_);
  v = residue::conj_by_perm(v, w2.inverse());
  ResidueUnipotent u2f = residue::unipotent_mul(v, u22, F_);

  ResidueUnipotent u1f =
      residue::conj_by_torus(residue::sigma_pow(a, tau0, F_, sigma_), t, F_);

  NormalWord out;
  out.u1 = std::move(u1f);
  out.t = t;
  out.tau0 = tau0;
  out.w1 = std::move(w1);
  out.tau = tau;
  out.w2 = w2;
  out.u2 = std::move(u2f);
  assert(is_normal(out));
  return out;
}

NormalWord HeckeAlgebra::word_of_residue(const ResidueMatrix& k) const {
  residue::BruhatDecomp d = residue::residue_bruhat(k, F_);
  return normalize(d.u1, d.t, 0, d.w, TauExponent(m_), Permutation(m_), d.u2);
}

NormalWord HeckeAlgebra::word_tau0(int i) const {
  NormalWord w = trivial_word();
  w.tau0 = i;
  return w;
}

NormalWord HeckeAlgebra::word_tau(const TauExponent& tau) const {
  if (!tau.in_delta()) throw std::invalid_argument("word_tau: not in Delta");
  NormalWord w = trivial_word();
  w.tau = tau;
  return w;
}

NormalWord HeckeAlgebra::word_tau_alpha(int alpha) const {
  TauExponent tau(m_);
  tau.a[alpha - 1] = 1;
  return word_tau(tau);
}

NormalWord HeckeAlgebra::word_simple(int alpha) const {
  NormalWord w = trivial_word();
  w.w1 = Permutation::transposition(m_, alpha);
  return w;
}

NormalWord HeckeAlgebra::word_torus(const TorusElem& t) const {
  NormalWord w = trivial_word();
  w.t = t;
  return w;
}

NormalWord HeckeAlgebra::word_unipotent(const ResidueUnipotent& u) const {
  return normalize(ResidueUnipotent(m_), TorusElem(m_), 0, Permutation(m_),
                   TauExponent(m_), Permutation(m_), u);
}

std::vector<GeneratorToken> HeckeAlgebra::expand_to_tokens(const NormalWord& x) const {
  std::vector<GeneratorToken> toks;
  if (!x.u1.is_identity()) toks.push_back(GeneratorToken::unipotent(x.u1));
  if (!x.t.is_identity()) toks.push_back(GeneratorToken::torus(x.t));
  for (int k = 0; k < std::abs(x.tau0); ++k)
    toks.push_back(GeneratorToken::tau0(x.tau0 > 0 ? 1 : -1));
  for (int j : weyl::reduced_word(x.w1)) toks.push_back(GeneratorToken::simple(j));
  for (int h = 1; h <= m_ - 1; ++h)
    for (int k = 0; k < x.tau.a[h - 1]; ++k)
      toks.push_back(GeneratorToken::tau_alpha(h));
  for (int j : weyl::reduced_word(x.w2)) toks.push_back(GeneratorToken::simple(j));
  if (!x.u2.is_identity()) toks.push_back(GeneratorToken::unipotent(x.u2));
  return toks;
}

std::vector<ResidueUnipotent> HeckeAlgebra::coset_unipotents(const Permutation& w) const {
  std::vector<Root> roots = pos_sent_negative(w.inverse());
  std::vector<ResidueUnipotent> out;
  const unsigned q = F_.q();
  unsigned long long total = 1;
  for (size_t k = 0; k < roots.size(); ++k) total *= q;
  for (unsigned long long idx = 0; idx < total; ++idx) {
    ResidueUnipotent u(m_);
    unsigned long long v = idx;
    ResidueMatrix acc = ResidueMatrix::identity(m_);
    for (const Root& g : roots) {
      FqElem c = static_cast<FqElem>(v % q);
      v /= q;
      if (c != 0)
        acc = acc.mul(ResidueMatrix::from_unipotent(
                          ResidueUnipotent::elementary(m_, g, c)),
                      F_);
    }
    out.push_back(acc.to_unipotent());
  }
  return out;
}

AlgebraElement HeckeAlgebra::token_element(const GeneratorToken& g) const {
  return mul_gen(unit(), g);
}

AlgebraElement HeckeAlgebra::mul_gen(const AlgebraElement& a,
                                     const GeneratorToken& g) const {
  AlgebraElement out(a.modulus());
  for (const auto& [x, c] : a.terms()) {
    AlgebraElement part = mul_word_gen(x, g);
    for (const auto& [w, d] : part.terms()) out.add_term(w, c * d);
  }
  return out;
}

AlgebraElement HeckeAlgebra::mul_word_gen(const NormalWord& x,
                                          const GeneratorToken& g) const {
  AlgebraElement out;
  switch (g.kind) {
    case GeneratorToken::Kind::Unipotent: {
      if (!g.u.upper()) throw std::invalid_argument("mul_gen: token not in U");
      ResidueUnipotent u2 = residue::unipotent_mul(x.u2, g.u, F_);
      out.add_term(normalize(x.u1, x.t, x.tau0, x.w1, x.tau, x.w2, u2), 1);
      return out;
    }
    case GeneratorToken::Kind::Torus: {
      // f_x f_t = f_{u1 . t*c . tau0^i w1 tau w2 . (t^-1 u2 t)} with
      // c the conjugate of the token through tau0^i w1 tau w2.
      TorusElem c = residue::conj_torus_by_perm(g.t, x.w2);
      c = residue::conj_torus_by_tau(c, x.tau, F_, sigma_);
      c = residue::conj_torus_by_perm(c, x.w1);
      c = residue::sigma_pow(c, x.tau0, F_, sigma_);
      TorusElem t = x.t.mul(c, F_);
      ResidueUnipotent u2 = residue::conj_by_torus(x.u2, g.t.inverse(F_), F_);
      out.add_term(normalize(x.u1, t, x.tau0, x.w1, x.tau, x.w2, u2), 1);
      return out;
    }
    case GeneratorToken::Kind::Tau0: {
      if (g.eps != 1 && g.eps != -1)
        throw std::invalid_argument("mul_gen: tau0 exponent must be +-1");
      ResidueUnipotent u2 = residue::sigma_pow(x.u2, -g.eps, F_, sigma_);
      out.add_term(normalize(x.u1, x.t, x.tau0 + g.eps, x.w1, x.tau, x.w2, u2), 1);
      return out;
    }
    case GeneratorToken::Kind::Simple: {
      const int a = g.alpha;
      const Root ar{a, a + 1};
      const Permutation s = Permutation::transposition(m_, a);
      std::vector<Root> s1{ar}, s2;
      for (const Root& r : weyl::positive_roots(m_))
        if (!(r == ar)) s2.push_back(r);
      auto [v1, v2] = residue::factor_unipotent(x.u2, s1, s2, F_);
      const FqElem xv = v1.entry(ar);
      if (xv == 0) {
        ResidueUnipotent u2 = residue::conj_by_perm(v2, s);
        out.add_term(normalize(x.u1, x.t, x.tau0, x.w1, x.tau, x.w2 * s, u2), 1);
        return out;
      }
      const SimpleSubset P = x.tau.vanishing_set();
      const Root beta = x.w2.act(ar);
      assert(beta.positive());
      if (!weyl::in_phi_p(P, beta)) {
        // beta in Psi_P^+: the lower part of the rank-1 break is absorbed.
        residue::Sl2Break br = residue::sl2_bruhat(xv, a, m_, F_);
        TorusElem c = residue::conj_torus_by_perm(br.t, x.w2);
        c = residue::conj_torus_by_tau(c, x.tau, F_, sigma_);
        c = residue::conj_torus_by_perm(c, x.w1);
        c = residue::sigma_pow(c, x.tau0, F_, sigma_);
        TorusElem t = x.t.mul(c, F_);
        ResidueUnipotent u2 =
            residue::unipotent_mul(br.v4, residue::conj_by_perm(v2, s), F_);
        out.add_term(normalize(x.u1, t, x.tau0, x.w1, x.tau, x.w2, u2), 1);
        return out;
      }
      const Root wbeta = x.w1.act(beta);
      if (!wbeta.positive()) {
        // beta in Phi_P^+, w1(beta) negative: break, then drag the lower
        // part through tau, w1, tau0^i and t into the u1 slot.
        residue::Sl2Break br = residue::sl2_bruhat(xv, a, m_, F_);
        ResidueUnipotent vt =
            ResidueUnipotent::elementary(m_, -beta, F_.inv(xv));
        vt = residue::conj_by_tau(vt, x.tau, /*inverse=*/false, F_, sigma_);
        vt = residue::conj_by_perm(vt, x.w1);
        vt = residue::sigma_pow(vt, x.tau0, F_, sigma_);
        vt = residue::conj_by_torus(vt, x.t, F_);
        ResidueUnipotent u1 = residue::unipotent_mul(x.u1, vt, F_);
        TorusElem c = residue::conj_torus_by_perm(br.t, x.w2);
        c = residue::conj_torus_by_tau(c, x.tau, F_, sigma_);
        c = residue::conj_torus_by_perm(c, x.w1);
        c = residue::sigma_pow(c, x.tau0, F_, sigma_);
        TorusElem t = x.t.mul(c, F_);
        ResidueUnipotent u2 =
            residue::unipotent_mul(br.v4, residue::conj_by_perm(v2, s), F_);
        out.add_term(normalize(u1, t, x.tau0, x.w1, x.tau, x.w2, u2), 1);
        return out;
      }
      // beta in Phi_P^+, w1(beta) positive: no break; the whole U_alpha
      // entry passes through tau, w1, tau0^i and t into the u1 slot.
      ResidueUnipotent vt = ResidueUnipotent::elementary(m_, beta, xv);
      vt = residue::conj_by_tau(vt, x.tau, /*inverse=*/false, F_, sigma_);
      vt = residue::conj_by_perm(vt, x.w1);
      vt = residue::sigma_pow(vt, x.tau0, F_, sigma_);
      vt = residue::conj_by_torus(vt, x.t, F_);
      ResidueUnipotent u1 = residue::unipotent_mul(x.u1, vt, F_);
      ResidueUnipotent u2 = residue::conj_by_perm(v2, s);
      out.add_term(normalize(u1, x.t, x.tau0, x.w1, x.tau, x.w2 * s, u2), 1);
      return out;
    }
    case GeneratorToken::Kind::TauAlpha: {
      const int a = g.alpha;
      const SimpleSubset ahat = SimpleSubset(m_, {a}).complement();
      auto [phi_ahat, psi_ahat] = weyl::root_sets(ahat);
      auto [v1, v2] = residue::factor_unipotent(x.u2, phi_ahat, psi_ahat, F_);
      (void)v2;  // absorbed into f_{tau_alpha}
      TauExponent tau_a(m_);
      tau_a.a[a - 1] = 1;
      ResidueUnipotent v1p =
          residue::conj_by_tau(v1, tau_a, /*inverse=*/true, F_, sigma_);

      auto [w, w5] = weyl::min_decomp_left(x.w2, ahat);
      (void)w5;
      auto [Pwa, Q] = weyl::pq_sets(w, a);
      TauExponent tau2 = x.tau;
      for (int h : Pwa.indices()) {
        tau2.a[h - 1] -= 1;
        if (tau2.a[h - 1] < 0)
          throw std::logic_error("mul_gen: tau exponent went negative");
      }
      int eps = 0;
      for (int h : Q) {
        if (h == 0)
          eps = 1;
        else
          tau2.a[h - 1] += 1;
      }
      mpz_class qlw = 1;
      for (std::size_t k = 0; k < weyl::length(w); ++k) qlw *= F_.q();

      std::vector<GeneratorToken> tail;
      for (int j : weyl::reduced_word(x.w2))
        tail.push_back(GeneratorToken::simple(j));
      if (!v1p.is_identity()) tail.push_back(GeneratorToken::unipotent(v1p));

      for (const ResidueUnipotent& u : coset_unipotents(w)) {
        AlgebraElement cur;
        cur.add_term(
            normalize(x.u1, x.t, x.tau0 + eps, x.w1, tau2, Permutation(m_), u),
            qlw);
        for (const GeneratorToken& tok : tail) cur = mul_gen(cur, tok);
        for (const auto& [word, coeff] : cur.terms()) out.add_term(word, coeff);
      }
      return out;
    }
  }
  throw std::logic_error("mul_gen: unreachable");
}

AlgebraElement HeckeAlgebra::mul(const AlgebraElement& a,
                                 const AlgebraElement& b) const {
  if (a.modulus() && b.modulus() && *a.modulus() != *b.modulus())
    throw std::invalid_argument("mul: modulus mismatch");
  std::optional<unsigned long> mod = a.modulus() ? a.modulus() : b.modulus();
  AlgebraElement out(mod);
  for (const auto& [y, cy] : b.terms()) {
    AlgebraElement cur = a;
    for (const GeneratorToken& tok : expand_to_tokens(y)) cur = mul_gen(cur, tok);
    for (const auto& [w, c] : cur.terms()) out.add_term(w, c * cy);
  }
  return out;
}

bool HeckeAlgebra::relation_check(int n, const RelationInstance& inst) const {
  switch (n) {
    case 1: {
      AlgebraElement lhs = mul(element_of(word_of_residue(inst.k1)),
                               element_of(word_of_residue(inst.k2)));
      return lhs == element_of(word_of_residue(inst.k1.mul(inst.k2, F_)));
    }
    case 2: {
      AlgebraElement two_sided =
          mul(element_of(word_tau0(1)), element_of(word_tau0(-1)));
      if (!(two_sided == unit())) return false;
      if (!inst.omega) return true;
      const GeneratorToken& om = *inst.omega;
      AlgebraElement lhs = mul_gen(element_of(word_tau0(-1)), om);
      GeneratorToken conj = om;  // tau0^{-1} omega tau0
      switch (om.kind) {
        case GeneratorToken::Kind::Unipotent:
          conj.u = residue::sigma_pow(om.u, -1, F_, sigma_);
          break;
        case GeneratorToken::Kind::Torus:
          conj.t = residue::sigma_pow(om.t, -1, F_, sigma_);
          break;
        default:
          break;  // tau0, s_alpha, tau_alpha commute with tau0
      }
      AlgebraElement rhs = mul_gen(token_element(conj), GeneratorToken::tau0(-1));
      return lhs == rhs;
    }
    case 3: {
      AlgebraElement lhs =
          mul_gen(element_of(word_tau_alpha(inst.alpha)), GeneratorToken::torus(inst.t));
      TauExponent ta(m_);
      ta.a[inst.alpha - 1] = 1;
      TorusElem conj = residue::conj_torus_by_tau(inst.t, ta, F_, sigma_);
      AlgebraElement rhs = mul_gen(element_of(word_torus(conj)),
                                   GeneratorToken::tau_alpha(inst.alpha));
      return lhs == rhs;
    }
    case 4: {
      const SimpleSubset ahat = SimpleSubset(m_, {inst.alpha}).complement();
      if (!weyl::in_phi_p(ahat, inst.root))
        throw std::invalid_argument("relation 4: root not in Phi_{alpha-hat}");
      ResidueUnipotent u = ResidueUnipotent::elementary(m_, inst.root, inst.x);
      AlgebraElement fu =
          element_of(word_of_residue(ResidueMatrix::from_unipotent(u)));
      AlgebraElement lhs = mul(element_of(word_tau_alpha(inst.alpha)), fu);
      TauExponent ta(m_);
      ta.a[inst.alpha - 1] = 1;
      ResidueUnipotent uc = residue::conj_by_tau(u, ta, false, F_, sigma_);
      AlgebraElement fuc =
          element_of(word_of_residue(ResidueMatrix::from_unipotent(uc)));
      AlgebraElement rhs = mul(fuc, element_of(word_tau_alpha(inst.alpha)));
      return lhs == rhs;
    }
    case 5: {
      const SimpleSubset ahat = SimpleSubset(m_, {inst.alpha}).complement();
      if (!inst.root.positive() || weyl::in_phi_p(ahat, inst.root))
        throw std::invalid_argument("relation 5: root not in Psi_{alpha-hat}^+");
      ResidueUnipotent u = ResidueUnipotent::elementary(m_, inst.root, inst.x);
      AlgebraElement lhs = mul(element_of(word_unipotent(u)),
                               element_of(word_tau_alpha(inst.alpha)));
      return lhs == element_of(word_tau_alpha(inst.alpha));
    }
    case 6: {
      const SimpleSubset ahat = SimpleSubset(m_, {inst.alpha}).complement();
      if (inst.root.positive() || weyl::in_phi_p(ahat, inst.root))
        throw std::invalid_argument("relation 6: root not in Psi_{alpha-hat}^-");
      ResidueUnipotent u = ResidueUnipotent::elementary(m_, inst.root, inst.x);
      AlgebraElement fu =
          element_of(word_of_residue(ResidueMatrix::from_unipotent(u)));
      AlgebraElement lhs = mul(element_of(word_tau_alpha(inst.alpha)), fu);
      return lhs == element_of(word_tau_alpha(inst.alpha));
    }
    case 7: {
      if (inst.alpha == inst.alpha2)
        throw std::invalid_argument("relation 7: alpha == alpha'");
      AlgebraElement lhs = mul(element_of(word_tau_alpha(inst.alpha)),
                               element_of(word_simple(inst.alpha2)));
      AlgebraElement rhs = mul(element_of(word_simple(inst.alpha2)),
                               element_of(word_tau_alpha(inst.alpha)));
      return lhs == rhs;
    }
    case 8: {
      AlgebraElement lhs = mul(element_of(word_tau_alpha(inst.alpha)),
                               element_of(word_tau_alpha(inst.alpha2)));
      AlgebraElement rhs = mul(element_of(word_tau_alpha(inst.alpha2)),
                               element_of(word_tau_alpha(inst.alpha)));
      return lhs == rhs;
    }
    case 9: {
      const SimpleSubset ahat = SimpleSubset(m_, {inst.alpha}).complement();
      const Permutation wi = inst.w.inverse();
      if (!weyl::is_minimal_in_left_cosets(ahat, wi))
        throw std::invalid_argument("relation 9: w not minimal in wW_{alpha-hat}");
      auto [Pwa, Q] = weyl::pq_sets(inst.w, inst.alpha);
      AlgebraElement lhs = unit();
      for (int h : Pwa.indices()) lhs = mul_gen(lhs, GeneratorToken::tau_alpha(h));
      for (int j : weyl::reduced_word(inst.w))
        lhs = mul_gen(lhs, GeneratorToken::simple(j));
      lhs = mul_gen(lhs, GeneratorToken::tau_alpha(inst.alpha));
      for (int j : weyl::reduced_word(wi))
        lhs = mul_gen(lhs, GeneratorToken::simple(j));

      AlgebraElement tq = unit();
      for (int h : Q)
        tq = mul_gen(tq, h == 0 ? GeneratorToken::tau0(1)
                                : GeneratorToken::tau_alpha(h));
      AlgebraElement rhs;
      for (const ResidueUnipotent& u : coset_unipotents(inst.w)) {
        AlgebraElement term =
            u.is_identity() ? tq : mul_gen(tq, GeneratorToken::unipotent(u));
        rhs = rhs + term;
      }
      mpz_class qlw = 1;
      for (std::size_t k = 0; k < weyl::length(inst.w); ++k) qlw *= F_.q();
      rhs = rhs.scaled(qlw);
      return lhs == rhs;
    }
    default:
      throw std::invalid_argument("relation_check: n must be 1..9");
  }
}

}  // namespace hecke
