#ifndef HECKE_TENSOR_HPP
#define HECKE_TENSOR_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <vector>

#include "hecke/presentation.hpp"

namespace hecke::tensor {

// Basis word of a product of r factor algebras: one normal word per slot.
struct ProductWord {
  std::vector<NormalWord> parts;

  bool operator==(const ProductWord&) const = default;
  bool operator<(const ProductWord& o) const;
};

class ProductElement {
public:
  const std::map<ProductWord, mpz_class>& terms() const { return terms_; }
  void add_term(const ProductWord& w, const mpz_class& c);
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const ProductElement& o) const { return terms_ == o.terms_; }

private:
  std::map<ProductWord, mpz_class> terms_;
};

// Product of r Hecke algebras with independent (m, q, s) parameters.
class TensorAlgebra {
public:
  explicit TensorAlgebra(std::vector<HeckeAlgebra> factors);

  std::size_t rank() const { return factors_.size(); }
  const HeckeAlgebra& factor(std::size_t i) const { return factors_[i]; }

  ProductWord trivial_word() const;
  ProductElement unit() const;
  ProductElement element_of(const ProductWord& w) const;

  // Pure tensor with the given word in slot i and units elsewhere.
  ProductWord slot_word(std::size_t i, const NormalWord& w) const;

  ProductElement tensor_mul(const ProductElement& a, const ProductElement& b) const;

private:
  std::vector<HeckeAlgebra> factors_;
};

}  // namespace hecke::tensor

#endif
