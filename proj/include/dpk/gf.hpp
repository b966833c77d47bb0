#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpk::gf {

// Element of F_{p^k}, encoded as base-p digits of its polynomial
// representative: value = c0 + c1*p + ... + c_{k-1}*p^{k-1}.
using Elt = uint16_t;

struct FieldSpec {
  int p = 3;
  int k = 1;
  // Monic modulus c0 + c1*t + ... + t^k (coefficient list of length k+1,
  // top coefficient 1). Ignored when k == 1.
  std::vector<int> modulus;

  std::string modulus_string(const std::string& gen = "t") const;
  static FieldSpec parse_modulus(int p, const std::string& src);
  bool operator==(const FieldSpec& o) const;
};

class Field {
 public:
  explicit Field(const FieldSpec& spec);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const FieldSpec& spec() const { return spec_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt gen() const { return k_ > 1 ? Elt(p_) : Elt(1); }

  Elt from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return Elt(r);
  }

  Elt add(Elt a, Elt b) const { return add_[size_t(a) * q_ + b]; }
  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt mul(Elt a, Elt b) const { return mul_[size_t(a) * q_ + b]; }
  Elt inv(Elt a) const;
  Elt pow(Elt a, long long e) const;

  bool is_square(Elt a) const;
  // Some b with b*b == a; throws if a is not a square.
  Elt sqrt(Elt a) const;
  // Unique cube root when p == 3 (Frobenius is bijective).
  Elt cbrt3(Elt a) const;

  std::string to_string(Elt a, const std::string& gen = "t") const;

  // The canonical field with the smallest lexicographic monic irreducible
  // modulus for the given (p, k). Cached.
  static std::shared_ptr<const Field> make(int p, int k);
  static std::shared_ptr<const Field> make(const FieldSpec& spec);

  // Image of each element of `sub` under some field embedding sub -> sup.
  // Requires sub.k | sup.k and equal p.
  static std::vector<Elt> embedding(const Field& sub, const Field& sup);

 private:
  FieldSpec spec_;
  int p_, k_, q_;
  std::vector<Elt> mul_, add_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Smallest-lex monic irreducible polynomial of degree k over F_p.
std::vector<int> default_modulus(int p, int k);

}  // namespace dpk::gf
