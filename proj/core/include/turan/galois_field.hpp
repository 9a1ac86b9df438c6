#pragma once

#include <vector>

namespace turan {

/// GF(q) for a prime power q <= 64, as full addition and multiplication tables.
///
/// Element a encodes the polynomial sum_i c_i x^i with c_i the base-p digits
/// of a. Extension fields reduce modulo the monic irreducible polynomial of
/// degree k with the smallest such encoding:
///
///   q=4: x^2+x+1    q=8: x^3+x+1     q=16: x^4+x+1   q=32: x^5+x^2+1
///   q=64: x^6+x+1   q=9: x^2+1       q=27: x^3+2x+1  q=25: x^2+2
///   q=49: x^2+1
///
/// The constructor checks every field axiom on the finished tables.
class GaloisField {
 public:
  /// Throws std::invalid_argument unless q is a prime power in [2, 64].
  explicit GaloisField(int q);

  /// Shared immutable instance; built once per order.
  static const GaloisField& of(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  /// Encoded modulus including the leading x^k term (p for prime fields).
  int modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for 0.
  int inv(int a) const;

 private:
  void verify() const;

  int q_;
  int p_;
  int k_;
  int modulus_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
};

}  // namespace turan
