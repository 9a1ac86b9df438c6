#include "turan/galois_field.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "turan/bounds.hpp"

namespace turan {

namespace {

int conway_style_modulus(int q) {
  switch (q) {
    case 4: return 7;    // x^2+x+1
    case 8: return 11;   // x^3+x+1
    case 16: return 19;  // x^4+x+1
    case 32: return 37;  // x^5+x^2+1
    case 64: return 67;  // x^6+x+1
    case 9: return 10;   // x^2+1
    case 27: return 34;  // x^3+2x+1
    case 25: return 27;  // x^2+2
    case 49: return 50;  // x^2+1
    default: return q;   // prime field
  }
}

std::vector<int> digits(int value, int p, int count) {
  std::vector<int> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

int encode(const std::vector<int>& coeffs, int p) {
  int value = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) value = value * p + coeffs[i];
  return value;
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  const auto pk = q <= 64 ? prime_power(q) : std::nullopt;
  if (!pk) throw std::invalid_argument("GF(" + std::to_string(q) + "): order must be a prime power <= 64");
  p_ = pk->first;
  k_ = pk->second;
  modulus_ = conway_style_modulus(q);

  const std::vector<int> mod = digits(modulus_, p_, k_ + 1);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p_, k_);
    std::vector<int> dn(k_);
    for (int i = 0; i < k_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(dn, p_);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p_, k_);
      std::vector<int> sum(k_);
      for (int i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = encode(sum, p_);

      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
      // Reduce modulo the monic modulus from the top degree down.
      for (int d = 2 * k_ - 2; d >= k_; --d) {
        const int c = prod[d];
        if (c == 0) continue;
        for (int j = 0; j <= k_; ++j) prod[d - k_ + j] = ((prod[d - k_ + j] - c * mod[j]) % p_ + p_) % p_;
      }
      prod.resize(k_);
      mul_[a * q + b] = encode(prod, p_);
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (mul(a, b) == 1) inv_[a] = b;
    }
  }
  verify();
}

void GaloisField::verify() const {
  auto fail = [&](const char* what) {
    throw std::logic_error("GF(" + std::to_string(q_) + ") table check failed: " + what);
  };
  for (int a = 0; a < q_; ++a) {
    if (add(a, 0) != a || mul(a, 1) != a || mul(a, 0) != 0) fail("identity");
    if (add(a, neg(a)) != 0) fail("additive inverse");
    if (a != 0 && (inv_[a] == 0 || mul(a, inv_[a]) != 1)) fail("multiplicative inverse");
    for (int b = 0; b < q_; ++b) {
      if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a)) fail("commutativity");
      for (int c = 0; c < q_; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("additive associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("multiplicative associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
      }
    }
  }
}

int GaloisField::inv(int a) const {
  if (a == 0) throw std::domain_error("GF: zero has no inverse");
  return inv_[a];
}

const GaloisField& GaloisField::of(int q) {
  if (q < 0 || q > 64) throw std::invalid_argument("GF(" + std::to_string(q) + "): order must be <= 64");
  static std::array<std::once_flag, 65> once;
  static std::array<std::unique_ptr<GaloisField>, 65> cache;
  // A throwing constructor leaves the flag unset, so the error propagates on every call.
  std::call_once(once[q], [q] { cache[q] = std::make_unique<GaloisField>(q); });
  return *cache[q];
}

}  // namespace turan
