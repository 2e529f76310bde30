#include "dyform/dring.hpp"

#include <bit>
#include <stdexcept>

namespace dyform::dring {

namespace {

void require_same(const RingSpec& a, const RingSpec& b) {
  if (!same_spec(a, b))
    throw std::invalid_argument("ring elements from different GR(2^m,f) specs");
}

RingElem pow_q(const RingElem& x) {
  // x^q by f squarings.
  RingElem r = x;
  for (int i = 0; i < x.spec->field.f; ++i) r = mul(r, r);
  return r;
}

}  // namespace

RingSpec make_ring(const gf2::FieldSpec& field, int m) {
  if (m < 1 || m > kMaxPrecision)
    throw std::invalid_argument("ring precision m must be in [1," +
                                std::to_string(kMaxPrecision) + "]");
  RingSpec r;
  r.field = field;
  r.m = m;
  r.mask = static_cast<std::uint32_t>((std::uint64_t{1} << m) - 1);
  return r;
}

bool same_spec(const RingSpec& a, const RingSpec& b) {
  return a.m == b.m && gf2::same_spec(a.field, b.field);
}

RingElem zero(const RingSpec& r) {
  RingElem x;
  x.spec = &r;
  return x;
}

RingElem one(const RingSpec& r) {
  RingElem x = zero(r);
  x.c[0] = 1 & r.mask;
  return x;
}

RingElem from_int(const RingSpec& r, std::int64_t v) {
  RingElem x = zero(r);
  x.c[0] = static_cast<std::uint32_t>(v & r.mask);
  return x;
}

RingElem add(const RingElem& a, const RingElem& b) {
  require_same(*a.spec, *b.spec);
  const RingSpec& r = *a.spec;
  RingElem x = zero(r);
  for (int i = 0; i < r.field.f; ++i) x.c[i] = (a.c[i] + b.c[i]) & r.mask;
  return x;
}

RingElem sub(const RingElem& a, const RingElem& b) {
  require_same(*a.spec, *b.spec);
  const RingSpec& r = *a.spec;
  RingElem x = zero(r);
  for (int i = 0; i < r.field.f; ++i) x.c[i] = (a.c[i] - b.c[i]) & r.mask;
  return x;
}

RingElem neg(const RingElem& a) {
  const RingSpec& r = *a.spec;
  RingElem x = zero(r);
  for (int i = 0; i < r.field.f; ++i)
    x.c[i] = (0u - a.c[i]) & r.mask;
  return x;
}

RingElem mul(const RingElem& a, const RingElem& b) {
  require_same(*a.spec, *b.spec);
  const RingSpec& r = *a.spec;
  const int f = r.field.f;
  const std::uint64_t mask = r.mask;

  // Schoolbook product, then reduce by the monic 0/1 modulus: x^f = -(low part).
  std::uint64_t prod[2 * gf2::kMaxDegree - 1] = {};
  for (int i = 0; i < f; ++i) {
    if (a.c[i] == 0) continue;
    const std::uint64_t ai = a.c[i];
    for (int j = 0; j < f; ++j)
      prod[i + j] = (prod[i + j] + ai * b.c[j]) & mask;
  }
  const std::uint64_t low = r.field.modulus & ~(std::uint64_t{1} << f);
  for (int k = 2 * f - 2; k >= f; --k) {
    const std::uint64_t top = prod[k];
    if (top == 0) continue;
    prod[k] = 0;
    for (int b2 = 0; b2 < f; ++b2)
      if (low >> b2 & 1) prod[k - f + b2] = (prod[k - f + b2] - top) & mask;
  }
  RingElem x = zero(r);
  for (int i = 0; i < f; ++i) x.c[i] = static_cast<std::uint32_t>(prod[i]);
  return x;
}

RingElem invert(const RingElem& x) {
  const RingSpec& r = *x.spec;
  const gf2::FieldElem res = reduce(x);
  if (gf2::is_zero(res))
    throw std::domain_error(
        "cannot invert: element has valuation >= 1 in O/p^m");
  RingElem y = lift01(gf2::inv(res), r);
  const RingElem two = from_int(r, 2);
  // Newton doubles the precision of x*y == 1 each round.
  for (int prec = 1; prec < r.m; prec *= 2) y = mul(y, sub(two, mul(x, y)));
  return y;
}

int valuation(const RingElem& x) {
  const RingSpec& r = *x.spec;
  int v = r.m;
  for (int i = 0; i < r.field.f; ++i) {
    if (x.c[i] == 0) continue;
    const int vi = std::countr_zero(x.c[i]);
    if (vi < v) v = vi;
  }
  return v;
}

bool is_zero(const RingElem& x) {
  for (int i = 0; i < x.spec->field.f; ++i)
    if (x.c[i] != 0) return false;
  return true;
}

bool eq_mod(const RingElem& x, const RingElem& y, int t) {
  require_same(*x.spec, *y.spec);
  if (t < 0 || t > x.spec->m)
    throw std::invalid_argument("congruence exponent t out of [0,m]");
  const std::uint32_t mask =
      static_cast<std::uint32_t>((std::uint64_t{1} << t) - 1);
  for (int i = 0; i < x.spec->field.f; ++i)
    if (((x.c[i] - y.c[i]) & mask) != 0) return false;
  return true;
}

RingElem teichmuller(gf2::FieldElem a, const RingSpec& r) {
  RingElem t = lift01(a, r);
  for (int i = 0; i < r.m; ++i) t = pow_q(t);
  return t;
}

RingElem lift01(gf2::FieldElem a, const RingSpec& r) {
  if (!gf2::same_spec(*a.spec, r.field))
    throw std::invalid_argument("field element does not match ring residue field");
  RingElem x = zero(r);
  for (int i = 0; i < r.field.f; ++i) x.c[i] = (a.bits >> i) & 1;
  return x;
}

gf2::FieldElem reduce(const RingElem& x) {
  std::uint64_t bits = 0;
  for (int i = 0; i < x.spec->field.f; ++i)
    bits |= static_cast<std::uint64_t>(x.c[i] & 1) << i;
  return {&x.spec->field, bits};
}

gf2::FieldElem reduce_div_uniformizer(const RingElem& x) {
  if (valuation(x) < 1)
    throw std::invalid_argument("reduce_div_uniformizer needs valuation >= 1");
  std::uint64_t bits = 0;
  for (int i = 0; i < x.spec->field.f; ++i)
    bits |= static_cast<std::uint64_t>((x.c[i] >> 1) & 1) << i;
  return {&x.spec->field, bits};
}

std::vector<std::uint64_t> to_teich_digits(const RingElem& x) {
  const RingSpec& r = *x.spec;
  std::vector<std::uint64_t> digits;
  digits.reserve(r.m);
  RingElem rem = x;
  for (int i = 0; i < r.m; ++i) {
    const gf2::FieldElem d = reduce(rem);
    digits.push_back(d.bits);
    rem = sub(rem, teichmuller(d, r));
    // rem now has valuation > i; shift one uniformizer digit down.
    RingElem shifted = zero(r);
    for (int j = 0; j < r.field.f; ++j) shifted.c[j] = rem.c[j] >> 1;
    rem = shifted;
  }
  return digits;
}

RingElem from_teich_digits(const RingSpec& r,
                           const std::vector<std::uint64_t>& digits) {
  if (static_cast<int>(digits.size()) > r.m)
    throw std::invalid_argument("more Teichmuller digits than precision m");
  RingElem x = zero(r);
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (digits[i] >= r.field.q)
      throw std::invalid_argument("Teichmuller digit out of residue field");
    // x = 2*x + teich(d_i), processed most-significant first.
    RingElem doubled = zero(r);
    for (int j = 0; j < r.field.f; ++j)
      doubled.c[j] = (x.c[j] << 1) & r.mask;
    x = add(doubled, teichmuller(gf2::FieldElem{&r.field, digits[i]}, r));
  }
  return x;
}

std::string to_string(const RingElem& x) {
  std::string s = "[";
  for (int i = 0; i < x.spec->field.f; ++i) {
    if (i) s += ",";
    s += std::to_string(x.c[i]);
  }
  return s + "]";
}

bool operator==(const RingElem& a, const RingElem& b) {
  if (!same_spec(*a.spec, *b.spec)) return false;
  for (int i = 0; i < a.spec->field.f; ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

}  // namespace dyform::dring
