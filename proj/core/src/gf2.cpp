#include "dyform/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace dyform::gf2 {

int poly_degree(std::uint64_t p) {
  if (p == 0) return -1;
  return 63 - std::countl_zero(p);
}

namespace {

// Carry-less product of two bit-packed polynomials.
std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    a <<= 1;
    b >>= 1;
  }
  return acc;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t mod) {
  const int dm = poly_degree(mod);
  int da = poly_degree(a);
  while (da >= dm) {
    a ^= mod << (da - dm);
    da = poly_degree(a);
  }
  return a;
}

// Quotient of exact or inexact division; remainder via poly_mod.
bool poly_divides(std::uint64_t d, std::uint64_t p) {
  return poly_mod(p, d) == 0;
}

}  // namespace

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return poly_mod(poly_mul(a, b), mod);
}

std::uint64_t poly_smallest_factor(std::uint64_t p) {
  const int d = poly_degree(p);
  if (d <= 1) return 0;
  // Trial division by all monic polynomials of degree 1..d/2, ascending.
  for (int e = 1; 2 * e <= d; ++e) {
    const std::uint64_t lead = std::uint64_t{1} << e;
    for (std::uint64_t low = 0; low < lead; ++low) {
      const std::uint64_t cand = lead | low;
      if (poly_divides(cand, p)) return cand;
    }
  }
  return 0;
}

bool poly_is_irreducible(std::uint64_t p) {
  const int d = poly_degree(p);
  if (d < 1) return false;
  if (d == 1) return true;
  return poly_smallest_factor(p) == 0;
}

std::string poly_to_string(std::uint64_t p) {
  if (p == 0) return "0";
  std::string s;
  for (int i = poly_degree(p); i >= 0; --i) {
    if (!(p >> i & 1)) continue;
    if (!s.empty()) s += "+";
    if (i == 0)
      s += "1";
    else if (i == 1)
      s += "x";
    else
      s += "x^" + std::to_string(i);
  }
  return s;
}

namespace {

std::uint64_t default_modulus(int f) {
  const std::uint64_t lead = std::uint64_t{1} << f;
  for (std::uint64_t low = 0; low < lead; ++low) {
    if (poly_is_irreducible(lead | low)) return lead | low;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::uint64_t raw_mul(std::uint64_t a, std::uint64_t b, const FieldSpec& k) {
  return poly_mulmod(a, b, k.modulus);
}

std::uint64_t raw_pow(std::uint64_t a, std::uint64_t e, const FieldSpec& k) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = raw_mul(r, a, k);
    a = raw_mul(a, a, k);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::uint64_t find_generator(const FieldSpec& k) {
  if (k.q == 2) return 1;
  const std::uint64_t order = k.q - 1;
  const auto ps = prime_factors(order);
  for (std::uint64_t g = 2; g < k.q; ++g) {
    bool primitive = true;
    for (std::uint64_t p : ps) {
      if (raw_pow(g, order / p, k) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw std::logic_error("no generator found");  // unreachable
}

void require_same(const FieldSpec& a, const FieldSpec& b) {
  if (!same_spec(a, b))
    throw std::invalid_argument("field elements from different GF(2^f) specs");
}

}  // namespace

FieldSpec make_field(int f) {
  if (f < 1 || f > kMaxDegree)
    throw std::invalid_argument("field degree f must be in [1," +
                                std::to_string(kMaxDegree) + "]");
  return make_field(f, default_modulus(f));
}

FieldSpec make_field(int f, std::uint64_t modulus) {
  if (f < 1 || f > kMaxDegree)
    throw std::invalid_argument("field degree f must be in [1," +
                                std::to_string(kMaxDegree) + "]");
  if (poly_degree(modulus) != f)
    throw std::invalid_argument("modulus " + poly_to_string(modulus) +
                                " has degree " +
                                std::to_string(poly_degree(modulus)) +
                                ", expected " + std::to_string(f));
  if (const std::uint64_t fac = poly_smallest_factor(modulus))
    throw std::invalid_argument("modulus " + poly_to_string(modulus) +
                                " is reducible: divisible by " +
                                poly_to_string(fac));
  FieldSpec k;
  k.f = f;
  k.modulus = modulus;
  k.q = std::uint64_t{1} << f;
  k.generator = find_generator(k);
  return k;
}

bool same_spec(const FieldSpec& a, const FieldSpec& b) {
  return a.f == b.f && a.modulus == b.modulus;
}

FieldElem elem(const FieldSpec& k, std::uint64_t bits) {
  if (bits >= k.q) throw std::invalid_argument("element bits out of range");
  return {&k, bits};
}

FieldElem zero(const FieldSpec& k) { return {&k, 0}; }
FieldElem one(const FieldSpec& k) { return {&k, 1}; }
FieldElem gen(const FieldSpec& k) { return {&k, k.generator}; }

bool is_zero(FieldElem a) { return a.bits == 0; }

FieldElem add(FieldElem a, FieldElem b) {
  require_same(*a.spec, *b.spec);
  return {a.spec, a.bits ^ b.bits};
}

FieldElem mul(FieldElem a, FieldElem b) {
  require_same(*a.spec, *b.spec);
  return {a.spec, raw_mul(a.bits, b.bits, *a.spec)};
}

FieldElem inv(FieldElem a) {
  if (a.bits == 0) throw std::domain_error("inverse of 0 in GF(2^f)");
  return {a.spec, raw_pow(a.bits, a.spec->q - 2, *a.spec)};
}

FieldElem pow(FieldElem a, std::int64_t e) {
  if (e < 0) return pow(inv(a), -e);
  return {a.spec, raw_pow(a.bits, static_cast<std::uint64_t>(e), *a.spec)};
}

int trace(FieldElem a) {
  std::uint64_t t = 0;
  std::uint64_t x = a.bits;
  for (int i = 0; i < a.spec->f; ++i) {
    t ^= x;
    x = raw_mul(x, x, *a.spec);
  }
  // The trace lands in F2; in the polynomial basis that is the constant bit
  // once the Frobenius orbit sum is formed (the sum is Frobenius-fixed).
  return static_cast<int>(t & 1);
}

int psi(FieldElem a) { return trace(a) ? -1 : 1; }

FieldElem sqrt(FieldElem a) {
  // x -> x^(2^(f-1)) inverts squaring since x^(2^f) = x.
  std::uint64_t x = a.bits;
  for (int i = 0; i < a.spec->f - 1; ++i) x = raw_mul(x, x, *a.spec);
  return {a.spec, x};
}

std::vector<FieldElem> units(const FieldSpec& k) {
  std::vector<FieldElem> us;
  us.reserve(k.q - 1);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i + 1 < k.q; ++i) {
    us.push_back({&k, x});
    x = raw_mul(x, k.generator, k);
  }
  return us;
}

std::string to_string(FieldElem a) {
  if (a.bits == 0) return "0";
  if (a.bits == 1) return "1";
  // Express as a power of the generator for a stable human-readable form.
  std::uint64_t x = a.spec->generator;
  for (std::uint64_t e = 1; e < a.spec->q; ++e) {
    if (x == a.bits) return "g^" + std::to_string(e);
    x = raw_mul(x, a.spec->generator, *a.spec);
  }
  return "?";  // unreachable for valid elements
}

}  // namespace dyform::gf2
