#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dyform::gf2 {

// Arithmetic in the residue field k = GF(2^f), represented in the polynomial
// basis over F2. An element is a bit vector packed into a uint64_t, bit i
// holding the coefficient of x^i. The additive character psi takes values in
// {+1,-1} only, so every character sum downstream is an exact integer.

inline constexpr int kMaxDegree = 16;

struct FieldSpec {
  int f = 1;                    // extension degree over F2
  std::uint64_t modulus = 2;    // monic degree-f polynomial, bit f set
  std::uint64_t q = 2;          // 2^f
  std::uint64_t generator = 1;  // fixed generator of k^x (bit form)
};

struct FieldElem {
  const FieldSpec* spec = nullptr;
  std::uint64_t bits = 0;
};

// Polynomial helpers over F2 (bit-packed, degree = position of top bit).
int poly_degree(std::uint64_t p);
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
bool poly_is_irreducible(std::uint64_t p);
// Smallest nontrivial monic factor, or 0 when p is irreducible.
std::uint64_t poly_smallest_factor(std::uint64_t p);
std::string poly_to_string(std::uint64_t p);

// Builds GF(2^f). When no modulus is supplied the lexicographically least
// irreducible monic polynomial of degree f is chosen, so runs are
// reproducible across machines. A reducible or wrong-degree modulus is
// rejected with a diagnostic naming a factor.
FieldSpec make_field(int f);
FieldSpec make_field(int f, std::uint64_t modulus);

bool same_spec(const FieldSpec& a, const FieldSpec& b);

FieldElem elem(const FieldSpec& k, std::uint64_t bits);
FieldElem zero(const FieldSpec& k);
FieldElem one(const FieldSpec& k);
FieldElem gen(const FieldSpec& k);

bool is_zero(FieldElem a);

FieldElem add(FieldElem a, FieldElem b);
FieldElem mul(FieldElem a, FieldElem b);
FieldElem inv(FieldElem a);  // domain error on 0
FieldElem pow(FieldElem a, std::int64_t e);

// Absolute trace Tr_{k/F2}(x) = sum of x^(2^i), i < f.
int trace(FieldElem a);

// psi(x) = (-1)^trace(x); Frobenius-invariant: psi(x^2) = psi(x).
int psi(FieldElem a);

// Inverse of the Frobenius x -> x^2 (a bijection in characteristic 2).
FieldElem sqrt(FieldElem a);

// The q-1 nonzero elements as consecutive powers g^0, g^1, ... of the fixed
// generator. This ordering backs every enumeration in the character sums.
std::vector<FieldElem> units(const FieldSpec& k);

std::string to_string(FieldElem a);

inline bool operator==(FieldElem a, FieldElem b) {
  return a.bits == b.bits && same_spec(*a.spec, *b.spec);
}
inline bool operator!=(FieldElem a, FieldElem b) { return !(a == b); }
inline FieldElem operator+(FieldElem a, FieldElem b) { return add(a, b); }
inline FieldElem operator*(FieldElem a, FieldElem b) { return mul(a, b); }

}  // namespace dyform::gf2
