#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dyform/gf2.hpp"

namespace dyform::dring {

// Exact arithmetic in O/p^m for an unramified dyadic field with residue
// field k = GF(2^f) and uniformizer 2, realized as the Galois ring
// GR(2^m, f) = (Z/2^m)[x] / (monic 0/1-lift of the field modulus).
//
// An element is a length-f coefficient vector over Z/2^m in the polynomial
// basis. Congruences mod p^t are first-class: every matrix identity
// downstream is asserted through eq_mod, never through exact equality at a
// different precision than it is owed.

inline constexpr int kMaxPrecision = 30;

struct RingSpec {
  gf2::FieldSpec field;
  int m = 1;                // the ring is O/p^m
  std::uint32_t mask = 1;   // 2^m - 1
};

struct RingElem {
  const RingSpec* spec = nullptr;
  std::array<std::uint32_t, gf2::kMaxDegree> c{};  // first field.f used
};

RingSpec make_ring(const gf2::FieldSpec& field, int m);
bool same_spec(const RingSpec& a, const RingSpec& b);

RingElem zero(const RingSpec& r);
RingElem one(const RingSpec& r);
RingElem from_int(const RingSpec& r, std::int64_t v);  // image of an integer

RingElem add(const RingElem& a, const RingElem& b);
RingElem sub(const RingElem& a, const RingElem& b);
RingElem neg(const RingElem& a);
RingElem mul(const RingElem& a, const RingElem& b);

// Inverse of a unit, lifted from the residue field through the Newton
// iteration y <- y(2 - xy). Non-units (valuation >= 1) are a domain error.
RingElem invert(const RingElem& x);

// Largest t <= m with x in p^t = (2^t); valuation(0) = m by convention,
// making the function total (m means "indistinguishable from 0 here").
int valuation(const RingElem& x);

bool is_zero(const RingElem& x);

// x == y mod p^t, 0 <= t <= m.
bool eq_mod(const RingElem& x, const RingElem& y, int t);

// The unique multiplicative lift of a with t^q = t, found by iterating the
// q-power map on any lift to its fixed point (converges in <= m steps).
RingElem teichmuller(gf2::FieldElem a, const RingSpec& r);

// Coefficientwise 0/1 lift (a section of reduce, not multiplicative).
RingElem lift01(gf2::FieldElem a, const RingSpec& r);

// Reduction O/p^m -> k.
gf2::FieldElem reduce(const RingElem& x);

// Residue of x / 2 for x of valuation >= 1 (all the quotient we ever need).
gf2::FieldElem reduce_div_uniformizer(const RingElem& x);

// Teichmuller-digit expansion x = sum_i teich(d_i) 2^i, d_i in k, i < m.
// Canonical digits for serialization; round-trips exactly.
std::vector<std::uint64_t> to_teich_digits(const RingElem& x);
RingElem from_teich_digits(const RingSpec& r,
                           const std::vector<std::uint64_t>& digits);

std::string to_string(const RingElem& x);

bool operator==(const RingElem& a, const RingElem& b);
inline bool operator!=(const RingElem& a, const RingElem& b) {
  return !(a == b);
}
inline RingElem operator+(const RingElem& a, const RingElem& b) {
  return add(a, b);
}
inline RingElem operator-(const RingElem& a, const RingElem& b) {
  return sub(a, b);
}
inline RingElem operator*(const RingElem& a, const RingElem& b) {
  return mul(a, b);
}
inline RingElem operator-(const RingElem& a) { return neg(a); }

}  // namespace dyform::dring
