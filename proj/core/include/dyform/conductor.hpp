#pragma once

#include <cstdint>
#include <string>

namespace dyform::conductor {

// Closed-form conductor, gamma-factor and formal-degree arithmetic attached
// to the parameter of a simple supercuspidal representation: the parameter
// enters only through its numeric invariants (dimension 2n+1, induced from
// a quadratic character of Swan conductor 1 on a totally ramified degree
// 2n+1 extension). Everything here is exact integer/rational arithmetic.

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Rational make_rational(std::int64_t num, std::int64_t den);
bool operator==(const Rational& a, const Rational& b);
bool rational_less(const Rational& a, const Rational& b);
std::string to_string(const Rational& r);

struct ParamSpec {
  int n = 1;                 // rank; dim = 2n+1
  std::uint64_t q = 2;       // residue cardinality
  int k_degree = 3;          // 2n+1, totally ramified
  int xi_order = 2;          // quadratic character
  int xi_swan = 1;           // Swan conductor of xi
};

ParamSpec make_param(int n, std::uint64_t q);

// Artin conductor of the Rankin-Selberg self-convolution:
// (2n+1)^2 (1 + 2n/(2n+1)^2) - 1 = (2n+1)^2 + 2n - 1.
std::int64_t artin_rankin_selberg(int n);

struct SwanSplit {
  std::int64_t sum = 0;         // Swan(Sym^2) + Swan(Wedge^2) = 2n
  std::int64_t difference = 0;  // 0: the quadratic character kills the split
  std::int64_t swan_wedge = 0;  // n
  std::int64_t swan_sym = 0;    // n
};

SwanSplit swan_split(int n);

// Artin(Ad) = dim Ad + Swan(Ad) = n(2n+1) + n = 2(n^2+n); the L-factor is
// trivial, so no inertia-invariant correction enters.
std::int64_t artin_adjoint(int n);

struct PowerOfQ {
  std::uint64_t base = 2;
  std::int64_t exponent = 0;
};

// |gamma(0, Ad, psi)| = q^(Artin(Ad)/2) = q^(n^2+n), kept symbolic.
PowerOfQ gamma_abs(int n, std::uint64_t q);

// The Gross-Reeder formal degree of a simple supercuspidal representation is
// q^(N+l) / |gamma_0| with N = n^2 positive roots and l = n; the gamma-side
// prediction is q^(n^2+n) / |gamma_0|. The principal-parameter factor
// cancels identically, so the comparison reduces to exponents.
bool formal_degree_match(int n, std::uint64_t q);

// (depth of the representation, depth of its parameter) = (1/2n, 1/(2n+1)),
// always strictly decreasing across the correspondence.
std::pair<Rational, Rational> depth_pair(int n);

struct GammaReport {
  std::int64_t artin_rs = 0;
  std::int64_t swan_ad = 0;
  std::int64_t artin_ad = 0;
  Rational gamma_abs_log_q;
  Rational formal_degree_log_q;
  Rational depth_group;
  Rational depth_parameter;
};

GammaReport gamma_report(int n, std::uint64_t q);

}  // namespace dyform::conductor
