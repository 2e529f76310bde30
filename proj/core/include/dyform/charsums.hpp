#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "dyform/matgrp.hpp"

namespace dyform::charsums {

// Kloosterman sums over k = GF(2^f) and the finite torus sums computing
// character values of simple supercuspidal representations: the Sp_2n side
// at affine generic elements and the theta-twisted GL_{2n+1} side at
// theta-affine generic elements. psi is valued in {+1,-1}, so every sum
// here is an exact integer.

using KlValue = boost::multiprecision::cpp_int;

struct CharParams {
  int n = 1;             // rank; the groups are Sp_2n and GL_{2n+1}
  gf2::FieldElem a;      // nonzero simple supercuspidal parameter
};

// Kl^N_x(psi) = sum of psi(x_1+...+x_N) over unit N-tuples with product x.
// Brute force over the N-1 free coordinates; the definitional oracle.
KlValue kloosterman(int big_n, gf2::FieldElem x);

// Same value by iterated multiplicative convolution over k^x, O(N q^2).
KlValue kloosterman_fast(int big_n, gf2::FieldElem x);

// Full table of Kl^N indexed by generator exponent (fast path).
std::vector<KlValue> kloosterman_table(int big_n, const gf2::FieldSpec& k);

// Twisted variant with constraint s_1^{e_1} ... s_N^{e_N} = x. For
// power-of-2 exponent vectors this collapses to kloosterman(N, x), which is
// exactly the Frobenius-invariance substitution the torus sums rely on.
KlValue kloosterman_twisted(const std::vector<int>& exponents,
                            gf2::FieldElem x);

// beta = residue of a y_{1,2}^2 ... y_{n-1,n}^2 y_{n,n+1} y_{2n,1} / w.
gf2::FieldElem beta_of(const matgrp::Mat& y, const CharParams& p);

// alpha = residue of a z_{1,2}^2 ... z_{n,n+1}^2 x_{2n+1,1} / w, where
// z = x * theta(x).
gf2::FieldElem alpha_of(const matgrp::Mat& x, const CharParams& p);

// Character value at an affine generic y in I+ of Sp_2n: the sum over the
// finite torus (t_1..t_n) in (k^x)^n of the affine generic character at the
// honest conjugate t y t^{-1}. Equals kloosterman(n+1, beta_of(y)).
KlValue char_sp(const matgrp::Mat& y, const CharParams& p);

// Twisted character value at a theta-affine generic x in I+ of GL_{2n+1}:
// the sum over the theta-fixed torus lifts t of the character at
// t x theta(t)^{-1}. Equals kloosterman(n+1, alpha_of(x)).
KlValue twisted_char(const matgrp::Mat& x, const CharParams& p);

// The simplified torus-sum expressions read off z = x theta(x) (GL side)
// and the entries of y (Sp side). These are the independent oracles for the
// conjugation-based sums above (two routes to the same value).
KlValue twisted_char_oracle(const matgrp::Mat& x, const CharParams& p);
KlValue char_sp_oracle(const matgrp::Mat& y, const CharParams& p);

struct EndoscopyRecord {
  gf2::FieldElem u, a;
  bool norm_ok = false;
  KlValue twisted_value, sp_value, kl_value;
  bool ok = false;
};

// The relation at (g_u, h_u): h_u is a norm of g_u, and
// twisted(g_u) == char_sp(h_u) == Kl^{n+1}_{au}.
bool endoscopy_check(int n, gf2::FieldElem u, gf2::FieldElem a,
                     const dring::RingSpec& r);

// Full (u, a) grid for one rank, with the torus sweeps shared across a.
std::vector<EndoscopyRecord> endoscopy_grid(int n, const dring::RingSpec& r);

// sum_{x in k^x} Kl^N_x(psi) chi(x) for the multiplicative character
// chi = (generator exponent j |-> zeta_{q-1}^{j * chi_exponent}); evaluated
// in extended precision. For nontrivial chi, |value|^2 = q^N.
std::complex<double> kl_fourier(int big_n, std::uint64_t chi_exponent,
                                const gf2::FieldSpec& k);

// Some u with Kl^{n+1}_{au} != 0; exhaustive over k^x. Nonexistence would
// falsify the Gauss-sum nonvanishing argument and is reported loudly.
gf2::FieldElem nonvanishing_witness(int n, gf2::FieldElem a);

struct InjectivityReport {
  bool injective = true;
  std::optional<std::pair<gf2::FieldElem, gf2::FieldElem>> collision;
};

// Is a |-> (Kl^{n+1}_{au})_{u in k^x} injective on k^x?
InjectivityReport kl_injectivity(int n, const gf2::FieldSpec& k);

}  // namespace dyform::charsums
