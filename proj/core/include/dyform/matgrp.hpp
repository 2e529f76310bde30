#pragma once

#include <string>
#include <vector>

#include "dyform/dring.hpp"

namespace dyform::matgrp {

// Square matrices over O/p^m: Iwahori filtration predicates, affine and
// theta-affine genericity, the involution theta(g) = J tg^{-1} J^{-1}, norm
// maps, shifted characteristic polynomials and the Eisenstein criterion,
// and the explicit element families g_u, h_u, phi_a.

enum class Group { GL, Sp };

// Nested: IwahoriPlusPlus < IwahoriPlus < Iwahori < Outside.
enum class FiltrationClass { Outside, Iwahori, IwahoriPlus, IwahoriPlusPlus };

const char* to_string(FiltrationClass c);

struct Mat {
  const dring::RingSpec* spec = nullptr;
  int n = 0;  // dimension N
  std::vector<dring::RingElem> e;  // row-major, n*n entries

  dring::RingElem& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
  const dring::RingElem& at(int i, int j) const {
    return e[static_cast<size_t>(i) * n + j];
  }
};

Mat zeros(const dring::RingSpec& r, int n);
Mat identity(const dring::RingSpec& r, int n);

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat scalar_mul(const dring::RingElem& s, const Mat& a);
bool mat_eq(const Mat& a, const Mat& b);
bool mat_eq_mod(const Mat& a, const Mat& b, int t);

// The antidiagonal pairing matrix: (i, N+1-i) entry is (-1)^(i-1).
Mat antidiag_J(int n, const dring::RingSpec& r);

// Gauss-Jordan with unit pivots; throws domain_error when no unit pivot
// exists in some column (the matrix is then not invertible over O/p^m).
Mat inverse(const Mat& a);

// Division-free determinant (Berkowitz), valid over the truncated ring.
dring::RingElem det(const Mat& a);

// Coefficients a_0..a_{N-1} of det(T I - g) expanded around T = 1:
//   (T-1)^N + a_{N-1} (T-1)^{N-1} + ... + a_0,
// computed as the characteristic polynomial of g - I in S = T - 1 by the
// division-free Berkowitz recursion, so the p-adic size of each a_i is read
// off directly with no binomial re-expansion error.
std::vector<dring::RingElem> shifted_charpoly(const Mat& g);

// tg J g == J, exactly in O/p^m. Even dimension required.
bool is_symplectic(const Mat& g);

// Finest filtration class whose entrywise valuation pattern g satisfies.
// For Sp the element must already be symplectic (the Sp filtration is the
// GL pattern cut by the symplectic condition).
FiltrationClass classify_filtration(const Mat& g, Group group);

// Simple-affine-root coordinates of an element of I+ in k:
//   GL_N:  (x_{1,2}, ..., x_{N-1,N}, x_{N,1}/w)      (length N)
//   Sp_2n: (y_{1,2}, ..., y_{n,n+1}, y_{2n,1}/w)     (length n+1)
std::vector<gf2::FieldElem> affine_components(const Mat& g, Group group);

bool is_affine_generic(const Mat& g, Group group);

// theta(g) = J tg^{-1} J^{-1} for odd N. Implemented as the antidiagonal
// reflection-with-signs of g^{-1}, which is the same map.
Mat theta(const Mat& g);

// Conjugation of A by J: J tA J^{-1} (reflect about the antidiagonal and
// wear the sign (-1)^(i+j)). Exposed so tests can pin theta to the product
// form independently.
Mat antidiag_reflect(const Mat& a);

Mat theta_norm(const Mat& x);  // x * theta(x)

// x in I+ of GL_{2n+1} with unit symmetrized superdiagonal sums
// x_{i,i+1} + x_{2n+1-i,2n+2-i}, i = 1..n, and corner of valuation exactly 1.
bool is_theta_affine_generic(const Mat& x);

struct EisensteinReport {
  bool passes = false;
  dring::RingElem constant_term;  // a_1 of the shifted characteristic poly
};

// Shifted charpoly of x*theta(x) factors as (T-1) * Eisenstein iff x is
// theta-affine generic: a_0 == 0 (mod p^m), all a_i in p, val(a_1) == 1.
EisensteinReport eisenstein_check(const Mat& x);

// The explicit families (unit parameters are lifted via Teichmuller; the
// corner entries carry one factor of the uniformizer 2).
Mat make_g(int n, gf2::FieldElem u, const dring::RingSpec& r);    // GL_{2n+1}
Mat make_h(int n, gf2::FieldElem u, const dring::RingSpec& r);    // Sp_2n
Mat make_phi(int n_dim, gf2::FieldElem a, const dring::RingSpec& r);

// h is a norm of g: shifted charpoly of g*theta(g) equals (T-1) times the
// shifted charpoly of h, coefficientwise in O/p^m.
bool norm_correspondence_check(const Mat& g, const Mat& h);

// d g d^{-1} for a diagonal of units given by its n entries.
Mat conjugate_by_diag(const std::vector<dring::RingElem>& d, const Mat& g);

}  // namespace dyform::matgrp
