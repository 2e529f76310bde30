#include "dyform/matgrp.hpp"

#include <stdexcept>

namespace dyform::matgrp {

using dring::RingElem;
using dring::RingSpec;

namespace {

void require_square_same(const Mat& a, const Mat& b) {
  if (a.n != b.n || !dring::same_spec(*a.spec, *b.spec))
    throw std::invalid_argument("matrix dimension or ring spec mismatch");
}

}  // namespace

const char* to_string(FiltrationClass c) {
  switch (c) {
    case FiltrationClass::Outside: return "Outside";
    case FiltrationClass::Iwahori: return "Iwahori";
    case FiltrationClass::IwahoriPlus: return "IwahoriPlus";
    case FiltrationClass::IwahoriPlusPlus: return "IwahoriPlusPlus";
  }
  return "?";
}

Mat zeros(const RingSpec& r, int n) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  Mat m;
  m.spec = &r;
  m.n = n;
  m.e.assign(static_cast<size_t>(n) * n, dring::zero(r));
  return m;
}

Mat identity(const RingSpec& r, int n) {
  Mat m = zeros(r, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = dring::one(r);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  require_square_same(a, b);
  const int n = a.n;
  Mat c = zeros(*a.spec, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const RingElem& aik = a.at(i, k);
      if (dring::is_zero(aik)) continue;
      for (int j = 0; j < n; ++j)
        c.at(i, j) = dring::add(c.at(i, j), dring::mul(aik, b.at(k, j)));
    }
  return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
  require_square_same(a, b);
  Mat c = zeros(*a.spec, a.n);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = dring::add(a.e[i], b.e[i]);
  return c;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  require_square_same(a, b);
  Mat c = zeros(*a.spec, a.n);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = dring::sub(a.e[i], b.e[i]);
  return c;
}

Mat transpose(const Mat& a) {
  Mat c = zeros(*a.spec, a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) c.at(j, i) = a.at(i, j);
  return c;
}

Mat scalar_mul(const RingElem& s, const Mat& a) {
  Mat c = zeros(*a.spec, a.n);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = dring::mul(s, a.e[i]);
  return c;
}

bool mat_eq(const Mat& a, const Mat& b) {
  if (a.n != b.n || !dring::same_spec(*a.spec, *b.spec)) return false;
  for (size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] != b.e[i]) return false;
  return true;
}

bool mat_eq_mod(const Mat& a, const Mat& b, int t) {
  require_square_same(a, b);
  for (size_t i = 0; i < a.e.size(); ++i)
    if (!dring::eq_mod(a.e[i], b.e[i], t)) return false;
  return true;
}

Mat antidiag_J(int n, const RingSpec& r) {
  Mat j = zeros(r, n);
  RingElem sign = dring::one(r);
  for (int i = 0; i < n; ++i) {
    j.at(i, n - 1 - i) = sign;
    sign = dring::neg(sign);
  }
  return j;
}

Mat inverse(const Mat& a) {
  const int n = a.n;
  const RingSpec& r = *a.spec;

  // Diagonal fast path: unit entries invert directly.
  bool diagonal = true;
  for (int i = 0; i < n && diagonal; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !dring::is_zero(a.at(i, j))) {
        diagonal = false;
        break;
      }
  if (diagonal) {
    Mat inv = zeros(r, n);
    for (int i = 0; i < n; ++i) inv.at(i, i) = dring::invert(a.at(i, i));
    return inv;
  }

  Mat work = a;
  Mat inv = identity(r, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (dring::valuation(work.at(row, col)) == 0) {
        piv = row;
        break;
      }
    if (piv < 0)
      throw std::domain_error(
          "matrix not invertible over O/p^m: no unit pivot in column " +
          std::to_string(col + 1));
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(piv, j), work.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const RingElem pinv = dring::invert(work.at(col, col));
    for (int j = 0; j < n; ++j) {
      work.at(col, j) = dring::mul(pinv, work.at(col, j));
      inv.at(col, j) = dring::mul(pinv, inv.at(col, j));
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const RingElem factor = work.at(row, col);
      if (dring::is_zero(factor)) continue;
      for (int j = 0; j < n; ++j) {
        work.at(row, j) =
            dring::sub(work.at(row, j), dring::mul(factor, work.at(col, j)));
        inv.at(row, j) =
            dring::sub(inv.at(row, j), dring::mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

namespace {

// Berkowitz recursion: grows the characteristic polynomial of the leading
// r x r principal block one row/column at a time through Toeplitz products.
// Division-free, so it is exact over Z/2^m where nothing odd is invertible.
std::vector<RingElem> charpoly_highest_first(const Mat& m) {
  const int n = m.n;
  const RingSpec& r = *m.spec;
  std::vector<RingElem> p = {dring::one(r)};  // charpoly of the 0x0 block
  std::vector<RingElem> q, w, wnext, pnew;
  for (int rr = 1; rr <= n; ++rr) {
    // q_0 = 1, q_1 = -m[rr-1][rr-1], q_k = -(row . A^(k-2) . col), where A is
    // the leading (rr-1) block, row = m[rr-1][0..rr-2], col = m[0..rr-2][rr-1].
    q.assign(rr + 1, dring::zero(r));
    q[0] = dring::one(r);
    q[1] = dring::neg(m.at(rr - 1, rr - 1));
    if (rr >= 2) {
      w.assign(rr - 1, dring::zero(r));
      for (int i = 0; i < rr - 1; ++i) w[i] = m.at(i, rr - 1);
      for (int k = 2; k <= rr; ++k) {
        RingElem dot = dring::zero(r);
        for (int i = 0; i < rr - 1; ++i)
          dot = dring::add(dot, dring::mul(m.at(rr - 1, i), w[i]));
        q[k] = dring::neg(dot);
        if (k == rr) break;
        wnext.assign(rr - 1, dring::zero(r));
        for (int i = 0; i < rr - 1; ++i)
          for (int j = 0; j < rr - 1; ++j)
            wnext[i] = dring::add(wnext[i], dring::mul(m.at(i, j), w[j]));
        w.swap(wnext);
      }
    }
    pnew.assign(rr + 1, dring::zero(r));
    for (int i = 0; i <= rr; ++i)
      for (int j = 0; j <= i && j < static_cast<int>(p.size()); ++j)
        pnew[i] = dring::add(pnew[i], dring::mul(q[i - j], p[j]));
    p.swap(pnew);
  }
  return p;  // length n+1, p[0] = 1 (coefficient of T^n), p[n] = constant
}

}  // namespace

dring::RingElem det(const Mat& a) {
  // det(a) = (-1)^n * [constant term of det(T I - a)].
  const auto p = charpoly_highest_first(a);
  RingElem c = p.back();
  if (a.n % 2 == 1) c = dring::neg(c);
  return c;
}

std::vector<RingElem> shifted_charpoly(const Mat& g) {
  // det(T I - g) around T = 1 is the characteristic polynomial of g - I in
  // the variable S = T - 1.
  Mat m = mat_sub(g, identity(*g.spec, g.n));
  const auto p = charpoly_highest_first(m);
  // p is highest-first of length n+1; a_i is the coefficient of S^i.
  std::vector<RingElem> a(g.n, dring::zero(*g.spec));
  for (int i = 0; i < g.n; ++i) a[i] = p[static_cast<size_t>(g.n - i)];
  return a;
}

bool is_symplectic(const Mat& g) {
  if (g.n % 2 != 0)
    throw std::invalid_argument("symplectic test needs even dimension");
  const Mat j = antidiag_J(g.n, *g.spec);
  return mat_eq(mat_mul(mat_mul(transpose(g), j), g), j);
}

FiltrationClass classify_filtration(const Mat& g, Group group) {
  if (group == Group::Sp && !is_symplectic(g))
    throw std::invalid_argument("classify_filtration(Sp): matrix is not symplectic");
  const int n = g.n;
  const RingElem one = dring::one(*g.spec);

  bool iwahori = true;      // diag units, strictly lower in p
  bool plus = true;         // diag in 1+p, strictly lower in p
  bool plusplus = true;     // plus, first superdiagonal in p, corner in p^2
  for (int i = 0; i < n && (iwahori || plus); ++i)
    for (int j = 0; j < n; ++j) {
      const int val = dring::valuation(g.at(i, j));
      if (i == j) {
        if (val != 0) iwahori = false;
        if (dring::valuation(dring::sub(g.at(i, j), one)) < 1) plus = false;
      } else if (i > j) {
        if (val < 1) {
          iwahori = false;
          plus = false;
        }
      }
    }
  if (!plus) plusplus = false;
  if (plusplus) {
    for (int i = 0; i + 1 < n; ++i)
      if (dring::valuation(g.at(i, i + 1)) < 1) plusplus = false;
    if (dring::valuation(g.at(n - 1, 0)) < 2) plusplus = false;
  }
  if (plusplus) return FiltrationClass::IwahoriPlusPlus;
  if (plus) return FiltrationClass::IwahoriPlus;
  if (iwahori) return FiltrationClass::Iwahori;
  return FiltrationClass::Outside;
}

std::vector<gf2::FieldElem> affine_components(const Mat& g, Group group) {
  const FiltrationClass cls = classify_filtration(g, group);
  if (cls != FiltrationClass::IwahoriPlus &&
      cls != FiltrationClass::IwahoriPlusPlus)
    throw std::invalid_argument("affine_components: element is not in I+");
  const int n = g.n;
  std::vector<gf2::FieldElem> c;
  if (group == Group::GL) {
    c.reserve(n);
    for (int i = 0; i + 1 < n; ++i) c.push_back(dring::reduce(g.at(i, i + 1)));
    c.push_back(dring::reduce_div_uniformizer(g.at(n - 1, 0)));
  } else {
    const int half = n / 2;
    c.reserve(half + 1);
    for (int i = 0; i < half; ++i) c.push_back(dring::reduce(g.at(i, i + 1)));
    c.push_back(dring::reduce_div_uniformizer(g.at(n - 1, 0)));
  }
  return c;
}

bool is_affine_generic(const Mat& g, Group group) {
  for (const auto& c : affine_components(g, group))
    if (gf2::is_zero(c)) return false;
  return true;
}

Mat antidiag_reflect(const Mat& a) {
  const int n = a.n;
  Mat out = zeros(*a.spec, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RingElem& src = a.at(n - 1 - j, n - 1 - i);
      out.at(i, j) = ((i + j) % 2 == 0) ? src : dring::neg(src);
    }
  return out;
}

Mat theta(const Mat& g) {
  if (g.n % 2 != 1)
    throw std::invalid_argument("theta is defined on odd-dimensional GL");
  return antidiag_reflect(inverse(g));
}

Mat theta_norm(const Mat& x) { return mat_mul(x, theta(x)); }

bool is_theta_affine_generic(const Mat& x) {
  const FiltrationClass cls = classify_filtration(x, Group::GL);
  if (cls != FiltrationClass::IwahoriPlus &&
      cls != FiltrationClass::IwahoriPlusPlus)
    throw std::invalid_argument("is_theta_affine_generic: element is not in I+");
  const int nn = x.n;  // 2n+1
  if (nn % 2 != 1) throw std::invalid_argument("dimension must be odd");
  const int n = nn / 2;
  for (int i = 1; i <= n; ++i) {
    // x_{i,i+1} + x_{2n+1-i,2n+2-i} must be a unit.
    const RingElem s =
        dring::add(x.at(i - 1, i), x.at(nn - i - 1, nn - i));
    if (dring::valuation(s) != 0) return false;
  }
  return dring::valuation(x.at(nn - 1, 0)) == 1;
}

EisensteinReport eisenstein_check(const Mat& x) {
  const FiltrationClass cls = classify_filtration(x, Group::GL);
  if (cls != FiltrationClass::IwahoriPlus &&
      cls != FiltrationClass::IwahoriPlusPlus)
    throw std::invalid_argument("eisenstein_check: element is not in I+");
  const auto a = shifted_charpoly(theta_norm(x));
  EisensteinReport rep;
  rep.constant_term = a[1];
  bool ok = dring::is_zero(a[0]);  // a_0 == 0 at working precision
  for (size_t i = 1; i < a.size(); ++i)
    if (dring::valuation(a[i]) < 1) ok = false;
  if (dring::valuation(a[1]) != 1) ok = false;
  rep.passes = ok;
  return rep;
}

Mat make_g(int n, gf2::FieldElem u, const RingSpec& r) {
  if (n < 1) throw std::invalid_argument("make_g: n must be >= 1");
  if (gf2::is_zero(u)) throw std::invalid_argument("make_g: u must be nonzero");
  if (r.m < 2) throw std::invalid_argument("make_g: ring precision m must be >= 2");
  const int nn = 2 * n + 1;
  Mat g = identity(r, nn);
  const RingElem one = dring::one(r);
  for (int i = 0; i < n; ++i) g.at(i, i + 1) = one;  // rows 1..n: superdiag 1
  // rows n+1..2n keep superdiagonal 0
  const RingElem wu = dring::add(dring::teichmuller(u, r),
                                 dring::teichmuller(u, r));  // 2u
  g.at(nn - 1, 0) = wu;
  return g;
}

Mat make_h(int n, gf2::FieldElem u, const RingSpec& r) {
  if (n < 1) throw std::invalid_argument("make_h: n must be >= 1");
  if (gf2::is_zero(u)) throw std::invalid_argument("make_h: u must be nonzero");
  if (r.m < 2) throw std::invalid_argument("make_h: ring precision m must be >= 2");
  const int nn = 2 * n;
  Mat h = zeros(r, nn);
  const RingElem one = dring::one(r);
  const RingElem mwu = dring::neg(dring::add(dring::teichmuller(u, r),
                                             dring::teichmuller(u, r)));
  // P block: unipotent upper band with -2u in its lower-left corner. For
  // n = 1 the corner shares the (1,1) cell with the diagonal and the two
  // contributions add.
  for (int i = 0; i < n; ++i) h.at(i, i) = one;
  for (int i = 0; i + 1 < n; ++i) h.at(i, i + 1) = one;
  h.at(n - 1, 0) = dring::add(h.at(n - 1, 0), mwu);
  // X block: last row all ones.
  for (int j = n; j < nn; ++j) h.at(n - 1, j) = one;
  // Y block: first column all -2u.
  for (int i = n; i < nn; ++i) h.at(i, 0) = mwu;
  // Q block: upper triangle of ones.
  for (int i = n; i < nn; ++i)
    for (int j = i; j < nn; ++j) h.at(i, j) = one;
  return h;
}

Mat make_phi(int n_dim, gf2::FieldElem a, const RingSpec& r) {
  if (n_dim < 1) throw std::invalid_argument("make_phi: dimension must be >= 1");
  if (gf2::is_zero(a)) throw std::invalid_argument("make_phi: a must be nonzero");
  Mat phi = zeros(r, n_dim);
  const RingElem one = dring::one(r);
  for (int i = 0; i + 1 < n_dim; ++i) phi.at(i, i + 1) = one;
  phi.at(n_dim - 1, 0) = dring::add(dring::teichmuller(a, r),
                                    dring::teichmuller(a, r));  // 2a
  return phi;
}

bool norm_correspondence_check(const Mat& g, const Mat& h) {
  if (g.n != h.n + 1 || g.n % 2 != 1)
    throw std::invalid_argument(
        "norm_correspondence_check: need dim(g) = 2n+1, dim(h) = 2n");
  if (!dring::same_spec(*g.spec, *h.spec))
    throw std::invalid_argument("norm_correspondence_check: ring spec mismatch");
  const auto pg = shifted_charpoly(theta_norm(g));  // a_0..a_{2n}
  const auto ph = shifted_charpoly(h);              // b_0..b_{2n-1}
  // (T-1) * charpoly(h) in the shifted basis: constant 0, then b shifted up,
  // with the leading coefficient of h matching a_{2n} = b_{2n-1} ... via the
  // implicit leading 1 on both sides.
  if (!dring::is_zero(pg[0])) return false;
  for (int i = 1; i <= h.n; ++i)
    if (pg[static_cast<size_t>(i)] != ph[static_cast<size_t>(i - 1)])
      return false;
  return true;
}

Mat conjugate_by_diag(const std::vector<RingElem>& d, const Mat& g) {
  if (static_cast<int>(d.size()) != g.n)
    throw std::invalid_argument("conjugate_by_diag: diagonal length mismatch");
  std::vector<RingElem> dinv;
  dinv.reserve(d.size());
  for (const auto& di : d) dinv.push_back(dring::invert(di));
  Mat out = zeros(*g.spec, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      out.at(i, j) = dring::mul(d[static_cast<size_t>(i)],
                                dring::mul(g.at(i, j), dinv[static_cast<size_t>(j)]));
  return out;
}

}  // namespace dyform::matgrp
