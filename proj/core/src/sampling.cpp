#include "dyform/sampling.hpp"

#include <stdexcept>
#include <tuple>

namespace dyform::sampling {

using dring::RingElem;
using dring::RingSpec;
using matgrp::Mat;

gf2::FieldElem random_elem(rng::SplitMix64& g, const gf2::FieldSpec& k) {
  return gf2::elem(k, g.below(k.q));
}

gf2::FieldElem random_nonzero(rng::SplitMix64& g, const gf2::FieldSpec& k) {
  return gf2::elem(k, 1 + g.below(k.q - 1));
}

RingElem random_ring_elem(rng::SplitMix64& g, const RingSpec& r) {
  RingElem x = dring::zero(r);
  for (int i = 0; i < r.field.f; ++i)
    x.c[i] = static_cast<std::uint32_t>(g.below(std::uint64_t{1} << r.m));
  return x;
}

RingElem random_unit(rng::SplitMix64& g, const RingSpec& r) {
  const RingElem t = dring::teichmuller(random_nonzero(g, r.field), r);
  RingElem noise = random_ring_elem(g, r);
  return dring::add(t, dring::add(noise, noise));  // unit + 2*(anything)
}

RingElem random_in_p(rng::SplitMix64& g, const RingSpec& r) {
  const RingElem x = random_ring_elem(g, r);
  return dring::add(x, x);
}

RingElem random_val_one(rng::SplitMix64& g, const RingSpec& r) {
  const RingElem u = random_unit(g, r);
  return dring::add(u, u);
}

Mat random_gl_iwahori(rng::SplitMix64& g, const RingSpec& r, int n_dim) {
  Mat m = matgrp::zeros(r, n_dim);
  for (int i = 0; i < n_dim; ++i)
    for (int j = 0; j < n_dim; ++j) {
      if (i == j)
        m.at(i, j) = random_unit(g, r);
      else if (i < j)
        m.at(i, j) = random_ring_elem(g, r);
      else
        m.at(i, j) = random_in_p(g, r);
    }
  return m;
}

Mat random_gl_iwahori_plus(rng::SplitMix64& g, const RingSpec& r, int n_dim) {
  Mat m = matgrp::zeros(r, n_dim);
  const RingElem one = dring::one(r);
  for (int i = 0; i < n_dim; ++i)
    for (int j = 0; j < n_dim; ++j) {
      if (i == j)
        m.at(i, j) = dring::add(one, random_in_p(g, r));
      else if (i < j)
        m.at(i, j) = random_ring_elem(g, r);
      else
        m.at(i, j) = random_in_p(g, r);
    }
  return m;
}

Mat random_gl_iwahori_plusplus(rng::SplitMix64& g, const RingSpec& r, int n_dim) {
  Mat m = random_gl_iwahori_plus(g, r, n_dim);
  for (int i = 0; i + 1 < n_dim; ++i) m.at(i, i + 1) = random_in_p(g, r);
  const RingElem d = random_in_p(g, r);
  m.at(n_dim - 1, 0) = dring::add(d, d);  // corner in p^2
  return m;
}

Mat random_theta_affine_generic(rng::SplitMix64& g, const RingSpec& r, int n) {
  const int nn = 2 * n + 1;
  Mat x = random_gl_iwahori_plus(g, r, nn);
  // Overwrite the n constrained cells so every symmetrized superdiagonal sum
  // is a fresh unit, then pin the corner at valuation exactly 1.
  for (int i = 1; i <= n; ++i) {
    const RingElem target = random_unit(g, r);
    x.at(i - 1, i) = dring::sub(target, x.at(nn - i - 1, nn - i));
  }
  x.at(nn - 1, 0) = random_val_one(g, r);
  return x;
}

Mat random_theta_nongeneric_control(rng::SplitMix64& g, const RingSpec& r, int n) {
  const int nn = 2 * n + 1;
  Mat x = random_theta_affine_generic(g, r, n);
  if (g.below(2) == 0) {
    // Break one symmetrized sum: make it lie in p.
    const int i = 1 + static_cast<int>(g.below(static_cast<std::uint64_t>(n)));
    x.at(i - 1, i) =
        dring::add(dring::neg(x.at(nn - i - 1, nn - i)), random_in_p(g, r));
  } else {
    // Sink the corner to valuation >= 2 (still inside I+).
    const RingElem d = random_in_p(g, r);
    x.at(nn - 1, 0) = dring::add(d, d);
  }
  return x;
}

namespace {

struct RootCell {
  int row, col;  // 0-indexed
  RingElem coef;
};

// y <- y * (I + sum coef E_{row,col}); all target columns distinct.
void apply_right(Mat& y, const std::vector<RootCell>& cells) {
  const int n = y.n;
  std::vector<RingElem> updates;
  updates.reserve(cells.size() * static_cast<size_t>(n));
  for (const auto& cell : cells)
    for (int i = 0; i < n; ++i)
      updates.push_back(dring::mul(y.at(i, cell.row), cell.coef));
  size_t k = 0;
  for (const auto& cell : cells)
    for (int i = 0; i < n; ++i)
      y.at(i, cell.col) = dring::add(y.at(i, cell.col), updates[k++]);
}

// Symplectic root-group element data for the pair of cells
//   (a,b) and (2n+1-b, 2n+1-a)   [1-indexed],
// with the second coefficient carrying the sign (-1)^(a-b+1). When the two
// cells coincide (b == 2n+1-a, a long root) a single cell is returned and
// any coefficient is admissible.
std::vector<RootCell> sp_root(int two_n, int a, int b, const RingElem& t) {
  std::vector<RootCell> cells;
  cells.push_back({a - 1, b - 1, t});
  const int a2 = two_n + 1 - b;
  const int b2 = two_n + 1 - a;
  if (a2 == a && b2 == b) return cells;
  const RingElem s = ((a - b + 1) % 2 == 0) ? t : dring::neg(t);
  cells.push_back({a2 - 1, b2 - 1, s});
  return cells;
}

}  // namespace

Mat random_sp_iwahori_plus(rng::SplitMix64& g, const RingSpec& r, int n) {
  const int nn = 2 * n;
  // Pro-unipotent torus part diag(d_1..d_n, d_n^{-1}..d_1^{-1}), d_i in 1+p.
  Mat y = matgrp::zeros(r, nn);
  const RingElem one = dring::one(r);
  for (int i = 0; i < n; ++i) {
    const RingElem d = dring::add(one, random_in_p(g, r));
    y.at(i, i) = d;
    y.at(nn - 1 - i, nn - 1 - i) = dring::invert(d);
  }
  // One sweep over the root groups: upper cells with O coefficients, lower
  // cells with p coefficients. Every factor is exactly symplectic, hence so
  // is the product; the I+ pattern is preserved throughout.
  for (int a = 1; a <= nn; ++a)
    for (int b = a + 1; b <= nn; ++b) {
      apply_right(y, sp_root(nn, a, b, random_ring_elem(g, r)));
      apply_right(y, sp_root(nn, b, a, random_in_p(g, r)));
    }
  return y;
}

Mat random_sp_affine_generic(rng::SplitMix64& g, const RingSpec& r, int n) {
  const int nn = 2 * n;
  Mat y = random_sp_iwahori_plus(g, r, n);
  // Components add along multiplication in I+/I++, so one corrective factor
  // per simple affine root steers each component to a fresh unit.
  const auto comps = matgrp::affine_components(y, matgrp::Group::Sp);
  for (int i = 1; i <= n; ++i) {
    const gf2::FieldElem target = random_nonzero(g, r.field);
    const gf2::FieldElem delta = gf2::add(target, comps[static_cast<size_t>(i - 1)]);
    apply_right(y, sp_root(nn, i, i + 1, dring::teichmuller(delta, r)));
  }
  const gf2::FieldElem target = random_nonzero(g, r.field);
  const gf2::FieldElem delta = gf2::add(target, comps[static_cast<size_t>(n)]);
  const RingElem lift = dring::teichmuller(delta, r);
  apply_right(y, sp_root(nn, nn, 1, dring::add(lift, lift)));
  return y;
}

}  // namespace dyform::sampling
