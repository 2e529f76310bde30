#include "dyform/charsums.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace dyform::charsums {

using dring::RingElem;
using dring::RingSpec;
using matgrp::Mat;

namespace {

constexpr std::uint64_t kBruteTermLimit = std::uint64_t{1} << 26;

// psi on all of k, indexed by bit pattern.
std::vector<int> psi_table(const gf2::FieldSpec& k) {
  std::vector<int> t(k.q);
  for (std::uint64_t b = 0; b < k.q; ++b)
    t[b] = gf2::psi(gf2::FieldElem{&k, b});
  return t;
}

// Unit bit patterns in generator-power order.
std::vector<std::uint64_t> unit_bits(const gf2::FieldSpec& k) {
  std::vector<std::uint64_t> u(k.q - 1);
  std::uint64_t x = 1;
  for (std::uint64_t e = 0; e + 1 < k.q; ++e) {
    u[e] = x;
    x = gf2::poly_mulmod(x, k.generator, k.modulus);
  }
  return u;
}

std::uint64_t discrete_log(const gf2::FieldSpec& k, std::uint64_t bits) {
  std::uint64_t x = 1;
  for (std::uint64_t e = 0; e + 1 < k.q; ++e) {
    if (x == bits) return e;
    x = gf2::poly_mulmod(x, k.generator, k.modulus);
  }
  throw std::domain_error("discrete log of 0");
}

void require_nonzero(gf2::FieldElem x, const char* who) {
  if (gf2::is_zero(x))
    throw std::domain_error(std::string(who) + ": parameter must be nonzero");
}

std::uint64_t checked_pow_terms(std::uint64_t base, int e) {
  std::uint64_t t = 1;
  for (int i = 0; i < e; ++i) {
    if (t > kBruteTermLimit / (base ? base : 1)) return kBruteTermLimit + 1;
    t *= base;
  }
  return t;
}

}  // namespace

KlValue kloosterman(int big_n, gf2::FieldElem x) {
  require_nonzero(x, "kloosterman");
  if (big_n < 1) throw std::invalid_argument("kloosterman: N must be >= 1");
  const gf2::FieldSpec& k = *x.spec;
  if (big_n == 1) return gf2::psi(x);
  const std::uint64_t ord = k.q - 1;
  if (checked_pow_terms(ord, big_n - 1) > kBruteTermLimit)
    throw std::invalid_argument(
        "kloosterman: enumeration too large, use kloosterman_fast");
  const auto psi = psi_table(k);
  const auto units = unit_bits(k);
  const std::uint64_t target = discrete_log(k, x.bits);

  std::int64_t acc = 0;
  // Depth-first over the N-1 free exponents; the last coordinate is forced.
  std::vector<std::uint64_t> e(static_cast<size_t>(big_n) - 1, 0);
  int depth = 0;
  std::vector<std::uint64_t> xsum(static_cast<size_t>(big_n), 0);   // xor of values
  std::vector<std::uint64_t> esum(static_cast<size_t>(big_n), 0);   // exponent sum
  while (depth >= 0) {
    if (depth == big_n - 1) {
      const std::uint64_t last = (target + ord * big_n - esum[depth] % ord) % ord;
      acc += psi[xsum[depth] ^ units[last]];
      --depth;
      continue;
    }
    if (e[depth] == ord) {
      e[depth] = 0;
      --depth;
      continue;
    }
    xsum[depth + 1] = xsum[depth] ^ units[e[depth]];
    esum[depth + 1] = esum[depth] + e[depth];
    ++e[depth];
    ++depth;
  }
  return acc;
}

std::vector<KlValue> kloosterman_table(int big_n, const gf2::FieldSpec& k) {
  if (big_n < 1) throw std::invalid_argument("kloosterman_table: N must be >= 1");
  const std::uint64_t ord = k.q - 1;
  const auto psi = psi_table(k);
  const auto units = unit_bits(k);
  // v_1[e] = psi(g^e); v_N = v_{N-1} (*) v_1 under multiplicative convolution.
  std::vector<KlValue> v(ord);
  for (std::uint64_t e = 0; e < ord; ++e) v[e] = psi[units[e]];
  std::vector<KlValue> base = v, next(ord);
  for (int step = 2; step <= big_n; ++step) {
    for (std::uint64_t i = 0; i < ord; ++i) {
      KlValue s = 0;
      for (std::uint64_t j = 0; j < ord; ++j)
        s += v[j] * base[(i + ord - j % ord) % ord];
      next[i] = s;
    }
    v.swap(next);
  }
  return v;
}

KlValue kloosterman_fast(int big_n, gf2::FieldElem x) {
  require_nonzero(x, "kloosterman_fast");
  const auto table = kloosterman_table(big_n, *x.spec);
  return table[discrete_log(*x.spec, x.bits)];
}

KlValue kloosterman_twisted(const std::vector<int>& exponents,
                            gf2::FieldElem x) {
  require_nonzero(x, "kloosterman_twisted");
  if (exponents.empty())
    throw std::invalid_argument("kloosterman_twisted: empty exponent vector");
  for (int e : exponents)
    if (e < 1)
      throw std::invalid_argument("kloosterman_twisted: exponents must be >= 1");
  const gf2::FieldSpec& k = *x.spec;
  const std::uint64_t ord = k.q - 1;
  const int big_n = static_cast<int>(exponents.size());
  if (checked_pow_terms(ord, big_n - 1) > kBruteTermLimit)
    throw std::invalid_argument("kloosterman_twisted: enumeration too large");
  const auto psi = psi_table(k);
  const auto units = unit_bits(k);
  const std::uint64_t target = discrete_log(k, x.bits);

  // Solutions of e_N * s == r (mod ord) for the forced last coordinate.
  std::vector<std::vector<std::uint64_t>> bucket(ord);
  for (std::uint64_t s = 0; s < ord; ++s)
    bucket[(static_cast<std::uint64_t>(exponents.back()) * s) % ord].push_back(s);

  KlValue acc = 0;
  std::int64_t partial = 0;
  std::vector<std::uint64_t> e(static_cast<size_t>(big_n) - 1, 0);
  std::vector<std::uint64_t> xsum(static_cast<size_t>(big_n), 0);
  std::vector<std::uint64_t> esum(static_cast<size_t>(big_n), 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == big_n - 1) {
      const std::uint64_t r = (target + ord - esum[depth] % ord) % ord;
      for (std::uint64_t s : bucket[r]) partial += psi[xsum[depth] ^ units[s]];
      --depth;
      continue;
    }
    if (e[depth] == ord) {
      e[depth] = 0;
      --depth;
      continue;
    }
    xsum[depth + 1] = xsum[depth] ^ units[e[depth]];
    esum[depth + 1] =
        esum[depth] + static_cast<std::uint64_t>(exponents[depth]) * e[depth];
    ++e[depth];
    ++depth;
  }
  acc = partial;
  return acc;
}

namespace {

void require_params(const Mat& m, const CharParams& p, bool sp_side) {
  require_nonzero(p.a, "character parameter a");
  if (!gf2::same_spec(*p.a.spec, m.spec->field))
    throw std::invalid_argument("parameter field does not match matrix ring");
  const int expect = sp_side ? 2 * p.n : 2 * p.n + 1;
  if (m.n != expect)
    throw std::invalid_argument("matrix dimension does not match rank n");
}

// Iterates the finite torus (k^x)^n, handing each point's diagonal lift (as
// ring elements, Teichmuller) to the callback.
template <typename F>
void for_each_torus_point(const RingSpec& r, int n, F&& fn) {
  const std::uint64_t ord = r.field.q - 1;
  const auto units = unit_bits(r.field);
  std::vector<RingElem> teich(ord, dring::zero(r));
  for (std::uint64_t e = 0; e < ord; ++e)
    teich[e] = dring::teichmuller(gf2::FieldElem{&r.field, units[e]}, r);

  std::vector<std::uint64_t> exps(static_cast<size_t>(n), 0);
  for (;;) {
    fn(exps, teich);
    int d = 0;
    while (d < n && ++exps[static_cast<size_t>(d)] == ord) {
      exps[static_cast<size_t>(d)] = 0;
      ++d;
    }
    if (d == n) break;
  }
}

}  // namespace

gf2::FieldElem beta_of(const Mat& y, const CharParams& p) {
  require_params(y, p, /*sp_side=*/true);
  if (!matgrp::is_affine_generic(y, matgrp::Group::Sp))
    throw std::invalid_argument("beta_of: element is not affine generic");
  const auto c = matgrp::affine_components(y, matgrp::Group::Sp);
  gf2::FieldElem b = p.a;
  for (int i = 0; i + 1 < p.n; ++i)
    b = gf2::mul(b, gf2::mul(c[static_cast<size_t>(i)], c[static_cast<size_t>(i)]));
  b = gf2::mul(b, c[static_cast<size_t>(p.n - 1)]);
  b = gf2::mul(b, c[static_cast<size_t>(p.n)]);
  return b;
}

gf2::FieldElem alpha_of(const Mat& x, const CharParams& p) {
  require_params(x, p, /*sp_side=*/false);
  if (!matgrp::is_theta_affine_generic(x))
    throw std::invalid_argument("alpha_of: element is not theta-affine generic");
  const Mat z = matgrp::theta_norm(x);
  gf2::FieldElem a = p.a;
  for (int i = 1; i <= p.n; ++i) {
    const gf2::FieldElem zi = dring::reduce(z.at(i - 1, i));
    a = gf2::mul(a, gf2::mul(zi, zi));
  }
  return gf2::mul(a, dring::reduce_div_uniformizer(x.at(x.n - 1, 0)));
}

KlValue char_sp(const Mat& y, const CharParams& p) {
  require_params(y, p, /*sp_side=*/true);
  if (!matgrp::is_affine_generic(y, matgrp::Group::Sp))
    throw std::invalid_argument("char_sp: element is not affine generic");
  const RingSpec& r = *y.spec;
  const int n = p.n;
  std::int64_t acc = 0;
  for_each_torus_point(r, n, [&](const std::vector<std::uint64_t>& exps,
                                 const std::vector<RingElem>& teich) {
    const std::uint64_t ord = r.field.q - 1;
    std::vector<RingElem> d(static_cast<size_t>(2 * n), dring::zero(r));
    for (int i = 0; i < n; ++i) {
      d[static_cast<size_t>(i)] = teich[exps[static_cast<size_t>(i)]];
      d[static_cast<size_t>(2 * n - 1 - i)] =
          teich[(ord - exps[static_cast<size_t>(i)]) % ord];
    }
    const Mat conj = matgrp::conjugate_by_diag(d, y);
    const auto c = matgrp::affine_components(conj, matgrp::Group::Sp);
    gf2::FieldElem arg = gf2::zero(r.field);
    for (int i = 0; i < n; ++i) arg = gf2::add(arg, c[static_cast<size_t>(i)]);
    arg = gf2::add(arg, gf2::mul(p.a, c[static_cast<size_t>(n)]));
    acc += gf2::psi(arg);
  });
  return acc;
}

KlValue char_sp_oracle(const Mat& y, const CharParams& p) {
  require_params(y, p, /*sp_side=*/true);
  if (!matgrp::is_affine_generic(y, matgrp::Group::Sp))
    throw std::invalid_argument("char_sp_oracle: element is not affine generic");
  // The closed torus-sum expression in k, evaluated without conjugating:
  //   psi( (t1/t2) y_{1,2} + ... + (t_{n-1}/t_n) y_{n-1,n}
  //        + t_n^2 y_{n,n+1} + (a/t_1^2) y_{2n,1}/w ).
  const gf2::FieldSpec& k = y.spec->field;
  const int n = p.n;
  const auto comps = matgrp::affine_components(y, matgrp::Group::Sp);
  const auto units = unit_bits(k);
  const std::uint64_t ord = k.q - 1;
  std::int64_t acc = 0;
  std::vector<std::uint64_t> exps(static_cast<size_t>(n), 0);
  for (;;) {
    gf2::FieldElem arg = gf2::zero(k);
    for (int i = 0; i + 1 < n; ++i) {
      const std::uint64_t ratio =
          (exps[static_cast<size_t>(i)] + ord - exps[static_cast<size_t>(i + 1)]) % ord;
      arg = gf2::add(arg, gf2::mul(gf2::FieldElem{&k, units[ratio]},
                                   comps[static_cast<size_t>(i)]));
    }
    const std::uint64_t tn2 = (2 * exps[static_cast<size_t>(n - 1)]) % ord;
    arg = gf2::add(arg, gf2::mul(gf2::FieldElem{&k, units[tn2]},
                                 comps[static_cast<size_t>(n - 1)]));
    const std::uint64_t t1m2 = (2 * (ord - exps[0]) % ord) % ord;
    arg = gf2::add(arg, gf2::mul(gf2::mul(p.a, gf2::FieldElem{&k, units[t1m2]}),
                                 comps[static_cast<size_t>(n)]));
    acc += gf2::psi(arg);
    int d = 0;
    while (d < n && ++exps[static_cast<size_t>(d)] == ord) {
      exps[static_cast<size_t>(d)] = 0;
      ++d;
    }
    if (d == n) break;
  }
  return acc;
}

namespace {

// Scale rows by diag(d) on the left and columns by diag(e) on the right;
// exactly the product diag(d) * x * diag(e).
Mat scale_rows_cols(const std::vector<RingElem>& d, const Mat& x,
                    const std::vector<RingElem>& e) {
  Mat out = matgrp::zeros(*x.spec, x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j)
      out.at(i, j) = dring::mul(d[static_cast<size_t>(i)],
                                dring::mul(x.at(i, j), e[static_cast<size_t>(j)]));
  return out;
}

// One theta-twisted torus sweep: for every torus point, hand the callback
// the band sum (in k) and the corner component of t x theta(t)^{-1}.
template <typename F>
void twisted_sweep(const Mat& x, F&& fn) {
  const RingSpec& r = *x.spec;
  const int nn = x.n;       // 2n+1
  const int n = nn / 2;
  for_each_torus_point(r, n, [&](const std::vector<std::uint64_t>& exps,
                                 const std::vector<RingElem>& teich) {
    const std::uint64_t ord = r.field.q - 1;
    std::vector<RingElem> d(static_cast<size_t>(nn), dring::zero(r));
    for (int i = 0; i < n; ++i) {
      d[static_cast<size_t>(i)] = teich[exps[static_cast<size_t>(i)]];
      d[static_cast<size_t>(nn - 1 - i)] =
          teich[(ord - exps[static_cast<size_t>(i)]) % ord];
    }
    d[static_cast<size_t>(n)] = dring::one(r);
    // theta(t)^{-1} of the diagonal lift, then the conjugate t x theta(t)^{-1}.
    Mat dm = matgrp::zeros(r, nn);
    for (int i = 0; i < nn; ++i) dm.at(i, i) = d[static_cast<size_t>(i)];
    const Mat th = matgrp::theta(dm);
    std::vector<RingElem> e(static_cast<size_t>(nn), dring::zero(r));
    for (int i = 0; i < nn; ++i) e[static_cast<size_t>(i)] = dring::invert(th.at(i, i));
    const Mat conj = scale_rows_cols(d, x, e);
    const auto c = matgrp::affine_components(conj, matgrp::Group::GL);
    gf2::FieldElem band = gf2::zero(r.field);
    for (int i = 0; i + 1 < nn; ++i) band = gf2::add(band, c[static_cast<size_t>(i)]);
    fn(band, c[static_cast<size_t>(nn - 1)]);
  });
}

}  // namespace

KlValue twisted_char(const Mat& x, const CharParams& p) {
  require_params(x, p, /*sp_side=*/false);
  if (!matgrp::is_theta_affine_generic(x))
    throw std::invalid_argument("twisted_char: element is not theta-affine generic");
  std::int64_t acc = 0;
  twisted_sweep(x, [&](gf2::FieldElem band, gf2::FieldElem corner) {
    acc += gf2::psi(gf2::add(band, gf2::mul(p.a, corner)));
  });
  return acc;
}

KlValue twisted_char_oracle(const Mat& x, const CharParams& p) {
  require_params(x, p, /*sp_side=*/false);
  if (!matgrp::is_theta_affine_generic(x))
    throw std::invalid_argument(
        "twisted_char_oracle: element is not theta-affine generic");
  // The simplified expression through z = x theta(x):
  //   psi( (t1/t2) z_{1,2} + ... + (t_{n-1}/t_n) z_{n-1,n}
  //        + t_n z_{n,n+1} + (a/t_1^2) x_{2n+1,1}/w ).
  const gf2::FieldSpec& k = x.spec->field;
  const int nn = x.n;
  const int n = nn / 2;
  const Mat z = matgrp::theta_norm(x);
  std::vector<gf2::FieldElem> zb;
  for (int i = 0; i < n; ++i) zb.push_back(dring::reduce(z.at(i, i + 1)));
  const gf2::FieldElem corner =
      dring::reduce_div_uniformizer(x.at(nn - 1, 0));
  const auto units = unit_bits(k);
  const std::uint64_t ord = k.q - 1;
  std::int64_t acc = 0;
  std::vector<std::uint64_t> exps(static_cast<size_t>(n), 0);
  for (;;) {
    gf2::FieldElem arg = gf2::zero(k);
    for (int i = 0; i + 1 < n; ++i) {
      const std::uint64_t ratio =
          (exps[static_cast<size_t>(i)] + ord - exps[static_cast<size_t>(i + 1)]) % ord;
      arg = gf2::add(arg, gf2::mul(gf2::FieldElem{&k, units[ratio]},
                                   zb[static_cast<size_t>(i)]));
    }
    arg = gf2::add(arg, gf2::mul(gf2::FieldElem{&k, units[exps[static_cast<size_t>(n - 1)]]},
                                 zb[static_cast<size_t>(n - 1)]));
    const std::uint64_t t1m2 = (2 * (ord - exps[0]) % ord) % ord;
    arg = gf2::add(arg,
                   gf2::mul(gf2::mul(p.a, gf2::FieldElem{&k, units[t1m2]}), corner));
    acc += gf2::psi(arg);
    int d = 0;
    while (d < n && ++exps[static_cast<size_t>(d)] == ord) {
      exps[static_cast<size_t>(d)] = 0;
      ++d;
    }
    if (d == n) break;
  }
  return acc;
}

bool endoscopy_check(int n, gf2::FieldElem u, gf2::FieldElem a,
                     const RingSpec& r) {
  const Mat gu = matgrp::make_g(n, u, r);
  const Mat hu = matgrp::make_h(n, u, r);
  if (!matgrp::norm_correspondence_check(gu, hu)) return false;
  const CharParams p{n, a};
  const KlValue lhs = twisted_char(gu, p);
  const KlValue rhs = char_sp(hu, p);
  const KlValue kl = kloosterman(n + 1, gf2::mul(a, u));
  return lhs == rhs && rhs == kl;
}

std::vector<EndoscopyRecord> endoscopy_grid(int n, const RingSpec& r) {
  const gf2::FieldSpec& k = r.field;
  const std::uint64_t ord = k.q - 1;
  const auto us = gf2::units(k);

  // Kl^{n+1} table: brute when enumerable, convolution otherwise.
  std::vector<KlValue> kl(ord);
  if (checked_pow_terms(ord, n) <= kBruteTermLimit) {
    for (std::uint64_t e = 0; e < ord; ++e)
      kl[e] = kloosterman(n + 1, us[e]);
  } else {
    kl = kloosterman_table(n + 1, k);
  }

  std::vector<EndoscopyRecord> out;
  out.reserve(ord * ord);
  for (std::uint64_t eu = 0; eu < ord; ++eu) {
    const gf2::FieldElem u = us[eu];
    const Mat gu = matgrp::make_g(n, u, r);
    const Mat hu = matgrp::make_h(n, u, r);
    const bool norm_ok = matgrp::norm_correspondence_check(gu, hu);

    // One sweep per side, all parameters a read off the same components.
    std::vector<std::int64_t> twisted_by_a(ord, 0), sp_by_a(ord, 0);
    twisted_sweep(gu, [&](gf2::FieldElem band, gf2::FieldElem corner) {
      for (std::uint64_t ea = 0; ea < ord; ++ea)
        twisted_by_a[ea] +=
            gf2::psi(gf2::add(band, gf2::mul(us[ea], corner)));
    });
    {
      const int nn = 2 * n;
      for_each_torus_point(r, n, [&](const std::vector<std::uint64_t>& exps,
                                     const std::vector<RingElem>& teich) {
        std::vector<RingElem> d(static_cast<size_t>(nn), dring::zero(r));
        for (int i = 0; i < n; ++i) {
          d[static_cast<size_t>(i)] = teich[exps[static_cast<size_t>(i)]];
          d[static_cast<size_t>(nn - 1 - i)] =
              teich[(ord - exps[static_cast<size_t>(i)]) % ord];
        }
        const Mat conj = matgrp::conjugate_by_diag(d, hu);
        const auto c = matgrp::affine_components(conj, matgrp::Group::Sp);
        gf2::FieldElem band = gf2::zero(k);
        for (int i = 0; i < n; ++i) band = gf2::add(band, c[static_cast<size_t>(i)]);
        for (std::uint64_t ea = 0; ea < ord; ++ea)
          sp_by_a[ea] += gf2::psi(
              gf2::add(band, gf2::mul(us[ea], c[static_cast<size_t>(n)])));
      });
    }

    for (std::uint64_t ea = 0; ea < ord; ++ea) {
      EndoscopyRecord rec;
      rec.u = u;
      rec.a = us[ea];
      rec.norm_ok = norm_ok;
      rec.twisted_value = twisted_by_a[ea];
      rec.sp_value = sp_by_a[ea];
      rec.kl_value = kl[(ea + eu) % ord];
      rec.ok = norm_ok && rec.twisted_value == rec.kl_value &&
               rec.sp_value == rec.kl_value;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::complex<double> kl_fourier(int big_n, std::uint64_t chi_exponent,
                                const gf2::FieldSpec& k) {
  const std::uint64_t ord = k.q - 1;
  const auto table = kloosterman_table(big_n, k);
  // Extended precision keeps the Gauss-power identity checkable at 1e-9
  // even after the large cancellations at q = 64.
  long double re = 0, im = 0;
  const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
  for (std::uint64_t e = 0; e < ord; ++e) {
    const long double klv = table[e].convert_to<long double>();
    const long double ang =
        tau * static_cast<long double>((e * (chi_exponent % ord)) % ord) /
        static_cast<long double>(ord);
    re += klv * std::cos(ang);
    im += klv * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

gf2::FieldElem nonvanishing_witness(int n, gf2::FieldElem a) {
  require_nonzero(a, "nonvanishing_witness");
  const gf2::FieldSpec& k = *a.spec;
  const auto table = kloosterman_table(n + 1, k);
  const std::uint64_t ea = discrete_log(k, a.bits);
  const std::uint64_t ord = k.q - 1;
  const auto us = gf2::units(k);
  for (std::uint64_t eu = 0; eu < ord; ++eu)
    if (table[(ea + eu) % ord] != 0) return us[eu];
  throw std::runtime_error(
      "falsification witness: Kl^{n+1}_{au}(psi) vanished for every u in k^x "
      "(n=" + std::to_string(n) + ", a=" + gf2::to_string(a) + ")");
}

InjectivityReport kl_injectivity(int n, const gf2::FieldSpec& k) {
  const auto table = kloosterman_table(n + 1, k);
  const std::uint64_t ord = k.q - 1;
  const auto us = gf2::units(k);
  std::map<std::vector<KlValue>, std::uint64_t> seen;
  for (std::uint64_t ea = 0; ea < ord; ++ea) {
    std::vector<KlValue> vec(ord);
    for (std::uint64_t eu = 0; eu < ord; ++eu) vec[eu] = table[(ea + eu) % ord];
    const auto [it, inserted] = seen.emplace(std::move(vec), ea);
    if (!inserted) {
      InjectivityReport rep;
      rep.injective = false;
      rep.collision = std::make_pair(us[it->second], us[ea]);
      return rep;
    }
  }
  return {};
}

}  // namespace dyform::charsums
