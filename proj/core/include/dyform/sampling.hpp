#pragma once

#include "dyform/matgrp.hpp"
#include "dyform/rng.hpp"

namespace dyform::sampling {

// Deterministic samplers for the randomized suites. All matrix samplers are
// correct by construction: the filtration pattern (and, on the Sp side, the
// symplectic condition) holds exactly, not with high probability.

gf2::FieldElem random_elem(rng::SplitMix64& g, const gf2::FieldSpec& k);
gf2::FieldElem random_nonzero(rng::SplitMix64& g, const gf2::FieldSpec& k);

dring::RingElem random_ring_elem(rng::SplitMix64& g, const dring::RingSpec& r);
dring::RingElem random_unit(rng::SplitMix64& g, const dring::RingSpec& r);
// Valuation >= 1 (resp. exactly 1).
dring::RingElem random_in_p(rng::SplitMix64& g, const dring::RingSpec& r);
dring::RingElem random_val_one(rng::SplitMix64& g, const dring::RingSpec& r);

// GL_N samplers by entrywise pattern.
matgrp::Mat random_gl_iwahori(rng::SplitMix64& g, const dring::RingSpec& r, int n_dim);
matgrp::Mat random_gl_iwahori_plus(rng::SplitMix64& g, const dring::RingSpec& r, int n_dim);
matgrp::Mat random_gl_iwahori_plusplus(rng::SplitMix64& g, const dring::RingSpec& r, int n_dim);

// I+ element of GL_{2n+1} whose symmetrized superdiagonal sums are fresh
// units and whose corner has valuation exactly 1.
matgrp::Mat random_theta_affine_generic(rng::SplitMix64& g, const dring::RingSpec& r, int n);

// Control sample in I+ that deliberately fails theta-affine genericity,
// either through one non-unit symmetrized sum or a corner of valuation != 1.
matgrp::Mat random_theta_nongeneric_control(rng::SplitMix64& g, const dring::RingSpec& r, int n);

// Element of I+ of Sp_2n: a product of symplectic root-group elements and a
// pro-unipotent torus part.
matgrp::Mat random_sp_iwahori_plus(rng::SplitMix64& g, const dring::RingSpec& r, int n);

// As above, then corrected along the simple affine root groups so that every
// affine component is a fresh unit.
matgrp::Mat random_sp_affine_generic(rng::SplitMix64& g, const dring::RingSpec& r, int n);

}  // namespace dyform::sampling
