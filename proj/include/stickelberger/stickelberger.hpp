#pragma once

#include "stickelberger/cyclic.hpp"
#include "stickelberger/group_ring.hpp"
#include "stickelberger/lattice.hpp"

#include <optional>

namespace stk {

/// The Stickelberger element (as its integer numerator vector l*theta), the
/// Stickelberger ideal as a lattice in coefficient coordinates, and the
/// minus-side lattices derived from it.
struct StickelbergerData {
    PrimeContext ctx;
    RingElem l_theta;
    IntegerLattice ideal; // J
    std::optional<IntegerLattice> minus_ambient; // (1 - conj) Z[D]
    std::optional<IntegerLattice> minus_ideal;   // J ∩ minus_ambient
    std::optional<Int> h_minus;                  // [minus_ambient : minus_ideal]
};

/// l*theta: the coefficient at sigma_{a^{-1}} is the representative a.
RingElem theta_numerator(const PrimeContext& ctx);

/// (c - sigma_c) * theta, which is integral; the coefficient at
/// sigma_{a^{-1}} is floor(c*a/l). NotCoprime when gcd(c, l) > 1.
RingElem fractional_multiple(const PrimeContext& ctx, long c);

/// J from the generating set {sigma_a (c - sigma_c) theta}: the plain
/// (c - sigma_c) theta generators are folded first, then the span is closed
/// under multiplication by the group generator, which adds exactly the
/// sigma_a translates.
StickelbergerData build_stickelberger(const PrimeContext& ctx, Exec mode = Exec::parallel);

/// The direct construction Z[D]theta ∩ Z[D], as a lattice intersection of
/// the span of the rotations of l*theta, scaled by 1/l, with Z^n. Used as the
/// independent cross-check route against build_stickelberger.
IntegerLattice ideal_by_intersection(const PrimeContext& ctx, Exec mode = Exec::parallel);

IntegerLattice minus_ambient_lattice(const PrimeContext& ctx);

/// [Z[D]^- : J^-]; fills the minus lattices in `data` on first use. By
/// Iwasawa's index formula this is the relative class number of the l-th
/// cyclotomic field.
const Int& minus_index(StickelbergerData& data, Exec mode = Exec::parallel);

/// pi_H(J) as a lattice in Z^{|H|}; closed under multiplication by the
/// subgroup generator (verified).
IntegerLattice projected_ideal(const StickelbergerData& data, const SubgroupSpec& h, Exec mode = Exec::parallel);

/// The ideal of Z[H] generated by 1 + rho + ... + rho^{|H|/2 - 1} (even |H|).
IntegerLattice half_norm_ideal(long d);

struct ProjectionReport {
    long l = 0;
    long d = 1;
    bool even = false;
    /// odd |H|: [Z[H] : pi_H(J)]. even |H|: n_H, the index of pi_H(J) inside
    /// the half-norm ideal.
    Int index;
    /// positive generator of pi_H(J) ∩ Z, absent when the intersection is 0.
    std::optional<Int> smallest_integer;
};

ProjectionReport projected_index(const StickelbergerData& data, const SubgroupSpec& h, Exec mode = Exec::parallel);

struct QuadraticImageReport {
    long l = 0;
    Int h_quad;          // class number of Q(sqrt(-l)) by residue sums
    Int a_sum, b_sum;    // residue / non-residue sums divided by l
    Int lemma_integer;   // ((l-1)/2) * h(-l) = b^2 - a^2
    bool identity_holds = false;
    bool theta_in_image = false;   // (a, b) lies in r(J)
    bool integer_in_image = false; // (lemma_integer, 0) lies in r(J)
    Int smallest_integer;          // positive generator of r(J) ∩ Z
    IntegerLattice r_ideal;        // r(J) as a lattice in Z^2
};

/// The image r(J) under the restriction map to the quadratic quotient, the
/// residue-sum identity, and the membership checks. WrongResidueClass unless
/// l ≡ 3 (mod 4) and l > 3.
QuadraticImageReport quadratic_image(const StickelbergerData& data, Exec mode = Exec::parallel);

/// Positive generator of L ∩ Z (the identity-coordinate line), if nonzero.
std::optional<Int> smallest_positive_integer_in(const IntegerLattice& lat, Exec mode = Exec::parallel);

} // namespace stk
