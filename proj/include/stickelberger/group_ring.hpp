#pragma once

#include "stickelberger/cyclic.hpp"
#include "stickelberger/ints.hpp"

#include <string>

namespace stk {

/// Exact element of the integral group ring of a cyclic group, coefficients
/// in canonical (power-of-generator) order.
struct RingElem {
    GroupRef group;
    Vec coeffs; // size group.order

    bool operator==(const RingElem&) const = default;
};

RingElem ring_zero(const GroupRef& g);
RingElem ring_one(const GroupRef& g);
/// The basis element at canonical index k (k taken mod the order).
RingElem basis_elem(const GroupRef& g, long k);
/// sigma_a for a unit a mod l (full group or subgroup; NotAUnit otherwise).
RingElem sigma(const PrimeContext& ctx, const GroupRef& g, long a);
/// Sum of all group elements.
RingElem norm_element(const GroupRef& g);

RingElem add(const RingElem& x, const RingElem& y);
RingElem sub(const RingElem& x, const RingElem& y);
RingElem scale(const Int& c, const RingElem& x);
RingElem multiply(const RingElem& x, const RingElem& y);
/// x shifted by the group element of index k (multiplication by one basis
/// element; cyclic index rotation).
RingElem shift_mul(const RingElem& x, long k);

Int augmentation(const RingElem& x);

/// Coefficient restriction Z[D] -> Z[H]: keeps the coefficients supported on
/// H, discards the rest. Linear but not multiplicative.
RingElem project_pi_H(const RingElem& x, const PrimeContext& ctx, const SubgroupSpec& h);

/// Ring homomorphism Z[D] -> Z[D/kernel]: each coset coefficient is the sum
/// of the source coefficients over that coset.
RingElem quotient_map_r(const RingElem& x, const PrimeContext& ctx, const SubgroupSpec& kernel);

/// (1 - conj) * x where conj is the unique order-2 element; zero map on the
/// trivial group. NoConjugation when the order is odd and > 1.
RingElem minus_part_image(const RingElem& x);

/// Textual form "c*s(a) + ..." with a the representative unit; parseable
/// back with parse_ring_elem given the same group.
std::string to_string(const RingElem& x);
RingElem parse_ring_elem(const GroupRef& g, const PrimeContext& ctx, const std::string& text);

} // namespace stk
