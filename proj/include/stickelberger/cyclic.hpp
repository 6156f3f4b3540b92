#pragma once

#include "stickelberger/errors.hpp"
#include "stickelberger/ints.hpp"

#include <vector>

namespace stk {

/// The Galois group of the l-th cyclotomic field, presented as (Z/lZ)* with a
/// canonical ordering: element k is g^k mod l for the least primitive root g.
/// Every coefficient vector downstream is indexed in this order.
struct PrimeContext {
    long l = 0;              // the prime (2 allowed; group is then trivial)
    long g = 1;              // least primitive root mod l (1 for l = 2)
    long order = 1;          // l - 1, or 1 for l = 2
    std::vector<long> unit;  // unit[k] = g^k mod l, k = 0..order-1
    std::vector<long> dlog;  // dlog[u] = k with g^k = u; -1 off the unit set

    bool is_unit(long u) const {
        long r = u % l;
        if (r < 0) r += l;
        return r != 0 && dlog[r] >= 0;
    }

    long dlog_of(long u) const {
        long r = u % l;
        if (r < 0) r += l;
        if (r == 0 || dlog[r] < 0) fail(errc::not_a_unit, std::to_string(u) + " mod " + std::to_string(l));
        return dlog[r];
    }

    long unit_of(long k) const { return unit[((k % order) + order) % order]; }

    /// a^{-1} mod l as the least positive representative.
    long inverse_unit(long a) const { return unit_of(order - dlog_of(a)); }
};

/// The unique subgroup of order d of the cyclic group (Z/lZ)*.
struct SubgroupSpec {
    long l = 0;
    long d = 1;                  // subgroup order, d | l-1
    long step = 1;               // (l-1)/d: dlog stride of the subgroup
    long rho = 1;                // fixed generator g^step
    std::vector<long> elements;  // rho^k mod l, k = 0..d-1
};

PrimeContext make_context(long l);
SubgroupSpec subgroup_of_order(const PrimeContext& ctx, long d);

/// +1 on squares, -1 on non-squares; equals Euler's criterion.
int quadratic_character(const PrimeContext& ctx, long u);

/// Identifies the coefficient group of a group-ring element. All three kinds
/// are cyclic in canonical coordinates: element k is generator^k and basis
/// multiplication is index addition mod `order`.
struct GroupRef {
    enum class Kind { full, subgroup, quotient };

    Kind kind = Kind::full;
    long l = 0;
    long g = 1;
    long order = 1;
    long stride = 1; // subgroup: (l-1)/order; full and quotient: 1

    friend bool operator==(const GroupRef&, const GroupRef&) = default;

    bool has_conjugation() const { return order % 2 == 0 || order == 1; }
    long conj_index() const { return order / 2; } // 0 when trivial

    /// Representative unit of element k (coset representative for quotients).
    long label_unit(long k) const;
};

GroupRef full_group(const PrimeContext& ctx);
GroupRef subgroup_ref(const PrimeContext& ctx, const SubgroupSpec& h);
/// The quotient of the full group by `kernel` (a ring-level restriction map
/// target); kernel of order l-1 gives the trivial group's ref.
GroupRef quotient_ref(const PrimeContext& ctx, const SubgroupSpec& kernel);

std::string describe(const GroupRef& ref);

} // namespace stk
