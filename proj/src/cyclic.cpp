#include "stickelberger/cyclic.hpp"

#include <algorithm>

namespace stk {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    Int z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

long pow_mod(long base, long e, long m) {
    Int r;
    mpz_powm_ui(r.get_mpz_t(), Int(base).get_mpz_t(), static_cast<unsigned long>(e), Int(m).get_mpz_t());
    return to_long(r);
}

std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

long least_primitive_root(long l) {
    const long n = l - 1;
    const auto qs = prime_factors(n);
    for (long g = 2; g < l; ++g) {
        bool ok = true;
        for (long q : qs)
            if (pow_mod(g, n / q, l) == 1) { ok = false; break; }
        if (ok) return g;
    }
    fail(errc::internal_error, "no primitive root mod " + std::to_string(l));
}

} // namespace

PrimeContext make_context(long l) {
    if (l < 2 || !is_prime(l)) fail(errc::composite_input, std::to_string(l) + " is not prime");
    PrimeContext ctx;
    ctx.l = l;
    if (l == 2) {
        ctx.g = 1;
        ctx.order = 1;
        ctx.unit = {1};
        ctx.dlog = {-1, 0};
        return ctx;
    }
    ctx.g = least_primitive_root(l);
    ctx.order = l - 1;
    ctx.unit.resize(ctx.order);
    ctx.dlog.assign(l, -1);
    long u = 1;
    for (long k = 0; k < ctx.order; ++k) {
        ctx.unit[k] = u;
        ctx.dlog[u] = k;
        u = (u * ctx.g) % l; // l < 2^31 keeps this in range
    }
    return ctx;
}

SubgroupSpec subgroup_of_order(const PrimeContext& ctx, long d) {
    if (d <= 0 || ctx.order % d != 0)
        fail(errc::not_a_divisor, std::to_string(d) + " does not divide " + std::to_string(ctx.order));
    SubgroupSpec h;
    h.l = ctx.l;
    h.d = d;
    h.step = ctx.order / d;
    h.rho = ctx.unit_of(h.step % ctx.order);
    h.elements.resize(d);
    for (long k = 0; k < d; ++k) h.elements[k] = ctx.unit_of(k * h.step);
    return h;
}

int quadratic_character(const PrimeContext& ctx, long u) {
    return ctx.dlog_of(u) % 2 == 0 ? +1 : -1;
}

long GroupRef::label_unit(long k) const {
    if (l == 2) return 1;
    Int r;
    long e = ((k % order) + order) % order * stride;
    mpz_powm_ui(r.get_mpz_t(), Int(g).get_mpz_t(), static_cast<unsigned long>(e), Int(l).get_mpz_t());
    return to_long(r);
}

GroupRef full_group(const PrimeContext& ctx) {
    return GroupRef{GroupRef::Kind::full, ctx.l, ctx.g, ctx.order, 1};
}

GroupRef subgroup_ref(const PrimeContext& ctx, const SubgroupSpec& h) {
    if (h.l != ctx.l) fail(errc::group_mismatch, "subgroup belongs to a different prime");
    if (h.d == ctx.order) return full_group(ctx); // the whole group is its own subgroup
    return GroupRef{GroupRef::Kind::subgroup, ctx.l, ctx.g, h.d, h.step};
}

GroupRef quotient_ref(const PrimeContext& ctx, const SubgroupSpec& kernel) {
    if (kernel.l != ctx.l) fail(errc::group_mismatch, "kernel belongs to a different prime");
    if (kernel.d == 1) return full_group(ctx); // trivial kernel: the map is the identity
    return GroupRef{GroupRef::Kind::quotient, ctx.l, ctx.g, ctx.order / kernel.d, 1};
}

std::string describe(const GroupRef& ref) {
    switch (ref.kind) {
    case GroupRef::Kind::full: return "(Z/" + std::to_string(ref.l) + ")*";
    case GroupRef::Kind::subgroup:
        return "subgroup of order " + std::to_string(ref.order) + " in (Z/" + std::to_string(ref.l) + ")*";
    case GroupRef::Kind::quotient:
        return "quotient of order " + std::to_string(ref.order) + " of (Z/" + std::to_string(ref.l) + ")*";
    }
    return "?";
}

const char* errc_name(errc e) {
    switch (e) {
    case errc::composite_input: return "CompositeInput";
    case errc::not_a_divisor: return "NotADivisor";
    case errc::not_a_unit: return "NotAUnit";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_a_sublattice: return "NotASublattice";
    case errc::no_conjugation: return "NoConjugation";
    case errc::not_coprime: return "NotCoprime";
    case errc::wrong_residue_class: return "WrongResidueClass";
    case errc::bad_invariant_factors: return "BadInvariantFactors";
    case errc::action_order_mismatch: return "ActionOrderMismatch";
    case errc::bad_format: return "BadFormat";
    case errc::io_failure: return "IoFailure";
    case errc::internal_error: return "InternalError";
    }
    return "Error";
}

Int parse_int(const std::string& s) {
    if (s.empty()) fail(errc::bad_format, "empty integer literal");
    Int r;
    if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
        fail(errc::bad_format, "bad integer literal '" + s + "'");
    return r;
}

void row_submul(Vec& dst, const Int& q, const Vec& src, std::size_t from) {
    if (is_zero(q)) return;
    for (std::size_t j = from; j < dst.size(); ++j)
        mpz_submul(dst[j].get_mpz_t(), q.get_mpz_t(), src[j].get_mpz_t());
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

} // namespace stk
