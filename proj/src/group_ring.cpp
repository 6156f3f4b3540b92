#include "stickelberger/group_ring.hpp"

#include <cctype>
#include <sstream>

namespace stk {

namespace {

void require_same_group(const RingElem& x, const RingElem& y) {
    if (!(x.group == y.group))
        fail(errc::group_mismatch, describe(x.group) + " vs " + describe(y.group));
}

} // namespace

RingElem ring_zero(const GroupRef& g) { return RingElem{g, Vec(static_cast<std::size_t>(g.order))}; }

RingElem ring_one(const GroupRef& g) {
    RingElem e = ring_zero(g);
    e.coeffs[0] = 1;
    return e;
}

RingElem basis_elem(const GroupRef& g, long k) {
    RingElem e = ring_zero(g);
    e.coeffs[static_cast<std::size_t>(((k % g.order) + g.order) % g.order)] = 1;
    return e;
}

RingElem sigma(const PrimeContext& ctx, const GroupRef& g, long a) {
    long k = ctx.dlog_of(a);
    switch (g.kind) {
    case GroupRef::Kind::full: return basis_elem(g, k);
    case GroupRef::Kind::subgroup:
        if (k % g.stride != 0)
            fail(errc::not_a_unit, std::to_string(a) + " is not in the subgroup of order " + std::to_string(g.order));
        return basis_elem(g, k / g.stride);
    case GroupRef::Kind::quotient: return basis_elem(g, k % g.order);
    }
    fail(errc::internal_error, "bad group kind");
}

RingElem norm_element(const GroupRef& g) { return RingElem{g, Vec(static_cast<std::size_t>(g.order), Int(1))}; }

RingElem add(const RingElem& x, const RingElem& y) {
    require_same_group(x, y);
    RingElem r = x;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += y.coeffs[i];
    return r;
}

RingElem sub(const RingElem& x, const RingElem& y) {
    require_same_group(x, y);
    RingElem r = x;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= y.coeffs[i];
    return r;
}

RingElem scale(const Int& c, const RingElem& x) {
    RingElem r = x;
    for (auto& v : r.coeffs) v *= c;
    return r;
}

RingElem multiply(const RingElem& x, const RingElem& y) {
    require_same_group(x, y);
    const long n = x.group.order;
    RingElem r = ring_zero(x.group);
    for (long i = 0; i < n; ++i) {
        if (is_zero(x.coeffs[static_cast<std::size_t>(i)])) continue;
        const Int& xi = x.coeffs[static_cast<std::size_t>(i)];
        for (long j = 0; j < n; ++j) {
            long k = i + j;
            if (k >= n) k -= n;
            mpz_addmul(r.coeffs[static_cast<std::size_t>(k)].get_mpz_t(), xi.get_mpz_t(),
                       y.coeffs[static_cast<std::size_t>(j)].get_mpz_t());
        }
    }
    return r;
}

RingElem shift_mul(const RingElem& x, long k) {
    const long n = x.group.order;
    k = ((k % n) + n) % n;
    RingElem r = ring_zero(x.group);
    for (long i = 0; i < n; ++i) {
        long j = i + k;
        if (j >= n) j -= n;
        r.coeffs[static_cast<std::size_t>(j)] = x.coeffs[static_cast<std::size_t>(i)];
    }
    return r;
}

Int augmentation(const RingElem& x) {
    Int s = 0;
    for (const auto& c : x.coeffs) s += c;
    return s;
}

RingElem project_pi_H(const RingElem& x, const PrimeContext& ctx, const SubgroupSpec& h) {
    if (x.group.kind != GroupRef::Kind::full || x.group.l != ctx.l || h.l != ctx.l)
        fail(errc::group_mismatch, "pi_H projects from the full group ring of the same prime");
    GroupRef target = subgroup_ref(ctx, h);
    if (target.kind == GroupRef::Kind::full) return x; // H = full group: identity
    RingElem r = ring_zero(target);
    for (long k = 0; k < h.d; ++k)
        r.coeffs[static_cast<std::size_t>(k)] = x.coeffs[static_cast<std::size_t>(k * h.step)];
    return r;
}

RingElem quotient_map_r(const RingElem& x, const PrimeContext& ctx, const SubgroupSpec& kernel) {
    if (x.group.kind != GroupRef::Kind::full || x.group.l != ctx.l || kernel.l != ctx.l)
        fail(errc::group_mismatch, "the restriction map is defined on the full group ring");
    GroupRef target = quotient_ref(ctx, kernel);
    if (target.kind == GroupRef::Kind::full) return x;
    const long m = target.order;
    RingElem r = ring_zero(target);
    for (long i = 0; i < ctx.order; ++i)
        r.coeffs[static_cast<std::size_t>(i % m)] += x.coeffs[static_cast<std::size_t>(i)];
    return r;
}

RingElem minus_part_image(const RingElem& x) {
    if (x.group.order == 1) return ring_zero(x.group); // conjugation is trivial
    if (!x.group.has_conjugation())
        fail(errc::no_conjugation, "group of odd order " + std::to_string(x.group.order));
    return sub(x, shift_mul(x, x.group.conj_index()));
}

std::string to_string(const RingElem& x) {
    std::ostringstream out;
    bool first = true;
    for (long k = 0; k < x.group.order; ++k) {
        const Int& c = x.coeffs[static_cast<std::size_t>(k)];
        if (is_zero(c)) continue;
        if (first) {
            out << to_dec(c);
            first = false;
        } else {
            out << (sign(c) < 0 ? " - " : " + ") << to_dec(abs_int(c));
        }
        out << "*s(" << x.group.label_unit(k) << ")";
    }
    if (first) return "0";
    return out.str();
}

RingElem parse_ring_elem(const GroupRef& g, const PrimeContext& ctx, const std::string& text) {
    RingElem r = ring_zero(g);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < text.size() && text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return r;
    bool negate = false;
    bool expect_term = true;
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        if (!expect_term) {
            if (text[i] == '+') negate = false;
            else if (text[i] == '-') negate = true;
            else fail(errc::bad_format, "expected '+' or '-' at offset " + std::to_string(i));
            ++i;
            expect_term = true;
            continue;
        }
        if (text[i] == '-') { negate = !negate; ++i; skip_ws(); }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) fail(errc::bad_format, "expected coefficient at offset " + std::to_string(start));
        Int c = parse_int(text.substr(start, i - start));
        skip_ws();
        if (i + 2 >= text.size() || text.compare(i, 3, "*s(") != 0)
            fail(errc::bad_format, "expected '*s(' at offset " + std::to_string(i));
        i += 3;
        std::size_t close = text.find(')', i);
        if (close == std::string::npos) fail(errc::bad_format, "unterminated s(...)");
        long a = std::stol(text.substr(i, close - i));
        i = close + 1;
        RingElem term = scale(negate ? Int(-c) : c, sigma(ctx, g, a));
        r = add(r, term);
        negate = false;
        expect_term = false;
    }
    if (expect_term) fail(errc::bad_format, "trailing operator");
    return r;
}

} // namespace stk
