#pragma once

#include <stdexcept>
#include <string>

namespace stk {

enum class errc {
    composite_input,
    not_a_divisor,
    not_a_unit,
    group_mismatch,
    dimension_mismatch,
    not_a_sublattice,
    no_conjugation,
    not_coprime,
    wrong_residue_class,
    bad_invariant_factors,
    action_order_mismatch,
    bad_format,
    io_failure,
    internal_error,
};

const char* errc_name(errc e);

/// All domain errors carry a machine-checkable kind plus a human message.
class Error : public std::runtime_error {
public:
    Error(errc kind, const std::string& what)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw Error(kind, what); }

} // namespace stk
