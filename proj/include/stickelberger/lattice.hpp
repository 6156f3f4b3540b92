#pragma once

#include "stickelberger/errors.hpp"
#include "stickelberger/ints.hpp"

#include <optional>
#include <vector>

namespace stk {

/// A sublattice of Z^n held in canonical Hermite normal form: rows sorted by
/// strictly increasing pivot column, pivots positive, entries above each
/// pivot reduced into [0, pivot). Two generator sets spanning the same
/// lattice always produce the identical basis matrix.
class IntegerLattice {
public:
    IntegerLattice() = default;
    explicit IntegerLattice(long ambient) : ambient_(ambient) {}

    static IntegerLattice standard(long n);        // Z^n
    static IntegerLattice scaled_standard(long n, const Int& m); // m * Z^n

    long ambient_rank() const { return ambient_; }
    long rank() const { return static_cast<long>(basis_.size()); }
    const Mat& basis() const { return basis_; }
    const std::vector<long>& pivot_cols() const { return piv_; }

    bool contains(const Vec& v) const;
    /// Residue of v after HNF reduction; zero iff v is in the lattice.
    Vec reduce(const Vec& v) const;
    /// Integer coordinates of v over the basis rows, if v is in the lattice.
    std::optional<Vec> coefficients(const Vec& v) const;

    /// Product of the HNF pivots (the lattice determinant on its pivot
    /// support; equals the index in Z^n when full rank).
    Int pivot_product() const;

    bool is_canonical() const; // invariant check, used on deserialized data

    bool operator==(const IntegerLattice&) const = default;

private:
    long ambient_ = 0;
    Mat basis_;
    std::vector<long> piv_;

    friend class HnfBuilder;
};

/// Incremental HNF: fold generators in one at a time. This is the serial
/// reference implementation; it also powers ideal-closure passes where new
/// vectors trickle in.
class HnfBuilder {
public:
    explicit HnfBuilder(long ambient);
    explicit HnfBuilder(const IntegerLattice& start);

    /// Fold one generator in. Returns true if the lattice grew.
    bool add(Vec v);
    /// True once the lattice is all of Z^n; adds can no longer grow it.
    bool saturated() const { return saturated_; }
    long rank() const { return static_cast<long>(rows_.size()); }

    /// Normalize to canonical form and hand the lattice over.
    IntegerLattice finish();

private:
    long n_ = 0;
    Mat rows_;               // echelon rows sorted by pivot column
    std::vector<long> piv_;
    bool saturated_ = false;

    void update_saturated();
};

/// Canonical HNF basis of the row span. The parallel path runs a batched
/// column-sweep elimination (OpenMP); the serial path is the incremental
/// reference. Both return the identical canonical basis.
IntegerLattice hnf_from_generators(Mat rows, long ambient, Exec mode = Exec::parallel);

/// Basis of the left kernel {u : u * A = 0} of the row stack A (m rows of
/// width `ambient`), via a unimodular transform carried through HNF
/// reduction. Exact: the returned rows generate the full kernel lattice.
Mat left_kernel(const Mat& rows, long ambient, Exec mode = Exec::parallel);

/// Z-module index [sup : sub]; std::nullopt means infinite (rank deficit).
/// Throws NotASublattice when sub is not contained in sup.
using LatticeIndex = std::optional<Int>;
LatticeIndex index_in(const IntegerLattice& sub, const IntegerLattice& sup, Exec mode = Exec::parallel);

IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b, Exec mode = Exec::parallel);

/// Invariant factors d_1 | d_2 | ... of Z^n / L, with one trailing zero per
/// rank deficit.
std::vector<Int> smith_invariants(const IntegerLattice& lat);

/// |det| of a square integer matrix by fraction-free (Bareiss) elimination.
Int det_bareiss(Mat m, Exec mode = Exec::parallel);

} // namespace stk
