#include "stickelberger/lattice.hpp"

#include <algorithm>
#include <cstddef>

namespace stk {

namespace {

std::size_t sz(long v) { return static_cast<std::size_t>(v); }

long first_nonzero(const Vec& v, long from) {
    for (long j = from; j < static_cast<long>(v.size()); ++j)
        if (!is_zero(v[sz(j)])) return j;
    return -1;
}

void negate_row(Vec& v) {
    for (auto& x : v) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
}

/// Reduce entries above each pivot into [0, pivot). Rows must already be in
/// echelon order with positive pivots. `width` may exceed the pivot window
/// (transform-carrying rows); reduction applies across the full width.
void reduce_above(Mat& rows, const std::vector<long>& piv) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const Vec& low = rows[i];
        const Int& p = low[sz(piv[i])];
        for (std::size_t r = 0; r < i; ++r) {
            Int q = fdiv_q(rows[r][sz(piv[i])], p);
            row_submul(rows[r], q, low, sz(piv[i]));
        }
    }
}

} // namespace

IntegerLattice IntegerLattice::standard(long n) { return scaled_standard(n, Int(1)); }

IntegerLattice IntegerLattice::scaled_standard(long n, const Int& m) {
    IntegerLattice lat(n);
    lat.basis_.assign(sz(n), Vec(sz(n)));
    lat.piv_.resize(sz(n));
    for (long i = 0; i < n; ++i) {
        lat.basis_[sz(i)][sz(i)] = m;
        lat.piv_[sz(i)] = i;
    }
    return lat;
}

Vec IntegerLattice::reduce(const Vec& v) const {
    if (static_cast<long>(v.size()) != ambient_)
        fail(errc::dimension_mismatch, "vector length " + std::to_string(v.size()) + " vs ambient " + std::to_string(ambient_));
    Vec w = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Int& entry = w[sz(piv_[i])];
        if (is_zero(entry)) continue;
        Int q = fdiv_q(entry, basis_[i][sz(piv_[i])]);
        row_submul(w, q, basis_[i], sz(piv_[i]));
    }
    return w;
}

bool IntegerLattice::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

std::optional<Vec> IntegerLattice::coefficients(const Vec& v) const {
    if (static_cast<long>(v.size()) != ambient_)
        fail(errc::dimension_mismatch, "vector length mismatch");
    Vec w = v;
    Vec qs(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        qs[i] = fdiv_q(w[sz(piv_[i])], basis_[i][sz(piv_[i])]);
        row_submul(w, qs[i], basis_[i], sz(piv_[i]));
    }
    if (!is_zero_vec(w)) return std::nullopt;
    return qs;
}

Int IntegerLattice::pivot_product() const {
    Int p = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) p *= basis_[i][sz(piv_[i])];
    return p;
}

bool IntegerLattice::is_canonical() const {
    long prev = -1;
    if (piv_.size() != basis_.size()) return false;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (static_cast<long>(basis_[i].size()) != ambient_) return false;
        long j = first_nonzero(basis_[i], 0);
        if (j < 0 || j != piv_[i] || j <= prev) return false;
        if (sign(basis_[i][sz(j)]) <= 0) return false;
        prev = j;
    }
    for (std::size_t i = 1; i < basis_.size(); ++i)
        for (std::size_t r = 0; r < i; ++r) {
            const Int& above = basis_[r][sz(piv_[i])];
            if (sign(above) < 0 || above >= basis_[i][sz(piv_[i])]) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Incremental builder (serial reference)

HnfBuilder::HnfBuilder(long ambient) : n_(ambient) {}

HnfBuilder::HnfBuilder(const IntegerLattice& start)
    : n_(start.ambient_rank()), rows_(start.basis()), piv_(start.pivot_cols()) {
    update_saturated();
}

void HnfBuilder::update_saturated() {
    if (rank() != n_) { saturated_ = false; return; }
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i][sz(piv_[i])] != 1) { saturated_ = false; return; }
    saturated_ = true;
}

bool HnfBuilder::add(Vec v) {
    if (static_cast<long>(v.size()) != n_)
        fail(errc::dimension_mismatch, "row length " + std::to_string(v.size()) + " vs ambient " + std::to_string(n_));
    if (saturated_) return false;
    bool grew = false;
    long j = first_nonzero(v, 0);
    std::size_t i = 0;
    while (j >= 0) {
        while (i < rows_.size() && piv_[i] < j) ++i;
        if (i == rows_.size() || piv_[i] > j) {
            if (sign(v[sz(j)]) < 0) negate_row(v);
            rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(i), std::move(v));
            piv_.insert(piv_.begin() + static_cast<std::ptrdiff_t>(i), j);
            update_saturated();
            return true;
        }
        Int& p = rows_[i][sz(j)];
        if (divisible(v[sz(j)], p)) {
            Int q = divexact(v[sz(j)], p);
            row_submul(v, q, rows_[i], sz(j));
        } else {
            // replace the pivot row by the gcd combination; the remainder of
            // v gets a zero in this column. The 2x2 step has determinant 1.
            Int g, s, t;
            xgcd(p, v[sz(j)], g, s, t);
            Int a_over = divexact(p, g), b_over = divexact(v[sz(j)], g);
            Vec combo(sz(n_));
            for (long c = j; c < n_; ++c) {
                combo[sz(c)] = s * rows_[i][sz(c)];
                mpz_addmul(combo[sz(c)].get_mpz_t(), t.get_mpz_t(), v[sz(c)].get_mpz_t());
            }
            Vec rem(sz(n_));
            for (long c = j; c < n_; ++c) {
                rem[sz(c)] = a_over * v[sz(c)];
                mpz_submul(rem[sz(c)].get_mpz_t(), b_over.get_mpz_t(), rows_[i][sz(c)].get_mpz_t());
            }
            rows_[i] = std::move(combo);
            v = std::move(rem);
            grew = true;
        }
        j = first_nonzero(v, j + 1);
        ++i;
    }
    if (grew) update_saturated();
    return grew;
}

IntegerLattice HnfBuilder::finish() {
    reduce_above(rows_, piv_);
    IntegerLattice lat(n_);
    lat.basis_ = std::move(rows_);
    lat.piv_ = std::move(piv_);
    rows_.clear();
    piv_.clear();
    return lat;
}

// ---------------------------------------------------------------------------
// Batched column-sweep elimination (OpenMP path)

namespace {

/// Echelonize `work` in place over pivot window [0, window); rows may carry
/// extra transform columns beyond the window. Returns indices of the pivot
/// rows in pivot-column order; `piv_out` gets the pivot columns. Rows whose
/// window part vanishes end up listed in `zero_rows`.
void batch_echelon(Mat& work, long window, std::vector<std::size_t>& pivot_rows, std::vector<long>& piv_out,
                   std::vector<std::size_t>& zero_rows) {
    std::vector<std::size_t> active(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) active[i] = i;
    pivot_rows.clear();
    piv_out.clear();
    zero_rows.clear();

    std::vector<std::size_t> cand;
    for (long j = 0; j < window && !active.empty(); ++j) {
        cand.clear();
        for (std::size_t r : active)
            if (!is_zero(work[r][sz(j)])) cand.push_back(r);
        if (cand.empty()) continue;
        while (cand.size() > 1) {
            // smallest |entry| wins; everyone else reduces against it
            std::size_t best = cand[0];
            for (std::size_t r : cand)
                if (mpz_cmpabs(work[r][sz(j)].get_mpz_t(), work[best][sz(j)].get_mpz_t()) < 0) best = r;
            const Vec& ref = work[best];
            const long m = static_cast<long>(cand.size());
#pragma omp parallel for schedule(static)
            for (long t = 0; t < m; ++t) {
                std::size_t r = cand[sz(t)];
                if (r == best) continue;
                Int q = ndiv_q(work[r][sz(j)], ref[sz(j)]);
                row_submul(work[r], q, ref, sz(j));
            }
            std::vector<std::size_t> next;
            next.reserve(cand.size());
            for (std::size_t r : cand)
                if (!is_zero(work[r][sz(j)])) next.push_back(r);
            cand.swap(next);
        }
        std::size_t p = cand[0];
        if (sign(work[p][sz(j)]) < 0) negate_row(work[p]);
        pivot_rows.push_back(p);
        piv_out.push_back(j);
        std::erase(active, p);
        // rows whose window part vanished are finished
        std::vector<std::size_t> still;
        still.reserve(active.size());
        for (std::size_t r : active) {
            long f = first_nonzero(work[r], j + 1);
            if (f == -1 || f >= window) zero_rows.push_back(r);
            else still.push_back(r);
        }
        active.swap(still);
    }
    for (std::size_t r : active) zero_rows.push_back(r);
}

IntegerLattice hnf_batch(Mat rows, long ambient) {
    std::vector<std::size_t> pivot_rows, zero_rows;
    std::vector<long> piv;
    batch_echelon(rows, ambient, pivot_rows, piv, zero_rows);
    // pivot rows come out echelon-sorted; the builder only re-inserts them
    HnfBuilder b(ambient);
    for (std::size_t r : pivot_rows) b.add(std::move(rows[r]));
    return b.finish();
}

} // namespace

IntegerLattice hnf_from_generators(Mat rows, long ambient, Exec mode) {
    for (const auto& r : rows)
        if (static_cast<long>(r.size()) != ambient)
            fail(errc::dimension_mismatch, "generator length " + std::to_string(r.size()) + " vs ambient " + std::to_string(ambient));
    if (mode == Exec::serial || rows.size() < 8) {
        HnfBuilder b(ambient);
        for (auto& r : rows) {
            if (b.saturated()) break;
            b.add(std::move(r));
        }
        return b.finish();
    }
    return hnf_batch(std::move(rows), ambient);
}

Mat left_kernel(const Mat& rows, long ambient, Exec mode) {
    const std::size_t m = rows.size();
    Mat work(m, Vec());
    for (std::size_t i = 0; i < m; ++i) {
        if (static_cast<long>(rows[i].size()) != ambient)
            fail(errc::dimension_mismatch, "row length mismatch in kernel computation");
        work[i].resize(sz(ambient) + m);
        for (long j = 0; j < ambient; ++j) work[i][sz(j)] = rows[i][sz(j)];
        work[i][sz(ambient) + i] = 1;
    }
    Mat kernel;
    if (mode == Exec::serial || m < 8) {
        // incremental with transform carried in the tail columns
        Mat basis;
        std::vector<long> piv;
        for (auto& v : work) {
            long j = first_nonzero(v, 0);
            std::size_t i = 0;
            while (j >= 0 && j < ambient) {
                while (i < basis.size() && piv[i] < j) ++i;
                if (i == basis.size() || piv[i] > j) {
                    if (sign(v[sz(j)]) < 0) negate_row(v);
                    basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(i), std::move(v));
                    piv.insert(piv.begin() + static_cast<std::ptrdiff_t>(i), j);
                    j = -2; // inserted
                    break;
                }
                Int& p = basis[i][sz(j)];
                if (divisible(v[sz(j)], p)) {
                    Int q = divexact(v[sz(j)], p);
                    row_submul(v, q, basis[i], sz(j));
                } else {
                    Int g, s, t;
                    xgcd(p, v[sz(j)], g, s, t);
                    Int a_over = divexact(p, g), b_over = divexact(v[sz(j)], g);
                    Vec combo(v.size()), rem(v.size());
                    for (std::size_t c = sz(j); c < v.size(); ++c) {
                        combo[c] = s * basis[i][c];
                        mpz_addmul(combo[c].get_mpz_t(), t.get_mpz_t(), v[c].get_mpz_t());
                        rem[c] = a_over * v[c];
                        mpz_submul(rem[c].get_mpz_t(), b_over.get_mpz_t(), basis[i][c].get_mpz_t());
                    }
                    basis[i] = std::move(combo);
                    v = std::move(rem);
                }
                j = first_nonzero(v, j + 1);
                ++i;
            }
            if (j == -1 || j >= ambient) {
                // window part vanished: the transform tail is a kernel vector
                Vec k(m);
                for (std::size_t c = 0; c < m; ++c) k[c] = v[sz(ambient) + c];
                kernel.push_back(std::move(k));
            }
        }
    } else {
        std::vector<std::size_t> pivot_rows, zero_rows;
        std::vector<long> piv;
        batch_echelon(work, ambient, pivot_rows, piv, zero_rows);
        std::sort(zero_rows.begin(), zero_rows.end());
        for (std::size_t r : zero_rows) {
            Vec k(m);
            for (std::size_t c = 0; c < m; ++c) k[c] = work[r][sz(ambient) + c];
            kernel.push_back(std::move(k));
        }
    }
    return kernel;
}

LatticeIndex index_in(const IntegerLattice& sub, const IntegerLattice& sup, Exec mode) {
    if (sub.ambient_rank() != sup.ambient_rank())
        fail(errc::dimension_mismatch, "ambient ranks differ");
    Mat coeffs;
    coeffs.reserve(sub.basis().size());
    for (const auto& row : sub.basis()) {
        auto c = sup.coefficients(row);
        if (!c) fail(errc::not_a_sublattice, "basis row escapes the claimed superlattice");
        coeffs.push_back(std::move(*c));
    }
    if (sub.rank() < sup.rank()) return std::nullopt;
    if (sub.rank() > sup.rank())
        fail(errc::internal_error, "containment with rank excess");
    if (sub.rank() == 0) return Int(1);
    Int d = det_bareiss(std::move(coeffs), mode);
    if (is_zero(d)) fail(errc::internal_error, "dependent basis rows");
    return abs_int(d);
}

IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b, Exec mode) {
    if (a.ambient_rank() != b.ambient_rank())
        fail(errc::dimension_mismatch, "ambient ranks differ");
    const long n = a.ambient_rank();
    if (a.rank() == 0 || b.rank() == 0) return IntegerLattice(n);
    Mat stack;
    stack.reserve(a.basis().size() + b.basis().size());
    for (const auto& r : a.basis()) stack.push_back(r);
    for (const auto& r : b.basis()) stack.push_back(r);
    Mat kernel = left_kernel(stack, n, mode);
    Mat gens;
    gens.reserve(kernel.size());
    const std::size_t ra = a.basis().size();
    for (const auto& u : kernel) {
        Vec w(sz(n));
        for (std::size_t i = 0; i < ra; ++i)
            for (long j = 0; j < n; ++j)
                mpz_addmul(w[sz(j)].get_mpz_t(), u[i].get_mpz_t(), a.basis()[i][sz(j)].get_mpz_t());
        gens.push_back(std::move(w));
    }
    return hnf_from_generators(std::move(gens), n, mode);
}

std::vector<Int> smith_invariants(const IntegerLattice& lat) {
    Mat m = lat.basis();
    const long rows = lat.rank();
    const long cols = lat.ambient_rank();
    std::vector<Int> inv;
    long t = 0;
    while (t < rows) {
        // locate a nonzero entry in the remaining block, smallest |.| first
        long pi = -1, pj = -1;
        for (long i = t; i < rows; ++i)
            for (long j = t; j < cols; ++j)
                if (!is_zero(m[sz(i)][sz(j)]) &&
                    (pi < 0 || mpz_cmpabs(m[sz(i)][sz(j)].get_mpz_t(), m[sz(pi)][sz(pj)].get_mpz_t()) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[sz(t)], m[sz(pi)]);
        for (long i = 0; i < rows; ++i) std::swap(m[sz(i)][sz(t)], m[sz(i)][sz(pj)]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (long i = t + 1; i < rows; ++i) {
                if (is_zero(m[sz(i)][sz(t)])) continue;
                if (divisible(m[sz(i)][sz(t)], m[sz(t)][sz(t)])) {
                    Int q = divexact(m[sz(i)][sz(t)], m[sz(t)][sz(t)]);
                    for (long j = t; j < cols; ++j) mpz_submul(m[sz(i)][sz(j)].get_mpz_t(), q.get_mpz_t(), m[sz(t)][sz(j)].get_mpz_t());
                } else {
                    Int g, s, u;
                    xgcd(m[sz(t)][sz(t)], m[sz(i)][sz(t)], g, s, u);
                    Int a_over = divexact(m[sz(t)][sz(t)], g), b_over = divexact(m[sz(i)][sz(t)], g);
                    for (long j = t; j < cols; ++j) {
                        Int top = s * m[sz(t)][sz(j)] + u * m[sz(i)][sz(j)];
                        Int bot = a_over * m[sz(i)][sz(j)] - b_over * m[sz(t)][sz(j)];
                        m[sz(t)][sz(j)] = top;
                        m[sz(i)][sz(j)] = bot;
                    }
                    clean = false;
                }
            }
            for (long j = t + 1; j < cols; ++j) {
                if (is_zero(m[sz(t)][sz(j)])) continue;
                if (divisible(m[sz(t)][sz(j)], m[sz(t)][sz(t)])) {
                    Int q = divexact(m[sz(t)][sz(j)], m[sz(t)][sz(t)]);
                    for (long i = t; i < rows; ++i) mpz_submul(m[sz(i)][sz(j)].get_mpz_t(), q.get_mpz_t(), m[sz(i)][sz(t)].get_mpz_t());
                } else {
                    Int g, s, u;
                    xgcd(m[sz(t)][sz(t)], m[sz(t)][sz(j)], g, s, u);
                    Int a_over = divexact(m[sz(t)][sz(t)], g), b_over = divexact(m[sz(t)][sz(j)], g);
                    for (long i = t; i < rows; ++i) {
                        Int left = s * m[sz(i)][sz(t)] + u * m[sz(i)][sz(j)];
                        Int right = a_over * m[sz(i)][sz(j)] - b_over * m[sz(i)][sz(t)];
                        m[sz(i)][sz(t)] = left;
                        m[sz(i)][sz(j)] = right;
                    }
                    clean = false;
                }
            }
            if (clean) {
                // enforce the divisibility chain: fold any offending entry in
                for (long i = t + 1; i < rows && clean; ++i)
                    for (long j = t + 1; j < cols && clean; ++j)
                        if (!divisible(m[sz(i)][sz(j)], m[sz(t)][sz(t)])) {
                            for (long jj = t; jj < cols; ++jj) m[sz(t)][sz(jj)] += m[sz(i)][sz(jj)];
                            clean = false;
                        }
            }
        }
        ++t;
    }
    for (long i = 0; i < t; ++i) inv.push_back(abs_int(m[sz(i)][sz(i)]));
    for (long i = 0; i < cols - t; ++i) inv.push_back(Int(0));
    return inv;
}

Int det_bareiss(Mat m, Exec mode) {
    const long r = static_cast<long>(m.size());
    for (const auto& row : m)
        if (static_cast<long>(row.size()) != r) fail(errc::dimension_mismatch, "determinant of a non-square matrix");
    if (r == 0) return Int(1);
    Int prev = 1;
    int sgn = 1;
    for (long k = 0; k < r - 1; ++k) {
        if (is_zero(m[sz(k)][sz(k)])) {
            long swap_row = -1;
            for (long i = k + 1; i < r; ++i)
                if (!is_zero(m[sz(i)][sz(k)])) { swap_row = i; break; }
            if (swap_row < 0) return Int(0);
            std::swap(m[sz(k)], m[sz(swap_row)]);
            sgn = -sgn;
        }
        const bool par = (mode == Exec::parallel) && (r - k > 16);
#pragma omp parallel for schedule(static) if (par)
        for (long i = k + 1; i < r; ++i) {
            Vec& row = m[sz(i)];
            const Vec& pivot = m[sz(k)];
            for (long j = k + 1; j < r; ++j) {
                Int v = row[sz(j)] * pivot[sz(k)] - row[sz(k)] * pivot[sz(j)];
                row[sz(j)] = divexact(v, prev);
            }
            row[sz(k)] = 0;
        }
        prev = m[sz(k)][sz(k)];
    }
    Int d = m[sz(r - 1)][sz(r - 1)];
    return sgn < 0 ? Int(-d) : d;
}

} // namespace stk
