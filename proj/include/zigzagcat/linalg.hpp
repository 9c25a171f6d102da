#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace zzc {

using SparseVec = std::map<int, mpq_class>;

void axpy(SparseVec& y, const mpq_class& a, const SparseVec& x);

/// Incremental row echelon basis over Q. Pivot rows are normalised to a leading 1.
class Echelon {
public:
    /// Reduces v against the current basis; returns true and keeps it if independent.
    bool add(SparseVec v);
    SparseVec reduce(SparseVec v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseVec>& rows() const { return rows_; }
    /// Converts to reduced row echelon form in place.
    void back_substitute();

private:
    std::map<int, SparseVec> rows_;  // keyed by pivot column
};

int rank(const std::vector<SparseVec>& rows);
/// Basis of {x : row . x = 0 for every row}, over columns 0..ncols-1.
std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, int ncols);

}  // namespace zzc
