#include "zigzagcat/linalg.hpp"

namespace zzc {

void axpy(SparseVec& y, const mpq_class& a, const SparseVec& x) {
    if (a == 0) return;
    auto hint = y.begin();
    for (const auto& [c, v] : x) {
        hint = y.lower_bound(c);
        if (hint != y.end() && hint->first == c) {
            hint->second += a * v;
            if (hint->second == 0) hint = y.erase(hint);
        } else {
            y.emplace_hint(hint, c, a * v);
        }
    }
}

SparseVec Echelon::reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
        auto p = rows_.find(it->first);
        if (p == rows_.end()) {
            ++it;
            continue;
        }
        int col = it->first;
        mpq_class f = it->second;
        axpy(v, -f, p->second);
        it = v.upper_bound(col);
    }
    return v;
}

bool Echelon::add(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int col = v.begin()->first;
    mpq_class lead = v.begin()->second;
    if (lead != 1)
        for (auto& [c, x] : v) x /= lead;
    rows_.emplace(col, std::move(v));
    return true;
}

void Echelon::back_substitute() {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        int col = it->first;
        for (auto jt = rows_.begin(); jt != rows_.end() && jt->first < col; ++jt) {
            auto f = jt->second.find(col);
            if (f == jt->second.end()) continue;
            mpq_class a = f->second;
            axpy(jt->second, -a, it->second);
        }
    }
}

int rank(const std::vector<SparseVec>& rows) {
    Echelon e;
    for (const auto& r : rows) e.add(r);
    return e.rank();
}

std::vector<SparseVec> nullspace(const std::vector<SparseVec>& rows, int ncols) {
    Echelon e;
    for (const auto& r : rows) e.add(r);
    e.back_substitute();
    std::vector<SparseVec> out;
    const auto& piv = e.rows();
    for (int f = 0; f < ncols; ++f) {
        if (piv.count(f)) continue;
        SparseVec x;
        x[f] = 1;
        for (const auto& [p, row] : piv) {
            auto it = row.find(f);
            if (it != row.end()) x[p] = -it->second;
        }
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace zzc
