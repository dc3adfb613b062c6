#include "hermcert/multiindex.hpp"

#include <numeric>
#include <stdexcept>

namespace hermcert {

int degree(const MultiIndex& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::optional<MultiIndex> mi_sub(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw std::invalid_argument("multi-index length mismatch");
    MultiIndex r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) return std::nullopt;
    }
    return r;
}

bool grlex_before(const MultiIndex& a, const MultiIndex& b) {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a > b;  // lexicographically larger exponent vector comes first
}

MonomialBasis::MonomialBasis(int n, int d) : n_(n), d_(d) {
    if (n < 0 || d < 0) throw std::invalid_argument("basis_enumerate: negative n or d");
    // Enumerate recursively; the loop order yields graded-lex directly.
    MultiIndex cur(n + 1, 0);
    // iterative: treat as compositions of d into n+1 parts, first part descending
    std::vector<std::pair<int, int>> stack;  // (position, remaining) handled via recursion
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n) {
            cur[pos] = remaining;
            elements_.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, d);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
}

std::size_t MonomialBasis::rank(const MultiIndex& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) throw std::invalid_argument("multi-index not in basis");
    return it->second;
}

}  // namespace hermcert
