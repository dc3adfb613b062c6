#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hermcert {

/// Exponent vector of a monomial in n+1 variables.
using MultiIndex = std::vector<int>;

int degree(const MultiIndex& a);

MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b);

/// Componentwise difference, or nullopt if any component would go negative.
std::optional<MultiIndex> mi_sub(const MultiIndex& a, const MultiIndex& b);

/// Graded-lex comparison within a fixed degree: a precedes b when a is
/// lexicographically larger (so (2,0) < (1,1) < (0,2) in basis order).
bool grlex_before(const MultiIndex& a, const MultiIndex& b);

/// All multi-indices of length n+1 and degree d, in the fixed basis order.
/// This order pins the row/column indexing of every coefficient matrix.
class MonomialBasis {
public:
    MonomialBasis(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t size() const { return elements_.size(); }

    const MultiIndex& unrank(std::size_t i) const { return elements_.at(i); }
    std::size_t rank(const MultiIndex& a) const;

    const std::vector<MultiIndex>& elements() const { return elements_; }

private:
    int n_, d_;
    std::vector<MultiIndex> elements_;
    std::map<MultiIndex, std::size_t> index_;
};

inline MonomialBasis basis_enumerate(int n, int d) { return MonomialBasis(n, d); }

}  // namespace hermcert
