#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qschur/partition.hpp"

namespace qschur {

/// Multiplicity vector (mu_1, ..., mu_r): entry i appears mu_i times.
/// Not required to be weakly decreasing; zeros contribute no cells.
using ContentVector = std::vector<int>;

/// The cells of outer not in inner.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition outer_shape, Partition inner_shape);

    long long cells() const;
    int row_cells(int row) const { return outer.part(row) - inner.part(row); }
};

enum class TableauKind {
    ordinary,   // weakly increasing across rows, strictly increasing down columns
    conjugate,  // strictly increasing across rows, weakly increasing down columns
};

/// A filling of a skew shape with positive integers. Row/column
/// monotonicity for the given orientation is checked on construction.
class SkewTableau {
public:
    SkewTableau(SkewShape shape, std::vector<std::vector<int>> row_entries,
                TableauKind kind = TableauKind::ordinary);

    const SkewShape& shape() const { return shape_; }
    TableauKind kind() const { return kind_; }

    /// Entries of each row, left to right, inner cells excluded.
    const std::vector<std::vector<int>>& row_entries() const { return rows_; }

    /// Entry at 1-based diagram coordinates; throws unless (row, col) is a cell.
    int entry(int row, int col) const;

    /// Rows read bottom to top, each left to right.
    std::vector<int> word() const;

    /// content()[i - 1] counts the occurrences of entry i.
    std::vector<long long> content() const;

    /// Rows of entries with "." for inner-shape cells.
    std::string to_text() const;

private:
    SkewShape shape_;
    TableauKind kind_;
    std::vector<std::vector<int>> rows_;
};

/// Visits every filling of the shape with the given content, in row-major
/// cell order with the smallest entry tried first at each branch.
void for_each_tableau(const SkewShape& shape, const ContentVector& content,
                      TableauKind kind,
                      const std::function<void(const SkewTableau&)>& visit);

std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, const ContentVector& content);
std::vector<SkewTableau> enumerate_conjugate_tableaux(const SkewShape& shape,
                                                      const ContentVector& content);

/// True iff every suffix contains at least as many i's as (i+1)'s, for all i.
bool is_reverse_lattice(std::span<const int> word);

/// Classical Littlewood-Richardson coefficient: tableaux on nu/lambda of
/// content mu whose word is a reverse lattice word.
long long classical_lr(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Classical Kostka number: all tableaux on nu/lambda with content mu.
long long classical_kostka(const Partition& lambda, const ContentVector& mu,
                           const Partition& nu);

/// Properness of an ordinary tableau: every entry v in the first column at
/// row l+p must see, in the k-th column at row p, either a box of the inner
/// shape or a cell with entry at most v.
bool is_proper(const SkewTableau& t, const GrassmannContext& ctx);

/// Equivalent prefix-shape characterization: for every value i, the shape
/// holding the entries <= i has first column at most l longer than its k-th.
bool is_proper_via_prefixes(const SkewTableau& t, const GrassmannContext& ctx);

/// Conjugate-orientation properness: as is_proper but the k-th column entry
/// must be strictly smaller.
bool is_proper_conjugate(const SkewTableau& t, const GrassmannContext& ctx);

/// Prefix form of the conjugate condition: for every value i, the first
/// column of the shape holding entries <= i exceeds the k-th column of the
/// shape holding entries < i by at most l.
bool is_proper_conjugate_via_prefixes(const SkewTableau& t, const GrassmannContext& ctx);

/// The m with total = base + m * hook_size, if a nonnegative one exists.
std::optional<int> hook_multiplicity(long long total, long long base, int hook_size);

/// Quantum Kostka number: proper tableaux on nu[m]/lambda with content mu,
/// where nu[m] adds the m full-width rim hooks fixed by the degree equation.
/// Zero when no nonnegative m matches.
long long quantum_kostka(const Partition& lambda, const ContentVector& mu,
                         const Partition& nu, const GrassmannContext& ctx);

/// Conjugate quantum Kostka number: proper conjugate tableaux on the same
/// shapes; content entries are bounded by l instead of k.
long long conjugate_quantum_kostka(const Partition& lambda, const ContentVector& mu,
                                   const Partition& nu, const GrassmannContext& ctx);

} // namespace qschur
