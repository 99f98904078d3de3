#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qschur/common.hpp"

namespace qschur {

/// An integer partition, stored as its weakly decreasing positive parts.
/// Trailing zeros are never stored; the empty partition is a first-class
/// value and prints as "0".
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Parses the comma-separated textual form, e.g. "5,4,4,2,2"; "0" is empty.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    long long weight() const;

    /// The i-th part, 1-based; zero beyond the stored length.
    int part(int i) const;

    /// Transposed diagram: result_j = #{i : part(i) >= j}.
    Partition conjugate() const;

    /// Cell-wise containment: inner_i <= part(i) for all i.
    bool contains(const Partition& inner) const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// The pair (l, k) fixing the ring Lambda(l, k): partitions live in an
/// l x k rectangle and rim hooks have n = l + k boxes.
class GrassmannContext {
public:
    GrassmannContext(int rows, int cols);

    int rows() const { return rows_; }   // l
    int cols() const { return cols_; }   // k
    int hook_size() const { return rows_ + cols_; }   // n

    /// The swapped rectangle (k, l).
    GrassmannContext dual() const { return {cols_, rows_}; }

    friend bool operator==(const GrassmannContext&, const GrassmannContext&) = default;

private:
    int rows_;
    int cols_;
};

enum class RimKind { absent, illegal, hook };

/// Outcome of walking a rim of n boxes up-and-right from the bottom of a
/// start column: no such rim, an illegal one (removal would not leave a
/// partition), or a removable hook together with what remains.
struct RimStatus {
    RimKind kind = RimKind::absent;
    int start_col = 0;   // hook only
    int end_col = 0;     // hook only
    Partition remainder; // hook only

    int width() const { return end_col - start_col + 1; }
    bool is_hook() const { return kind == RimKind::hook; }
};

/// The n-core of a partition together with the removal bookkeeping.
struct CoreResult {
    Partition core;
    int hooks_removed = 0;
    int sign = 1;              // (-1)^{sum(k - width_i)} for the context's k
    std::vector<int> widths;   // one entry per removed hook, in removal order
};

/// Core, hook count and widths without the sign (no rectangle needed).
struct CoreDecomposition {
    Partition core;
    int hooks_removed = 0;
    std::vector<int> widths;
};

bool fits_in_rect(const Partition& p, const GrassmannContext& ctx);

/// The 180-degree complement (k - p_l, ..., k - p_1) inside the l x k
/// rectangle; an involution there.
Partition complement_dual(const Partition& p, const GrassmannContext& ctx);

/// Walks n rim boxes up-and-right from the bottom of column start_col.
/// Absent when the rim from that column has fewer than n boxes, illegal
/// when the walk ends directly left of the bottom box of a column, and
/// otherwise a hook whose removal leaves RimStatus::remainder.
RimStatus n_rim_from_column(const Partition& p, int start_col, int hook_size);

/// Removes rim n-hooks (first legal start column at each step, scanning
/// left to right) until none remain.
CoreDecomposition core_decompose(const Partition& p, int hook_size);

/// core_decompose plus the sign for the context's column count.
CoreResult n_core(const Partition& p, int hook_size, const GrassmannContext& ctx);

/// (-1)^{sum(cols - width_i)}. Each width must lie in [1, cols].
int epsilon_sign(std::span<const int> widths, int cols);

/// Adds hook_count rim n-hooks to nu, each spanning columns 1..k (and
/// therefore l+1 rows). The inverse of full-width hook removal.
Partition add_full_rim_hooks(const Partition& nu, int hook_count, const GrassmannContext& ctx);

/// All partitions rho with rho_1 <= max_col, |rho| = |nu| + hook_count * n,
/// and n-core equal to nu, in decreasing lexicographic order.
std::vector<Partition> enumerate_preimages(const Partition& nu, int hook_count,
                                           int hook_size, int max_col);

/// Visits every partition of the given weight with parts at most max_part,
/// in decreasing lexicographic order.
void for_each_partition(long long weight, int max_part,
                        const std::function<void(const Partition&)>& visit);

/// Every partition inside the l x k rectangle, in increasing lexicographic
/// order (the empty partition first).
std::vector<Partition> partitions_in_rect(const GrassmannContext& ctx);

} // namespace qschur
