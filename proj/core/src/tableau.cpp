#include "qschur/tableau.hpp"

#include <algorithm>

namespace qschur {

SkewShape::SkewShape(Partition outer_shape, Partition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
    if (!outer.contains(inner)) {
        throw invalid_argument("inner shape not contained in outer shape");
    }
}

long long SkewShape::cells() const {
    return outer.weight() - inner.weight();
}

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> row_entries,
                         TableauKind kind)
    : shape_(std::move(shape)), kind_(kind), rows_(std::move(row_entries)) {
    if (static_cast<int>(rows_.size()) != shape_.outer.length()) {
        throw invalid_argument("tableau row count does not match its shape");
    }
    for (int i = 1; i <= shape_.outer.length(); ++i) {
        const auto& row = rows_[i - 1];
        if (static_cast<int>(row.size()) != shape_.row_cells(i)) {
            throw invalid_argument("tableau row length does not match its shape");
        }
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] < 1) {
                throw invalid_argument("tableau entries must be positive");
            }
            if (j > 0) {
                const bool ok = kind_ == TableauKind::ordinary ? row[j] >= row[j - 1]
                                                               : row[j] > row[j - 1];
                if (!ok) {
                    throw invalid_argument("tableau violates its row condition");
                }
            }
        }
    }
    for (int i = 2; i <= shape_.outer.length(); ++i) {
        const int lo = std::max(shape_.inner.part(i), shape_.inner.part(i - 1)) + 1;
        const int hi = std::min(shape_.outer.part(i), shape_.outer.part(i - 1));
        for (int col = lo; col <= hi; ++col) {
            const int above = entry(i - 1, col);
            const int below = entry(i, col);
            const bool ok = kind_ == TableauKind::ordinary ? below > above : below >= above;
            if (!ok) {
                throw invalid_argument("tableau violates its column condition");
            }
        }
    }
}

int SkewTableau::entry(int row, int col) const {
    if (row < 1 || row > shape_.outer.length() || col <= shape_.inner.part(row) ||
        col > shape_.outer.part(row)) {
        throw invalid_argument("no cell at the requested position");
    }
    return rows_[row - 1][col - shape_.inner.part(row) - 1];
}

std::vector<int> SkewTableau::word() const {
    std::vector<int> out;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        out.insert(out.end(), it->begin(), it->end());
    }
    return out;
}

std::vector<long long> SkewTableau::content() const {
    int max_entry = 0;
    for (const auto& row : rows_) {
        for (int v : row) {
            max_entry = std::max(max_entry, v);
        }
    }
    std::vector<long long> counts(max_entry, 0);
    for (const auto& row : rows_) {
        for (int v : row) {
            ++counts[v - 1];
        }
    }
    return counts;
}

std::string SkewTableau::to_text() const {
    std::string out;
    for (int i = 1; i <= shape_.outer.length(); ++i) {
        std::string line;
        for (int col = 1; col <= shape_.outer.part(i); ++col) {
            if (!line.empty()) {
                line += ' ';
            }
            if (col <= shape_.inner.part(i)) {
                line += '.';
            } else {
                line += std::to_string(entry(i, col));
            }
        }
        if (i > 1) {
            out += '\n';
        }
        out += line;
    }
    return out;
}

namespace {

struct Cell {
    int row;
    int col;
};

struct Filler {
    const SkewShape& shape;
    TableauKind kind;
    const std::function<void(const SkewTableau&)>& visit;
    std::vector<Cell> cells;
    std::vector<std::vector<int>> grid;   // 0 = unfilled
    std::vector<long long> remaining;

    Filler(const SkewShape& s, const ContentVector& content, TableauKind k,
           const std::function<void(const SkewTableau&)>& v)
        : shape(s), kind(k), visit(v) {
        for (int i = 1; i <= shape.outer.length(); ++i) {
            grid.emplace_back(shape.row_cells(i), 0);
            for (int col = shape.inner.part(i) + 1; col <= shape.outer.part(i); ++col) {
                cells.push_back({i, col});
            }
        }
        remaining.assign(content.begin(), content.end());
    }

    int at(int row, int col) const {
        return grid[row - 1][col - shape.inner.part(row) - 1];
    }

    void set(int row, int col, int value) {
        grid[row - 1][col - shape.inner.part(row) - 1] = value;
    }

    void run(std::size_t idx) {
        if (idx == cells.size()) {
            visit(SkewTableau(shape, grid, kind));
            return;
        }
        const auto [row, col] = cells[idx];
        int lo = 1;
        if (col > shape.inner.part(row) + 1) {
            const int left = at(row, col - 1);
            lo = std::max(lo, kind == TableauKind::ordinary ? left : left + 1);
        }
        if (row > 1 && col > shape.inner.part(row - 1) && col <= shape.outer.part(row - 1)) {
            const int above = at(row - 1, col);
            lo = std::max(lo, kind == TableauKind::ordinary ? above + 1 : above);
        }
        for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
            if (remaining[v - 1] == 0) {
                continue;
            }
            --remaining[v - 1];
            set(row, col, v);
            run(idx + 1);
            set(row, col, 0);
            ++remaining[v - 1];
        }
    }
};

} // namespace

void for_each_tableau(const SkewShape& shape, const ContentVector& content,
                      TableauKind kind,
                      const std::function<void(const SkewTableau&)>& visit) {
    long long total = 0;
    for (int m : content) {
        if (m < 0) {
            throw invalid_argument("content multiplicities must be nonnegative");
        }
        total = checked_add(total, m);
    }
    if (total != shape.cells()) {
        return;   // no filling can exist
    }
    Filler filler(shape, content, kind, visit);
    filler.run(0);
}

std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, const ContentVector& content) {
    std::vector<SkewTableau> out;
    for_each_tableau(shape, content, TableauKind::ordinary,
                     [&](const SkewTableau& t) { out.push_back(t); });
    return out;
}

std::vector<SkewTableau> enumerate_conjugate_tableaux(const SkewShape& shape,
                                                      const ContentVector& content) {
    std::vector<SkewTableau> out;
    for_each_tableau(shape, content, TableauKind::conjugate,
                     [&](const SkewTableau& t) { out.push_back(t); });
    return out;
}

bool is_reverse_lattice(std::span<const int> word) {
    if (word.empty()) {
        return true;
    }
    int max_entry = *std::max_element(word.begin(), word.end());
    std::vector<long long> counts(max_entry + 1, 0);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int v = *it;
        if (v < 1) {
            throw invalid_argument("word entries must be positive");
        }
        ++counts[v];
        if (v >= 2 && counts[v] > counts[v - 1]) {
            return false;
        }
    }
    return true;
}

long long classical_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.weight() != checked_add(lambda.weight(), mu.weight()) || !nu.contains(lambda)) {
        return 0;
    }
    long long count = 0;
    ContentVector content(mu.parts().begin(), mu.parts().end());
    for_each_tableau(SkewShape(nu, lambda), content, TableauKind::ordinary,
                     [&](const SkewTableau& t) {
                         if (is_reverse_lattice(t.word())) {
                             ++count;
                         }
                     });
    return count;
}

long long classical_kostka(const Partition& lambda, const ContentVector& mu,
                           const Partition& nu) {
    if (!nu.contains(lambda)) {
        return 0;
    }
    long long count = 0;
    for_each_tableau(SkewShape(nu, lambda), mu, TableauKind::ordinary,
                     [&](const SkewTableau&) { ++count; });
    return count;
}

namespace {

void require_properness_input(const SkewTableau& t, const GrassmannContext& ctx,
                              TableauKind expected) {
    if (t.kind() != expected) {
        throw invalid_argument("tableau has the wrong orientation for this check");
    }
    if (t.shape().outer.part(1) > ctx.cols()) {
        throw invalid_argument("tableau shape leaves the rectangle's columns");
    }
}

// Literal first-column test shared by the two orientations; strict asks for
// entry < v at (p, k) instead of entry <= v.
bool first_column_proper(const SkewTableau& t, const GrassmannContext& ctx, bool strict) {
    const int l = ctx.rows();
    const int k = ctx.cols();
    const Partition& inner = t.shape().inner;
    const Partition& outer = t.shape().outer;
    for (int row = l + 1; row <= outer.length(); ++row) {
        if (inner.part(row) > 0 || outer.part(row) < 1) {
            continue;   // no cell of the skew shape in column 1 at this row
        }
        const int v = t.entry(row, 1);
        const int p = row - l;
        if (inner.part(p) >= k) {
            continue;   // the (p, k) box lies in the inner shape
        }
        if (outer.part(p) >= k) {
            const int other = t.entry(p, k);
            if (strict ? other < v : other <= v) {
                continue;
            }
        }
        return false;
    }
    return true;
}

// Walks the prefix shapes rho(i) (entries <= i plus the inner shape) and
// hands the caller, for each value, the first-column length of rho(i) and
// the k-th-column lengths of rho(i) and rho(i-1).
bool prefix_gaps_ok(const SkewTableau& t, const GrassmannContext& ctx,
                    const std::function<bool(int value, int first_col, int full_cols,
                                             int prev_full_cols)>& ok) {
    const int k = ctx.cols();
    const int nrows = t.shape().outer.length();
    std::vector<int> row_len(nrows);
    for (int i = 1; i <= nrows; ++i) {
        row_len[i - 1] = t.shape().inner.part(i);
    }
    const auto count_cols = [&] {
        std::pair<int, int> out{0, 0};
        for (int len : row_len) {
            out.first += len >= 1;
            out.second += len >= k;
        }
        return out;
    };
    std::vector<long long> counts = t.content();
    auto [nonzero_rows, full_rows] = count_cols();
    for (int value = 1; value <= static_cast<int>(counts.size()); ++value) {
        const int prev_full = full_rows;
        for (int i = 1; i <= nrows; ++i) {
            int& len = row_len[i - 1];
            const auto& row = t.row_entries()[i - 1];
            while (len < t.shape().outer.part(i) &&
                   row[len - t.shape().inner.part(i)] == value) {
                ++len;
            }
        }
        std::tie(nonzero_rows, full_rows) = count_cols();
        if (!ok(value, nonzero_rows, full_rows, prev_full)) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_proper(const SkewTableau& t, const GrassmannContext& ctx) {
    require_properness_input(t, ctx, TableauKind::ordinary);
    return first_column_proper(t, ctx, /*strict=*/false);
}

bool is_proper_via_prefixes(const SkewTableau& t, const GrassmannContext& ctx) {
    require_properness_input(t, ctx, TableauKind::ordinary);
    const int l = ctx.rows();
    return prefix_gaps_ok(t, ctx, [l](int, int first_col, int full_cols, int) {
        return first_col - full_cols <= l;
    });
}

bool is_proper_conjugate(const SkewTableau& t, const GrassmannContext& ctx) {
    require_properness_input(t, ctx, TableauKind::conjugate);
    return first_column_proper(t, ctx, /*strict=*/true);
}

bool is_proper_conjugate_via_prefixes(const SkewTableau& t, const GrassmannContext& ctx) {
    require_properness_input(t, ctx, TableauKind::conjugate);
    // Weakly increasing columns let a value repeat in the k-th column, so the
    // gap is taken against the previous prefix shape's k-th column. When the
    // value occurs there at most once this is the usual gap, strict if the
    // value sits in the k-th column.
    const int l = ctx.rows();
    return prefix_gaps_ok(t, ctx, [l](int, int first_col, int, int prev_full_cols) {
        return first_col - prev_full_cols <= l;
    });
}

std::optional<int> hook_multiplicity(long long total, long long base, int hook_size) {
    const long long diff = total - base;
    if (diff < 0 || diff % hook_size != 0) {
        return std::nullopt;
    }
    return static_cast<int>(diff / hook_size);
}

namespace {

long long proper_tableau_count(const Partition& lambda, const ContentVector& mu,
                               const Partition& nu, const GrassmannContext& ctx,
                               TableauKind kind) {
    const int entry_bound = kind == TableauKind::ordinary ? ctx.cols() : ctx.rows();
    long long total = lambda.weight();
    for (int m : mu) {
        if (m < 0 || m > entry_bound) {
            throw invalid_argument("content entry outside the allowed range");
        }
        total = checked_add(total, m);
    }
    if (!fits_in_rect(lambda, ctx) || !fits_in_rect(nu, ctx)) {
        throw invalid_argument("partition does not fit the rectangle");
    }
    const auto m = hook_multiplicity(total, nu.weight(), ctx.hook_size());
    if (!m) {
        return 0;
    }
    const Partition target = add_full_rim_hooks(nu, *m, ctx);
    if (!target.contains(lambda)) {
        return 0;
    }
    long long count = 0;
    for_each_tableau(SkewShape(target, lambda), mu, kind, [&](const SkewTableau& t) {
        const bool proper = kind == TableauKind::ordinary ? is_proper(t, ctx)
                                                          : is_proper_conjugate(t, ctx);
        if (proper) {
            ++count;
        }
    });
    return count;
}

} // namespace

long long quantum_kostka(const Partition& lambda, const ContentVector& mu,
                         const Partition& nu, const GrassmannContext& ctx) {
    return proper_tableau_count(lambda, mu, nu, ctx, TableauKind::ordinary);
}

long long conjugate_quantum_kostka(const Partition& lambda, const ContentVector& mu,
                                   const Partition& nu, const GrassmannContext& ctx) {
    return proper_tableau_count(lambda, mu, nu, ctx, TableauKind::conjugate);
}

} // namespace qschur
