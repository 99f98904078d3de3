#include "qschur/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qschur {

namespace {

void validate_parts(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) {
            throw invalid_argument("partition parts must be nonnegative");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

std::vector<int> trim_zeros(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    return parts;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate_parts(parts_);
    parts_ = trim_zeros(std::move(parts_));
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::parse(std::string_view text) {
    if (text.empty()) {
        throw invalid_argument("empty partition literal (use \"0\" for the empty partition)");
    }
    std::vector<int> parts;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw invalid_argument("malformed partition literal: '" + std::string(text) + "'");
        }
        if (used != token.size()) {
            throw invalid_argument("malformed partition literal: '" + std::string(text) + "'");
        }
        parts.push_back(value);
    }
    if (text.back() == ',') {
        throw invalid_argument("malformed partition literal: '" + std::string(text) + "'");
    }
    return Partition(std::move(parts));
}

long long Partition::weight() const {
    long long total = 0;
    for (int p : parts_) {
        total = checked_add(total, p);
    }
    return total;
}

int Partition::part(int i) const {
    if (i < 1) {
        throw invalid_argument("partition parts are 1-based");
    }
    return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) {
        return {};
    }
    std::vector<int> cols(parts_[0], 0);
    for (int row : parts_) {
        for (int j = 0; j < row; ++j) {
            ++cols[j];
        }
    }
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) {
        return false;
    }
    for (int i = 1; i <= inner.length(); ++i) {
        if (inner.part(i) > part(i)) {
            return false;
        }
    }
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(parts_[i]);
    }
    return out;
}

GrassmannContext::GrassmannContext(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) {
        throw invalid_argument("rectangle dimensions must be positive");
    }
}

bool fits_in_rect(const Partition& p, const GrassmannContext& ctx) {
    return p.length() <= ctx.rows() && p.part(1) <= ctx.cols();
}

Partition complement_dual(const Partition& p, const GrassmannContext& ctx) {
    if (!fits_in_rect(p, ctx)) {
        throw invalid_argument("partition does not fit the rectangle");
    }
    std::vector<int> out(ctx.rows());
    for (int i = 1; i <= ctx.rows(); ++i) {
        out[i - 1] = ctx.cols() - p.part(ctx.rows() + 1 - i);
    }
    return Partition(std::move(out));
}

RimStatus n_rim_from_column(const Partition& p, int start_col, int hook_size) {
    if (p.empty()) {
        throw invalid_argument("rim walk requires a nonempty partition");
    }
    if (start_col < 1 || start_col > p.part(1)) {
        throw invalid_argument("rim walk start column out of range");
    }
    if (hook_size < 1) {
        throw invalid_argument("hook size must be positive");
    }

    const Partition conj = p.conjugate();
    const int width = p.part(1);
    const int r = start_col;
    const int n = hook_size;

    // No n-rim from this column: fewer than n boxes up-and-right of it.
    if (conj.part(r) + width - r < n) {
        return RimStatus{.kind = RimKind::absent, .start_col = r, .end_col = 0,
                         .remainder = {}};
    }

    // col(j) - j is strictly decreasing in j; locate where col(r) - r - n lands.
    const int target = conj.part(r) - r - n;
    for (int j = r + 1; j <= width + 1; ++j) {
        const int c = conj.part(j) - j;
        if (c == target) {
            // Walk ends directly left of the bottom box of column j.
            return RimStatus{.kind = RimKind::illegal, .start_col = r, .end_col = j - 1,
                             .remainder = {}};
        }
        if (c < target) {
            const int end = j - 1;
            std::vector<int> cols(width);
            for (int t = 1; t < r; ++t) {
                cols[t - 1] = conj.part(t);
            }
            for (int t = r; t < end; ++t) {
                cols[t - 1] = conj.part(t + 1) - 1;
            }
            cols[end - 1] = conj.part(r) - r + end - n;
            for (int t = end + 1; t <= width; ++t) {
                cols[t - 1] = conj.part(t);
            }
            Partition remainder = Partition(std::move(cols)).conjugate();
            if (remainder.weight() != p.weight() - n) {
                throw internal_error("rim hook removal lost the wrong number of boxes");
            }
            return RimStatus{.kind = RimKind::hook,
                             .start_col = r,
                             .end_col = end,
                             .remainder = std::move(remainder)};
        }
    }
    throw internal_error("rim walk fell off the diagram");
}

CoreDecomposition core_decompose(const Partition& p, int hook_size) {
    CoreDecomposition out;
    out.core = p;
    while (!out.core.empty()) {
        bool removed = false;
        for (int r = 1; r <= out.core.part(1); ++r) {
            RimStatus status = n_rim_from_column(out.core, r, hook_size);
            if (status.is_hook()) {
                out.widths.push_back(status.width());
                ++out.hooks_removed;
                out.core = std::move(status.remainder);
                removed = true;
                break;
            }
        }
        if (!removed) {
            break;
        }
    }
    return out;
}

namespace {

int width_sign(std::span<const int> widths, int cols) {
    long long parity = 0;
    for (int w : widths) {
        parity += cols - w;
    }
    return parity % 2 == 0 ? 1 : -1;
}

} // namespace

CoreResult n_core(const Partition& p, int hook_size, const GrassmannContext& ctx) {
    CoreDecomposition dec = core_decompose(p, hook_size);
    CoreResult out;
    out.sign = width_sign(dec.widths, ctx.cols());
    out.core = std::move(dec.core);
    out.hooks_removed = dec.hooks_removed;
    out.widths = std::move(dec.widths);
    return out;
}

int epsilon_sign(std::span<const int> widths, int cols) {
    for (int w : widths) {
        if (w < 1 || w > cols) {
            throw invalid_argument("hook width outside [1, cols]");
        }
    }
    return width_sign(widths, cols);
}

Partition add_full_rim_hooks(const Partition& nu, int hook_count, const GrassmannContext& ctx) {
    if (hook_count < 0) {
        throw invalid_argument("hook count must be nonnegative");
    }
    if (!fits_in_rect(nu, ctx)) {
        throw invalid_argument("partition does not fit the rectangle");
    }
    const int k = ctx.cols();
    std::vector<int> cols(k, 0);
    {
        const Partition conj = nu.conjugate();
        for (int j = 1; j <= k; ++j) {
            cols[j - 1] = conj.part(j);
        }
    }
    for (int step = 0; step < hook_count; ++step) {
        std::vector<int> next(k);
        next[0] = cols[k - 1] + ctx.rows() + 1;
        for (int j = 1; j < k; ++j) {
            next[j] = cols[j - 1] + 1;
        }
        cols = std::move(next);
    }
    return Partition(std::move(cols)).conjugate();
}

namespace {

// Shared cache of core decompositions, keyed by (parts, hook size); results
// are identical with or without it.
const CoreDecomposition& core_decompose_cached(const Partition& p, int hook_size) {
    static std::map<std::pair<std::vector<int>, int>, CoreDecomposition> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(p.parts(), hook_size);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(std::move(key), core_decompose(p, hook_size)).first;
    }
    return it->second;
}

} // namespace

std::vector<Partition> enumerate_preimages(const Partition& nu, int hook_count,
                                           int hook_size, int max_col) {
    if (hook_count < 0) {
        throw invalid_argument("hook count must be nonnegative");
    }
    if (hook_size < 1) {
        throw invalid_argument("hook size must be positive");
    }
    std::vector<Partition> out;
    const long long weight =
        checked_add(nu.weight(), checked_mul(hook_count, hook_size));
    for_each_partition(weight, max_col, [&](const Partition& rho) {
        if (core_decompose_cached(rho, hook_size).core == nu) {
            out.push_back(rho);
        }
    });
    return out;
}

namespace {

void partition_rec(long long remaining, int max_part, std::vector<int>& stack,
                   const std::function<void(const Partition&)>& visit) {
    if (remaining == 0) {
        visit(Partition(stack));
        return;
    }
    const int hi = static_cast<int>(std::min<long long>(max_part, remaining));
    for (int first = hi; first >= 1; --first) {
        stack.push_back(first);
        partition_rec(remaining - first, first, stack, visit);
        stack.pop_back();
    }
}

} // namespace

void for_each_partition(long long weight, int max_part,
                        const std::function<void(const Partition&)>& visit) {
    if (weight < 0) {
        throw invalid_argument("partition weight must be nonnegative");
    }
    if (weight > 0 && max_part < 1) {
        return;
    }
    std::vector<int> stack;
    partition_rec(weight, max_part, stack, visit);
}

namespace {

void rect_rec(int rows_left, int max_part, std::vector<int>& stack,
              std::vector<Partition>& out) {
    out.emplace_back(stack);
    if (rows_left == 0) {
        return;
    }
    for (int next = 1; next <= max_part; ++next) {
        stack.push_back(next);
        rect_rec(rows_left - 1, next, stack, out);
        stack.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_in_rect(const GrassmannContext& ctx) {
    std::vector<Partition> out;
    std::vector<int> stack;
    rect_rec(ctx.rows(), ctx.cols(), stack, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace qschur
