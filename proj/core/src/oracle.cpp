#include "qschur/oracle.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace qschur::oracle {

MultivarPoly::MultivarPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > max_vars) {
        throw invalid_argument("variable count outside [0, 16]");
    }
}

MultivarPoly::Key MultivarPoly::pack(std::span<const int> exponents) const {
    if (static_cast<int>(exponents.size()) != nvars_) {
        throw invalid_argument("exponent vector length mismatch");
    }
    Key key = 0;
    for (int v = 0; v < nvars_; ++v) {
        if (exponents[v] < 0 || exponents[v] > max_exponent) {
            throw invalid_argument("exponent outside the packed range [0, 15]");
        }
        key |= static_cast<Key>(exponents[v]) << (4 * (max_vars - 1 - v));
    }
    return key;
}

std::vector<int> MultivarPoly::unpack(Key key) const {
    std::vector<int> out(nvars_);
    for (int v = 0; v < nvars_; ++v) {
        out[v] = static_cast<int>((key >> (4 * (max_vars - 1 - v))) & 0xF);
    }
    return out;
}

void MultivarPoly::add_monomial(Key key, long long coeff) {
    if (coeff == 0) {
        return;
    }
    terms_.emplace_back(key, coeff);
    dirty_ = true;
}

void MultivarPoly::normalize() {
    if (!dirty_) {
        return;
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second = checked_add(merged.back().second, t.second);
            if (merged.back().second == 0) {
                merged.pop_back();
            }
        } else {
            merged.push_back(t);
        }
    }
    terms_ = std::move(merged);
    dirty_ = false;
}

const MultivarPoly::Term& MultivarPoly::leading_term() const {
    if (dirty_) {
        throw internal_error("polynomial queried before normalize()");
    }
    if (terms_.empty()) {
        throw internal_error("leading term of the zero polynomial");
    }
    return terms_.back();
}

void MultivarPoly::merge_scaled(const MultivarPoly& other, long long scale) {
    if (dirty_ || other.dirty_) {
        throw internal_error("polynomial arithmetic before normalize()");
    }
    if (other.nvars_ != nvars_) {
        throw invalid_argument("variable count mismatch");
    }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            merged.emplace_back(b->first, checked_mul(b->second, scale));
            ++b;
        } else {
            const long long c = checked_add(a->second, checked_mul(b->second, scale));
            if (c != 0) {
                merged.emplace_back(a->first, c);
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
}

MultivarPoly& MultivarPoly::operator+=(const MultivarPoly& other) {
    merge_scaled(other, 1);
    return *this;
}

MultivarPoly& MultivarPoly::operator-=(const MultivarPoly& other) {
    merge_scaled(other, -1);
    return *this;
}

MultivarPoly& MultivarPoly::operator*=(long long scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) {
        t.second = checked_mul(t.second, scalar);
    }
    return *this;
}

void MultivarPoly::subtract_scaled(const MultivarPoly& other, long long scale) {
    merge_scaled(other, checked_mul(scale, -1));
}

namespace {

using Term = MultivarPoly::Term;

std::vector<Term> merge_terms(std::vector<Term> a, std::vector<Term> b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            const long long c = checked_add(i->second, j->second);
            if (c != 0) {
                out.emplace_back(i->first, c);
            }
            ++i;
            ++j;
        }
    }
    return out;
}

// Product of a.terms_[lo, hi) with all of b; adding a key offset keeps each
// shifted copy of b sorted, so this is a balanced merge tree.
std::vector<Term> mul_range(const std::vector<Term>& a, std::size_t lo, std::size_t hi,
                            const std::vector<Term>& b) {
    if (hi - lo == 1) {
        std::vector<Term> out;
        out.reserve(b.size());
        for (const Term& t : b) {
            out.emplace_back(t.first + a[lo].first, checked_mul(t.second, a[lo].second));
        }
        return out;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return merge_terms(mul_range(a, lo, mid, b), mul_range(a, mid, hi, b));
}

std::array<int, MultivarPoly::max_vars> nibble_maxima(const std::vector<Term>& terms) {
    std::array<int, MultivarPoly::max_vars> out{};
    for (const Term& t : terms) {
        for (int v = 0; v < MultivarPoly::max_vars; ++v) {
            const int e = static_cast<int>((t.first >> (4 * v)) & 0xF);
            out[v] = std::max(out[v], e);
        }
    }
    return out;
}

} // namespace

MultivarPoly operator*(const MultivarPoly& a, const MultivarPoly& b) {
    if (a.nvars_ != b.nvars_) {
        throw invalid_argument("variable count mismatch");
    }
    MultivarPoly out(a.nvars_);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    const auto ma = nibble_maxima(a.terms_);
    const auto mb = nibble_maxima(b.terms_);
    for (int v = 0; v < MultivarPoly::max_vars; ++v) {
        if (ma[v] + mb[v] > MultivarPoly::max_exponent) {
            throw invalid_argument("product exponent outside the packed range");
        }
    }
    const bool a_smaller = a.terms_.size() <= b.terms_.size();
    const auto& small = a_smaller ? a.terms_ : b.terms_;
    const auto& large = a_smaller ? b.terms_ : a.terms_;
    out.terms_ = mul_range(small, 0, small.size(), large);
    return out;
}

namespace {

// Column-strict fillings of a straight shape with entries at most nvars,
// kept separate from the tableau module on purpose: the test suite compares
// the two routes.
void fill_shape(const Partition& shape, int nvars, std::vector<std::vector<int>>& grid,
                std::vector<int>& exponents, int row, int col, MultivarPoly& out) {
    if (row == shape.length()) {
        out.add_monomial(out.pack(exponents), 1);
        return;
    }
    if (col == shape.part(row + 1)) {
        fill_shape(shape, nvars, grid, exponents, row + 1, 0, out);
        return;
    }
    int lo = 1;
    if (col > 0) {
        lo = std::max(lo, grid[row][col - 1]);
    }
    if (row > 0 && col < shape.part(row)) {
        lo = std::max(lo, grid[row - 1][col] + 1);
    }
    for (int v = lo; v <= nvars; ++v) {
        grid[row][col] = v;
        ++exponents[v - 1];
        fill_shape(shape, nvars, grid, exponents, row, col + 1, out);
        --exponents[v - 1];
    }
}

} // namespace

namespace {

MultivarPoly schur_poly_uncached(const Partition& lambda, int nvars) {
    if (nvars < lambda.length()) {
        throw invalid_argument("variable count below the partition length");
    }
    MultivarPoly out(nvars);
    // A value fills at most one cell per column, so exponents stay <= lambda_1.
    if (lambda.part(1) > MultivarPoly::max_exponent) {
        throw invalid_argument("partition width outside the packed range");
    }
    std::vector<std::vector<int>> grid;
    for (int i = 1; i <= lambda.length(); ++i) {
        grid.emplace_back(lambda.part(i), 0);
    }
    std::vector<int> exponents(nvars, 0);
    fill_shape(lambda, nvars, grid, exponents, 0, 0, out);
    out.normalize();
    return out;
}

// The expansion loops regenerate the same basis polynomials constantly;
// map nodes stay put, so handing out references is safe.
const MultivarPoly& schur_poly_cached(const Partition& lambda, int nvars) {
    static std::map<std::pair<std::vector<int>, int>, MultivarPoly> cache;
    static std::mutex mutex;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({lambda.parts(), nvars});
        if (it != cache.end()) {
            return it->second;
        }
    }
    MultivarPoly fresh = schur_poly_uncached(lambda, nvars);
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_pair(lambda.parts(), nvars), std::move(fresh))
        .first->second;
}

} // namespace

MultivarPoly schur_poly(const Partition& lambda, int nvars) {
    return schur_poly_cached(lambda, nvars);
}

namespace {

// Repeated leading-monomial subtraction. With nvars variables the result
// carries exactly the basis partitions of at most nvars rows.
std::map<Partition, long long> expand_in_schur_basis(MultivarPoly product, int nvars) {
    std::map<Partition, long long> out;
    while (!product.is_zero()) {
        const auto [key, coeff] = product.leading_term();
        std::vector<int> exps = product.unpack(key);
        for (std::size_t i = 1; i < exps.size(); ++i) {
            if (exps[i] > exps[i - 1]) {
                throw internal_error("leading monomial is not dominant");
            }
        }
        if (coeff <= 0) {
            throw internal_error("non-positive coefficient in a Schur expansion");
        }
        Partition nu(std::move(exps));
        product.subtract_scaled(schur_poly_cached(nu, nvars), coeff);
        out.emplace(std::move(nu), coeff);
    }
    return out;
}

} // namespace

std::map<Partition, long long> schur_expansion(const Partition& lambda,
                                               const Partition& mu) {
    const long long degree = checked_add(lambda.weight(), mu.weight());
    if (degree > MultivarPoly::max_exponent) {
        throw invalid_argument("combined weight outside the oracle's range");
    }
    const int nvars = static_cast<int>(degree);
    return expand_in_schur_basis(
        schur_poly_cached(lambda, nvars) * schur_poly_cached(mu, nvars), nvars);
}

long long poly_lr(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.weight() != checked_add(lambda.weight(), mu.weight())) {
        return 0;
    }
    // A single coefficient needs only max-length many variables, and the
    // coefficient is invariant under conjugating all three partitions; use
    // whichever variant keeps the expansion small.
    const int direct = std::max({lambda.length(), mu.length(), nu.length()});
    const int conjugated = std::max({lambda.part(1), mu.part(1), nu.part(1)});
    const bool use_direct = direct <= conjugated;
    const Partition l = use_direct ? lambda : lambda.conjugate();
    const Partition m = use_direct ? mu : mu.conjugate();
    const Partition n = use_direct ? nu : nu.conjugate();
    const int nvars = std::min(direct, conjugated);
    if (nvars > MultivarPoly::max_vars) {
        throw invalid_argument("partition lengths outside the oracle's range");
    }
    const auto expansion = expand_in_schur_basis(
        schur_poly_cached(l, nvars) * schur_poly_cached(m, nvars), nvars);
    auto it = expansion.find(n);
    return it == expansion.end() ? 0 : it->second;
}

QClass y_closed_form(long long r, const GrassmannContext& ctx) {
    if (r < 0) {
        throw invalid_argument("column length must be nonnegative");
    }
    const int n = ctx.hook_size();
    const long long m = r / n;
    const long long j = r % n;
    if (j > ctx.rows()) {
        return QClass::zero(ctx);
    }
    const long long parity = m * (ctx.cols() - 1);
    const long long sign = parity % 2 == 0 ? 1 : -1;
    std::vector<int> column(static_cast<std::size_t>(j), 1);
    return QClass::term(ctx, static_cast<int>(m), Partition(std::move(column)), sign);
}

QClass pieri_giambelli_product(const Partition& lambda, const Partition& mu,
                               const GrassmannContext& ctx) {
    if (!fits_in_rect(lambda, ctx) || !fits_in_rect(mu, ctx)) {
        throw invalid_argument("partition does not fit the rectangle");
    }
    const int l = ctx.rows();
    std::vector<int> perm(l);
    for (int i = 0; i < l; ++i) {
        perm[i] = i;
    }
    QClass out(ctx);
    do {
        int inversions = 0;
        for (int i = 0; i < l; ++i) {
            for (int j = i + 1; j < l; ++j) {
                inversions += perm[i] > perm[j];
            }
        }
        std::vector<int> rows;
        bool vanishes = false;
        for (int i = 0; i < l; ++i) {
            const int e = mu.part(i + 1) + perm[i] - i;
            if (e < 0 || e > ctx.cols()) {
                vanishes = true;
                break;
            }
            if (e > 0) {
                rows.push_back(e);
            }
        }
        if (vanishes) {
            continue;
        }
        QClass term = QClass::basis(ctx, lambda);
        for (int e : rows) {
            term = pieri_apply(e, term);
        }
        term *= inversions % 2 == 0 ? 1 : -1;
        out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace qschur::oracle
