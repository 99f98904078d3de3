#include "qschur/quantum.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace qschur {

QClass QClass::unit(GrassmannContext ctx) {
    return term(ctx, 0, Partition{}, 1);
}

QClass QClass::basis(GrassmannContext ctx, const Partition& nu) {
    return term(ctx, 0, nu, 1);
}

QClass QClass::term(GrassmannContext ctx, int q_degree, const Partition& nu,
                    long long coeff) {
    QClass out(ctx);
    out.add_term(q_degree, nu, coeff);
    return out;
}

long long QClass::coefficient(int q_degree, const Partition& nu) const {
    auto it = terms_.find({q_degree, nu});
    return it == terms_.end() ? 0 : it->second;
}

void QClass::add_term(int q_degree, const Partition& nu, long long coeff) {
    if (q_degree < 0) {
        throw invalid_argument("q-degree must be nonnegative");
    }
    if (!fits_in_rect(nu, ctx_)) {
        throw invalid_argument("basis symbol outside the rectangle");
    }
    if (coeff == 0) {
        return;
    }
    auto key = std::make_pair(q_degree, nu);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
        return;
    }
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) {
        terms_.erase(it);
    }
}

std::optional<long long> QClass::homogeneous_degree() const {
    std::optional<long long> degree;
    for (const auto& [key, coeff] : terms_) {
        (void)coeff;
        const long long d =
            checked_add(checked_mul(key.first, ctx_.hook_size()), key.second.weight());
        if (degree && *degree != d) {
            return std::nullopt;
        }
        degree = d;
    }
    return degree;
}

QClass& QClass::operator+=(const QClass& other) {
    if (other.ctx_ != ctx_) {
        throw invalid_argument("context mismatch");
    }
    for (const auto& [key, coeff] : other.terms_) {
        add_term(key.first, key.second, coeff);
    }
    return *this;
}

QClass& QClass::operator-=(const QClass& other) {
    if (other.ctx_ != ctx_) {
        throw invalid_argument("context mismatch");
    }
    for (const auto& [key, coeff] : other.terms_) {
        add_term(key.first, key.second, -coeff);
    }
    return *this;
}

QClass& QClass::operator*=(long long scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) {
        (void)key;
        coeff = checked_mul(coeff, scalar);
    }
    return *this;
}

namespace {

std::string term_body(int q_degree, const Partition& nu, long long abs_coeff) {
    std::string out;
    if (abs_coeff != 1) {
        out += std::to_string(abs_coeff);
    }
    if (q_degree >= 1) {
        if (!out.empty()) {
            out += "·";
        }
        out += q_degree == 1 ? "q" : "q^" + std::to_string(q_degree);
    }
    if (!out.empty()) {
        out += "·";
    }
    out += "σ[" + nu.to_string() + "]";
    return out;
}

} // namespace

std::string QClass::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [key, coeff] : terms_) {
        if (out.empty()) {
            if (coeff < 0) {
                out += "-";
            }
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        out += term_body(key.first, key.second, std::llabs(coeff));
    }
    return out;
}

std::string QClass::to_signed_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [key, coeff] : terms_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += coeff < 0 ? '-' : '+';
        std::string body;
        if (std::llabs(coeff) != 1) {
            body += std::to_string(std::llabs(coeff));
        }
        if (key.first >= 1) {
            if (!body.empty()) {
                body += "·";
            }
            body += "q^" + std::to_string(key.first);
        }
        if (!body.empty()) {
            body += "·";
        }
        body += "σ[" + key.second.to_string() + "]";
        out += body;
    }
    return out;
}

QClass reduce_schur(const Partition& lambda, const GrassmannContext& ctx) {
    if (lambda.part(1) > ctx.cols()) {
        return QClass::zero(ctx);
    }
    const int n = ctx.hook_size();
    Partition current = lambda;
    std::vector<int> widths;
    while (!fits_in_rect(current, ctx)) {
        // More rows than l; look for a hook, vanishing on any illegal rim.
        int hook_col = 0;
        RimStatus hook;
        for (int r = 1; r <= current.part(1); ++r) {
            RimStatus status = n_rim_from_column(current, r, n);
            if (status.kind == RimKind::illegal) {
                return QClass::zero(ctx);
            }
            if (status.is_hook() && hook_col == 0) {
                hook_col = r;
                hook = std::move(status);
            }
        }
        if (hook_col == 0) {
            return QClass::zero(ctx);   // hookless with more than l rows
        }
        widths.push_back(hook.width());
        current = std::move(hook.remainder);
    }
    long long parity = 0;
    for (int w : widths) {
        parity += ctx.cols() - w;
    }
    const int sign = parity % 2 == 0 ? 1 : -1;
    return QClass::term(ctx, static_cast<int>(widths.size()), current, sign);
}

std::vector<QlrTerm> qlr_expansion(const Partition& lambda, const Partition& mu,
                                   const Partition& nu, const GrassmannContext& ctx) {
    if (!fits_in_rect(lambda, ctx) || !fits_in_rect(mu, ctx) || !fits_in_rect(nu, ctx)) {
        throw invalid_argument("partition does not fit the rectangle");
    }
    const auto m = hook_multiplicity(checked_add(lambda.weight(), mu.weight()),
                                     nu.weight(), ctx.hook_size());
    if (!m) {
        return {};
    }
    std::vector<QlrTerm> out;
    for (const Partition& rho :
         enumerate_preimages(nu, *m, ctx.hook_size(), ctx.cols())) {
        CoreResult core = n_core(rho, ctx.hook_size(), ctx);
        if (core.core != nu || core.hooks_removed != *m) {
            throw internal_error("preimage enumeration returned a non-preimage");
        }
        out.push_back({rho, core.sign, classical_lr(lambda, mu, rho)});
    }
    return out;
}

long long qlr_coefficient(const Partition& lambda, const Partition& mu,
                          const Partition& nu, const GrassmannContext& ctx) {
    long long total = 0;
    for (const QlrTerm& term : qlr_expansion(lambda, mu, nu, ctx)) {
        total = checked_add(total, checked_mul(term.sign, term.classical));
    }
    if (total < 0) {
        throw internal_error("negative quantum Littlewood-Richardson number");
    }
    return total;
}

namespace {

// sigma_a * sigma_b for basis symbols: classical expansion over rho with at
// most k columns, each summand pushed through rim hook reduction.
QClass basis_product_uncached(const Partition& a, const Partition& b,
                              const GrassmannContext& ctx) {
    QClass out(ctx);
    const long long weight = checked_add(a.weight(), b.weight());
    for_each_partition(weight, ctx.cols(), [&](const Partition& rho) {
        if (!rho.contains(a)) {
            return;
        }
        const long long coeff = classical_lr(a, b, rho);
        if (coeff == 0) {
            return;
        }
        QClass reduced = reduce_schur(rho, ctx);
        reduced *= coeff;
        out += reduced;
    });
    return out;
}

const QClass& basis_product(const Partition& a, const Partition& b,
                            const GrassmannContext& ctx) {
    using Key = std::tuple<int, int, std::vector<int>, std::vector<int>>;
    static std::map<Key, QClass> cache;
    static std::mutex mutex;
    Key key{ctx.rows(), ctx.cols(), a.parts(), b.parts()};
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(std::move(key), basis_product_uncached(a, b, ctx)).first;
    }
    return it->second;
}

} // namespace

QClass qmul(const QClass& a, const QClass& b) {
    if (a.context() != b.context()) {
        throw invalid_argument("context mismatch");
    }
    QClass out(a.context());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const QClass& prod = basis_product(ka.second, kb.second, a.context());
            const long long scale = checked_mul(ca, cb);
            for (const auto& [kp, cp] : prod.terms()) {
                out.add_term(ka.first + kb.first + kp.first, kp.second,
                             checked_mul(scale, cp));
            }
        }
    }
    return out;
}

namespace {

// Enumerates integer sequences v_1..v_len with lo_i <= v_i <= hi_i and a
// fixed total, handing each one over as a partition.
void bounded_sequences(const std::vector<int>& lo, const std::vector<int>& hi,
                       long long total, std::size_t idx, std::vector<int>& acc,
                       const std::function<void(const std::vector<int>&)>& visit) {
    if (idx == lo.size()) {
        if (total == 0) {
            visit(acc);
        }
        return;
    }
    for (int v = hi[idx]; v >= lo[idx]; --v) {
        if (v > total) {
            continue;
        }
        acc.push_back(v);
        bounded_sequences(lo, hi, total - v, idx + 1, acc, visit);
        acc.pop_back();
    }
}

} // namespace

QClass quantum_pieri(int p, const Partition& lambda, const GrassmannContext& ctx) {
    if (p < 1 || p > ctx.cols()) {
        throw invalid_argument("single-row degree outside [1, k]");
    }
    if (!fits_in_rect(lambda, ctx)) {
        throw invalid_argument("partition does not fit the rectangle");
    }
    const int l = ctx.rows();
    QClass out(ctx);

    // Classical terms: k >= mu_1 >= lambda_1 >= mu_2 >= ... >= mu_l >= lambda_l.
    {
        std::vector<int> lo(l), hi(l);
        for (int i = 1; i <= l; ++i) {
            lo[i - 1] = lambda.part(i);
            hi[i - 1] = i == 1 ? ctx.cols() : lambda.part(i - 1);
        }
        std::vector<int> acc;
        bounded_sequences(lo, hi, checked_add(lambda.weight(), p), 0, acc,
                          [&](const std::vector<int>& mu) {
                              out.add_term(0, Partition(mu), 1);
                          });
    }

    // q-terms: lambda_1 - 1 >= nu_1 >= lambda_2 - 1 >= ... >= lambda_l - 1 >= nu_l >= 0,
    // i.e. n - p border boxes removed, at least one from every row.
    const long long q_weight = lambda.weight() + p - ctx.hook_size();
    if (q_weight >= 0 && lambda.part(l) >= 1) {
        std::vector<int> lo(l), hi(l);
        for (int i = 1; i <= l; ++i) {
            lo[i - 1] = std::max(0, lambda.part(i + 1) - 1);
            hi[i - 1] = lambda.part(i) - 1;
        }
        std::vector<int> acc;
        bounded_sequences(lo, hi, q_weight, 0, acc,
                          [&](const std::vector<int>& nu) {
                              out.add_term(1, Partition(nu), 1);
                          });
    }
    return out;
}

QClass quantum_dual_pieri(int p, const Partition& lambda, const GrassmannContext& ctx) {
    if (p < 1 || p > ctx.rows()) {
        throw invalid_argument("column degree outside [1, l]");
    }
    if (!fits_in_rect(lambda, ctx)) {
        throw invalid_argument("partition does not fit the rectangle");
    }
    const int k = ctx.cols();
    QClass out(ctx);
    const Partition conj = lambda.conjugate();

    // Classical terms: p boxes added to lambda, no two in the same row.
    // On conjugates that is the interlacing l >= mu~_1 >= conj_1 >= mu~_2 >= ...
    {
        std::vector<int> lo(k), hi(k);
        for (int i = 1; i <= k; ++i) {
            lo[i - 1] = conj.part(i);
            hi[i - 1] = i == 1 ? ctx.rows() : conj.part(i - 1);
        }
        std::vector<int> acc;
        bounded_sequences(lo, hi, checked_add(lambda.weight(), p), 0, acc,
                          [&](const std::vector<int>& mu_conj) {
                              out.add_term(0, Partition(mu_conj).conjugate(), 1);
                          });
    }

    // q-terms via conjugate interlacing; none unless lambda fills column k.
    const long long q_weight = lambda.weight() + p - ctx.hook_size();
    if (q_weight >= 0 && conj.part(k) >= 1) {
        std::vector<int> lo(k), hi(k);
        for (int i = 1; i <= k; ++i) {
            lo[i - 1] = std::max(0, conj.part(i + 1) - 1);
            hi[i - 1] = conj.part(i) - 1;
        }
        std::vector<int> acc;
        bounded_sequences(lo, hi, q_weight, 0, acc,
                          [&](const std::vector<int>& nu_conj) {
                              out.add_term(1, Partition(nu_conj).conjugate(), 1);
                          });
    }
    return out;
}

QClass pieri_apply(int p, const QClass& a) {
    if (p == 0) {
        return a;
    }
    QClass out(a.context());
    for (const auto& [key, coeff] : a.terms()) {
        QClass piece = quantum_pieri(p, key.second, a.context());
        piece *= coeff;
        for (const auto& [kp, cp] : piece.terms()) {
            out.add_term(key.first + kp.first, kp.second, cp);
        }
    }
    return out;
}

QClass kostka_product(const ContentVector& mu, const Partition& lambda,
                      const GrassmannContext& ctx) {
    if (!fits_in_rect(lambda, ctx)) {
        throw invalid_argument("partition does not fit the rectangle");
    }
    long long total = lambda.weight();
    for (int m : mu) {
        if (m < 0 || m > ctx.cols()) {
            throw invalid_argument("content entry outside [0, k]");
        }
        total = checked_add(total, m);
    }
    QClass out(ctx);
    for (int m = 0; checked_mul(m, ctx.hook_size()) <= total; ++m) {
        const long long weight = total - checked_mul(m, ctx.hook_size());
        for (const Partition& nu : partitions_in_rect(ctx)) {
            if (nu.weight() != weight) {
                continue;
            }
            out.add_term(m, nu, quantum_kostka(lambda, mu, nu, ctx));
        }
    }
    return out;
}

QClass duality_map(const QClass& a) {
    QClass out(a.context().dual());
    for (const auto& [key, coeff] : a.terms()) {
        out.add_term(key.first, key.second.conjugate(), coeff);
    }
    return out;
}

} // namespace qschur
