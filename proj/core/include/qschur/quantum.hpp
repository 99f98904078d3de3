#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qschur/partition.hpp"
#include "qschur/tableau.hpp"

namespace qschur {

/// An element of Lambda(l, k): a finite integer combination of basis
/// symbols q^m sigma_nu with nu inside the l x k rectangle. Zero
/// coefficients are never stored; term order is (m ascending, nu
/// lexicographic ascending).
class QClass {
public:
    using TermMap = std::map<std::pair<int, Partition>, long long>;

    explicit QClass(GrassmannContext ctx) : ctx_(ctx) {}

    static QClass zero(GrassmannContext ctx) { return QClass(ctx); }
    static QClass unit(GrassmannContext ctx);
    static QClass basis(GrassmannContext ctx, const Partition& nu);
    static QClass term(GrassmannContext ctx, int q_degree, const Partition& nu,
                       long long coeff);

    const GrassmannContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coefficient(int q_degree, const Partition& nu) const;

    /// Adds coeff * q^q_degree * sigma_nu; nu must fit the rectangle.
    void add_term(int q_degree, const Partition& nu, long long coeff);

    /// When every term satisfies m*n + |nu| = d for a single d, that d.
    std::optional<long long> homogeneous_degree() const;

    QClass& operator+=(const QClass& other);
    QClass& operator-=(const QClass& other);
    QClass& operator*=(long long scalar);

    /// "sigma[4,2,2,1] + q·sigma[1]" style; zero prints as "0".
    std::string to_string() const;

    /// Explicit sign and q-power, e.g. "+q^1·sigma[0]"; used by reduction
    /// output where the sign is the point.
    std::string to_signed_string() const;

    friend bool operator==(const QClass&, const QClass&) = default;

private:
    GrassmannContext ctx_;
    TermMap terms_;
};

/// Reduces a Schur symbol with at most k columns into the basis: repeated
/// rim n-hook removal with the width sign, zero on any illegal rim or when
/// the core leaves the rectangle.
QClass reduce_schur(const Partition& lambda, const GrassmannContext& ctx);

/// One summand of the quantum Littlewood-Richardson expansion.
struct QlrTerm {
    Partition rho;
    int sign = 1;
    long long classical = 0;
};

/// The signed preimage expansion behind qlr_coefficient, one term per rim
/// hook preimage rho of nu. Empty when the degrees cannot match.
std::vector<QlrTerm> qlr_expansion(const Partition& lambda, const Partition& mu,
                                   const Partition& nu, const GrassmannContext& ctx);

/// Quantum Littlewood-Richardson number: the signed sum of classical
/// coefficients over rim hook preimages. Always nonnegative; a negative
/// sum raises internal_error.
long long qlr_coefficient(const Partition& lambda, const Partition& mu,
                          const Partition& nu, const GrassmannContext& ctx);

/// Product in Lambda(l, k). Bilinear; basis products are memoized per
/// rectangle behind a lock, with results identical to the uncached path.
QClass qmul(const QClass& a, const QClass& b);

/// Product sigma_p * sigma_lambda straight from the interlacing statement:
/// classical terms plus q-terms removing n-p border boxes, one per row.
/// Independent of reduce_schur.
QClass quantum_pieri(int p, const Partition& lambda, const GrassmannContext& ctx);

/// Product sigma_(1^p) * sigma_lambda: column strips plus q-terms removing
/// n-p border boxes, one per column.
QClass quantum_dual_pieri(int p, const Partition& lambda, const GrassmannContext& ctx);

/// Applies quantum_pieri to every term of a class (p = 0 is the identity).
QClass pieri_apply(int p, const QClass& a);

/// The product sigma_{mu_r} * ... * sigma_{mu_1} * sigma_lambda, with the
/// coefficient at (m, nu) given by the quantum Kostka number.
QClass kostka_product(const ContentVector& mu, const Partition& lambda,
                      const GrassmannContext& ctx);

/// The ring isomorphism Lambda(l, k) -> Lambda(k, l): q fixed, each basis
/// symbol sent to its conjugate partition.
QClass duality_map(const QClass& a);

} // namespace qschur
