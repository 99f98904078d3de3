#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qschur/partition.hpp"
#include "qschur/quantum.hpp"

// Verification routes that recompute ring results along different paths.
// Nothing here may call into the tableau module; only partition primitives
// and the public quantum surface are shared.

namespace qschur::oracle {

/// Sparse integer polynomial in up to 16 variables, exponents at most 15
/// each, packed into one 64-bit key per monomial (variable 1 in the top
/// nibble, so key order is lexicographic monomial order).
class MultivarPoly {
public:
    using Key = std::uint64_t;
    using Term = std::pair<Key, long long>;

    static constexpr int max_vars = 16;
    static constexpr int max_exponent = 15;

    explicit MultivarPoly(int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    /// Terms in increasing key order, no zero coefficients.
    const std::vector<Term>& terms() const { return terms_; }

    Key pack(std::span<const int> exponents) const;
    std::vector<int> unpack(Key key) const;

    void add_monomial(Key key, long long coeff);
    /// Restores sortedness after a batch of add_monomial calls.
    void normalize();

    const Term& leading_term() const;

    MultivarPoly& operator+=(const MultivarPoly& other);
    MultivarPoly& operator-=(const MultivarPoly& other);
    MultivarPoly& operator*=(long long scalar);

    /// this -= scale * other, in one merge pass.
    void subtract_scaled(const MultivarPoly& other, long long scale);

    friend MultivarPoly operator*(const MultivarPoly& a, const MultivarPoly& b);
    friend bool operator==(const MultivarPoly&, const MultivarPoly&) = default;

private:
    void merge_scaled(const MultivarPoly& other, long long scale);

    int nvars_;
    std::vector<Term> terms_;
    bool dirty_ = false;
};

/// The Schur polynomial as its tableau generating function: one monomial
/// per column-strict filling of the straight shape with entries <= nvars.
MultivarPoly schur_poly(const Partition& lambda, int nvars);

/// Expands schur_poly(lambda) * schur_poly(mu) in the Schur basis by
/// repeated leading-monomial subtraction.
std::map<Partition, long long> schur_expansion(const Partition& lambda,
                                               const Partition& mu);

/// Coefficient of nu in the Schur expansion of schur_poly(lambda) *
/// schur_poly(mu); must agree with classical_lr. Works in max-length many
/// variables, conjugating the whole triple when that side is smaller.
long long poly_lr(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Closed form for the column classes: sigma_(1^r) written in the basis
/// directly from r = m*n + j, without any hook removal.
QClass y_closed_form(long long r, const GrassmannContext& ctx);

/// sigma_lambda * sigma_mu computed by expanding the single-row determinant
/// of mu over permutations and folding quantum_pieri; independent of the
/// rim hook reduction route.
QClass pieri_giambelli_product(const Partition& lambda, const Partition& mu,
                               const GrassmannContext& ctx);

} // namespace qschur::oracle
