#include "selftest.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qschur/oracle.hpp"

namespace qschur::cli {

namespace {

struct Reporter {
    bool all_ok = true;
    bool suite_ok = true;
    std::string detail;

    void begin() {
        suite_ok = true;
        detail.clear();
    }

    void check(bool ok, const std::string& what) {
        if (!ok && suite_ok) {
            suite_ok = false;
            detail = what;
        }
    }

    void end(const char* name) {
        if (suite_ok) {
            std::printf("ok - %s\n", name);
        } else {
            std::printf("FAIL - %s: %s\n", name, detail.c_str());
            all_ok = false;
        }
    }
};

std::string describe(const Partition& p) {
    return p.to_string();
}

void partition_invariants(Reporter& rep, int size) {
    rep.begin();
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> dim(1, std::max(2, size));
    for (int i = 0; i < 2000; ++i) {
        std::vector<int> parts;
        for (int j = 0; j < static_cast<int>(rng() % 7); ++j) {
            parts.push_back(1 + static_cast<int>(rng() % 8));
        }
        std::sort(parts.rbegin(), parts.rend());
        const Partition p(parts);
        rep.check(p.conjugate().conjugate() == p, "conjugation is not an involution");
        rep.check(p.conjugate().weight() == p.weight(), "conjugation changed the weight");

        const GrassmannContext ctx(dim(rng), dim(rng));
        if (fits_in_rect(p, ctx)) {
            const Partition c = complement_dual(p, ctx);
            rep.check(complement_dual(c, ctx) == p, "complement is not an involution");
            rep.check(c.weight() + p.weight() ==
                          static_cast<long long>(ctx.rows()) * ctx.cols(),
                      "complement weight mismatch");
        }
        if (!p.empty()) {
            const int n = 2 + static_cast<int>(rng() % 7);
            for (int r = 1; r <= p.part(1); ++r) {
                const auto status = n_rim_from_column(p, r, n);
                if (status.is_hook()) {
                    rep.check(status.remainder.weight() == p.weight() - n,
                              "hook removal dropped the wrong number of boxes");
                }
            }
        }
    }
    rep.end("partition invariants");
}

void full_hook_round_trip(Reporter& rep, int size) {
    rep.begin();
    const int bound = std::min(size, 3);
    for (int l = 1; l <= bound; ++l) {
        for (int k = 1; k <= bound; ++k) {
            const GrassmannContext ctx(l, k);
            for (const Partition& nu : partitions_in_rect(ctx)) {
                for (int m = 0; m <= 2; ++m) {
                    const auto core =
                        n_core(add_full_rim_hooks(nu, m, ctx), ctx.hook_size(), ctx);
                    rep.check(core.core == nu && core.hooks_removed == m && core.sign == 1,
                              "core round trip failed at " + describe(nu));
                }
            }
        }
    }
    rep.end("full-width hooks round-trip through the core");
}

void column_classes(Reporter& rep, int size) {
    rep.begin();
    for (int l = 1; l <= size; ++l) {
        for (int k = 1; k <= size; ++k) {
            const GrassmannContext ctx(l, k);
            for (int r = 0; r <= 3 * ctx.hook_size(); ++r) {
                const Partition column(std::vector<int>(r, 1));
                rep.check(reduce_schur(column, ctx) == oracle::y_closed_form(r, ctx),
                          "column class mismatch at r=" + std::to_string(r));
            }
        }
    }
    rep.end("column classes match the closed form");
}

void pieri_consistency(Reporter& rep, int size) {
    rep.begin();
    const int bound = std::min(size, 3);
    for (int l = 1; l <= bound; ++l) {
        for (int k = 1; k <= bound; ++k) {
            const GrassmannContext ctx(l, k);
            for (const Partition& lambda : partitions_in_rect(ctx)) {
                for (int p = 1; p <= k; ++p) {
                    rep.check(quantum_pieri(p, lambda, ctx) ==
                                  qmul(QClass::basis(ctx, Partition{p}),
                                       QClass::basis(ctx, lambda)),
                              "row Pieri mismatch at " + describe(lambda));
                }
                for (int p = 1; p <= l; ++p) {
                    const Partition column(std::vector<int>(p, 1));
                    rep.check(quantum_dual_pieri(p, lambda, ctx) ==
                                  qmul(QClass::basis(ctx, column),
                                       QClass::basis(ctx, lambda)),
                              "column Pieri mismatch at " + describe(lambda));
                }
            }
        }
    }
    rep.end("Pieri products match the generic product");
}

void reduction_cross_check(Reporter& rep, int size, bool inject_sign_fault) {
    rep.begin();
    const int bound = std::min(size, 3);
    for (int l = 1; l <= bound; ++l) {
        for (int k = 1; k <= bound; ++k) {
            const GrassmannContext ctx(l, k);
            const auto basis = partitions_in_rect(ctx);
            for (const Partition& a : basis) {
                for (const Partition& b : basis) {
                    const QClass product =
                        qmul(QClass::basis(ctx, a), QClass::basis(ctx, b));
                    if (!product.is_zero()) {
                        rep.check(product.homogeneous_degree() ==
                                      a.weight() + b.weight(),
                                  "product term violates the grading");
                    }
                    const long long total = a.weight() + b.weight();
                    for (int m = 0; m * ctx.hook_size() <= total; ++m) {
                        for (const Partition& nu : basis) {
                            if (nu.weight() != total - m * ctx.hook_size()) {
                                continue;
                            }
                            long long expected = 0;
                            bool first = true;
                            for (const auto& term : qlr_expansion(a, b, nu, ctx)) {
                                int sign = term.sign;
                                if (inject_sign_fault && first) {
                                    sign = -sign;
                                }
                                first = false;
                                expected += sign * term.classical;
                            }
                            rep.check(expected == product.coefficient(m, nu),
                                      "signed preimage sum disagrees with the product at " +
                                          describe(a) + " * " + describe(b));
                        }
                    }
                }
            }
        }
    }
    rep.end("signed preimage sums match product coefficients");
}

void kostka_fold(Reporter& rep, int size) {
    rep.begin();
    const int bound = std::min(size, 3);
    for (int l = 1; l <= bound; ++l) {
        for (int k = 1; k <= bound; ++k) {
            const GrassmannContext ctx(l, k);
            for (const Partition& lambda : partitions_in_rect(ctx)) {
                for (int a = 0; a <= k; ++a) {
                    for (int b = 0; b <= k; ++b) {
                        QClass folded = pieri_apply(b, pieri_apply(a, QClass::basis(ctx, lambda)));
                        rep.check(kostka_product({a, b}, lambda, ctx) == folded,
                                  "Kostka product mismatch at " + describe(lambda));
                    }
                }
            }
        }
    }
    rep.end("Kostka products match iterated Pieri");
}

void duality_sweep(Reporter& rep, int size) {
    rep.begin();
    for (int l = 1; l <= size; ++l) {
        for (int k = 1; k <= size; ++k) {
            if (l + k > 7) {
                continue;   // keeps the sweep desk-sized
            }
            const GrassmannContext ctx(l, k);
            const GrassmannContext dual = ctx.dual();
            const auto basis = partitions_in_rect(ctx);
            for (const Partition& a : basis) {
                for (const Partition& b : basis) {
                    rep.check(duality_map(qmul(QClass::basis(ctx, a),
                                               QClass::basis(ctx, b))) ==
                                  qmul(QClass::basis(dual, a.conjugate()),
                                       QClass::basis(dual, b.conjugate())),
                              "duality image of a product is not the product of images");
                }
            }
            for (const Partition& lambda : basis) {
                for (const Partition& nu : basis) {
                    for (int a = -1; a <= k; ++a) {
                        for (int b = 0; b <= (a < 0 ? 0 : k); ++b) {
                            ContentVector mu;
                            if (a >= 0) {
                                mu.push_back(a);
                                mu.push_back(b);
                            }
                            rep.check(quantum_kostka(lambda, mu, nu, ctx) ==
                                          conjugate_quantum_kostka(lambda.conjugate(), mu,
                                                                   nu.conjugate(), dual),
                                      "quantum Kostka duality mismatch at " +
                                          describe(lambda) + " / " + describe(nu));
                        }
                    }
                }
            }
        }
    }
    rep.end("duality identities hold");
}

} // namespace

bool run_selftest(int max_size, bool inject_sign_fault) {
    Reporter rep;
    partition_invariants(rep, max_size);
    full_hook_round_trip(rep, max_size);
    column_classes(rep, max_size);
    pieri_consistency(rep, max_size);
    reduction_cross_check(rep, max_size, inject_sign_fault);
    kostka_fold(rep, max_size);
    duality_sweep(rep, max_size);
    return rep.all_ok;
}

} // namespace qschur::cli
