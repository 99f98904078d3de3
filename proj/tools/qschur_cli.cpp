#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qschur/oracle.hpp"
#include "selftest.hpp"

using json = nlohmann::json;
using namespace qschur;

namespace {

json to_json(const Partition& p) {
    return json(p.parts());
}

json terms_to_json(const QClass& value) {
    json out = json::array();
    for (const auto& [key, coeff] : value.terms()) {
        out.push_back({{"m", key.first}, {"nu", to_json(key.second)}, {"coeff", coeff}});
    }
    return out;
}

json make_document(const std::string& command) {
    return json{{"schema_version", "1"}, {"command", command}};
}

void emit(const json& doc) {
    std::cout << doc.dump() << "\n";
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    if (text.empty()) {
        return out;
    }
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
        }
        if (used != token.size()) {
            throw invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
        }
        out.push_back(value);
    }
    return out;
}

struct QlrOptions {
    int l = 0;
    int k = 0;
    std::string lambda, mu, nu;
    bool dual = false;
    bool explain = false;
    bool as_json = false;
};

int cmd_qlr(const QlrOptions& opt) {
    const GrassmannContext ctx(opt.l, opt.k);
    const Partition lambda = Partition::parse(opt.lambda);
    const Partition mu = Partition::parse(opt.mu);
    Partition nu = Partition::parse(opt.nu);
    if (opt.dual) {
        nu = complement_dual(nu, ctx);
    }
    for (const Partition* p : std::initializer_list<const Partition*>{&lambda, &mu, &nu}) {
        if (!fits_in_rect(*p, ctx)) {
            throw invalid_argument("partition " + p->to_string() +
                                   " does not fit the rectangle");
        }
    }
    const auto m = hook_multiplicity(lambda.weight() + mu.weight(), nu.weight(),
                                     ctx.hook_size());
    const auto expansion = qlr_expansion(lambda, mu, nu, ctx);
    const long long coefficient = qlr_coefficient(lambda, mu, nu, ctx);

    if (opt.as_json) {
        json doc = make_document("qlr");
        doc["l"] = opt.l;
        doc["k"] = opt.k;
        doc["lambda"] = to_json(lambda);
        doc["mu"] = to_json(mu);
        doc["nu"] = to_json(nu);
        doc["coefficient"] = coefficient;
        if (m) {
            doc["m"] = *m;
        } else {
            doc["note"] = "degree mismatch";
        }
        if (opt.explain) {
            json rows = json::array();
            for (const auto& term : expansion) {
                rows.push_back({{"rho", to_json(term.rho)},
                                {"sign", term.sign},
                                {"classical", term.classical}});
            }
            doc["explain"] = rows;
        }
        emit(doc);
        return 0;
    }

    if (!m) {
        std::cerr << "note: degree mismatch, no m >= 0 with |lambda|+|mu| = |nu| + m*n\n";
    }
    if (opt.explain) {
        for (const auto& term : expansion) {
            std::cout << "rho=[" << term.rho.to_string() << "] sign="
                      << (term.sign > 0 ? "+1" : "-1") << " classical=" << term.classical
                      << "\n";
        }
    }
    std::cout << coefficient << "\n";
    return 0;
}

struct ProductOptions {
    int l = 0;
    int k = 0;
    std::string lambda, mu;
    bool verify = false;
    bool as_json = false;
};

int cmd_product(const ProductOptions& opt) {
    const GrassmannContext ctx(opt.l, opt.k);
    const Partition lambda = Partition::parse(opt.lambda);
    const Partition mu = Partition::parse(opt.mu);
    const QClass product = qmul(QClass::basis(ctx, lambda), QClass::basis(ctx, mu));

    if (opt.as_json) {
        json doc = make_document("product");
        doc["l"] = opt.l;
        doc["k"] = opt.k;
        doc["lambda"] = to_json(lambda);
        doc["mu"] = to_json(mu);
        doc["terms"] = terms_to_json(product);
        emit(doc);
    } else {
        std::cout << product.to_string() << "\n";
    }

    if (opt.verify) {
        const QClass recomputed = oracle::pieri_giambelli_product(lambda, mu, ctx);
        if (recomputed != product) {
            std::cerr << "verification failed: determinant route gives "
                      << recomputed.to_string() << "\n";
            return 1;
        }
    }
    return 0;
}

struct QkostkaOptions {
    int l = 0;
    int k = 0;
    std::string lambda, nu, mu_list;
    bool show_tableaux = false;
    bool as_json = false;
};

int cmd_qkostka(const QkostkaOptions& opt) {
    const GrassmannContext ctx(opt.l, opt.k);
    const Partition lambda = Partition::parse(opt.lambda);
    const Partition nu = Partition::parse(opt.nu);
    const ContentVector mu = parse_int_list(opt.mu_list, "mu-list");

    long long total = lambda.weight();
    for (int v : mu) {
        total += v;
    }
    const auto m = hook_multiplicity(total, nu.weight(), ctx.hook_size());
    const long long count = quantum_kostka(lambda, mu, nu, ctx);

    std::vector<SkewTableau> proper;
    if (opt.show_tableaux && m) {
        const Partition grown = add_full_rim_hooks(nu, *m, ctx);
        if (grown.contains(lambda)) {
            for_each_tableau(SkewShape(grown, lambda), mu, TableauKind::ordinary,
                             [&](const SkewTableau& t) {
                                 if (is_proper(t, ctx)) {
                                     proper.push_back(t);
                                 }
                             });
        }
    }

    if (opt.as_json) {
        json doc = make_document("qkostka");
        doc["l"] = opt.l;
        doc["k"] = opt.k;
        doc["lambda"] = to_json(lambda);
        doc["nu"] = to_json(nu);
        doc["mu"] = json(mu);
        doc["count"] = count;
        if (m) {
            doc["m"] = *m;
        } else {
            doc["note"] = "degree mismatch";
        }
        if (opt.show_tableaux) {
            json tableaux = json::array();
            for (const auto& t : proper) {
                json rows = json::array();
                std::istringstream text(t.to_text());
                std::string line;
                while (std::getline(text, line)) {
                    rows.push_back(line);
                }
                tableaux.push_back(rows);
            }
            doc["tableaux"] = tableaux;
        }
        emit(doc);
        return 0;
    }

    if (!m) {
        std::cerr << "note: degree mismatch, no m >= 0 with |lambda|+sum(mu) = |nu| + m*n\n";
    }
    std::cout << count << "\n";
    for (const auto& t : proper) {
        std::cout << "\n" << t.to_text() << "\n";
    }
    return 0;
}

int cmd_reduce(int l, int k, const std::string& lambda_text, bool as_json) {
    const GrassmannContext ctx(l, k);
    const Partition lambda = Partition::parse(lambda_text);
    const QClass reduced = reduce_schur(lambda, ctx);
    if (as_json) {
        json doc = make_document("reduce");
        doc["l"] = l;
        doc["k"] = k;
        doc["lambda"] = to_json(lambda);
        doc["terms"] = terms_to_json(reduced);
        emit(doc);
    } else {
        std::cout << reduced.to_signed_string() << "\n";
    }
    return 0;
}

int cmd_core(int hook_size, const std::string& lambda_text, bool as_json) {
    if (hook_size < 1) {
        throw invalid_argument("hook size must be positive");
    }
    const Partition lambda = Partition::parse(lambda_text);
    const CoreDecomposition dec = core_decompose(lambda, hook_size);
    if (as_json) {
        json doc = make_document("core");
        doc["n"] = hook_size;
        doc["lambda"] = to_json(lambda);
        doc["core"] = to_json(dec.core);
        doc["m"] = dec.hooks_removed;
        doc["widths"] = json(dec.widths);
        emit(doc);
    } else {
        std::cout << "core: " << dec.core.to_string() << "\n";
        std::cout << "m: " << dec.hooks_removed << "\n";
        std::cout << "widths: ";
        for (std::size_t i = 0; i < dec.widths.size(); ++i) {
            std::cout << (i ? "," : "") << dec.widths[i];
        }
        std::cout << "\n";
    }
    return 0;
}

struct TableOptions {
    int l = 0;
    int k = 0;
    int max_degree = -1;
    std::string out_path;
};

std::string csv_quote(const Partition& p) {
    return "\"" + p.to_string() + "\"";
}

int cmd_table(const TableOptions& opt) {
    const GrassmannContext ctx(opt.l, opt.k);
    const auto basis = partitions_in_rect(ctx);

    const bool to_file = !opt.out_path.empty();
    const bool json_format =
        to_file && opt.out_path.size() >= 5 &&
        opt.out_path.substr(opt.out_path.size() - 5) == ".json";

    std::ofstream file;
    if (to_file) {
        file.open(opt.out_path);
        if (!file) {
            throw invalid_argument("cannot open output file: " + opt.out_path);
        }
    }
    std::ostream& out = to_file ? static_cast<std::ostream&>(file) : std::cout;

    long long rows = 0;
    json json_rows = json::array();
    if (!json_format) {
        out << "l,k,lambda,mu,nu,m,coefficient\n";
    }
    for (const Partition& lambda : basis) {
        for (const Partition& mu : basis) {
            if (opt.max_degree >= 0 &&
                lambda.weight() + mu.weight() > opt.max_degree) {
                continue;
            }
            const QClass product =
                qmul(QClass::basis(ctx, lambda), QClass::basis(ctx, mu));
            for (const auto& [key, coeff] : product.terms()) {
                if (json_format) {
                    json_rows.push_back({{"lambda", to_json(lambda)},
                                         {"mu", to_json(mu)},
                                         {"nu", to_json(key.second)},
                                         {"m", key.first},
                                         {"coefficient", coeff}});
                } else {
                    out << opt.l << ',' << opt.k << ',' << csv_quote(lambda) << ','
                        << csv_quote(mu) << ',' << csv_quote(key.second) << ','
                        << key.first << ',' << coeff << "\n";
                }
                ++rows;
            }
        }
    }
    if (json_format) {
        json doc = make_document("table");
        doc["l"] = opt.l;
        doc["k"] = opt.k;
        doc["rows"] = std::move(json_rows);
        out << doc.dump() << "\n";
    }
    if (to_file) {
        std::cerr << "wrote " << rows << " rows to " << opt.out_path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structure constants of the small quantum cohomology ring of a "
                 "Grassmannian: quantum Littlewood-Richardson numbers via rim hook "
                 "reduction, quantum Kostka numbers via proper tableaux, quantum "
                 "Pieri products, and the duality isomorphism."};
    app.require_subcommand(1);

    QlrOptions qlr_opt;
    auto* qlr = app.add_subcommand(
        "qlr", "Quantum Littlewood-Richardson coefficient of q^m sigma_nu in "
               "sigma_lambda * sigma_mu");
    qlr->add_option("--l", qlr_opt.l, "rows of the rectangle")->required();
    qlr->add_option("--k", qlr_opt.k, "columns of the rectangle")->required();
    qlr->add_option("--lambda", qlr_opt.lambda, "partition, e.g. 5,4,4,2,2 (0 = empty)")
        ->required();
    qlr->add_option("--mu", qlr_opt.mu, "partition")->required();
    qlr->add_option("--nu", qlr_opt.nu, "partition")->required();
    qlr->add_flag("--dual", qlr_opt.dual,
                  "interpret --nu as its complement in the rectangle");
    qlr->add_flag("--explain", qlr_opt.explain,
                  "list every rim hook preimage with its sign and classical number");
    qlr->add_flag("--json", qlr_opt.as_json, "emit a JSON document");

    ProductOptions prod_opt;
    auto* product = app.add_subcommand("product",
                                       "Full expansion of sigma_lambda * sigma_mu");
    product->add_option("--l", prod_opt.l)->required();
    product->add_option("--k", prod_opt.k)->required();
    product->add_option("--lambda", prod_opt.lambda)->required();
    product->add_option("--mu", prod_opt.mu)->required();
    product->add_flag("--verify", prod_opt.verify,
                      "recompute along the determinant route and fail on mismatch");
    product->add_flag("--json", prod_opt.as_json, "emit a JSON document");

    QkostkaOptions qk_opt;
    auto* qkostka = app.add_subcommand(
        "qkostka", "Quantum Kostka number: proper tableaux on nu[m]/lambda");
    qkostka->add_option("--l", qk_opt.l)->required();
    qkostka->add_option("--k", qk_opt.k)->required();
    qkostka->add_option("--lambda", qk_opt.lambda)->required();
    qkostka->add_option("--nu", qk_opt.nu)->required();
    qkostka->add_option("--mu-list", qk_opt.mu_list,
                        "content multiplicities, e.g. 5,2,2 (may be empty)");
    qkostka->add_flag("--show-tableaux", qk_opt.show_tableaux,
                      "print the proper tableaux ('.' marks inner cells)");
    qkostka->add_flag("--json", qk_opt.as_json, "emit a JSON document");

    int reduce_l = 0;
    int reduce_k = 0;
    std::string reduce_lambda;
    bool reduce_json = false;
    auto* reduce = app.add_subcommand(
        "reduce", "Write sigma_lambda in the basis by rim hook removal");
    reduce->add_option("--l", reduce_l)->required();
    reduce->add_option("--k", reduce_k)->required();
    reduce->add_option("--lambda", reduce_lambda)->required();
    reduce->add_flag("--json", reduce_json, "emit a JSON document");

    int core_n = 0;
    std::string core_lambda;
    bool core_json = false;
    auto* core = app.add_subcommand("core", "n-core of a partition");
    core->add_option("--n", core_n, "hook size")->required();
    core->add_option("--lambda", core_lambda)->required();
    core->add_flag("--json", core_json, "emit a JSON document");

    TableOptions table_opt;
    auto* table = app.add_subcommand(
        "table", "All structure constants for the rectangle, as CSV or JSON");
    table->add_option("--l", table_opt.l)->required();
    table->add_option("--k", table_opt.k)->required();
    table->add_option("--max-degree", table_opt.max_degree,
                      "only pairs with |lambda| + |mu| at most this");
    table->add_option("--out", table_opt.out_path,
                      "output file (.csv or .json); stdout when omitted");

    int selftest_size = 3;
    bool selftest_fault = false;
    auto* selftest = app.add_subcommand("selftest", "Run the invariant sweeps");
    selftest->add_option("--max-size", selftest_size, "rectangle size bound")
        ->check(CLI::Range(1, 6));
    selftest->add_flag("--inject-sign-fault", selftest_fault,
                       "flip one epsilon sign inside a cross-check; the run must fail");

    try {
        app.parse(argc, argv);
        if (qlr->parsed()) {
            return cmd_qlr(qlr_opt);
        }
        if (product->parsed()) {
            return cmd_product(prod_opt);
        }
        if (qkostka->parsed()) {
            return cmd_qkostka(qk_opt);
        }
        if (reduce->parsed()) {
            return cmd_reduce(reduce_l, reduce_k, reduce_lambda, reduce_json);
        }
        if (core->parsed()) {
            return cmd_core(core_n, core_lambda, core_json);
        }
        if (table->parsed()) {
            return cmd_table(table_opt);
        }
        if (selftest->parsed()) {
            return cli::run_selftest(selftest_size, selftest_fault) ? 0 : 1;
        }
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const arithmetic_overflow& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
