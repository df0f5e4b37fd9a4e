// u3coef: U(3) coupling and recoupling coefficients on the command line.
//
// Exit codes: 0 success, 1 bad usage or labels, 2 numerical diagnostic
// (a computed table failed one of its internal consistency bounds).

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "u3/canonical_cgc.hpp"
#include "u3/errors.hpp"
#include "u3/physical.hpp"
#include "u3/recoupling.hpp"
#include "u3/render.hpp"
#include "u3/selftest.hpp"
#include "u3/table_io.hpp"
#include "u3/wigner.hpp"

namespace {

struct Options {
    std::string format = "table";
    double tol = 1e-10;
    std::string cache_dir;
    bool no_cache = false;

    bool caching() const { return !cache_dir.empty() && !no_cache; }
    bool json() const { return format == "json"; }
};

// A U(3) label "n13,n23,n33", or a two-entry "lambda,mu" which names the
// shift-free irrep [lambda+mu, mu, 0].
u3::U3Irrep parse_label(const std::string& text) {
    if (auto g = u3::parse_u3(text)) {
        if (!valid(*g)) throw std::invalid_argument("non-decreasing label: " + text);
        return *g;
    }
    const auto comma = text.find(',');
    if (comma != std::string::npos && text.find(',', comma + 1) == std::string::npos) {
        try {
            const int lambda = std::stoi(text.substr(0, comma));
            const int mu = std::stoi(text.substr(comma + 1));
            if (lambda >= 0 && mu >= 0) return u3::lift(u3::SU3Irrep{lambda, mu});
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("cannot parse irrep label: " + text);
}

// The dim/enumerate forms: one comma label, two bare integers (lambda mu),
// or three bare integers (n13 n23 n33).
u3::U3Irrep parse_label_args(const std::vector<std::string>& args) {
    if (args.size() == 1) return parse_label(args[0]);
    std::vector<int> v;
    for (const std::string& a : args) {
        try {
            v.push_back(std::stoi(a));
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse integer: " + a);
        }
        if (v.back() < 0 && args.size() == 2)
            throw std::invalid_argument("negative weight label: " + a);
    }
    if (v.size() == 2) return u3::lift(u3::SU3Irrep{v[0], v[1]});
    const u3::U3Irrep g{v[0], v[1], v[2]};
    if (!valid(g)) throw std::invalid_argument("non-decreasing label");
    return g;
}

void emit(const Options& opt, const u3::Json& json, const std::string& text) {
    std::cout << (opt.json() ? json.dump() : text);
}

int run_selftest_command(const Options& opt, int max_quanta, long max_product_dim) {
    u3::SelftestOptions st;
    st.max_quanta = max_quanta;
    st.max_product_dim = max_product_dim;
    st.tol = opt.tol;
    if (opt.caching()) st.cache_dir = opt.cache_dir;
    const auto results = u3::run_selftest(st);
    int failed = 0;
    for (const auto& r : results) {
        if (!r.passed) ++failed;
        std::printf("[ %s ] %-24s %7.2f s  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.detail.c_str());
    }
    std::printf("%zu/%zu checks passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"U(3) coupling, recoupling and angular-momentum reduction coefficients"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->transform(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--tol", opt.tol, "Numerical tolerance for rank decisions and checks")
        ->capture_default_str();
    app.add_option("--cache-dir", opt.cache_dir,
                   "Directory for binary table caching (no caching when unset)");
    app.add_flag("--no-cache", opt.no_cache, "Disable the table cache even if a directory is set");

    std::vector<std::string> dim_args, enum_args;
    auto* c_dim = app.add_subcommand("dim", "Dimension of an irrep");
    c_dim->add_option("label", dim_args,
                      "\"n13,n23,n33\" or \"lambda,mu\", or 2-3 bare integers")
        ->required()
        ->expected(1, 3);

    auto* c_enum = app.add_subcommand("enumerate", "List the canonical basis of an irrep");
    c_enum->add_option("label", enum_args, "Irrep label")->required()->expected(1, 3);

    std::string a1, a2, a3, a4, a5, a6, a7, a8, a9;
    auto* c_dec = app.add_subcommand("decompose", "Coupled irreps of a product with multiplicities");
    c_dec->add_option("g1", a1)->required();
    c_dec->add_option("g2", a2)->required();

    auto* c_cgc = app.add_subcommand("cgc", "Coupling coefficients g1 x g2 -> g12");
    c_cgc->add_option("g1", a1)->required();
    c_cgc->add_option("g2", a2)->required();
    c_cgc->add_option("g12", a3)->required();

    auto* c_u = app.add_subcommand("ucoef", "Recoupling between (g1 g2)g3 and g1(g2 g3)");
    for (auto [name, slot] : {std::pair{"g1", &a1}, {"g2", &a2}, {"g", &a3}, {"g3", &a4},
                              {"g12", &a5}, {"g23", &a6}})
        c_u->add_option(name, *slot)->required();

    auto* c_z = app.add_subcommand("zcoef", "Recoupling that exchanges the first two factors");
    for (auto [name, slot] : {std::pair{"g2", &a1}, {"g1", &a2}, {"g", &a3}, {"g3", &a4},
                              {"g12", &a5}, {"g13", &a6}})
        c_z->add_option(name, *slot)->required();

    auto* c_nine = app.add_subcommand("nine", "Recoupling of four coupled irreps");
    for (auto [name, slot] :
         {std::pair{"g1", &a1}, {"g2", &a2}, {"g12", &a3}, {"g3", &a4}, {"g4", &a5},
          {"g34", &a6}, {"g13", &a7}, {"g24", &a8}, {"g", &a9}})
        c_nine->add_option(name, *slot)->required();

    int lambda = 0, mu = 0, big_l = 0;
    auto* c_content = app.add_subcommand("content", "Angular momentum content of an irrep");
    c_content->add_option("lambda", lambda)->required()->check(CLI::NonNegativeNumber);
    c_content->add_option("mu", mu)->required()->check(CLI::NonNegativeNumber);

    auto* c_tr = app.add_subcommand("transform", "Angular-momentum basis rows at one L");
    c_tr->add_option("lambda", lambda)->required()->check(CLI::NonNegativeNumber);
    c_tr->add_option("mu", mu)->required()->check(CLI::NonNegativeNumber);
    c_tr->add_option("L", big_l)->required()->check(CLI::NonNegativeNumber);

    int lambda2 = 0, mu2 = 0;
    auto* c_w = app.add_subcommand("wigner", "Reduced coupling coefficients in the L basis");
    c_w->add_option("lambda1", lambda)->required()->check(CLI::NonNegativeNumber);
    c_w->add_option("mu1", mu)->required()->check(CLI::NonNegativeNumber);
    c_w->add_option("lambda2", lambda2)->required()->check(CLI::NonNegativeNumber);
    c_w->add_option("mu2", mu2)->required()->check(CLI::NonNegativeNumber);

    int max_quanta = 6;
    long max_product_dim = 400;
    auto* c_self = app.add_subcommand("selftest", "Run the built-in verification battery");
    c_self->add_option("--max-quanta", max_quanta, "Quanta bound for coupling sweeps")
        ->capture_default_str();
    c_self->add_option("--max-product-dim", max_product_dim,
                       "Product dimension bound for full-table sweeps")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*c_dim) {
            const u3::U3Irrep g = parse_label_args(dim_args);
            emit(opt, u3::render_dim_json(g), u3::render_dim_text(g));
        } else if (*c_enum) {
            const u3::U3Irrep g = parse_label_args(enum_args);
            emit(opt, u3::render_enumerate_json(g), u3::render_enumerate_text(g));
        } else if (*c_dec) {
            const u3::U3Irrep g1 = parse_label(a1), g2 = parse_label(a2);
            emit(opt, u3::render_decompose_json(g1, g2), u3::render_decompose_text(g1, g2));
        } else if (*c_cgc) {
            const u3::U3Irrep g1 = parse_label(a1), g2 = parse_label(a2), g12 = parse_label(a3);
            if (u3::outer_multiplicity(g1, g2, g12) == 0)
                throw std::invalid_argument(u3::to_string(g12) + " does not occur in " +
                                            u3::to_string(g1) + " x " + u3::to_string(g2));
            std::optional<u3::CGTable> table;
            if (opt.caching()) table = u3::load_table(opt.cache_dir, g1, g2, g12, opt.tol);
            if (!table) {
                table.emplace(g1, g2, g12, opt.tol);
                if (opt.caching()) u3::save_table(opt.cache_dir, *table);
            }
            emit(opt, u3::render_cgc_json(*table), u3::render_cgc_text(*table));
        } else if (*c_u) {
            u3::TableCache cache(opt.tol);
            const auto t = u3::u_coefficients(parse_label(a1), parse_label(a2), parse_label(a3),
                                              parse_label(a4), parse_label(a5), parse_label(a6),
                                              cache);
            if (t.empty()) throw std::invalid_argument("labels do not couple");
            emit(opt, u3::render_ucoef_json(t), u3::render_ucoef_text(t));
        } else if (*c_z) {
            u3::TableCache cache(opt.tol);
            const auto t = u3::z_coefficients(parse_label(a1), parse_label(a2), parse_label(a3),
                                              parse_label(a4), parse_label(a5), parse_label(a6),
                                              cache);
            if (t.empty()) throw std::invalid_argument("labels do not couple");
            emit(opt, u3::render_zcoef_json(t), u3::render_zcoef_text(t));
        } else if (*c_nine) {
            u3::TableCache cache(opt.tol);
            const auto t = u3::nine_u3(parse_label(a1), parse_label(a2), parse_label(a3),
                                       parse_label(a4), parse_label(a5), parse_label(a6),
                                       parse_label(a7), parse_label(a8), parse_label(a9), cache);
            if (t.empty()) throw std::invalid_argument("labels do not couple");
            emit(opt, u3::render_nine_json(t), u3::render_nine_text(t));
        } else if (*c_content) {
            const u3::SU3Irrep s{lambda, mu};
            emit(opt, u3::render_content_json(s), u3::render_content_text(s));
        } else if (*c_tr) {
            const u3::U3Irrep g = u3::lift(u3::SU3Irrep{lambda, mu});
            if (u3::inner_multiplicity(g, big_l) == 0)
                throw std::invalid_argument("L=" + std::to_string(big_l) +
                                            " does not occur in (" + std::to_string(lambda) +
                                            "," + std::to_string(mu) + ")");
            const auto t = u3::hw_transform(g, big_l, opt.tol);
            emit(opt, u3::render_transform_json(t), u3::render_transform_text(t));
        } else if (*c_w) {
            const u3::SU3Irrep s1{lambda, mu}, s2{lambda2, mu2};
            std::optional<u3::WignerTable> table;
            if (opt.caching()) table = u3::load_wigner(opt.cache_dir, s1, s2, opt.tol);
            if (!table) {
                u3::TableCache cache(opt.tol);
                table = u3::wigner_table(s1, s2, cache);
                if (opt.caching()) u3::save_wigner(opt.cache_dir, *table);
            }
            emit(opt, u3::render_wigner_json(*table), u3::render_wigner_text(*table));
        } else if (*c_self) {
            return run_selftest_command(opt, max_quanta, max_product_dim);
        }
    } catch (const u3::NumericalDiagnostic& e) {
        std::cerr << "numerical diagnostic: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
