// rgh: real grid homology calculator for strongly invertible knots and links.
//
// Subcommands:
//   compute <input> --flavor {tilde|hat|minus} [--json]
//   poly <input> [--json]
//   invariants <input> [--json]
//   verify <input> [--moves N --seed S] [--json]
//   table <dir> [--latex|--json]
//   corpus list | corpus get <name>
//
// Inputs are .rgd files or corpus:NAME.  Exit codes: 0 success, 2 invalid
// input, 3 internal-consistency failure, 4 capacity refusal.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "rgh/corpus.hpp"
#include "rgh/render.hpp"

namespace fs = std::filesystem;
using namespace rgh;
using nlohmann::json;

namespace {

Diagram load_input(const std::string& path) {
    if (path.rfind("corpus:", 0) == 0) return corpus_get(path.substr(7));
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Diagram d = parse_diagram(text);
    if (d.name.empty()) d.name = fs::path(path).stem().string();
    return d;
}

struct Options {
    SizeLimits limits{};
    bool json = false;
};

int cmd_compute(const std::string& input, const std::string& flavor, const Options& opt) {
    Diagram d = load_input(input);
    LinkTrace tr = validate(d);
    if (flavor == "tilde" || flavor == "hat") {
        if (d.n > opt.limits.hat)
            throw capacity_error("grid size " + std::to_string(d.n) + " exceeds hat limit " +
                                 std::to_string(opt.limits.hat) + " (raise with --max-hat)");
        StateTable st = enumerate_states(d, tr);
        GradedComplex cx = build_complex(d, st, Flavor::Tilde);
        if (!check_d_squared(cx)) throw consistency_error("d^2 != 0 in tilde flavor");
        BigradedDims dims = homology_f2(cx);
        if (flavor == "hat") {
            if (st.relative)
                throw input_error("hat normalization is not defined for periodic diagrams");
            dims = divide_w(dims, w_power(d.n, tr.l_f, tr.l_p));
        }
        if (opt.json) {
            json out = {{"flavor", flavor},
                        {"diagram", d.name},
                        {"n", d.n},
                        {"bigraded", dims_json(dims)}};
            if (st.relative) out["relative"] = true;
            std::cout << out.dump(2) << "\n";
        } else {
            if (st.relative) std::cout << "(relative Maslov grading)\n";
            std::cout << hat_text(dims) << "\n";
        }
        return 0;
    }
    if (flavor == "minus") {
        if (tr.classification != LinkClass::StronglyInvertible)
            throw input_error("minus flavor requires a strongly invertible diagram");
        if (d.n > opt.limits.minus)
            throw capacity_error("grid size " + std::to_string(d.n) + " exceeds minus limit " +
                                 std::to_string(opt.limits.minus) + " (raise with --max-minus)");
        StateTable st = enumerate_states(d, tr);
        GradedComplex cx = build_complex(d, st, Flavor::MinusTilde);
        if (!check_d_squared(cx)) throw consistency_error("d^2 != 0 in minus-tilde flavor");
        UModule mod = divide_w(homology_over_u(cx), w_power(d.n, tr.l_f, tr.l_p));
        if (opt.json) {
            json out = {{"flavor", "minus"},
                        {"diagram", d.name},
                        {"n", d.n},
                        {"module", module_json(mod)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << minus_text(mod) << "\n";
        }
        return 0;
    }
    throw input_error("unknown flavor '" + flavor + "'");
}

int cmd_poly(const std::string& input, const Options& opt) {
    Diagram d = load_input(input);
    LinkTrace tr = validate(d);
    if (d.n > opt.limits.poly)
        throw capacity_error("grid size " + std::to_string(d.n) + " exceeds poly limit " +
                             std::to_string(opt.limits.poly) + " (raise with --max-poly)");
    LaurentPoly p = d.n <= 16 ? alexander_polynomial(d, enumerate_states(d, tr))
                              : alexander_polynomial_streaming(d, tr);
    if (opt.json)
        std::cout << json{{"diagram", d.name}, {"alexander", poly_json(p)}}.dump(2) << "\n";
    else
        std::cout << p.str() << "\n";
    return 0;
}

int cmd_invariants(const std::string& input, const Options& opt) {
    Diagram d = load_input(input);
    Results r = compute_all(d, opt.limits, d.n <= opt.limits.minus);
    if (opt.json) {
        json out = {{"diagram", d.name},
                    {"n", d.n},
                    {"classification", to_string(r.trace.classification)},
                    {"l_f", r.trace.l_f},
                    {"l_p", r.trace.l_p},
                    {"hat", dims_json(r.hat)},
                    {"alexander", poly_json(r.alexander)}};
        json prof = json::array();
        for (auto& [td, dim] : delta_profile(r.hat))
            prof.push_back({{"delta2", td}, {"dim", dim}});
        out["delta_profile"] = prof;
        if (d.n <= opt.limits.minus) {
            out["minus"] = module_json(r.minus);
            if (r.tau) out["tau"] = *r.tau;
            if (r.ord_u) out["ord_u"] = *r.ord_u;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "diagram: " << d.name << " (n=" << d.n << ", "
                  << to_string(r.trace.classification) << ", l_f=" << r.trace.l_f
                  << ", l_p=" << r.trace.l_p << ")\n";
        std::cout << "hat:   " << hat_text(r.hat) << "\n";
        std::cout << "alex:  " << r.alexander.str() << "\n";
        std::cout << "delta: ";
        bool first = true;
        for (auto& [td, dim] : delta_profile(r.hat)) {
            std::cout << (first ? "" : " ") << "[2d=" << td << "]^" << dim;
            first = false;
        }
        std::cout << "\n";
        if (d.n <= opt.limits.minus) {
            std::cout << "minus: " << minus_text(r.minus) << "\n";
            if (r.tau) std::cout << "tau:   " << *r.tau << "\n";
            if (r.ord_u) std::cout << "ord_u: " << *r.ord_u << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& input, int moves, std::uint64_t seed, const Options& opt) {
    Diagram d = load_input(input);
    VerifyOptions vo;
    vo.moves = moves;
    vo.seed = seed;
    vo.limits = opt.limits;
    Report rep = verify_diagram_suite(d, vo);
    if (opt.json)
        std::cout << report_json(rep).dump(2) << "\n";
    else
        std::cout << report_text(rep);
    return rep.all_pass() ? 0 : 3;
}

int cmd_table(const std::string& dir, bool latex, const Options& opt) {
    std::vector<fs::path> files;
    for (auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".rgd") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    json rows = json::array();
    for (auto& f : files) {
        Diagram d = load_input(f.string());
        Results r = compute_all(d, opt.limits, d.n <= opt.limits.minus);
        if (opt.json) {
            json row = {{"name", d.name},
                        {"n", d.n},
                        {"hat", dims_json(r.hat)},
                        {"alexander", poly_json(r.alexander)}};
            if (d.n <= opt.limits.minus) row["minus"] = module_json(r.minus);
            rows.push_back(row);
        } else if (latex) {
            std::cout << d.name << " & $" << hat_latex(r.hat) << "$ & $";
            if (d.n <= opt.limits.minus) std::cout << minus_latex(r.minus);
            std::cout << "$ \\\\\n";
        } else {
            std::cout << d.name << ": hat " << hat_text(r.hat);
            if (d.n <= opt.limits.minus) std::cout << " | minus " << minus_text(r.minus);
            std::cout << " | alex " << r.alexander.str() << "\n";
        }
    }
    if (opt.json) std::cout << rows.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"real grid homology calculator"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--max-minus", opt.limits.minus, "size limit for the minus flavor");
    app.add_option("--max-hat", opt.limits.hat, "size limit for the hat/tilde flavors");
    app.add_option("--max-poly", opt.limits.poly, "size limit for the polynomial");

    std::string input, flavor = "hat", dirpath, corpus_action, corpus_name;
    int moves = 20;
    std::uint64_t seed = 1;
    bool latex = false;

    auto* compute = app.add_subcommand("compute", "bigraded homology or module decomposition");
    compute->add_option("input", input)->required();
    compute->add_option("--flavor", flavor, "tilde | hat | minus")->capture_default_str();
    compute->add_flag("--json", opt.json);

    auto* poly = app.add_subcommand("poly", "real Alexander polynomial");
    poly->add_option("input", input)->required();
    poly->add_flag("--json", opt.json);

    auto* inv = app.add_subcommand("invariants", "all invariants of one diagram");
    inv->add_option("input", input)->required();
    inv->add_flag("--json", opt.json);

    auto* verify = app.add_subcommand("verify", "verification battery");
    verify->add_option("input", input)->required();
    verify->add_option("--moves", moves, "random legal move sequences");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_flag("--json", opt.json);

    auto* table = app.add_subcommand("table", "batch table over a directory of .rgd files");
    table->add_option("dir", dirpath)->required();
    table->add_flag("--latex", latex);
    table->add_flag("--json", opt.json);

    auto* corpus = app.add_subcommand("corpus", "embedded diagrams");
    corpus->add_option("action", corpus_action, "list | get")->required();
    corpus->add_option("name", corpus_name);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(input, flavor, opt);
        if (poly->parsed()) return cmd_poly(input, opt);
        if (inv->parsed()) return cmd_invariants(input, opt);
        if (verify->parsed()) return cmd_verify(input, moves, seed, opt);
        if (table->parsed()) return cmd_table(dirpath, latex, opt);
        if (corpus->parsed()) {
            if (corpus_action == "list") {
                for (auto& n : corpus_names()) std::cout << n << "\n";
                return 0;
            }
            if (corpus_action == "get") {
                Diagram d = corpus_get(corpus_name);
                std::cout << serialize_diagram(d);
                return 0;
            }
            throw input_error("corpus action must be list or get");
        }
    } catch (const capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 4;
    } catch (const consistency_error& e) {
        std::cerr << "internal consistency: " << e.what() << "\n";
        return 3;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
