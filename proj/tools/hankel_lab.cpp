// hankel-lab: command line front end for the hankel library and its experiments.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hankel/bilinear.hpp"
#include "hankel/errors.hpp"
#include "hankel/hankel.hpp"
#include "hankel/io.hpp"
#include "hankel/lab/experiments.hpp"
#include "hankel/opnorm.hpp"
#include "hankel/spaces.hpp"

namespace {

using namespace hankel;

void emit(const json& j, const std::string& out)
{
    if (out.empty()) {
        std::cout << j.dump() << '\n';
        return;
    }
    std::ofstream os(out);
    if (!os) throw Error("cannot write " + out);
    os << j.dump() << '\n';
}

TruncationSpec make_spec(double beta, double gamma, const std::string& boundary)
{
    if (boundary != "include" && boundary != "half") throw DomainError("boundary must be include or half");
    return TruncationSpec::linear(beta, gamma, boundary == "half" ? Boundary::half : Boundary::include);
}

int run_experiment_command(const std::string& name, const std::string& config_path, const std::string& out,
                           std::optional<std::uint64_t> seed)
{
    const auto id = lab::parse_experiment_id(name);
    if (!id) throw DomainError("unknown experiment " + name + " (see `experiment list`)");
    lab::ExperimentConfig config = config_path.empty() ? lab::default_config(*id) : lab::load_config(config_path, *id);
    if (seed) config.seed = *seed;
    const auto report = lab::run_experiment(config);
    lab::write_report(report, out);
    for (const auto& c : report.checks)
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " = " << format_double(c.value) << ' ' << c.relation
                  << ' ' << format_double(c.threshold) << '\n';
    std::cout << lab::to_string(config.id) << ": " << report.rows.size() << " rows, "
              << (report.passed() ? "passed" : "FAILED") << " in " << report.wall_clock_seconds << " s -> " << out
              << '\n';
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Truncated Hankel operators and periodic bilinear Hilbert transforms"};
    app.require_subcommand(1);
    std::optional<std::uint64_t> seed;
    app.add_option("--seed", seed, "Override the random seed")->type_name("UINT");

    std::string out;
    std::string symbol_path, input_path;

    auto* gen = app.add_subcommand("gen-symbol", "Random analytic symbol normalised in Lambda_alpha");
    double alpha = 0.5;
    int max_block = 6;
    gen->add_option("--alpha", alpha, "Lipschitz exponent")->capture_default_str();
    gen->add_option("--max-block", max_block, "Top dyadic block")->capture_default_str();
    gen->add_option("-o,--out", out, "Output JSON file (stdout when omitted)");

    auto* apply = app.add_subcommand("apply", "Apply H_b to an analytic polynomial");
    apply->add_option("--symbol", symbol_path, "Symbol JSON")->required();
    apply->add_option("--input", input_path, "Input polynomial JSON")->required();
    apply->add_option("-o,--out", out, "Output JSON file");

    auto* trunc = app.add_subcommand("truncate", "Apply the truncation Pi_{beta,gamma}(H_b)");
    double beta = 1, gamma = 0;
    std::string boundary = "include";
    long section = 0;
    std::string csv_path;
    trunc->add_option("--symbol", symbol_path, "Symbol JSON")->required();
    trunc->add_option("--input", input_path, "Input polynomial JSON");
    trunc->add_option("--beta", beta)->capture_default_str();
    trunc->add_option("--gamma", gamma)->capture_default_str();
    trunc->add_option("--boundary", boundary, "include or half")->capture_default_str();
    trunc->add_option("--section", section, "Also write the N x N truncated section");
    trunc->add_option("--csv", csv_path, "Section CSV path (stdout when omitted)");
    trunc->add_option("-o,--out", out, "Output JSON file");

    auto* bht = app.add_subcommand("bht", "Bilinear Hilbert transform H_{k,l} or H_{k,l,mu} in Fourier form");
    Freq k = 1, l = 1;
    std::optional<Freq> mu;
    bht->add_option("--symbol", symbol_path, "b as polynomial JSON")->required();
    bht->add_option("--input", input_path, "f as analytic polynomial JSON")->required();
    bht->add_option("-k", k)->capture_default_str();
    bht->add_option("-l", l)->capture_default_str();
    bht->add_option("--mu", mu, "Use the mu-modulated form");
    bht->add_option("-o,--out", out, "Output JSON file");

    auto* opn = app.add_subcommand("opnorm", "2->2 norm of a (truncated) finite Hankel section");
    long size = 256;
    std::optional<double> obeta, ogamma;
    double tol = 1e-12;
    opn->add_option("--symbol", symbol_path, "Symbol JSON")->required();
    opn->add_option("--size", size, "Section size N")->capture_default_str();
    opn->add_option("--beta", obeta, "Truncation slope");
    opn->add_option("--gamma", ogamma, "Truncation offset (default 0)");
    opn->add_option("--boundary", boundary, "include or half")->capture_default_str();
    opn->add_option("--tol", tol, "Relative tolerance of the power iteration")->capture_default_str();
    opn->add_option("-o,--out", out, "Output JSON file");

    auto* exp = app.add_subcommand("experiment", "Run or list the experiments");
    exp->require_subcommand(1);
    auto* list = exp->add_subcommand("list", "List experiment ids");
    auto* run = exp->add_subcommand("run", "Run one experiment and write its report");
    std::string exp_name, config_path, out_dir;
    run->add_option("id", exp_name, "Experiment id")->required();
    run->add_option("--config", config_path, "JSON config (defaults when omitted)");
    run->add_option("--out", out_dir, "Report directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            emit(to_json(random_symbol(alpha, max_block, seed.value_or(1))), out);
        } else if (*apply) {
            const HankelSymbol b(load_trig_poly(symbol_path));
            emit(to_json(hankel_apply(b, load_trig_poly(input_path))), out);
        } else if (*trunc) {
            const HankelSymbol b(load_trig_poly(symbol_path));
            const auto spec = make_spec(beta, gamma, boundary);
            if (!input_path.empty()) emit(to_json(truncated_apply(b, spec, load_trig_poly(input_path))), out);
            if (section > 0) {
                const auto A = matrix_section(b, std::optional(spec), section, section);
                if (csv_path.empty()) {
                    write_section_csv(std::cout, A);
                } else {
                    std::ofstream os(csv_path);
                    if (!os) throw Error("cannot write " + csv_path);
                    write_section_csv(os, A);
                }
            }
            if (input_path.empty() && section <= 0) throw DomainError("truncate needs --input or --section");
        } else if (*bht) {
            const TrigPoly b = load_trig_poly(symbol_path), f = load_trig_poly(input_path);
            emit(to_json(mu ? bht_mu_fourier(b, f, BHTParams{k, l, *mu}) : bht_fourier(b, f, k, l)), out);
        } else if (*opn) {
            const HankelSymbol b(load_trig_poly(symbol_path));
            std::optional<TruncationSpec> spec;
            if (obeta || ogamma) spec = make_spec(obeta.value_or(1), ogamma.value_or(0), boundary);
            const auto A = matrix_section(b, spec, size, size);
            emit(to_json(section_norm_2_2(A, {tol, 100000, seed.value_or(0), nullptr})), out);
        } else if (*list) {
            for (auto id : lab::all_experiments()) std::cout << lab::to_string(id) << "  " << lab::describe(id) << '\n';
        } else if (*run) {
            return run_experiment_command(exp_name, config_path, out_dir, seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "hankel-lab: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
