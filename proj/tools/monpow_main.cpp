// monpow: associated primes of powers of monomial ideals, exactly.
//
// Subcommands: ass, sequence, bounds, system, verify, delta. Exit codes:
// 0 success, 1 verification mismatch, 2 parse or domain error.

#include "monpow/assoc.hpp"
#include "monpow/bounds.hpp"
#include "monpow/ideal.hpp"
#include "monpow/linsys.hpp"
#include "monpow/parse.hpp"
#include "monpow/powers.hpp"
#include "monpow/report.hpp"
#include "monpow/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct IdealArgs {
    std::string text;
    unsigned vars_override = 0;

    monpow::ParsedIdeal parse() const {
        std::optional<std::size_t> override;
        if (vars_override > 0) {
            override = vars_override;
        }
        return monpow::parse_ideal(text, override);
    }
};

void add_ideal_options(CLI::App* cmd, IdealArgs& args) {
    cmd->add_option("ideal", args.text, "generators, e.g. \"x1^2*x2, x2*x3\"")->required();
    cmd->add_option("--vars", args.vars_override, "ambient variable count override");
}

void emit(const auto& report, bool as_json) {
    if (as_json) {
        std::cout << monpow::to_json(report).dump(2) << "\n";
    } else {
        std::cout << monpow::to_text(report);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis of associated primes of powers of monomial ideals"};
    app.require_subcommand(1);

    IdealArgs ass_args;
    unsigned ass_power = 1;
    bool ass_json = false;
    CLI::App* cmd_ass = app.add_subcommand("ass", "associated primes of an ideal power");
    add_ideal_options(cmd_ass, ass_args);
    cmd_ass->add_option("--power", ass_power, "power of the ideal (default 1)");
    cmd_ass->add_flag("--json", ass_json, "machine-readable output");

    IdealArgs seq_args;
    unsigned seq_max_n = 12;
    bool seq_json = false;
    CLI::App* cmd_seq = app.add_subcommand("sequence", "Ass(R/I^n) for n = 1..N plus indices");
    add_ideal_options(cmd_seq, seq_args);
    cmd_seq->add_option("--max-n", seq_max_n, "largest power to inspect (default 12)");
    cmd_seq->add_flag("--json", seq_json, "machine-readable output");

    IdealArgs bounds_args;
    bool bounds_json = false;
    CLI::App* cmd_bounds = app.add_subcommand("bounds", "copersistence bounds sigma1/sigma2");
    add_ideal_options(cmd_bounds, bounds_args);
    cmd_bounds->add_flag("--json", bounds_json, "machine-readable output");

    IdealArgs system_args;
    std::string system_kind = "power";
    unsigned sat_scale = 1;
    std::string dump_path;
    CLI::App* cmd_system = app.add_subcommand("system", "emit an inequality system");
    add_ideal_options(cmd_system, system_args);
    cmd_system->add_option("--power-kind", system_kind, "power, colon or sat")
        ->check(CLI::IsMember({"power", "colon", "sat"}));
    cmd_system->add_option("--sat-n", sat_scale, "right-hand-side scale for kind sat");
    cmd_system->add_option("--dump", dump_path, "write the dump to this file");

    IdealArgs verify_args;
    unsigned verify_max_n = 0;
    bool verify_json = false;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run the oracle suites against this ideal");
    add_ideal_options(cmd_verify, verify_args);
    cmd_verify->add_option("--max-n", verify_max_n, "largest power to check")->required();
    cmd_verify->add_flag("--json", verify_json, "machine-readable output");

    std::string delta_file;
    unsigned order_cap = 6;
    bool delta_json = false;
    CLI::App* cmd_delta = app.add_subcommand("delta", "maximal subdeterminant of a dump");
    cmd_delta->add_option("file", delta_file, "system dump file")->required();
    cmd_delta->add_option("--order-cap", order_cap, "largest minor order to enumerate");
    cmd_delta->add_flag("--json", delta_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_ass) {
            monpow::ParsedIdeal parsed = ass_args.parse();
            emit(monpow::make_ass_report(parsed.ideal, parsed.var_names, ass_power), ass_json);
        } else if (*cmd_seq) {
            monpow::ParsedIdeal parsed = seq_args.parse();
            emit(monpow::make_sequence_report(parsed.ideal, parsed.var_names, seq_max_n),
                 seq_json);
        } else if (*cmd_bounds) {
            monpow::ParsedIdeal parsed = bounds_args.parse();
            monpow::BoundsReportOut out{parsed.var_names, monpow::bound_report(parsed.ideal)};
            emit(out, bounds_json);
        } else if (*cmd_system) {
            monpow::ParsedIdeal parsed = system_args.parse();
            monpow::IneqSystem sys;
            if (system_kind == "power") {
                sys = monpow::build_power_system(parsed.ideal);
            } else if (system_kind == "colon") {
                sys = monpow::build_colon_system(parsed.ideal);
            } else {
                sys = monpow::build_sat_system(parsed.ideal, monpow::Integer(sat_scale));
            }
            if (dump_path.empty()) {
                monpow::dump_system(sys, std::cout);
            } else {
                std::ofstream out(dump_path);
                if (!out) {
                    throw monpow::DomainError("cannot open dump file '" + dump_path + "'");
                }
                monpow::dump_system(sys, out);
            }
        } else if (*cmd_verify) {
            monpow::ParsedIdeal parsed = verify_args.parse();
            monpow::VerifyReport report;
            report.var_names = parsed.var_names;
            report.characterization = monpow::characterization_suite(parsed.ideal, verify_max_n);
            report.system_oracle = monpow::system_oracle_suite(parsed.ideal, verify_max_n);
            emit(report, verify_json);
            if (!report.characterization.ok() || !report.system_oracle.ok()) {
                return 1;
            }
        } else if (*cmd_delta) {
            std::ifstream in(delta_file);
            if (!in) {
                throw monpow::DomainError("cannot open '" + delta_file + "'");
            }
            monpow::IneqSystem sys = monpow::load_system(in);
            emit(monpow::make_delta_report(sys, order_cap), delta_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
