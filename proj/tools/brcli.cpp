// brcli: command-line front end for the descent verification engine.
//
// Exit codes: 0 = all laws pass, 1 = some law failed, 2 = input error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "brt/json_io.hpp"
#include "brt/scenario.hpp"

namespace {

brt::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    brt::json j;
    in >> j;
    return j;
}

// A scenario argument is either a builtin name or a path to a scenario JSON.
brt::Scenario resolve_scenario(const std::string& arg) {
    const auto names = brt::builtin_names();
    if (std::find(names.begin(), names.end(), arg) != names.end())
        return brt::builtin_scenario(arg);
    return brt::scenario_from_json(load_json(arg));
}

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> budget;
    std::optional<std::string> coeff;

    void apply(brt::Scenario& s) const {
        if (seed) s.seed = *seed;
        if (budget) s.budget = *budget;
        if (coeff) {
            if (*coeff == "set") {
                s.kind = brt::CoeffKind::Set;
            } else if (*coeff == "vect:Q") {
                s.kind = brt::CoeffKind::Vect;
                s.field = brt::field_q();
            } else if (coeff->rfind("vect:F", 0) == 0) {
                s.kind = brt::CoeffKind::Vect;
                s.field = brt::field_fp(std::stoll(coeff->substr(6)));
            } else {
                throw std::invalid_argument("bad --coeff '" + *coeff +
                                            "' (expected set, vect:Q or vect:F<p>)");
            }
        }
    }
};

void add_overrides(CLI::App* cmd, Overrides& o) {
    cmd->add_option("--seed", o.seed, "override the scenario seed");
    cmd->add_option("--budget", o.budget, "override the enumeration budget");
    cmd->add_option("--coeff", o.coeff, "override coefficients: set | vect:Q | vect:F<p>");
}

int emit_verdict(const brt::Verdict& v, const std::string& format) {
    if (format == "json")
        std::cout << brt::verdict_to_json(v).dump(2) << "\n";
    else
        std::cout << brt::render_text_report(v);
    return v.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite descent-theory verification engine"};
    app.require_subcommand(1);

    std::string shape_path, run_arg, report_arg;
    std::string format = "text";
    Overrides run_ov, report_ov;

    CLI::App* validate = app.add_subcommand("validate", "validate a DescentShape JSON file");
    validate->add_option("shape", shape_path, "path to shape JSON")->required();

    CLI::App* run = app.add_subcommand("run", "run a scenario (builtin name or scenario JSON)");
    run->add_option("scenario", run_arg, "builtin name or path to scenario JSON")->required();
    add_overrides(run, run_ov);

    CLI::App* list = app.add_subcommand("list-builtins", "list builtin scenario names");

    CLI::App* report = app.add_subcommand("report", "run a scenario and emit its report");
    report->add_option("scenario", report_arg, "builtin name or path to scenario JSON")->required();
    report->add_option("--format", format, "output format: json | text")
        ->check(CLI::IsMember({"json", "text"}));
    add_overrides(report, report_ov);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            brt::DescentShape s = brt::shape_from_json(load_json(shape_path));
            std::vector<std::string> errs = brt::validate_shape(s);
            if (!errs.empty()) {
                for (const std::string& e : errs) std::cerr << "invalid shape: " << e << "\n";
                return 2;
            }
            std::cout << "shape valid\n";
            return 0;
        }
        if (*list) {
            for (const std::string& n : brt::builtin_names()) std::cout << n << "\n";
            return 0;
        }
        if (*run) {
            brt::Scenario s = resolve_scenario(run_arg);
            run_ov.apply(s);
            return emit_verdict(brt::run_scenario(s), "text");
        }
        if (*report) {
            brt::Scenario s = resolve_scenario(report_arg);
            report_ov.apply(s);
            return emit_verdict(brt::run_scenario(s), format);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
