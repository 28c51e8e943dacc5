#include <plaincharts/scenario.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 budget
// exceeded.
constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExceeded = 3;

struct CommonOptions {
    std::string order;
    std::uint64_t seed = 0;
    int budget = 0;
    std::string format = "text";
    std::string output_path;

    CLI::Option* order_opt = nullptr;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* budget_opt = nullptr;

    void attach(CLI::App* cmd) {
        order_opt = cmd->add_option("--order", order, "Monomial order")
                        ->check(CLI::IsMember({"grevlex", "lex"}));
        seed_opt = cmd->add_option("--seed", seed, "Random seed");
        budget_opt = cmd->add_option("--budget", budget, "Groebner pair budget")
                         ->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", output_path, "Write the report to a file");
    }

    void apply(plaincharts::Scenario& s) const {
        if (order_opt && order_opt->count())
            s.order = order == "lex" ? plaincharts::MonomialOrder::lex()
                                     : plaincharts::MonomialOrder::grevlex();
        if (seed_opt && seed_opt->count()) s.seed = seed;
        if (budget_opt && budget_opt->count()) s.budget = budget;
    }
};

std::string read_scenario_source(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw plaincharts::ValidationError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit(const plaincharts::ScenarioResult& result, const CommonOptions& opts) {
    std::string body =
        opts.format == "json" ? plaincharts::structured_text(result) : result.text;
    if (opts.output_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(opts.output_path);
        if (!out) {
            std::cerr << "error: cannot write to " << opts.output_path << "\n";
            return kExitInputError;
        }
        out << body;
    }
    return result.pass ? kExitPass : kExitVerificationFailure;
}

int run(const std::string& command, const std::string& scenario_path,
        const std::string& example_name, const CommonOptions& opts) {
    plaincharts::Scenario scenario =
        command == "example"
            ? plaincharts::builtin_example(example_name)
            : plaincharts::parse_scenario_text(read_scenario_source(scenario_path));
    if (command != "example" && scenario.command != command)
        throw plaincharts::ValidationError("scenario declares command '" +
                                           scenario.command + "' but the '" + command +
                                           "' subcommand was invoked");
    opts.apply(scenario);
    return emit(plaincharts::run_scenario(scenario), opts);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plain-chart blowup and projection toolkit"};
    app.require_subcommand(1);

    const std::vector<std::string> commands = {"blowup", "rees", "project",
                                               "verify-map", "member"};
    std::map<std::string, CommonOptions> opts;
    std::string scenario_path;
    std::string example_name;

    for (const auto& name : commands) {
        CLI::App* cmd = app.add_subcommand(name, "Run a '" + name + "' scenario");
        cmd->add_option("scenario", scenario_path,
                        "Scenario file (JSON); '-' or omitted reads standard input");
        opts[name].attach(cmd);
    }
    CLI::App* example = app.add_subcommand("example", "Run a built-in example");
    CLI::Option* name_opt =
        example->add_option("name", example_name, "Example name")->required();
    std::string choices;
    for (const auto& n : plaincharts::builtin_example_names())
        choices += (choices.empty() ? "" : ", ") + n;
    name_opt->description("Example name (one of: " + choices + ")");
    opts["example"].attach(example);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitInputError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, scenario_path, example_name, opts.at(command));
    } catch (const plaincharts::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const plaincharts::ParseError& e) {
        std::cerr << "error: " << e.what();
        if (!e.expected.empty())
            std::cerr << " (line " << e.line << ", column " << e.col << "; expected "
                      << e.expected << ")";
        std::cerr << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
