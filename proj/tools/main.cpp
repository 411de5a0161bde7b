#include <iostream>

#include <CLI11.hpp>

#include "revlab/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"revlab: audit base-change operators over finite extensional logics"};
    app.require_subcommand(1);

    revlab::RunConfig config;

    auto add_common = [&](CLI::App* cmd, bool needs_logic) {
        auto* logic = cmd->add_option("--logic", config.logic_source,
                                      "builtin:<name> or a logic JSON file");
        if (needs_logic) logic->required();
        cmd->add_option("--operator", config.operator_source,
                        "builtin:full-meet | builtin:ex | operator JSON file");
        cmd->add_option("--assignment", config.assignment_source, "assignment JSON file");
        cmd->add_option("--base", config.base, "comma-separated sentence names for K")
            ->trigger_on_parse()
            ->each([&](const std::string&) { config.base_given = true; });
        cmd->add_flag("--json", config.json_output, "machine-readable report");
        cmd->add_option("--seed", config.seed, "seed for sampled checks (default 0)");
        cmd->add_option("--max-classes", config.max_classes, "semantic class cap (default 4096)");
        cmd->add_option("--loop-limit", config.loop_limit, "maximum loops to return (default 10)");
        cmd->add_flag("--syntax-sensitive", config.syntax_sensitive,
                      "drop G4 and F3 jointly");
    };

    add_common(app.add_subcommand("info", "classes, closure size, disjunctivity"), true);
    add_common(app.add_subcommand("audit", "postulate audit, plus faithfulness/compatibility with --assignment"), true);
    add_common(app.add_subcommand("extract", "canonical preference relation for a base"), true);
    add_common(app.add_subcommand("lift", "total preorder lift for a base"), true);
    add_common(app.add_subcommand("loops", "critical loop search"), true);
    add_common(app.add_subcommand("represent", "total preorder representability"), true);
    add_common(app.add_subcommand("demo", "lex_paper / lex_core reproduction suite"), false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    config.command = app.get_subcommands().front()->get_name();
    return revlab::run(config, std::cout, std::cerr);
}
