#include <CLI11.hpp>
#include <iostream>

#include "tfan/commands.hpp"

namespace {

// "--weights a,b;c,d;..." one vector per maximal cone
std::vector<tfan::ZVec> parse_weights(const std::string& s) {
    std::vector<tfan::ZVec> out;
    std::stringstream groups(s);
    std::string group;
    while (std::getline(groups, group, ';')) {
        tfan::ZVec w;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) w.push_back(tfan::Int(item));
        out.push_back(w);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant divisor computations on divisorial fans over a curve"};
    app.require_subcommand(1);

    std::string input, anchor, weights_arg, format = "text";
    bool q_factorial = false;

    for (const auto& name : tfan::kCommands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", input, "fixture file (JSON)")->required();
        sub->add_option("--anchor", anchor, "anchor point for the canonical divisor");
        sub->add_option("--weights", weights_arg, "toric weights, e.g. \"0,0;1,0;3,1;0,1\"");
        sub->add_flag("--assert-q-factorial", q_factorial, "assert the variety is Q-factorial");
        sub->add_option("--format", format, "text|machine")
            ->check(CLI::IsMember({"text", "machine"}));
    }

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().front()->get_name();

    try {
        tfan::Fixture fx = tfan::parse_fixture_file(input);
        tfan::CommandOptions opts;
        opts.anchor = anchor;
        opts.assert_q_factorial = q_factorial;
        opts.machine = (format == "machine");
        if (!weights_arg.empty()) opts.weights = parse_weights(weights_arg);
        tfan::CommandResult res = tfan::run_command(cmd, fx, opts);
        std::cout << (opts.machine ? res.machine : res.text);
        return res.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
