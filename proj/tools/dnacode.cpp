// dnacode: command-line front end over dnacode::app.
//
//   dnacode vt decode --n 6 --a 0 < received.txt
//   dnacode --format csv dup simulate --rule rc --k 2 --x 00 --steps 500 --seed 7 --emit-kmer-freq 2
//   dnacode run spec.json [more.json ...]

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "dnacode/app.hpp"
#include "dnacode/error.hpp"

namespace {

using dnacode::app::ExperimentSpec;
using dnacode::app::json;

const std::set<std::string> kFlags{"arbitration", "list"};

std::string read_all(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// "max_deletions" is offered as --max-deletions and --max_deletions
std::string option_names(const std::string& param)
{
    std::string dashed = param;
    for (auto& c : dashed)
        if (c == '_')
            c = '-';
    std::string names = "--" + dashed;
    if (dashed != param)
        names += ",--" + param;
    return names;
}

struct Command {
    CLI::App* app = nullptr;
    const dnacode::app::OperationInfo* info = nullptr;
    std::map<std::string, std::string> values;
    std::map<std::string, bool> flags;
};

// unknown operations are reported by execute() itself
bool wants_input(const ExperimentSpec& spec)
{
    try {
        return dnacode::app::needs_input(spec);
    } catch (const dnacode::Error&) {
        return false;
    }
}

int usage_error(const std::string& message)
{
    json obj = {{"error", {{"code", "usage"}, {"message", message}}}};
    std::cerr << obj.dump() << '\n';
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coding for DNA storage channels: deletions, sets of strands, duplications"};
    app.fallthrough();
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string format = "text";
    std::string alphabet;
    std::string output;
    app.add_option("--seed", seed, "seed for stochastic operations");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--alphabet", alphabet, "binary, dna or zN; default auto-detect");
    app.add_option("--output,-o", output, "write the report to a file");

    // seq operations hang off top-level names, everything else off its module
    std::map<std::string, CLI::App*> groups;
    auto group = [&](const std::string& name, const std::string& desc) {
        auto& g = groups[name];
        if (!g) {
            g = app.add_subcommand(name, desc);
            g->require_subcommand(1);
        }
        return g;
    };

    std::vector<Command> commands;
    commands.reserve(dnacode::app::operations().size());
    for (const auto& op : dnacode::app::operations()) {
        Command cmd;
        cmd.info = &op;
        if (op.module == "seq" && (op.operation == "ball" || op.operation == "channel"))
            cmd.app = app.add_subcommand(op.operation, op.summary);
        else if (op.module == "seq")
            cmd.app = group("map", "binary/nucleotide mapping and repetition-3")->add_subcommand(op.operation, op.summary);
        else if (op.module == "reproduce")
            cmd.app = app.add_subcommand("reproduce", op.summary);
        else
            cmd.app = group(op.module, op.module + " operations")->add_subcommand(op.operation, op.summary);
        commands.push_back(std::move(cmd));
    }
    // options bind into the stored Command, so register them after the vector is final
    for (auto& cmd : commands) {
        for (const auto& p : cmd.info->parameters) {
            if (p == "input")
                continue;
            if (kFlags.count(p))
                cmd.app->add_flag(option_names(p), cmd.flags[p]);
            else
                cmd.app->add_option(option_names(p), cmd.values[p]);
        }
    }

    std::vector<std::string> spec_files;
    auto* run = app.add_subcommand("run", "execute experiment specs stored as JSON");
    run->add_option("specs", spec_files, "spec files")->required()->check(CLI::ExistingFile);

    auto* ops = app.add_subcommand("operations", "list every dispatchable operation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return usage_error(e.what());
    }

    if (ops->parsed()) {
        for (const auto& op : dnacode::app::operations()) {
            std::cout << op.module << ' ' << op.operation << "  " << op.summary;
            if (!op.parameters.empty()) {
                std::cout << "  [";
                for (std::size_t i = 0; i < op.parameters.size(); ++i)
                    std::cout << (i ? " " : "") << op.parameters[i];
                std::cout << ']';
            }
            std::cout << '\n';
        }
        return 0;
    }

    if (run->parsed()) {
        int status = 0;
        for (const auto& path : spec_files) {
            ExperimentSpec spec;
            try {
                std::ifstream f(path);
                spec = ExperimentSpec::from_json(json::parse(f));
            } catch (const json::exception& e) {
                return usage_error(path + ": " + e.what());
            } catch (const dnacode::Error& e) {
                return usage_error(path + ": " + e.what());
            }
            const std::string input = wants_input(spec) ? read_all(std::cin) : std::string();
            status = std::max(status, dnacode::app::execute(spec, input, std::cout, std::cerr));
        }
        return status;
    }

    for (const auto& cmd : commands) {
        if (!cmd.app->parsed())
            continue;
        ExperimentSpec spec;
        spec.module = cmd.info->module;
        spec.operation = cmd.info->operation;
        spec.seed = seed;
        spec.format = dnacode::app::format_from_string(format);
        spec.alphabet = alphabet;
        spec.output = output;
        for (const auto& [key, value] : cmd.values)
            if (cmd.app->count(option_names(key).substr(0, option_names(key).find(','))) > 0)
                spec.parameters[key] = value;
        for (const auto& [key, value] : cmd.flags)
            if (value)
                spec.parameters[key] = true;
        const std::string input = wants_input(spec) ? read_all(std::cin) : std::string();
        return dnacode::app::execute(spec, input, std::cout, std::cerr);
    }
    return usage_error("no operation selected");
}
