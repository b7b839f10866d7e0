#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hanoi/counts.hpp"
#include "hanoi/distributions.hpp"
#include "hanoi/oracle.hpp"
#include "hanoi/planner.hpp"
#include "hanoi/state.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kUnsolved = 1,
    kUsage = 2,
    kIoFailure = 3,
    kIllegalMove = 4,
    kMismatch = 5,
    kBudgetExceeded = 6,
};

struct Args {
    hanoi::DiscCount discs = 0;
    hanoi::PegCount pegs = 0;
    std::optional<hanoi::TargetPegCount> targets;
    std::string format = "text";
    std::uint64_t budget = hanoi::kDefaultStateBudget;
    bool budget_from_flag = false;
    bool witness = false;
    bool grid = false;
    std::string out_path;
    std::string moves_path;
};

// --budget beats HANOI_BUDGET beats the built-in default.
int resolve_budget(Args& args) {
    if (args.budget_from_flag) {
        return kOk;
    }
    if (const char* env = std::getenv("HANOI_BUDGET")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || value == 0) {
            std::cerr << "invalid HANOI_BUDGET value: " << env << '\n';
            return kUsage;
        }
        args.budget = value;
    }
    return kOk;
}

bool format_is(const Args& args, const char* name) {
    return args.format == name;
}

int require_text_or_json(const Args& args) {
    if (!format_is(args, "text") && !format_is(args, "json")) {
        std::cerr << "unsupported format for this command: " << args.format << '\n';
        return kUsage;
    }
    return kOk;
}

int cmd_count(const Args& args) {
    if (int rc = require_text_or_json(args)) {
        return rc;
    }
    hanoi::MoveCount moves = args.targets
                                 ? hanoi::distribute_cost(args.discs, args.pegs, *args.targets)
                                 : hanoi::count_moves(args.discs, args.pegs);
    if (format_is(args, "json")) {
        nlohmann::ordered_json doc;
        doc["discs"] = args.discs;
        doc["pegs"] = args.pegs;
        if (args.targets) {
            doc["targets"] = *args.targets;
        }
        doc["moves"] = moves.str();
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << moves << '\n';
    }
    return kOk;
}

int cmd_journeys(const Args& args) {
    if (int rc = require_text_or_json(args)) {
        return rc;
    }
    const auto runs = hanoi::journey_runs(args.discs, args.pegs);
    if (format_is(args, "json")) {
        nlohmann::ordered_json doc;
        doc["discs"] = args.discs;
        doc["pegs"] = args.pegs;
        auto list = nlohmann::ordered_json::array();
        for (const auto& run : runs) {
            list.push_back({{"lo", run.lo}, {"hi", run.hi}, {"moves", run.value().str()}});
        }
        doc["runs"] = std::move(list);
        std::cout << doc.dump() << '\n';
    } else {
        for (const auto& run : runs) {
            std::cout << "J " << run.lo << ".." << run.hi << ' ' << run.value() << '\n';
        }
    }
    return kOk;
}

int cmd_plan(const Args& args) {
    if (!format_is(args, "text")) {
        std::cerr << "plan emits the move-list format only\n";
        return kUsage;
    }
    hanoi::PlanStream stream =
        args.targets ? hanoi::PlanStream::distribute(args.discs, args.pegs, *args.targets)
                     : hanoi::PlanStream::solve(args.discs, args.pegs);
    std::ofstream file;
    if (!args.out_path.empty()) {
        file.open(args.out_path);
        if (!file) {
            std::cerr << "cannot open " << args.out_path << " for writing\n";
            return kIoFailure;
        }
    }
    std::ostream& out = args.out_path.empty() ? std::cout : file;
    while (auto move = stream.next()) {
        out << move->from << ' ' << move->to << '\n';
        if (!out) {
            std::cerr << "write failure\n";
            return kIoFailure;
        }
    }
    out.flush();
    if (!out) {
        std::cerr << "write failure\n";
        return kIoFailure;
    }
    if (!args.out_path.empty()) {
        std::cout << stream.total() << '\n';
    }
    return kOk;
}

void print_profile(const hanoi::StackProfile& profile) {
    for (std::size_t peg = 0; peg < profile.heights.size(); ++peg) {
        std::cout << "peg " << peg << ": " << profile.heights[peg] << " disc"
                  << (profile.heights[peg] == 1 ? "" : "s")
                  << (profile.towers[peg] && profile.heights[peg] > 0 ? " (tower)" : "") << '\n';
    }
}

int cmd_verify(const Args& args) {
    std::ifstream file;
    if (args.moves_path != "-") {
        file.open(args.moves_path);
        if (!file) {
            std::cerr << "cannot read " << args.moves_path << '\n';
            return kIoFailure;
        }
    }
    std::istream& in = args.moves_path == "-" ? std::cin : file;

    hanoi::Simulator sim(args.discs, args.pegs);
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::optional<hanoi::Move> move;
        try {
            move = hanoi::parse_move_line(line);
        } catch (const std::invalid_argument& err) {
            std::cerr << "line " << line_number << ": " << err.what() << '\n';
            return kUsage;
        }
        if (!move) {
            continue;
        }
        if (move->from >= args.pegs || move->to >= args.pegs) {
            std::cerr << "line " << line_number << ": peg index out of range\n";
            return kUsage;
        }
        try {
            sim.apply(*move);
        } catch (const hanoi::IllegalMoveError& err) {
            std::cerr << "line " << line_number << ": " << err.what() << '\n';
            return kIllegalMove;
        }
    }
    if (in.bad()) {
        std::cerr << "read failure on " << args.moves_path << '\n';
        return kIoFailure;
    }
    if (sim.solved()) {
        std::cout << "ok: " << sim.moves_applied() << " moves, solved\n";
        return kOk;
    }
    std::cout << "legal but unsolved after " << sim.moves_applied() << " moves\n";
    print_profile(sim.profile());
    return kUnsolved;
}

int write_witness(const Args& args, const std::vector<hanoi::Move>& witness) {
    if (args.out_path.empty()) {
        hanoi::write_move_list(std::cout, witness);
        return kOk;
    }
    std::ofstream file(args.out_path);
    if (!file) {
        std::cerr << "cannot open " << args.out_path << " for writing\n";
        return kIoFailure;
    }
    hanoi::write_move_list(file, witness);
    file.flush();
    return file ? kOk : kIoFailure;
}

int cmd_oracle_grid(const Args& args) {
    const auto rows = hanoi::oracle_grid(args.budget);
    bool all_match = true;
    for (const auto& row : rows) {
        all_match = all_match && row.match;
    }
    if (format_is(args, "csv")) {
        std::cout << hanoi::grid_csv(rows);
    } else if (format_is(args, "json")) {
        auto list = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            list.push_back({{"n", row.n},
                            {"k", row.k},
                            {"oracle", row.oracle_moves},
                            {"formula", row.formula_moves.str()},
                            {"match", row.match}});
        }
        std::cout << list.dump() << '\n';
    } else {
        for (const auto& row : rows) {
            std::cout << "n=" << row.n << " k=" << row.k << " oracle=" << row.oracle_moves
                      << " formula=" << row.formula_moves << ' '
                      << (row.match ? "MATCH" : "MISMATCH") << '\n';
        }
    }
    return all_match ? kOk : kMismatch;
}

int cmd_oracle(const Args& args) {
    if (args.grid) {
        return cmd_oracle_grid(args);
    }
    if (int rc = require_text_or_json(args)) {
        return rc;
    }
    hanoi::OracleResult result =
        args.targets
            ? hanoi::oracle_distribute(args.discs, args.pegs, *args.targets, args.witness,
                                       args.budget)
            : hanoi::oracle_solve(args.discs, args.pegs, args.witness, args.budget);
    hanoi::MoveCount formula = args.targets
                                   ? hanoi::distribute_cost(args.discs, args.pegs, *args.targets)
                                   : hanoi::count_moves(args.discs, args.pegs);
    const bool match = hanoi::MoveCount{result.distance} == formula;
    if (format_is(args, "json")) {
        nlohmann::ordered_json doc;
        doc["discs"] = args.discs;
        doc["pegs"] = args.pegs;
        if (args.targets) {
            doc["targets"] = *args.targets;
        }
        doc["oracle"] = result.distance;
        doc["formula"] = formula.str();
        doc["match"] = match;
        if (result.witness) {
            auto list = nlohmann::ordered_json::array();
            for (hanoi::Move move : *result.witness) {
                list.push_back(hanoi::format_move(move));
            }
            doc["witness"] = std::move(list);
        }
        std::cout << doc.dump() << '\n';
    } else {
        std::cout << "oracle=" << result.distance << " formula=" << formula << ' '
                  << (match ? "MATCH" : "MISMATCH") << '\n';
        if (result.witness) {
            if (int rc = write_witness(args, *result.witness)) {
                return rc;
            }
        }
    }
    return match ? kOk : kMismatch;
}

int cmd_distributions(const Args& args) {
    if (int rc = require_text_or_json(args)) {
        return rc;
    }
    const auto report = hanoi::enumerate_main_distributions(args.discs, args.pegs);
    if (format_is(args, "json")) {
        std::cout << hanoi::report_json(report) << '\n';
    } else {
        std::cout << "cost=" << report.optimal_cost << " count=" << report.count << '\n';
        for (const auto& partition : report.partitions) {
            if (partition.heights.empty()) {
                std::cout << "(empty)\n";
                continue;
            }
            for (std::size_t i = 0; i < partition.heights.size(); ++i) {
                std::cout << (i == 0 ? "" : " ") << partition.heights[i];
            }
            std::cout << '\n';
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized k-peg Towers of Hanoi: counting, planning, verification"};
    app.require_subcommand(1);

    Args args;

    auto add_instance_flags = [&](CLI::App* sub, bool targets_allowed) {
        sub->add_option("-n,--discs", args.discs, "number of discs")->required();
        sub->add_option("-k,--pegs", args.pegs, "number of pegs")->required();
        if (targets_allowed) {
            sub->add_option("-m,--targets", args.targets, "distribute onto this many pegs");
        }
    };

    auto* count = app.add_subcommand("count", "minimal move total");
    add_instance_flags(count, true);
    count->add_option("-f,--format", args.format, "text or json");

    auto* journeys = app.add_subcommand("journeys", "journey-number runs");
    add_instance_flags(journeys, false);
    journeys->add_option("-f,--format", args.format, "text or json");

    auto* plan = app.add_subcommand("plan", "emit an explicit optimal move sequence");
    add_instance_flags(plan, true);
    plan->add_option("-o,--out", args.out_path, "write moves here instead of stdout");
    plan->add_option("-f,--format", args.format, "text only");

    auto* verify = app.add_subcommand("verify", "replay and check a move list");
    add_instance_flags(verify, false);
    verify->add_option("moves", args.moves_path, "move-list file, or - for stdin")->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive shortest-path cross-check");
    oracle->add_option("-n,--discs", args.discs, "number of discs");
    oracle->add_option("-k,--pegs", args.pegs, "number of pegs");
    oracle->add_option("-m,--targets", args.targets, "check the distribution variant");
    oracle->add_flag("-w,--witness", args.witness, "also emit one shortest move sequence");
    oracle->add_flag("--grid", args.grid, "sweep every in-budget (n,k), 3 <= k <= 6");
    auto* budget_opt =
        oracle->add_option("-b,--budget", args.budget, "state budget (default 4000000)");
    oracle->add_option("-o,--out", args.out_path, "write the witness here");
    oracle->add_option("-f,--format", args.format, "text, json, or csv (grid only)");

    auto* distributions = app.add_subcommand("distributions", "optimal main distributions");
    add_instance_flags(distributions, false);
    distributions->add_option("-f,--format", args.format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kOk : kUsage;
    }

    args.budget_from_flag = budget_opt->count() > 0;
    if (int rc = resolve_budget(args)) {
        return rc;
    }
    if (oracle->parsed() && !args.grid && (!oracle->count("--discs") || !oracle->count("--pegs"))) {
        std::cerr << "oracle needs --discs and --pegs (or --grid)\n";
        return kUsage;
    }

    try {
        if (count->parsed()) {
            return cmd_count(args);
        }
        if (journeys->parsed()) {
            return cmd_journeys(args);
        }
        if (plan->parsed()) {
            return cmd_plan(args);
        }
        if (verify->parsed()) {
            return cmd_verify(args);
        }
        if (oracle->parsed()) {
            return cmd_oracle(args);
        }
        if (distributions->parsed()) {
            return cmd_distributions(args);
        }
    } catch (const hanoi::BudgetExceededError& err) {
        std::cerr << err.what() << '\n';
        return kBudgetExceeded;
    } catch (const hanoi::InfeasiblePuzzleError& err) {
        std::cerr << err.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& err) {
        std::cerr << err.what() << '\n';
        return kUsage;
    } catch (const std::exception& err) {
        std::cerr << err.what() << '\n';
        return kIoFailure;
    }
    return kUsage;
}
