// grbij: map permutations to ornaments and back, count (A,S)-permutations,
// and run the exhaustive consistency suites.
//
// Exit codes: 0 success, 1 bad input or limit exceeded, 2 internal
// consistency failure.

#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gr/gr.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

std::vector<int> parse_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) {
            token.clear();
            return false;
        }
        auto last = token.find_last_not_of(" \t");
        std::string t = token.substr(first, last - first + 1);
        token.clear();
        try {
            std::size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            out.push_back(v);
        } catch (const std::exception&) {
            throw gr::InvalidInput(std::string(what) + ": not an integer: '" + t + "'");
        }
        return true;
    };
    for (char c : text) {
        if (c == ',') {
            if (!flush()) throw gr::InvalidInput(std::string(what) + ": empty list entry");
        } else {
            token += c;
        }
    }
    if (!flush() && !out.empty()) throw gr::InvalidInput(std::string(what) + ": trailing comma");
    return out;
}

std::string read_input(const std::string& positional) {
    if (!positional.empty()) return positional;
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

struct BlockFlags {
    std::string blocks;
    std::string descending;

    gr::BlockSpec spec() const {
        if (blocks.empty()) throw gr::InvalidInput("--blocks is required");
        return {parse_list(blocks, "--blocks"), parse_list(descending, "--descending")};
    }
};

void add_block_flags(CLI::App* cmd, BlockFlags& flags) {
    cmd->add_option("--blocks", flags.blocks, "block lengths, comma separated (e.g. 8,10)")->required();
    cmd->add_option("--descending", flags.descending, "1-based descending block indices, comma separated; empty for none");
}

int run_map(const BlockFlags& flags, const std::string& input, bool sorted) {
    const auto b = flags.spec();
    const auto p = gr::parse_permutation(read_input(input));
    if (p.size() != b.n())
        throw gr::InvalidInput("permutation has size " + std::to_string(p.size()) + " but blocks sum to " +
                               std::to_string(b.n()));
    if (!gr::is_as_permutation(p, b))
        std::cerr << "warning: " << gr::format_permutation(p) << " is not an (A,S)-permutation for " << b.to_string()
                  << "\n";
    if (sorted) {
        std::cout << gr::format_ornament(gr::forward(p, b)) << "\n";
    } else {
        for (const auto& colors : gr::forward_colorings(p, b)) std::cout << "(" << gr::detail::join<int>(colors, " ") << ")";
        std::cout << "\n";
    }
    return 0;
}

int run_unmap(const BlockFlags& flags, const std::string& input) {
    const auto b = flags.spec();
    const auto o = gr::parse_ornament(read_input(input));
    std::cout << gr::format_permutation(gr::inverse(o, b)) << "\n";
    return 0;
}

int run_count(const BlockFlags& flags, const std::string& what, const std::string& cycle_text) {
    const auto b = flags.spec();
    std::optional<gr::CycleType> type;
    if (!cycle_text.empty()) type = gr::CycleType(parse_list(cycle_text, "--cycle-type"));
    std::string mode = what.empty() ? (type ? "cycle-type" : "all") : what;

    int status = 0;
    auto derangements = [&] {
        auto pie = gr::count_derangements_pie(b);
        auto gf = gr::count_derangements_gf(b);
        std::cout << "derangements_pie\t" << pie << "\n" << "derangements_gf\t" << gf << "\n";
        if (pie != gf) {
            std::cerr << "internal error: inclusion-exclusion and generating function disagree\n";
            status = kExitInternal;
        }
    };
    auto involutions = [&] { std::cout << "involutions\t" << gr::count_involutions(b) << "\n"; };
    auto by_type = [&](const gr::CycleType& t) {
        std::cout << "cycle_type=" << t.to_string() << "\t" << gr::count_by_cycle_type(b, t) << "\n";
    };

    if (mode == "derangements") {
        derangements();
    } else if (mode == "involutions") {
        involutions();
    } else if (mode == "cycle-type") {
        if (!type) throw gr::InvalidInput("count cycle-type needs --cycle-type");
        by_type(*type);
    } else if (mode == "all") {
        std::cout << "permutations\t" << gr::multinomial(b.lengths()) << "\n";
        derangements();
        involutions();
        for (const auto& t : gr::partitions_of(b.n())) by_type(t);
    } else {
        throw gr::InvalidInput("unknown count target '" + mode + "' (derangements, involutions, cycle-type, all)");
    }
    return status;
}

int run_verify(int max_n, int max_k) {
    if (max_n > static_cast<int>(gr::kDefaultOrnamentLimit))
        throw gr::LimitExceeded("verify: --max-n above " + std::to_string(gr::kDefaultOrnamentLimit));
    if (max_n < 1 || max_k < 1) throw gr::InvalidInput("verify: --max-n and --max-k must be positive");
    gr::VerifyConfig cfg;
    cfg.max_n = max_n;
    cfg.max_k = max_k;
    bool all_ok = true;
    for (const auto& report : gr::run_all_suites(cfg)) {
        std::cout << report.name << "\t" << report.passed << "/" << report.cases << "\t"
                  << (report.ok() ? "PASS" : "FAIL") << "\n";
        for (const auto& f : report.failures) std::cout << "  failure: " << f << "\n";
        all_ok = all_ok && report.ok();
    }
    return all_ok ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Gessel-Reutenauer bijection and (A,S)-permutation counts"};
    app.require_subcommand(1);

    BlockFlags map_flags, unmap_flags, count_flags;
    std::string map_input, unmap_input, count_what, cycle_text;
    bool sorted = false;
    int max_n = 6, max_k = 3;

    auto* map = app.add_subcommand("map", "print the ornament of a permutation (cycles in order of their minimum)");
    add_block_flags(map, map_flags);
    map->add_option("permutation", map_input, "one-line notation; read from stdin when omitted");
    map->add_flag("--sorted", sorted, "list necklaces in canonical ornament order instead");

    auto* unmap = app.add_subcommand("unmap", "print the (A,S)-permutation of an ornament");
    add_block_flags(unmap, unmap_flags);
    unmap->add_option("ornament", unmap_input, "e.g. (1 2 2)(1 2); read from stdin when omitted");

    auto* count = app.add_subcommand("count", "count (A,S)-permutations");
    add_block_flags(count, count_flags);
    count->add_option("what", count_what, "derangements | involutions | cycle-type | all");
    count->add_option("--cycle-type", cycle_text, "cycle type as a comma list, e.g. 4,1");

    auto* verify = app.add_subcommand("verify", "run the exhaustive consistency suites");
    verify->add_option("--max-n", max_n, "largest n")->capture_default_str();
    verify->add_option("--max-k", max_k, "largest number of blocks")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*map) return run_map(map_flags, map_input, sorted);
        if (*unmap) return run_unmap(unmap_flags, unmap_input);
        if (*count) return run_count(count_flags, count_what, cycle_text);
        if (*verify) return run_verify(max_n, max_k);
    } catch (const gr::ConditionViolation& e) {
        std::cerr << "error (condition " << e.condition() << "): " << e.what() << "\n";
        return kExitInput;
    } catch (const gr::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const gr::LimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const gr::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
