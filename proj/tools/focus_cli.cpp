#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "focus/fuzz.hpp"
#include "focus/io.hpp"
#include "focus/oracle.hpp"
#include "focus/solver.hpp"

using namespace focus;

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitParse = 2;

std::optional<ParsedInstance> load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return std::nullopt;
    }
    try {
        return parse_instance(in);
    } catch (const ParseError& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

void print_bounds(const FocusInstance& inst, std::ostream& os) {
    for (int i = 0; i < inst.n(); ++i)
        os << "x" << i << ": " << inst.xs[i] << "\n";
    os << "yc: " << inst.yc << "\n";
    if (inst.zc) os << "zc: " << *inst.zc << "\n";
}

int cmd_propagate(const std::string& path, bool dump_table, bool fixed_yc_guard) {
    auto parsed = load(path);
    if (!parsed) return kExitParse;
    const FocusInstance& inst = parsed->inst;

    if (dump_table) {
        if (inst.params.variant == Variant::Weighted) {
            if (auto g = build_dp_w(inst.xs, inst.params, inst.zc->hi))
                dump_dp(*g, inst.xs, std::cout);
            else
                std::cout << "(cost budget below the penalizing count; no table)\n";
        } else if (inst.params.variant == Variant::WeightedSpringy) {
            if (auto g = build_dp_wh(inst.xs, inst.params, inst.zc->hi))
                dump_dp(*g, inst.xs, std::cout);
            else
                std::cout << "(cost budget below the penalizing count; no table)\n";
        } else {
            dump_prefix(min_cards(inst.xs, inst.params), inst.xs, std::cout);
        }
    }

    std::optional<FocusInstance> out;
    switch (inst.params.variant) {
        case Variant::Focus:
        case Variant::Springy:
            out = springy_filter(inst, SpringyOptions{fixed_yc_guard});
            break;
        case Variant::Weighted:
            out = bc_filter_w(inst);
            break;
        case Variant::WeightedSpringy:
            out = bc_filter_wh(inst);
            break;
    }
    if (!out) {
        std::cout << "infeasible\n";
        return kExitInfeasible;
    }
    print_bounds(*out, std::cout);
    return kExitFeasible;
}

bool parse_int_list(const std::string& text, std::vector<int>& out) {
    out.clear();
    if (text.empty()) return true;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

bool parse_cover(const std::string& text, Cover& cover) {
    cover.seqs.clear();
    if (text.empty()) return true;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto dash = tok.find('-');
        if (dash == std::string::npos) return false;
        try {
            cover.seqs.emplace_back(std::stoi(tok.substr(0, dash)),
                                    std::stoi(tok.substr(dash + 1)));
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

int cmd_check(const std::string& path, const std::string& assign_text,
              const std::string& cover_text) {
    auto parsed = load(path);
    if (!parsed) return kExitParse;
    std::vector<int> assignment;
    Cover cover;
    if (!parse_int_list(assign_text, assignment)) {
        std::cerr << "error: bad --assign list\n";
        return kExitParse;
    }
    if (!parse_cover(cover_text, cover)) {
        std::cerr << "error: bad --cover list (expected i-j,i-j,...)\n";
        return kExitParse;
    }
    try {
        CoverVerdict v = cover_is_valid(parsed->inst, assignment, cover);
        if (v) {
            std::cout << "valid\n";
            return kExitFeasible;
        }
        std::cout << "invalid (condition " << v.failed_condition << "): " << v.reason << "\n";
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

int cmd_fuzz(std::uint64_t seed, long long trials, int n_max, const std::string& variant,
             int jobs, int oracle_cap) {
    if (n_max < 1 || n_max > oracle_cap) {
        std::cerr << "error: --n-max must lie in [1, oracle cap " << oracle_cap << "]\n";
        return kExitParse;
    }
    fuzz::Report rep = fuzz::run(seed, trials, n_max, variant, jobs);
    std::cout << "trials: " << rep.trials << "\n";
    std::cout << "mismatches: " << rep.mismatches << "\n";
    if (rep.first) {
        std::cout << "first counterexample (replayable instance file):\n";
        std::cout << serialize_instance(rep.first->input);
        std::cout << "# " << rep.first->detail << "\n";
    }
    return rep.mismatches ? kExitInfeasible : kExitFeasible;
}

int cmd_pareto(const std::string& path, const std::string& out_path,
               const std::string& h_list_text, const std::string& svg_path) {
    auto parsed = load(path);
    if (!parsed) return kExitParse;
    FocusInstance inst = parsed->inst;
    if (inst.params.variant != Variant::WeightedSpringy) {
        std::cerr << "error: pareto needs a focuswh instance\n";
        return kExitParse;
    }
    std::vector<int> h_list;
    if (!parse_int_list(h_list_text, h_list)) {
        std::cerr << "error: bad --h-list\n";
        return kExitParse;
    }
    if (h_list.empty()) h_list.push_back(inst.params.h);

    struct Series {
        int h;
        std::vector<std::pair<int, int>> points;
    };
    std::vector<Series> series;
    for (int h : h_list) {
        FocusInstance variant = inst;
        variant.params.h = h;
        try {
            variant.validate();
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: h=" << h << ": " << e.what() << "\n";
            return kExitParse;
        }
        auto frontier = pareto_rentals(variant, parsed->amongs);
        if (frontier.empty()) std::cout << "h=" << h << ": unsatisfiable\n";
        series.push_back({h, std::move(frontier)});
    }

    std::ofstream csv(out_path, std::ios::binary);
    if (!csv) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return kExitParse;
    }
    csv << "yc,zc,h\r\n";
    for (const auto& s : series)
        for (const auto& [y, z] : s.points) csv << y << "," << z << "," << s.h << "\r\n";
    std::cout << "wrote " << out_path << "\n";

    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg) {
            std::cerr << "error: cannot write '" << svg_path << "'\n";
            return kExitParse;
        }
        int max_y = 1, max_z = 1;
        for (const auto& s : series)
            for (const auto& [y, z] : s.points) {
                max_y = std::max(max_y, y);
                max_z = std::max(max_z, z);
            }
        const int w = 420, hgt = 320, pad = 40;
        auto px = [&](int z) { return pad + (w - 2 * pad) * static_cast<double>(z) / max_z; };
        auto py = [&](int y) { return hgt - pad - (hgt - 2 * pad) * static_cast<double>(y) / max_y; };
        const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};
        svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << hgt
            << "'>\n";
        svg << "<line x1='" << pad << "' y1='" << hgt - pad << "' x2='" << w - pad << "' y2='"
            << hgt - pad << "' stroke='black'/>\n";
        svg << "<line x1='" << pad << "' y1='" << pad << "' x2='" << pad << "' y2='"
            << hgt - pad << "' stroke='black'/>\n";
        svg << "<text x='" << w / 2 << "' y='" << hgt - 8 << "' font-size='12'>zc</text>\n";
        svg << "<text x='8' y='" << hgt / 2 << "' font-size='12'>yc</text>\n";
        for (size_t si = 0; si < series.size(); ++si) {
            const char* col = colors[si % 5];
            for (const auto& [y, z] : series[si].points)
                svg << "<circle cx='" << px(z) << "' cy='" << py(y) << "' r='4' fill='" << col
                    << "'><title>h=" << series[si].h << " yc=" << y << " zc=" << z
                    << "</title></circle>\n";
        }
        svg << "</svg>\n";
        std::cout << "wrote " << svg_path << "\n";
    }
    return kExitFeasible;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds-consistency filtering for concentration constraints"};
    app.require_subcommand(1);

    std::string path, assign_text, cover_text = "", out_path = "pareto.csv";
    std::string h_list_text = "", svg_path = "", variant = "mix";
    bool dump_table = false, fixed_yc_guard = false;
    std::uint64_t seed = 1;
    long long trials = 1000;
    int n_max = 8, jobs = 1, oracle_cap = 10;

    auto* prop = app.add_subcommand("propagate", "filter an instance file to its BC closure");
    prop->add_option("file", path)->required();
    prop->add_flag("--dump-table", dump_table, "print the DP/prefix table before filtering");
    prop->add_flag("--fixed-yc-guard", fixed_yc_guard,
                   "only prune X when yc is fixed (springy fast path)");

    auto* chk = app.add_subcommand("check", "validate a witness cover for an assignment");
    chk->add_option("file", path)->required();
    chk->add_option("--assign", assign_text, "comma-separated values, one per variable")
        ->required();
    chk->add_option("--cover", cover_text, "sequences i-j, comma-separated; empty for none");

    auto* fz = app.add_subcommand("fuzz", "differential-test the filters against the oracle");
    fz->add_option("--seed", seed);
    fz->add_option("--trials", trials);
    fz->add_option("--n-max", n_max);
    fz->add_option("--variant", variant, "focus|springy|focusw|focuswh|mix");
    fz->add_option("--jobs", jobs);
    fz->add_option("--oracle-cap", oracle_cap);

    auto* par = app.add_subcommand("pareto", "rentals frontier as CSV (and optional SVG)");
    par->add_option("file", path)->required();
    par->add_option("--out", out_path);
    par->add_option("--h-list", h_list_text, "comma-separated h values, one series each");
    par->add_option("--svg", svg_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitParse : kExitFeasible;
    }

    if (prop->parsed()) return cmd_propagate(path, dump_table, fixed_yc_guard);
    if (chk->parsed()) return cmd_check(path, assign_text, cover_text);
    if (fz->parsed()) return cmd_fuzz(seed, trials, n_max, variant, jobs, oracle_cap);
    if (par->parsed()) return cmd_pareto(path, out_path, h_list_text, svg_path);
    return kExitParse;
}
