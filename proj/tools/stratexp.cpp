// Command-line front end: exact expectations and Ito decompositions of
// iterated Stratonovich integrals, plus a Monte Carlo cross-check.
//
// Exit codes: 0 success, 2 usage or parse error, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "stratexp/conversion.hpp"
#include "stratexp/errors.hpp"
#include "stratexp/expectation.hpp"
#include "stratexp/montecarlo.hpp"
#include "stratexp/rational.hpp"
#include "stratexp/word.hpp"

namespace {

using nlohmann::json;
using namespace stratexp;

json word_to_json(const Word& w) {
    json arr = json::array();
    for (Word::Letter m : w) arr.push_back(m);
    return arr;
}

std::string bracketed(const Word& w) { return "[" + render_word(w) + "]"; }

// p rendered as a power of one half: "1", "1/2", "1/2^3".
std::string render_p(std::size_t halvings) {
    if (halvings == 0) return "1";
    if (halvings == 1) return "1/2";
    return "1/2^" + std::to_string(halvings);
}

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

void cmd_expect(const std::string& word_text, const std::string& t_text,
                bool as_json) {
    Word w = parse_word(word_text);
    ExpectResult res = expect_strat(w);
    bool has_t = !t_text.empty();
    Rational value;
    if (has_t) {
        Rational t = parse_rational(t_text);
        value = expect_strat_at(w, t);
    }
    if (as_json) {
        json out = {{"word", word_to_json(w)},
                    {"coeff", render_rational(res.monomial.coeff())},
                    {"power", res.monomial.power()}};
        if (has_t) out["value"] = render_rational(value);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << render_monomial(res.monomial) << "\n";
        if (has_t) std::cout << render_rational(value) << "\n";
    }
}

void cmd_decompose(const std::string& word_text, bool as_json) {
    Word w = parse_word(word_text);
    ItoCombination combo = strat_to_ito(w);
    if (as_json) {
        json terms = json::array();
        for (const auto& [beta, coeff] : combo.terms())
            terms.push_back(
                {{"word", word_to_json(beta)}, {"coeff", render_rational(coeff)}});
        json out = {{"word", word_to_json(w)}, {"terms", terms}};
        std::cout << out.dump() << "\n";
    } else {
        // Longest words first, lexicographic within a length, so the leading
        // term is I over the input word itself.
        std::vector<std::pair<Word, Rational>> terms(combo.terms().begin(),
                                                     combo.terms().end());
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size())
                return a.first.size() > b.first.size();
            return a.first < b.first;
        });
        std::string line;
        for (const auto& [beta, coeff] : terms) {
            if (!line.empty()) line += " + ";
            if (coeff != 1) line += render_rational(coeff) + " ";
            line += "I" + bracketed(beta);
        }
        std::cout << line << "\n";
    }
}

void cmd_table(std::size_t max_len, Word::Letter drivers, bool as_json) {
    auto rows = expectation_table(max_len, drivers);
    if (as_json) {
        json out_rows = json::array();
        for (const auto& [w, res] : rows)
            out_rows.push_back({{"word", word_to_json(w)},
                                {"p_num", 1},
                                {"p_den", std::uint64_t{1} << res.halvings},
                                {"q", res.q},
                                {"coeff", render_rational(res.monomial.coeff())},
                                {"power", res.monomial.power()}});
        std::cout << json{{"rows", out_rows}}.dump() << "\n";
    } else {
        for (const auto& [w, res] : rows)
            std::cout << bracketed(w) << "  p=" << render_p(res.halvings)
                      << "  q=" << res.q << "  "
                      << render_monomial(res.monomial) << "\n";
    }
}

void cmd_simulate(const std::string& word_text, double t, std::uint32_t paths,
                  std::uint32_t steps, std::uint64_t seed, unsigned threads,
                  std::uint64_t budget, bool as_json) {
    SimConfig cfg;
    cfg.word = parse_word(word_text);
    cfg.horizon = t;
    cfg.paths = paths;
    cfg.steps = steps;
    cfg.seed = seed;
    SimResult res = estimate_expectation(cfg, threads, budget);

    double exact_value = res.exact->convert_to<double>();
    bool has_z = res.std_error != 0.0;
    double z = has_z ? (res.mean - exact_value) / res.std_error : 0.0;

    if (as_json) {
        // threads is intentionally not echoed: output bytes must not depend
        // on the degree of parallelism.
        json out = {{"config",
                     {{"word", word_to_json(cfg.word)},
                      {"t", cfg.horizon},
                      {"paths", cfg.paths},
                      {"steps", cfg.steps},
                      {"seed", cfg.seed}}},
                    {"mean", res.mean},
                    {"std_error", res.std_error},
                    {"exact", render_rational(*res.exact)}};
        if (has_z) out["z"] = z;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "mean       " << fmt6(res.mean) << "\n";
        std::cout << "std_error  " << fmt6(res.std_error) << "\n";
        std::cout << "exact      " << render_rational(*res.exact) << "\n";
        if (has_z) std::cout << "z          " << fmt6(z) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact expectations of iterated Stratonovich integrals driven by "
        "time and Wiener processes, their Ito decompositions, and a Monte "
        "Carlo cross-check."};
    app.require_subcommand(1);

    std::string format = "text";

    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    // expect
    std::string word_text;
    std::string t_text;
    CLI::App* expect = app.add_subcommand(
        "expect", "Closed-form expectation of J_word as a monomial in t");
    expect->add_option("--word", word_text,
                       "Comma-separated driver indices; 0 is time, empty for "
                       "the empty word")
        ->required();
    expect->add_option("--t", t_text, "Evaluate at this time (rational, e.g. 3/2)");
    add_format(expect);

    // decompose
    std::string dword_text;
    CLI::App* decompose = app.add_subcommand(
        "decompose", "Write J_word as an exact combination of Ito integrals");
    decompose->add_option("--word", dword_text, "Comma-separated driver indices")
        ->required();
    add_format(decompose);

    // table
    std::size_t max_len = 0;
    Word::Letter drivers = 1;
    CLI::App* table = app.add_subcommand(
        "table", "All words up to a length with nonzero expectation");
    table->add_option("--max-len", max_len, "Maximum word length")->required();
    table->add_option("--drivers", drivers, "Number of Wiener drivers")
        ->capture_default_str();
    add_format(table);

    // simulate
    std::string sword_text;
    double t = 1.0;
    std::uint32_t paths = 10000;
    std::uint32_t steps = 64;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::uint64_t budget = stratexp::kDefaultSimBudget;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Monte Carlo estimate of E J_word against the exact value");
    simulate->add_option("--word", sword_text, "Comma-separated driver indices")
        ->required();
    simulate->add_option("--t", t, "Time horizon")->capture_default_str();
    simulate->add_option("--paths", paths, "Number of paths")->capture_default_str();
    simulate->add_option("--steps", steps, "Grid steps")->capture_default_str();
    simulate->add_option("--seed", seed, "Seed")->capture_default_str();
    simulate->add_option("--threads", threads,
                         "Worker threads (0 = machine parallelism; does not "
                         "affect results)")
        ->capture_default_str();
    simulate->add_option("--budget", budget, "Cap on paths*steps*|word|")
        ->capture_default_str();
    add_format(simulate);

    try {
        app.parse(argc, argv);
        bool as_json = format == "json";
        if (expect->parsed()) cmd_expect(word_text, t_text, as_json);
        if (decompose->parsed()) cmd_decompose(dword_text, as_json);
        if (table->parsed()) cmd_table(max_len, drivers, as_json);
        if (simulate->parsed())
            cmd_simulate(sword_text, t, paths, steps, seed, threads, budget,
                         as_json);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const stratexp::cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const stratexp::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
