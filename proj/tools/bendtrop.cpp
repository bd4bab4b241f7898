#include "bendtrop/jobs.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"tropicalization toolkit: bend congruences, valuations, moduli"};
    app.require_subcommand(1);

    std::string job_path, out_path;
    long budget_degree = -1, budget_chain = -1, budget_frontier = -1, budget_context = -1;

    const char* commands[] = {"trop",  "member", "univ",   "valcheck",
                              "pi",    "limit",  "derive", "axioms"};
    const char* descriptions[] = {
        "bend-relation presentation of a truncated tropicalized ideal",
        "twice-max membership of a point in a tropicalization",
        "universal tropicalization of a finite ring or rational sample",
        "check a pointwise table on a finite ring for the valuation conditions",
        "project a valuation point into a tropicalization and test membership",
        "compatible point families over a diagram of embeddings",
        "bounded proof search for a congruence relation",
        "valuation axiom checker over sampled pairs"};

    for (int i = 0; i < 8; ++i) {
        auto* sub = app.add_subcommand(commands[i], descriptions[i]);
        sub->add_option("--job", job_path, "job description JSON file")->required();
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_option("--budget-degree", budget_degree, "max monomial multiplier degree");
        sub->add_option("--budget-chain", budget_chain, "max derivation length");
        sub->add_option("--budget-frontier", budget_frontier, "max search expansions");
        sub->add_option("--budget-context", budget_context, "max enumerated tight-set size");
    }

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(job_path);
    if (!in) {
        std::cerr << "cannot open job file '" << job_path << "'\n";
        return bendtrop::kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    bendtrop::SearchBudget budget;
    if (budget_degree >= 0) budget.max_multiplier_degree = budget_degree;
    if (budget_chain >= 0) budget.max_chain = static_cast<int>(budget_chain);
    if (budget_frontier >= 0) budget.max_frontier = budget_frontier;
    if (budget_context >= 0) budget.max_context = static_cast<int>(budget_context);

    int threads = 1;
    if (const char* t = std::getenv("BENDTROP_THREADS")) {
        threads = std::atoi(t);
        if (threads < 1) threads = 1;
    }

    const auto outcome =
        bendtrop::run_job(app.get_subcommands().front()->get_name(), buf.str(), budget, threads);

    if (out_path.empty()) {
        std::cout << outcome.report;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return bendtrop::kExitUsage;
        }
        out << outcome.report;
    }
    return outcome.exit_code;
}
