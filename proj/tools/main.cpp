#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spikeauct/capacity.hpp"
#include "spikeauct/core.hpp"
#include "spikeauct/format.hpp"
#include "spikeauct/optimizer.hpp"
#include "spikeauct/scenario.hpp"
#include "spikeauct/sim.hpp"
#include "spikeauct/ssa.hpp"
#include "spikeauct/vcg.hpp"

namespace sa = spikeauct;
using ordered_json = nlohmann::ordered_json;

namespace {

enum class Format { table, json, csv };

Format parse_format(const std::string& text) {
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    return Format::table;
}

void emit_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

void emit_csv_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << cells[i];
    }
    std::cout << "\n";
}

std::string fmt(double v) { return sa::format_full(v); }

std::string fmt_short(double v) {
    std::ostringstream out;
    out << std::setprecision(6) << v;
    return out.str();
}

std::vector<std::string> ranked_ids(const std::vector<sa::BidderProfile>& bidders,
                                    const std::vector<std::size_t>& ranking) {
    std::vector<std::string> ids;
    ids.reserve(ranking.size());
    for (std::size_t idx : ranking) ids.push_back(bidders[idx].id);
    return ids;
}

sa::CoefficientVector objective_coeffs(const sa::Scenario& sc, sa::Objective objective,
                                       std::size_t m) {
    switch (objective) {
        case sa::Objective::revenue:
            return sa::revenue_coefficients(sc.bidders, m);
        case sa::Objective::efficiency:
            return sa::efficiency_coefficients(sc.bidders, m);
        case sa::Objective::ssa_revenue: {
            if (!sc.ssa) {
                throw sa::ValidationError(
                    "scenario: 'ssa' block required for the ssa-revenue objective");
            }
            if (m != sc.ssa->spike_count) {
                throw sa::DimensionError(
                    "scenario: epsilons length must equal ssa.spike_count for the "
                    "ssa-revenue objective");
            }
            return sa::ssa_objective_coefficients(sc.bidders, *sc.ssa).coeffs;
        }
    }
    throw sa::ValidationError("unknown objective");
}

// ---------------------------------------------------------------- vcg

struct VcgOptions {
    std::string scenario_path;
    std::string payment = "betting";
    std::string format = "table";
};

int cmd_vcg(const VcgOptions& opt) {
    const auto sc = sa::load_scenario(opt.scenario_path);
    if (!sc.spikes) {
        throw sa::ValidationError("scenario: 'spikes' required by the vcg command");
    }
    const auto& spikes = *sc.spikes;
    const auto out = sa::run_vcg(sc.bidders, spikes);
    const bool betting = opt.payment == "betting";
    const auto charges =
        betting ? out.expected_payments : sa::per_acquisition_charges(out, spikes);
    const auto ids = ranked_ids(sc.bidders, out.ranking);
    const std::string scheme = betting ? "betting" : "pay-per-acquisition";
    const std::size_t m = spikes.size();

    switch (parse_format(opt.format)) {
        case Format::json: {
            ordered_json doc;
            doc["command"] = "vcg";
            doc["payment_scheme"] = scheme;
            doc["spikes"] = spikes.probs();
            doc["ranking"] = ids;
            doc["ranked_values"] = out.ranked_values;
            doc["expected_payments"] = out.expected_payments;
            doc["charges"] = charges;
            doc["revenue"] = out.revenue;
            doc["efficiency"] = out.efficiency;
            emit_json(doc);
            break;
        }
        case Format::csv: {
            emit_csv_row({"rank", "bidder", "value", "spike", "expected_payment", "charge",
                          "revenue", "efficiency"});
            for (std::size_t j = 0; j < m; ++j) {
                const bool occupied = j < ids.size();
                emit_csv_row({std::to_string(j + 1), occupied ? ids[j] : "",
                              fmt(occupied ? out.ranked_values[j] : 0.0), fmt(spikes[j]),
                              fmt(out.expected_payments[j]), fmt(charges[j]), fmt(out.revenue),
                              fmt(out.efficiency)});
            }
            break;
        }
        case Format::table: {
            std::cout << "VCG spike auction (" << scheme << ")\n";
            std::cout << std::left << std::setw(6) << "rank" << std::setw(10) << "bidder"
                      << std::setw(12) << "value" << std::setw(12) << "spike" << std::setw(16)
                      << "exp. payment" << std::setw(12) << "charge" << "\n";
            for (std::size_t j = 0; j < m; ++j) {
                const bool occupied = j < ids.size();
                std::cout << std::left << std::setw(6) << j + 1 << std::setw(10)
                          << (occupied ? ids[j] : "-") << std::setw(12)
                          << fmt_short(occupied ? out.ranked_values[j] : 0.0) << std::setw(12)
                          << fmt_short(spikes[j]) << std::setw(16)
                          << fmt_short(out.expected_payments[j]) << std::setw(12)
                          << fmt_short(charges[j]) << "\n";
            }
            std::cout << "revenue    " << fmt_short(out.revenue) << "\n";
            std::cout << "efficiency " << fmt_short(out.efficiency) << "\n";
            break;
        }
    }
    return 0;
}

// ----------------------------------------------------------- optimize

struct OptimizeOptions {
    std::string scenario_path;
    std::optional<std::string> objective;
    std::string solver = "simplex";
    std::string format = "table";
    bool poc = false;
};

ordered_json poc_to_json(const sa::CapacityReport& report, std::optional<double> nu_uniform) {
    ordered_json poc;
    if (report.a_index) {
        poc["a_index"] = *report.a_index;
    } else {
        poc["a_index"] = nullptr;
    }
    poc["nu"] = report.nu;
    poc["nu_upper_bound"] = report.nu_upper_bound;
    if (nu_uniform) poc["nu_uniform"] = *nu_uniform;
    return poc;
}

int cmd_optimize(const OptimizeOptions& opt) {
    const auto sc = sa::load_scenario(opt.scenario_path);
    const auto objective =
        opt.objective ? sa::objective_from_string(*opt.objective) : sc.objective;
    if (!sc.epsilons) {
        throw sa::ValidationError("scenario: 'epsilons' required by the optimize command");
    }
    const auto& eps = *sc.epsilons;
    const auto coeffs = objective_coeffs(sc, objective, eps.size());
    const auto sol = opt.solver == "closed-form" ? sa::solve_closed_form(coeffs, eps)
                                                 : sa::solve_simplex(coeffs, eps);
    const auto spikes = sa::gaps_to_spikes(sol.gaps);
    const std::size_t kappa = sa::compute_kappa(eps);

    std::optional<sa::CapacityReport> report;
    std::optional<double> nu_uniform;
    if (opt.poc) {
        report = sa::price_of_capacity(coeffs);
        if (report->a_index) nu_uniform = sa::price_of_capacity_uniform(coeffs);
    }

    switch (parse_format(opt.format)) {
        case Format::json: {
            ordered_json doc;
            doc["command"] = "optimize";
            doc["objective"] = sa::objective_to_string(objective);
            doc["solver"] = opt.solver;
            doc["coefficients"] = coeffs.coeffs();
            doc["epsilons"] = eps.epsilons();
            doc["gaps"] = sol.gaps.gaps();
            doc["spikes"] = spikes.probs();
            doc["dual"] = sol.dual;
            doc["objective_value"] = sol.objective_value;
            doc["kkt_certified"] = sol.kkt_certified;
            doc["kappa"] = kappa;
            if (report) doc["price_of_capacity"] = poc_to_json(*report, nu_uniform);
            emit_json(doc);
            break;
        }
        case Format::csv: {
            std::vector<std::string> header{"index", "coefficient", "epsilon",   "gap",
                                            "spike", "dual",        "objective_value",
                                            "x0",    "kappa",       "kkt_certified"};
            if (report) {
                header.insert(header.end(), {"a_index", "nu", "nu_upper_bound", "nu_uniform"});
            }
            emit_csv_row(header);
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                std::vector<std::string> row{std::to_string(j + 1),
                                             fmt(coeffs[j]),
                                             fmt(eps[j]),
                                             fmt(sol.gaps[j]),
                                             fmt(spikes[j]),
                                             fmt(sol.dual[j + 1]),
                                             fmt(sol.objective_value),
                                             fmt(sol.dual[0]),
                                             std::to_string(kappa),
                                             sol.kkt_certified ? "true" : "false"};
                if (report) {
                    row.push_back(report->a_index ? std::to_string(*report->a_index) : "");
                    row.push_back(fmt(report->nu));
                    row.push_back(fmt(report->nu_upper_bound));
                    row.push_back(nu_uniform ? fmt(*nu_uniform) : "");
                }
                emit_csv_row(row);
            }
            break;
        }
        case Format::table: {
            std::cout << "optimal spikes (" << sa::objective_to_string(objective) << ", "
                      << opt.solver << ")\n";
            std::cout << std::left << std::setw(6) << "j" << std::setw(14) << "coefficient"
                      << std::setw(12) << "epsilon" << std::setw(12) << "gap" << std::setw(12)
                      << "spike" << std::setw(12) << "dual" << "\n";
            for (std::size_t j = 0; j < coeffs.size(); ++j) {
                std::cout << std::left << std::setw(6) << j + 1 << std::setw(14)
                          << fmt_short(coeffs[j]) << std::setw(12) << fmt_short(eps[j])
                          << std::setw(12) << fmt_short(sol.gaps[j]) << std::setw(12)
                          << fmt_short(spikes[j]) << std::setw(12) << fmt_short(sol.dual[j + 1])
                          << "\n";
            }
            std::cout << "objective value " << fmt_short(sol.objective_value) << "\n";
            std::cout << "dual x0         " << fmt_short(sol.dual[0]) << "\n";
            std::cout << "kkt certified   " << (sol.kkt_certified ? "yes" : "no") << "\n";
            std::cout << "kappa           " << kappa << "\n";
            if (report) {
                std::cout << "price of capacity: ";
                if (report->a_index) {
                    std::cout << "a = " << *report->a_index << ", nu = " << fmt_short(report->nu)
                              << ", bound = " << fmt_short(report->nu_upper_bound)
                              << ", uniform = " << fmt_short(*nu_uniform) << "\n";
                } else {
                    std::cout << "no threshold (nu = 1)\n";
                }
            }
            break;
        }
    }
    return 0;
}

// -------------------------------------------------------------- sweep

struct SweepOptions {
    std::string scenario_path;
    std::optional<std::string> objective;
    std::string format = "csv";
    std::size_t kappa_target = 0;
    std::size_t grid_steps = 11;
    std::optional<double> grid_max;
};

struct SweepRow {
    std::size_t kappa;
    double epsilon;
    std::optional<double> h_opt;
    std::optional<double> ratio;
};

int cmd_sweep(const SweepOptions& opt) {
    const auto sc = sa::load_scenario(opt.scenario_path);
    const auto objective =
        opt.objective ? sa::objective_from_string(*opt.objective) : sc.objective;
    if (opt.kappa_target < 1) {
        throw sa::ValidationError("sweep: --kappa-target must be at least 1");
    }
    if (opt.grid_steps < 2) {
        throw sa::ValidationError("sweep: --grid-steps must be at least 2");
    }
    const std::size_t m_target = opt.kappa_target;
    const std::size_t m_lp =
        objective == sa::Objective::ssa_revenue && sc.ssa ? sc.ssa->spike_count : m_target;
    if (m_target > m_lp) {
        throw sa::ValidationError("sweep: --kappa-target exceeds the spike count");
    }
    const auto coeffs = objective_coeffs(sc, objective, m_lp);

    const double md = static_cast<double>(m_target);
    const double cap = 2.0 / (md * (md + 1.0));  // uniform feasibility limit
    const double grid_max = opt.grid_max.value_or(cap);

    const double h0 =
        sa::solve_simplex(coeffs, sa::CapacityParams(std::vector<double>(m_lp, 0.0)))
            .objective_value;

    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < opt.grid_steps; ++i) {
        const double e_val =
            grid_max * static_cast<double>(i) / static_cast<double>(opt.grid_steps - 1);
        SweepRow row{e_val > 0.0 ? m_target : 0, e_val, std::nullopt, std::nullopt};
        std::vector<double> e(m_lp, 0.0);
        for (std::size_t j = 0; j < m_target; ++j) e[j] = e_val;
        try {
            const sa::CapacityParams eps(std::move(e));
            const double h = sa::solve_simplex(coeffs, eps).objective_value;
            row.h_opt = h;
            row.ratio = h != 0.0 ? h0 / h
                                 : (h0 == 0.0 ? 1.0 : std::numeric_limits<double>::infinity());
        } catch (const sa::FeasibilityError&) {
            // row stays marked infeasible
        }
        rows.push_back(row);
    }

    switch (parse_format(opt.format)) {
        case Format::json: {
            ordered_json doc;
            doc["command"] = "sweep";
            doc["objective"] = sa::objective_to_string(objective);
            doc["kappa_target"] = m_target;
            doc["unconstrained_optimum"] = h0;
            auto& out_rows = doc["rows"] = ordered_json::array();
            for (const auto& row : rows) {
                ordered_json r;
                r["kappa"] = row.kappa;
                r["epsilon"] = row.epsilon;
                r["h_opt"] = row.h_opt ? ordered_json(*row.h_opt) : ordered_json(nullptr);
                r["ratio"] = row.ratio ? ordered_json(*row.ratio) : ordered_json(nullptr);
                r["status"] = row.h_opt ? "ok" : "infeasible";
                out_rows.push_back(std::move(r));
            }
            emit_json(doc);
            break;
        }
        case Format::csv:
        case Format::table: {
            emit_csv_row({"kappa", "epsilon", "h_opt", "ratio", "status"});
            for (const auto& row : rows) {
                emit_csv_row({std::to_string(row.kappa), fmt(row.epsilon),
                              row.h_opt ? fmt(*row.h_opt) : "",
                              row.ratio ? fmt(*row.ratio) : "",
                              row.h_opt ? "ok" : "infeasible"});
            }
            break;
        }
    }
    return 0;
}

// ----------------------------------------------------------- simulate

struct SimulateOptions {
    std::string scenario_path;
    std::string payment = "ppa";
    std::string format = "table";
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
};

int cmd_simulate(const SimulateOptions& opt) {
    const auto sc = sa::load_scenario(opt.scenario_path);
    if (!sc.spikes) {
        throw sa::ValidationError("scenario: 'spikes' required by the simulate command");
    }
    const auto& spikes = *sc.spikes;
    const bool betting = opt.payment == "betting";
    const auto scheme =
        betting ? sa::PaymentScheme::betting : sa::PaymentScheme::pay_per_acquisition;
    const auto vcg = sa::run_vcg(sc.bidders, spikes);
    const auto charges = sa::per_acquisition_charges(vcg, spikes);
    const auto res = sa::simulate(sc.bidders, spikes, scheme, opt.trials, opt.seed);
    const std::string scheme_name = betting ? "betting" : "pay-per-acquisition";
    const std::size_t m = spikes.size();

    std::vector<double> deviation(m), stderr_(m);
    std::vector<bool> within(m);
    bool pass = true;
    for (std::size_t j = 0; j < m; ++j) {
        deviation[j] = res.empirical_payment_means[j] - vcg.expected_payments[j];
        stderr_[j] = std::sqrt(res.empirical_payment_variances[j] /
                               static_cast<double>(opt.trials));
        within[j] = std::abs(deviation[j]) <= 3.0 * stderr_[j] + 1e-9;
        pass = pass && within[j];
    }

    switch (parse_format(opt.format)) {
        case Format::json: {
            ordered_json doc;
            doc["command"] = "simulate";
            doc["payment_scheme"] = scheme_name;
            doc["trials"] = res.trials;
            doc["seed"] = res.seed;
            doc["spikes"] = spikes.probs();
            auto& rows = doc["per_rank"] = ordered_json::array();
            for (std::size_t j = 0; j < m; ++j) {
                ordered_json r;
                r["rank"] = j + 1;
                r["spike"] = spikes[j];
                r["expected_payment"] = vcg.expected_payments[j];
                r["per_win_charge"] = charges[j];
                r["empirical_mean"] = res.empirical_payment_means[j];
                r["empirical_variance"] = res.empirical_payment_variances[j];
                r["win_count"] = res.win_counts[j];
                r["win_frequency"] =
                    static_cast<double>(res.win_counts[j]) / static_cast<double>(res.trials);
                r["deviation"] = deviation[j];
                r["standard_error"] = stderr_[j];
                r["within_3se"] = static_cast<bool>(within[j]);
                rows.push_back(std::move(r));
            }
            doc["empirical_revenue_mean"] = res.empirical_revenue_mean;
            doc["analytic_revenue"] = vcg.revenue;
            doc["pass"] = pass;
            emit_json(doc);
            break;
        }
        case Format::csv: {
            emit_csv_row({"rank", "spike", "expected_payment", "per_win_charge",
                          "empirical_mean", "empirical_variance", "win_count", "win_frequency",
                          "deviation", "standard_error", "within_3se", "scheme", "trials",
                          "seed", "empirical_revenue_mean", "analytic_revenue"});
            for (std::size_t j = 0; j < m; ++j) {
                emit_csv_row(
                    {std::to_string(j + 1), fmt(spikes[j]), fmt(vcg.expected_payments[j]),
                     fmt(charges[j]), fmt(res.empirical_payment_means[j]),
                     fmt(res.empirical_payment_variances[j]), std::to_string(res.win_counts[j]),
                     fmt(static_cast<double>(res.win_counts[j]) /
                         static_cast<double>(res.trials)),
                     fmt(deviation[j]), fmt(stderr_[j]), within[j] ? "true" : "false",
                     scheme_name, std::to_string(res.trials), std::to_string(res.seed),
                     fmt(res.empirical_revenue_mean), fmt(vcg.revenue)});
            }
            break;
        }
        case Format::table: {
            std::cout << "simulation (" << scheme_name << ", trials=" << res.trials
                      << ", seed=" << res.seed << ")\n";
            std::cout << std::left << std::setw(6) << "rank" << std::setw(10) << "spike"
                      << std::setw(12) << "h_j" << std::setw(14) << "emp. mean" << std::setw(14)
                      << "deviation" << std::setw(12) << "3*se" << std::setw(10) << "wins"
                      << std::setw(8) << "ok" << "\n";
            for (std::size_t j = 0; j < m; ++j) {
                std::cout << std::left << std::setw(6) << j + 1 << std::setw(10)
                          << fmt_short(spikes[j]) << std::setw(12)
                          << fmt_short(vcg.expected_payments[j]) << std::setw(14)
                          << fmt_short(res.empirical_payment_means[j]) << std::setw(14)
                          << fmt_short(deviation[j]) << std::setw(12)
                          << fmt_short(3.0 * stderr_[j]) << std::setw(10) << res.win_counts[j]
                          << std::setw(8) << (within[j] ? "yes" : "no") << "\n";
            }
            std::cout << "empirical revenue mean " << fmt_short(res.empirical_revenue_mean)
                      << " (analytic " << fmt_short(vcg.revenue) << ")\n";
            std::cout << (pass ? "PASS" : "FAIL") << " at the 3-standard-error level\n";
            break;
        }
    }
    return 0;
}

// ---------------------------------------------------------------- ssa

struct SsaOptions {
    std::string scenario_path;
    std::string format = "table";
};

int cmd_ssa(const SsaOptions& opt) {
    const auto sc = sa::load_scenario(opt.scenario_path);
    if (!sc.ssa) {
        throw sa::ValidationError("scenario: 'ssa' block required by the ssa command");
    }
    const auto& config = *sc.ssa;
    const auto dec = sa::ssa_objective_coefficients(sc.bidders, config);
    const double fixed = sa::ssa_fixed_revenue(sc.bidders, config);
    const bool combined = sc.spikes.has_value();
    const auto out = combined ? sa::combined_auction(sc.bidders, config, *sc.spikes)
                              : sa::sne_revenue(sc.bidders, config.position_ctrs);
    const auto ids = ranked_ids(sc.bidders, out.ranking);
    const std::string mode = combined ? "combined" : "positions-only";

    switch (parse_format(opt.format)) {
        case Format::json: {
            ordered_json doc;
            doc["command"] = "ssa";
            doc["mode"] = mode;
            doc["slots"] = config.slots;
            doc["spike_count"] = config.spike_count;
            if (combined) doc["spikes"] = sc.spikes->probs();
            doc["ranking"] = ids;
            doc["ranked_scores"] = out.ranked_scores;
            doc["effective_ctrs"] = out.effective_ctrs;
            doc["per_slot_prices"] = out.per_slot_prices;
            doc["objective_coefficients"] = dec.coeffs.coeffs();
            doc["gapwise_monotone"] = dec.is_monotone;
            doc["fixed_revenue"] = fixed;
            doc["sne_revenue"] = out.sne_revenue;
            emit_json(doc);
            break;
        }
        case Format::csv: {
            emit_csv_row({"slot", "bidder", "score", "effective_ctr", "price", "sne_revenue",
                          "fixed_revenue", "mode"});
            for (std::size_t j = 0; j < out.effective_ctrs.size(); ++j) {
                const bool occupied = j < ids.size();
                emit_csv_row({std::to_string(j + 1), occupied ? ids[j] : "",
                              fmt(occupied ? out.ranked_scores[j] : 0.0),
                              fmt(out.effective_ctrs[j]), fmt(out.per_slot_prices[j]),
                              fmt(out.sne_revenue), fmt(fixed), mode});
            }
            break;
        }
        case Format::table: {
            std::cout << "sponsored search (" << mode << ", K=" << config.slots
                      << ", M=" << config.spike_count << ")\n";
            std::cout << std::left << std::setw(6) << "slot" << std::setw(10) << "bidder"
                      << std::setw(12) << "score" << std::setw(14) << "eff. CTR" << std::setw(12)
                      << "price" << "\n";
            for (std::size_t j = 0; j < out.effective_ctrs.size(); ++j) {
                const bool occupied = j < ids.size();
                std::cout << std::left << std::setw(6) << j + 1 << std::setw(10)
                          << (occupied ? ids[j] : "-") << std::setw(12)
                          << fmt_short(occupied ? out.ranked_scores[j] : 0.0) << std::setw(14)
                          << fmt_short(out.effective_ctrs[j]) << std::setw(12)
                          << fmt_short(out.per_slot_prices[j]) << "\n";
            }
            std::cout << "objective coefficients:";
            for (double d : dec.coeffs.coeffs()) std::cout << " " << fmt_short(d);
            std::cout << (dec.is_monotone ? " (gap-wise monotone)" : " (not monotone)") << "\n";
            std::cout << "fixed revenue " << fmt_short(fixed) << "\n";
            std::cout << "SNE revenue   " << fmt_short(out.sne_revenue) << "\n";
            break;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"capacity-constrained auctions of a single item via probability spikes"};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"table", "json", "csv"});
    const auto payment_check = CLI::IsMember({"betting", "ppa"});
    const auto objective_check = CLI::IsMember({"revenue", "efficiency", "ssa-revenue"});

    VcgOptions vcg_opt;
    auto* vcg_cmd = app.add_subcommand("vcg", "run the VCG spike auction on a scenario");
    vcg_cmd->add_option("--scenario", vcg_opt.scenario_path, "scenario file (JSON)")->required();
    vcg_cmd->add_option("--payment", vcg_opt.payment, "payment scheme")->check(payment_check);
    vcg_cmd->add_option("--format", vcg_opt.format, "output format")->check(format_check);

    OptimizeOptions optimize_opt;
    auto* optimize_cmd =
        app.add_subcommand("optimize", "pick optimal spike gaps under capacity bounds");
    optimize_cmd->add_option("--scenario", optimize_opt.scenario_path, "scenario file (JSON)")
        ->required();
    optimize_cmd
        ->add_option("--objective", optimize_opt.objective,
                     "objective (defaults to the scenario's)")
        ->check(objective_check);
    optimize_cmd->add_option("--solver", optimize_opt.solver, "closed-form or simplex")
        ->check(CLI::IsMember({"closed-form", "simplex"}));
    optimize_cmd->add_option("--format", optimize_opt.format, "output format")
        ->check(format_check);
    optimize_cmd->add_flag("--poc", optimize_opt.poc, "emit the price-of-capacity report");

    SweepOptions sweep_opt;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "trade-off curve over uniform capacity bounds");
    sweep_cmd->add_option("--scenario", sweep_opt.scenario_path, "scenario file (JSON)")
        ->required();
    sweep_cmd
        ->add_option("--objective", sweep_opt.objective, "objective (defaults to the scenario's)")
        ->check(objective_check);
    sweep_cmd->add_option("--kappa-target", sweep_opt.kappa_target, "capacity level to sweep")
        ->required();
    sweep_cmd->add_option("--grid-steps", sweep_opt.grid_steps, "number of grid points");
    sweep_cmd->add_option("--grid-max", sweep_opt.grid_max,
                          "largest uniform bound (defaults to the feasibility cap)");
    sweep_cmd->add_option("--format", sweep_opt.format, "output format")->check(format_check);

    SimulateOptions simulate_opt;
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Monte Carlo run of the selling experiment");
    simulate_cmd->add_option("--scenario", simulate_opt.scenario_path, "scenario file (JSON)")
        ->required();
    simulate_cmd->add_option("--payment", simulate_opt.payment, "payment scheme")
        ->check(payment_check);
    simulate_cmd->add_option("--trials", simulate_opt.trials, "number of trials");
    simulate_cmd->add_option("--seed", simulate_opt.seed, "PRNG seed (mt19937_64)");
    simulate_cmd->add_option("--format", simulate_opt.format, "output format")
        ->check(format_check);

    SsaOptions ssa_opt;
    auto* ssa_cmd =
        app.add_subcommand("ssa", "sponsored-search combined auction at the SNE point");
    ssa_cmd->add_option("--scenario", ssa_opt.scenario_path, "scenario file (JSON)")->required();
    ssa_cmd->add_option("--format", ssa_opt.format, "output format")->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (vcg_cmd->parsed()) return cmd_vcg(vcg_opt);
        if (optimize_cmd->parsed()) return cmd_optimize(optimize_opt);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_opt);
        if (simulate_cmd->parsed()) return cmd_simulate(simulate_opt);
        if (ssa_cmd->parsed()) return cmd_ssa(ssa_opt);
    } catch (const sa::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sa::RegimeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const sa::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
