#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ecsmet/channels.hpp"
#include "ecsmet/economical.hpp"
#include "ecsmet/entanglement.hpp"
#include "ecsmet/errors.hpp"
#include "ecsmet/fock/fock.hpp"
#include "ecsmet/fock/oracle.hpp"
#include "ecsmet/probe.hpp"
#include "ecsmet/qfi.hpp"
#include "ecsmet/sld.hpp"
#include "ecsmet/version.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace ecsmet;

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct OutputOptions {
    std::string format = "csv";
    std::string path;
};

struct Dataset {
    std::vector<std::string> columns;
    std::vector<ordered_json> rows;
    ordered_json config = ordered_json::object();
};

void write_dataset(const Dataset& d, const OutputOptions& out) {
    std::string text;
    if (out.format == "csv") {
        std::string line;
        for (size_t i = 0; i < d.columns.size(); ++i) {
            if (i) line += ',';
            line += d.columns[i];
        }
        text = line + "\n";
        for (const auto& row : d.rows) {
            line.clear();
            for (size_t i = 0; i < d.columns.size(); ++i) {
                if (i) line += ',';
                const auto& cell = row.at(d.columns[i]);
                if (cell.is_string())
                    line += cell.get<std::string>();
                else if (cell.is_boolean())
                    line += cell.get<bool>() ? "1" : "0";
                else if (cell.is_number_integer())
                    line += std::to_string(cell.get<long long>());
                else
                    line += fmt12(cell.get<double>());
            }
            text += line + "\n";
        }
    } else {
        ordered_json doc;
        doc["meta"]["version"] = kVersion;
        doc["meta"]["config"] = d.config;
        doc["rows"] = d.rows;
        text = doc.dump(2);
        text += "\n";
    }
    if (out.path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) throw config_error("cannot open output path " + out.path);
        f.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
}

void check_grid(const std::vector<double>& g, const char* name) {
    if (g.empty())
        throw config_error(std::string(name) + " grid is empty");
    if (!std::is_sorted(g.begin(), g.end()))
        throw config_error(std::string(name) +
                           " grid must be sorted ascending");
}

void check_rates(const std::vector<double>& g) {
    check_grid(g, "rate");
    for (double r : g)
        if (!(r >= 0.0 && r <= 1.0))
            throw config_error("rates must lie in [0, 1]");
}

LossModel parse_model(const std::string& m) {
    if (m == "both") return LossModel::both_arms;
    if (m == "one") return LossModel::one_arm_a;
    throw config_error("model must be 'both' or 'one'");
}

Sign parse_sign(const std::string& s) {
    if (s == "plus") return Sign::plus;
    if (s == "minus") return Sign::minus;
    throw config_error("sign must be 'plus' or 'minus'");
}

int pick_truncation(int requested, double max_amplitude) {
    if (requested < 0) throw config_error("truncation must be nonnegative");
    return requested > 0 ? requested
                         : fock::default_truncation(max_amplitude);
}

// Sweep options shared by the gridded subcommands.
struct SweepOptions {
    std::vector<double> alphas{1.0};
    std::vector<double> betas{0.0};
    std::vector<double> rates{0.0};
    std::string model = "both";
    std::string sign = "plus";
    int truncation = 0; // 0 selects the automatic cutoff
    bool oracle = false;
};

ordered_json sweep_config(const char* command, const SweepOptions& o,
                          const OutputOptions& out) {
    ordered_json c;
    c["command"] = command;
    c["alpha"] = o.alphas;
    c["beta"] = o.betas;
    c["rate"] = o.rates;
    c["model"] = o.model;
    c["sign"] = o.sign;
    c["truncation"] = o.truncation;
    c["oracle"] = o.oracle;
    c["format"] = out.format;
    return c;
}

Dataset run_doe(const SweepOptions& o, const OutputOptions& out) {
    check_grid(o.alphas, "alpha");
    check_grid(o.betas, "beta");
    const Sign sg = parse_sign(o.sign);
    Dataset d;
    d.config = sweep_config("doe", o, out);
    d.columns = {"alpha", "beta", "distance", "doe"};
    if (o.oracle) {
        d.columns.push_back("oracle_doe");
        d.columns.push_back("residual");
    }
    for (double a : o.alphas)
        for (double b : o.betas) {
            const ProbeSpec p{a, b, sg};
            const double v = degree_of_entanglement(p);
            ordered_json row;
            row["alpha"] = a;
            row["beta"] = b;
            row["distance"] = std::abs(a - b);
            row["doe"] = v;
            if (o.oracle) {
                const int nc = pick_truncation(
                    o.truncation, std::max(std::abs(a), std::abs(b)));
                const double ov =
                    fock::oracle_entropy_of_reduction(fock::ecs_fock(p, nc));
                row["oracle_doe"] = ov;
                row["residual"] = v - ov;
            }
            d.rows.push_back(std::move(row));
        }
    return d;
}

Dataset run_qfi(const SweepOptions& o, const OutputOptions& out) {
    check_grid(o.alphas, "alpha");
    check_grid(o.betas, "beta");
    check_rates(o.rates);
    const Sign sg = parse_sign(o.sign);
    const LossModel model = parse_model(o.model);
    Dataset d;
    d.config = sweep_config("qfi", o, out);
    d.columns = {"alpha",          "beta", "rate",
                 "model",          "sign", "qfi",
                 "variance_term",  "coherence_penalty"};
    if (o.oracle) {
        d.columns.push_back("oracle_qfi");
        d.columns.push_back("residual");
    }
    for (double a : o.alphas)
        for (double b : o.betas)
            for (double r : o.rates) {
                const ProbeSpec p{a, b, sg};
                const LossScenario sc{model, r, 0.0};
                const QfiResult q = qfi_ecs(p, sc);
                ordered_json row;
                row["alpha"] = a;
                row["beta"] = b;
                row["rate"] = r;
                row["model"] = o.model;
                row["sign"] = o.sign;
                row["qfi"] = q.value;
                row["variance_term"] = q.variance_term;
                row["coherence_penalty"] = q.coherence_penalty;
                if (o.oracle) {
                    const int nc = pick_truncation(
                        o.truncation, std::max(std::abs(a), std::abs(b)));
                    const double ov = fock::oracle_qfi_state(p, sc, nc);
                    row["oracle_qfi"] = ov;
                    row["residual"] = q.value - ov;
                }
                d.rows.push_back(std::move(row));
            }
    return d;
}

Dataset run_eco(const SweepOptions& o, const OutputOptions& out) {
    check_grid(o.alphas, "alpha");
    check_rates(o.rates);
    const LossModel model = parse_model(o.model);
    Dataset d;
    d.config = sweep_config("eco", o, out);
    d.columns = {"alpha", "rate", "model", "beta_opt", "eco", "refined",
                 "flag"};
    for (double a : o.alphas)
        for (double r : o.rates) {
            const EcoResult e = optimize_beta(a, LossScenario{model, r, 0.0});
            ordered_json row;
            row["alpha"] = a;
            row["rate"] = r;
            row["model"] = o.model;
            row["beta_opt"] = e.beta_opt;
            row["eco"] = e.eco_value;
            row["refined"] = e.refined;
            row["flag"] = e.boundary ? "boundary" : (e.tie_snap ? "tie" : "");
            d.rows.push_back(std::move(row));
        }
    return d;
}

Dataset run_eco_surface(const SweepOptions& o, const OutputOptions& out) {
    const LossModel model = parse_model(o.model);
    Dataset d;
    d.config = sweep_config("eco-surface", o, out);
    d.columns = {"alpha", "rate", "beta_opt", "eco"};
    for (const EcoSurfaceRow& r : eco_surface(o.alphas, o.rates, model)) {
        ordered_json row;
        row["alpha"] = r.alpha;
        row["rate"] = r.rate;
        row["beta_opt"] = r.beta_opt;
        row["eco"] = r.eco;
        d.rows.push_back(std::move(row));
    }
    return d;
}

struct CompareOptions {
    std::vector<double> navs{1.0};
    std::vector<double> rates{0.0};
    double gamma = 0.0;
    std::string model = "both";
    std::string sign = "plus";
};

Dataset run_compare(const CompareOptions& o, const OutputOptions& out) {
    check_grid(o.navs, "nav");
    check_rates(o.rates);
    const Sign sg = parse_sign(o.sign);
    const LossModel model = parse_model(o.model);
    Dataset d;
    d.config["command"] = "compare";
    d.config["nav"] = o.navs;
    d.config["gamma"] = o.gamma;
    d.config["rate"] = o.rates;
    d.config["model"] = o.model;
    d.config["sign"] = o.sign;
    d.config["format"] = out.format;
    d.columns = {"n_av", "gamma", "sign",    "model",
                 "rate", "alpha", "qfi_ecs", "qfi_coherent"};
    for (double nav : o.navs)
        for (double r : o.rates) {
            const EnergyComparison c = compare_at_fixed_energy(
                nav, o.gamma, sg, LossScenario{model, r, 0.0});
            ordered_json row;
            row["n_av"] = nav;
            row["gamma"] = o.gamma;
            row["sign"] = o.sign;
            row["model"] = o.model;
            row["rate"] = r;
            row["alpha"] = c.alpha;
            row["qfi_ecs"] = c.ecs.value;
            row["qfi_coherent"] = c.coherent.value;
            d.rows.push_back(std::move(row));
        }
    return d;
}

Dataset run_negativity(const SweepOptions& o, const OutputOptions& out) {
    check_grid(o.alphas, "alpha");
    check_grid(o.betas, "beta");
    check_rates(o.rates);
    const Sign sg = parse_sign(o.sign);
    const LossModel model = parse_model(o.model);
    Dataset d;
    d.config = sweep_config("negativity", o, out);
    d.columns = {"alpha", "beta", "rate", "model", "negativity"};
    if (o.oracle) {
        d.columns.push_back("oracle_negativity");
        d.columns.push_back("residual");
    }
    for (double a : o.alphas)
        for (double b : o.betas)
            for (double r : o.rates) {
                const ProbeSpec p{a, b, sg};
                const LossScenario sc{model, r, 0.0};
                const NegativityResult nres =
                    model == LossModel::both_arms
                        ? negativity_both_arms(p, sc)
                        : negativity_one_arm(p, sc);
                ordered_json row;
                row["alpha"] = a;
                row["beta"] = b;
                row["rate"] = r;
                row["model"] = o.model;
                row["negativity"] = nres.value;
                if (o.oracle) {
                    const int nc = pick_truncation(
                        o.truncation, std::max(std::abs(a), std::abs(b)));
                    const double ov = fock::oracle_negativity(
                        fock::output_state(p, sc, nc));
                    row["oracle_negativity"] = ov;
                    row["residual"] = nres.value - ov;
                }
                d.rows.push_back(std::move(row));
            }
    return d;
}

struct PointOptions {
    double alpha = 1.0;
    double beta = 0.0;
    double rate = 0.0;
    std::string model = "both";
    std::string sign = "plus";
    int truncation = 0;
    std::vector<double> phis{0.3};
};

Dataset run_sld_check(const PointOptions& o, const OutputOptions& out) {
    const LossModel model = parse_model(o.model);
    const LossScenario sc{model, o.rate, 0.0};
    const ProbeSpec p{o.alpha, o.beta, Sign::plus};
    const int nc = pick_truncation(
        o.truncation, std::max(std::abs(o.alpha), std::abs(o.beta)));
    const SldDescription desc = sld(p, sc);
    const SldReport rep = verify_sld_identities(p, sc, nc);
    Dataset d;
    d.config["command"] = "sld-check";
    d.config["alpha"] = o.alpha;
    d.config["beta"] = o.beta;
    d.config["rate"] = o.rate;
    d.config["model"] = o.model;
    d.config["truncation"] = o.truncation;
    d.config["format"] = out.format;
    d.columns = {"alpha",
                 "beta",
                 "rate",
                 "model",
                 "truncation",
                 "coefficient_a",
                 "support_coefficient",
                 "lyapunov_residual",
                 "zero_mean_residual",
                 "qfi_residual",
                 "qfi",
                 "anomaly_a_zero"};
    ordered_json row;
    row["alpha"] = o.alpha;
    row["beta"] = o.beta;
    row["rate"] = o.rate;
    row["model"] = o.model;
    row["truncation"] = nc;
    row["coefficient_a"] = desc.coefficient_a;
    row["support_coefficient"] = rep.support_coefficient;
    row["lyapunov_residual"] = rep.lyapunov_residual;
    row["zero_mean_residual"] = rep.zero_mean_residual;
    row["qfi_residual"] = rep.qfi_residual;
    row["qfi"] = rep.qfi_value;
    row["anomaly_a_zero"] = rep.anomaly_a_zero;
    d.rows.push_back(std::move(row));
    return d;
}

Dataset run_cfi(const PointOptions& o, const OutputOptions& out) {
    check_grid(o.phis, "phi");
    const LossModel model = parse_model(o.model);
    const Sign sg = parse_sign(o.sign);
    const ProbeSpec p{o.alpha, o.beta, sg};
    const LossScenario sc{model, o.rate, 0.0};
    const int nc = pick_truncation(
        o.truncation, std::max(std::abs(o.alpha), std::abs(o.beta)));
    const double q = qfi_ecs(p, sc).value;
    Dataset d;
    d.config["command"] = "cfi";
    d.config["alpha"] = o.alpha;
    d.config["beta"] = o.beta;
    d.config["rate"] = o.rate;
    d.config["model"] = o.model;
    d.config["sign"] = o.sign;
    d.config["truncation"] = o.truncation;
    d.config["phi"] = o.phis;
    d.config["format"] = out.format;
    d.columns = {"alpha", "beta", "rate", "model",
                 "sign",  "phi",  "cfi",  "qfi"};
    for (double phi : o.phis) {
        ordered_json row;
        row["alpha"] = o.alpha;
        row["beta"] = o.beta;
        row["rate"] = o.rate;
        row["model"] = o.model;
        row["sign"] = o.sign;
        row["phi"] = phi;
        row["cfi"] = cfi_pnrd(p, sc, phi, nc);
        row["qfi"] = q;
        d.rows.push_back(std::move(row));
    }
    return d;
}

Dataset fig_compare(int number, const OutputOptions& out) {
    const bool minus_family = number >= 11;
    const LossModel model = (number == 5 || number == 11)
                                ? LossModel::both_arms
                                : LossModel::one_arm_a;
    std::vector<double> gammas;
    std::vector<double> rates;
    int nav_start = 1;
    switch (number) {
        case 5: gammas = {-0.2, 0.3, 0.5, 0.7}; rates = {0.0, 0.2, 0.4}; break;
        case 7: gammas = {-0.1, 0.2, 0.4, 0.5}; rates = {0.0, 0.2, 0.4}; break;
        case 11: gammas = {-1.0, 0.3}; rates = {0.1, 0.5}; nav_start = 6; break;
        default: gammas = {-1.0, 0.3, 0.4, 0.6}; rates = {0.1, 0.5}; nav_start = 6; break;
    }
    Dataset d;
    d.columns = {"gamma", "rate", "n_av", "alpha", "qfi_ecs", "qfi_coherent"};
    for (double g : gammas)
        for (double r : rates)
            for (int i = nav_start; i <= 40; ++i) {
                const double nav = 0.1 * i;
                const EnergyComparison c = compare_at_fixed_energy(
                    nav, g, minus_family ? Sign::minus : Sign::plus,
                    LossScenario{model, r, 0.0});
                ordered_json row;
                row["gamma"] = g;
                row["rate"] = r;
                row["n_av"] = nav;
                row["alpha"] = c.alpha;
                row["qfi_ecs"] = c.ecs.value;
                row["qfi_coherent"] = c.coherent.value;
                d.rows.push_back(std::move(row));
            }
    (void)out;
    return d;
}

Dataset fig_negativity(int number) {
    const LossModel model =
        number == 8 ? LossModel::both_arms : LossModel::one_arm_a;
    Dataset d;
    d.columns = {"alpha", "beta", "rate", "negativity"};
    for (double a : {0.5, 1.0, 2.0, 5.0})
        for (double brel : {-0.1, 0.0, 0.4, 0.7})
            for (int i = 0; i <= 50; ++i) {
                const double r = 0.02 * i;
                const ProbeSpec p{a, brel * a, Sign::plus};
                const LossScenario sc{model, r, 0.0};
                const double v = model == LossModel::both_arms
                                     ? negativity_both_arms(p, sc).value
                                     : negativity_one_arm(p, sc).value;
                ordered_json row;
                row["alpha"] = a;
                row["beta"] = brel * a;
                row["rate"] = r;
                row["negativity"] = v;
                d.rows.push_back(std::move(row));
            }
    return d;
}

Dataset run_fig(int number, double fig_alpha, const OutputOptions& out) {
    Dataset d;
    switch (number) {
        case 2: {
            d.columns = {"distance", "doe"};
            for (int i = 0; i <= 400; ++i) {
                const double dist = 0.01 * i;
                ordered_json row;
                row["distance"] = dist;
                row["doe"] =
                    degree_of_entanglement(ProbeSpec{dist, 0.0, Sign::plus});
                d.rows.push_back(std::move(row));
            }
            break;
        }
        case 3: {
            d.columns = {"alpha", "beta_opt", "eco"};
            for (int i = 0; i <= 54; ++i) {
                const double a = 0.3 + 0.05 * i;
                const EcoResult e = optimize_beta(
                    a, LossScenario{LossModel::both_arms, 0.0, 0.0});
                ordered_json row;
                row["alpha"] = a;
                row["beta_opt"] = e.beta_opt;
                row["eco"] = e.eco_value;
                d.rows.push_back(std::move(row));
            }
            break;
        }
        case 4:
        case 6: {
            const LossModel model =
                number == 4 ? LossModel::both_arms : LossModel::one_arm_a;
            d.columns = {"alpha", "rate", "beta_opt", "eco"};
            std::vector<double> rates{0.001};
            for (int i = 1; i <= 16; ++i) rates.push_back(0.05 * i);
            for (double r : rates) {
                const EcoResult e =
                    optimize_beta(fig_alpha, LossScenario{model, r, 0.0});
                ordered_json row;
                row["alpha"] = fig_alpha;
                row["rate"] = r;
                row["beta_opt"] = e.beta_opt;
                row["eco"] = e.eco_value;
                d.rows.push_back(std::move(row));
            }
            break;
        }
        case 5:
        case 7:
        case 11:
        case 12:
            d = fig_compare(number, out);
            break;
        case 8:
        case 9:
            d = fig_negativity(number);
            break;
        case 10: {
            d.columns = {"alpha", "rate", "beta_opt", "eco"};
            std::vector<double> alphas, rates;
            for (int i = 0; i <= 10; ++i) alphas.push_back(0.5 + 0.25 * i);
            for (int i = 1; i <= 18; ++i) rates.push_back(0.05 * i);
            for (const EcoSurfaceRow& r :
                 eco_surface(alphas, rates, LossModel::both_arms)) {
                ordered_json row;
                row["alpha"] = r.alpha;
                row["rate"] = r.rate;
                row["beta_opt"] = r.beta_opt;
                row["eco"] = r.eco;
                d.rows.push_back(std::move(row));
            }
            break;
        }
        default:
            throw config_error("figure number must lie in 2..12");
    }
    d.config["command"] = "fig";
    d.config["number"] = number;
    if (number == 4 || number == 6) d.config["alpha"] = fig_alpha;
    d.config["format"] = out.format;
    return d;
}

void add_output_options(CLI::App* sub, OutputOptions& out) {
    sub->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--output", out.path, "output path (default stdout)");
}

void add_sweep_options(CLI::App* sub, SweepOptions& o, bool with_beta,
                       bool with_sign, bool with_oracle) {
    sub->add_option("--alpha", o.alphas, "alpha grid")->expected(-1);
    if (with_beta)
        sub->add_option("--beta", o.betas, "beta grid")->expected(-1);
    sub->add_option("--rate", o.rates, "loss rate grid")->expected(-1);
    sub->add_option("--model", o.model, "loss model")
        ->check(CLI::IsMember({"both", "one"}))
        ->capture_default_str();
    if (with_sign)
        sub->add_option("--sign", o.sign, "superposition sign")
            ->check(CLI::IsMember({"plus", "minus"}))
            ->capture_default_str();
    sub->add_option("--truncation", o.truncation,
                    "per-mode cutoff, 0 = automatic")
        ->capture_default_str();
    if (with_oracle)
        sub->add_flag("--oracle", o.oracle,
                      "append brute-force columns and residuals");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal entangled coherent probes for lossy phase "
                 "estimation"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "key=value configuration file ([subcommand] sections)");

    SweepOptions doe_o, qfi_o, eco_o, surf_o, neg_o;
    CompareOptions cmp_o;
    PointOptions sld_o, cfi_o;
    OutputOptions doe_out, qfi_out, eco_out, surf_out, cmp_out, neg_out,
        sld_out, cfi_out, fig_out;
    int fig_number = 2;
    double fig_alpha = 0.6;

    CLI::App* doe_c = app.add_subcommand("doe", "degree of entanglement");
    add_sweep_options(doe_c, doe_o, true, true, true);
    add_output_options(doe_c, doe_out);

    CLI::App* qfi_c =
        app.add_subcommand("qfi", "quantum Fisher information");
    add_sweep_options(qfi_c, qfi_o, true, true, true);
    add_output_options(qfi_c, qfi_out);

    CLI::App* eco_c =
        app.add_subcommand("eco", "optimal beta and information per photon");
    add_sweep_options(eco_c, eco_o, false, false, false);
    add_output_options(eco_c, eco_out);

    CLI::App* surf_c =
        app.add_subcommand("eco-surface", "optimal-beta sweep table");
    add_sweep_options(surf_c, surf_o, false, false, false);
    add_output_options(surf_c, surf_out);

    CLI::App* cmp_c = app.add_subcommand(
        "compare", "energy-matched probe vs coherent benchmark");
    cmp_c->add_option("--nav", cmp_o.navs, "mean photon number grid")
        ->expected(-1);
    cmp_c->add_option("--gamma", cmp_o.gamma, "beta/alpha ratio")
        ->capture_default_str();
    cmp_c->add_option("--rate", cmp_o.rates, "loss rate grid")->expected(-1);
    cmp_c->add_option("--model", cmp_o.model, "loss model")
        ->check(CLI::IsMember({"both", "one"}))
        ->capture_default_str();
    cmp_c->add_option("--sign", cmp_o.sign, "superposition sign")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    add_output_options(cmp_c, cmp_out);

    CLI::App* neg_c = app.add_subcommand("negativity", "output negativity");
    add_sweep_options(neg_c, neg_o, true, true, true);
    add_output_options(neg_c, neg_out);

    CLI::App* sld_c = app.add_subcommand(
        "sld-check", "optimal-measurement identity residuals");
    sld_c->add_option("--alpha", sld_o.alpha, "probe alpha")
        ->capture_default_str();
    sld_c->add_option("--beta", sld_o.beta, "probe beta")
        ->capture_default_str();
    sld_c->add_option("--rate", sld_o.rate, "loss rate")
        ->capture_default_str();
    sld_c->add_option("--model", sld_o.model, "loss model")
        ->check(CLI::IsMember({"both", "one"}))
        ->capture_default_str();
    sld_c->add_option("--truncation", sld_o.truncation,
                      "per-mode cutoff, 0 = automatic")
        ->capture_default_str();
    add_output_options(sld_c, sld_out);

    CLI::App* cfi_c = app.add_subcommand(
        "cfi", "photon-counting classical Fisher information");
    cfi_c->add_option("--alpha", cfi_o.alpha, "probe alpha")
        ->capture_default_str();
    cfi_c->add_option("--beta", cfi_o.beta, "probe beta")
        ->capture_default_str();
    cfi_c->add_option("--rate", cfi_o.rate, "loss rate")
        ->capture_default_str();
    cfi_c->add_option("--model", cfi_o.model, "loss model")
        ->check(CLI::IsMember({"both", "one"}))
        ->capture_default_str();
    cfi_c->add_option("--sign", cfi_o.sign, "superposition sign")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    cfi_c->add_option("--truncation", cfi_o.truncation,
                      "per-mode cutoff, 0 = automatic")
        ->capture_default_str();
    cfi_c->add_option("--phi", cfi_o.phis, "phase grid")->expected(-1);
    add_output_options(cfi_c, cfi_out);

    CLI::App* fig_c =
        app.add_subcommand("fig", "regenerate a figure dataset");
    fig_c->add_option("number", fig_number, "figure number")
        ->required()
        ->check(CLI::Range(2, 12));
    fig_c->add_option("--alpha", fig_alpha,
                      "probe alpha for the single-alpha sweeps")
        ->capture_default_str();
    add_output_options(fig_c, fig_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (doe_c->parsed()) write_dataset(run_doe(doe_o, doe_out), doe_out);
        else if (qfi_c->parsed()) write_dataset(run_qfi(qfi_o, qfi_out), qfi_out);
        else if (eco_c->parsed()) write_dataset(run_eco(eco_o, eco_out), eco_out);
        else if (surf_c->parsed())
            write_dataset(run_eco_surface(surf_o, surf_out), surf_out);
        else if (cmp_c->parsed())
            write_dataset(run_compare(cmp_o, cmp_out), cmp_out);
        else if (neg_c->parsed())
            write_dataset(run_negativity(neg_o, neg_out), neg_out);
        else if (sld_c->parsed())
            write_dataset(run_sld_check(sld_o, sld_out), sld_out);
        else if (cfi_c->parsed())
            write_dataset(run_cfi(cfi_o, cfi_out), cfi_out);
        else if (fig_c->parsed())
            write_dataset(run_fig(fig_number, fig_alpha, fig_out), fig_out);
    } catch (const config_error& e) {
        ordered_json err;
        err["error"]["type"] = "config";
        err["error"]["what"] = e.what();
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 2;
    } catch (const numeric_error& e) {
        ordered_json err;
        err["error"]["type"] = "numeric";
        err["error"]["what"] = e.what();
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 3;
    } catch (const std::exception& e) {
        ordered_json err;
        err["error"]["type"] = "internal";
        err["error"]["what"] = e.what();
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 3;
    }
    return 0;
}
