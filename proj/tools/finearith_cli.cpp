// Command-line front end. Every successful invocation prints exactly one
// JSON envelope on stdout; diagnostics go to stderr. Exit codes:
//   0  command succeeded / all checks passed
//   1  a verification found a counterexample
//   2  usage or parameter error (e.g. gcd hypothesis violated)
//   3  internal invariant breach (overflow, divisibility failure)

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "finearith/checked.hpp"
#include "finearith/divisor.hpp"
#include "finearith/params.hpp"
#include "finearith/quadform.hpp"
#include "finearith/series.hpp"
#include "finearith/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr std::int64_t kNMaxCap = 1000000;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void emit(const std::string& command, const json& params, const json& data,
          const std::string& status) {
    json envelope;
    envelope["schema_version"] = "1";
    envelope["command"] = command;
    envelope["params"] = params;
    envelope["data"] = data;
    envelope["status"] = status;
    std::cout << envelope.dump(2) << "\n";
}

void check_cap(std::int64_t n_max) {
    if (n_max > kNMaxCap)
        throw UsageError("--n-max exceeds the cap of 1000000");
}

json report_to_json(const finearith::VerificationReport& rep) {
    json j;
    j["identity"] = finearith::identity_name(rep.id);
    if (rep.params) {
        j["p"] = rep.params->p();
        j["r"] = rep.params->r();
        j["level"] = rep.params->strong() ? "strong" : "weak";
    } else {
        j["params"] = "bivariate";
    }
    j["n_min"] = rep.n_min;
    j["n_max"] = rep.n_max;
    j["status"] = rep.pass ? "pass" : "fail";
    j["checked_count"] = rep.checked_count;
    j["failure_count"] = rep.failure_count;
    if (rep.first_failure) {
        j["first_failure"] = {{"n", rep.first_failure->n},
                              {"route_values", rep.first_failure->route_values}};
    }
    if (rep.flagged_count > 0)
        j["flagged_count"] = rep.flagged_count;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact verification of divisor-class / indefinite-quadratic-form identities"};
    app.require_subcommand(1);

    std::string default_format = "json";
    if (const char* env = std::getenv("FINEARITH_FORMAT"))
        default_format = env;

    std::int64_t p = 0, r = 0, n = 0, n_max = 0, p_max = 0;
    bool squared = false;
    std::string identity, format = default_format;

    auto* expand = app.add_subcommand("expand", "Expand the infinite product to a coefficient list");
    expand->add_option("--p", p)->required();
    expand->add_option("--r", r)->required();
    expand->add_option("--n-max", n_max)->required();
    expand->add_flag("--squared", squared, "Emit q^r times the square of the product");

    auto* divisor_seq = app.add_subcommand("divisor-seq", "Divisor-side coefficient sequence");
    divisor_seq->add_option("--p", p)->required();
    divisor_seq->add_option("--r", r)->required();
    divisor_seq->add_option("--n-max", n_max)->required();
    divisor_seq->add_option("--identity", identity)->required()
        ->check(CLI::IsMember({"fine1", "fine2"}));

    auto* represent = app.add_subcommand("represent", "All cone representations of n with signs");
    represent->add_option("--p", p)->required();
    represent->add_option("--r", r)->required();
    represent->add_option("--n", n)->required();

    auto* classify_cmd = app.add_subcommand("classify", "Per-n divisor-class comparison verdicts");
    classify_cmd->add_option("--p", p)->required();
    classify_cmd->add_option("--r", r)->required();
    classify_cmd->add_option("--n-max", n_max)->required();
    classify_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "Verify one identity over a range");
    verify->add_option("--identity", identity)->required()
        ->check(CLI::IsMember({"fine1", "fine2", "thm1", "thm2", "cor2", "andrews"}));
    verify->add_option("--p", p);
    verify->add_option("--r", r);
    verify->add_option("--n-max", n_max)->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Verify all identities over all valid (p, r)");
    sweep_cmd->add_option("--p-max", p_max)->required();
    sweep_cmd->add_option("--n-max", n_max)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        emit("parse", json::object(), json::object(), "error");
        return 2;
    }

    try {
        if (*expand) {
            check_cap(n_max);
            finearith::PowerSeries s =
                finearith::fine_product(p, r, static_cast<int>(n_max));
            if (squared) {
                if (r > n_max)
                    throw UsageError("--squared needs n-max >= r");
                s = finearith::shift(finearith::square(s), r);
            }
            emit("expand",
                 {{"p", p}, {"r", r}, {"n_max", n_max}, {"squared", squared}},
                 s.coeffs, "ok");
            return 0;
        }

        if (*divisor_seq) {
            check_cap(n_max);
            finearith::FineParams params(p, r);
            std::vector<std::int64_t> seq;
            std::int64_t n_start = 0;
            if (identity == "fine1") {
                params.require_strong();
                const auto table = finearith::excess_table(
                    2 * p * n_max + r * (p - r), r, 2 * p);
                for (std::int64_t i = 0; i <= n_max; ++i)
                    seq.push_back(table[2 * p * i + r * (p - r)]);
            } else {
                n_start = 1;
                if (n_max < 1)
                    throw UsageError("divisor-seq fine2 needs n-max >= 1");
                const auto table = finearith::fine2_table(params, n_max);
                seq.assign(table.begin() + 1, table.end());
            }
            emit("divisor-seq",
                 {{"p", p}, {"r", r}, {"n_max", n_max}, {"identity", identity}},
                 {{"n_start", n_start}, {"coefficients", seq}}, "ok");
            return 0;
        }

        if (*represent) {
            finearith::FineParams params(p, r);
            json reps = json::array();
            for (const auto& rep : finearith::representations(params, n))
                reps.push_back({{"k", rep.k}, {"l", rep.l}, {"sign", rep.sign}});
            const auto pc = finearith::parity_counts(params, n);
            emit("represent", {{"p", p}, {"r", r}, {"n", n}},
                 {{"representations", reps}, {"even", pc.even}, {"odd", pc.odd}},
                 "ok");
            return 0;
        }

        if (*classify_cmd) {
            check_cap(n_max);
            finearith::FineParams params(p, r);
            params.require_strong();
            std::vector<finearith::Classification> rows;
            for (std::int64_t i = 0; i <= n_max; ++i)
                rows.push_back(finearith::classify(params, i));
            if (format == "csv") {
                std::cout << "n,even,odd,excess,verdict\n";
                for (const auto& c : rows)
                    std::cout << c.n << "," << c.parity.even << "," << c.parity.odd
                              << "," << c.excess_value << ","
                              << finearith::verdict_name(c.verdict) << "\n";
            } else {
                json data = json::array();
                for (const auto& c : rows)
                    data.push_back({{"n", c.n},
                                    {"even", c.parity.even},
                                    {"odd", c.parity.odd},
                                    {"excess", c.excess_value},
                                    {"verdict", finearith::verdict_name(c.verdict)}});
                emit("classify", {{"p", p}, {"r", r}, {"n_max", n_max}}, data, "ok");
            }
            return 0;
        }

        if (*verify) {
            check_cap(n_max);
            finearith::VerificationReport rep;
            if (identity == "andrews") {
                if (n_max > 200)
                    throw UsageError("andrews verification capped at n-max 200");
                rep = finearith::verify_andrews(static_cast<int>(n_max),
                                                static_cast<int>(2 * n_max + 2));
            } else {
                if (verify->count("--p") == 0 || verify->count("--r") == 0)
                    throw UsageError("verify " + identity + " requires --p and --r");
                finearith::FineParams params(p, r);
                if (identity == "fine1")
                    rep = finearith::verify_fine1(params, n_max);
                else if (identity == "thm1")
                    rep = finearith::verify_thm1(params, n_max);
                else if (identity == "fine2" || identity == "thm2")
                    rep = finearith::verify_thm2(params, n_max);
                else
                    rep = finearith::verify_cor2(params, n_max);
            }
            emit("verify", {{"identity", identity}, {"n_max", n_max}},
                 report_to_json(rep), rep.pass ? "ok" : "fail");
            return rep.pass ? 0 : 1;
        }

        if (*sweep_cmd) {
            check_cap(n_max);
            const auto reports = finearith::sweep(p_max, n_max);
            json data = json::array();
            bool all_pass = true;
            for (const auto& rep : reports) {
                data.push_back(report_to_json(rep));
                all_pass = all_pass && rep.pass;
            }
            emit("sweep", {{"p_max", p_max}, {"n_max", n_max}}, data,
                 all_pass ? "ok" : "fail");
            return all_pass ? 0 : 1;
        }
    } catch (const finearith::invariant_error& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        emit(app.get_subcommands().front()->get_name(), json::object(),
             {{"message", e.what()}}, "error");
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        emit(app.get_subcommands().front()->get_name(), json::object(),
             {{"message", e.what()}}, "error");
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        emit(app.get_subcommands().front()->get_name(), json::object(),
             {{"message", e.what()}}, "error");
        return 2;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
