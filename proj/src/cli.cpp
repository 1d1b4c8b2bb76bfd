#include "tschakaloff/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "tschakaloff/approximants.hpp"
#include "tschakaloff/asymptotics.hpp"
#include "tschakaloff/report.hpp"
#include "tschakaloff/series.hpp"

namespace tschakaloff::cli {

void RunConfig::validate() const
{
    if (q.is_zero() || z.is_zero()) {
        throw DomainError("q and z must be nonzero");
    }
    if (abs(q) <= Rational(1)) {
        throw DomainError("|q| must exceed 1, got q = " + q.str());
    }
    if (n_max < 1) {
        throw DomainError("--n-max must be >= 1");
    }
    if (precision_width.sign() <= 0) {
        throw DomainError("--width must be positive");
    }
    if (b && *b < 1) {
        throw DomainError("--b must be >= 1");
    }
    if (max_terms < 1) {
        throw DomainError("--max-terms must be >= 1");
    }
}

int exit_code_for(std::exception_ptr error)
{
    try {
        std::rethrow_exception(error);
    } catch (const ParseError &) {
        return exit_usage;
    } catch (const DomainError &) {
        return exit_usage;
    } catch (const PrecisionExhausted &) {
        return exit_exhausted;
    } catch (const NotFound &) {
        return exit_exhausted;
    } catch (const EstimationError &) {
        return exit_exhausted;
    } catch (const InvariantViolation &) {
        return exit_internal;
    } catch (...) {
        return exit_internal;
    }
}

namespace {

const char *const holds_verdict = "γ < γ0: Theorem hypothesis holds";
const char *const fails_verdict = "γ ≥ γ0: Theorem hypothesis fails";
const char *const undecided_verdict = "γ vs γ0 undecided at the width floor";
const char *const proof_statement = "0 < |b·Ĩ_n| < 1, hence T_q(z) ≠ a/b for all integers a";

struct RawOptions {
    std::string q;
    std::string z;
    long n_max = 40;
    std::string width;
    std::string format = "text";
    std::string b;
    std::string out_path;
    long max_terms = 100000;
    unsigned jobs = 0;
};

RunConfig to_config(const RawOptions &raw)
{
    RunConfig cfg;
    cfg.q = parse_rational(raw.q);
    cfg.z = parse_rational(raw.z);
    cfg.n_max = raw.n_max;
    if (!raw.width.empty()) {
        cfg.precision_width = parse_rational(raw.width);
    }
    cfg.format = raw.format == "json" ? Format::json : (raw.format == "csv" ? Format::csv : Format::text);
    if (!raw.b.empty()) {
        const Rational b = parse_rational(raw.b);
        if (!b.is_integer()) {
            throw ParseError("--b must be an integer");
        }
        cfg.b = b.num();
    }
    cfg.max_terms = raw.max_terms;
    cfg.jobs = raw.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : raw.jobs;
    cfg.validate();
    return cfg;
}

SeriesTermBudget budget_of(const RunConfig &cfg)
{
    return {cfg.max_terms, cfg.precision_width};
}

std::string verdict_text(Hypothesis h)
{
    switch (h) {
    case Hypothesis::holds:
        return holds_verdict;
    case Hypothesis::fails:
        return fails_verdict;
    case Hypothesis::indeterminate:
        break;
    }
    return undecided_verdict;
}

std::string approx_interval(const RationalInterval &x)
{
    return "[" + to_scientific(x.lo()) + ", " + to_scientific(x.hi()) + "]";
}

int cmd_eval(const RunConfig &cfg, std::ostream &out)
{
    const ProblemInstance inst(cfg.q, cfg.z);
    const auto T = tschakaloff_enclosure(inst, budget_of(cfg));
    switch (cfg.format) {
    case Format::json: {
        Json j;
        j["q"] = cfg.q.str();
        j["z"] = cfg.z.str();
        j["lo"] = T.lo().str();
        j["hi"] = T.hi().str();
        j["width"] = T.width().str();
        j["lo_approx"] = to_scientific(T.lo());
        j["hi_approx"] = to_scientific(T.hi());
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "q,z,lo,hi,width,lo_approx,hi_approx\n"
            << cfg.q << ',' << cfg.z << ',' << T.lo() << ',' << T.hi() << ',' << T.width() << ','
            << to_scientific(T.lo()) << ',' << to_scientific(T.hi()) << '\n';
        break;
    case Format::text:
        out << "T_q(z) for q = " << cfg.q << ", z = " << cfg.z << '\n'
            << "lo     = " << T.lo() << '\n'
            << "hi     = " << T.hi() << '\n'
            << "width  = " << T.width() << '\n'
            << "approx = " << approx_interval(T) << '\n';
        break;
    }
    return exit_ok;
}

int cmd_table(const RunConfig &cfg, std::ostream &out)
{
    const ProblemInstance inst(cfg.q, cfg.z);
    const auto records = compute_records(inst, 1, cfg.n_max, budget_of(cfg), cfg.jobs);
    switch (cfg.format) {
    case Format::json:
        out << records_to_json_text(records);
        break;
    case Format::csv:
        out << record_csv_header() << '\n';
        for (const auto &rec : records) {
            out << record_csv_row(rec) << '\n';
        }
        break;
    case Format::text:
        out << "approximants for q = " << cfg.q << ", z = " << cfg.z << '\n';
        out << std::left << std::setw(5) << "n" << std::setw(5) << "m" << std::setw(9) << "nonzero"
            << std::setw(10) << "bits(A)" << std::setw(10) << "bits(B)" << "I~_n enclosure (approx)\n";
        for (const auto &rec : records) {
            out << std::left << std::setw(5) << rec.n << std::setw(5) << rec.m << std::setw(9)
                << (rec.nonzero_certified ? "yes" : "no") << std::setw(10) << bit_length(rec.A) << std::setw(10)
                << bit_length(rec.B) << approx_interval(rec.I_tilde) << '\n';
        }
        break;
    }
    return exit_ok;
}

int cmd_asymptotics(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    const ProblemInstance inst(cfg.q, cfg.z);
    const auto hyp = hypothesis_check(inst);
    const auto records = compute_records(inst, 1, cfg.n_max, budget_of(cfg), cfg.jobs);
    const auto exps = empirical_exponents(records, inst);
    for (const auto &notice : exps.notices) {
        err << "notice: " << notice << '\n';
    }
    std::optional<MeasureEstimate> measure;
    std::string measure_note;
    try {
        measure = estimate_measure(records, inst);
    } catch (const EstimationError &e) {
        measure_note = e.what();
    }

    switch (cfg.format) {
    case Format::json: {
        Json j;
        j["q"] = cfg.q.str();
        j["z"] = cfg.z.str();
        j["gamma"] = interval_to_json(hyp.gamma);
        j["gamma0"] = interval_to_json(hyp.gamma0);
        j["hypothesis"] = hypothesis_name(hyp.verdict);
        j["verdict"] = verdict_text(hyp.verdict);
        Json rows = Json::array();
        for (const auto &r : exps.reports) {
            rows.push_back(exponent_report_to_json(r));
        }
        j["reports"] = rows;
        j["notices"] = exps.notices;
        j["measure"] = measure ? measure_to_json(*measure) : Json(nullptr);
        if (!measure) {
            j["measure_note"] = measure_note;
        }
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "# gamma " << approx_interval(hyp.gamma) << '\n'
            << "# gamma0 " << approx_interval(hyp.gamma0) << '\n'
            << "# verdict " << verdict_text(hyp.verdict) << '\n';
        if (measure) {
            out << "# empirical_exponent " << to_scientific(measure->empirical_exponent) << '\n';
        }
        out << "n,empirical_B,empirical_I,theoretical_B_lo,theoretical_B_hi,theoretical_I_lo,theoretical_I_hi\n";
        for (const auto &r : exps.reports) {
            out << r.n << ',' << to_scientific(r.empirical_B) << ',' << to_scientific(r.empirical_I) << ','
                << to_scientific(r.theoretical_B.lo()) << ',' << to_scientific(r.theoretical_B.hi()) << ','
                << to_scientific(r.theoretical_I.lo()) << ',' << to_scientific(r.theoretical_I.hi()) << '\n';
        }
        break;
    case Format::text:
        out << "asymptotics for q = " << cfg.q << ", z = " << cfg.z << '\n'
            << "gamma   in " << approx_interval(hyp.gamma) << '\n'
            << "gamma0  in " << approx_interval(hyp.gamma0) << '\n'
            << "verdict: " << verdict_text(hyp.verdict) << '\n';
        if (!exps.reports.empty()) {
            const auto &r0 = exps.reports.front();
            out << "theoretical_B in " << approx_interval(r0.theoretical_B) << '\n'
                << "theoretical_I in " << approx_interval(r0.theoretical_I) << '\n';
        }
        out << std::left << std::setw(6) << "n" << std::setw(30) << "empirical_B" << "empirical_I\n";
        for (const auto &r : exps.reports) {
            out << std::left << std::setw(6) << r.n << std::setw(30) << to_scientific(r.empirical_B)
                << to_scientific(r.empirical_I) << '\n';
        }
        if (measure) {
            out << "fit over n in [" << measure->fit_first_n << ", " << measure->fit_last_n << "]\n"
                << "c_hat              = " << to_scientific(measure->c_hat) << '\n'
                << "empirical exponent = " << to_scientific(measure->empirical_exponent) << '\n';
            if (measure->predicted_exponent) {
                out << "predicted exponent in " << approx_interval(*measure->predicted_exponent) << '\n';
            }
            out << "ln|B_last|/ln|B_prev| = " << to_scientific(measure->last_log_ratio) << '\n';
        } else {
            out << "measure estimate unavailable: " << measure_note << '\n';
        }
        break;
    }
    return exit_ok;
}

int cmd_prove(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    if (!cfg.b) {
        throw DomainError("prove requires --b");
    }
    const ProblemInstance inst(cfg.q, cfg.z);
    const auto hyp = hypothesis_check(inst);
    if (hyp.verdict != Hypothesis::holds) {
        err << verdict_text(hyp.verdict) << ", method inapplicable\n";
        return exit_hypothesis;
    }
    const Integer &b = *cfg.b;
    const auto w = witness_for_denominator(inst, b, cfg.n_max, budget_of(cfg));
    const auto &rec = w.record;
    switch (cfg.format) {
    case Format::json: {
        Json j;
        j["q"] = cfg.q.str();
        j["z"] = cfg.z.str();
        j["b"] = b.get_str();
        j["n"] = rec.n;
        j["m"] = rec.m;
        j["A"] = rec.A.get_str();
        j["B"] = rec.B.get_str();
        j["bI_lo"] = w.scaled.lo().str();
        j["bI_hi"] = w.scaled.hi().str();
        j["bI_lo_approx"] = to_scientific(w.scaled.lo());
        j["bI_hi_approx"] = to_scientific(w.scaled.hi());
        j["gamma"] = interval_to_json(hyp.gamma);
        j["statement"] = proof_statement;
        out << j.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "q,z,b,n,m,A,B,bI_lo,bI_hi\n"
            << cfg.q << ',' << cfg.z << ',' << b << ',' << rec.n << ',' << rec.m << ',' << rec.A << ',' << rec.B
            << ',' << w.scaled.lo() << ',' << w.scaled.hi() << '\n';
        break;
    case Format::text:
        out << "certificate for q = " << cfg.q << ", z = " << cfg.z << ", b = " << b << '\n'
            << "gamma in " << approx_interval(hyp.gamma) << " (" << verdict_text(hyp.verdict) << ")\n"
            << "witness n = " << rec.n << " (m = " << rec.m << ")\n"
            << "A_n = " << rec.A << '\n'
            << "B_n = " << rec.B << '\n'
            << "b*I~_n lo = " << w.scaled.lo() << '\n'
            << "b*I~_n hi = " << w.scaled.hi() << '\n'
            << "b*I~_n in " << approx_interval(w.scaled) << '\n'
            << proof_statement << '\n';
        break;
    }
    return exit_ok;
}

void add_common(CLI::App *cmd, RawOptions &raw, bool with_n_max)
{
    cmd->add_option("--q", raw.q, "q as [-]num/den, |q| > 1")->required();
    cmd->add_option("--z", raw.z, "z as [-]num/den, nonzero")->required();
    if (with_n_max) {
        cmd->add_option("--n-max", raw.n_max, "largest n to compute (default 40)");
    }
    cmd->add_option("--width", raw.width, "target enclosure width as num/den (default 2^-64)");
    cmd->add_option("--format", raw.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", raw.out_path, "write results to this file instead of stdout");
    cmd->add_option("--max-terms", raw.max_terms, "series term budget (default 100000)");
    cmd->add_option("--jobs", raw.jobs, "worker threads for per-n records (default: hardware threads)");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact approximants and irrationality certificates for T_q(z) = sum z^n q^{-n(n-1)/2}",
                 "tschakaloff"};
    app.require_subcommand(1);
    RawOptions raw;
    auto *eval = app.add_subcommand("eval", "enclose T_q(z)");
    auto *table = app.add_subcommand("table", "approximant records for n = 1..n_max");
    auto *asym = app.add_subcommand("asymptotics", "empirical vs limiting growth exponents");
    auto *prove = app.add_subcommand("prove", "certificate that T_q(z) != a/b for a given b");
    add_common(eval, raw, false);
    add_common(table, raw, true);
    add_common(asym, raw, true);
    add_common(prove, raw, true);
    prove->add_option("--b", raw.b, "denominator b >= 1")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const RunConfig cfg = to_config(raw);
        std::ofstream file;
        if (!raw.out_path.empty()) {
            file.open(raw.out_path);
            if (!file) {
                err << "error: cannot open " << raw.out_path << " for writing\n";
                return exit_usage;
            }
        }
        std::ostream &sink = raw.out_path.empty() ? out : file;
        // Buffer so a failing command never leaves partial output behind.
        std::ostringstream buffer;
        int code = exit_ok;
        if (eval->parsed()) {
            code = cmd_eval(cfg, buffer);
        } else if (table->parsed()) {
            code = cmd_table(cfg, buffer);
        } else if (asym->parsed()) {
            code = cmd_asymptotics(cfg, buffer, err);
        } else {
            code = cmd_prove(cfg, buffer, err);
        }
        sink << buffer.str();
        return code;
    } catch (const std::exception &e) {
        const int code = exit_code_for(std::current_exception());
        err << "error: " << e.what() << '\n';
        return code;
    }
}

} // namespace tschakaloff::cli
