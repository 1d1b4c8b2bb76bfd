#include "tschakaloff/report.hpp"

#include <sstream>

namespace tschakaloff {

Json record_to_json(const ApproximantRecord &rec)
{
    Json j;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["A"] = rec.A.get_str();
    j["B"] = rec.B.get_str();
    j["I_lo"] = rec.I_tilde.lo().str();
    j["I_hi"] = rec.I_tilde.hi().str();
    j["nonzero"] = rec.nonzero_certified;
    return j;
}

namespace {

Integer parse_integer(const std::string &s)
{
    const Rational r = parse_rational(s);
    if (!r.is_integer()) {
        throw ParseError("expected an integer, got '" + s + "'");
    }
    return r.num();
}

} // namespace

ApproximantRecord record_from_json(const Json &j)
{
    try {
        ApproximantRecord rec;
        rec.n = j.at("n").get<long>();
        rec.m = j.at("m").get<long>();
        rec.A = parse_integer(j.at("A").get<std::string>());
        rec.B = parse_integer(j.at("B").get<std::string>());
        rec.I_tilde = RationalInterval(parse_rational(j.at("I_lo").get<std::string>()),
                                       parse_rational(j.at("I_hi").get<std::string>()));
        rec.nonzero_certified = j.at("nonzero").get<bool>();
        return rec;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("bad record JSON: ") + e.what());
    } catch (const DomainError &e) {
        throw ParseError(std::string("bad record JSON: ") + e.what());
    }
}

std::string records_to_json_text(std::span<const ApproximantRecord> records)
{
    std::string out = "[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        out += i == 0 ? "\n" : ",\n";
        out += record_to_json(records[i]).dump();
    }
    out += records.empty() ? "]\n" : "\n]\n";
    return out;
}

std::vector<ApproximantRecord> records_from_json_text(const std::string &text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError("expected a JSON array of records");
    }
    std::vector<ApproximantRecord> out;
    for (const auto &j : doc) {
        out.push_back(record_from_json(j));
    }
    return out;
}

std::string record_csv_header()
{
    return "n,m,A,B,I_lo,I_hi,nonzero,I_lo_approx,I_hi_approx";
}

std::string record_csv_row(const ApproximantRecord &rec)
{
    std::ostringstream os;
    os << rec.n << ',' << rec.m << ',' << rec.A << ',' << rec.B << ',' << rec.I_tilde.lo() << ','
       << rec.I_tilde.hi() << ',' << (rec.nonzero_certified ? "true" : "false") << ','
       << to_scientific(rec.I_tilde.lo()) << ',' << to_scientific(rec.I_tilde.hi());
    return os.str();
}

Json interval_to_json(const RationalInterval &x)
{
    Json j;
    j["lo"] = x.lo().str();
    j["hi"] = x.hi().str();
    j["lo_approx"] = to_scientific(x.lo());
    j["hi_approx"] = to_scientific(x.hi());
    return j;
}

Json exponent_report_to_json(const ExponentReport &r)
{
    Json j;
    j["n"] = r.n;
    j["empirical_B"] = to_scientific(r.empirical_B);
    j["empirical_I"] = to_scientific(r.empirical_I);
    j["theoretical_B_lo"] = to_scientific(r.theoretical_B.lo());
    j["theoretical_B_hi"] = to_scientific(r.theoretical_B.hi());
    j["theoretical_I_lo"] = to_scientific(r.theoretical_I.lo());
    j["theoretical_I_hi"] = to_scientific(r.theoretical_I.hi());
    return j;
}

Json measure_to_json(const MeasureEstimate &m)
{
    Json j;
    j["c_hat"] = to_scientific(m.c_hat);
    j["empirical_exponent"] = to_scientific(m.empirical_exponent);
    if (m.predicted_exponent) {
        j["predicted_exponent"] = interval_to_json(*m.predicted_exponent);
    } else {
        j["predicted_exponent"] = nullptr;
    }
    j["last_log_ratio"] = to_scientific(m.last_log_ratio);
    j["fit_first_n"] = m.fit_first_n;
    j["fit_last_n"] = m.fit_last_n;
    return j;
}

std::string hypothesis_name(Hypothesis h)
{
    switch (h) {
    case Hypothesis::holds:
        return "holds";
    case Hypothesis::fails:
        return "fails";
    case Hypothesis::indeterminate:
        break;
    }
    return "indeterminate";
}

} // namespace tschakaloff
