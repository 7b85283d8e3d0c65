#include "gpcert/json_io.hpp"

#include <sstream>

namespace gpcert::io {

std::string rational_string(const Rational& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

json enclosure(const cert::CertifiedReal& x, int digits)
{
    return {{"lo", x.lo_string(digits)}, {"hi", x.hi_string(digits)}};
}

json to_json(const nt::Factorization& f)
{
    json out = json::array();
    for (const auto& pp : f.entries()) {
        if (pp.prime >> 64 == 0) {
            out.push_back({static_cast<u64>(pp.prime), pp.exponent});
        } else {
            out.push_back({to_string(pp.prime), pp.exponent});
        }
    }
    return out;
}

json to_json(const certify::Certificate& c)
{
    json j;
    j["p_spec"] = c.p_spec.describe();
    j["r"] = c.r;
    if (c.h) {
        j["h"] = *c.h;
    } else {
        j["h"] = c.h_desc;
    }
    j["H"] = enclosure(c.H);
    j["sieve"] = {{"e_desc", c.sieve.e_desc},
                  {"omega", c.sieve.omega},
                  {"s", c.sieve.s},
                  {"delta", rational_string(c.sieve.delta)}};
    j["lhs"] = enclosure(c.lhs);
    j["rhs"] = enclosure(c.rhs);
    j["verdict"] = certify::to_string(c.verdict);
    j["precision"] = c.precision;
    j["provenance"] = c.provenance;
    if (!c.notes.empty()) {
        j["notes"] = c.notes;
    }
    return j;
}

json to_json(const certify::CaseReport& rep)
{
    json rows = json::array();
    for (const auto& row : rep.rows) {
        rows.push_back({{"regime", row.regime},
                        {"omega", row.omega},
                        {"s", row.s},
                        {"delta_lo", rational_string(row.delta_lo)},
                        {"lhs", enclosure(row.lhs, 10)},
                        {"rhs", enclosure(row.rhs, 10)},
                        {"margin", row.margin},
                        {"pass", row.pass},
                        {"note", row.note}});
    }
    return {{"target", certify::to_string(rep.target)},
            {"delta_policy", certify::to_string(rep.delta)},
            {"condition", rep.condition},
            {"constant", enclosure(rep.constant, 10)},
            {"rows", rows},
            {"pass", rep.pass}};
}

json to_json(const certify::WinChainReport& rep)
{
    json checks = json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"relation", c.relation},
                          {"lhs", enclosure(c.lhs, 10)},
                          {"rhs", enclosure(c.rhs, 10)},
                          {"pass", c.pass},
                          {"informational", c.informational},
                          {"note", c.note}});
    }
    json j{{"variant", rep.variant},
           {"r", rep.r},
           {"P0", rep.P0.str()},
           {"regime_start", rep.P.str().size() > 30 ? "2^" + std::to_string(boost::multiprecision::msb(rep.P)) + "+1" : rep.P.str()},
           {"c_h", enclosure(rep.c_h, 10)},
           {"checks", checks},
           {"notes", rep.notes},
           {"pass", rep.pass}};
    if (rep.variant == "unsieved") {
        j["omega"] = rep.omega;
        j["fermat"] = rep.fermat;
    } else {
        j["F_min"] = rational_string(rep.F_min);
    }
    if (!rep.first_failure.empty()) {
        j["first_failure"] = rep.first_failure;
    }
    return j;
}

json to_json(const certify::WinSweep& sweep)
{
    json reports = json::array();
    for (const auto& r : sweep.reports) {
        reports.push_back(to_json(r));
    }
    return {{"reports", reports}, {"pass", sweep.pass}};
}

json to_json(const certify::OptimizeResult& res)
{
    json j{{"feasible", res.feasible}, {"candidates", res.candidates}};
    if (res.best) {
        j["certificate"] = to_json(*res.best);
    } else {
        j["reason"] = res.reason;
    }
    return j;
}

json to_json(const certify::SoundnessReport& rep)
{
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json row{{"p", e.p}, {"omega", e.omega}, {"g", e.g}, {"certified", e.certified}};
        if (e.certified) {
            row["r"] = e.r;
            row["s"] = e.s;
            row["h"] = e.h;
            row["H_lo"] = e.H;
        }
        entries.push_back(row);
    }
    return {{"primes", rep.primes},       {"certified", rep.certified},
            {"skipped", rep.skipped},     {"contradictions", rep.contradictions},
            {"min_H_over_g", rep.min_ratio}, {"median_H_over_g", rep.median_ratio},
            {"entries", entries},         {"pass", rep.pass}};
}

json to_json(const intervals::ClaimReport& rep)
{
    return {{"claim", rep.claim},
            {"X_range", {rep.x_from, rep.x_to}},
            {"worst_slack", rep.worst_slack},
            {"worst_at", rep.worst_at},
            {"segments", rep.segments},
            {"pass", rep.pass}};
}

json to_json(const chars::CharsumRecord& rec)
{
    return {{"p", rec.p},       {"j", rec.j},         {"order", rec.order}, {"h", rec.h},
            {"r", rec.r},       {"exact", rec.exact}, {"bound", rec.bound}, {"slack", rec.slack}};
}

json to_json(const sieve::SieveSweepSummary& s)
{
    return {{"primes_checked", s.primes_checked},
            {"configs_checked", s.configs_checked},
            {"points_checked", s.points_checked},
            {"violations", s.violations},
            {"worst_slack", s.worst_bound_slack},
            {"worst_identity_residual", s.worst_identity_slack}};
}

} // namespace gpcert::io
