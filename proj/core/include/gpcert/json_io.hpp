#pragma once

#include <nlohmann/json.hpp>

#include "gpcert/case_engine.hpp"
#include "gpcert/certify.hpp"
#include "gpcert/characters.hpp"
#include "gpcert/intervals.hpp"
#include "gpcert/ntcore.hpp"
#include "gpcert/optimize.hpp"
#include "gpcert/sieve.hpp"
#include "gpcert/win_chain.hpp"

namespace gpcert::io {

using nlohmann::json;

/// {lo, hi} as outward-rounded decimal strings.
json enclosure(const cert::CertifiedReal& x, int digits = 17);

json to_json(const nt::Factorization& f);
json to_json(const certify::Certificate& c);
json to_json(const certify::CaseReport& rep);
json to_json(const certify::WinChainReport& rep);
json to_json(const certify::WinSweep& sweep);
json to_json(const certify::OptimizeResult& res);
json to_json(const certify::SoundnessReport& rep);
json to_json(const intervals::ClaimReport& rep);
json to_json(const chars::CharsumRecord& rec);
json to_json(const sieve::SieveSweepSummary& s);

std::string rational_string(const Rational& x);

} // namespace gpcert::io
