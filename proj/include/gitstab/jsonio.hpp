#pragma once

#include <json.hpp>

#include "gitstab/classify2.hpp"
#include "gitstab/git.hpp"
#include "gitstab/henon.hpp"
#include "gitstab/ratmap.hpp"

// JSON payloads for every analysis; rationals are rendered as exact "p/q"
// strings so nothing is ever rounded.
namespace gitstab::jsonio {

using nlohmann::json;

json rat_json(const Rat& r);
json point_json(const std::vector<Rat>& p);
json residual_json(const std::vector<P2Residual>& rs);

json mu_report(const ProjMap& m, const WeightVector& w);
json certificate_json(const MuCertificate& c);
json destab_report(const ProjMap& m, bool strict);
json verify_report(const ProjMap& m, const WeightVector& w, MuSign expect);
json iterate_report(const ProjMap& m, int n);
json classify22_report(const ProjMap& m);
json line_image_report(const ProjMap& m, const LineP2& line);
json table_report(int N, int k, int d);
json henon_build_report(const HenonSpec& spec);
json audit_report(const HenonSpec& spec, unsigned long long seed, int per_class);
json map_report(const ProjMap& m);

}  // namespace gitstab::jsonio
