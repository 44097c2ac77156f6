#pragma once

// Uniform JSON report envelope for CLI outputs, plus serializers for
// every result type a command can emit. Envelope:
//   {"tool": ..., "version": ..., "command": ..., "config": {...},
//    "result": {...}}
// Rendering is byte-deterministic for identical inputs: objects are
// serialized with sorted keys, rationals as "num/den" strings, and
// arbitrary-precision counts as decimal strings.

#include <string>
#include <vector>

#include "palcheck/certify.hpp"
#include "palcheck/colorability.hpp"
#include "palcheck/hom.hpp"
#include "palcheck/json_io.hpp"
#include "palcheck/oracles.hpp"
#include "palcheck/reduced.hpp"
#include "palcheck/uniform.hpp"

namespace palcheck {

Json report_envelope(const std::string& command, const Json& config,
                     const Json& result);

// dump(2) plus a trailing newline; the byte-identity contract is on
// this exact rendering.
std::string render_report(const Json& report);

void write_report_file(const std::string& path, const Json& report);

Json hom_result_json(const Palette& src, const Palette& dst,
                     const HomResult& h);
Json shadow_coloring_json(const Palette& p, const ShadowColoring& phi);
Json ordered_color_result_json(const Palette& p,
                               const OrderedColorResult& res);
Json color_result_json(const Palette& p, const ColorResult& res);
Json dense_check_json(const DenseCheck& c);
Json reduced_map_json(const ReducedMap& m);
Json contract_result_json(const ContractResult& r);
Json density_report_json(const DensityReport& r);
Json arc_oracle_json(const ArcOracleResult& r);
Json check_result_json(const CheckResult& c);
Json certificate_report_json(const CertificateReport& rep);

}  // namespace palcheck
