#pragma once

#include <string>

#include "json.hpp"

#include "bitflip/decoder.hpp"
#include "bitflip/geometry.hpp"
#include "bitflip/gf2.hpp"
#include "bitflip/spectral.hpp"
#include "bitflip/verifier.hpp"

namespace bitflip {

// Reports are single JSON documents with stable key order; every section
// carries the name of the operation that produced its numbers. Timing and
// worker counts never enter a report, so reruns are byte-identical.
using Json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1";

double round12(double v);  // 12 significant digits

Json report_skeleton(const std::string& command);
Json input_section(const std::string& path, const BinaryMatrix& h);
Json code_params_section(const BinaryMatrix& h, bool with_min_distance);
Json regularity_section(const BinaryMatrix& h);
Json partial_geometry_section(const BlockSystem& blocks);
Json trace_json(const std::vector<FlipStep>& trace);
Json decode_section(const DecodeResult& result, const DecoderConfig& config, bool with_trace);
Json verify_section(const VerifyReport& report, std::uint64_t budget);
Json certificate_section(const Certificate& cert);
Json spectral_section(const BinaryMatrix& h, double tol);
Json expansion_section(const BlockSystem& blocks, std::size_t t_max, const Rational& alpha,
                       const ExpansionResult& result, std::uint64_t budget);

std::string render(const Json& doc);

}  // namespace bitflip
