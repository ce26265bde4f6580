#include "bitflip/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace bitflip {

double round12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

Json report_skeleton(const std::string& command) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    return doc;
}

Json input_section(const std::string& path, const BinaryMatrix& h) {
    Json j;
    j["path"] = path;
    j["digest"] = matrix_digest(h);
    j["rows"] = h.rows();
    j["cols"] = h.cols();
    return j;
}

Json code_params_section(const BinaryMatrix& h, bool with_min_distance) {
    Json j;
    j["op"] = "rank/nullspace_basis";
    const CodeParams params = code_parameters(h);
    j["n"] = params.n;
    j["rank"] = params.n - params.k;
    j["k"] = params.k;
    if (with_min_distance) {
        Json d;
        d["op"] = "min_distance";
        try {
            d["value"] = min_distance(h);
        } catch (const Error& e) {
            d["error"] = e.what();
        }
        j["d_min"] = d;
    }
    return j;
}

Json regularity_section(const BinaryMatrix& h) {
    Json j;
    j["op"] = "column_blocks";
    try {
        const BlockSystem bs = column_blocks(h);
        j["left_regular"] = true;
        j["column_weight"] = bs.block_size;
    } catch (const NotLeftRegular& e) {
        j["left_regular"] = false;
        Json hist;
        for (auto [w, cnt] : e.histogram) hist[std::to_string(w)] = cnt;
        j["column_weight_histogram"] = hist;
    }
    return j;
}

Json partial_geometry_section(const BlockSystem& blocks) {
    Json j;
    j["op"] = "max_pairwise_intersection";
    const std::size_t s = max_pairwise_intersection(blocks);
    j["s"] = s;
    j["partial_geometry"] = s <= 1;
    Json bound;
    bound["op"] = "design_pseudoweight_bound";
    if (s >= 1) {
        const Rational b = design_pseudoweight_bound(blocks.block_size, s);
        bound["value"] = b.to_string();
        bound["real"] = round12(b.to_double());
    } else {
        bound["note"] = "blocks are pairwise disjoint; no intersection parameter";
    }
    j["design_pseudoweight_bound"] = bound;
    return j;
}

Json trace_json(const std::vector<FlipStep>& trace) {
    Json arr = Json::array();
    for (const auto& step : trace) {
        Json s;
        s["flips"] = step.flipped;
        s["unsat_before"] = step.unsat_before;
        s["syndrome_after"] = step.syndrome_after;
        arr.push_back(std::move(s));
    }
    return arr;
}

Json decode_section(const DecodeResult& result, const DecoderConfig& config, bool with_trace) {
    Json j;
    j["op"] = "decode";
    j["variant"] = to_string(config.variant);
    switch (config.tie_break.kind) {
        case TieBreak::Kind::LowestIndex: j["tie_break"] = "lowest"; break;
        case TieBreak::Kind::SeededRandom:
            j["tie_break"] = "seed:" + std::to_string(config.tie_break.seed);
            break;
        case TieBreak::Kind::ForcedFirst:
            j["tie_break"] = "first:" + std::to_string(config.tie_break.forced_index);
            break;
    }
    j["status"] = to_string(result.status);
    j["estimated_error"] = result.estimated_error.indices();
    j["initial_syndrome_weight"] = result.initial_syndrome_weight;
    j["flip_count"] = result.trace.size();
    if (with_trace) {
        j["trace"] = trace_json(result.trace);
        Json weights = Json::array();
        weights.push_back(result.initial_syndrome_weight);
        for (const auto& step : result.trace) weights.push_back(step.syndrome_after);
        j["syndrome_weights"] = weights;
    }
    return j;
}

Json verify_section(const VerifyReport& report, std::uint64_t budget) {
    Json j;
    j["op"] = "verify_exhaustive";
    j["mode"] = to_string(report.mode);
    j["t"] = report.t;
    j["budget"] = budget;
    j["patterns_checked"] = report.patterns_checked;
    j["failure_count"] = report.failures.size();
    j["verdict"] = report.pass() ? "pass" : "fail";
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        Json e;
        e["error_support"] = f.error_support;
        e["witness"] = trace_json(f.witness);
        failures.push_back(std::move(e));
    }
    j["failures"] = failures;
    return j;
}

Json certificate_section(const Certificate& cert) {
    Json j;
    j["op"] = "certify_pseudoredundancy";
    j["code_digest"] = cert.code_digest;
    j["candidate_digest"] = cert.candidate_digest;
    j["rows"] = cert.rows;
    j["cols"] = cert.cols;
    j["column_weight"] = cert.column_weight;
    j["d_min"] = cert.d_min;
    j["t_target"] = cert.t_target;
    j["mode"] = cert.mode;
    j["patterns_checked"] = cert.patterns_checked;
    j["verdict"] = cert.pass ? "pass" : "fail";
    if (cert.pass) {
        j["pseudoredundancy_upper_bound"] = cert.upper_bound;
    } else {
        j["failed_clause"] = cert.failed_clause;
        j["failure_detail"] = cert.failure_detail;
    }
    j["scope"] = "left-regular parity-check matrices only";
    Json meta;
    for (const auto& [k, v] : cert.metadata) meta[k] = v;
    j["metadata"] = meta;
    return j;
}

Json spectral_section(const BinaryMatrix& h, double tol) {
    Json j;
    j["op"] = "top_two_eigenvalues";
    const BiregularityInfo info = check_biregular_connected(h);
    const TopEigenvalues ev = top_two_eigenvalues(h, tol);
    j["n"] = h.cols();
    j["biregular"] = info.biregular;
    j["d_right"] = info.d_right;
    j["connected"] = info.connected;
    j["lambda1"] = round12(ev.lambda1);
    j["lambda2"] = round12(ev.lambda2);
    j["lambda2_semantics"] = ev.lambda2_semantics;

    Json dist;
    dist["op"] = "tanner_distance_bound";
    try {
        const BlockSystem bs = column_blocks(h);
        const double bound = tanner_distance_bound(h.cols(), bs.block_size, ev.lambda1, ev.lambda2);
        dist["value"] = round12(bound);
        dist["ceiling"] = bound_ceiling(bound);
    } catch (const Error& e) {
        dist["error"] = e.what();
    }
    j["tanner_distance_bound"] = dist;
    return j;
}

Json expansion_section(const BlockSystem& blocks, std::size_t t_max, const Rational& alpha,
                       const ExpansionResult& result, std::uint64_t budget) {
    Json j;
    j["op"] = "expansion_check";
    j["t_max"] = t_max;
    j["alpha"] = alpha.to_string();
    j["verdict"] = result.ok ? "pass" : "fail";
    if (!result.ok) {
        j["failing_t"] = result.failing_t;
        j["min_union"] = result.witness.size;
        j["witness_blocks"] = result.witness.blocks;
    }
    Json per_t = Json::array();
    for (std::size_t t = 1; t <= (result.ok ? t_max : result.failing_t); ++t) {
        Json row;
        row["t"] = t;
        row["op"] = "min_union_size";
        const MinUnion mu = min_union_size(blocks, t, budget);
        row["min_union"] = mu.size;
        row["counting_bound"] = static_cast<std::int64_t>(blocks.block_size * t) -
                                static_cast<std::int64_t>(binomial(t, 2));
        Json hist;
        for (auto [size, count] : union_size_histogram(blocks, t, budget))
            hist[std::to_string(size)] = count;
        row["union_size_histogram"] = hist;
        per_t.push_back(std::move(row));
    }
    j["per_t"] = per_t;
    return j;
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace bitflip
