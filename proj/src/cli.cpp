#include "bitflip/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "bitflip/alist.hpp"
#include "bitflip/constructions.hpp"
#include "bitflip/field.hpp"
#include "bitflip/report.hpp"

namespace bitflip {

namespace {

std::string bitpoly_string(std::uint64_t f) {
    std::string s;
    for (int i = 63; i >= 0; --i) {
        if (!((f >> i) & 1)) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

std::string join(const std::vector<std::uint32_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<std::uint32_t> parse_index_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw Error("empty entry in index list '" + text + "'");
        std::size_t pos = 0;
        const unsigned long v = std::stoul(item, &pos);
        if (pos != item.size()) throw Error("bad index '" + item + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty()) throw Error("empty index list");
    return out;
}

TieBreak parse_tie_break(const std::string& text) {
    if (text == "lowest") return TieBreak::lowest();
    if (text.rfind("seed:", 0) == 0) return TieBreak::seeded(std::stoull(text.substr(5)));
    if (text.rfind("first:", 0) == 0)
        return TieBreak::forced_first(static_cast<std::uint32_t>(std::stoul(text.substr(6))));
    throw Error("bad tie-break '" + text + "' (expected lowest, seed:N or first:K)");
}

struct ConstructArgs {
    std::string family;
    std::uint32_t q = 0;
    std::uint32_t m = 0;
    std::string out_path;
};

int do_construct(const ConstructArgs& a, std::ostream& out) {
    BinaryMatrix h(1, 1);
    std::map<std::string, std::string> meta;
    meta["family"] = a.family;

    auto need_q = [&] {
        if (a.q == 0) throw Error("construct: family '" + a.family + "' requires --q");
        meta["q"] = std::to_string(a.q);
        const PrimePower pp = factor_prime_power(a.q);
        meta["field_modulus"] = Field(pp.p, pp.m).modulus_string();
    };
    auto need_m = [&] {
        if (a.m == 0) throw Error("construct: family '" + a.family + "' requires --m");
        meta["m"] = std::to_string(a.m);
        meta["primitive_polynomial"] = bitpoly_string(primitive_polynomial(a.m));
    };

    if (a.family == "pg") {
        need_q();
        h = projective_plane(a.q);
    } else if (a.family == "eg") {
        need_q();
        h = euclidean_punctured(a.q);
    } else if (a.family == "hamming-circulant") {
        need_m();
        h = hamming_circulant(a.m);
        meta["circulant_seed_support"] = join(hamming_circulant_seed(a.m).indices());
    } else if (a.family == "simplex-w3") {
        need_m();
        h = simplex_weight3_matrix(a.m);
    } else if (a.family == "simplex-circulant") {
        need_m();
        h = simplex_circulant(a.m);
        meta["circulant_seed_support"] = join(simplex_circulant_seed(a.m).indices());
    } else if (a.family == "fig1") {
        const auto [blocks, error] = fig1_instance();
        h = to_matrix(blocks);
        meta["error_support"] = join(error);
    } else {
        throw Error("construct: unknown family '" + a.family + "'");
    }

    write_alist_file(a.out_path, h);

    Json doc = report_skeleton("construct");
    doc["family"] = a.family;
    doc["output"] = input_section(a.out_path, h);
    Json jmeta;
    for (const auto& [k, v] : meta) jmeta[k] = v;
    doc["metadata"] = jmeta;
    out << render(doc);
    return 0;
}

int do_analyze(const std::string& path, bool with_d, std::ostream& out) {
    const BinaryMatrix h = read_alist_file(path);
    Json doc = report_skeleton("analyze");
    doc["input"] = input_section(path, h);
    doc["code_params"] = code_params_section(h, with_d);
    doc["regularity"] = regularity_section(h);
    try {
        const BlockSystem bs = column_blocks(h);
        if (bs.n() >= 2) doc["partial_geometry"] = partial_geometry_section(bs);
    } catch (const NotLeftRegular&) {
        // histogram already reported in the regularity section
    }
    out << render(doc);
    return 0;
}

struct DecodeArgs {
    std::string path;
    std::string error;
    std::string variant = "step";
    std::string tie_break = "lowest";
    bool trace = false;
};

int do_decode(const DecodeArgs& a, std::ostream& out) {
    const BinaryMatrix h = read_alist_file(a.path);
    const BlockSystem blocks = column_blocks(h);

    const std::vector<std::uint32_t> error = parse_index_list(a.error);
    for (auto i : error)
        if (i >= blocks.n()) throw Error("decode: error index " + std::to_string(i) + " out of range");

    DecoderConfig config;
    if (a.variant == "step")
        config.variant = Variant::StepByStep;
    else if (a.variant == "parallel")
        config.variant = Variant::Parallel;
    else
        throw Error("decode: bad variant '" + a.variant + "'");
    config.tie_break = parse_tie_break(a.tie_break);

    const SyndromeSet s0 = syndrome(blocks, error);
    const DecodeResult result = decode(blocks, s0, config);

    Json doc = report_skeleton("decode");
    doc["input"] = input_section(a.path, h);
    doc["error_support"] = error;
    doc["decode"] = decode_section(result, config, a.trace);
    out << render(doc);
    return result.status == DecodeStatus::Success ? 0 : 1;
}

struct VerifyArgs {
    std::string path;
    std::size_t t = 1;
    std::string mode = "adversarial";
    unsigned jobs = 1;
    std::uint64_t budget = kDefaultEnumerationBudget;
};

VerifyMode parse_mode(const std::string& text) {
    if (text == "fixed") return VerifyMode::fixed(DecoderConfig{});
    if (text == "adversarial") return VerifyMode::adversarial();
    if (text == "existential") return VerifyMode::existential();
    throw Error("bad mode '" + text + "'");
}

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const BinaryMatrix h = read_alist_file(a.path);
    const VerifyReport report = verify_exhaustive(h, a.t, parse_mode(a.mode), a.budget, a.jobs);

    Json doc = report_skeleton("verify");
    doc["input"] = input_section(a.path, h);
    doc["verify_report"] = verify_section(report, a.budget);
    out << render(doc);
    err << "verify: " << report.patterns_checked << " patterns in " << report.elapsed_seconds
        << " s\n";
    return report.pass() ? 0 : 1;
}

struct CertifyArgs {
    std::string path;
    std::string reference;
    unsigned jobs = 1;
    std::uint64_t budget = kDefaultEnumerationBudget;
};

int do_certify(const CertifyArgs& a, std::ostream& out) {
    const BinaryMatrix candidate = read_alist_file(a.path);
    const BinaryMatrix reference = a.reference.empty() ? candidate : read_alist_file(a.reference);

    std::map<std::string, std::string> meta;
    meta["candidate_source"] = a.path;
    meta["reference_source"] = a.reference.empty() ? "self" : a.reference;

    const Certificate cert =
        certify_pseudoredundancy(reference, candidate, a.budget, a.jobs, std::move(meta));

    Json doc = report_skeleton("certify");
    doc["input"] = input_section(a.path, candidate);
    doc["certificate"] = certificate_section(cert);
    out << render(doc);
    return cert.pass ? 0 : 1;
}

int do_spectral(const std::string& path, double tol, std::ostream& out) {
    const BinaryMatrix h = read_alist_file(path);
    Json doc = report_skeleton("spectral");
    doc["input"] = input_section(path, h);
    doc["spectral_summary"] = spectral_section(h, tol);
    out << render(doc);
    return 0;
}

struct ExpanderArgs {
    std::string path;
    std::size_t t_max = 1;
    std::string alpha;
    std::uint64_t budget = kDefaultEnumerationBudget;
};

int do_expander(const ExpanderArgs& a, std::ostream& out) {
    const BinaryMatrix h = read_alist_file(a.path);
    const BlockSystem blocks = column_blocks(h);
    const Rational alpha = Rational::parse(a.alpha);
    const ExpansionResult result = expansion_check(blocks, a.t_max, alpha, a.budget);

    Json doc = report_skeleton("expander");
    doc["input"] = input_section(a.path, h);
    doc["expansion"] = expansion_section(blocks, a.t_max, alpha, result, a.budget);
    out << render(doc);
    return result.ok ? 0 : 1;
}

int do_failure_scan(const std::string& path, std::size_t t, std::ostream& out) {
    const BinaryMatrix h = read_alist_file(path);
    const BlockSystem blocks = column_blocks(h);

    Json doc = report_skeleton("failure-scan");
    doc["input"] = input_section(path, h);
    bool clean = false;

    if (t == 2) {
        const std::vector<PairFailure> failures = two_error_scan(blocks);
        Json j;
        j["op"] = "two_error_scan";
        j["failure_count"] = failures.size();
        Json arr = Json::array();
        for (const auto& f : failures) {
            Json e;
            e["pair"] = {f.i, f.j};
            e["witness_block"] = f.witness_block;
            arr.push_back(std::move(e));
        }
        j["failing_pairs"] = arr;
        j["verdict"] = failures.empty() ? "pass" : "fail";
        doc["failure_scan"] = j;
        clean = failures.empty();
    } else if (t == 3) {
        const ThreeErrorScan scan = three_error_structural_scan(blocks);
        Json j;
        j["op"] = "three_error_structural_scan";
        j["verdict"] = scan.pass ? "pass" : "fail";
        if (scan.witness) {
            Json w;
            w["blocks"] = scan.witness->block_indices;
            w["intersection_points"] = scan.witness->intersection_points;
            j["four_block_witness"] = w;
        }
        doc["failure_scan"] = j;
        clean = scan.pass;
    } else {
        throw Error("failure-scan: --t must be 2 or 3");
    }

    out << render(doc);
    return clean ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"parity-check construction, bit-flipping decoding and verification"};
    app.require_subcommand(1);

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "build a parity-check matrix family");
    construct->add_option("--family", construct_args.family, "pg|eg|hamming-circulant|simplex-w3|simplex-circulant|fig1")
        ->required();
    construct->add_option("--q", construct_args.q, "field order for pg/eg");
    construct->add_option("--m", construct_args.m, "extension degree for the cyclic families");
    construct->add_option("--out", construct_args.out_path, "output alist file")->required();

    std::string analyze_path;
    bool analyze_d = false;
    auto* analyze = app.add_subcommand("analyze", "code parameters and block structure");
    analyze->add_option("file", analyze_path, "alist input")->required();
    analyze->add_flag("--min-distance", analyze_d, "also compute the minimum distance");

    DecodeArgs decode_args;
    auto* decode_cmd = app.add_subcommand("decode", "run the bit-flipping decoder");
    decode_cmd->add_option("file", decode_args.path, "alist input")->required();
    decode_cmd->add_option("--error", decode_args.error, "comma-separated error positions")->required();
    decode_cmd->add_option("--variant", decode_args.variant, "step|parallel");
    decode_cmd->add_option("--tie-break", decode_args.tie_break, "lowest|seed:N|first:K");
    decode_cmd->add_flag("--trace", decode_args.trace, "include the flip trace in the report");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "exhaustive t-error verification");
    verify->add_option("file", verify_args.path, "alist input")->required();
    verify->add_option("--t", verify_args.t, "maximum error weight")->required();
    verify->add_option("--mode", verify_args.mode, "fixed|adversarial|existential");
    verify->add_option("--jobs", verify_args.jobs, "worker threads");
    verify->add_option("--budget", verify_args.budget, "pattern budget");

    CertifyArgs certify_args;
    auto* certify = app.add_subcommand("certify", "pseudoredundancy upper-bound certificate");
    certify->add_option("file", certify_args.path, "candidate alist")->required();
    certify->add_option("--reference", certify_args.reference, "reference alist (defaults to the candidate)");
    certify->add_option("--jobs", certify_args.jobs, "worker threads");
    certify->add_option("--budget", certify_args.budget, "pattern budget");

    std::string spectral_path;
    double spectral_tol = 1e-9;
    auto* spectral = app.add_subcommand("spectral", "Gram-matrix eigenvalues and distance bound");
    spectral->add_option("file", spectral_path, "alist input")->required();
    spectral->add_option("--tol", spectral_tol, "eigenvalue tolerance");

    ExpanderArgs expander_args;
    auto* expander = app.add_subcommand("expander", "subset-expansion check");
    expander->add_option("file", expander_args.path, "alist input")->required();
    expander->add_option("--t-max", expander_args.t_max, "largest subset size")->required();
    expander->add_option("--alpha", expander_args.alpha, "expansion threshold P/Q")->required();
    expander->add_option("--budget", expander_args.budget, "enumeration budget");

    std::string scan_path;
    std::size_t scan_t = 2;
    auto* scan = app.add_subcommand("failure-scan", "structural failure criteria");
    scan->add_option("file", scan_path, "alist input")->required();
    scan->add_option("--t", scan_t, "2 or 3")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed()) return do_construct(construct_args, out);
        if (analyze->parsed()) return do_analyze(analyze_path, analyze_d, out);
        if (decode_cmd->parsed()) return do_decode(decode_args, out);
        if (verify->parsed()) return do_verify(verify_args, out, err);
        if (certify->parsed()) return do_certify(certify_args, out);
        if (spectral->parsed()) return do_spectral(spectral_path, spectral_tol, out);
        if (expander->parsed()) return do_expander(expander_args, out);
        if (scan->parsed()) return do_failure_scan(scan_path, scan_t, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace bitflip
