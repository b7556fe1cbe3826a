#include "hgcauchy/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgcauchy/cauchy.hpp"
#include "hgcauchy/hessenberg.hpp"
#include "hgcauchy/higher_order.hpp"
#include "hgcauchy/verify.hpp"

namespace hgc::cli {

namespace {

using Json = nlohmann::ordered_json;

struct ComputeOptions {
    unsigned N = 1;
    unsigned n_max = 0;
    unsigned r = 1;
    std::string method = "recurrence";
    bool normalized = false;
    std::string format = "json";
    bool unsafe_caps = false;
};

struct VerifyOptions {
    std::string suite = "all";
    unsigned N_max = 4;
    unsigned r_max = 3;
    unsigned n_max = 12;
    std::string format = "text";
    bool unsafe_caps = false;
};

struct InvertOptions {
    std::string rule;
    unsigned N = 1;
    unsigned r = 1;
    unsigned n_max = 0;
    std::string format = "text";
};

Caps caps_for(bool unsafe, std::ostream& err) {
    if (!unsafe)
        return {};
    err << "warning: --unsafe-caps disables enumeration limits; runtime may grow exponentially\n";
    return Caps::unlimited();
}

Json point_json(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

Json record_json(const VerificationRecord& rec) {
    Json j;
    j["identity"] = rec.identity;
    j["N"] = point_json(rec.point.N);
    j["r"] = point_json(rec.point.r);
    j["n"] = point_json(rec.point.n);
    j["status"] = std::string(to_string(rec.status));
    if (rec.detail) {
        j["expected"] = rec.detail->expected.to_string();
        j["actual"] = rec.detail->actual.to_string();
    }
    if (!rec.note.empty())
        j["note"] = rec.note;
    return j;
}

std::string point_text(const ParameterPoint& p) {
    std::ostringstream os;
    const auto field = [&os](const char* name, const std::optional<unsigned>& v) {
        if (v)
            os << ' ' << name << '=' << *v;
    };
    field("N", p.N);
    field("r", p.r);
    field("n", p.n);
    return os.str();
}

int run_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
    const auto method = parse_method(opt.method);
    if (!method) {
        err << "error: unknown method '" << opt.method << "'\n";
        return kUsage;
    }
    if (*method == Method::compositions && opt.r != 1) {
        err << "error: method 'compositions' is only defined for --r 1\n";
        return kUsage;
    }
    const Caps caps = caps_for(opt.unsafe_caps, err);
    const auto table = compute_table(opt.N, opt.r, *method, opt.n_max, caps);
    const auto values = opt.normalized ? table.normalized() : table.values;

    if (opt.format == "csv") {
        out << "index,value\n";
        for (unsigned n = 0; n < values.size(); ++n)
            out << n << ',' << values[n] << '\n';
        return kOk;
    }
    Json j;
    j["N"] = opt.N;
    j["r"] = opt.r;
    j["method"] = std::string(to_string(*method));
    j["normalized"] = opt.normalized;
    Json arr = Json::array();
    for (const auto& v : values)
        arr.push_back(v.to_string());
    j["values"] = std::move(arr);
    out << j.dump(2) << '\n';
    return kOk;
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    const auto suite = parse_suite(opt.suite);
    if (!suite) {
        err << "error: unknown suite '" << opt.suite << "'\n";
        return kUsage;
    }
    VerifyGrid grid;
    grid.N_max = opt.N_max;
    grid.r_max = opt.r_max;
    grid.n_max = opt.n_max;
    grid.caps = caps_for(opt.unsafe_caps, err);
    const auto report = run_suite(*suite, grid);

    const auto passes = report.count(Status::pass);
    const auto fails = report.count(Status::fail);
    const auto errata = report.count(Status::erratum_noted);
    if (opt.format == "json") {
        Json j;
        j["suite"] = opt.suite;
        j["grid"] = Json{{"N_max", opt.N_max}, {"r_max", opt.r_max}, {"n_max", opt.n_max}};
        Json records = Json::array();
        for (const auto& rec : report.records())
            records.push_back(record_json(rec));
        j["records"] = std::move(records);
        j["summary"] = Json{{"pass", passes}, {"fail", fails}, {"erratum-noted", errata}};
        out << j.dump(2) << '\n';
    } else {
        for (const auto& rec : report.records()) {
            out << to_string(rec.status) << "  " << rec.identity << point_text(rec.point);
            if (rec.detail)
                out << "  expected=" << rec.detail->expected << " actual=" << rec.detail->actual;
            if (!rec.note.empty())
                out << "  (" << rec.note << ')';
            out << '\n';
        }
        out << "summary: " << passes << " pass, " << fails << " fail, " << errata << " erratum-noted\n";
    }
    return fails == 0 ? kOk : kCheckFailed;
}

int run_invert(const InvertOptions& opt, std::ostream& out, std::ostream& err) {
    SequenceRule rule;
    std::vector<ExactRational> weights;
    if (opt.rule == "cauchy") {
        rule = [](unsigned k) { return ExactRational(1, static_cast<std::int64_t>(k) + 1); };
    } else if (opt.rule == "hgc") {
        rule = [N = opt.N](unsigned k) { return hgc_ratio(N, k); };
    } else if (opt.rule == "weights") {
        weights = weight_D(opt.N, opt.r, opt.n_max).values;
        rule = [&weights](unsigned k) { return weights[k]; };
    } else {
        err << "error: unknown rule '" << opt.rule << "'\n";
        return kUsage;
    }
    const auto trace = trace_inversion(rule, opt.n_max);
    const bool ok = trace.recovered == trace.rule;

    if (opt.format == "json") {
        Json j;
        j["rule"] = opt.rule;
        j["N"] = opt.N;
        j["r"] = opt.r;
        Json rows = Json::array();
        for (unsigned n = 1; n <= opt.n_max; ++n) {
            rows.push_back(Json{{"n", n},
                                {"R", trace.rule[n - 1].to_string()},
                                {"alpha", trace.forward[n - 1].to_string()},
                                {"recovered", trace.recovered[n - 1].to_string()},
                                {"inverse_band", trace.inverse_bands[n - 1].to_string()}});
        }
        j["rows"] = std::move(rows);
        j["roundtrip"] = ok ? "pass" : "fail";
        out << j.dump(2) << '\n';
    } else {
        out << "n\tR(n)\talpha(n)\trecovered(n)\tinverse_band(n)\n";
        for (unsigned n = 1; n <= opt.n_max; ++n)
            out << n << '\t' << trace.rule[n - 1] << '\t' << trace.forward[n - 1] << '\t' << trace.recovered[n - 1]
                << '\t' << trace.inverse_bands[n - 1] << '\n';
        out << "roundtrip: " << (ok ? "pass" : "fail") << '\n';
    }
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact hypergeometric Cauchy numbers: tables, identity checks and inversions", "hgcauchy"};
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* compute_cmd = app.add_subcommand("compute", "Print c^(r)_{N,0..n_max} as exact rationals");
    compute_cmd->add_option("--N", compute.N, "Hypergeometric parameter N >= 1")->required()->check(CLI::PositiveNumber);
    compute_cmd->add_option("--n-max", compute.n_max, "Largest index")->required()->check(CLI::NonNegativeNumber);
    compute_cmd->add_option("--r", compute.r, "Order r >= 1")->check(CLI::PositiveNumber);
    compute_cmd->add_option("--method", compute.method, "Algorithm")
        ->check(CLI::IsMember({"series", "recurrence", "determinant", "compositions", "trudi", "explicit",
                               "convolution"}));
    compute_cmd->add_flag("--normalized", compute.normalized, "Print c/n! instead of c");
    compute_cmd->add_option("--format", compute.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    compute_cmd->add_flag("--unsafe-caps", compute.unsafe_caps, "Lift enumeration caps");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check identity suites over a parameter grid");
    verify_cmd->add_option("--suite", verify.suite, "Suite to run")
        ->check(CLI::IsMember({"all", "core", "higher", "relations", "inversion", "series-rules"}));
    verify_cmd->add_option("--N-max", verify.N_max, "Largest N")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--r-max", verify.r_max, "Largest r")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--n-max", verify.n_max, "Largest n")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--format", verify.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify_cmd->add_flag("--unsafe-caps", verify.unsafe_caps, "Lift enumeration caps");

    InvertOptions invert;
    auto* invert_cmd = app.add_subcommand("invert", "Round-trip a band sequence through the determinant map");
    invert_cmd->add_option("--rule", invert.rule, "Band rule")
        ->required()
        ->check(CLI::IsMember({"cauchy", "hgc", "weights"}));
    invert_cmd->add_option("--N", invert.N, "Hypergeometric parameter N >= 1 (ignored by cauchy)")
        ->check(CLI::PositiveNumber);
    invert_cmd->add_option("--r", invert.r, "Order r >= 1 (weights rule)")->check(CLI::PositiveNumber);
    invert_cmd->add_option("--n-max", invert.n_max, "Largest index")->required()->check(CLI::NonNegativeNumber);
    invert_cmd->add_option("--format", invert.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (compute_cmd->parsed())
            return run_compute(compute, out, err);
        if (verify_cmd->parsed())
            return run_verify(verify, out, err);
        return run_invert(invert, out, err);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace hgc::cli
