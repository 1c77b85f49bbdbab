// Batch front-end: build trace Goppa instances, run the verification
// suite, scan certified distance windows, measure distances, and export
// parity-check matrices.
//
// Exit codes: 0 success / all applicable checks pass, 2 a check failed or
// a measured distance undercut a certified bound, 3 configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <goppa/distance.hpp>
#include <goppa/io.hpp>
#include <goppa/trace_goppa.hpp>

using nlohmann::ordered_json;

namespace {

struct Options {
    uint32_t p = 2, s = 1, m = 3;
    std::string modulus_csv;
    std::string checks = "all";
    std::string code = "Lg";
    int64_t jmin = INT64_MIN;  // sentinel: pick per-code default
    int64_t jmax = INT64_MIN;
    uint32_t exact_limit = 24;
    uint64_t iterations = 200;
    uint64_t seed = 0;
    std::string bkc_path;
    std::string out_path;
    std::string format = "json";
};

std::vector<uint32_t> parse_modulus(const std::string& csv) {
    std::vector<uint32_t> out;
    if (csv.empty()) return out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty modulus digit");
        out.push_back(static_cast<uint32_t>(std::stoul(tok)));
    }
    return out;
}

std::vector<std::string> parse_checks(const std::string& csv) {
    if (csv == "all") return goppa::all_check_names();
    std::vector<std::string> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        bool known = false;
        for (const auto& n : goppa::all_check_names()) known = known || n == tok;
        if (!known) throw std::invalid_argument("unknown check name: " + tok);
        out.push_back(tok);
    }
    if (out.empty()) throw std::invalid_argument("empty check list");
    return out;
}

void emit(const Options& opt, const std::string& body) {
    if (opt.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream os(opt.out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + opt.out_path);
    os << body;
}

std::optional<goppa::BkcTable> load_bkc(const Options& opt) {
    if (opt.bkc_path.empty()) return std::nullopt;
    std::ifstream is(opt.bkc_path);
    if (!is) throw std::invalid_argument("cannot open bkc file: " + opt.bkc_path);
    return goppa::BkcTable::parse(is);
}

// per-code defaults wide enough to capture every lemma-backed window
void resolve_window_range(const goppa::TraceGoppaInstance& inst, goppa::CodeKind kind,
                          int64_t& jmin, int64_t& jmax) {
    const auto& code = inst.code(kind);
    const int64_t q = static_cast<int64_t>(inst.field().q());
    if (jmin == INT64_MIN) jmin = -(static_cast<int64_t>(inst.a()) + q);
    if (jmax == INT64_MIN) jmax = static_cast<int64_t>(code.t()) + 2 * q + 8;
    if (jmin > 0 || jmax < 0) throw std::invalid_argument("window range must contain 0");
}

ordered_json params_json(const goppa::TraceGoppaInstance& inst) {
    const auto& f = inst.field();
    ordered_json j;
    j["p"] = f.p();
    j["s"] = f.s();
    j["m"] = f.m();
    j["q"] = f.q();
    j["n"] = inst.n();
    j["a"] = inst.a();
    j["b"] = inst.b();
    return j;
}

ordered_json bounds_json(const goppa::BoundSummary& bounds) {
    ordered_json j;
    for (const auto& e : bounds.entries) {
        ordered_json je;
        je["applicable"] = e.applicable;
        je["value"] = e.value;
        je["precondition"] = e.precondition;
        j[e.name] = je;
    }
    if (bounds.k_defined) j["strict_count_k"] = bounds.strict_count_k;
    return j;
}

ordered_json check_json(const goppa::CheckReport& rep) {
    ordered_json j;
    j["name"] = rep.name;
    j["applicable"] = rep.applicable;
    j["vacuous"] = rep.vacuous;
    j["pass"] = rep.pass;
    if (!rep.note.empty()) j["note"] = rep.note;
    if (!rep.counterexample.empty()) j["counterexample"] = rep.counterexample;
    ordered_json det = ordered_json::array();
    for (const auto& d : rep.details) {
        ordered_json dj;
        dj["key"] = d.key;
        dj["ok"] = d.ok;
        det.push_back(dj);
    }
    j["details"] = det;
    return j;
}

std::string render_kv_text(const ordered_json& j, const std::string& indent = "") {
    std::ostringstream os;
    auto emit_one = [&](const std::string& label, const ordered_json& v) {
        if (v.is_object() || v.is_array())
            os << indent << label << ":\n" << render_kv_text(v, indent + "  ");
        else
            os << indent << label << ": " << v.dump() << "\n";
    };
    if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) emit_one("- " + std::to_string(i), j[i]);
    } else {
        for (auto it = j.begin(); it != j.end(); ++it) emit_one(it.key(), *it);
    }
    return os.str();
}

// ---------------------------------------------------------------------
// params

int cmd_params(const Options& opt) {
    auto inst = goppa::TraceGoppaInstance::build(opt.p, opt.s, opt.m, parse_modulus(opt.modulus_csv));
    auto bounds = goppa::bound_calculators(opt.p, opt.s, opt.m);
    auto bkc = load_bkc(opt);

    ordered_json j;
    j["params"] = params_json(inst);
    j["deg_g"] = inst.g().degree();
    j["deg_h"] = inst.h().degree();
    ordered_json dims;
    for (auto kind : {goppa::CodeKind::Lg, goppa::CodeKind::Lg2, goppa::CodeKind::Mh,
                      goppa::CodeKind::Mh2})
        dims[goppa::code_kind_name(kind)] = inst.code(kind).dim();
    j["dims"] = dims;
    j["degenerate"] = inst.code(goppa::CodeKind::Lg).dim() == 0;
    j["bounds"] = bounds_json(bounds);
    if (bkc) {
        auto rec = bkc->lookup(inst.n(), inst.code(goppa::CodeKind::Lg).dim());
        if (rec)
            j["best_known_d"] = rec->d;
        else
            j["best_known_d"] = nullptr;
    }

    if (opt.format == "json") {
        emit(opt, j.dump(2) + "\n");
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "key,value\n";
        for (auto& [k, v] : j["params"].items()) os << k << ',' << v.dump() << '\n';
        os << "deg_g," << j["deg_g"] << "\ndeg_h," << j["deg_h"] << '\n';
        for (auto& [k, v] : j["dims"].items()) os << "dim_" << k << ',' << v.dump() << '\n';
        for (auto& [k, v] : j["bounds"].items())
            if (v.is_object()) os << "bound_" << k << ',' << v["value"].dump() << '\n';
        emit(opt, os.str());
    } else {
        emit(opt, render_kv_text(j));
    }
    return 0;
}

// ---------------------------------------------------------------------
// verify

int cmd_verify(const Options& opt) {
    auto names = parse_checks(opt.checks);
    auto inst = goppa::TraceGoppaInstance::build(opt.p, opt.s, opt.m, parse_modulus(opt.modulus_csv));
    auto reports = goppa::run_checks(inst, names);
    auto bounds = goppa::bound_calculators(opt.p, opt.s, opt.m);

    goppa::CodeKind wkind = opt.p == 2 ? goppa::CodeKind::Lg2 : goppa::CodeKind::Mh;
    int64_t jmin = opt.jmin, jmax = opt.jmax;
    resolve_window_range(inst, wkind, jmin, jmax);
    auto window = goppa::max_consecutive_window(inst.code(wkind), inst.code(wkind).gpoly(), 1,
                                                jmin, jmax);

    ordered_json j;
    j["params"] = params_json(inst);
    ordered_json checks = ordered_json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
        checks.push_back(check_json(r));
        if (r.applicable && !r.pass) all_pass = false;
    }
    j["checks"] = checks;
    j["bounds"] = bounds_json(bounds);
    ordered_json wj;
    wj["code"] = goppa::code_kind_name(wkind);
    wj["lo"] = window.lo;
    wj["hi"] = window.hi;
    wj["certified"] = window.certified;
    wj["vacuous"] = window.vacuous;
    j["window"] = wj;

    if (opt.format == "json") {
        emit(opt, j.dump(2) + "\n");
    } else if (opt.format == "csv") {
        std::ostringstream os;
        os << "check,applicable,vacuous,pass\n";
        for (const auto& r : reports)
            os << r.name << ',' << r.applicable << ',' << r.vacuous << ',' << r.pass << '\n';
        emit(opt, os.str());
    } else {
        std::ostringstream os;
        for (const auto& r : reports) {
            os << (r.applicable ? (r.pass ? "PASS " : "FAIL ") : "N/A  ") << r.name;
            if (r.vacuous) os << " (vacuous)";
            if (!r.note.empty()) os << " -- " << r.note;
            if (!r.counterexample.empty()) os << " !! " << r.counterexample;
            os << '\n';
        }
        os << "window " << goppa::code_kind_name(wkind) << ": [" << window.lo << ", " << window.hi
           << "] certified >= " << window.certified << (window.vacuous ? " (vacuous)" : "")
           << '\n';
        emit(opt, os.str());
    }
    return all_pass ? 0 : 2;
}

// ---------------------------------------------------------------------
// window

int cmd_window(const Options& opt) {
    auto kind = goppa::code_kind_from_name(opt.code);
    if (!kind) throw std::invalid_argument("unknown code kind: " + opt.code);
    auto inst = goppa::TraceGoppaInstance::build(opt.p, opt.s, opt.m, parse_modulus(opt.modulus_csv));
    int64_t jmin = opt.jmin, jmax = opt.jmax;
    resolve_window_range(inst, *kind, jmin, jmax);
    auto w = goppa::max_consecutive_window(inst.code(*kind), inst.code(*kind).gpoly(), 1, jmin,
                                           jmax);
    ordered_json j;
    j["params"] = params_json(inst);
    j["code"] = opt.code;
    j["jmin"] = jmin;
    j["jmax"] = jmax;
    j["lo"] = w.lo;
    j["hi"] = w.hi;
    j["certified"] = w.certified;
    j["vacuous"] = w.vacuous;
    if (opt.format == "json")
        emit(opt, j.dump(2) + "\n");
    else if (opt.format == "csv")
        emit(opt, "code,lo,hi,certified,vacuous\n" + opt.code + ',' + std::to_string(w.lo) + ',' +
                      std::to_string(w.hi) + ',' + std::to_string(w.certified) + ',' +
                      std::to_string(w.vacuous) + '\n');
    else
        emit(opt, render_kv_text(j));
    return 0;
}

// ---------------------------------------------------------------------
// distance

int cmd_distance(const Options& opt) {
    auto kind = goppa::code_kind_from_name(opt.code);
    if (!kind) throw std::invalid_argument("unknown code kind: " + opt.code);
    auto inst = goppa::TraceGoppaInstance::build(opt.p, opt.s, opt.m, parse_modulus(opt.modulus_csv));
    const auto& code = inst.code(*kind);
    auto bounds = goppa::bound_calculators(opt.p, opt.s, opt.m);
    auto bkc = load_bkc(opt);

    int64_t jmin = opt.jmin, jmax = opt.jmax;
    resolve_window_range(inst, *kind, jmin, jmax);
    auto window = goppa::max_consecutive_window(code, code.gpoly(), 1, jmin, jmax);

    goppa::DistanceResult dist;
    if (code.dim() == 0) {
        dist.method = goppa::DistanceMethod::Degenerate;
    } else if (goppa::enumeration_feasible(code.field().p(), code.dim(), opt.exact_limit)) {
        dist = goppa::exact_min_distance(code, opt.exact_limit);
    } else {
        dist = goppa::low_weight_search(code, opt.iterations, opt.seed);
    }
    if (!window.vacuous) dist.certified_lower = window.certified;

    bool violation = false;
    std::string violation_msg;
    try {
        goppa::enforce_soundness(dist);
    } catch (const goppa::SoundnessError& e) {
        violation = true;
        violation_msg = e.what();
    }
    auto rec = goppa::reconcile(bounds, dist);

    ordered_json j;
    j["params"] = params_json(inst);
    j["code"] = opt.code;
    j["dim"] = code.dim();
    j["method"] = goppa::distance_method_name(dist.method);
    if (dist.exact)
        j["exact"] = *dist.exact;
    else
        j["exact"] = nullptr;
    if (dist.upper)
        j["upper"] = *dist.upper;
    else
        j["upper"] = nullptr;
    j["certified_lower"] = dist.certified_lower;
    if (dist.method == goppa::DistanceMethod::Search) {
        j["iterations"] = dist.iterations;
        j["seed"] = dist.seed;
    }
    if (!dist.witness.empty())
        j["witness_validated"] = goppa::syndrome_is_zero(code, dist.witness);
    ordered_json rj = ordered_json::array();
    for (const auto& e : rec.entries) {
        ordered_json ej;
        ej["bound"] = e.bound;
        ej["value"] = e.value;
        ej["applicable"] = e.applicable;
        ej["consistent"] = e.consistent;
        ej["sharp"] = e.sharp;
        rj.push_back(ej);
    }
    j["reconcile"] = rj;
    j["verdict"] = rec.verdict;
    if (violation) {
        j["soundness_violation"] = violation_msg;
        std::string wit;
        for (uint8_t x : dist.witness) wit += goppa::digit_char(x);
        j["witness"] = wit;
    }
    if (bkc) {
        auto r = bkc->lookup(code.length(), code.dim());
        if (r)
            j["best_known_d"] = r->d;
        else
            j["best_known_d"] = nullptr;
    }

    if (opt.format == "json")
        emit(opt, j.dump(2) + "\n");
    else if (opt.format == "csv") {
        std::ostringstream os;
        os << "key,value\n";
        os << "method," << goppa::distance_method_name(dist.method) << '\n';
        os << "exact," << (dist.exact ? std::to_string(*dist.exact) : "") << '\n';
        os << "upper," << (dist.upper ? std::to_string(*dist.upper) : "") << '\n';
        os << "certified_lower," << dist.certified_lower << '\n';
        os << "verdict," << rec.verdict << '\n';
        emit(opt, os.str());
    } else {
        emit(opt, render_kv_text(j));
    }
    return violation || rec.any_violation ? 2 : 0;
}

// ---------------------------------------------------------------------
// export

int cmd_export(const Options& opt) {
    auto kind = goppa::code_kind_from_name(opt.code);
    if (!kind) throw std::invalid_argument("unknown code kind: " + opt.code);
    auto inst = goppa::TraceGoppaInstance::build(opt.p, opt.s, opt.m, parse_modulus(opt.modulus_csv));
    std::ostringstream os;
    goppa::write_matrix_text(os, inst.code(*kind).parity());
    emit(opt, os.str());
    return 0;
}

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("--p", opt.p, "prime modulus of the code alphabet");
    sub->add_option("--s", opt.s, "extension exponent: q = p^s");
    sub->add_option("--m", opt.m, "extension exponent of F_{q^m} over F_q");
    sub->add_option("--modulus", opt.modulus_csv,
                    "field modulus as csv digits, constant term first");
    sub->add_option("--bkc", opt.bkc_path, "best-known-codes csv snapshot (n,k,d rows)");
    sub->add_option("--out", opt.out_path, "write the report here instead of stdout");
    sub->add_option("--format", opt.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace Goppa code construction, verification and distance measurement"};
    app.require_subcommand(1);
    Options opt;

    auto* params = app.add_subcommand("params", "instance parameters, dimensions and bounds");
    add_common(params, opt);

    auto* verify = app.add_subcommand("verify", "run the statement verifiers");
    add_common(verify, opt);
    verify->add_option("--checks", opt.checks, "comma-separated check names or 'all'");
    verify->add_option("--jmin", opt.jmin, "window scan lower bound");
    verify->add_option("--jmax", opt.jmax, "window scan upper bound");

    auto* window = app.add_subcommand("window", "certified consecutive-exponent window");
    add_common(window, opt);
    window->add_option("--code", opt.code, "Lg | Lg2 | Mh | Mh2");
    window->add_option("--jmin", opt.jmin, "window scan lower bound");
    window->add_option("--jmax", opt.jmax, "window scan upper bound");

    auto* distance = app.add_subcommand("distance", "exact or searched minimum distance");
    add_common(distance, opt);
    distance->add_option("--code", opt.code, "Lg | Lg2 | Mh | Mh2");
    distance->add_option("--exact-limit", opt.exact_limit,
                         "enumerate exhaustively while p^dim <= 2^limit");
    distance->add_option("--iterations", opt.iterations, "search iterations");
    distance->add_option("--seed", opt.seed, "search seed");
    distance->add_option("--jmin", opt.jmin, "window scan lower bound");
    distance->add_option("--jmax", opt.jmax, "window scan upper bound");

    auto* exp = app.add_subcommand("export", "write the parity-check matrix as text");
    add_common(exp, opt);
    exp->add_option("--code", opt.code, "Lg | Lg2 | Mh | Mh2");

    CLI11_PARSE(app, argc, argv);

    try {
        if (params->parsed()) return cmd_params(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (window->parsed()) return cmd_window(opt);
        if (distance->parsed()) return cmd_distance(opt);
        if (exp->parsed()) return cmd_export(opt);
    } catch (const goppa::SoundnessError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
