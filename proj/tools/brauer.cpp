// Command-line front end: class listings, splitting and primitive central
// idempotents, pole reports, signed combinations with specialization, and the
// self-test harness.
//
// Exit codes: 0 success, 1 mathematical verification failure or pole hit,
// 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brauer/analysis.hpp"
#include "brauer/golden.hpp"
#include "brauer/json_io.hpp"
#include "brauer/selftest.hpp"
#include "brauer/solver.hpp"
#include "brauer/symgrp.hpp"

namespace {

using namespace brauer;

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

unsigned resolve_jobs(unsigned flag_jobs) {
    if (const char* env = std::getenv("BRAUER_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    return flag_jobs;
}

IntegerPartition parse_partition(const std::string& s) {
    IntegerPartition parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty partition part");
        parts.push_back(std::stoi(tok));
    }
    if (parts.empty()) throw std::invalid_argument("empty partition");
    return parts;
}

/// Element specs: "phi:N:ELL", "prim:N:L1,L2,...", "e:L1,L2,...", or a path
/// to a JSON element file. An optional leading '+'/'-' carries the sign.
std::pair<int, CentralElement> parse_element_spec(const std::string& raw, unsigned jobs) {
    int sign = 1;
    std::string s = raw;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        sign = s[0] == '-' ? -1 : 1;
        s = s.substr(1);
    }
    if (s.rfind("phi:", 0) == 0) {
        auto rest = s.substr(4);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected phi:N:ELL in '" + raw + "'");
        int n = std::stoi(rest.substr(0, colon));
        int ell = std::stoi(rest.substr(colon + 1));
        return {sign, splitting_idempotent(n, ell)};
    }
    if (s.rfind("prim:", 0) == 0) {
        auto rest = s.substr(5);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected prim:N:LAMBDA in '" + raw + "'");
        int n = std::stoi(rest.substr(0, colon));
        IntegerPartition lam = parse_partition(rest.substr(colon + 1));
        return {sign, primitive_central_idempotent(n, lam, jobs)};
    }
    if (s.rfind("e:", 0) == 0) {
        IntegerPartition lam = parse_partition(s.substr(2));
        return {sign, young_central_idempotent(lam)};
    }
    std::ifstream in(s);
    if (!in) throw std::invalid_argument("cannot open element file '" + s + "'");
    Json j = Json::parse(in);
    return {sign, jsonio::element_from_json(j)};
}

void emit_element(const CentralElement& x, const std::string& format) {
    if (format == "json")
        std::cout << jsonio::dump(jsonio::to_json(x));
    else
        std::cout << element_text(x);
}

int cmd_spores(int n, int max_prop, const std::string& format) {
    if (max_prop < 0) max_prop = n;
    auto classes = spore_classes(n, max_prop);
    if (format == "json") {
        Json arr = Json::array();
        for (const auto& c : classes) {
            Json j;
            j["tableau"] = c.tableau.rows();
            j["propCount"] = c.prop_count;
            j["orbitSize"] = c.orbit_size;
            arr.push_back(std::move(j));
        }
        std::cout << jsonio::dump(arr);
    } else {
        for (const auto& c : classes)
            std::cout << "[" << c.tableau.str() << "]  prop=" << c.prop_count
                      << "  orbit=" << c.orbit_size << "\n";
        std::cout << classes.size() << " classes\n";
    }
    return 0;
}

int cmd_split_idem(int n, int ell, const std::string& verify, const std::string& format,
                   const std::string& dump_system, const std::string& system_mode,
                   unsigned jobs) {
    if (!dump_system.empty()) {
        SystemMode mode = system_mode == "full" ? SystemMode::full : SystemMode::reduced;
        SplitSystem sys = build_system(n, ell, mode);
        std::ofstream out(dump_system);
        if (!out) throw std::invalid_argument("cannot write '" + dump_system + "'");
        out << jsonio::dump(jsonio::to_json(sys));
    }
    CentralElement phi = splitting_idempotent(n, ell);
    int rc = 0;
    if (verify != "none") {
        VerifyReport rep = verify_fast(phi, ell);
        if (!rep.pass()) {
            std::cerr << "verification failed: " << rep.summary() << "\n";
            rc = kExitVerification;
        }
        if (verify == "full" && mul(phi, phi, jobs) != phi) {
            std::cerr << "verification failed: element is not idempotent\n";
            rc = kExitVerification;
        }
    }
    emit_element(phi, format);
    return rc;
}

int cmd_prim_idem(int n, const std::string& lambda, const std::string& format, unsigned jobs) {
    IntegerPartition lam = parse_partition(lambda);
    emit_element(primitive_central_idempotent(n, lam, jobs), format);
    return 0;
}

int cmd_poles(const std::string& spec, const std::string& format, unsigned jobs) {
    auto [sign, x] = parse_element_spec(spec, jobs);
    (void)sign;
    PoleReport rep = poles(x);
    if (format == "json") {
        std::cout << jsonio::dump(jsonio::to_json(rep));
    } else {
        std::cout << "poles:";
        for (const auto& p : rep.poles) std::cout << " " << p;
        std::cout << "\n";
        for (const auto& [t, ps] : rep.by_class) {
            std::cout << "[" << t.str() << "]:";
            for (const auto& p : ps) std::cout << " " << p;
            std::cout << "\n";
        }
        for (const auto& [p, m] : rep.max_prop_at_pole)
            std::cout << "max propagating count at " << p << ": " << m << "\n";
    }
    return 0;
}

int cmd_combine(const std::vector<std::string>& specs, const std::optional<std::string>& at,
                const std::string& format, unsigned jobs) {
    std::vector<std::pair<int, CentralElement>> terms;
    for (const auto& s : specs) terms.push_back(parse_element_spec(s, jobs));
    CentralElement sum = combine(terms);
    if (at) {
        try {
            sum = specialize_element(sum, Rational::parse(*at));
        } catch (const PoleError& e) {
            std::cerr << e.what() << "\n";
            return kExitVerification;
        }
    }
    emit_element(sum, format);
    return 0;
}

int cmd_selftest(const std::string& level, bool corrupt, unsigned jobs) {
    SelfTestResult res;
    if (level == "paper")
        res = selftest_paper(corrupt);
    else if (level == "properties")
        res = selftest_properties(jobs);
    else
        res = selftest_heavy(jobs);
    for (const auto& f : res.failures) std::cout << "FAIL " << f << "\n";
    std::cout << level << ": " << (res.checks - static_cast<int>(res.failures.size())) << "/"
              << res.checks << " checks passed\n";
    return res.pass() ? 0 : kExitVerification;
}

/// The reference tables and matrices as one JSON document, the checked-in
/// form under data/.
Json goldens_json() {
    Json j;
    Json tables = Json::array();
    for (const auto& t : golden_tables()) {
        Json jt;
        jt["id"] = t.id;
        jt["n"] = t.n;
        jt["addIdentity"] = t.add_identity;
        jt["coefficientsOnly"] = t.coefficients_only;
        Json entries = Json::array();
        for (const auto& e : t.entries) {
            Json je;
            je["label"] = e.label;
            je["rows"] = e.rows;
            je["canonical"] = SporeTableau::from_rows(e.rows).rows();
            je["coeff"] = jsonio::to_json(e.coeff);
            entries.push_back(std::move(je));
        }
        jt["entries"] = std::move(entries);
        tables.push_back(std::move(jt));
    }
    j["tables"] = std::move(tables);
    Json systems = Json::array();
    for (const auto& s : golden_systems()) {
        Json js;
        js["id"] = s.id;
        js["n"] = s.n;
        js["ell"] = s.ell;
        js["labels"] = s.unknown_labels;
        Json rows = Json::array();
        for (const auto& r : s.unknown_rows) rows.push_back(r);
        js["unknownRows"] = std::move(rows);
        Json mat = Json::array();
        for (const auto& row : s.matrix) {
            Json jr = Json::array();
            for (const auto& c : row) jr.push_back(jsonio::to_json(c));
            mat.push_back(std::move(jr));
        }
        js["matrix"] = std::move(mat);
        Json rhs = Json::array();
        for (const auto& c : s.rhs) rhs.push_back(jsonio::to_json(c));
        js["rhs"] = std::move(rhs);
        systems.push_back(std::move(js));
    }
    j["systems"] = std::move(systems);
    return j;
}

int cmd_goldens(const std::string& out_path) {
    std::string text = jsonio::dump(goldens_json());
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact central idempotents of the Brauer algebra B_n(delta)"};
    app.require_subcommand(1);

    unsigned jobs_flag = default_jobs();
    app.add_option("--jobs", jobs_flag, "worker threads (BRAUER_JOBS overrides)");

    std::string format = "text";

    auto* sp = app.add_subcommand("spores", "list diagram conjugacy classes");
    int sp_n = 0, sp_maxprop = -1;
    sp->add_option("--n", sp_n, "number of strands")->required();
    sp->add_option("--max-prop", sp_maxprop, "keep classes with at most this many propagating entries");
    sp->add_option("--format", format, "text or json");

    auto* si = app.add_subcommand("split-idem", "splitting idempotent phi_n(ell)");
    int si_n = 0, si_ell = -1;
    std::string si_verify = "fast", si_dump, si_sysmode = "reduced";
    si->add_option("--n", si_n, "number of strands")->required();
    si->add_option("--ell", si_ell, "ideal cutoff: at most ell propagating lines")->required();
    si->add_option("--verify", si_verify, "fast, full or none")
        ->check(CLI::IsMember({"fast", "full", "none"}));
    si->add_option("--format", format, "text or json");
    si->add_option("--dump-system", si_dump, "write the linear system as JSON to this path");
    si->add_option("--system-mode", si_sysmode, "system to dump: reduced or full")
        ->check(CLI::IsMember({"reduced", "full"}));

    auto* pi = app.add_subcommand("prim-idem", "primitive central idempotent phi_n(lambda)");
    int pi_n = 0;
    std::string pi_lambda;
    pi->add_option("--n", pi_n, "number of strands")->required();
    pi->add_option("--lambda", pi_lambda, "partition of n, comma separated")->required();
    pi->add_option("--format", format, "text or json");

    auto* po = app.add_subcommand("poles", "pole report of an element");
    std::string po_spec;
    po->add_option("element", po_spec, "phi:N:ELL, prim:N:LAMBDA, e:LAMBDA or a JSON file")
        ->required();
    po->add_option("--format", format, "text or json");

    auto* co = app.add_subcommand("combine", "signed sum of elements, optionally specialized");
    std::vector<std::string> co_specs;
    std::optional<std::string> co_at;
    co->add_option("terms", co_specs,
                   "element specs with optional +/- sign; place negative terms after --")
        ->required();
    co->add_option("--at", co_at, "specialize delta to this rational");
    co->add_option("--format", format, "text or json");

    auto* st = app.add_subcommand("selftest", "replay reference data and invariants");
    std::string st_level = "paper";
    bool st_corrupt = false;
    st->add_option("--level", st_level, "paper, properties or heavy")
        ->check(CLI::IsMember({"paper", "properties", "heavy"}));
    st->add_flag("--corrupt-golden", st_corrupt,
                 "perturb one expected coefficient (failure-path demo)");

    auto* go = app.add_subcommand("goldens", "emit the reference tables as JSON");
    std::string go_out;
    go->add_option("--out", go_out, "output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    unsigned jobs = resolve_jobs(jobs_flag);
    try {
        if (sp->parsed()) return cmd_spores(sp_n, sp_maxprop, format);
        if (si->parsed()) return cmd_split_idem(si_n, si_ell, si_verify, format, si_dump,
                                                si_sysmode, jobs);
        if (pi->parsed()) return cmd_prim_idem(pi_n, pi_lambda, format, jobs);
        if (po->parsed()) return cmd_poles(po_spec, format, jobs);
        if (co->parsed()) return cmd_combine(co_specs, co_at, format, jobs);
        if (st->parsed()) return cmd_selftest(st_level, st_corrupt, jobs);
        if (go->parsed()) return cmd_goldens(go_out);
    } catch (const JsonError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}
