// hjd: check, derive, verify-op and search-rb on algebra files.
//
// Exit status: 0 all requested verdicts pass, 1 a verdict failed (or a
// construction's hypotheses did not hold), 2 usage, input or budget error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "hjd/hjd.hpp"

namespace {

using namespace hjd;

struct Options {
    std::string command;
    std::string file;
    std::string suite = "auto";
    std::string module;
    std::string construction;
    std::string map;
    std::string map2;
    std::string label = "circ";
    std::string kind = "rb";
    std::string pattern;
    std::string output;
    std::string format = "text";
    std::string policy = "strict";
    bool unchecked = false;
    std::uint64_t budget = default_search_budget;
    unsigned jobs = 1;
};

struct Run {
    ReportDocument doc;
    std::ostringstream text;
    int status = 0;

    void fail() { status = std::max(status, 1); }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

Policy policy_of(const Options& o) { return o.policy == "lax" ? Policy::lax : Policy::strict; }

template <Scalar K>
void emit(Run& run, const HomAlgebra<K>& a, const CheckReport<K>& r, const std::string& subject) {
    run.doc.reports.push_back(check_report_json(a, r));
    if (!subject.empty()) run.doc.reports.back()["subject"] = subject;
    run.text << r.suite << (subject.empty() ? "" : " [" + subject + "]") << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& v : r.identities) run.text << "  " << verdict_text(a, v) << "\n";
    for (const auto& v : r.structural) run.text << "  (info) " << verdict_text(a, v) << "\n";
    for (const auto& n : r.notes) run.text << "  note: " << n << "\n";
    if (!r.pass()) run.fail();
}

template <Scalar K>
void emit(Run& run, const HomAlgebra<K>& a, const OperatorReport<K>& r, const std::string& kind) {
    run.doc.reports.push_back(operator_report_json(a, r, kind));
    run.text << kind << " (" << policy_name(r.policy) << "): " << (r.overall() ? "PASS" : "FAIL") << "\n";
    run.text << "  " << verdict_text(a, r.quadratic) << "\n";
    run.text << "  " << verdict_text(a, r.twist) << "\n";
    if (!r.overall()) run.fail();
}

// --- check -------------------------------------------------------------------

template <Scalar K>
void check_modules(Run& run, const AlgebraModel<K>& m, const Options& o, bool reps, bool bims) {
    bool any = false;
    for (const auto& md : m.modules) {
        if (!o.module.empty() && module_name(md) != o.module) continue;
        if (auto* r = std::get_if<RepresentationData<K>>(&md); r && reps) {
            emit(run, m.algebra, check_representation(m.algebra, *r), "module " + r->name);
            any = true;
        }
        if (auto* b = std::get_if<BimoduleData<K>>(&md); b && bims) {
            emit(run, m.algebra, check_bimodule(m.algebra, *b), "module " + b->name);
            any = true;
        }
    }
    if (!any && !(reps && bims)) throw InputError("no matching module in file");
}

template <Scalar K>
void cmd_check(Run& run, const AlgebraModel<K>& m, const Options& o) {
    if (o.suite == "auto") {
        emit(run, m.algebra, check_suite(m.algebra, default_suite(m.algebra)), "");
        check_modules(run, m, o, true, true);
        return;
    }
    if (o.suite == "representation") return check_modules(run, m, o, true, false);
    if (o.suite == "bimodule") return check_modules(run, m, o, false, true);
    auto s = parse_suite(o.suite);
    if (!s || *s == SuiteId::jordan_rep) throw InputError("unknown suite \"" + o.suite + "\"");
    emit(run, m.algebra, check_suite(m.algebra, *s), "");
}

// --- derive ------------------------------------------------------------------

template <Scalar K>
ConstructionResult<K> construct(const AlgebraModel<K>& m, const Options& o, bool& same_space) {
    const ConstructionOptions co{!o.unchecked, policy_of(o)};
    const auto& a = m.algebra;
    const std::string& c = o.construction;
    auto map_or = [&](const std::string& fallback) { return m.map(o.map.empty() ? fallback : o.map); };
    same_space = true;
    if (c == "anticommutator") return anticommutator(a, co);
    if (c == "rb-prejordan") return rb_prejordan(a, map_or("R"), co);
    if (c == "prealt-prejordan") return prealt_to_prejordan(a, co);
    if (c == "rb-jdendriform") return rb_jdendriform_on_prejordan(a, map_or("R"), co);
    if (c == "commuting-rb-jdendriform")
        return commuting_rb_jdendriform(a, map_or("R1"), m.map(o.map2.empty() ? "R2" : o.map2), co);
    if (c == "transpose") return transpose_jdendriform(a, co);
    if (c == "yau-twist") {
        std::optional<SuiteId> s;
        if (o.suite != "auto") {
            s = parse_suite(o.suite);
            if (!s || *s == SuiteId::jordan_rep) throw InputError("unknown suite \"" + o.suite + "\"");
        }
        return yau_twist(a, map_or("beta"), co, s);
    }
    if (c == "vertical") return vertical(a, co);
    if (c == "horizontal") return horizontal(a, co);
    if (c == "jdendriform-bimodule") return jdendriform_bimodule(a, co);
    if (c == "adjoint") return adjoint_result(a, co);
    if (c == "compatible-prejordan") return compatible_prejordan_from_invertible(a, m.representation(o.module), map_or("T"), co);
    if (c == "regular-bimodule") {
        if (co.checked) detail::require_suite(a, SuiteId::hom_pre_jordan, "input");
        ConstructionResult<K> r;
        r.construction = "regular-bimodule";
        r.algebra = a;
        r.bimodules.push_back(regular_bimodule(a));
        return r;
    }
    same_space = false;
    if (c == "semidirect-jordan") return semidirect_jordan_result(a, m.representation(o.module), co);
    if (c == "semidirect-prejordan") return semidirect_prejordan_result(a, m.bimodule(o.module), co);
    if (c == "o-op-prejordan") return o_op_prejordan_on_module(a, m.representation(o.module), map_or("T"), co);
    if (c == "jdend-from-o-op") return jdend_from_o_op(a, m.bimodule(o.module), map_or("T"), co);
    if (c == "image-prejordan") return image_prejordan(a, m.representation(o.module), map_or("T"), co);
    throw InputError("unknown construction \"" + c + "\"");
}

template <Scalar K>
void cmd_derive(Run& run, const AlgebraModel<K>& m, const Options& o) {
    bool same_space = false;
    auto r = construct(m, o, same_space);
    AlgebraModel<K> out = model_of(r);
    if (same_space) {
        out.algebra.basis = m.algebra.basis;
        out.maps = m.maps;
        if (r.construction == "transpose") out.modules = m.modules;
    }
    json c;
    c["construction"] = r.construction;
    c["inputs"] = json::array({o.file});
    for (const auto& extra : {o.map, o.map2, o.module})
        if (!extra.empty()) c["inputs"].push_back(extra);
    c["checked"] = !o.unchecked;
    c["policy"] = o.policy;
    if (r.expected_suite) c["expectedSuite"] = suite_name(*r.expected_suite);
    c["output"] = o.output.empty() ? json(nullptr) : json(o.output);
    c["assertions"] = json::array();
    for (const auto& v : r.assertions) c["assertions"].push_back(verdict_json(out.algebra, v));
    if (!r.notes.empty()) c["notes"] = r.notes;
    run.doc.constructions.push_back(c);

    run.text << "derived " << r.construction << " (dim " << out.algebra.dim << ")";
    if (!o.output.empty()) run.text << " -> " << o.output;
    run.text << "\n";
    for (const auto& v : r.assertions) run.text << "  (assert) " << verdict_text(out.algebra, v) << "\n";
    for (const auto& n : r.notes) run.text << "  note: " << n << "\n";

    const std::string text = serialize_algebra(out);
    if (!o.output.empty()) write_file(o.output, text);
    else if (o.format == "text") run.text << text;

    if (!o.unchecked) {
        for (const auto& rep : verify_result(r)) emit(run, out.algebra, rep, "output");
        for (const auto& v : r.assertions)
            if (!v.pass && v.name != "compatibility" && v.name != "representation") run.fail();
    }
}

// --- verify-op ---------------------------------------------------------------

template <Scalar K>
void cmd_verify_op(Run& run, const AlgebraModel<K>& m, const Options& o) {
    const auto& a = m.algebra;
    const Policy p = policy_of(o);
    auto map_or = [&](const std::string& fallback) { return m.map(o.map.empty() ? fallback : o.map); };
    if (o.kind == "rb") {
        emit(run, a, verify_rota_baxter(a, o.label, map_or("R"), p), "rota-baxter(" + o.label + ")");
    } else if (o.kind == "o-jordan") {
        emit(run, a, verify_o_operator_jordan(a, m.representation(o.module), map_or("T"), p), "o-operator(jordan)");
    } else if (o.kind == "o-prejordan") {
        emit(run, a, verify_o_operator_prejordan(a, m.bimodule(o.module), map_or("T"), p), "o-operator(pre-jordan)");
    } else if (o.kind == "commute") {
        auto v = commute_check(map_or("R1"), m.map(o.map2.empty() ? "R2" : o.map2));
        run.doc.reports.push_back(verdict_json(a, v));
        run.text << verdict_text(a, v) << "\n";
        if (!v.pass) run.fail();
    } else {
        throw InputError("unknown operator kind \"" + o.kind + "\" (rb, o-jordan, o-prejordan, commute)");
    }
}

// --- search-rb ---------------------------------------------------------------

template <Scalar K>
void cmd_search(Run& run, const AlgebraModel<K>& m, const Options& o) {
    if constexpr (!std::is_same_v<K, Fp>) {
        throw InputError("search-rb needs a file over F_p");
    } else {
        const auto& a = m.algebra;
        const auto pattern = o.pattern.empty() ? SearchPattern::all_free(a.dim) : SearchPattern::parse(o.pattern, a.dim);
        const auto found = search_rota_baxter_fp(a, o.label, pattern, policy_of(o), o.budget, o.jobs);
        AlgebraModel<Fp> out;
        out.algebra = a;
        const std::size_t width = std::to_string(found.size()).size();
        json list = json::array();
        for (std::size_t k = 0; k < found.size(); ++k) {
            std::string idx = std::to_string(k + 1);
            out.maps.emplace("R" + std::string(width - idx.size(), '0') + idx, found[k]);
            list.push_back(matrix_json(found[k]));
        }
        json r;
        r["search"] = "rota-baxter";
        r["label"] = o.label;
        r["policy"] = o.policy;
        r["pattern"] = o.pattern.empty() ? json(nullptr) : json(o.pattern);
        r["count"] = found.size();
        r["operators"] = list;
        if (!o.output.empty()) r["output"] = o.output;
        run.doc.results.push_back(r);
        run.text << "search-rb (" << o.policy << "): " << found.size() << " operator(s)\n";
        for (const auto& f : found) run.text << "  " << matrix_json(f).dump() << "\n";
        if (!o.output.empty()) write_file(o.output, serialize_algebra(out));
    }
}

int execute(const Options& o) {
    Run run;
    run.doc.command = o.command;
    int code = 0;
    try {
        const std::string text = read_file(o.file);
        run.doc.input_digest = fnv1a_digest(text);
        auto model = parse_algebra_file(text);
        std::visit(
            [&](const auto& m) {
                if (o.command == "check") cmd_check(run, m, o);
                else if (o.command == "derive") cmd_derive(run, m, o);
                else if (o.command == "verify-op") cmd_verify_op(run, m, o);
                else cmd_search(run, m, o);
            },
            model);
        code = run.status;
    } catch (const PreconditionFailed& e) {
        run.text << "precondition failed: " << e.what() << "\n";
        run.doc.results.push_back(json{{"error", "precondition"}, {"message", e.what()}});
        code = 1;
    } catch (const NotInvertible& e) {
        run.text << "not invertible: " << e.what() << "\n";
        run.doc.results.push_back(json{{"error", "not-invertible"}, {"message", e.what()}});
        code = 1;
    } catch (const BudgetExceeded& e) {
        run.text << "budget exceeded: " << e.what() << "\n";
        run.doc.results.push_back(json{{"error", "budget"}, {"message", e.what()}});
        code = 2;
    } catch (const Error& e) {
        run.text << "input error: " << e.what() << "\n";
        run.doc.results.push_back(json{{"error", "input"}, {"message", e.what()}});
        code = 2;
    }
    run.doc.exit_status = code;
    if (o.format == "json") std::cout << run.doc.dump();
    else std::cout << run.text.str();
    if (!o.output.empty() && (o.command == "check" || o.command == "verify-op")) write_file(o.output, run.doc.dump());
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hom-Jordan, Hom-pre-Jordan and Hom-J-dendriform algebra toolkit"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "algebra file (JSON)")->required();
        sub->add_option("--policy", o.policy, "operator policy")->check(CLI::IsMember({"strict", "lax"}));
        sub->add_option("--suite", o.suite, "suite selector");
        sub->add_flag("--unchecked", o.unchecked, "skip precondition checks");
        sub->add_option("-o,--output", o.output, "output path");
        sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--module", o.module, "module name");
        sub->add_option("--label", o.label, "product label");
    };

    auto* check = app.add_subcommand("check", "check a suite on an algebra file");
    common(check);
    auto* derive = app.add_subcommand("derive", "apply a construction");
    common(derive);
    derive->add_option("construction", o.construction, "construction name")->required();
    derive->add_option("--map", o.map, "map name (R, T, beta, R1)");
    derive->add_option("--map2", o.map2, "second map name (R2)");
    auto* verify = app.add_subcommand("verify-op", "verify a Rota-Baxter or O-operator");
    common(verify);
    verify->add_option("--kind", o.kind, "rb, o-jordan, o-prejordan or commute");
    verify->add_option("--map", o.map, "map name");
    verify->add_option("--map2", o.map2, "second map name for commute");
    auto* search = app.add_subcommand("search-rb", "exhaustive Rota-Baxter search over F_p");
    common(search);
    search->add_option("--pattern", o.pattern, "free entries, e.g. \"000;000;**0\"");
    search->add_option("--budget", o.budget, "maximum number of candidates");
    search->add_option("--jobs", o.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    for (auto* sub : {check, derive, verify, search})
        if (sub->parsed()) o.command = sub->get_name();
    if (o.command == "search-rb" && search->count("--policy") == 0) o.policy = "lax";
    return execute(o);
}
