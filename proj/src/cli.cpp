#include "verlinde/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <regex>
#include <sstream>

#include "verlinde/localization.hpp"
#include "verlinde/serialize.hpp"

namespace verlinde {

namespace {

enum class Format { text, json, csv };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobSpec {
    std::string command;
    std::string dump_kind;
    int h = -1;
    int g = -1;
    std::vector<std::string> reps;
    std::vector<std::string> evals;
    std::string morphism = "naive";
    int order = 8;
    std::string format = "text";
    int digits = 20;
    std::string grid;
    long d = 0;
    bool d_given = false;
    bool no_exclusion = false;
};

// Validated inputs shared by every job of one invocation.
struct Plan {
    JobSpec spec;
    Format format = Format::text;
    Morphism morphism = Morphism::naive;
    RatLaurent flow;
    RatLaurent evaluation{Rational(1)};
    std::vector<std::pair<int, int>> jobs;
};

std::pair<int, int> parse_range(const std::string& text, const std::string& key)
{
    static const std::regex range(R"((\d+)(?:\.\.(\d+))?)");
    std::smatch m;
    if (!std::regex_match(text, m, range))
        throw UsageError("bad grid range for " + key + ": '" + text + "'");
    const int a = std::stoi(m[1]);
    const int b = m[2].matched ? std::stoi(m[2]) : a;
    if (b < a)
        throw UsageError("empty grid range for " + key);
    return {a, b};
}

std::vector<std::pair<int, int>> expand_jobs(const JobSpec& s, bool needs_h, bool needs_g)
{
    std::pair<int, int> hr{s.h, s.h}, gr{s.g, s.g};
    if (!s.grid.empty()) {
        std::stringstream parts(s.grid);
        std::string part;
        while (std::getline(parts, part, ',')) {
            const auto eq = part.find('=');
            const std::string key = part.substr(0, eq);
            if (eq == std::string::npos || (key != "h" && key != "g"))
                throw UsageError("grid entries look like h=a..b or g=c..d, got '" + part + "'");
            (key == "h" ? hr : gr) = parse_range(part.substr(eq + 1), key);
        }
    }
    if (needs_h && hr.first < 0)
        throw UsageError("--h is required (non-negative)");
    if (needs_g && gr.first < 0)
        throw UsageError("--g is required (non-negative)");
    std::vector<std::pair<int, int>> jobs;
    for (int h = hr.first; h <= hr.second; ++h)
        for (int g = gr.first; g <= gr.second; ++g)
            jobs.emplace_back(h, g);
    return jobs;
}

Plan make_plan(const JobSpec& s)
{
    Plan p;
    p.spec = s;
    if (s.format == "text")
        p.format = Format::text;
    else if (s.format == "json")
        p.format = Format::json;
    else if (s.format == "csv")
        p.format = Format::csv;
    else
        throw UsageError("--format must be text, json or csv");
    if (s.digits < 1 || s.digits > 60)
        throw UsageError("--digits must lie in 1..60");
    if (s.order < 0)
        throw UsageError("--order must be non-negative");
    try {
        p.morphism = parse_morphism(s.morphism);
        for (const auto& r : s.reps)
            p.flow += parse_character(r);
        for (const auto& w : s.evals)
            p.evaluation = p.evaluation * parse_character(w);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const bool dump = s.command == "dump";
    const bool needs_h = !(dump && s.dump_kind == "euler");
    const bool needs_g = !(dump && s.dump_kind == "frobenius");
    if (dump && s.dump_kind == "euler" && s.g < 0)
        throw UsageError("--g is required (non-negative)");
    p.jobs = dump && s.dump_kind == "euler" ? std::vector<std::pair<int, int>>{{0, s.g}} : expand_jobs(s, needs_h, needs_g);
    if (s.command == "compare" && p.morphism != Morphism::naive)
        throw UsageError("compare runs the localization route, which deforms by the naive morphism only");
    if (dump && p.format == Format::csv && s.dump_kind != "frobenius")
        throw UsageError("csv output is available for dump frobenius only");
    return p;
}

Json inputs_json(const Plan& p, int h, int g)
{
    Json in;
    if (h >= 0)
        in["h"] = h;
    if (g >= 0)
        in["g"] = g;
    in["rep"] = p.spec.reps;
    in["eval"] = p.spec.evals;
    return in;
}

Json integrality_json(const RatSeries& s)
{
    Json rows = Json::array();
    Rational fact = 1;
    for (int n = 0; n <= s.order(); ++n) {
        if (n > 0)
            fact *= n;
        const Rational scaled = fact * s[n];
        rows.push_back(Json{{"n", n}, {"scaled", to_string(scaled)}, {"integral", scaled.get_den() == 1}});
    }
    return rows;
}

// ---------------------------------------------------------------------------
// jobs

Json classical_job(const Plan& p, int h, int g)
{
    const auto data = classical_data<CycSeries>(LevelData(h), {0});
    const Rational v = rational_series(trace_with_insertion(data, g, p.evaluation))[0];
    Json r{{"inputs", inputs_json(p, h, g)}};
    r["value"] = to_json(v, p.spec.digits);
    return r;
}

Json deformed_job(const Plan& p, int h, int g)
{
    const auto data = deform_points<CycSeries>(LevelData(h), {p.flow}, p.morphism, {p.spec.order});
    const RatSeries s = rational_series(trace_with_insertion(data, g, p.evaluation));
    Json r{{"inputs", inputs_json(p, h, g)}};
    r["inputs"]["morphism"] = to_string(p.morphism);
    r["inputs"]["order"] = p.spec.order;
    r["series"] = to_json(s, p.spec.digits);
    r["integrality"] = integrality_json(s);
    return r;
}

AdmissibleClass admissible(const Plan& p, int h)
{
    AdmissibleClass e;
    e.h = h;
    if (!p.flow.is_zero())
        e.exponentials.push_back({p.flow, 0});
    if (!(p.evaluation == RatLaurent(Rational(1))))
        e.evaluations.push_back(p.evaluation);
    return e;
}

Json compare_job(const Plan& p, int h, int g)
{
    const AdmissibleClass e = admissible(p, h);
    const std::vector<int> orders{p.spec.order};
    const RatSeries a = rational_series(route_a_index<CycSeries>(e, g, orders));
    Json r{{"inputs", inputs_json(p, h, g)}};
    r["inputs"]["order"] = p.spec.order;
    r["inputs"]["exclude_singular"] = !p.spec.no_exclusion;
    r["route_a"] = to_json(a, p.spec.digits);

    RouteBOptions opts;
    opts.exclude_singular = !p.spec.no_exclusion;
    try {
        const auto parts = route_b_contributions<CycSeries>(e, g, orders, opts);
        CycSeries total = CycSeries::constant(0, p.spec.order);
        Json support = Json::array();
        for (const auto& c : parts) {
            total += c.value;
            support.push_back(Json{{"root_index", c.root_index}, {"base", to_json(c.base, p.spec.digits)},
                {"contribution", to_json(c.value, p.spec.digits)}});
        }
        const RatSeries b = rational_series(total);
        r["route_b"] = to_json(b, p.spec.digits);
        r["support"] = support;
        int first = -1;
        for (int k = 0; k <= p.spec.order && first < 0; ++k)
            if (!(a[k] == b[k]))
                first = k;
        r["equal"] = first < 0;
        r["first_mismatch"] = first < 0 ? Json(nullptr) : Json(first);
    } catch (const SingularPoint& ex) {
        // Without the exclusion the test function is evaluated at u = +-1.
        if (opts.exclude_singular)
            throw;
        r["route_b"] = nullptr;
        r["route_b_error"] = ex.what();
        r["equal"] = false;
        r["first_mismatch"] = 0;
    }
    return r;
}

Json lines_json(const std::string& text)
{
    Json lines = Json::array();
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

Json dump_euler_job(const Plan& p, int g)
{
    const EulerClass e = virtual_normal_euler(g);
    CohoElement full = e.full();
    if (p.spec.d_given)
        full = full.substitute_d(p.spec.d);
    Json r{{"inputs", Json{{"g", g}}}};
    if (p.spec.d_given)
        r["inputs"]["d"] = p.spec.d;
    r["sign"] = e.sign;
    r["weyl_power"] = e.weyl_power;
    r["l0"] = e.l0;
    r["l1"] = e.l1;
    r["eta_rate"] = to_string(e.eta_rate);
    r["monomials"] = lines_json(full.dump());
    return r;
}

Json dump_integrand_job(const Plan& p, int h, int g)
{
    const IntegrandPieces pieces = assemble_symbolic(admissible(p, h), g);
    Json core = Json::array();
    for (const auto& c : pieces.core)
        core.push_back(to_string(c));
    Json flows = Json::array();
    for (const auto& f : pieces.flows) {
        Json eta = Json::array();
        for (const auto& c : f.eta_part)
            eta.push_back(to_string(c));
        flows.push_back(Json{{"parameter", f.parameter}, {"rate", to_string(f.rate)}, {"eta_part", eta}});
    }
    Json r{{"inputs", inputs_json(p, h, g)}};
    r["modulus"] = pieces.modulus;
    r["euler_sign"] = pieces.euler_sign;
    r["weyl_power"] = pieces.weyl_power;
    r["core"] = core;
    r["flows"] = flows;
    return r;
}

Json dump_frobenius_job(const Plan& p, int h)
{
    std::vector<RatLaurent> flows;
    if (!p.flow.is_zero())
        flows.push_back(p.flow);
    const auto data = deform_points<CycSeries>(LevelData(h), flows, p.morphism, {p.spec.order});
    return to_json(data, p.spec.digits);
}

Json run_job(const Plan& p, int h, int g)
{
    const std::string& c = p.spec.command;
    if (c == "classical")
        return classical_job(p, h, g);
    if (c == "deformed")
        return deformed_job(p, h, g);
    if (c == "compare")
        return compare_job(p, h, g);
    if (p.spec.dump_kind == "euler")
        return dump_euler_job(p, g);
    if (p.spec.dump_kind == "integrand")
        return dump_integrand_job(p, h, g);
    return dump_frobenius_job(p, h);
}

// ---------------------------------------------------------------------------
// rendering

std::string job_header(const Json& in)
{
    std::ostringstream o;
    bool first = true;
    for (const auto& [k, v] : in.items()) {
        if (v.is_array() && v.empty())
            continue;
        o << (first ? "" : " ") << k << '=';
        if (v.is_array()) {
            for (size_t i = 0; i < v.size(); ++i)
                o << (i ? "," : "") << v[i].get<std::string>();
        } else if (v.is_string()) {
            o << v.get<std::string>();
        } else {
            o << v.dump();
        }
        first = false;
    }
    return o.str();
}

void render_series_text(std::ostream& out, const Json& s, const std::string& label)
{
    for (size_t k = 0; k < s["exact"].size(); ++k)
        out << "  " << label << " t^" << k << " = " << s["exact"][k].get<std::string>() << "  ("
            << s["decimal"][k].get<std::string>() << ")\n";
}

std::string cyc_decimal_text(const Json& d)
{
    return d["re"].get<std::string>() + " + " + d["im"].get<std::string>() + "i";
}

void render_text(std::ostream& out, const Plan& p, const std::vector<Json>& records)
{
    const std::string& c = p.spec.command;
    for (const auto& r : records) {
        if (c == "dump" && p.spec.dump_kind == "frobenius") {
            out << "h=" << r["h"].get<int>() << " modulus=" << r["modulus"].get<int>()
                << " morphism=" << r["morphism"].get<std::string>() << " order=" << r["order"].get<int>() << '\n';
            for (const auto& pt : r["points"]) {
                out << "point j=" << pt["j"].get<int>() << " base=" << pt["base"]["exact"].get<std::string>()
                    << " (conductor " << pt["base"]["conductor"].get<int>() << ")\n";
                for (const char* key : {"epsilon", "theta"}) {
                    const Json& s = pt[key];
                    for (size_t k = 0; k < s["exact"].size(); ++k)
                        out << "  " << key << " t^" << k << " = " << s["exact"][k].get<std::string>() << "  ("
                            << cyc_decimal_text(s["decimal"][k]) << ")\n";
                }
            }
            continue;
        }
        out << job_header(r["inputs"]) << '\n';
        if (c == "classical") {
            out << "  value = " << r["value"]["exact"].get<std::string>() << "  ("
                << r["value"]["decimal"].get<std::string>() << ")\n";
        } else if (c == "deformed") {
            render_series_text(out, r["series"], "c");
            bool all = true;
            for (const auto& row : r["integrality"])
                all = all && row["integral"].get<bool>();
            out << "  n!*c_n integral: " << (all ? "yes" : "no") << '\n';
        } else if (c == "compare") {
            if (r["route_b"].is_null()) {
                out << "  MISMATCH: " << r["route_b_error"].get<std::string>() << '\n';
                continue;
            }
            render_series_text(out, r["route_a"], "A");
            render_series_text(out, r["route_b"], "B");
            if (r["equal"].get<bool>())
                out << "  EQUAL through t^" << p.spec.order << '\n';
            else
                out << "  MISMATCH at t^" << r["first_mismatch"].get<int>() << '\n';
        } else if (p.spec.dump_kind == "euler") {
            out << "  sign=" << r["sign"].get<int>() << " weyl_power=" << r["weyl_power"].get<int>()
                << " l0=" << r["l0"].get<long>() << " l1=" << r["l1"].get<long>()
                << " eta_rate=" << r["eta_rate"].get<std::string>() << '\n';
            for (const auto& line : r["monomials"])
                out << "  " << line.get<std::string>() << '\n';
        } else {
            out << "  modulus=" << r["modulus"].get<int>() << " euler_sign=" << r["euler_sign"].get<int>()
                << " weyl_power=" << r["weyl_power"].get<int>() << '\n';
            for (size_t k = 0; k < r["core"].size(); ++k)
                out << "  core eta^" << k << " = " << r["core"][k].get<std::string>() << '\n';
            for (const auto& f : r["flows"]) {
                out << "  flow t" << f["parameter"].get<int>() + 1 << " rate = " << f["rate"].get<std::string>() << '\n';
                for (size_t k = 0; k < f["eta_part"].size(); ++k)
                    out << "  flow t" << f["parameter"].get<int>() + 1 << " eta^" << k << " = "
                        << f["eta_part"][k].get<std::string>() << '\n';
            }
        }
    }
}

void render_csv(std::ostream& out, const Plan& p, const std::vector<Json>& records)
{
    const std::string& c = p.spec.command;
    if (c == "classical")
        out << "h,g,value\n";
    else if (c == "deformed")
        out << "h,g,n,coefficient,scaled\n";
    else if (c == "compare")
        out << "h,g,n,route_a,route_b,equal\n";
    else
        out << "h,j,series,n,re,im\n";
    for (const auto& r : records) {
        if (c == "dump") {
            for (const auto& pt : r["points"])
                for (const char* key : {"epsilon", "theta"})
                    for (size_t k = 0; k < pt[key]["decimal"].size(); ++k)
                        out << r["h"].get<int>() << ',' << pt["j"].get<int>() << ',' << key << ',' << k << ','
                            << pt[key]["decimal"][k]["re"].get<std::string>() << ','
                            << pt[key]["decimal"][k]["im"].get<std::string>() << '\n';
            continue;
        }
        const std::string hg =
            std::to_string(r["inputs"]["h"].get<int>()) + ',' + std::to_string(r["inputs"]["g"].get<int>());
        if (c == "classical") {
            out << hg << ',' << r["value"]["decimal"].get<std::string>() << '\n';
        } else if (c == "deformed") {
            const Json& s = r["series"];
            for (size_t k = 0; k < s["decimal"].size(); ++k)
                out << hg << ',' << k << ',' << s["decimal"][k].get<std::string>() << ','
                    << rational_decimal(parse_rational(r["integrality"][k]["scaled"].get<std::string>()), p.spec.digits)
                    << '\n';
        } else {
            const Json& a = r["route_a"];
            for (size_t k = 0; k < a["decimal"].size(); ++k) {
                const bool have_b = !r["route_b"].is_null();
                const bool equal = r["equal"].get<bool>() || (have_b && static_cast<int>(k) < r["first_mismatch"].get<int>());
                out << hg << ',' << k << ',' << a["decimal"][k].get<std::string>() << ','
                    << (have_b ? r["route_b"]["decimal"][k].get<std::string>() : std::string("nan")) << ','
                    << (equal ? 1 : 0) << '\n';
            }
        }
    }
}

void render_json(std::ostream& out, const Plan& p, const std::vector<Json>& records)
{
    Json doc;
    doc["command"] = p.spec.command == "dump" ? "dump " + p.spec.dump_kind : p.spec.command;
    doc["digits"] = p.spec.digits;
    doc["jobs"] = records;
    out << doc.dump(2) << '\n';
}

void add_job_options(CLI::App* sc, JobSpec& s)
{
    sc->set_help_flag("--help", "Show this help");
    sc->add_option("--h", s.h, "Level (power of the determinant bundle)");
    sc->add_option("--g", s.g, "Genus");
    sc->add_option("--rep", s.reps, "Deforming representation: su2:n or laurent:{e:c,...}")->allow_extra_args(false);
    sc->add_option("--eval", s.evals, "Evaluation insertion: su2:m or laurent:{...}")->allow_extra_args(false);
    sc->add_option("--morphism", s.morphism, "naive or symmetric");
    sc->add_option("--order,--K", s.order, "Truncation order in t");
    sc->add_option("--format", s.format, "text, json or csv");
    sc->add_option("--digits", s.digits, "Fractional digits of decimal output");
    sc->add_option("--grid", s.grid, "Job grid, e.g. h=1..3,g=0..2");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    JobSpec spec;
    CLI::App app{"Verlinde indices, classical and deformed", "verlinde"};
    app.set_help_flag("--help", "Show this help");
    app.require_subcommand(1);

    auto* classical = app.add_subcommand("classical", "Classical index of D^h (with evaluation insertions)");
    auto* deformed = app.add_subcommand("deformed", "Deformed index series through t^K");
    auto* compare = app.add_subcommand("compare", "Compare the Frobenius and localization routes");
    auto* dump = app.add_subcommand("dump", "Dump an intermediate object: euler, integrand or frobenius");
    for (auto* sc : {classical, deformed, compare, dump})
        add_job_options(sc, spec);
    compare->add_flag("--no-exclusion", spec.no_exclusion, "Keep u = +-1 in the support")->group("");
    dump->add_option("kind", spec.dump_kind, "euler, integrand or frobenius")
        ->required()
        ->check(CLI::IsMember({"euler", "integrand", "frobenius"}));
    auto* dopt = dump->add_option("--d", spec.d, "Degree substituted into the Euler class");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CLI::App* target = &app;
        for (auto* sc : app.get_subcommands())
            target = sc;
        out << target->help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    spec.command = app.get_subcommands().front()->get_name();
    spec.d_given = dopt->count() > 0;

    Plan plan;
    try {
        plan = make_plan(spec);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::vector<Json> records;
    bool mismatch = false;
    for (const auto& [h, g] : plan.jobs) {
        try {
            records.push_back(run_job(plan, h, g));
        } catch (const DomainError& e) {
            err << "computation error (h=" << h << ", g=" << g << "): " << e.what() << '\n';
            return kExitComputation;
        }
        if (spec.command == "compare" && !records.back()["equal"].get<bool>())
            mismatch = true;
    }

    switch (plan.format) {
    case Format::text:
        render_text(out, plan, records);
        break;
    case Format::json:
        render_json(out, plan, records);
        break;
    case Format::csv:
        render_csv(out, plan, records);
        break;
    }
    if (mismatch) {
        for (const auto& r : records)
            if (!r["equal"].get<bool>()) {
                err << "mismatch at h=" << r["inputs"]["h"].get<int>() << " g=" << r["inputs"]["g"].get<int>()
                    << ", first differing coefficient t^" << r["first_mismatch"].get<int>() << '\n';
                break;
            }
        return kExitMismatch;
    }
    return kExitOk;
}

} // namespace verlinde
