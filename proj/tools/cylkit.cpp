#include "cylkit/json_io.hpp"
#include "cylkit/kernels.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

using namespace cylkit;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2 };

struct Common {
    std::optional<std::int64_t> N_opt;
    std::optional<int> D;
    std::int64_t N = 20;
    std::string format = "text";
    bool json() const { return format == "json"; }
};

struct ObjectArgs {
    std::string kind = "CP";
    std::string delta;
    std::string weights;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--N", c.N_opt, "q-window: coefficients below q^N")->check(CLI::PositiveNumber);
    cmd->add_option("--D", c.D, "z-window: z-degree up to D")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_object(CLI::App* cmd, ObjectArgs& o) {
    cmd->add_option("--kind", o.kind, "CP, SCP, DSPP or DCP");
    cmd->add_option("--delta", o.delta, "profile, e.g. \"(-1,1,1)\" or \"-++\"")->required();
    cmd->add_option("--weights", o.weights, "diagonal weights, e.g. \"(1,3,1)\" (default: standard)");
}

// Reads inline JSON, or a file when the argument starts with '@'.
Json read_json(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw Error("cannot read " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
}

struct Resolved {
    Kind kind;
    Profile profile;
    WeightVector weights;
};

Resolved resolve(const ObjectArgs& o) {
    auto k = parse_kind(o.kind);
    if (!k) throw Error("unknown kind \"" + o.kind + "\"");
    Profile p = parse_profile(o.delta);
    WeightVector w;
    if (!o.weights.empty()) w = parse_weights(o.weights);
    else if (*k == Kind::SCP) w = WeightVector::symmetric(p.width() + 1);
    else w = WeightVector::standard(weight_count(*k, p.width()));
    return {*k, p, w};
}

// Weights passed to library calls that take SCP weights implicitly.
WeightVector call_weights(const Resolved& r) { return r.kind == Kind::SCP ? WeightVector() : r.weights; }

// Largest part any object inside the q-window can carry.
int univariate_part_cap(const WeightVector& w, std::int64_t N) {
    Rational m = 0;
    for (const auto& x : w.a)
        if (x > 0 && (m == 0 || x < m)) m = x;
    if (m == 0) throw Error("all weights are zero");
    Rational cap = Rational(N - 1) / m;
    mpz_class f = cap.get_num() / cap.get_den();
    return static_cast<int>(std::max<long>(f.get_si(), 0));
}

std::string series_text(const TruncatedSeries& s) {
    std::ostringstream os;
    const Window& w = s.window();
    os << "window: N=" << to_string(w.q_order()) << " D=" << w.z_order;
    if (w.q_scale != 1) os << " q_scale=" << w.q_scale;
    os << "\n";
    for (int z = 0; z <= w.z_order; ++z) {
        if (w.z_order > 0) os << "z^" << z << ":";
        for (std::int64_t q = 0; q < w.q_limit; ++q) os << (q == 0 && w.z_order == 0 ? "" : " ") << to_string(s.at(z, q));
        os << "\n";
    }
    return os.str();
}

void emit(const Common& c, std::string_view type, Json body, const std::string& text) {
    if (c.json()) std::cout << envelope(type, std::move(body)).dump(2) << "\n";
    else std::cout << text;
}

// ---- commands ----

int cmd_series(const Common& c, const std::string& product) {
    ProductSpec spec = product_from_json(read_json(product));
    std::vector<Rational> ex = spec.exponents();
    int scale = static_cast<int>(lcm_of_denominators(ex));
    TruncatedSeries s = expand_product(spec, Window::make(c.N, c.D.value_or(0), scale));
    emit(c, "series", Json{{"product", to_json(spec)}, {"series", to_json(s)}}, to_string(spec) + "\n" + series_text(s));
    return kOk;
}

int cmd_enumerate(const Common& c, const ObjectArgs& o, bool list) {
    Resolved r = resolve(o);
    if (list) {
        EnumCaps caps;
        caps.max_weighted_size = Rational(c.N - 1);
        caps.max_part = c.D;
        auto objs = enumerate(r.kind, r.profile, call_weights(r), caps);
        Json arr = Json::array();
        std::ostringstream os;
        for (const auto& g : objs) {
            arr.push_back(to_json(g));
            os << to_string(g.weighted_size());
            for (const auto& lam : g.diagonals) os << " " << to_string(lam);
            os << "\n";
        }
        os << objs.size() << " objects of weighted size <= " << (c.N - 1) << "\n";
        emit(c, "objects", Json{{"count", objs.size()}, {"objects", std::move(arr)}}, os.str());
        return kOk;
    }
    TruncatedSeries s;
    const int scale = r.weights.grid_scale();
    if (c.D) s = genfun_by_enumeration(r.kind, r.profile, call_weights(r), Window::make(c.N, *c.D, scale));
    else s = genfun_by_enumeration(r.kind, r.profile, call_weights(r), Window::make(c.N, univariate_part_cap(r.weights, c.N), scale)).z_marginal();
    std::string head = std::string(kind_name(r.kind)) + " " + to_string(r.profile) + " weights " + to_string(r.weights) + "\n";
    emit(c, "enumeration",
         Json{{"kind", std::string(kind_name(r.kind))}, {"delta", to_json(r.profile)}, {"weights", to_json(r.weights)}, {"series", to_json(s)}},
         head + series_text(s));
    return kOk;
}

int cmd_product(const Common& c, const ObjectArgs& o, const std::string& orientation, bool expand) {
    Resolved r = resolve(o);
    W3Orientation orient = orientation == "as_printed" ? W3Orientation::as_printed : W3Orientation::mirrored;
    Json body{{"kind", std::string(kind_name(r.kind))}, {"delta", to_json(r.profile)}, {"weights", to_json(r.weights)}};
    std::ostringstream os;
    ProductSpec spec;
    if (r.kind == Kind::CP) {
        WMultiset m = w3_weighted(r.profile, r.weights, orient);
        body["orientation"] = std::string(orientation_name(orient));
        body["W3"] = to_json(m);
        body["balanced"] = is_balanced(m);
        os << "W3 = " << to_string(m) << (is_balanced(m) ? " (balanced)" : " (not balanced)") << "\n";
        spec = cp_product(r.profile, r.weights, orient);
    } else if (r.kind == Kind::DSPP || r.kind == Kind::SCP) {
        auto [w1, w2] = w1_w2(r.profile, r.weights);
        body["W1"] = to_json(w1);
        body["W2"] = to_json(w2);
        os << "W1 = " << to_string(w1) << "\nW2 = " << to_string(w2) << "\n";
        spec = dspp_product(r.profile, r.weights);
    } else {
        throw Error("no product formula for DCP");
    }
    body["product"] = to_json(spec);
    os << "product = " << to_string(spec) << "\n";
    if (expand) {
        TruncatedSeries s = expand_product(spec, Window::make(c.N, c.D.value_or(0), r.weights.grid_scale()));
        body["series"] = to_json(s);
        os << series_text(s);
    }
    emit(c, "product", std::move(body), os.str());
    return kOk;
}

SystemOptions system_options(bool normalized, bool no_quotient) { return {.normalized = normalized, .reversal_quotient = !no_quotient}; }

int cmd_system(const Common& c, const ObjectArgs& o, bool normalized, bool no_quotient) {
    Resolved r = resolve(o);
    FunctionalSystem sys = build_system(r.kind, r.profile, call_weights(r), system_options(normalized, no_quotient));
    emit(c, "system", to_json(sys), to_string(sys));
    return kOk;
}

int cmd_solve(const Common& c, const ObjectArgs& o, bool normalized, bool no_quotient) {
    Resolved r = resolve(o);
    FunctionalSystem sys = build_system(r.kind, r.profile, call_weights(r), system_options(normalized, no_quotient));
    Window w = Window::make(c.N, c.D.value_or(static_cast<int>(c.N - 1)), sys.scale);
    TruncatedSeries s = solve_fixed_point(sys, w).at(sys.canonical(r.profile));
    if (normalized && sys.normalized) s = denormalize(s);
    if (!c.D) s = s.z_marginal();
    std::string head = std::string(kind_name(r.kind)) + " " + to_string(r.profile) + " by the functional system (" +
                       std::to_string(sys.equations.size()) + " equations)\n";
    emit(c, "solution",
         Json{{"kind", std::string(kind_name(r.kind))}, {"delta", to_json(r.profile)}, {"weights", to_json(r.weights)},
              {"equations", sys.equations.size()}, {"series", to_json(s)}},
         head + series_text(s));
    return kOk;
}

int cmd_verify(const Common& c, std::vector<std::string> cases, bool list, int jobs) {
    if (list) {
        std::ostringstream os;
        Json arr = Json::array();
        for (const auto& info : registered_cases()) {
            os << info.label;
            for (const auto& a : info.aliases) os << " | " << a;
            os << "  " << info.title << "\n";
            arr.push_back(Json{{"label", info.label}, {"aliases", info.aliases}, {"title", info.title}});
        }
        emit(c, "cases", Json{{"cases", std::move(arr)}}, os.str());
        return kOk;
    }
    if (cases.empty())
        for (const auto& info : registered_cases()) cases.push_back(info.label);
    std::vector<std::string> labels;
    for (const auto& label : cases) {
        auto resolved = resolve_case(label);
        if (!resolved) throw Error("unknown case \"" + label + "\"");
        labels.push_back(*resolved);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    VerifyOptions opt;
    opt.N = c.N_opt;
    opt.D = c.D;
    std::vector<CaseReport> reports(labels.size());
    const std::size_t width = static_cast<std::size_t>(std::max(jobs, 1));
    for (std::size_t start = 0; start < labels.size(); start += width) {
        std::vector<std::future<CaseReport>> running;
        for (std::size_t i = start; i < std::min(labels.size(), start + width); ++i)
            running.push_back(std::async(std::launch::async, [&, i] { return verify_case(labels[i], opt); }));
        for (std::size_t i = 0; i < running.size(); ++i) reports[start + i] = running[i].get();
    }

    bool ok = true;
    std::ostringstream os;
    Json arr = Json::array();
    for (const auto& r : reports) {
        ok = ok && r.ok();
        arr.push_back(to_json(r));
        if (reports.size() == 1) os << to_text(r);
        else os << (r.ok() ? "ok     " : "FAILED ") << r.label << ": " << summary_line(r) << "\n";
    }
    // a lone report-only case reports its verdict through the exit code
    bool unequal_report = false;
    for (const auto& r : reports)
        for (const auto& cmp : r.comparisons) unequal_report = unequal_report || (cmp.report_only && !cmp.equal);
    emit(c, "verification", Json{{"ok", ok}, {"reports", std::move(arr)}}, os.str());
    if (!ok) return kMismatch;
    if (reports.size() == 1 && reports[0].asserted() == 0 && unequal_report) return kMismatch;
    return kOk;
}

int cmd_fit(const Common& c, const std::string& problem) {
    FitProblem pb = fit_problem_from_json(read_json(problem));
    FitResult r = fit_weights(pb);
    std::ostringstream os;
    if (r.infeasible) os << "infeasible: " << *r.infeasible << "\n";
    else {
        for (const auto& s : r.solutions) os << to_string(s.weights) << (s.forward_check ? "  forward check ok" : "  forward check FAILED") << "\n";
        os << r.solutions.size() << " solution(s) from " << r.assignments << " complete assignment(s)\n";
    }
    emit(c, "fit", Json{{"problem", to_json(pb)}, {"result", to_json(r)}}, os.str());
    if (r.infeasible) return kUsage;
    for (const auto& s : r.solutions)
        if (!s.forward_check) return kMismatch;
    return kOk;
}

int cmd_balance(const Common& c, int max_width) {
    BalanceReport r = balance_report(max_width);
    std::ostringstream os;
    if (r.ok()) os << "all " << r.profiles << " profiles balanced\n";
    else {
        for (const auto& p : r.unbalanced) os << "unbalanced: " << to_string(p) << "\n";
        os << r.unbalanced.size() << " of " << r.profiles << " profiles unbalanced\n";
    }
    emit(c, "balance", to_json(r), os.str());
    return r.ok() ? kOk : kMismatch;
}

int cmd_convert(const Common& c, const std::string& delta, const std::string& composition) {
    if (delta.empty() == composition.empty()) throw Error("give exactly one of --delta and --composition");
    Profile p;
    CwComposition cw;
    if (!delta.empty()) {
        p = parse_profile(delta);
        cw = to_composition(p);
    } else {
        cw = parse_composition(composition);
        p = from_composition(cw);
    }
    emit(c, "profile", Json{{"delta", to_json(p)}, {"composition", to_string(cw)}, {"rank", p.rank()}},
         to_string(p) + " <-> " + to_string(cw) + "\n");
    return kOk;
}

int cmd_discover(const Common& c, int max_width, int max_weight, std::int64_t verify_order) {
    EquivalenceSearch s;
    s.max_width = max_width;
    s.max_weight = max_weight;
    s.N = c.N;
    s.verify_order = verify_order;
    auto groups = discover_equivalences(s);
    std::ostringstream os;
    Json arr = Json::array();
    for (const auto& g : groups) {
        arr.push_back(to_json(g));
        os << "group of " << g.members.size() << ":\n";
        for (const auto& m : g.members) {
            os << "  " << kind_name(m.kind) << " " << to_string(m.profile) << " " << to_string(m.weights) << "  " << m.product;
            if (m.enumeration_agrees) os << (*m.enumeration_agrees ? "  [enumeration agrees]" : "  [ENUMERATION DIFFERS]");
            os << "\n";
        }
    }
    os << groups.size() << " group(s)\n";
    emit(c, "equivalences", Json{{"groups", std::move(arr)}}, os.str());
    for (const auto& g : groups)
        for (const auto& m : g.members)
            if (m.enumeration_agrees && !*m.enumeration_agrees) return kMismatch;
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cylkit: exact q-series verification for cylindric partitions and relatives"};
    app.require_subcommand(1);
    std::string isa;
    app.add_option("--isa", isa, "force the convolution kernel (scalar, avx2)");

    Common c;
    ObjectArgs o;

    auto* series = app.add_subcommand("series", "expand an infinite product");
    std::string product;
    series->add_option("--product", product, "product JSON {\"num\": [[exp, mod],...], \"den\": [...]} or @file")->required();
    add_common(series, c);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "generating function (or object list) by direct enumeration");
    bool list_objects = false;
    add_object(enumerate_cmd, o);
    add_common(enumerate_cmd, c);
    enumerate_cmd->add_flag("--list", list_objects, "list the objects instead of counting them");

    auto* product_cmd = app.add_subcommand("product", "W-multisets and product formula for a profile");
    std::string orientation = "mirrored";
    bool expand = false;
    add_object(product_cmd, o);
    add_common(product_cmd, c);
    product_cmd->add_option("--orientation", orientation, "pair-term orientation")->check(CLI::IsMember({"mirrored", "as_printed"}));
    product_cmd->add_flag("--expand", expand, "also expand the product");

    bool normalized = false, no_quotient = false;
    auto* system = app.add_subcommand("system", "print the functional equation system");
    add_object(system, o);
    add_common(system, c);
    system->add_flag("--normalized", normalized, "multiply through by (zq;q)_inf");
    system->add_flag("--no-quotient", no_quotient, "keep delta and -rev(delta) apart");

    auto* solve = app.add_subcommand("solve", "solve the functional system by fixed-point iteration");
    add_object(solve, o);
    add_common(solve, c);
    solve->add_flag("--normalized", normalized, "solve the normalized system");
    solve->add_flag("--no-quotient", no_quotient, "keep delta and -rev(delta) apart");

    auto* verify = app.add_subcommand("verify", "run registered identity checks");
    std::vector<std::string> cases;
    bool list_cases = false;
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    verify->add_option("--case", cases, "case label or alias (repeatable; default: all)");
    add_common(verify, c);
    verify->add_flag("--list", list_cases, "list registered cases");
    verify->add_option("--jobs", jobs, "cases run concurrently")->check(CLI::PositiveNumber);

    auto* fit = app.add_subcommand("fit", "fit weights to a target W-multiset");
    std::string problem;
    fit->add_option("--problem", problem, "FitProblem JSON or @file")->required();
    add_common(fit, c);

    auto* balance = app.add_subcommand("balance", "check the k-balance of W3 for every profile");
    int max_width = 12;
    balance->add_option("--max-width", max_width, "largest width")->check(CLI::Range(1, 24));
    add_common(balance, c);

    auto* convert = app.add_subcommand("convert", "convert between the +-1 and composition forms of a profile");
    std::string conv_delta, conv_comp;
    convert->add_option("--delta", conv_delta, "profile");
    convert->add_option("--composition", conv_comp, "\"[g1,...]@offset\"");
    add_common(convert, c);

    auto* discover = app.add_subcommand("discover", "search for parameter sets with equal products");
    int disc_width = 3, disc_weight = 3;
    std::int64_t verify_order = 8;
    discover->add_option("--max-width", disc_width, "largest width")->check(CLI::Range(1, 6));
    discover->add_option("--max-weight", disc_weight, "weights range over 0..max")->check(CLI::Range(0, 6));
    discover->add_option("--verify-order", verify_order, "enumeration re-check order (0 disables)")->check(CLI::NonNegativeNumber);
    add_common(discover, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (c.N_opt) c.N = *c.N_opt;
    try {
        if (!isa.empty()) {
            auto which = kernels::parse_isa(isa);
            if (!which) throw Error("unknown kernel \"" + isa + "\"");
            kernels::force_isa(*which);
        }
        if (series->parsed()) return cmd_series(c, product);
        if (enumerate_cmd->parsed()) return cmd_enumerate(c, o, list_objects);
        if (product_cmd->parsed()) return cmd_product(c, o, orientation, expand);
        if (system->parsed()) return cmd_system(c, o, normalized, no_quotient);
        if (solve->parsed()) return cmd_solve(c, o, normalized, no_quotient);
        if (verify->parsed()) return cmd_verify(c, cases, list_cases, jobs);
        if (fit->parsed()) return cmd_fit(c, problem);
        if (balance->parsed()) return cmd_balance(c, max_width);
        if (convert->parsed()) return cmd_convert(c, conv_delta, conv_comp);
        if (discover->parsed()) return cmd_discover(c, disc_width, disc_weight, verify_order);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
