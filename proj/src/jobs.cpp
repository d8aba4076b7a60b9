#include "rbar/jobs.hpp"

#include "rbar/errors.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

namespace rbar {

namespace {

struct CommandOutput {
    int exit_code = 0;
    Json result;
    Json diagnostics = Json::object();
    std::optional<std::string> csv;
};

const Json& payload_field(const Json& payload, const char* name) {
    auto it = payload.find(name);
    if (it == payload.end())
        throw Error(std::string("payload is missing field '") + name + "'");
    return *it;
}

ContextPtr payload_context(const Json& payload) { return context_from_json(payload); }

// Function-carrying commands may omit the basis; a single unit symbol then
// hosts one-coordinate frequencies.
ContextPtr payload_context_or_default(const Json& payload) {
    if (payload.contains("basis")) return context_from_json(payload);
    return FrequencyContext::create({{"one", 1.0}});
}

CommandOutput cmd_freq_indep(const Json& p, std::uint64_t) {
    ContextPtr ctx = payload_context(p);
    std::vector<Frequency> freqs;
    for (const auto& f : payload_field(p, "freqs")) freqs.push_back(frequency_from_json(f, ctx));
    CommandOutput out;
    out.result["independent"] = is_z_independent(freqs);
    return out;
}

CommandOutput cmd_freq_join(const Json& p, std::uint64_t) {
    ContextPtr ctx = payload_context(p);
    FrequencyTuple l = tuple_from_json(payload_field(p, "L"), ctx);
    FrequencyTuple lp = tuple_from_json(payload_field(p, "Lp"), ctx);
    CommandOutput out;
    out.result["join"] = to_json(join(l, lp));
    return out;
}

CommandOutput cmd_project(const Json& p, std::uint64_t) {
    ContextPtr ctx = payload_context(p);
    RBarPoint point = rbar_point_from_json(payload_field(p, "point"), ctx);
    LevelSpace space{tuple_from_json(payload_field(p, "level"), ctx),
                     p.value("parametrization_id", std::string("tan_map"))};
    CommandOutput out;
    out.result["point"] = to_json(project(point, space));
    return out;
}

CommandOutput cmd_transition(const Json& p, std::uint64_t) {
    ContextPtr ctx = payload_context(p);
    std::string pid = p.value("parametrization_id", std::string("tan_map"));
    LevelSpace from{tuple_from_json(payload_field(p, "from_level"), ctx), pid};
    LevelSpace to{tuple_from_json(payload_field(p, "to_level"), ctx), pid};
    LevelPoint pt = level_point_from_json(payload_field(p, "point"));
    CommandOutput out;
    out.result["point"] = to_json(transition(from, to, pt));
    return out;
}

CommandOutput cmd_verify_consistency(const Json& p, std::uint64_t) {
    ContextPtr ctx = payload_context(p);
    FrequencyTuple l = tuple_from_json(payload_field(p, "L"), ctx);
    FrequencyTuple lp = tuple_from_json(payload_field(p, "Lp"), ctx);
    int max_exp = static_cast<int>(payload_field(p, "max_exponent").get<double>());
    ConsistencyReport rep = verify_pushforward_exact(l, lp, max_exp);
    CommandOutput out;
    out.result = to_json(rep);
    out.exit_code = rep.pass ? 0 : 1;
    return out;
}

CommandOutput cmd_integrate(const Json& p, std::uint64_t) {
    ContextPtr ctx = payload_context_or_default(p);
    MeasureDescriptor mu = measure_from_json(payload_field(p, "measure"));
    QuantumFunction qf = function_from_json(payload_field(p, "function"), ctx);
    QuadratureConfig quad = quad_from_json(p.value("quad", Json()));
    CommandOutput out;
    try {
        IntegralResult r = integrate(qf, mu, quad);
        out.result["value"] = complex_to_json(r.value);
        out.result["est_error"] = r.est_error;
    } catch (const QuadratureError& e) {
        out.exit_code = 1;
        out.result["value"] = complex_to_json(e.partial_value);
        out.result["est_error"] = e.partial_error;
        out.diagnostics["error"] = "quadrature did not converge; value is a partial estimate";
    }
    return out;
}

CommandOutput cmd_inner_product(const Json& p, std::uint64_t) {
    ContextPtr ctx = payload_context_or_default(p);
    MeasureDescriptor mu = measure_from_json(payload_field(p, "measure"));
    QuantumFunction f1 = function_from_json(payload_field(p, "f1"), ctx);
    QuantumFunction f2 = function_from_json(payload_field(p, "f2"), ctx);
    QuadratureConfig quad = quad_from_json(p.value("quad", Json()));
    CommandOutput out;
    try {
        IntegralResult r = inner_product(f1, f2, mu, quad);
        out.result["value"] = complex_to_json(r.value);
        out.result["est_error"] = r.est_error;
    } catch (const QuadratureError& e) {
        out.exit_code = 1;
        out.result["value"] = complex_to_json(e.partial_value);
        out.result["est_error"] = e.partial_error;
        out.diagnostics["error"] = "quadrature did not converge; value is a partial estimate";
    }
    return out;
}

CommandOutput cmd_isometry_check(const Json& p, std::uint64_t) {
    ContextPtr ctx = payload_context_or_default(p);
    MeasureDescriptor from = measure_from_json(payload_field(p, "from"));
    MeasureDescriptor to = measure_from_json(payload_field(p, "to"));
    QuantumFunction psi = function_from_json(payload_field(p, "function"), ctx);
    QuadratureConfig quad = quad_from_json(p.value("quad", Json()));
    double tol = p.value("tol", 1e-7);

    TransportedFunction phi = isometry_transport(psi, from, to);
    double n1 = std::sqrt(std::max(0.0, norm_squared(psi, from, quad).value.real()));
    double n2 = std::sqrt(std::max(0.0, norm_squared(phi, to, quad).value.real()));
    CommandOutput out;
    out.result["norm_from"] = n1;
    out.result["norm_to"] = n2;
    out.result["deviation"] = std::abs(n1 - n2);
    out.result["tol"] = tol;
    out.result["status"] = std::abs(n1 - n2) <= tol ? "pass" : "fail";
    out.exit_code = std::abs(n1 - n2) <= tol ? 0 : 1;
    return out;
}

std::vector<QuantumFunction> default_jons_family(const ContextPtr& ctx) {
    std::vector<QuantumFunction> family;
    Frequency zero = Frequency::zero(ctx);
    std::vector<Rational> e1(ctx->size());
    e1[0] = 1;
    Frequency b1(ctx, e1);

    QuantumFunction one;
    one.ap.add_term(zero, Complex(1.0, 0.0));
    family.push_back(one);

    QuantumFunction bump;  // strictly positive C0 probe
    bump.c0.eval = [](double x) { return Complex(std::exp(-x * x), 0.0); };
    bump.c0.decay_hint = 1.0;
    family.push_back(bump);

    QuantumFunction mixed;
    mixed.c0.eval = [](double x) { return Complex(1.0 / std::cosh(x), 0.0); };
    mixed.c0.decay_hint = 1.0;
    mixed.ap.add_term(b1, Complex(1.0, 0.0));
    family.push_back(mixed);

    QuantumFunction character;
    character.ap.add_term(b1, Complex(1.0, 0.0));
    family.push_back(character);
    return family;
}

CommandOutput cmd_jons_check(const Json& p, std::uint64_t) {
    const Json& cand = payload_field(p, "candidate");
    CandidateMeasure candidate;
    candidate.real_weight = cand.value("weight", 0.0);
    if (cand.contains("rho")) candidate.rho = parametrization_from_json(cand["rho"]);

    ContextPtr ctx;
    std::vector<QuantumFunction> family;
    if (p.contains("family")) {
        ctx = payload_context(p);
        for (const auto& f : p["family"]) family.push_back(function_from_json(f, ctx));
    } else {
        ctx = FrequencyContext::create({{"one", 1.0}});
        family = default_jons_family(ctx);
    }
    QuadratureConfig quad = quad_from_json(p.value("quad", Json()));
    double tol = p.value("tol", 1e-10);

    JonsReport rep = jons_conditions_check(candidate, family, quad, tol);
    CommandOutput out;
    out.result = to_json(rep);
    out.exit_code = (rep.condition_i.holds && rep.condition_ii.holds) ? 0 : 1;
    return out;
}

std::string holonomy_csv(const std::function<Su2Element(double)>& h, double c_min, double c_max,
                         int count) {
    std::string csv = "c,re_00,im_00,re_01,im_01,re_10,im_10,re_11,im_11\n";
    char buf[64];
    for (int i = 0; i < count; ++i) {
        double c = count == 1 ? c_min : c_min + (c_max - c_min) * i / (count - 1);
        Mat2 m = h(c).matrix();
        std::snprintf(buf, sizeof(buf), "%.17g", c);
        csv += buf;
        for (int e = 0; e < 4; ++e) {
            std::snprintf(buf, sizeof(buf), ",%.17g,%.17g", m.m[e].real(), m.m[e].imag());
            csv += buf;
        }
        csv += "\n";
    }
    return csv;
}

CommandOutput cmd_holonomy(const Json& p, std::uint64_t) {
    std::string type = payload_field(p, "type").get<std::string>();
    double c = payload_field(p, "c").get<double>();
    std::function<Su2Element(double)> h;
    if (type == "linear") {
        double l = payload_field(p, "l").get<double>();
        Vec3 v = p.contains("v") ? vec3_from_json(p["v"]) : Vec3{1, 0, 0};
        h = [l, v](double cc) { return holonomy_linear(cc, l, v); };
    } else if (type == "circular") {
        double tau = payload_field(p, "tau").get<double>();
        double r = payload_field(p, "r").get<double>();
        CircularCurveParams params = p.contains("n")
                                         ? CircularCurveParams::with_axis(tau, r, vec3_from_json(p["n"]))
                                         : CircularCurveParams::reduced(tau, r);
        h = [params](double cc) { return holonomy_circular(cc, params); };
    } else {
        throw Error("holonomy type must be 'linear' or 'circular'");
    }

    CommandOutput out;
    out.result["matrix"] = to_json(h(c).matrix());
    double c_min = c, c_max = c;
    int count = 1;
    if (p.contains("grid")) {
        const Json& g = p["grid"];
        c_min = payload_field(g, "c_min").get<double>();
        c_max = payload_field(g, "c_max").get<double>();
        count = static_cast<int>(payload_field(g, "count").get<double>());
        if (count < 1 || !(c_max >= c_min)) throw Error("invalid holonomy grid");
        out.result["grid_points"] = count;
    }
    out.csv = holonomy_csv(h, c_min, c_max, count);
    return out;
}

CommandOutput cmd_circle_lemma(const Json& p, std::uint64_t) {
    double tau = payload_field(p, "tau").get<double>();
    double r = payload_field(p, "r").get<double>();
    double epsilon = payload_field(p, "epsilon").get<double>();
    CircleLemmaGrid grid;
    if (p.contains("grid")) {
        const Json& g = p["grid"];
        grid.c_span = g.value("c_span", grid.c_span);
        grid.c_count = g.value("c_count", grid.c_count);
        grid.band_samples = g.value("band_samples", grid.band_samples);
        grid.alternation_max = g.value("alternation_max", grid.alternation_max);
        grid.merge_max = g.value("merge_max", grid.merge_max);
        grid.spacing_max = g.value("spacing_max", grid.spacing_max);
    }
    CircleLemmaReport rep = circle_lemma_report(tau, r, grid, epsilon);
    CommandOutput out;
    out.result = to_json(rep);
    out.exit_code = rep.all_pass() ? 0 : 1;
    return out;
}

CommandOutput cmd_al_verify(const Json& p, std::uint64_t seed) {
    DecompositionSpec spec = spec_from_json(p);
    std::size_t n = static_cast<std::size_t>(p.value("N", 100000.0));
    MomentPanelReport rep = verify_al_pushforward(spec, n, seed);
    CommandOutput out;
    out.result = to_json(rep);
    out.exit_code = rep.pass ? 0 : 1;
    return out;
}

using Handler = CommandOutput (*)(const Json&, std::uint64_t);

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"freq-indep", cmd_freq_indep},
        {"freq-join", cmd_freq_join},
        {"project", cmd_project},
        {"transition", cmd_transition},
        {"verify-consistency", cmd_verify_consistency},
        {"integrate", cmd_integrate},
        {"inner-product", cmd_inner_product},
        {"isometry-check", cmd_isometry_check},
        {"jons-check", cmd_jons_check},
        {"holonomy", cmd_holonomy},
        {"circle-lemma", cmd_circle_lemma},
        {"al-verify", cmd_al_verify},
    };
    return table;
}

}  // namespace

JobResult run_job(const Json& job) {
    JobResult out;
    std::string command;
    Json payload = Json::object();
    std::uint64_t seed = 0;
    bool has_seed = false;

    out.envelope = Json::object();
    try {
        if (!job.is_object()) throw Error("job must be a JSON object");
        auto cmd_it = job.find("command");
        if (cmd_it == job.end() || !cmd_it->is_string())
            throw Error("job requires a string field 'command'");
        command = cmd_it->get<std::string>();
        if (job.contains("payload")) {
            if (!job["payload"].is_object()) throw Error("'payload' must be an object");
            payload = job["payload"];
        }
        if (job.contains("seed")) {
            if (!job["seed"].is_number()) throw Error("'seed' must be an integer");
            seed = job["seed"].get<std::uint64_t>();
            has_seed = true;
        }

        auto it = handlers().find(command);
        if (it == handlers().end()) throw Error("unknown command '" + command + "'");

        CommandOutput res = it->second(payload, seed);
        out.exit_code = res.exit_code;
        out.csv = std::move(res.csv);
        out.envelope["command"] = command;
        out.envelope["inputs_echo"] = payload;
        out.envelope["result"] = std::move(res.result);
        out.envelope["diagnostics"] = std::move(res.diagnostics);
        out.envelope["seed"] = has_seed ? Json(seed) : Json(nullptr);
        return out;
    } catch (const QuadratureError& e) {
        out.exit_code = 1;
        out.envelope["command"] = command.empty() ? "?" : command;
        out.envelope["error"] = std::string("quadrature non-convergence: ") + e.what();
        out.envelope["partial"] = complex_to_json(e.partial_value);
        return out;
    } catch (const Json::exception& e) {
        out.exit_code = 2;
        out.envelope["command"] = command.empty() ? "?" : command;
        out.envelope["error"] = std::string("invalid input: ") + e.what();
        return out;
    } catch (const std::exception& e) {
        out.exit_code = 2;
        out.envelope["command"] = command.empty() ? "?" : command;
        out.envelope["error"] = std::string("invalid input: ") + e.what();
        return out;
    }
}

}  // namespace rbar
