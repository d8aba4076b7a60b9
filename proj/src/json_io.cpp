#include "rbar/json_io.hpp"

#include "rbar/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace rbar {

namespace {

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw Error(std::string("missing field '") + name + "'");
    return *it;
}

double number_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number()) throw Error(std::string("field '") + name + "' must be a number");
    return v.get<double>();
}

}  // namespace

ContextPtr context_from_json(const Json& j) {
    const Json& basis = field(j, "basis");
    if (!basis.is_array() || basis.empty()) throw Error("'basis' must be a nonempty array");
    std::vector<BasisSymbol> symbols;
    for (const auto& s : basis)
        symbols.push_back({field(s, "id").get<std::string>(), number_field(s, "value")});
    return FrequencyContext::create(std::move(symbols));
}

Frequency frequency_from_json(const Json& j, const ContextPtr& ctx) {
    if (!j.is_array()) throw Error("frequency must be an array of rational strings");
    std::vector<Rational> coords;
    for (const auto& c : j) {
        if (c.is_string())
            coords.push_back(parse_rational(c.get<std::string>()));
        else if (c.is_number_integer())
            coords.push_back(Rational(c.get<long long>()));
        else
            throw Error("frequency coordinates must be rational strings or integers");
    }
    return Frequency(ctx, std::move(coords));
}

FrequencyTuple tuple_from_json(const Json& j, const ContextPtr& ctx) {
    if (!j.is_array() || j.empty()) throw Error("frequency tuple must be a nonempty array");
    std::vector<Frequency> entries;
    for (const auto& f : j) entries.push_back(frequency_from_json(f, ctx));
    return FrequencyTuple(std::move(entries));
}

RBarPoint rbar_point_from_json(const Json& j, const ContextPtr& ctx) {
    if (j.contains("real")) return RBarPoint::real(number_field(j, "real"));
    if (j.contains("bohr")) {
        const Json& b = j["bohr"];
        FrequencyTuple level = tuple_from_json(field(b, "level"), ctx);
        std::vector<double> angles;
        for (const auto& a : field(b, "angles")) angles.push_back(a.get<double>());
        return RBarPoint::bohr(std::move(level), std::move(angles));
    }
    throw Error("point must be {\"real\": x} or {\"bohr\": {level, angles}}");
}

LevelPoint level_point_from_json(const Json& j) {
    if (j.contains("circle")) return CirclePart{number_field(j, "circle")};
    if (j.contains("torus")) {
        std::vector<double> angles;
        for (const auto& a : j["torus"]) angles.push_back(a.get<double>());
        return TorusPart{std::move(angles)};
    }
    throw Error("level point must be {\"circle\": x} or {\"torus\": [...]}");
}

APPolynomial ap_from_json(const Json& j, const ContextPtr& ctx) {
    APPolynomial p;
    if (j.is_null()) return p;
    if (!j.is_array()) throw Error("'ap' must be an array of {freq, re, im} terms");
    for (const auto& term : j) {
        Frequency f = frequency_from_json(field(term, "freq"), ctx);
        double re = term.value("re", 0.0);
        double im = term.value("im", 0.0);
        p.add_term(f, Complex(re, im));
    }
    return p;
}

C0Function c0_from_json(const Json& j) {
    if (j.is_null()) return C0Function::zero();
    std::string kind = field(j, "kind").get<std::string>();
    double amplitude = j.value("amplitude", 1.0);
    double width = j.value("width", 1.0);
    if (!(width > 0.0)) throw Error("c0 width must be positive");
    C0Function f;
    if (kind == "zero") return C0Function::zero();
    if (kind == "gaussian") {
        f.eval = [amplitude, width](double x) {
            return Complex(amplitude * std::exp(-(x / width) * (x / width)), 0.0);
        };
        f.decay_hint = std::abs(amplitude);
        return f;
    }
    if (kind == "sech") {
        f.eval = [amplitude, width](double x) {
            return Complex(amplitude / std::cosh(x / width), 0.0);
        };
        f.decay_hint = std::abs(amplitude);
        return f;
    }
    throw Error("unknown c0 kind '" + kind + "' (use zero, gaussian, sech)");
}

QuantumFunction function_from_json(const Json& j, const ContextPtr& ctx) {
    QuantumFunction qf;
    if (j.contains("c0")) qf.c0 = c0_from_json(j["c0"]);
    if (j.contains("ap")) qf.ap = ap_from_json(j["ap"], ctx);
    return qf;
}

Parametrization parametrization_from_json(const Json& j) {
    std::string kind = j.is_string() ? j.get<std::string>() : field(j, "kind").get<std::string>();
    if (kind == "tan_map") return Parametrization::tan_map();
    if (kind == "tan_map_squared") {
        // tan map precomposed with u -> u^2; a second built-in homeomorphism.
        return Parametrization::custom(
            "tan_map_squared",
            [](double u) { return std::tan(std::numbers::pi * (u * u - 0.5)); },
            [](double x) { return std::sqrt(0.5 + std::atan(x) / std::numbers::pi); },
            [](double u) {
                double t = std::tan(std::numbers::pi * (u * u - 0.5));
                return std::numbers::pi * (1.0 + t * t) * 2.0 * u;
            });
    }
    throw Error("unknown parametrization '" + kind + "' (use tan_map, tan_map_squared)");
}

MeasureDescriptor measure_from_json(const Json& j) {
    MeasureDescriptor mu{parametrization_from_json(field(j, "rho")), number_field(j, "t")};
    if (!(mu.t >= 0.0 && mu.t <= 1.0)) throw Error("measure weight t must lie in [0,1]");
    return mu;
}

QuadratureConfig quad_from_json(const Json& j) {
    QuadratureConfig q;
    if (j.is_null()) return q;
    q.abs_tol = j.value("abs_tol", q.abs_tol);
    q.max_subdivisions = j.value("max_subdivisions", q.max_subdivisions);
    if (!(q.abs_tol > 0.0)) throw Error("abs_tol must be positive");
    if (q.max_subdivisions < 1) throw Error("max_subdivisions must be positive");
    return q;
}

DecompositionSpec spec_from_json(const Json& j) {
    DecompositionSpec spec;
    spec.coarse_count = static_cast<int>(number_field(j, "k"));
    spec.fine_count = static_cast<int>(number_field(j, "k_prime"));
    for (const auto& w : field(j, "words")) {
        EdgeWord word;
        for (const auto& f : w)
            word.factors.push_back({static_cast<int>(number_field(f, "i")),
                                    static_cast<int>(number_field(f, "p"))});
        spec.words.push_back(std::move(word));
    }
    spec.validate_shape();
    return spec;
}

Vec3 vec3_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw Error("vector must be an array of 3 numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Json to_json(const Frequency& f) {
    Json out = Json::array();
    for (const auto& c : f.coords()) out.push_back(format_rational(c));
    return out;
}

Json to_json(const FrequencyTuple& t) {
    Json out = Json::array();
    for (const auto& f : t.entries()) out.push_back(to_json(f));
    return out;
}

Json to_json(const LevelPoint& p) {
    Json out;
    if (const auto* c = std::get_if<CirclePart>(&p)) {
        out["circle"] = c->x;
    } else {
        out["torus"] = std::get<TorusPart>(p).angles;
    }
    return out;
}

Json to_json(const ConsistencyReport& r) {
    Json out;
    out["check"] = r.check;
    out["pair"] = r.pair;
    out["status"] = r.pass ? "pass" : "fail";
    if (r.counterexample) out["counterexample"] = *r.counterexample;
    return out;
}

Json to_json(const SeparationResult& r) {
    Json out;
    switch (r.kind) {
        case SeparationResult::Kind::circle_witness:
            out["kind"] = "circle_witness";
            break;
        case SeparationResult::Kind::separated:
            out["kind"] = "separated";
            break;
        case SeparationResult::Kind::indistinguishable:
            out["kind"] = "indistinguishable_at_available_resolution";
            break;
    }
    if (r.level) out["level"] = to_json(*r.level);
    return out;
}

Json to_json(const CircleLemmaReport& r) {
    Json out;
    out["tau"] = r.tau;
    out["r"] = r.r;
    out["epsilon"] = r.epsilon;
    out["noncommutativity"] = {{"status", r.noncommutative_pass ? "pass" : "fail"},
                               {"commutator_norm", r.commutator_norm},
                               {"witness", {r.witness_c1, r.witness_c2}}};
    out["coset_intersection"] = {{"status", r.intersection_pass ? "pass" : "fail"},
                                 {"points", r.intersection_points}};
    out["alternation"] = {{"status", r.alternation_pass ? "pass" : "fail"},
                          {"worst_error", r.alternation_worst}};
    out["band_injectivity"] = {{"status", r.injectivity_pass ? "pass" : "fail"},
                               {"min_image_distance", r.injectivity_min_distance}};
    out["merging"] = {{"status", r.merging_pass ? "pass" : "fail"},
                      {"n_epsilon", r.n_epsilon},
                      {"band_sup_distance", r.band_sup_distance}};
    out["spacing"] = {{"status", r.spacing_pass ? "pass" : "fail"},
                      {"n0", r.spacing_n0},
                      {"worst_deviation", r.spacing_worst_deviation}};
    out["status"] = r.all_pass() ? "pass" : "fail";
    return out;
}

Json to_json(const MomentPanelReport& r) {
    Json out;
    out["status"] = r.pass ? "pass" : "fail";
    out["samples"] = r.samples;
    out["seed"] = r.seed;
    out["bound"] = r.bound;
    out["spec_disjoint"] = r.spec_disjoint;
    out["worst"] = {{"monomial", r.worst_monomial}, {"deviation", r.worst_abs}};
    Json stats = Json::array();
    for (const auto& s : r.stats)
        stats.push_back({{"monomial", s.monomial},
                         {"mean_re", s.mean_re},
                         {"mean_im", s.mean_im},
                         {"within_bound", s.within_bound}});
    out["stats"] = stats;
    return out;
}

Json to_json(const JonsReport& r) {
    Json out;
    auto cond = [](const JonsConditionResult& c) {
        Json j;
        j["holds"] = c.holds;
        j["worst_value"] = c.worst_value;
        if (c.worst_left >= 0) j["worst_pair"] = {c.worst_left, c.worst_right};
        return j;
    };
    out["condition_i"] = cond(r.condition_i);
    out["condition_ii"] = cond(r.condition_ii);
    out["tolerance"] = r.tolerance;
    out["exact"] = r.exact;
    out["quadrature_clean"] = r.quadrature_clean;
    out["status"] = (r.condition_i.holds && r.condition_ii.holds) ? "pass" : "fail";
    return out;
}

Json complex_to_json(Complex v) { return Json{{"re", v.real()}, {"im", v.imag()}}; }

Json to_json(const Mat2& m) {
    Json out = Json::array();
    for (int r = 0; r < 2; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 2; ++c) row.push_back(complex_to_json(m(r, c)));
        out.push_back(row);
    }
    return out;
}

namespace {

void dump17(const Json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + Json(it.key()).dump() + ": ";
                dump17(it.value(), out, indent, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump17(v, out, indent, depth + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::number_float: {
            double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out += buf;
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump_json_17(const Json& j, int indent) {
    std::string out;
    dump17(j, out, indent, 0);
    out += "\n";
    return out;
}

}  // namespace rbar
