#include "nlbound/json_io.hpp"

#include <cmath>
#include <cstdio>

#include "nlbound/errors.hpp"

namespace nlbound {
namespace {

void dump_into(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
                if (!first) out += ',';
                first = false;
                out += Json(it.key()).dump();
                out += ':';
                dump_into(it.value(), out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                dump_into(j[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                out += "null";
            } else {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.17g", v);
                out += buf;
            }
            break;
        }
        default:
            out += j.dump();
    }
}

const char* method_name(LocalityMethod m) { return m == LocalityMethod::facets ? "facets" : "lp"; }

}  // namespace

std::string canonical_dump(const Json& j) {
    std::string out;
    dump_into(j, out);
    return out;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

Json box_to_json(const BehaviorBox& box) {
    Json p = Json::array();
    for (double v : box.table()) p.push_back(v);
    return Json{{"p", p}};
}

BehaviorBox box_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p")) throw ValidationError("box JSON must be an object with key \"p\"");
    const auto& p = j.at("p");
    if (!p.is_array() || p.size() != 16) throw ValidationError("box \"p\" must be an array of 16 numbers");
    ProbabilityTable t{};
    for (std::size_t i = 0; i < 16; ++i) {
        if (!p[i].is_number()) throw ValidationError("box entry " + std::to_string(i) + " is not a number");
        t[i] = p[i].get<double>();
    }
    return BehaviorBox::from_table(t);
}

WiringChain chain_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("stages") || !j.at("stages").is_array()) {
        throw ValidationError("chain JSON must be an object with array \"stages\"");
    }
    std::vector<BehaviorBox> stages;
    for (const auto& s : j.at("stages")) stages.push_back(box_from_json(s));
    return WiringChain(std::move(stages));
}

Json chsh_report_json(const BehaviorBox& box) {
    const auto e = correlators(box);
    const auto m = chsh_max(box);
    const auto ns = check_no_signaling(box);
    return Json{
        {"correlators", e.e},
        {"chsh_canonical", chsh_canonical(box)},
        {"chsh_max", {{"value", m.value}, {"facets", m.facets}}},
        {"no_signaling",
         {{"ok", ns.no_signaling}, {"alice_residuals", ns.alice_residuals}, {"bob_residuals", ns.bob_residuals}}},
    };
}

Json locality_report_json(const LocalityReport& r) {
    Json j{{"is_local", r.is_local}, {"method", method_name(r.method)}, {"max_facet_value", r.max_facet_value}};
    j["violated_facet"] = r.violated_facet ? Json(*r.violated_facet) : Json(nullptr);
    j["lp_weights"] = r.lp_weights ? Json(*r.lp_weights) : Json(nullptr);
    if (r.method == LocalityMethod::lp) j["lp_residual"] = r.lp_residual;
    return j;
}

Json audit_json(const AbsorptionReport& r) {
    Json arr = Json::array();
    for (const auto& e : r.results) {
        arr.push_back(
            Json{{"strategy", {e.f_alice, e.f_bob}}, {"chsh_max", e.chsh_max}, {"counterexample", e.counterexample}});
    }
    return arr;
}

Json combine_json(const CombineResult& r) {
    return Json{{"Z", r.Z}, {"abs_error_estimate", r.abs_error_estimate}, {"n_evals", r.n_evals}};
}

Json solve_json(const SolveResult& r) {
    return Json{{"x_max", r.x_max},
                {"residual", r.residual},
                {"iterations", r.iterations},
                {"bracket", {r.bracket.first, r.bracket.second}},
                {"gap_to_tsirelson", r.gap_to_tsirelson}};
}

Json label_to_json(const ModelLabel& label) {
    if (label.is_bottom()) return Json{{"bottom", true}};
    return Json{{"X", label.chsh_limit()}};
}

ModelLabel label_from_json(const Json& j) {
    if (j.is_object() && j.contains("bottom") && j.at("bottom") == true) return ModelLabel::bottom();
    if (j.is_object() && j.contains("X") && j.at("X").is_number()) return ModelLabel::of(j.at("X").get<double>());
    throw ValidationError("label JSON must be {\"X\": number} or {\"bottom\": true}");
}

}  // namespace nlbound
