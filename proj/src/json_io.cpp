#include "bellrand/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace bellrand {

using nlohmann::json;

json behavior_to_json(const Behavior& b) {
    json entries = json::array();
    const Mask na = b.outcome_count();
    for (Mask x = 0; x < na; ++x)
        for (Mask a = 0; a < na; ++a) {
            const Rational& p = b.at(x, a);
            if (p == 0) continue;
            entries.push_back({{"x", mask_to_bits(x, b.parties())},
                               {"a", mask_to_bits(a, b.parties())},
                               {"p", to_fraction_string(p)}});
        }
    return json{{"n", b.parties()}, {"entries", std::move(entries)}};
}

Behavior behavior_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    Behavior b((PartyCount(n)));
    for (const auto& e : j.at("entries")) {
        const Mask x = bits_to_mask(e.at("x").get<std::string>(), n);
        const Mask a = bits_to_mask(e.at("a").get<std::string>(), n);
        b.at(x, a) = rational_from_string(e.at("p").get<std::string>());
    }
    return b;
}

json decomposition_to_json(const Decomposition& d, int n) {
    json comps = json::array();
    for (const auto& comp : d.components) {
        json weights = json::object();
        for (const auto& [x, w] : comp.weights)
            weights[mask_to_bits(x, n)] = to_fraction_string(w);
        comps.push_back({{"label", comp.label},
                         {"weights", std::move(weights)},
                         {"behavior", behavior_to_json(comp.behavior)}});
    }
    return json{{"n", n}, {"components", std::move(comps)}};
}

Decomposition decomposition_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    Decomposition d;
    for (const auto& cj : j.at("components")) {
        Decomposition::Component comp{cj.value("label", ""), {},
                                      behavior_from_json(cj.at("behavior"))};
        for (const auto& [bits, w] : cj.at("weights").items())
            comp.weights[bits_to_mask(bits, n)] = rational_from_string(w.get<std::string>());
        d.components.push_back(std::move(comp));
    }
    return d;
}

json certificate_to_json(const Certificate& cert, int n, Mask input,
                         const std::string& witness_file) {
    json j{{"n", n},
           {"input", mask_to_bits(input, n)},
           {"status", cert.status == CertStatus::Optimal ? "optimal" : "infeasible"},
           {"value", to_fraction_string(cert.value)},
           {"mode", cert.mode == CertMode::Exact ? "exact" : "float"}};
    if (cert.mode == CertMode::Float) j["tolerance"] = cert.tolerance;
    if (cert.derived_from) j["derived_by_relabeling_from"] = mask_to_bits(*cert.derived_from, n);
    if (!witness_file.empty()) j["witness_file"] = witness_file;
    return j;
}

json expansion_to_json(const MerminExpansion& e) {
    json j = json::object();
    for (const auto& [x, c] : e.coeffs) j[mask_to_bits(x, e.n)] = to_fraction_string(c);
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    return json::parse(in);
}

std::string to_decimal_string(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(12) << r.get_d();
    return os.str();
}

}  // namespace bellrand
