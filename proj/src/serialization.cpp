#include "mpsp/serialization.hpp"

#include <stdexcept>

namespace mpsp {

Json to_json(Complex z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("complex value must be an object {\"re\", \"im\"}");
    const Complex z(j.at("re").get<double>(), j.at("im").get<double>());
    if (!finite(z)) throw std::invalid_argument("complex value must be finite");
    return z;
}

Json to_json(const ClosedDisk& disk) {
    return Json{{"center", to_json(disk.center)}, {"radius", disk.radius}};
}

namespace {

Json mobius_to_json(const MobiusMap& m) {
    return Json{{"a", to_json(m.a)}, {"b", to_json(m.b)}, {"c", to_json(m.c)}, {"d", to_json(m.d)}};
}

MobiusMap mobius_from_json(const Json& j) {
    return {complex_from_json(j.at("a")), complex_from_json(j.at("b")),
            complex_from_json(j.at("c")), complex_from_json(j.at("d"))};
}

Json node_to_json(const fn::Expr& e) {
    using namespace fn;
    switch (e.kind()) {
    case Kind::Constant:
        return Json{{"kind", "const"}, {"value", to_json(static_cast<const Constant&>(e).value)}};
    case Kind::Polynomial: {
        Json coeffs = Json::array();
        for (Complex c : static_cast<const Polynomial&>(e).coeffs) coeffs.push_back(to_json(c));
        return Json{{"kind", "poly"}, {"coeffs", coeffs}};
    }
    case Kind::Blaschke: {
        const auto& b = static_cast<const Blaschke&>(e);
        Json zeros = Json::array();
        for (Complex z : b.zeros) zeros.push_back(to_json(z));
        return Json{{"kind", "blaschke"}, {"rotation", b.rotation}, {"zeros", zeros}};
    }
    case Kind::PostMobius: {
        const auto& p = static_cast<const PostMobius&>(e);
        return Json{{"kind", "post_mobius"},
                    {"map", mobius_to_json(p.map)},
                    {"inner", node_to_json(*p.inner)}};
    }
    case Kind::PreAutomorphism: {
        const auto& p = static_cast<const PreAutomorphism&>(e);
        return Json{{"kind", "pre_auto"},
                    {"map", mobius_to_json(p.map)},
                    {"inner", node_to_json(*p.inner)}};
    }
    case Kind::Product: {
        const auto& p = static_cast<const Product&>(e);
        return Json{{"kind", "product"},
                    {"left", node_to_json(*p.left)},
                    {"right", node_to_json(*p.right)}};
    }
    case Kind::Delta: {
        const auto& d = static_cast<const Delta&>(e);
        return Json{{"kind", "delta"}, {"node", to_json(d.node)}, {"inner", node_to_json(*d.inner)}};
    }
    case Kind::SchurSynth: {
        const auto& s = static_cast<const SchurSynth&>(e);
        return Json{{"kind", "schur"},
                    {"node", to_json(s.node)},
                    {"gamma", to_json(s.gamma)},
                    {"inner", node_to_json(*s.inner)}};
    }
    }
    throw std::logic_error("node_to_json: unreachable");
}

AnalyticFn node_from_json(const Json& j, int samples, double radius) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("function node must be an object with a \"kind\" tag");
    const std::string kind = j.at("kind").get<std::string>();

    if (kind == "const") return AnalyticFn::constant(complex_from_json(j.at("value")));
    if (kind == "poly") {
        std::vector<Complex> coeffs;
        for (const Json& c : j.at("coeffs")) coeffs.push_back(complex_from_json(c));
        const AnalyticFn p = AnalyticFn::polynomial(std::move(coeffs));
        if (!validate_bounded(p, samples, radius).validated)
            throw NotBounded("polynomial node failed the boundedness check");
        return p;
    }
    if (kind == "blaschke") {
        std::vector<Complex> zeros;
        for (const Json& z : j.at("zeros")) zeros.push_back(complex_from_json(z));
        return AnalyticFn::blaschke(j.at("rotation").get<double>(), zeros);
    }
    if (kind == "post_mobius")
        return AnalyticFn::post_mobius(mobius_from_json(j.at("map")),
                                       node_from_json(j.at("inner"), samples, radius));
    if (kind == "pre_auto")
        return AnalyticFn::pre_automorphism(mobius_from_json(j.at("map")),
                                            node_from_json(j.at("inner"), samples, radius));
    if (kind == "product")
        return AnalyticFn::product(node_from_json(j.at("left"), samples, radius),
                                   node_from_json(j.at("right"), samples, radius));
    if (kind == "delta")
        return AnalyticFn::delta_quotient(node_from_json(j.at("inner"), samples, radius),
                                          DiskPoint::interior(complex_from_json(j.at("node"))));
    if (kind == "schur")
        return AnalyticFn::schur_synth(DiskPoint::interior(complex_from_json(j.at("node"))),
                                       complex_from_json(j.at("gamma")),
                                       node_from_json(j.at("inner"), samples, radius));
    throw std::invalid_argument("unknown function node kind \"" + kind + "\"");
}

} // namespace

Json to_json(const AnalyticFn& f) {
    return node_to_json(f.root());
}

AnalyticFn function_from_json(const Json& j, int validate_samples, double validate_radius) {
    return node_from_json(j, validate_samples, validate_radius);
}

Json to_json(const InterpolationData& data) {
    Json points = Json::array();
    for (const auto& p : data.points)
        points.push_back(Json{{"z", to_json(p.z.value())}, {"w", to_json(p.w.value())}});
    return Json{{"points", points}};
}

InterpolationData dataset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points") || !j.at("points").is_array())
        throw std::invalid_argument("dataset must be {\"points\": [...]}");
    std::vector<std::pair<Complex, Complex>> pairs;
    for (const Json& p : j.at("points"))
        pairs.push_back({complex_from_json(p.at("z")), complex_from_json(p.at("w"))});
    return InterpolationData::make(pairs);
}

namespace {

const char* status_name(SchurSequence::Status s) {
    switch (s) {
    case SchurSequence::Status::AllInterior: return "all_interior";
    case SchurSequence::Status::Unimodular: return "unimodular";
    case SchurSequence::Status::Truncated: return "truncated";
    }
    return "unknown";
}

} // namespace

Json to_json(const SchurSequence& seq) {
    Json gammas = Json::array();
    for (Complex g : seq.gammas) gammas.push_back(to_json(g));
    return Json{{"gammas", gammas},
                {"status", status_name(seq.status)},
                {"terminal_index", seq.terminal_index},
                {"raw_last_abs", seq.raw_last_abs}};
}

Json to_json(const FeasibilityVerdict& verdict) {
    return Json{{"status", to_string(verdict.status)},
                {"min_pivot", verdict.min_eigen_or_pivot},
                {"schur_parameters", to_json(verdict.gammas)}};
}

} // namespace mpsp
