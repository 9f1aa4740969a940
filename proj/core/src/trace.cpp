#include "lemni/trace.hpp"

namespace lemni {

namespace {

constexpr const char* kTraceVersion = "1";

ObjRef parse_ref(const std::string& name) {
    if (name.empty())
        throw std::runtime_error("trace: empty object id");
    ObjKind kind;
    switch (name[0]) {
        case 'P': kind = ObjKind::point; break;
        case 'L': kind = ObjKind::line; break;
        case 'C': kind = ObjKind::circle; break;
        default: throw std::runtime_error("trace: bad object id '" + name + "'");
    }
    return {kind, static_cast<std::uint32_t>(std::stoul(name.substr(1)))};
}

}  // namespace

std::string obj_name(ObjRef r) {
    const char* prefix = r.kind == ObjKind::point ? "P" : r.kind == ObjKind::line ? "L" : "C";
    return prefix + std::to_string(r.index);
}

nlohmann::json make_trace(const Scene& scene, const std::map<std::string, PointId>& outputs,
                          const std::vector<CertificateEntry>& certificate) {
    PrecisionScope scope(scene.ctx());
    nlohmann::json doc;
    doc["version"] = kTraceVersion;
    doc["precision"] = scene.ctx().digits;

    nlohmann::json steps = nlohmann::json::array();
    for (const Step& step : scene.steps()) {
        nlohmann::json js;
        js["op"] = step.op;
        if (!step.gadget.empty())
            js["gadget"] = step.gadget;
        nlohmann::json in = nlohmann::json::array();
        for (const ObjRef& r : step.inputs)
            in.push_back(obj_name(r));
        js["in"] = in;
        nlohmann::json out = nlohmann::json::array();
        nlohmann::json coords = nlohmann::json::object();
        for (const ObjRef& r : step.outputs) {
            out.push_back(obj_name(r));
            if (r.kind == ObjKind::point) {
                const ScenePoint& p = scene.pt(PointId{r.index});
                // str(0): enough digits for an exact binary round trip
                coords[obj_name(r)] = {p.x.str(0), p.y.str(0)};
            }
        }
        js["out"] = out;
        if (!coords.empty())
            js["coords"] = coords;
        steps.push_back(std::move(js));
    }
    doc["steps"] = std::move(steps);

    nlohmann::json labels = nlohmann::json::object();
    for (std::uint32_t i = 0; i < scene.point_count(); ++i) {
        const ScenePoint& p = scene.pt(PointId{i});
        if (!p.label.empty())
            labels[obj_name({ObjKind::point, i})] = p.label;
    }
    doc["labels"] = std::move(labels);

    nlohmann::json outs = nlohmann::json::object();
    for (const auto& [name, id] : outputs)
        outs[name] = obj_name(ref(id));
    doc["outputs"] = std::move(outs);

    nlohmann::json certs = nlohmann::json::array();
    for (const CertificateEntry& c : certificate)
        certs.push_back({{"name", c.name},
                         {"target", c.target.str(0)},
                         {"achieved", c.achieved.str(0)},
                         {"pass", c.pass}});
    doc["certificates"] = std::move(certs);
    return doc;
}

Scene replay_trace(const nlohmann::json& doc) {
    if (doc.at("version").get<std::string>() != kTraceVersion)
        throw std::runtime_error("trace: unsupported version");
    PrecisionContext ctx(doc.at("precision").get<unsigned>());
    PrecisionScope scope(ctx);
    Scene scene(ctx);

    for (const nlohmann::json& js : doc.at("steps")) {
        std::string op = js.at("op").get<std::string>();
        std::string gadget = js.value("gadget", std::string());
        scene.push_gadget(gadget);
        std::vector<ObjRef> inputs;
        for (const auto& name : js.at("in"))
            inputs.push_back(parse_ref(name.get<std::string>()));

        if (op == "given") {
            std::string id = js.at("out").at(0).get<std::string>();
            const auto& c = js.at("coords").at(id);
            scene.add_given(Real(c.at(0).get<std::string>()), Real(c.at(1).get<std::string>()));
        } else if (op == "line") {
            scene.line_through(PointId{inputs.at(0).index}, PointId{inputs.at(1).index});
        } else if (op == "circle") {
            scene.circle_about(PointId{inputs.at(0).index}, PointId{inputs.at(1).index});
        } else if (op == "intersect") {
            scene.intersect(inputs.at(0), inputs.at(1));
        } else {
            throw std::runtime_error("trace: unknown op '" + op + "'");
        }
        scene.pop_gadget();

        // Recomputed coordinates must reproduce the recorded strings exactly.
        if (js.contains("coords")) {
            for (const auto& [name, c] : js.at("coords").items()) {
                ObjRef r = parse_ref(name);
                if (r.index >= scene.point_count())
                    throw std::runtime_error("trace: replay produced fewer points at " + name);
                const ScenePoint& p = scene.pt(PointId{r.index});
                if (p.x.str(0) != c.at(0).get<std::string>() ||
                    p.y.str(0) != c.at(1).get<std::string>())
                    throw std::runtime_error("trace: replay mismatch at " + name);
            }
        }
    }
    return scene;
}

}  // namespace lemni
