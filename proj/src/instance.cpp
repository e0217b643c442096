#include "qdha/instance.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "qdha/errors.hpp"

namespace qdha {

namespace {

RVec parse_vector(const nlohmann::json& j, const char* field) {
    if (!j.is_array()) throw UsageError(std::string(field) + " must be an array");
    RVec out;
    for (const auto& x : j) {
        if (x.is_string())
            out.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            out.push_back(Rational(x.get<long>()));
        else
            throw UsageError(std::string(field) + " entries must be rational strings or integers");
    }
    return out;
}

nlohmann::json vector_json(const RVec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

}  // namespace

InstanceSpec parse_instance(const nlohmann::json& j) {
    if (!j.is_object()) throw UsageError("instance must be a JSON object");
    InstanceSpec s;
    try {
        s.name = j.value("name", std::string());
        s.root_system = j.at("root_system").get<std::string>();
        s.lambda0 = parse_vector(j.at("lambda0"), "lambda0");
        if (j.contains("h")) s.h = parse_vector(j.at("h"), "h");
        if (j.contains("gamma")) s.gamma = parse_vector(j.at("gamma"), "gamma");
        s.clan_bound = j.value("clan_bound", -1);
        if (j.contains("support")) {
            if (s.h) throw UsageError("give either h or support, not both");
            FiniteRootSystem R = FiniteRootSystem::build(s.root_system);
            for (const auto& e : j.at("support")) {
                IVec coords = e.at("root").get<IVec>();
                int level = e.at("level").get<int>();
                int value = e.at("value").get<int>();
                int b = R.find(coords);
                if (b < 0) throw UsageError("support entry is not a root");
                s.support[{b, level}] = value;
            }
        } else if (!s.h) {
            throw UsageError("instance needs h or support");
        }
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed instance: ") + e.what());
    }
    return s;
}

InstanceSpec load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    return parse_instance(j);
}

nlohmann::json to_json(const InstanceSpec& s) {
    nlohmann::json j;
    j["name"] = s.name;
    j["root_system"] = s.root_system;
    j["lambda0"] = vector_json(s.lambda0);
    if (s.h) j["h"] = vector_json(*s.h);
    if (s.gamma) j["gamma"] = vector_json(*s.gamma);
    if (s.clan_bound >= 0) j["clan_bound"] = s.clan_bound;
    if (!s.h) {
        FiniteRootSystem R = FiniteRootSystem::build(s.root_system);
        nlohmann::json supp = nlohmann::json::array();
        for (const auto& [a, v] : s.support) supp.push_back({{"root", R.coords(a.root)}, {"level", a.level}, {"value", v}});
        j["support"] = supp;
    }
    return j;
}

std::string digest(const InstanceSpec& spec) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : to_json(spec).dump()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Instance::Instance(InstanceSpec spec) : spec_(std::move(spec)) {
    W_ = std::make_unique<AffineWeyl>(FiniteRootSystem::build(spec_.root_system));
    if (static_cast<int>(spec_.lambda0.size()) != W_->rank()) throw UsageError("lambda0 has the wrong dimension");
    for (auto& x : spec_.lambda0) x.canonicalize();
    if (spec_.h) {
        if (static_cast<int>(spec_.h->size()) != num_norm_classes(W_->roots()))
            throw UsageError("h needs one value per root length");
        omega_ = std::make_unique<OrderFunction>(from_ddaha_H(*W_, *spec_.h, spec_.lambda0));
    } else {
        omega_ = std::make_unique<OrderFunction>(*W_, spec_.lambda0, spec_.support);
    }
    GammaChoice gc = choose_gamma(*omega_);
    gamma_ = spec_.gamma ? *spec_.gamma : gc.gamma;
    if (static_cast<int>(gamma_.size()) != W_->rank()) throw UsageError("gamma has the wrong dimension");
    if (!W_->roots().coroot_lattice().contains(gamma_) || !gamma_admissible(W_->roots(), gamma_, gc.margin))
        throw InvalidParameter("gamma is not an admissible coroot lattice element");
    clan_bound_ = spec_.clan_bound >= 0 ? spec_.clan_bound : (W_->rank() == 1 ? 4 : 12);
    digest_ = qdha::digest(spec_);
}

}  // namespace qdha
