#pragma once

#include <memory>
#include <optional>
#include <string>

#include "json.hpp"
#include "qdha/orderfun.hpp"

namespace qdha {

// An order function read from JSON:
//   {"name": ..., "root_system": "A2", "lambda0": ["1/3", "1/3"],
//    "h": ["1/3"]                                  (dDAHA parameters, one per root length), or
//    "support": [{"root": [1, 0], "level": 0, "value": 1}, ...]   (root in simple-root coordinates),
//    "gamma": ["-2", "-2"], "clan_bound": 8}       (optional)
struct InstanceSpec {
    std::string name;
    std::string root_system;
    RVec lambda0;
    std::optional<RVec> h;
    std::map<AffineRoot, int> support;
    std::optional<RVec> gamma;
    int clan_bound = -1;
};

// Throws UsageError on malformed input and InvalidParameter on an invalid order function.
InstanceSpec parse_instance(const nlohmann::json& j);
InstanceSpec load_instance(const std::string& path);
nlohmann::json to_json(const InstanceSpec& spec);
// FNV-1a of the canonical JSON dump, as 16 hex digits.
std::string digest(const InstanceSpec& spec);

class Instance {
public:
    explicit Instance(InstanceSpec spec);
    Instance(const Instance&) = delete;
    Instance& operator=(const Instance&) = delete;

    const InstanceSpec& spec() const { return spec_; }
    const AffineWeyl& weyl() const { return *W_; }
    const OrderFunction& omega() const { return *omega_; }
    const RVec& gamma() const { return gamma_; }
    int clan_bound() const { return clan_bound_; }
    const std::string& digest() const { return digest_; }

private:
    InstanceSpec spec_;
    std::unique_ptr<AffineWeyl> W_;
    std::unique_ptr<OrderFunction> omega_;
    RVec gamma_;
    int clan_bound_ = 8;
    std::string digest_;
};

}  // namespace qdha
