#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qdha/errors.hpp"
#include "qdha/instance.hpp"
#include "qdha/verify.hpp"

using namespace qdha;

namespace {

const std::vector<std::string> kChecks = {"length",   "basis",     "braid",  "filtration", "integral",
                                          "iso",      "frobenius", "kernel", "gamma"};

nlohmann::json describe(const Instance& inst) {
    const auto& W = inst.weyl();
    const auto& R = W.roots();
    const auto& om = inst.omega();
    nlohmann::json j;
    j["name"] = inst.spec().name;
    j["instance"] = inst.digest();
    j["root_system"] = R.label();
    j["rank"] = R.rank();
    j["positive_roots"] = R.num_positive();
    j["finite_weyl_order"] = W.finite().size();
    j["lambda0"] = to_string(om.base());
    nlohmann::json supp = nlohmann::json::array();
    for (const auto& [a, v] : om.support()) supp.push_back({{"root", W.affine().to_string(a)}, {"value", v}});
    j["support"] = supp;
    j["gamma"] = to_string(inst.gamma());
    BOrderFunction Om = integral(om, inst.gamma());
    nlohmann::json orbit = nlohmann::json::array();
    auto weights = e_gamma(Om, inst.gamma());
    for (int i = 0; i < Om.orbit_size(); ++i)
        orbit.push_back({{"ell", to_string(Om.point(i))}, {"section", to_string(weights[i])}, {"Omega", Om.values()[i]}});
    j["orbit"] = orbit;
    ClanDecomposition D = enumerate_clans(om, inst.clan_bound());
    nlohmann::json hyper = nlohmann::json::array();
    for (const auto& a : D.hyperplanes) hyper.push_back(W.affine().to_string(a));
    j["hyperplanes"] = hyper;
    nlohmann::json clans = nlohmann::json::array();
    for (int c = 0; c < static_cast<int>(D.clans.size()); ++c)
        clans.push_back({{"clan", clan_label(W, D, c)},
                         {"generic", D.clans[c].generic},
                         {"representative", W.word_string(W.reduced_word(D.clans[c].representative))},
                         {"sample", to_string(D.clans[c].sample)}});
    j["clans"] = clans;
    return j;
}

std::string describe_text(const nlohmann::json& j) {
    std::ostringstream out;
    out << "instance     " << j["instance"].get<std::string>() << "  " << j["name"].get<std::string>() << "\n";
    out << "root system  " << j["root_system"].get<std::string>() << " (rank " << j["rank"] << ", "
        << j["positive_roots"] << " positive roots, |W| = " << j["finite_weyl_order"] << ")\n";
    out << "lambda0      " << j["lambda0"].get<std::string>() << "\n";
    out << "gamma        " << j["gamma"].get<std::string>() << "\n";
    out << "support\n";
    for (const auto& s : j["support"]) out << "  " << s["root"].get<std::string>() << "  ->  " << s["value"] << "\n";
    out << "orbit (ell, gamma-section, Omega on positive roots)\n";
    for (const auto& o : j["orbit"])
        out << "  " << o["ell"].get<std::string>() << "  " << o["section"].get<std::string>() << "  " << o["Omega"].dump()
            << "\n";
    out << "clans (" << j["clans"].size() << ")\n";
    for (const auto& c : j["clans"])
        out << "  " << c["clan"].get<std::string>() << (c["generic"].get<bool>() ? "  generic    " : "  not generic")
            << "  rep " << c["representative"].get<std::string>() << "  sample " << c["sample"].get<std::string>()
            << "\n";
    return out.str();
}

Report run_check(const Instance& inst, const std::string& check, int ball, int degree, unsigned seed) {
    std::mt19937 rng(seed);
    const auto& om = inst.omega();
    const auto& g = inst.gamma();
    auto pick = [&](int fallback) { return ball >= 0 ? ball : fallback; };
    Report r;
    if (check == "length") r = verify_length(inst.weyl(), pick(8));
    if (check == "basis") r = verify_basis(om, 100, pick(6), rng);
    if (check == "braid") r = verify_braid(om, pick(2));
    if (check == "filtration") r = verify_filtration(om, 200, pick(6), rng);
    if (check == "integral") r = verify_integral(om, g, inst.spec().h ? &*inst.spec().h : nullptr);
    if (check == "iso") r = verify_iso(om, g, degree >= 0 ? degree : 2, pick(3));
    if (check == "frobenius") r = verify_frobenius(om, g, degree >= 0 ? degree : 2, 20, rng);
    if (check == "kernel") r = verify_kernel(om, g, inst.clan_bound(), pick(inst.weyl().rank() == 1 ? 200 : 30));
    if (check == "gamma") r = verify_gamma(om, g);
    r.instance = inst.digest();
    return r;
}

int emit(const std::vector<Report>& reports, bool json) {
    bool pass = true;
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        std::cout << (reports.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    }
    for (const auto& r : reports) {
        if (!json) std::cout << to_text(r);
        pass = pass && r.pass();
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quiver double Hecke algebras: exact verification tool"};
    app.require_subcommand(1);
    std::string path, check;
    int ball = -1, degree = -1;
    unsigned seed = 1;
    bool json = false;

    auto* desc = app.add_subcommand("describe", "Root data, orbit, gamma-section and clan table");
    desc->add_option("--instance", path, "Instance JSON file")->required();
    desc->add_flag("--json", json, "Machine-readable output");

    auto* verify = app.add_subcommand("verify", "Run one verification sweep");
    verify->add_option("--instance", path, "Instance JSON file")->required();
    verify->add_option("--check", check, "Sweep to run")->required()->check(CLI::IsMember(kChecks));
    verify->add_option("--ball", ball, "Size bound (length ball, braid window, word bound or growth window)");
    verify->add_option("--degree", degree, "Polynomial degree bound (iso, frobenius)");
    verify->add_option("--seed", seed, "Seed for random word sampling");
    verify->add_flag("--json", json, "Machine-readable output");

    auto* example = app.add_subcommand("example-a1", "Reproduce the rank one example end to end");
    example->add_flag("--json", json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*example) return emit({verify_example_a1()}, json);
        Instance inst(load_instance(path));
        if (*desc) {
            nlohmann::json j = describe(inst);
            std::cout << (json ? j.dump(2) + "\n" : describe_text(j));
            return 0;
        }
        return emit({run_check(inst, check, ball, degree, seed)}, json);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidParameter& e) {
        std::cerr << "invalid instance: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
