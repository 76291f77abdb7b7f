#include "skewpair/params.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace skewpair {

namespace {

constexpr double kGateTol = 1e-12;

void check_gates(const CollisionParams& p) {
    if (!(p.g >= 0.0) || !(p.h >= 0.0))
        throw WellPosednessError(WellPosednessError::Kind::GateViolation,
                                 "drift magnitudes g, h must be nonnegative");
    if (!(p.rho >= 0.0) || !(p.sigma >= 0.0))
        throw WellPosednessError(WellPosednessError::Kind::GateViolation,
                                 "dispersions rho, sigma must be nonnegative");
    if (!(p.g + p.h > 0.0))
        throw WellPosednessError(WellPosednessError::Kind::GateViolation,
                                 "g + h must be strictly positive");
    const double norm = p.rho * p.rho + p.sigma * p.sigma;
    if (std::abs(norm - 1.0) > kGateTol)
        throw WellPosednessError(WellPosednessError::Kind::GateViolation,
                                 "rho^2 + sigma^2 must equal 1 (not auto-renormalized)");
}

}  // namespace

const char* to_string(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::PerfectReflectionFirst: return "perfect_reflection_first";
        case RegimeTag::PerfectReflectionSecond: return "perfect_reflection_second";
        case RegimeTag::FrictionlessBoth: return "frictionless_both";
        case RegimeTag::FrictionlessFirstOnly: return "frictionless_first_only";
        case RegimeTag::FrictionlessSecondOnly: return "frictionless_second_only";
        case RegimeTag::LaggardUnfelt: return "laggard_unfelt";
        case RegimeTag::LeaderUnfelt: return "leader_unfelt";
        case RegimeTag::SymmetricSkew: return "symmetric_skew";
        case RegimeTag::Generic: return "generic";
    }
    return "generic";
}

DerivedParams derive(const CollisionParams& raw) {
    check_gates(raw);
    DerivedParams d{};
    d.zeta = 1.0 + 0.5 * (raw.zeta1 - raw.zeta2);
    d.eta = 1.0 - 0.5 * (raw.eta1 - raw.eta2);
    d.zeta_bar = 0.5 * (raw.zeta1 + raw.zeta2);
    d.eta_bar = 0.5 * (raw.eta1 + raw.eta2);
    const double denom = d.eta + d.zeta;
    if (denom == 0.0) {
        // eta = -zeta != 0: no solution; eta = zeta = 0: uniqueness in
        // distribution fails. Either way the constructor refuses.
        throw WellPosednessError(WellPosednessError::Kind::EtaPlusZetaZero,
                                 d.eta != 0.0 ? "eta + zeta = 0 with eta != 0: system has no solution"
                                              : "eta = zeta = 0: solution law is not unique");
    }
    d.alpha = d.eta / denom;
    if (d.alpha < -kGateTol || d.alpha > 1.0 + kGateTol)
        throw WellPosednessError(WellPosednessError::Kind::AlphaOutOfRange,
                                 "skewness alpha = eta/(eta+zeta) outside [0,1]: no solution");
    d.alpha = std::min(1.0, std::max(0.0, d.alpha));
    d.beta = (d.eta * d.zeta_bar + d.zeta * d.eta_bar) / denom;
    d.lambda = raw.g + raw.h;
    d.nu = raw.g - raw.h;
    d.gamma = raw.rho * raw.rho - raw.sigma * raw.sigma;
    d.delta = 2.0 * raw.rho * raw.sigma;
    d.mu = raw.g * raw.rho * raw.rho - raw.h * raw.sigma * raw.sigma;
    d.kappa1 = d.alpha - 0.5 * d.beta;
    d.kappa2 = 1.0 - d.alpha - 0.5 * d.beta;
    return d;
}

Regime classify(const DerivedParams& d, const CollisionParams& raw) {
    auto near = [](double a, double b) { return std::abs(a - b) <= kRegimeTol; };
    Regime r;
    if (near(d.alpha, 1.0)) r.notes.push_back(RegimeTag::PerfectReflectionFirst);
    if (near(d.alpha, 0.0)) r.notes.push_back(RegimeTag::PerfectReflectionSecond);
    const bool fric1 = near((1.0 - raw.zeta1) * d.eta + (1.0 - raw.eta1) * d.zeta, 0.0);
    const bool fric2 = near((1.0 - raw.zeta2) * d.eta + (1.0 - raw.eta2) * d.zeta, 0.0);
    const bool fric_both = near(raw.eta1 + raw.zeta1, 2.0) && near(raw.eta2 + raw.zeta2, 2.0);
    if (fric_both) r.notes.push_back(RegimeTag::FrictionlessBoth);
    if (fric1 && !fric_both) r.notes.push_back(RegimeTag::FrictionlessFirstOnly);
    if (fric2 && !fric_both) r.notes.push_back(RegimeTag::FrictionlessSecondOnly);
    if (near(d.beta, 0.0)) r.notes.push_back(RegimeTag::LaggardUnfelt);
    if (near(d.beta, 2.0)) r.notes.push_back(RegimeTag::LeaderUnfelt);
    if (near(d.alpha, 0.5)) r.notes.push_back(RegimeTag::SymmetricSkew);
    r.tag = r.notes.empty() ? RegimeTag::Generic : r.notes.front();
    r.priority_applied = r.notes.size() > 1;
    return r;
}

CollisionParams parse_collision_config(const std::string& text, CollisionParams base) {
    static const std::map<std::string, double CollisionParams::*> kFields = {
        {"zeta1", &CollisionParams::zeta1}, {"zeta2", &CollisionParams::zeta2},
        {"eta1", &CollisionParams::eta1},   {"eta2", &CollisionParams::eta2},
        {"g", &CollisionParams::g},         {"h", &CollisionParams::h},
        {"rho", &CollisionParams::rho},     {"sigma", &CollisionParams::sigma},
        {"x1", &CollisionParams::x1},       {"x2", &CollisionParams::x2},
    };
    CollisionParams p = base;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = kFields.find(key);
        if (it == kFields.end())
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        try {
            std::size_t pos = 0;
            p.*(it->second) = std::stod(value, &pos);
            if (pos != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(lineno) + ": bad number '" + value + "'");
        }
    }
    return p;
}

CollisionParams load_collision_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open parameter file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_collision_config(buf.str());
}

}  // namespace skewpair
