#include "braid3/json_io.hpp"

namespace braid3 {

nlohmann::json mpz_json(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

nlohmann::json rho_json(const RhoInvariant& r) {
    return {{"rho1", r.rho1.str()}, {"rho2", r.rho2.str()}, {"eps", mpz_json(r.eps)}};
}

nlohmann::json class_json(const ClassInvariant& c) {
    if (std::holds_alternative<Elliptic2>(c)) return {{"type", "elliptic2"}};
    if (const auto* e3 = std::get_if<Elliptic3>(&c))
        return {{"type", "elliptic3"}, {"sign", e3->sign}};
    if (const auto* pa = std::get_if<ParabolicClass>(&c))
        return {{"type", "parabolic"}, {"s", mpz_json(pa->s)}};
    const auto& hy = std::get<HyperbolicClass>(c);
    nlohmann::json period = nlohmann::json::array();
    for (const mpz_class& e : hy.period.entries()) period.push_back(mpz_json(e));
    return {{"type", "hyperbolic"}, {"trace", mpz_json(hy.trace)}, {"period", std::move(period)}};
}

nlohmann::json mu_json(const MuInvariant& m) {
    nlohmann::json out = class_json(m.cls);
    out["eps"] = mpz_json(m.eps);
    return out;
}

}  // namespace braid3
