#ifndef LODUAL_VERIFY_HPP
#define LODUAL_VERIFY_HPP

#include "lodual/catalog.hpp"
#include "lodual/functors.hpp"
#include "lodual/resolution.hpp"

#include <string>
#include <vector>

namespace lodual {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> skipped; // untrusted degrees skipped, listed explicitly

    bool all_pass() const;
};

struct VerifyOptions {
    DegreeWindow window{-60, 60};
    int k_max = 8;
    /// Fault injection: flip one sign in a Koszul differential before
    /// checking (the d^2 = 0 / acyclicity checks must then fail).
    bool mutate_koszul_sign = false;
};

/// Drives the identity suite over the given catalog entries: Koszul
/// acyclicity, tower consistency, self-duality, Gamma torsionness, the long
/// exact sequence of the localization triangle, adjunction, round trips,
/// the Adams vanishing line and the collapse oracle.
VerifyReport verify_suite(const std::vector<std::string>& ring_scope, const VerifyOptions& opt);

/// Default scope: every catalog entry of rank <= 2.
std::vector<std::string> default_verify_scope();

} // namespace lodual

#endif
