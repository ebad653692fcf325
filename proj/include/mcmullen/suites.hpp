#pragma once

// Certificate grids for the a-plane, c-plane and small-a theorem groups.
// Shared by the CLI `verify` command and the acceptance checks.

#include <vector>

#include "mcmullen/certify.hpp"

namespace mcm {

struct SuiteOptions {
    /// Window-boundary parameters at which polynomial-like structure is certified.
    int boundary_params = 16;
    int winding_samples = 4096;
    int boundary_samples = 4096;
    int targets = 256;
    int threads = 0;
};

/// certify_polynomial_like at parameters spread along the window boundary,
/// folded into one report (margin = minimum, failing children kept).
CertificateReport certify_polynomial_like_on_boundary(const ParamWindow& window, const SuiteOptions& opts);

/// Window check: polynomial-like on the boundary plus the winding loop.
CertificateReport certify_window(const ParamWindow& window, const SuiteOptions& opts);

/// W_{n,c}, Standard regime, k = 0.
CertificateReport certify_aplane_config(int n, double c, const SuiteOptions& opts = {});
/// W_{n,a,k}, Standard regime.
CertificateReport certify_cplane_config(int n, double a, int k, const SuiteOptions& opts = {});
/// The small-a window, Tight regime.
CertificateReport certify_tight_config(int n, double a, const SuiteOptions& opts = {});

/// A 3x3 parameter grid inside a certified escape regime for degree n.
std::vector<MapParams> escape_regime_grid(CertifiedRegime regime, int n);

/// Escape certificates over escape_regime_grid, each at its default radius.
CertificateReport certify_escape_regime(CertifiedRegime regime, int n, int shell_samples, int threads = 0);

/// Folds reports into a parent; Inconclusive outranks Pass, Fail outranks both.
CertificateReport aggregate(std::string name, std::string subject, std::vector<CertificateReport> children);

}  // namespace mcm
